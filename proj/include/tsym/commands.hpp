#pragma once

// Drivers behind the triple-symbol command line: single triples, the two
// reference tables, batch reciprocity checks and the permutation experiment.

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <map>
#include <mutex>
#include <thread>
#include <tuple>
#include <type_traits>

#include "tsym/eisenstein.hpp"
#include "tsym/eligibility.hpp"
#include "tsym/norm_equations.hpp"
#include "tsym/polylog.hpp"
#include "tsym/report.hpp"
#include "tsym/symbols.hpp"

namespace tsym {

struct RunConfig {
  std::int64_t search_bound = 100;
  int retry_limit = 4;
  OutputFormat format = OutputFormat::Text;
  int jobs = 1;
  /// Run the literal norm test next to the split-component evaluation (l = 3).
  bool cross_check = true;

  SearchConfig search() const { return {search_bound, false}; }

  void validate() const {
    if (search_bound <= 0) throw Error(ErrorCode::InvalidArgument, "search bound must be positive");
    if (retry_limit < 0) throw Error(ErrorCode::InvalidArgument, "retry limit must be non-negative");
    if (jobs <= 0) throw Error(ErrorCode::InvalidArgument, "jobs must be positive");
  }

  /// Defaults, with TRIPLE_SYMBOL_BOUND overriding the search bound.
  static RunConfig from_environment() {
    RunConfig cfg;
    if (const char* env = std::getenv("TRIPLE_SYMBOL_BOUND"); env && *env) {
      const BigInt b = parse_bigint(env);
      if (b <= 0 || !b.fits_slong_p()) throw Error(ErrorCode::InvalidArgument, "TRIPLE_SYMBOL_BOUND out of range");
      cfg.search_bound = b.get_si();
    }
    return cfg;
  }
};

/// Evaluates fn(0..n-1) on up to `jobs` threads; results keep index order.
/// The first exception by index is rethrown after all workers finish.
template <class F>
auto parallel_map(std::size_t n, int jobs, F&& fn) {
  using R = std::invoke_result_t<F&, std::size_t>;
  std::vector<std::optional<R>> slots(n);
  std::vector<std::exception_ptr> errors(n);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        slots[i].emplace(fn(i));
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(std::max(jobs, 1)), n);
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t k = 0; k < workers; ++k) pool.emplace_back(worker);
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  std::vector<R> out;
  out.reserve(n);
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

/// Memoized first solutions per ordered pair, shared across worker threads.
class SolutionCache {
 public:
  explicit SolutionCache(SearchConfig cfg) : cfg_(cfg) {}

  const SearchConfig& config() const { return cfg_; }

  /// First solution in scan order; rethrows the solver's error for the pair.
  NormEquationSolution first(int ell, const BigInt& p1, const BigInt& p2) {
    const Key key{ell, p1, p2};
    {
      std::lock_guard lock(mu_);
      if (auto it = map_.find(key); it != map_.end()) return unpack(it->second);
    }
    Entry entry;
    try {
      entry.solution = solve(ell, p1, p2, cfg_);
    } catch (const Error& e) {
      entry.code = e.code();
      entry.message = e.what();
    }
    std::lock_guard lock(mu_);
    return unpack(map_.emplace(key, std::move(entry)).first->second);
  }

  bool solvable(int ell, const BigInt& p1, const BigInt& p2) {
    try {
      first(ell, p1, p2);
      return true;
    } catch (const Error& e) {
      if (is_solver_failure(e.code())) return false;
      throw;
    }
  }

  std::vector<NormEquationSolution> candidates(int ell, const BigInt& p1, const BigInt& p2, std::size_t count) {
    if (count <= 1) return {first(ell, p1, p2)};
    return enumerate_distinct_solutions(ell, p1, p2, cfg_, count);
  }

 private:
  using Key = std::tuple<int, BigInt, BigInt>;
  struct Entry {
    std::optional<NormEquationSolution> solution;
    ErrorCode code = ErrorCode::InternalInvariantViolation;
    std::string message;
  };

  static NormEquationSolution unpack(const Entry& e) {
    if (e.solution) return *e.solution;
    throw Error(e.code, e.message);
  }

  SearchConfig cfg_;
  std::mutex mu_;
  std::map<Key, Entry> map_;
};

/// A row plus the human-readable detail of its failure, if any.
struct RowOutcome {
  ReportRow row;
  std::string message;
};

namespace detail {

/// Fills every value column from one solution. Cross-route identities that
/// must hold are checked here: the symbol against chi_2 (with rho_x for l = 2)
/// and li2(z) + li2(1 - z) = 0.
inline void fill_row(ReportRow& row, const TripleContext& ctx, const NormEquationSolution& sol, bool cross_check) {
  const SymbolValue sym = triple_symbol(ctx, theta_of_solution(sol, ctx.p1), SymbolOptions{cross_check});
  const RationalParameter param = z_of_solution(sol, ctx.p1, ctx.p2);
  const PolylogValue pv = li2_mod_l(ctx, sol);
  const int li2_rev = li2_one_minus_z(ctx, sol);
  const int l = ctx.ell;

  const int from_polylog = l == 2 ? (pv.chi2 + *pv.rho_x) % 2 : pv.chi2;
  if (from_polylog != sym.c) {
    throw Error(ErrorCode::InternalInvariantViolation, "symbol and chi_2 routes disagree");
  }
  if (!functional_equation_holds(l, pv.li2, li2_rev, functional_equation_rhs(ctx))) {
    throw Error(ErrorCode::InternalInvariantViolation, "li2(z) + li2(1 - z) off the functional equation");
  }

  row.solution = std::array<BigInt, 3>{sol.x, sol.y, sol.w};
  row.z = fraction_string(param.z);
  row.symbol_exponent = sym.c;
  row.symbol_rendered = sym.rendered();
  row.mu = milnor_invariant(sym);
  row.li2_z = balanced(pv.li2, l);
  row.li2_one_minus_z = balanced(li2_rev, l);
}

}  // namespace detail

/// Full pipeline for one ordered triple: eligibility, solve, symbol, polylog.
/// `preferred` solutions are tried before the solver's own.
inline RowOutcome build_row(int ell, const BigInt& p1, const BigInt& p2, const BigInt& p3, SolutionCache& cache,
                            const RunConfig& cfg, const std::vector<NormEquationSolution>& preferred = {}) {
  RowOutcome out;
  out.row.ell = ell;
  out.row.p1 = p1;
  out.row.p2 = p2;
  out.row.p3 = p3;
  try {
    const TripleContext ctx = check_triple(ell, p1, p2, p3);
    out.row.p1 = ctx.p1;
    out.row.p2 = ctx.p2;
    out.row.p3 = ctx.p3;
    auto attempt = [&](const NormEquationSolution& sol) {
      try {
        detail::fill_row(out.row, ctx, sol, cfg.cross_check);
        return true;
      } catch (const Error& e) {
        if (e.code() != ErrorCode::ThetaNotUnitAtP3) throw;
        return false;
      }
    };
    for (const auto& sol : preferred) {
      if (verify_solution(sol, ctx.p1, ctx.p2) && attempt(sol)) return out;
    }
    if (attempt(cache.first(ell, ctx.p1, ctx.p2))) return out;
    const auto sols = cache.candidates(ell, ctx.p1, ctx.p2, static_cast<std::size_t>(cfg.retry_limit) + 1);
    for (std::size_t i = 1; i < sols.size(); ++i) {
      if (attempt(sols[i])) return out;
    }
    throw Error(ErrorCode::ThetaNotUnitAtP3, "no candidate solution gives a unit at " + ctx.p3.get_str());
  } catch (const Error& e) {
    ReportRow failed;
    failed.ell = ell;
    failed.p1 = out.row.p1;
    failed.p2 = out.row.p2;
    failed.p3 = out.row.p3;
    failed.status = std::string(e.name());
    out.row = std::move(failed);
    out.message = e.what();
  }
  return out;
}

/// 0 when every row is ok, 2 if any row hit an internal invariant, else 1.
inline int exit_code_for(const std::vector<const ReportRow*>& rows) {
  int code = 0;
  for (const ReportRow* r : rows) {
    if (r->status == "InternalInvariantViolation") return 2;
    if (!r->ok()) code = 1;
  }
  return code;
}

inline RowOutcome cmd_symbol(int ell, const BigInt& p1, const BigInt& p2, const BigInt& p3, const RunConfig& cfg) {
  cfg.validate();
  SolutionCache cache(cfg.search());
  return build_row(ell, p1, p2, p3, cache, cfg);
}

// ---------------------------------------------------------------------------
// Table 1: (p1, p2) = (-17, -593), p3 over the list minus the pair.

struct Table1Row {
  BigInt p3;
  RowOutcome forward;   // [p1, p2, p3]
  RowOutcome backward;  // [p2, p1, p3]
};

inline std::vector<BigInt> table1_p3_values() {
  std::vector<BigInt> out;
  for (const auto& np : enumerate_prime_list(1000)) {
    if (np.p != -17 && np.p != -593) out.push_back(np.p);
  }
  return out;
}

inline std::vector<Table1Row> cmd_table1(const RunConfig& cfg) {
  cfg.validate();
  SolutionCache cache(cfg.search());
  const BigInt p1 = -17, p2 = -593;
  const auto p3s = table1_p3_values();
  return parallel_map(p3s.size(), cfg.jobs, [&](std::size_t i) {
    return Table1Row{p3s[i], build_row(3, p1, p2, p3s[i], cache, cfg), build_row(3, p2, p1, p3s[i], cache, cfg)};
  });
}

inline const char* table1_csv_header() { return "p3,p1p2p3,p2p1p3,li2_z,li2_one_minus_z"; }

inline std::string table1_csv_line(const Table1Row& r) {
  std::ostringstream os;
  os << r.p3 << ',' << detail::optional_str(r.forward.row.symbol_rendered) << ','
     << detail::optional_str(r.backward.row.symbol_rendered) << ',' << detail::optional_str(r.forward.row.li2_z)
     << ',' << detail::optional_str(r.forward.row.li2_one_minus_z);
  return os.str();
}

inline std::string render_table1(const std::vector<Table1Row>& rows, OutputFormat fmt) {
  std::ostringstream os;
  switch (fmt) {
    case OutputFormat::Csv:
      os << table1_csv_header() << '\n';
      for (const auto& r : rows) os << table1_csv_line(r) << '\n';
      break;
    case OutputFormat::Json: {
      nlohmann::ordered_json arr = nlohmann::ordered_json::array();
      for (const auto& r : rows) {
        nlohmann::ordered_json j;
        j["p3"] = detail::bigint_to_json(r.p3);
        j["forward"] = to_json(r.forward.row);
        j["backward"] = to_json(r.backward.row);
        arr.push_back(j);
      }
      os << arr.dump(2) << '\n';
      break;
    }
    case OutputFormat::Text:
      os << "p3      [p1,p2,p3]  [p2,p1,p3]  li2(z)  li2(1-z)\n";
      for (const auto& r : rows) {
        char line[128];
        std::snprintf(line, sizeof line, "%-7s %-11s %-11s %-7s %s", r.p3.get_str().c_str(),
                      detail::optional_str(r.forward.row.symbol_rendered).c_str(),
                      detail::optional_str(r.backward.row.symbol_rendered).c_str(),
                      detail::optional_str(r.forward.row.li2_z).c_str(),
                      detail::optional_str(r.forward.row.li2_one_minus_z).c_str());
        os << line;
        if (!r.forward.row.ok()) os << "  forward: " << r.forward.row.status;
        if (!r.backward.row.ok()) os << "  backward: " << r.backward.row.status;
        os << '\n';
      }
      break;
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Table 2: all orderings of three triples, with reference alpha = x + y cbrt(p1).

struct Table2Entry {
  long p1, p2, p3;
  long ref_x, ref_y;
};

inline const std::vector<Table2Entry>& table2_entries() {
  static const std::vector<Table2Entry> entries = {
      {-17, -53, -431, 8, 3},      {-53, -17, -431, 8, 1},     {-17, -431, -53, 31, 15},
      {-431, -53, -17, 10, 3},     {-53, -431, -17, 10, -1},   {-431, -17, -53, 31, -4},
      {-17, -557, -773, -42, -16}, {-557, -17, -773, -42, -2}, {-17, -773, -557, -23, 8},
      {-773, -557, -17, -6, -1},   {-557, -773, -17, -6, 1},   {-773, -17, -557, -23, -3},
      {-17, -593, -773, 9, 2},     {-593, -17, -773, 9, 1},    {-17, -773, -593, -23, 8},
      {-773, -593, -17, -55, -6},  {-593, -773, -17, -55, 1},  {-773, -17, -593, -23, -3},
  };
  return entries;
}

/// (x, y, w) when x + y cbrt(p1) has norm p2 w^3 with w integral, else nothing.
inline std::optional<NormEquationSolution> complete_l3_solution(const BigInt& x, const BigInt& y, const BigInt& p1,
                                                                const BigInt& p2) {
  const BigInt n = x * x * x + p1 * y * y * y;
  if (!divisible(n, p2)) return std::nullopt;
  auto w = exact_cbrt(BigInt(n / p2));
  if (!w) return std::nullopt;
  NormEquationSolution sol{3, x, y, *w};
  if (!verify_solution(sol, p1, p2)) return std::nullopt;
  return sol;
}

struct Table2Row {
  Table2Entry entry;
  RowOutcome outcome;
  bool reference_used = false;  // the row was computed from the reference alpha
};

inline std::vector<Table2Row> cmd_table2(const RunConfig& cfg) {
  cfg.validate();
  SolutionCache cache(cfg.search());
  const auto& entries = table2_entries();
  return parallel_map(entries.size(), cfg.jobs, [&](std::size_t i) {
    const Table2Entry& s = entries[i];
    std::vector<NormEquationSolution> preferred;
    const bool in_bound = std::abs(s.ref_x) <= cfg.search_bound && std::abs(s.ref_y) <= cfg.search_bound;
    if (auto ref = complete_l3_solution(s.ref_x, s.ref_y, s.p1, s.p2); ref && in_bound) preferred.push_back(*ref);
    Table2Row row{s, build_row(3, s.p1, s.p2, s.p3, cache, cfg, preferred), false};
    if (!preferred.empty() && row.outcome.row.solution) {
      row.reference_used = (*row.outcome.row.solution)[0] == s.ref_x && (*row.outcome.row.solution)[1] == s.ref_y;
    }
    return row;
  });
}

inline const char* table2_csv_header() { return "p1,p2,x,y,z,p3,symbol,li2_z"; }

inline std::string table2_csv_line(const Table2Row& r) {
  const ReportRow& row = r.outcome.row;
  std::ostringstream os;
  os << row.p1 << ',' << row.p2 << ',';
  if (row.solution) {
    os << (*row.solution)[0] << ',' << (*row.solution)[1];
  } else {
    os << ',';
  }
  os << ',' << detail::optional_str(row.z) << ',' << row.p3 << ',' << detail::optional_str(row.symbol_rendered)
     << ',' << detail::optional_str(row.li2_z);
  return os.str();
}

inline std::string render_table2(const std::vector<Table2Row>& rows, OutputFormat fmt) {
  std::ostringstream os;
  switch (fmt) {
    case OutputFormat::Csv:
      os << table2_csv_header() << '\n';
      for (const auto& r : rows) os << table2_csv_line(r) << '\n';
      break;
    case OutputFormat::Json: {
      nlohmann::ordered_json arr = nlohmann::ordered_json::array();
      for (const auto& r : rows) {
        auto j = to_json(r.outcome.row);
        j["reference_alpha"] = {r.entry.ref_x, r.entry.ref_y};
        j["reference_used"] = r.reference_used;
        arr.push_back(j);
      }
      os << arr.dump(2) << '\n';
      break;
    }
    case OutputFormat::Text:
      for (const auto& r : rows) {
        os << to_text(r.outcome.row);
        if (!r.reference_used) os << "  (reference alpha " << r.entry.ref_x << ", " << r.entry.ref_y << " not used)";
        os << '\n';
      }
      break;
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Prime listings

/// l = 3: normalized inert primes with |p| <= bound. l = 2: primes = 1 mod 4.
inline std::vector<BigInt> candidate_primes(int ell, const BigInt& bound) {
  detail::require_ell(ell);
  std::vector<BigInt> out;
  if (ell == 3) {
    for (const auto& np : enumerate_prime_list(bound)) out.push_back(np.p);
  } else {
    for (BigInt p = 5; p <= bound; p += 4) {
      if (is_prime(p)) out.push_back(p);
    }
  }
  return out;
}

inline std::vector<NormalizedPrimeL3> cmd_primes(const BigInt& bound) {
  if (bound <= 0) throw Error(ErrorCode::InvalidArgument, "bound must be positive");
  return enumerate_prime_list(bound);
}

// ---------------------------------------------------------------------------
// Batch verification over triples from the prime list.

enum class Coverage {
  Full,        // both rows evaluated: symbol and polylog routes
  SymbolOnly,  // z is not a unit at p3 for every candidate; symbols alone
  Untestable,  // no candidate within bound gives a unit theta in some order
};

inline std::string_view coverage_name(Coverage c) {
  switch (c) {
    case Coverage::Full: return "full";
    case Coverage::SymbolOnly: return "symbol_only";
    case Coverage::Untestable: return "untestable";
  }
  return "unknown";
}

struct VerifyEntry {
  RowOutcome forward;
  RowOutcome backward;
  Coverage coverage = Coverage::Full;
  std::optional<int> c_forward, c_backward;
  bool reciprocity = false;          // c_fwd + c_bwd = 0
  bool functional_equation = false;  // li2(z) + li2(1 - z) = (N(p3)^2 - 1)/24
  bool backward_route = false;       // l = 3: c_bwd = -li2(1 - z); l = 2: trivially true

  bool passed() const {
    switch (coverage) {
      case Coverage::Full:
        return forward.row.ok() && backward.row.ok() && reciprocity && functional_equation && backward_route;
      case Coverage::SymbolOnly: return reciprocity;
      case Coverage::Untestable: return true;
    }
    return false;
  }
};

struct VerifyReport {
  int ell = 0;
  std::size_t pairs_testable = 0;
  std::size_t pairs_untestable = 0;
  std::vector<VerifyEntry> entries;

  std::size_t failures() const {
    return static_cast<std::size_t>(std::count_if(entries.begin(), entries.end(),
                                                  [](const VerifyEntry& e) { return !e.passed(); }));
  }
  std::size_t count(Coverage c) const {
    return static_cast<std::size_t>(std::count_if(entries.begin(), entries.end(),
                                                  [c](const VerifyEntry& e) { return e.coverage == c; }));
  }
};

/// Unordered pairs {a, b} from the candidate primes (both orders solvable
/// within the search bound), each with every eligible third prime.
/// max_triples = 0 means no cap.
inline VerifyReport cmd_verify(int ell, const BigInt& prime_bound, std::size_t max_triples, const RunConfig& cfg) {
  cfg.validate();
  const auto primes = candidate_primes(ell, prime_bound);
  SolutionCache cache(cfg.search());
  VerifyReport rep;
  rep.ell = ell;

  struct Job {
    BigInt p1, p2, p3;
  };
  std::vector<Job> jobs;
  bool full = false;
  for (std::size_t i = 0; i < primes.size() && !full; ++i) {
    for (std::size_t j = i + 1; j < primes.size() && !full; ++j) {
      const BigInt& a = primes[i];
      const BigInt& b = primes[j];
      try {
        check_pair(ell, a, b);
      } catch (const IneligibleTriple&) {
        continue;
      }
      if (!cache.solvable(ell, a, b) || !cache.solvable(ell, b, a)) {
        ++rep.pairs_untestable;
        continue;
      }
      ++rep.pairs_testable;
      for (const BigInt& c : primes) {
        if (c == a || c == b) continue;
        try {
          check_triple(ell, a, b, c);
        } catch (const IneligibleTriple&) {
          continue;
        }
        jobs.push_back({a, b, c});
        if (max_triples != 0 && jobs.size() >= max_triples) {
          full = true;
          break;
        }
      }
    }
  }

  rep.entries = parallel_map(jobs.size(), cfg.jobs, [&](std::size_t k) {
    const Job& t = jobs[k];
    VerifyEntry e;
    e.forward = build_row(ell, t.p1, t.p2, t.p3, cache, cfg);
    e.backward = build_row(ell, t.p2, t.p1, t.p3, cache, cfg);
    const ReportRow& f = e.forward.row;
    const ReportRow& b = e.backward.row;
    if (f.ok() && b.ok()) {
      e.c_forward = f.symbol_exponent;
      e.c_backward = b.symbol_exponent;
      e.reciprocity = (*f.symbol_exponent + *b.symbol_exponent) % ell == 0;
      e.functional_equation = functional_equation_holds(ell, *f.li2_z, *f.li2_one_minus_z, functional_equation_rhs(ell, t.p3));
      e.backward_route = ell == 2 || ((*b.symbol_exponent + *f.li2_one_minus_z) % 3 + 3) % 3 == 0;
      return e;
    }
    const auto not_unit = [](const ReportRow& r) { return r.ok() || r.status == error_name(ErrorCode::ThetaNotUnitAtP3); };
    if (!not_unit(f) || !not_unit(b)) return e;
    try {
      const SymbolOptions opts{cfg.cross_check};
      const auto ef = evaluate_symbol(check_triple(ell, t.p1, t.p2, t.p3), cfg.search(), cfg.retry_limit, opts);
      const auto eb = evaluate_symbol(check_triple(ell, t.p2, t.p1, t.p3), cfg.search(), cfg.retry_limit, opts);
      e.coverage = Coverage::SymbolOnly;
      e.c_forward = ef.value.c;
      e.c_backward = eb.value.c;
      e.reciprocity = (ef.value.c + eb.value.c) % ell == 0;
    } catch (const Error& err) {
      if (err.code() != ErrorCode::ThetaNotUnitAtP3) throw;
      e.coverage = Coverage::Untestable;
    }
    return e;
  });
  return rep;
}

// ---------------------------------------------------------------------------
// Permutation experiment

struct ConjectureEntry {
  Permutation perm;
  RowOutcome outcome;
};

struct ConjectureReport {
  int ell = 0;
  std::vector<ConjectureEntry> entries;  // identity first
  bool partial = false;
  /// c_rho = sgn(rho) c_id mod l over every evaluated ordering.
  bool verdict = false;
};

inline ConjectureReport cmd_conjecture(int ell, const std::array<BigInt, 3>& triple, const RunConfig& cfg) {
  cfg.validate();
  const TripleContext base = check_triple(ell, triple[0], triple[1], triple[2]);
  const std::array<BigInt, 3> primes = {base.p1, base.p2, base.p3};
  SolutionCache cache(cfg.search());
  ConjectureReport rep;
  rep.ell = ell;
  auto outcomes = parallel_map(kPermutations.size(), cfg.jobs, [&](std::size_t k) {
    const auto& idx = kPermutations[k].index;
    return build_row(ell, primes[static_cast<std::size_t>(idx[0])], primes[static_cast<std::size_t>(idx[1])],
                     primes[static_cast<std::size_t>(idx[2])], cache, cfg);
  });
  for (std::size_t k = 0; k < outcomes.size(); ++k) {
    if (!outcomes[k].row.ok()) rep.partial = true;
    rep.entries.push_back({kPermutations[k], std::move(outcomes[k])});
  }
  const ReportRow& id = rep.entries.front().outcome.row;
  rep.verdict = id.ok();
  if (rep.verdict) {
    for (const auto& e : rep.entries) {
      if (!e.outcome.row.ok()) continue;
      const int expected = ((e.perm.sign * *id.symbol_exponent) % ell + ell) % ell;
      if (*e.outcome.row.symbol_exponent != expected) rep.verdict = false;
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------

inline std::vector<NormEquationSolution> cmd_solve(int ell, const BigInt& p1, const BigInt& p2, const RunConfig& cfg,
                                                   std::size_t limit) {
  cfg.validate();
  if (limit <= 1) return {solve(ell, p1, p2, cfg.search())};
  auto sols = enumerate_solutions(ell, p1, p2, cfg.search(), limit);
  if (sols.empty()) solve(ell, p1, p2, cfg.search());  // raises the solver's error
  return sols;
}

}  // namespace tsym
