// triple-symbol: command-line front end for the tsym library.
//
// Negative primes are taken literally (--p1 -17). Values that start with a
// minus sign and are not plain integers, such as a triple, need the '=' form:
// --triple=-17,-557,-773. A bare `--` ends option parsing.

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tsym/tsym.hpp"

namespace {

using tsym::BigInt;

struct CommonOptions {
  std::string format = "text";
  int jobs = 1;
  std::int64_t bound = 0;  // 0 = default / environment
  int retry_limit = 4;
};

void add_common(CLI::App* sub, CommonOptions& opts, bool with_bound = true) {
  sub->add_option("--format", opts.format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "text"}))
      ->capture_default_str();
  sub->add_option("--jobs", opts.jobs, "Worker threads")->check(CLI::PositiveNumber)->capture_default_str();
  if (with_bound) {
    sub->add_option("--bound", opts.bound, "Search bound for the norm equation (default 100 or TRIPLE_SYMBOL_BOUND)")
        ->check(CLI::PositiveNumber);
  }
  sub->add_option("--retry-limit", opts.retry_limit, "Extra solutions tried when theta is not a unit at p3")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
}

tsym::RunConfig make_config(const CommonOptions& opts) {
  tsym::RunConfig cfg = tsym::RunConfig::from_environment();
  if (opts.bound > 0) cfg.search_bound = opts.bound;
  cfg.retry_limit = opts.retry_limit;
  cfg.jobs = opts.jobs;
  cfg.format = tsym::parse_format(opts.format);
  cfg.validate();
  return cfg;
}

void report_failures(const std::vector<const tsym::RowOutcome*>& outcomes) {
  for (const auto* o : outcomes) {
    if (o->row.ok()) continue;
    std::cerr << "error: [" << o->row.p1 << ", " << o->row.p2 << ", " << o->row.p3 << "] "
              << (o->message.empty() ? o->row.status : o->message) << '\n';
  }
}

int exit_code(const std::vector<const tsym::RowOutcome*>& outcomes) {
  std::vector<const tsym::ReportRow*> rows;
  for (const auto* o : outcomes) rows.push_back(&o->row);
  return tsym::exit_code_for(rows);
}

std::array<BigInt, 3> parse_triple(const std::string& text) {
  std::array<BigInt, 3> out;
  std::stringstream ss(text);
  std::string item;
  std::size_t n = 0;
  while (std::getline(ss, item, ',')) {
    if (n == 3) throw tsym::Error(tsym::ErrorCode::InvalidArgument, "--triple takes exactly three values");
    out[n++] = tsym::parse_bigint(item);
  }
  if (n != 3) throw tsym::Error(tsym::ErrorCode::InvalidArgument, "--triple takes exactly three values");
  return out;
}

int run_symbol(int ell, const std::string& p1, const std::string& p2, const std::string& p3,
               const CommonOptions& opts) {
  const auto cfg = make_config(opts);
  const auto out = tsym::cmd_symbol(ell, tsym::parse_bigint(p1), tsym::parse_bigint(p2), tsym::parse_bigint(p3), cfg);
  std::cout << tsym::render_rows({out.row}, cfg.format);
  report_failures({&out});
  return exit_code({&out});
}

int run_table1(const CommonOptions& opts) {
  const auto cfg = make_config(opts);
  const auto rows = tsym::cmd_table1(cfg);
  std::cout << tsym::render_table1(rows, cfg.format);
  std::vector<const tsym::RowOutcome*> all;
  for (const auto& r : rows) {
    all.push_back(&r.forward);
    all.push_back(&r.backward);
  }
  report_failures(all);
  return exit_code(all);
}

int run_table2(const CommonOptions& opts) {
  const auto cfg = make_config(opts);
  const auto rows = tsym::cmd_table2(cfg);
  std::cout << tsym::render_table2(rows, cfg.format);
  std::vector<const tsym::RowOutcome*> all;
  for (const auto& r : rows) all.push_back(&r.outcome);
  report_failures(all);
  return exit_code(all);
}

int run_primes(std::int64_t bound, const std::string& format) {
  const auto primes = tsym::cmd_primes(bound);
  switch (tsym::parse_format(format)) {
    case tsym::OutputFormat::Json: {
      nlohmann::ordered_json arr = nlohmann::ordered_json::array();
      for (const auto& np : primes) arr.push_back({{"p", np.p.get_si()}, {"q", np.q.get_si()}});
      std::cout << arr.dump() << '\n';
      break;
    }
    case tsym::OutputFormat::Csv:
      std::cout << "p,q\n";
      for (const auto& np : primes) std::cout << np.p << ',' << np.q << '\n';
      break;
    case tsym::OutputFormat::Text:
      for (const auto& np : primes) std::cout << np.p << '\n';
      break;
  }
  return 0;
}

int run_verify(int ell, std::int64_t prime_bound, std::int64_t search_bound, std::size_t max_triples,
               const CommonOptions& opts) {
  CommonOptions o = opts;
  o.bound = search_bound;
  const auto cfg = make_config(o);
  const auto rep = tsym::cmd_verify(ell, prime_bound, max_triples, cfg);

  switch (cfg.format) {
    case tsym::OutputFormat::Json: {
      nlohmann::ordered_json j;
      j["ell"] = rep.ell;
      j["pairs_testable"] = rep.pairs_testable;
      j["pairs_untestable"] = rep.pairs_untestable;
      j["triples"] = rep.entries.size();
      j["symbol_only"] = rep.count(tsym::Coverage::SymbolOnly);
      j["untestable_triples"] = rep.count(tsym::Coverage::Untestable);
      j["failures"] = rep.failures();
      j["entries"] = nlohmann::ordered_json::array();
      for (const auto& e : rep.entries) {
        nlohmann::ordered_json je;
        je["forward"] = tsym::to_json(e.forward.row);
        je["backward"] = tsym::to_json(e.backward.row);
        je["coverage"] = tsym::coverage_name(e.coverage);
        je["reciprocity"] = e.reciprocity;
        je["functional_equation"] = e.functional_equation;
        je["backward_route"] = e.backward_route;
        j["entries"].push_back(je);
      }
      std::cout << j.dump(2) << '\n';
      break;
    }
    case tsym::OutputFormat::Csv:
      std::cout << "p1,p2,p3,c_fwd,c_bwd,li2_z,li2_one_minus_z,reciprocity,functional_equation,backward_route,coverage,"
                   "status\n";
      for (const auto& e : rep.entries) {
        const auto& f = e.forward.row;
        const auto& b = e.backward.row;
        std::cout << f.p1 << ',' << f.p2 << ',' << f.p3 << ',' << tsym::detail::optional_str(e.c_forward) << ','
                  << tsym::detail::optional_str(e.c_backward) << ',' << tsym::detail::optional_str(f.li2_z) << ','
                  << tsym::detail::optional_str(f.li2_one_minus_z) << ',' << e.reciprocity << ','
                  << e.functional_equation << ',' << e.backward_route << ',' << tsym::coverage_name(e.coverage) << ','
                  << (f.ok() ? b.status : f.status) << '\n';
      }
      break;
    case tsym::OutputFormat::Text:
      for (const auto& e : rep.entries) {
        if (e.passed()) continue;
        std::cout << "FAIL " << tsym::to_text(e.forward.row) << " | " << tsym::to_text(e.backward.row) << '\n';
      }
      std::cout << "ell=" << rep.ell << " pairs=" << rep.pairs_testable << " untestable_pairs=" << rep.pairs_untestable
                << " triples=" << rep.entries.size() << " symbol_only=" << rep.count(tsym::Coverage::SymbolOnly)
                << " untestable_triples=" << rep.count(tsym::Coverage::Untestable) << " failures=" << rep.failures()
                << '\n';
      break;
  }

  std::vector<const tsym::RowOutcome*> failed;
  for (const auto& e : rep.entries) {
    if (e.passed()) continue;
    failed.push_back(&e.forward);
    failed.push_back(&e.backward);
  }
  report_failures(failed);
  const int code = exit_code(failed);
  return code != 0 ? code : (rep.failures() == 0 ? 0 : 1);
}

int run_conjecture(int ell, const std::string& triple, const CommonOptions& opts) {
  const auto cfg = make_config(opts);
  const auto rep = tsym::cmd_conjecture(ell, parse_triple(triple), cfg);

  auto perm_str = [](const tsym::Permutation& p) {
    return std::to_string(p.index[0] + 1) + std::to_string(p.index[1] + 1) + std::to_string(p.index[2] + 1);
  };
  switch (cfg.format) {
    case tsym::OutputFormat::Json: {
      nlohmann::ordered_json j;
      j["ell"] = rep.ell;
      j["verdict"] = rep.verdict;
      j["partial"] = rep.partial;
      j["entries"] = nlohmann::ordered_json::array();
      for (const auto& e : rep.entries) {
        nlohmann::ordered_json je;
        je["permutation"] = perm_str(e.perm);
        je["sign"] = e.perm.sign;
        je["row"] = tsym::to_json(e.outcome.row);
        j["entries"].push_back(je);
      }
      std::cout << j.dump(2) << '\n';
      break;
    }
    case tsym::OutputFormat::Csv:
      std::cout << "permutation,sign,p1,p2,p3,symbol_exponent,symbol_rendered,status\n";
      for (const auto& e : rep.entries) {
        const auto& r = e.outcome.row;
        std::cout << perm_str(e.perm) << ',' << e.perm.sign << ',' << r.p1 << ',' << r.p2 << ',' << r.p3 << ','
                  << tsym::detail::optional_str(r.symbol_exponent) << ','
                  << tsym::detail::optional_str(r.symbol_rendered) << ',' << r.status << '\n';
      }
      break;
    case tsym::OutputFormat::Text:
      for (const auto& e : rep.entries) {
        std::cout << perm_str(e.perm) << (e.perm.sign > 0 ? " (+) " : " (-) ") << tsym::to_text(e.outcome.row)
                  << '\n';
      }
      std::cout << "verdict: " << (rep.verdict ? "true" : "false") << (rep.partial ? " (partial)" : "") << '\n';
      break;
  }

  std::vector<const tsym::RowOutcome*> all;
  for (const auto& e : rep.entries) all.push_back(&e.outcome);
  report_failures(all);
  const int code = exit_code(all);
  return code != 0 ? code : (rep.verdict ? 0 : 1);
}

int run_solve(int ell, const std::string& p1s, const std::string& p2s, std::size_t limit, const CommonOptions& opts) {
  const auto cfg = make_config(opts);
  const BigInt p1 = tsym::parse_bigint(p1s);
  const BigInt p2 = tsym::parse_bigint(p2s);
  const auto sols = tsym::cmd_solve(ell, p1, p2, cfg, limit);
  const auto pair = tsym::check_pair(ell, p1, p2);

  auto z_of = [&](const tsym::NormEquationSolution& s) -> std::optional<std::string> {
    try {
      return tsym::fraction_string(tsym::z_of_solution(s, pair.p1, pair.p2).z);
    } catch (const tsym::Error&) {
      return std::nullopt;
    }
  };
  switch (cfg.format) {
    case tsym::OutputFormat::Json: {
      nlohmann::ordered_json arr = nlohmann::ordered_json::array();
      for (const auto& s : sols) {
        nlohmann::ordered_json j;
        j["x"] = tsym::detail::bigint_to_json(s.x);
        j["y"] = tsym::detail::bigint_to_json(s.y);
        j["w"] = tsym::detail::bigint_to_json(s.w);
        j["z"] = tsym::detail::optional_to_json(z_of(s));
        arr.push_back(j);
      }
      std::cout << arr.dump() << '\n';
      break;
    }
    case tsym::OutputFormat::Csv:
      std::cout << "x,y,w,z\n";
      for (const auto& s : sols) std::cout << s.x << ',' << s.y << ',' << s.w << ',' << z_of(s).value_or("") << '\n';
      break;
    case tsym::OutputFormat::Text:
      for (const auto& s : sols) std::cout << s << "  z=" << z_of(s).value_or("-") << '\n';
      break;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Triple power residue symbols, Milnor invariants and mod-l polylogarithm values"};
  app.require_subcommand(1);

  CommonOptions opts;
  int ell = 3;
  std::string p1, p2, p3, triple;

  auto* symbol = app.add_subcommand("symbol", "Evaluate one ordered triple");
  symbol->add_option("--ell", ell, "2 or 3")->check(CLI::IsMember({2, 3}))->capture_default_str();
  std::vector<std::string> positional;
  symbol->add_option("--p1", p1);
  symbol->add_option("--p2", p2);
  symbol->add_option("--p3", p3);
  symbol->add_option("primes", positional, "p1 p2 p3 as positionals, e.g. after --")->expected(3);
  add_common(symbol, opts);

  auto* table1 = app.add_subcommand("table1", "Symbols for (p1, p2) = (-17, -593) over the prime list");
  add_common(table1, opts);

  auto* table2 = app.add_subcommand("table2", "All orderings of {-17,-53,-431}, {-17,-557,-773}, {-17,-593,-773}");
  add_common(table2, opts);

  std::int64_t prime_bound = 1000;
  std::string primes_format = "text";
  auto* primes = app.add_subcommand("primes", "Normalized inert primes p = 1 mod 3 sqrt(-3) up to a bound");
  primes->add_option("--bound", prime_bound)->check(CLI::PositiveNumber)->capture_default_str();
  primes->add_option("--format", primes_format)->check(CLI::IsMember({"json", "csv", "text"}))->capture_default_str();

  std::int64_t search_bound = 0;
  std::size_t max_triples = 0;
  auto* verify = app.add_subcommand("verify", "Reciprocity and functional equation over triples from the prime list");
  verify->add_option("--ell", ell, "2 or 3")->check(CLI::IsMember({2, 3}))->capture_default_str();
  verify->add_option("--bound", prime_bound, "Largest |p| drawn into triples")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  verify->add_option("--search-bound", search_bound, "Search bound for the norm equation")
      ->check(CLI::PositiveNumber);
  verify->add_option("--max-triples", max_triples, "Stop after this many triples (0 = all)")->capture_default_str();
  add_common(verify, opts, false);

  auto* conjecture = app.add_subcommand("conjecture", "Symbols under all six orderings of a triple");
  conjecture->add_option("--ell", ell, "2 or 3")->check(CLI::IsMember({2, 3}))->capture_default_str();
  conjecture->add_option("--triple", triple, "a,b,c (use --triple=-17,-557,-773)")->required();
  add_common(conjecture, opts);

  std::size_t limit = 1;
  auto* solve = app.add_subcommand("solve", "Solutions of the norm equation for (p1, p2)");
  solve->add_option("--ell", ell, "2 or 3")->check(CLI::IsMember({2, 3}))->capture_default_str();
  solve->add_option("--p1", p1);
  solve->add_option("--p2", p2);
  solve->add_option("primes", positional, "p1 p2 as positionals, e.g. after --")->expected(2);
  solve->add_option("--limit", limit, "Number of solutions in scan order")->capture_default_str();
  add_common(solve, opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  std::vector<std::string*> slots;
  if (*symbol) slots = {&p1, &p2, &p3};
  if (*solve) slots = {&p1, &p2};
  if (!positional.empty()) {
    for (std::size_t i = 0; i < slots.size(); ++i) *slots[i] = positional[i];
  }
  for (const auto* slot : slots) {
    if (slot->empty()) {
      std::cerr << "error: InvalidArgument: " << (slots.size() == 3 ? "--p1, --p2 and --p3" : "--p1 and --p2")
                << " are required\n";
      return 1;
    }
  }

  try {
    if (*symbol) return run_symbol(ell, p1, p2, p3, opts);
    if (*table1) return run_table1(opts);
    if (*table2) return run_table2(opts);
    if (*primes) return run_primes(prime_bound, primes_format);
    if (*verify) return run_verify(ell, prime_bound, search_bound, max_triples, opts);
    if (*conjecture) return run_conjecture(ell, triple, opts);
    if (*solve) return run_solve(ell, p1, p2, limit, opts);
  } catch (const tsym::IneligibleTriple& e) {
    std::cerr << "error: IneligibleTriple: " << e.what() << '\n';
    return 1;
  } catch (const tsym::Error& e) {
    std::cerr << "error: " << e.name() << ": " << e.what() << '\n';
    return e.code() == tsym::ErrorCode::InternalInvariantViolation ? 2 : 1;
  }
  return 1;
}
