#pragma once

// Triple power residue symbols [p1, p2, p3]_l for l = 2 (Redei) and l = 3,
// evaluated as Frobenius actions in residue rings at p3.

#include <array>
#include <optional>
#include <string>
#include <utility>

#include "tsym/eligibility.hpp"
#include "tsym/norm_equations.hpp"
#include "tsym/residue.hpp"

namespace tsym {

/// zeta_l^c, with c in Z/l.
struct SymbolValue {
  int ell = 0;
  int c = 0;

  /// "+1"/"-1" for l = 2; "1", "z3", "z3^-1" for l = 3.
  std::string rendered() const {
    if (ell == 2) return c == 0 ? "+1" : "-1";
    static constexpr std::array<const char*, 3> names = {"1", "z3", "z3^-1"};
    return names[static_cast<std::size_t>(c)];
  }

  friend bool operator==(const SymbolValue&, const SymbolValue&) = default;
};

/// Symbolic theta: x + y*sqrt(p1) for l = 2, prod_i (x + zeta^i y cbrt(p1))^i for l = 3.
struct ThetaData {
  int ell = 0;
  BigInt p1, x, y;
};

inline ThetaData theta_of_solution(const NormEquationSolution& sol, const BigInt& p1) {
  detail::require_ell(sol.ell);
  if (sol.y == 0) throw Error(ErrorCode::DegenerateTheta, "y = 0");
  return {sol.ell, p1, sol.x, sol.y};
}

namespace detail {

inline void require_context(const TripleContext& ctx, const ThetaData& theta, int ell) {
  if (ctx.ell != ell || theta.ell != ell) {
    throw Error(ErrorCode::InvalidArgument, "symbol evaluated with the wrong l");
  }
  if (theta.p1 != ctx.p1) throw Error(ErrorCode::InvalidArgument, "theta built for a different p1");
}

}  // namespace detail

// ---------------------------------------------------------------------------
// l = 2

struct RedeiTrace {
  std::pair<BigInt, BigInt> roots;           // both square roots s of p1 mod p3
  std::array<int, 2> legendre_values{};      // (x + s y / p3) for each root
};

inline RedeiTrace redei_trace(const TripleContext& ctx, const ThetaData& theta) {
  detail::require_context(ctx, theta, 2);
  RedeiTrace tr;
  tr.roots = sqrt_mod(ctx.p1, ctx.p3);
  const std::array<BigInt, 2> roots = {tr.roots.first, tr.roots.second};
  for (std::size_t i = 0; i < 2; ++i) {
    tr.legendre_values[i] = legendre(theta.x + roots[i] * theta.y, ctx.p3);
    if (tr.legendre_values[i] == 0) {
      throw Error(ErrorCode::ThetaNotUnitAtP3, "x + s*y = 0 mod " + ctx.p3.get_str());
    }
  }
  return tr;
}

/// Quadratic character of theta's image in F_{p3}; both embeddings of
/// sqrt(p1) must agree.
inline SymbolValue redei_symbol(const TripleContext& ctx, const ThetaData& theta) {
  const RedeiTrace tr = redei_trace(ctx, theta);
  if (tr.legendre_values[0] != tr.legendre_values[1]) {
    throw Error(ErrorCode::InternalInvariantViolation, "square-root choice changed the Redei symbol");
  }
  return {2, tr.legendre_values[0] == 1 ? 0 : 1};
}

// ---------------------------------------------------------------------------
// l = 3

/// theta = (x + w y t)(x + w^2 y t)^2 in F_{q^2}[t]/(t^3 - p1).
inline CubicAlgebraElem theta_in_algebra(const ThetaData& theta, const BigInt& q) {
  const auto x = CubicAlgebraElem::constant(FpOmegaElem(theta.x, 0, q), theta.p1);
  const auto t = CubicAlgebraElem::t(theta.p1, q);
  const FpOmegaElem y(theta.y, 0, q);
  const auto yw = CubicAlgebraElem::constant(y * FpOmegaElem::omega(q), theta.p1);
  const auto yw2 = CubicAlgebraElem::constant(y * FpOmegaElem::omega_squared(q), theta.p1);
  const auto a1 = x + yw * t;
  const auto a2 = x + yw2 * t;
  return a1 * a2 * a2;
}

struct CubicSymbolTrace {
  /// kummer_exponent of theta^((q^2-1)/3) in each split component.
  std::array<int, 3> component_exponents{};
  /// Literal norm test: N(theta^((q^2-1)/3) - zeta^c) = 0 mod q for c = 0, 1, 2,
  /// with zeta read in the same orientation as kummer_exponent.
  std::array<bool, 3> norm_test{};

  bool components_agree() const {
    return component_exponents[0] == component_exponents[1] && component_exponents[1] == component_exponents[2];
  }
  int passing_count() const { return int(norm_test[0]) + int(norm_test[1]) + int(norm_test[2]); }
  bool exactly_one_c() const {
    return passing_count() == 1 && components_agree() && norm_test[static_cast<std::size_t>(component_exponents[0])];
  }
};

inline CubicSymbolTrace triple_cubic_trace(const TripleContext& ctx, const ThetaData& theta, bool with_norm_test = true) {
  detail::require_context(ctx, theta, 3);
  const BigInt q = ctx.q3();
  const BigInt e = cubic_exponent(q);
  const CubicAlgebraElem th = theta_in_algebra(theta, q);

  CubicSymbolTrace tr;
  const CubicSplitting split(ctx.p1, q);
  const auto comps = split.components(th);
  for (std::size_t j = 0; j < 3; ++j) {
    if (comps[j].is_zero()) throw Error(ErrorCode::ThetaNotUnitAtP3, "theta vanishes in a component mod " + q.get_str());
    tr.component_exponents[j] = kummer_exponent(power(comps[j], e));
  }
  if (with_norm_test) {
    const CubicAlgebraElem powered = power(th, e);
    // zeta^c is read as w^(-c) = w^(2c).
    FpOmegaElem zeta_c = FpOmegaElem(1, 0, q);
    const FpOmegaElem w2 = FpOmegaElem::omega_squared(q);
    for (std::size_t c = 0; c < 3; ++c, zeta_c = zeta_c * w2) {
      tr.norm_test[c] = algebra_norm(powered - CubicAlgebraElem::constant(zeta_c, ctx.p1)).is_zero();
    }
  }
  return tr;
}

struct SymbolOptions {
  /// Also run the literal norm test and require it to single out the same c.
  bool cross_check_norm = false;
};

inline SymbolValue triple_cubic_symbol(const TripleContext& ctx, const ThetaData& theta, SymbolOptions opts = {}) {
  const CubicSymbolTrace tr = triple_cubic_trace(ctx, theta, opts.cross_check_norm);
  if (!tr.components_agree()) {
    throw Error(ErrorCode::InternalInvariantViolation, "split components disagree on the cubic symbol");
  }
  if (opts.cross_check_norm && !tr.exactly_one_c()) {
    throw Error(ErrorCode::InternalInvariantViolation, "norm test does not single out one c");
  }
  return {3, tr.component_exponents[0]};
}

inline SymbolValue triple_symbol(const TripleContext& ctx, const ThetaData& theta, SymbolOptions opts = {}) {
  return ctx.ell == 2 ? redei_symbol(ctx, theta) : triple_cubic_symbol(ctx, theta, opts);
}

inline int milnor_invariant(const SymbolValue& sym) { return sym.c; }

// ---------------------------------------------------------------------------
// Drivers

struct SymbolEvaluation {
  SymbolValue value;
  NormEquationSolution solution;
};

/// Solves the pair's norm equation and evaluates the symbol; a solution whose
/// theta is not a unit at p3 is replaced by the next non-proportional one in
/// scan order, up to retry_limit times.
inline SymbolEvaluation evaluate_symbol(const TripleContext& ctx, const SearchConfig& cfg, int retry_limit = 4,
                                        SymbolOptions opts = {}) {
  const NormEquationSolution first = solve(ctx.ell, ctx.p1, ctx.p2, cfg);
  auto attempt = [&](const NormEquationSolution& sol) {
    return SymbolEvaluation{triple_symbol(ctx, theta_of_solution(sol, ctx.p1), opts), sol};
  };
  try {
    return attempt(first);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::ThetaNotUnitAtP3 || retry_limit <= 0) throw;
  }
  const auto sols = enumerate_distinct_solutions(ctx.ell, ctx.p1, ctx.p2, cfg, static_cast<std::size_t>(retry_limit) + 1);
  for (std::size_t i = 1; i < sols.size(); ++i) {
    try {
      return attempt(sols[i]);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::ThetaNotUnitAtP3) throw;
    }
  }
  throw Error(ErrorCode::ThetaNotUnitAtP3,
              "no solution among the first " + std::to_string(retry_limit + 1) + " is a unit at " + ctx.p3.get_str());
}

struct ReciprocityReport {
  SymbolEvaluation forward;   // [p1, p2, p3]
  SymbolEvaluation backward;  // [p2, p1, p3]
  bool product_is_identity = false;
};

inline bool is_solver_failure(ErrorCode code) {
  return code == ErrorCode::NotFoundWithinBound || code == ErrorCode::AssumptionANotWitnessed;
}

inline ReciprocityReport reciprocity_check(int ell, const BigInt& p1, const BigInt& p2, const BigInt& p3,
                                           const SearchConfig& cfg, int retry_limit = 4) {
  const TripleContext fwd = check_triple(ell, p1, p2, p3);
  const TripleContext bwd = check_triple(ell, fwd.p2, fwd.p1, fwd.p3);
  try {
    ReciprocityReport r{evaluate_symbol(fwd, cfg, retry_limit), evaluate_symbol(bwd, cfg, retry_limit)};
    r.product_is_identity = (r.forward.value.c + r.backward.value.c) % ell == 0;
    return r;
  } catch (const Error& e) {
    if (is_solver_failure(e.code())) throw Error(ErrorCode::ReciprocityNotTestable, e.what());
    throw;
  }
}

/// The six orderings [p_rho(1), p_rho(2), p_rho(3)], identity first.
struct Permutation {
  std::array<int, 3> index;
  int sign;
};

inline constexpr std::array<Permutation, 6> kPermutations = {{
    {{0, 1, 2}, 1},
    {{1, 0, 2}, -1},
    {{0, 2, 1}, -1},
    {{2, 1, 0}, -1},
    {{1, 2, 0}, 1},
    {{2, 0, 1}, 1},
}};

struct PermutationEntry {
  Permutation perm;
  std::array<BigInt, 3> primes;
  std::optional<SymbolEvaluation> eval;
  std::string status = "ok";
};

struct PermutationReport {
  int ell = 0;
  std::array<PermutationEntry, 6> entries;
  bool partial = false;
  /// c_rho = sgn(rho) * c_id mod l for every evaluated rho.
  bool verdict = false;
};

inline PermutationReport permutation_experiment(int ell, const std::array<BigInt, 3>& primes, const SearchConfig& cfg,
                                                int retry_limit = 4) {
  const TripleContext base = check_triple(ell, primes[0], primes[1], primes[2]);
  const std::array<BigInt, 3> normalized = {base.p1, base.p2, base.p3};
  PermutationReport rep;
  rep.ell = ell;
  for (std::size_t k = 0; k < kPermutations.size(); ++k) {
    const auto& perm = kPermutations[k];
    auto& entry = rep.entries[k];
    entry.perm = perm;
    entry.primes = {normalized[static_cast<std::size_t>(perm.index[0])],
                    normalized[static_cast<std::size_t>(perm.index[1])],
                    normalized[static_cast<std::size_t>(perm.index[2])]};
    try {
      const TripleContext ctx = check_triple(ell, entry.primes[0], entry.primes[1], entry.primes[2]);
      entry.eval = evaluate_symbol(ctx, cfg, retry_limit);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::InternalInvariantViolation) throw;
      entry.status = std::string(e.name());
      rep.partial = true;
    }
  }
  const auto& id = rep.entries[0].eval;
  rep.verdict = id.has_value();
  if (id) {
    for (const auto& entry : rep.entries) {
      if (!entry.eval) continue;
      const int expected = ((entry.perm.sign * id->value.c) % ell + ell) % ell;
      if (entry.eval->value.c != expected) rep.verdict = false;
    }
  }
  return rep;
}

}  // namespace tsym
