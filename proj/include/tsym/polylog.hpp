#pragma once

// Mod-l values of the second Galois polylogarithmic character chi_2 and of the
// l-adic polylogarithm li_2 at the Frobenius of p3, evaluated at
// z = p1 (-y/x)^l. Independent of the symbols module: chi_2 is read off from
// prod_i (1 - zeta^i z^(1/l))^i using only z itself.

#include <optional>

#include "tsym/eligibility.hpp"
#include "tsym/norm_equations.hpp"
#include "tsym/residue.hpp"

namespace tsym {

struct RationalParameter {
  Rational z;
  Rational one_minus_z;
};

struct PolylogValue {
  int ell = 0;
  int li2 = 0;   // li_2(z)(Frob) mod l, in [0, l)
  int chi2 = 0;  // chi_2^z(Frob) mod l, in [0, l)
  std::optional<int> rho_x;  // l = 2 only
};

/// z = p1 (-y/x)^l and 1 - z, exact and reduced.
inline RationalParameter z_of_solution(const NormEquationSolution& sol, const BigInt& p1) {
  detail::require_ell(sol.ell);
  if (sol.x == 0) throw Error(ErrorCode::DegenerateZ, "x = 0");
  const auto l = static_cast<unsigned long>(sol.ell);
  Rational ratio(BigInt(-sol.y), sol.x);
  ratio.canonicalize();
  Rational z = Rational(p1) * Rational(pow(ratio.get_num(), l), pow(ratio.get_den(), l));
  z.canonicalize();
  if (z == 0 || z == 1) throw Error(ErrorCode::DegenerateZ, "z = " + fraction_string(z));
  Rational one_minus = 1 - z;
  one_minus.canonicalize();
  return {z, one_minus};
}

/// As above, cross-checked against 1 - z = w^l p2 / x^l.
inline RationalParameter z_of_solution(const NormEquationSolution& sol, const BigInt& p1, const BigInt& p2) {
  RationalParameter r = z_of_solution(sol, p1);
  const auto l = static_cast<unsigned long>(sol.ell);
  Rational expected(pow(sol.w, l) * p2, pow(sol.x, l));
  expected.canonicalize();
  if (expected != r.one_minus_z) {
    throw Error(ErrorCode::InternalInvariantViolation, "1 - z != w^l p2 / x^l");
  }
  return r;
}

/// 0 if x is a square mod p3, else 1 (l = 2, p3 = 1 mod 4).
inline int rho_x(const NormEquationSolution& sol, const BigInt& p3) {
  if (sol.ell != 2) throw Error(ErrorCode::InvalidArgument, "rho_x is defined for l = 2");
  if (mod_small(p3, 4) != 1) throw Error(ErrorCode::InvalidArgument, "rho_x needs p3 = 1 mod 4");
  const int leg = legendre(sol.x, p3);
  if (leg == 0) throw Error(ErrorCode::RhoUndefined, "x = 0 mod " + p3.get_str());
  return leg == 1 ? 0 : 1;
}

/// chi_2 mod l at Frob(p3) for the parameter zeta: the l-th power residue
/// character of prod_{i=1}^{l-1} (1 - zeta_l^i s)^i, s any l-th root of zeta
/// in the residue field. All choices of s must agree.
inline int chi2_of_parameter(int ell, const Rational& zeta, const BigInt& p3) {
  detail::require_ell(ell);
  const BigInt q = abs(p3);
  if (divisible(zeta.get_den(), q)) throw Error(ErrorCode::ThetaNotUnitAtP3, "x = 0 mod " + q.get_str());
  BigInt den_inv;
  BigInt den = mod(zeta.get_den(), q);
  mpz_invert(den_inv.get_mpz_t(), den.get_mpz_t(), q.get_mpz_t());
  const BigInt zq = mod(zeta.get_num() * den_inv, q);
  if (zq == 0) return 0;  // every factor is 1

  std::optional<int> value;
  auto agree = [&](int v) {
    if (value && *value != v) {
      throw Error(ErrorCode::InternalInvariantViolation, "root choice changed chi_2");
    }
    value = v;
  };

  if (ell == 2) {
    const auto [s1, s2] = sqrt_mod(zq, q);
    for (const BigInt& s : {s1, s2}) {
      const int leg = legendre(1 + s, q);  // (1 - (-1) s)^1
      if (leg == 0) throw Error(ErrorCode::ThetaNotUnitAtP3, "1 + sqrt(z) = 0 mod " + q.get_str());
      agree(leg == 1 ? 0 : 1);
    }
  } else {
    const FpOmegaElem one(1, 0, q);
    const FpOmegaElem w = FpOmegaElem::omega(q);
    const FpOmegaElem w2 = FpOmegaElem::omega_squared(q);
    const BigInt e = cubic_exponent(q);
    for (const auto& s : cube_roots_in_fq2(FpOmegaElem(zq, 0, q))) {
      const FpOmegaElem f1 = one - w * s;
      const FpOmegaElem f2 = one - w2 * s;
      const FpOmegaElem a = f1 * f2 * f2;
      if (a.is_zero()) throw Error(ErrorCode::ThetaNotUnitAtP3, "1 - zeta^i z^(1/3) = 0 mod " + q.get_str());
      agree(kummer_exponent(power(a, e)));
    }
  }
  return *value;
}

inline void require_polylog_inputs(const TripleContext& ctx, const NormEquationSolution& sol) {
  if (ctx.ell != sol.ell) throw Error(ErrorCode::InvalidArgument, "solution and context disagree on l");
}

inline int chi2_mod_l(const TripleContext& ctx, const NormEquationSolution& sol) {
  require_polylog_inputs(ctx, sol);
  return chi2_of_parameter(ctx.ell, z_of_solution(sol, ctx.p1, ctx.p2).z, ctx.p3);
}

inline PolylogValue li2_mod_l(const TripleContext& ctx, const NormEquationSolution& sol) {
  PolylogValue v;
  v.ell = ctx.ell;
  v.chi2 = chi2_mod_l(ctx, sol);
  v.li2 = (ctx.ell - v.chi2) % ctx.ell;
  if (ctx.ell == 2) v.rho_x = rho_x(sol, ctx.p3);
  return v;
}

/// li_2(1 - z) mod l, via theta_{p2,p1} built from (x, -w): the swapped
/// equation x^l - (w)^l p2 = (-y)^l p1 has parameter p2 (w/x)^l = 1 - z.
inline int li2_one_minus_z(const TripleContext& ctx, const NormEquationSolution& sol) {
  require_polylog_inputs(ctx, sol);
  const RationalParameter param = z_of_solution(sol, ctx.p1, ctx.p2);
  const NormEquationSolution swapped{sol.ell, sol.x, BigInt(-sol.w), BigInt(-sol.y)};
  const RationalParameter swapped_param = z_of_solution(swapped, ctx.p2, ctx.p1);
  if (swapped_param.z != param.one_minus_z) {
    throw Error(ErrorCode::InternalInvariantViolation, "swapped parameter is not 1 - z");
  }
  const int chi = chi2_of_parameter(ctx.ell, swapped_param.z, ctx.p3);
  return (ctx.ell - chi) % ctx.ell;
}

/// Right side of li_2(z) + li_2(1 - z) at Frob(p3): (N^2 - 1)/24 mod l with
/// N the norm of p3 (q^2 for l = 3, p3 for l = 2). Zero for l = 3; for l = 2
/// it is 1 exactly when p3 = 5 mod 8.
inline int functional_equation_rhs(int ell, const BigInt& p3) {
  const BigInt n = ell == 3 ? BigInt(p3 * p3) : p3;
  const BigInt t = (n * n - 1) / 24;
  return static_cast<int>(mpz_fdiv_ui(t.get_mpz_t(), static_cast<unsigned long>(ell)));
}

inline int functional_equation_rhs(const TripleContext& ctx) { return functional_equation_rhs(ctx.ell, ctx.p3); }

/// li_2(z) + li_2(1 - z) = (N(p3)^2 - 1)/24 mod l.
inline bool functional_equation_holds(int ell, int li2, int li2_rev, int rhs) {
  return (((li2 + li2_rev - rhs) % ell) + ell) % ell == 0;
}

inline bool functional_equation_check(const TripleContext& ctx, const NormEquationSolution& sol) {
  const PolylogValue v = li2_mod_l(ctx, sol);
  return functional_equation_holds(ctx.ell, v.li2, li2_one_minus_z(ctx, sol), functional_equation_rhs(ctx));
}

/// Balanced representative in (-l/2, l/2]: for l = 3 this is {-1, 0, 1}.
inline int balanced(int value, int ell) {
  int v = ((value % ell) + ell) % ell;
  return (ell == 3 && v == 2) ? -1 : v;
}

}  // namespace tsym
