#pragma once

// Bounded exhaustive search for the norm equations
//   l = 2:  x^2 - p1 y^2 - p2 w^2 = 0, gcd(x,y,w) = 1, y even, x - y = 1 mod 4
//   l = 3:  x^3 + p1 y^3 = p2 w^3,     x != 0, w != 0
// Both are instances of x^l - (-y)^l p1 = w^l p2.

#include <cstdint>
#include <functional>
#include <ostream>
#include <vector>

#include "tsym/bigint.hpp"
#include "tsym/eligibility.hpp"

namespace tsym {

struct SearchConfig {
  /// Largest |.| of the scanned variables: (y, w) for l = 2, (x, y) for l = 3.
  std::int64_t bound = 100;
  /// Reserved: rational (x, y) under Assumption (A). Not supported.
  bool allow_rational = false;
};

struct NormEquationSolution {
  int ell = 0;
  BigInt x, y, w;

  friend bool operator==(const NormEquationSolution&, const NormEquationSolution&) = default;
  friend std::ostream& operator<<(std::ostream& os, const NormEquationSolution& s) {
    return os << "(" << s.x << ", " << s.y << ", " << s.w << ")";
  }
};

/// Exact re-check of the defining equation and every normalization clause.
inline bool verify_solution(const NormEquationSolution& sol, const BigInt& p1, const BigInt& p2) {
  const auto& [ell, x, y, w] = sol;
  if (ell != 2 && ell != 3) return false;
  const unsigned long l = static_cast<unsigned long>(ell);
  if (pow(x, l) - pow(BigInt(-y), l) * p1 != pow(w, l) * p2) return false;
  if (ell == 2) {
    if (gcd(gcd(x, y), w) != 1) return false;
    if (mod_small(y, 2) != 0) return false;
    return mod_small(BigInt(x - y), 4) == 1;
  }
  return x != 0 && w != 0;
}

namespace detail {

/// Visitor returns false to stop the scan.
using SolutionVisitor = std::function<bool(const NormEquationSolution&)>;

/// 0, 1, -1, 2, -2, ..., bound, -bound.
template <class F>
bool for_each_signed(std::int64_t bound, bool include_zero, F&& f) {
  if (include_zero && !f(std::int64_t{0})) return false;
  for (std::int64_t k = 1; k <= bound; ++k) {
    if (!f(k) || !f(-k)) return false;
  }
  return true;
}

inline void scan_l2(const BigInt& p1, const BigInt& p2, std::int64_t bound, const SolutionVisitor& visit) {
  for_each_signed(bound, true, [&](std::int64_t yv) {
    if (yv % 2 != 0) return true;  // y odd survives no sign change
    const BigInt y = yv;
    const BigInt p1y2 = p1 * y * y;
    return for_each_signed(bound, false, [&](std::int64_t wv) {
      const BigInt w = wv;
      auto root = exact_sqrt(p1y2 + p2 * w * w);
      if (!root || *root == 0) return true;
      if (gcd(gcd(*root, y), w) != 1) return true;
      // x - y = 1 mod 4 fixes the sign of x when x is odd; x even never works.
      for (const BigInt& x : {BigInt(*root), BigInt(-*root)}) {
        if (mod_small(BigInt(x - y), 4) == 1) return visit({2, x, y, w});
      }
      return true;
    });
  });
}

inline std::int64_t icbrt_exact(std::int64_t n, bool& exact) {
  const bool neg = n < 0;
  const std::uint64_t a = neg ? static_cast<std::uint64_t>(-(n + 1)) + 1 : static_cast<std::uint64_t>(n);
  std::uint64_t lo = 0, hi = 2097152;  // 2^21 > cbrt(2^63)
  while (lo < hi) {
    std::uint64_t mid = (lo + hi + 1) / 2;
    if (mid * mid * mid <= a) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  exact = lo * lo * lo == a;
  return neg ? -static_cast<std::int64_t>(lo) : static_cast<std::int64_t>(lo);
}

/// Scan order: |y| ascending, then |x| ascending, then sign of x (+, -), then
/// sign of y (+, -). w is the exact cube root of (x^3 + p1 y^3) / p2.
inline void scan_l3(const BigInt& p1, const BigInt& p2, std::int64_t bound, const SolutionVisitor& visit) {
  if (bound <= 0) return;
  // Native fast path when |x|^3 + |p1| |y|^3 stays below 2^62.
  const BigInt b3 = pow(BigInt(bound), 3);
  const bool native = p1.fits_slong_p() && p2.fits_slong_p() &&
                      b3 * (abs(p1) + 1) < pow(BigInt(2), 62);
  const long P1 = native ? p1.get_si() : 0;
  const long P2 = native ? p2.get_si() : 0;

  for (std::int64_t ay = 0; ay <= bound; ++ay) {
    for (std::int64_t ax = 1; ax <= bound; ++ax) {
      for (int sx : {1, -1}) {
        for (int sy : {1, -1}) {
          if (ay == 0 && sy < 0) continue;
          const std::int64_t xv = sx * ax;
          const std::int64_t yv = sy * ay;
          BigInt w;
          if (native) {
            const std::int64_t n = xv * xv * xv + P1 * yv * yv * yv;
            if (n % P2 != 0) continue;
            bool exact = false;
            const std::int64_t wv = icbrt_exact(n / P2, exact);
            if (!exact || wv == 0) continue;
            w = wv;
          } else {
            const BigInt x = xv, y = yv;
            const BigInt n = x * x * x + p1 * y * y * y;
            if (!divisible(n, p2)) continue;
            auto root = exact_cbrt(BigInt(n / p2));
            if (!root || *root == 0) continue;
            w = *root;
          }
          if (!visit({3, BigInt(xv), BigInt(yv), w})) return;
        }
      }
    }
  }
}

inline void scan(int ell, const BigInt& p1, const BigInt& p2, const SearchConfig& cfg,
                 const SolutionVisitor& visit) {
  if (cfg.allow_rational) {
    throw Error(ErrorCode::InvalidArgument, "rational Assumption (A) search is not supported");
  }
  if (ell == 2) {
    scan_l2(p1, p2, cfg.bound, visit);
  } else {
    scan_l3(p1, p2, cfg.bound, visit);
  }
}

inline PairContext solver_preconditions(int ell, const BigInt& p1, const BigInt& p2) {
  require_ell(ell);
  if (p1 == p2) throw Error(ErrorCode::InputsEqual, p1.get_str());
  return check_pair(ell, p1, p2);
}

}  // namespace detail

/// First normalized solution of x^2 = p1 y^2 + p2 w^2 in (y, w) scan order.
inline NormEquationSolution solve_l2(const BigInt& p1, const BigInt& p2, const SearchConfig& cfg) {
  const PairContext ctx = detail::solver_preconditions(2, p1, p2);
  std::optional<NormEquationSolution> found;
  detail::scan(2, ctx.p1, ctx.p2, cfg, [&](const NormEquationSolution& s) {
    found = s;
    return false;
  });
  if (!found) {
    throw Error(ErrorCode::NotFoundWithinBound,
                "(" + p1.get_str() + ", " + p2.get_str() + ") bound " + std::to_string(cfg.bound));
  }
  return *found;
}

/// First integral x + y*cbrt(p1) of norm p2 w^3, in (|y|, |x|, signs) scan order.
inline NormEquationSolution solve_l3_assumption_a(const BigInt& p1, const BigInt& p2, const SearchConfig& cfg) {
  const PairContext ctx = detail::solver_preconditions(3, p1, p2);
  std::optional<NormEquationSolution> found;
  detail::scan(3, ctx.p1, ctx.p2, cfg, [&](const NormEquationSolution& s) {
    found = s;
    return false;
  });
  if (!found) {
    throw Error(ErrorCode::AssumptionANotWitnessed,
                "(" + ctx.p1.get_str() + ", " + ctx.p2.get_str() + ") bound " + std::to_string(cfg.bound));
  }
  return *found;
}

inline NormEquationSolution solve(int ell, const BigInt& p1, const BigInt& p2, const SearchConfig& cfg) {
  detail::require_ell(ell);
  return ell == 2 ? solve_l2(p1, p2, cfg) : solve_l3_assumption_a(p1, p2, cfg);
}

/// Up to `limit` distinct solutions in scan order.
inline std::vector<NormEquationSolution> enumerate_solutions(int ell, const BigInt& p1, const BigInt& p2,
                                                             const SearchConfig& cfg, std::size_t limit) {
  const PairContext ctx = detail::solver_preconditions(ell, p1, p2);
  std::vector<NormEquationSolution> out;
  if (limit == 0) return out;
  detail::scan(ell, ctx.p1, ctx.p2, cfg, [&](const NormEquationSolution& s) {
    out.push_back(s);
    return out.size() < limit;
  });
  return out;
}

/// Up to `limit` solutions in scan order with pairwise non-proportional (x, y).
/// Proportional solutions give the same theta up to a unit times an l-th power,
/// so these are the ones worth retrying at a bad p3.
inline std::vector<NormEquationSolution> enumerate_distinct_solutions(int ell, const BigInt& p1, const BigInt& p2,
                                                                      const SearchConfig& cfg, std::size_t limit) {
  const PairContext ctx = detail::solver_preconditions(ell, p1, p2);
  std::vector<NormEquationSolution> out;
  if (limit == 0) return out;
  detail::scan(ell, ctx.p1, ctx.p2, cfg, [&](const NormEquationSolution& s) {
    for (const auto& t : out) {
      if (s.x * t.y == s.y * t.x) return true;
    }
    out.push_back(s);
    return out.size() < limit;
  });
  return out;
}

}  // namespace tsym
