#pragma once

// Residue rings used by the Frobenius tests:
//   F_q                      prime field
//   F_q[w]/(w^2+w+1)         the field F_{q^2} when q = 2 mod 3
//   F_{q^2}[t]/(t^3 - p1)    cubic algebra, split when p1 is a cube mod q
// plus Legendre symbols, modular square roots and cubic characters.

#include <algorithm>
#include <array>
#include <tuple>
#include <utility>

#include "tsym/bigint.hpp"
#include "tsym/eisenstein.hpp"

namespace tsym {

namespace detail {
inline void require_same_modulus(const BigInt& a, const BigInt& b) {
  if (a != b) throw Error(ErrorCode::InvalidArgument, "modulus mismatch");
}
}  // namespace detail

/// Left-to-right square-and-multiply over any ring type exposing one() and *.
template <class Ring>
Ring power(const Ring& base, const BigInt& exponent) {
  if (exponent < 0) throw Error(ErrorCode::InvalidArgument, "negative exponent");
  Ring result = base.one();
  for (long i = static_cast<long>(mpz_sizeinbase(exponent.get_mpz_t(), 2)) - 1; i >= 0; --i) {
    result = result * result;
    if (mpz_tstbit(exponent.get_mpz_t(), static_cast<mp_bitcnt_t>(i))) result = result * base;
  }
  return result;
}

class FpElem {
 public:
  FpElem(const BigInt& value, const BigInt& q) : value_(mod(value, q)), q_(q) {}

  const BigInt& value() const { return value_; }
  const BigInt& modulus() const { return q_; }
  bool is_zero() const { return value_ == 0; }
  FpElem one() const { return {1, q_}; }

  FpElem inverse() const {
    if (is_zero()) throw Error(ErrorCode::InvalidArgument, "inverse of zero in F_q");
    BigInt r;
    mpz_invert(r.get_mpz_t(), value_.get_mpz_t(), q_.get_mpz_t());
    return {r, q_};
  }

  friend FpElem operator+(const FpElem& u, const FpElem& v) {
    detail::require_same_modulus(u.q_, v.q_);
    return {u.value_ + v.value_, u.q_};
  }
  friend FpElem operator-(const FpElem& u, const FpElem& v) {
    detail::require_same_modulus(u.q_, v.q_);
    return {u.value_ - v.value_, u.q_};
  }
  friend FpElem operator-(const FpElem& u) { return {-u.value_, u.q_}; }
  friend FpElem operator*(const FpElem& u, const FpElem& v) {
    detail::require_same_modulus(u.q_, v.q_);
    return {u.value_ * v.value_, u.q_};
  }
  friend bool operator==(const FpElem& u, const FpElem& v) = default;

 private:
  BigInt value_;
  BigInt q_;
};

/// c0 + c1*w in F_q[w], w^2 = -1 - w.
class FpOmegaElem {
 public:
  FpOmegaElem(const BigInt& c0, const BigInt& c1, const BigInt& q)
      : c0_(mod(c0, q)), c1_(mod(c1, q)), q_(q) {}
  FpOmegaElem(const EisensteinInt& e, const BigInt& q) : FpOmegaElem(e.a, e.b, q) {}
  FpOmegaElem(const FpElem& c) : FpOmegaElem(c.value(), 0, c.modulus()) {}  // NOLINT

  static FpOmegaElem omega(const BigInt& q) { return {0, 1, q}; }
  static FpOmegaElem omega_squared(const BigInt& q) { return {-1, -1, q}; }

  const BigInt& c0() const { return c0_; }
  const BigInt& c1() const { return c1_; }
  const BigInt& modulus() const { return q_; }
  FpElem c0_elem() const { return {c0_, q_}; }
  FpElem c1_elem() const { return {c1_, q_}; }
  bool is_zero() const { return c0_ == 0 && c1_ == 0; }
  FpOmegaElem one() const { return {1, 0, q_}; }

  /// Image of w -> w^2 (the q-power Frobenius when q = 2 mod 3).
  FpOmegaElem conj() const { return {c0_ - c1_, -c1_, q_}; }

  /// Norm down to F_q: u * conj(u) = c0^2 - c0*c1 + c1^2.
  FpElem norm() const { return {c0_ * c0_ - c0_ * c1_ + c1_ * c1_, q_}; }

  FpOmegaElem inverse() const {
    FpElem n = norm();
    if (n.is_zero()) throw Error(ErrorCode::InvalidArgument, "inverse of non-unit in F_q[w]");
    return conj() * FpOmegaElem(n.inverse());
  }

  friend FpOmegaElem operator+(const FpOmegaElem& u, const FpOmegaElem& v) {
    detail::require_same_modulus(u.q_, v.q_);
    return {u.c0_ + v.c0_, u.c1_ + v.c1_, u.q_};
  }
  friend FpOmegaElem operator-(const FpOmegaElem& u, const FpOmegaElem& v) {
    detail::require_same_modulus(u.q_, v.q_);
    return {u.c0_ - v.c0_, u.c1_ - v.c1_, u.q_};
  }
  friend FpOmegaElem operator-(const FpOmegaElem& u) { return {-u.c0_, -u.c1_, u.q_}; }
  friend FpOmegaElem operator*(const FpOmegaElem& u, const FpOmegaElem& v) {
    detail::require_same_modulus(u.q_, v.q_);
    BigInt bd = u.c1_ * v.c1_;
    return {u.c0_ * v.c0_ - bd, u.c0_ * v.c1_ + u.c1_ * v.c0_ - bd, u.q_};
  }
  friend bool operator==(const FpOmegaElem& u, const FpOmegaElem& v) = default;

 private:
  BigInt c0_;
  BigInt c1_;
  BigInt q_;
};

/// Lexicographic order on the (c0, c1) representatives.
inline bool lex_less(const FpOmegaElem& u, const FpOmegaElem& v) {
  return std::tie(u.c0(), u.c1()) < std::tie(v.c0(), v.c1());
}

// ---------------------------------------------------------------------------
// Quadratic residues

/// Euler criterion, mapped to {+1, -1, 0}.
inline int legendre(const BigInt& a, const BigInt& q) {
  if (q < 3 || mod_small(q, 2) == 0) throw Error(ErrorCode::InvalidArgument, "legendre needs an odd prime");
  BigInt r = powmod(a, (q - 1) / 2, q);
  if (r == 0) return 0;
  return r == 1 ? 1 : -1;
}

/// Both square roots {s, q - s} of a mod q, smaller first.
inline std::pair<BigInt, BigInt> sqrt_mod(const BigInt& a, const BigInt& q) {
  if (legendre(a, q) != 1) throw Error(ErrorCode::NonResidue, a.get_str() + " mod " + q.get_str());
  const BigInt n = mod(a, q);
  BigInt s;
  if (mod_small(q, 4) == 3) {
    s = powmod(n, (q + 1) / 4, q);
  } else {
    // Tonelli-Shanks: q - 1 = 2^e * odd.
    BigInt odd = q - 1;
    unsigned long e = mpz_scan1(odd.get_mpz_t(), 0);
    mpz_fdiv_q_2exp(odd.get_mpz_t(), odd.get_mpz_t(), e);
    BigInt z = 2;
    while (legendre(z, q) != -1) ++z;
    BigInt c = powmod(z, odd, q);
    BigInt t = powmod(n, odd, q);
    s = powmod(n, (odd + 1) / 2, q);
    unsigned long m = e;
    while (t != 1) {
      unsigned long i = 0;
      BigInt t2 = t;
      while (t2 != 1) {
        t2 = t2 * t2 % q;
        ++i;
      }
      BigInt b = c;
      for (unsigned long k = 0; k + i + 1 < m; ++k) b = b * b % q;
      s = s * b % q;
      c = b * b % q;
      t = t * c % q;
      m = i;
    }
  }
  BigInt other = mod(q - s, q);
  if (s * s % q != n) throw Error(ErrorCode::InternalInvariantViolation, "sqrt_mod check failed");
  return s <= other ? std::pair{s, other} : std::pair{other, s};
}

// ---------------------------------------------------------------------------
// Cubic characters

/// m with u = w^m; u must be a cube root of unity in F_q[w].
inline int omega_log(const FpOmegaElem& u) {
  const BigInt& q = u.modulus();
  if (u == u.one()) return 0;
  if (u == FpOmegaElem::omega(q)) return 1;
  if (u == FpOmegaElem::omega_squared(q)) return 2;
  throw Error(ErrorCode::NotCubeRootOfUnity, "(" + u.c0().get_str() + "," + u.c1().get_str() + ")");
}

/// Exponent c of the symbol zeta_3^c carried by u = theta^((q^2-1)/3).
/// Orientation: u is read as w^(-c), so c = -omega_log(u) mod 3. Equivalently,
/// c is the omega_log of the character of theta^2, which agrees with theta^(-1)
/// up to a cube.
inline int kummer_exponent(const FpOmegaElem& u) { return (3 - omega_log(u)) % 3; }

inline void require_inert(const BigInt& q) {
  if (q <= 0 || !is_prime(q)) throw Error(ErrorCode::NotPrime, q.get_str());
  if (mod_small(q, 3) != 2) throw Error(ErrorCode::NotInert, q.get_str());
}

/// (q^2 - 1) / 3.
inline BigInt cubic_exponent(const BigInt& q) { return (q * q - 1) / 3; }

/// m in Z/3 with u^((q^2-1)/3) = w^m, for u a unit of F_q[w].
inline int cubic_character(const FpOmegaElem& u) {
  if (u.is_zero()) throw Error(ErrorCode::CharacterUndefined, "argument is 0 mod q");
  return omega_log(power(u, cubic_exponent(u.modulus())));
}

/// Cubic residue character of a at the inert prime q, as an exponent of w.
inline int cubic_character(const EisensteinInt& a, const BigInt& q) {
  require_inert(q);
  return cubic_character(FpOmegaElem(a, q));
}

inline int cubic_character(const EisensteinInt& a, const NormalizedPrimeL3& np) {
  return cubic_character(a, np.q);
}

namespace detail {

/// Some element of F_q[w] that is not a cube.
inline FpOmegaElem non_cube(const BigInt& q) {
  const BigInt e = cubic_exponent(q);
  for (long c1 = 0;; ++c1) {
    for (long c0 = 1; c0 < 64; ++c0) {
      FpOmegaElem g(c0, c1, q);
      if (g.is_zero()) continue;
      if (!(power(g, e) == g.one())) return g;
    }
  }
}

}  // namespace detail

/// The three cube roots of a cube a in F_{q^2}: r, r*w, r*w^2 with r the root
/// whose (c0, c1) representative is lexicographically smallest.
inline std::array<FpOmegaElem, 3> cube_roots_in_fq2(const FpOmegaElem& a) {
  if (cubic_character(a) != 0) throw Error(ErrorCode::NoCubeRoot, "element is not a cube");
  const BigInt& q = a.modulus();
  // Adleman-Manders-Miller: q^2 - 1 = 3^s * t with 3 not dividing t.
  const BigInt order = q * q - 1;
  BigInt t = order;
  unsigned long s = 0;
  while (mod_small(t, 3) == 0) {
    t /= 3;
    ++s;
  }
  BigInt u;  // 3*u = 1 mod t
  BigInt three = 3;
  if (t == 1) {
    u = 0;
  } else {
    mpz_invert(u.get_mpz_t(), three.get_mpz_t(), t.get_mpz_t());
  }
  const BigInt m = (3 * u - 1) / t;  // exact
  const FpOmegaElem z = power(detail::non_cube(q), t);  // generates the 3-Sylow subgroup
  const FpOmegaElem b = power(a, t);

  // Discrete log of b to base z, one base-3 digit at a time.
  const BigInt sylow_order = pow(BigInt(3), s);
  const FpOmegaElem gamma = power(z, pow(BigInt(3), s - 1));
  const FpOmegaElem z_inv = z.inverse();
  BigInt k = 0;
  for (unsigned long i = 0; i < s; ++i) {
    FpOmegaElem h = power(power(z_inv, k) * b, pow(BigInt(3), s - 1 - i));
    int digit = -1;
    FpOmegaElem g = gamma.one();
    for (int d = 0; d < 3; ++d, g = g * gamma) {
      if (g == h) {
        digit = d;
        break;
      }
    }
    if (digit < 0) throw Error(ErrorCode::InternalInvariantViolation, "3-Sylow discrete log failed");
    k += digit * pow(BigInt(3), i);
  }
  if (mod_small(k, 3) != 0) throw Error(ErrorCode::InternalInvariantViolation, "cube has non-cube Sylow part");
  const BigInt correction = mod(-m * (k / 3), sylow_order);
  const FpOmegaElem root = power(a, u) * power(z, correction);
  if (!(root * root * root == a)) throw Error(ErrorCode::InternalInvariantViolation, "cube root check failed");

  const FpOmegaElem w = FpOmegaElem::omega(q);
  std::array<FpOmegaElem, 3> roots = {root, root * w, root * w * w};
  auto first = std::min_element(roots.begin(), roots.end(), lex_less);
  const FpOmegaElem r = *first;
  return {r, r * w, r * w * w};
}

inline std::array<FpOmegaElem, 3> cube_roots_in_fq2(const BigInt& p1, const BigInt& q) {
  require_inert(q);
  return cube_roots_in_fq2(FpOmegaElem(p1, 0, q));
}

// ---------------------------------------------------------------------------
// Cubic algebra F_{q^2}[t]/(t^3 - p1)

class CubicAlgebraElem {
 public:
  CubicAlgebraElem(FpOmegaElem d0, FpOmegaElem d1, FpOmegaElem d2, const BigInt& p1)
      : d0_(std::move(d0)), d1_(std::move(d1)), d2_(std::move(d2)), p1_(mod(p1, d0_.modulus())) {
    detail::require_same_modulus(d0_.modulus(), d1_.modulus());
    detail::require_same_modulus(d0_.modulus(), d2_.modulus());
  }

  static CubicAlgebraElem constant(const FpOmegaElem& c, const BigInt& p1) {
    FpOmegaElem zero(0, 0, c.modulus());
    return {c, zero, zero, p1};
  }
  /// The class of t itself, a cube root of p1.
  static CubicAlgebraElem t(const BigInt& p1, const BigInt& q) {
    return {FpOmegaElem(0, 0, q), FpOmegaElem(1, 0, q), FpOmegaElem(0, 0, q), p1};
  }

  const FpOmegaElem& d0() const { return d0_; }
  const FpOmegaElem& d1() const { return d1_; }
  const FpOmegaElem& d2() const { return d2_; }
  const BigInt& p1() const { return p1_; }
  const BigInt& modulus() const { return d0_.modulus(); }
  CubicAlgebraElem one() const { return constant(d0_.one(), p1_); }

  friend CubicAlgebraElem operator+(const CubicAlgebraElem& u, const CubicAlgebraElem& v) {
    detail::require_same_modulus(u.p1_, v.p1_);
    return {u.d0_ + v.d0_, u.d1_ + v.d1_, u.d2_ + v.d2_, u.p1_};
  }
  friend CubicAlgebraElem operator-(const CubicAlgebraElem& u, const CubicAlgebraElem& v) {
    detail::require_same_modulus(u.p1_, v.p1_);
    return {u.d0_ - v.d0_, u.d1_ - v.d1_, u.d2_ - v.d2_, u.p1_};
  }
  friend CubicAlgebraElem operator*(const CubicAlgebraElem& u, const CubicAlgebraElem& v) {
    detail::require_same_modulus(u.p1_, v.p1_);
    const FpOmegaElem P(u.p1_, 0, u.modulus());
    return {u.d0_ * v.d0_ + P * (u.d1_ * v.d2_ + u.d2_ * v.d1_),
            u.d0_ * v.d1_ + u.d1_ * v.d0_ + P * (u.d2_ * v.d2_),
            u.d0_ * v.d2_ + u.d1_ * v.d1_ + u.d2_ * v.d0_, u.p1_};
  }
  friend bool operator==(const CubicAlgebraElem& u, const CubicAlgebraElem& v) = default;

 private:
  FpOmegaElem d0_;
  FpOmegaElem d1_;
  FpOmegaElem d2_;
  BigInt p1_;
};

/// Norm of e from the cubic algebra down to F_q: first the pure-cubic norm form
/// d0^3 + P d1^3 + P^2 d2^3 - 3P d0 d1 d2, then the norm F_q[w] -> F_q.
inline FpElem algebra_norm(const CubicAlgebraElem& e) {
  const BigInt& q = e.modulus();
  const FpOmegaElem P(e.p1(), 0, q);
  const FpOmegaElem three(3, 0, q);
  const auto& a = e.d0();
  const auto& b = e.d1();
  const auto& c = e.d2();
  FpOmegaElem n = a * a * a + P * b * b * b + P * P * c * c * c - three * P * a * b * c;
  return n.norm();
}

/// Componentwise view of a split cubic algebra: evaluation at the three cube
/// roots of p1, in the order fixed by cube_roots_in_fq2.
class CubicSplitting {
 public:
  CubicSplitting(const BigInt& p1, const BigInt& q) : p1_(mod(p1, q)), q_(q), roots_(split(p1, q)) {}

  const std::array<FpOmegaElem, 3>& roots() const { return roots_; }

  std::array<FpOmegaElem, 3> components(const CubicAlgebraElem& e) const {
    detail::require_same_modulus(e.modulus(), q_);
    detail::require_same_modulus(e.p1(), p1_);
    std::array<FpOmegaElem, 3> out = {roots_[0], roots_[1], roots_[2]};
    for (std::size_t j = 0; j < 3; ++j) {
      const auto& r = roots_[j];
      out[j] = e.d0() + e.d1() * r + e.d2() * r * r;
    }
    return out;
  }

 private:
  static std::array<FpOmegaElem, 3> split(const BigInt& p1, const BigInt& q) {
    require_inert(q);
    FpOmegaElem a(p1, 0, q);
    if (a.is_zero() || cubic_character(a) != 0) {
      throw Error(ErrorCode::NotSplit, "t^3 - " + p1.get_str() + " does not split mod " + q.get_str());
    }
    return cube_roots_in_fq2(a);
  }

  BigInt p1_;
  BigInt q_;
  std::array<FpOmegaElem, 3> roots_;
};

inline std::array<FpOmegaElem, 3> algebra_components(const CubicAlgebraElem& e) {
  return CubicSplitting(e.p1(), e.modulus()).components(e);
}

}  // namespace tsym
