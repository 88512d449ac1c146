#pragma once

// Exact arithmetic in the Eisenstein integers Z[w], w^2 + w + 1 = 0, and the
// normalized inert primes used for the cubic triple symbol.

#include <array>
#include <ostream>
#include <vector>

#include "tsym/bigint.hpp"

namespace tsym {

/// a + b*w with w a primitive cube root of unity.
struct EisensteinInt {
  BigInt a;
  BigInt b;

  EisensteinInt() = default;
  EisensteinInt(BigInt a_, BigInt b_ = 0) : a(std::move(a_)), b(std::move(b_)) {}  // NOLINT
  EisensteinInt(long a_) : a(a_), b(0) {}                                         // NOLINT

  static EisensteinInt omega() { return {0, 1}; }
  static EisensteinInt omega_squared() { return {-1, -1}; }
  /// sqrt(-3) = 1 + 2w.
  static EisensteinInt sqrt_minus3() { return {1, 2}; }

  bool is_zero() const { return a == 0 && b == 0; }

  /// Complex conjugate: w -> w^2.
  EisensteinInt conj() const { return {a - b, -b}; }

  friend EisensteinInt operator+(const EisensteinInt& u, const EisensteinInt& v) {
    return {u.a + v.a, u.b + v.b};
  }
  friend EisensteinInt operator-(const EisensteinInt& u, const EisensteinInt& v) {
    return {u.a - v.a, u.b - v.b};
  }
  friend EisensteinInt operator-(const EisensteinInt& u) { return {-u.a, -u.b}; }
  friend EisensteinInt operator*(const EisensteinInt& u, const EisensteinInt& v) {
    BigInt bd = u.b * v.b;
    return {u.a * v.a - bd, u.a * v.b + u.b * v.a - bd};
  }
  friend bool operator==(const EisensteinInt& u, const EisensteinInt& v) {
    return u.a == v.a && u.b == v.b;
  }
  friend std::ostream& operator<<(std::ostream& os, const EisensteinInt& e) {
    return os << e.a << (e.b < 0 ? "" : "+") << e.b << "w";
  }
};

inline BigInt eis_norm(const EisensteinInt& e) { return e.a * e.a - e.a * e.b + e.b * e.b; }

/// The six units +-1, +-w, +-w^2, in the order 1, w, w^2, -1, -w, -w^2.
inline std::array<EisensteinInt, 6> eis_units() {
  return {EisensteinInt{1, 0}, EisensteinInt{0, 1}, EisensteinInt{-1, -1},
          EisensteinInt{-1, 0}, EisensteinInt{0, -1}, EisensteinInt{1, 1}};
}

/// Quotient e/d when it lies in Z[w].
inline std::optional<EisensteinInt> eis_exact_div(const EisensteinInt& e, const EisensteinInt& d) {
  if (d.is_zero()) throw Error(ErrorCode::DivisorZero, "division by zero in Z[w]");
  const BigInt n = eis_norm(d);
  const EisensteinInt num = e * d.conj();
  if (!divisible(num.a, n) || !divisible(num.b, n)) return std::nullopt;
  return EisensteinInt{BigInt(num.a / n), BigInt(num.b / n)};
}

inline bool eis_divides(const EisensteinInt& d, const EisensteinInt& e) {
  return eis_exact_div(e, d).has_value();
}

/// Normalized prime element p = -q (up to the associate test below) of an
/// inert rational prime q with q^2 = 1 mod 9.
struct NormalizedPrimeL3 {
  BigInt p;  // signed generator, p = 1 mod 3*sqrt(-3)
  BigInt q;  // |p|

  EisensteinInt element() const { return EisensteinInt{p, 0}; }
  friend bool operator==(const NormalizedPrimeL3&, const NormalizedPrimeL3&) = default;
};

/// 3*sqrt(-3) = 3 + 6w.
inline EisensteinInt normalization_modulus() { return {3, 6}; }

inline bool is_one_mod_3sqrt_minus3(const EisensteinInt& p) {
  return eis_divides(normalization_modulus(), p - EisensteinInt{1});
}

/// Picks the unique associate of q congruent to 1 modulo 3*sqrt(-3).
inline NormalizedPrimeL3 normalize_prime_l3(const BigInt& q) {
  if (q <= 0 || !is_prime(q)) throw Error(ErrorCode::NotPrime, q.get_str());
  if (mod_small(q, 3) != 2) throw Error(ErrorCode::NotInert, q.get_str());
  if (mod_small(q * q, 9) != 1) throw Error(ErrorCode::NormNotOneMod9, q.get_str());

  std::vector<EisensteinInt> hits;
  for (const auto& u : eis_units()) {
    EisensteinInt cand = u * EisensteinInt{q};
    if (is_one_mod_3sqrt_minus3(cand)) hits.push_back(cand);
  }
  if (hits.size() != 1) {
    throw Error(ErrorCode::InternalInvariantViolation,
                "expected exactly one normalized associate of " + q.get_str());
  }
  if (hits.front().b != 0) {
    throw Error(ErrorCode::InternalInvariantViolation,
                "normalized associate of " + q.get_str() + " is not rational");
  }
  return {hits.front().a, q};
}

/// All normalized primes p with 1 <= -p <= bound, ascending by |p|.
inline std::vector<NormalizedPrimeL3> enumerate_prime_list(const BigInt& bound) {
  std::vector<NormalizedPrimeL3> out;
  for (BigInt q = 2; q <= bound; ++q) {
    if (mod_small(q, 3) != 2 || mod_small(q * q, 9) != 1) continue;
    if (!is_prime(q)) continue;
    out.push_back(normalize_prime_l3(q));
  }
  return out;
}

}  // namespace tsym
