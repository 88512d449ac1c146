#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "tsym/error.hpp"

namespace tsym {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Largest modulus accepted by is_prime. The fixed Miller-Rabin base set below
/// is deterministic well past this bound.
inline const BigInt& primality_limit() {
  static const BigInt limit("3000000000000000000");
  return limit;
}

/// Least non-negative residue of a modulo m (m > 0).
inline BigInt mod(const BigInt& a, const BigInt& m) {
  BigInt r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

inline long mod_small(const BigInt& a, unsigned long m) {
  return static_cast<long>(mpz_fdiv_ui(a.get_mpz_t(), m));
}

inline BigInt powmod(const BigInt& base, const BigInt& exponent, const BigInt& m) {
  if (exponent < 0) throw Error(ErrorCode::InvalidArgument, "negative exponent in powmod");
  BigInt r;
  BigInt b = mod(base, m);
  mpz_powm(r.get_mpz_t(), b.get_mpz_t(), exponent.get_mpz_t(), m.get_mpz_t());
  return r;
}

inline BigInt gcd(const BigInt& a, const BigInt& b) {
  BigInt r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline BigInt abs(const BigInt& a) { return a < 0 ? BigInt(-a) : a; }

inline BigInt pow(const BigInt& base, unsigned long exponent) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
  return r;
}

inline bool divisible(const BigInt& n, const BigInt& d) {
  return mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) != 0;
}

/// Exact square root of n, or nullopt when n is negative or not a square.
inline std::optional<BigInt> exact_sqrt(const BigInt& n) {
  if (n < 0) return std::nullopt;
  BigInt r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  if (r * r != n) return std::nullopt;
  return r;
}

/// Exact (signed) cube root of n, or nullopt when n is not a cube.
inline std::optional<BigInt> exact_cbrt(const BigInt& n) {
  BigInt a = abs(n);
  BigInt r;
  if (mpz_root(r.get_mpz_t(), a.get_mpz_t(), 3) == 0) return std::nullopt;
  if (n < 0) r = -r;
  return r;
}

/// Deterministic Miller-Rabin for n < 3e18; larger inputs raise PrimeOutOfRange.
inline bool is_prime(const BigInt& n) {
  if (n < 2) return false;
  if (n > primality_limit()) {
    throw Error(ErrorCode::PrimeOutOfRange, n.get_str() + " exceeds 3e18");
  }
  static constexpr std::array<unsigned long, 12> bases = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (unsigned long p : bases) {
    if (n == p) return true;
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
  }
  BigInt d = n - 1;
  unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
  mpz_fdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);
  const BigInt n_minus_1 = n - 1;
  for (unsigned long a : bases) {
    BigInt x = powmod(BigInt(a), d, n);
    if (x == 1 || x == n_minus_1) continue;
    bool composite = true;
    for (unsigned long r = 1; r < s; ++r) {
      x = x * x % n;
      if (x == n_minus_1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

inline std::string to_string(const BigInt& n) { return n.get_str(); }

/// Parses a decimal integer with optional sign; rejects trailing garbage.
inline BigInt parse_bigint(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw Error(ErrorCode::InvalidArgument, "empty integer");
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) throw Error(ErrorCode::InvalidArgument, "not an integer: " + s);
  for (std::size_t j = i; j < s.size(); ++j) {
    if (s[j] < '0' || s[j] > '9') throw Error(ErrorCode::InvalidArgument, "not an integer: " + s);
  }
  if (s[0] == '+') s.erase(0, 1);
  return BigInt(s, 10);
}

/// "num/den" in lowest terms; integers render as "n/1".
inline std::string fraction_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace tsym
