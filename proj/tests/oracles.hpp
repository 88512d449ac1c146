#pragma once

// Brute-force reference implementations for small moduli. Nothing here calls
// the exponentiation-based code under test.

#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

namespace oracle {

inline bool is_prime_naive(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

/// +1 / -1 / 0 by listing every square mod q.
inline int legendre(long a, long q) {
  a = ((a % q) + q) % q;
  if (a == 0) return 0;
  for (long s = 1; s < q; ++s) {
    if (s * s % q == a) return 1;
  }
  return -1;
}

/// c0 + c1 w over F_q with w^2 = -1 - w, plain longs.
struct Fq2 {
  long c0, c1;
  bool operator==(const Fq2&) const = default;
  bool operator<(const Fq2& o) const { return std::pair{c0, c1} < std::pair{o.c0, o.c1}; }
};

inline Fq2 mul(const Fq2& a, const Fq2& b, long q) {
  // (a0 + a1 w)(b0 + b1 w) = a0b0 - a1b1 + (a0b1 + a1b0 - a1b1) w
  long c0 = (a.c0 * b.c0 - a.c1 * b.c1) % q;
  long c1 = (a.c0 * b.c1 + a.c1 * b.c0 - a.c1 * b.c1) % q;
  return {(c0 + q) % q, (c1 + q) % q};
}

/// Discrete logs in F_{q^2}^* from a generator found by walking powers.
class Fq2Logs {
 public:
  explicit Fq2Logs(long q) : q_(q), order_(q * q - 1) {
    for (long c1 = 0; c1 < q && log_.empty(); ++c1) {
      for (long c0 = 0; c0 < q; ++c0) {
        if (c0 == 0 && c1 == 0) continue;
        if (try_generator({c0, c1})) break;
      }
    }
    if (log_.empty()) throw std::logic_error("no generator");
    omega_k_ = log_.at({0, 1}) / (order_ / 3);
  }

  long order() const { return order_; }
  long log(const Fq2& a) const { return log_.at(a); }

  /// m with a^((q^2-1)/3) = w^m.
  int cubic_character(const Fq2& a) const {
    // a^((q^2-1)/3) = g^(log a * (q^2-1)/3) and w = g^(k (q^2-1)/3), so m = log(a) / k mod 3.
    const long l = log(a) % 3;
    return static_cast<int>((l * omega_k_) % 3);  // k^-1 = k mod 3
  }

  /// Every x with x^3 = a, by exhaustion.
  std::set<Fq2> cube_roots(const Fq2& a) const {
    std::set<Fq2> out;
    for (long c0 = 0; c0 < q_; ++c0) {
      for (long c1 = 0; c1 < q_; ++c1) {
        Fq2 x{c0, c1};
        if (mul(mul(x, x, q_), x, q_) == a) out.insert(x);
      }
    }
    return out;
  }

 private:
  bool try_generator(const Fq2& g) {
    std::map<Fq2, long> table;
    Fq2 x{1, 0};
    for (long k = 0; k < order_; ++k) {
      if (!table.emplace(x, k).second) return false;
      x = mul(x, g, q_);
    }
    log_ = std::move(table);
    return true;
  }

  long q_;
  long order_;
  std::map<Fq2, long> log_;
  long omega_k_ = 0;
};

}  // namespace oracle
