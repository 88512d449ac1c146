#pragma once

// Hypotheses on prime pairs and triples. Every condition is evaluated and
// recorded; a failure raises IneligibleTriple listing all violations.

#include <optional>
#include <string>
#include <vector>

#include "tsym/eisenstein.hpp"
#include "tsym/residue.hpp"

namespace tsym {

struct ConditionCheck {
  std::string condition;  // e.g. "OneMod4(13)"
  std::string failure;    // e.g. "NotOneMod4(13)"
  bool holds = false;
};

struct TripleContext {
  int ell = 0;
  BigInt p1, p2, p3;  // normalized (negative) for ell = 3
  std::vector<ConditionCheck> checks;

  BigInt q3() const { return abs(p3); }
};

struct PairContext {
  int ell = 0;
  BigInt p1, p2;
  std::vector<ConditionCheck> checks;
};

namespace detail {

class ConditionLog {
 public:
  void record(std::string condition, std::string failure, bool holds) {
    checks_.push_back({std::move(condition), std::move(failure), holds});
  }
  void fail(std::string failure) { record(failure, failure, false); }

  std::vector<std::string> violations() const {
    std::vector<std::string> out;
    for (const auto& c : checks_) {
      if (!c.holds) out.push_back(c.failure);
    }
    return out;
  }
  void throw_if_violated() const {
    auto v = violations();
    if (!v.empty()) throw IneligibleTriple(std::move(v));
  }
  std::vector<ConditionCheck> take() { return std::move(checks_); }

 private:
  std::vector<ConditionCheck> checks_;
};

inline void require_ell(int ell) {
  if (ell != 2 && ell != 3) {
    throw Error(ErrorCode::InvalidArgument, "ell must be 2 or 3, got " + std::to_string(ell));
  }
}

/// Normalizes an l = 3 input (positive rational prime or its normalized
/// negative associate), logging the per-prime conditions.
inline std::optional<BigInt> normalize_logged(const BigInt& input, ConditionLog& log) {
  const std::string tag = "(" + input.get_str() + ")";
  const BigInt q = abs(input);
  bool prime = false;
  try {
    prime = is_prime(q);
  } catch (const Error& e) {
    log.fail(std::string(e.name()) + tag);
    return std::nullopt;
  }
  log.record("Prime" + tag, "NotPrime" + tag, prime);
  if (!prime) return std::nullopt;
  const bool inert = mod_small(q, 3) == 2;
  log.record("Inert" + tag, "NotInert" + tag, inert);
  if (!inert) return std::nullopt;
  const bool norm_ok = mod_small(q * q, 9) == 1;
  log.record("NormOneMod9" + tag, "NormNotOneMod9" + tag, norm_ok);
  if (!norm_ok) return std::nullopt;
  const NormalizedPrimeL3 np = normalize_prime_l3(q);
  const bool normalized = input > 0 || input == np.p;
  log.record("Normalized" + tag, "NotNormalized" + tag, normalized);
  if (!normalized) return std::nullopt;
  return np.p;
}

inline bool check_prime_l2(const BigInt& p, ConditionLog& log) {
  const std::string tag = "(" + p.get_str() + ")";
  bool prime = false;
  try {
    prime = p > 0 && is_prime(p);
  } catch (const Error& e) {
    log.fail(std::string(e.name()) + tag);
    return false;
  }
  log.record("Prime" + tag, "NotPrime" + tag, prime);
  if (!prime) return false;
  const bool one_mod_4 = mod_small(p, 4) == 1;
  log.record("OneMod4" + tag, "NotOneMod4" + tag, one_mod_4);
  return one_mod_4;
}

/// Pairwise conditions over the primes that passed their individual checks.
inline void check_pairwise(int ell, const std::vector<std::optional<BigInt>>& primes, ConditionLog& log) {
  for (std::size_t i = 0; i < primes.size(); ++i) {
    for (std::size_t j = i + 1; j < primes.size(); ++j) {
      if (!primes[i] || !primes[j]) continue;
      const std::string tag = "(" + primes[i]->get_str() + "," + primes[j]->get_str() + ")";
      log.record("Distinct" + tag, "NotDistinct" + tag, *primes[i] != *primes[j]);
    }
  }
  for (std::size_t i = 0; i < primes.size(); ++i) {
    for (std::size_t j = 0; j < primes.size(); ++j) {
      if (i == j || !primes[i] || !primes[j] || *primes[i] == *primes[j]) continue;
      const BigInt& a = *primes[i];
      const BigInt& b = *primes[j];
      const std::string tag = "(" + a.get_str() + "|" + b.get_str() + ")";
      if (ell == 2) {
        log.record("QuadraticResidue" + tag, "NotQuadraticResidue" + tag, legendre(a, b) == 1);
      } else {
        log.record("CubicResidue" + tag, "NotCubicResidue" + tag,
                   cubic_character(EisensteinInt{a}, abs(b)) == 0);
      }
    }
  }
}

inline std::vector<std::optional<BigInt>> check_primes(int ell, const std::vector<BigInt>& inputs,
                                                       ConditionLog& log) {
  require_ell(ell);
  std::vector<std::optional<BigInt>> primes;
  for (const auto& p : inputs) {
    if (ell == 2) {
      primes.push_back(check_prime_l2(p, log) ? std::optional<BigInt>(p) : std::nullopt);
    } else {
      primes.push_back(normalize_logged(p, log));
    }
  }
  check_pairwise(ell, primes, log);
  return primes;
}

}  // namespace detail

/// Conditions on (p1, p2) alone: for l = 2, p_i = 1 mod 4 and (p_i/p_j) = 1;
/// for l = 3, normalized inert primes with trivial mutual cubic characters.
inline PairContext check_pair(int ell, const BigInt& p1, const BigInt& p2) {
  detail::ConditionLog log;
  auto primes = detail::check_primes(ell, {p1, p2}, log);
  log.throw_if_violated();
  return {ell, *primes[0], *primes[1], log.take()};
}

inline TripleContext check_triple(int ell, const BigInt& p1, const BigInt& p2, const BigInt& p3) {
  detail::ConditionLog log;
  auto primes = detail::check_primes(ell, {p1, p2, p3}, log);
  log.throw_if_violated();
  return {ell, *primes[0], *primes[1], *primes[2], log.take()};
}

}  // namespace tsym
