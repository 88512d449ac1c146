#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tsym {

enum class ErrorCode {
  InvalidArgument,
  DivisorZero,
  NotPrime,
  PrimeOutOfRange,
  NotInert,
  NormNotOneMod9,
  NotNormalized,
  NonResidue,
  CharacterUndefined,
  NotCubeRootOfUnity,
  NoCubeRoot,
  NotSplit,
  IneligibleTriple,
  InputsEqual,
  NotFoundWithinBound,
  AssumptionANotWitnessed,
  DegenerateTheta,
  ThetaNotUnitAtP3,
  DegenerateZ,
  RhoUndefined,
  ReciprocityNotTestable,
  PartialOrbit,
  InternalInvariantViolation,
};

constexpr std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::DivisorZero: return "DivisorZero";
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::PrimeOutOfRange: return "PrimeOutOfRange";
    case ErrorCode::NotInert: return "NotInert";
    case ErrorCode::NormNotOneMod9: return "NormNotOneMod9";
    case ErrorCode::NotNormalized: return "NotNormalized";
    case ErrorCode::NonResidue: return "NonResidue";
    case ErrorCode::CharacterUndefined: return "CharacterUndefined";
    case ErrorCode::NotCubeRootOfUnity: return "NotCubeRootOfUnity";
    case ErrorCode::NoCubeRoot: return "NoCubeRoot";
    case ErrorCode::NotSplit: return "NotSplit";
    case ErrorCode::IneligibleTriple: return "IneligibleTriple";
    case ErrorCode::InputsEqual: return "InputsEqual";
    case ErrorCode::NotFoundWithinBound: return "NotFoundWithinBound";
    case ErrorCode::AssumptionANotWitnessed: return "AssumptionANotWitnessed";
    case ErrorCode::DegenerateTheta: return "DegenerateTheta";
    case ErrorCode::ThetaNotUnitAtP3: return "ThetaNotUnitAtP3";
    case ErrorCode::DegenerateZ: return "DegenerateZ";
    case ErrorCode::RhoUndefined: return "RhoUndefined";
    case ErrorCode::ReciprocityNotTestable: return "ReciprocityNotTestable";
    case ErrorCode::PartialOrbit: return "PartialOrbit";
    case ErrorCode::InternalInvariantViolation: return "InternalInvariantViolation";
  }
  return "Unknown";
}

/// Domain error raised by every tsym operation. The code is stable and is what
/// the CLI prints in a report row's status column.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(error_name(code)) + (detail.empty() ? "" : ": " + detail)),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }
  std::string_view name() const noexcept { return error_name(code_); }

 private:
  ErrorCode code_;
};

/// Eligibility failure carrying every violated condition, e.g. "NotInert(-19)".
class IneligibleTriple : public Error {
 public:
  explicit IneligibleTriple(std::vector<std::string> violations)
      : Error(ErrorCode::IneligibleTriple, join(violations)), violations_(std::move(violations)) {}

  const std::vector<std::string>& violations() const noexcept { return violations_; }

 private:
  static std::string join(const std::vector<std::string>& v) {
    std::string out;
    for (const auto& s : v) {
      if (!out.empty()) out += ", ";
      out += s;
    }
    return out;
  }

  std::vector<std::string> violations_;
};

}  // namespace tsym
