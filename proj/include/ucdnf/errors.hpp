// Error taxonomy shared by the library and the CLI exit-code contract.
#pragma once

#include <stdexcept>
#include <string>

namespace ucdnf {

enum class Errc {
  // usage / argument problems (CLI exit 1)
  Usage,
  // input validation (CLI exit 2)
  Validation,
  ParseError,
  NotPrime,
  NotInSigma,
  NotTotal,
  EmptyEdgeSet,
  NotIntersecting,
  InvalidCover,
  NotApplicable,
  GeometryInvalid,
  XNotStar,
  // budget exhaustion (CLI exit 3)
  BudgetExceeded,
  SizeCapExceeded,
  TooLarge,
  ConstructionFailed,
  Undetermined,
  // verification failures (CLI exit 4)
  CheckFailed,
  GateFailed,
  LpNumericalFailure,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::Usage: return "USAGE";
    case Errc::Validation: return "VALIDATION";
    case Errc::ParseError: return "PARSE_ERROR";
    case Errc::NotPrime: return "NOT_PRIME";
    case Errc::NotInSigma: return "NOT_IN_SIGMA";
    case Errc::NotTotal: return "NOT_TOTAL";
    case Errc::EmptyEdgeSet: return "EMPTY_EDGE_SET";
    case Errc::NotIntersecting: return "NOT_INTERSECTING";
    case Errc::InvalidCover: return "INVALID_COVER";
    case Errc::NotApplicable: return "NOT_APPLICABLE";
    case Errc::GeometryInvalid: return "GEOMETRY_INVALID";
    case Errc::XNotStar: return "X_NOT_STAR";
    case Errc::BudgetExceeded: return "BUDGET_EXCEEDED";
    case Errc::SizeCapExceeded: return "SIZE_CAP_EXCEEDED";
    case Errc::TooLarge: return "TOO_LARGE";
    case Errc::ConstructionFailed: return "CONSTRUCTION_FAILED";
    case Errc::Undetermined: return "UNDETERMINED";
    case Errc::CheckFailed: return "CHECK_FAILED";
    case Errc::GateFailed: return "GATE_FAILED";
    case Errc::LpNumericalFailure: return "LP_NUMERICAL_FAILURE";
  }
  return "UNKNOWN";
}

// Exit-code contract: 0 ok, 1 usage, 2 validation, 3 budget, 4 failed check.
inline int errc_exit_code(Errc c) {
  switch (c) {
    case Errc::Usage:
      return 1;
    case Errc::Validation:
    case Errc::ParseError:
    case Errc::NotPrime:
    case Errc::NotInSigma:
    case Errc::NotTotal:
    case Errc::EmptyEdgeSet:
    case Errc::NotIntersecting:
    case Errc::InvalidCover:
    case Errc::NotApplicable:
    case Errc::GeometryInvalid:
    case Errc::XNotStar:
      return 2;
    case Errc::BudgetExceeded:
    case Errc::SizeCapExceeded:
    case Errc::TooLarge:
    case Errc::ConstructionFailed:
    case Errc::Undetermined:
      return 3;
    case Errc::CheckFailed:
    case Errc::GateFailed:
    case Errc::LpNumericalFailure:
      return 4;
  }
  return 1;
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}
  Errc code() const { return code_; }
  int exit_code() const { return errc_exit_code(code_); }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc c, const std::string& msg) { throw Error(c, msg); }

}  // namespace ucdnf
