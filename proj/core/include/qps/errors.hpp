#pragma once

#include <stdexcept>
#include <string>

namespace qps {

enum class ErrorCode {
  DimensionMismatch,
  SingularKkt,
  NotPositiveDefinite,
  SingularSchur,
  RankDeficientA,
  ReducedHessianNotPd,
  SingularNormalEquations,
  SingularNewtonMatrix,
  DependentConstraint,
  NotInWorkingSet,
  InfeasibleStart,
  PresumedInfeasible,
  PartitionViolation,
  InvalidArgument,
};

const char* to_string(ErrorCode code);

/// Thrown for structural and numerical failures that callers cannot recover
/// from within the same solve (rank deficiency, singular pivots, bad inputs).
/// Recoverable outcomes (iteration limits, detected cycles) are reported as
/// SolveStatus instead.
class SolverError : public std::runtime_error {
 public:
  SolverError(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw SolverError(code, what);
}

inline const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::SingularKkt: return "SingularKkt";
    case ErrorCode::NotPositiveDefinite: return "NotPositiveDefinite";
    case ErrorCode::SingularSchur: return "SingularSchur";
    case ErrorCode::RankDeficientA: return "RankDeficientA";
    case ErrorCode::ReducedHessianNotPd: return "ReducedHessianNotPd";
    case ErrorCode::SingularNormalEquations: return "SingularNormalEquations";
    case ErrorCode::SingularNewtonMatrix: return "SingularNewtonMatrix";
    case ErrorCode::DependentConstraint: return "DependentConstraint";
    case ErrorCode::NotInWorkingSet: return "NotInWorkingSet";
    case ErrorCode::InfeasibleStart: return "InfeasibleStart";
    case ErrorCode::PresumedInfeasible: return "PresumedInfeasible";
    case ErrorCode::PartitionViolation: return "PartitionViolation";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "UnknownError";
}

/// Parse failure for problem files; carries the 1-based line number.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

}  // namespace qps
