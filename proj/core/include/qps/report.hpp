#pragma once

#include <limits>
#include <string>
#include <vector>

namespace qps {

enum class SolveStatus {
  Converged,
  MaxIterations,
  CycleDetected,
  Infeasible,
  Singular,
};

const char* to_string(SolveStatus status);

/// One solver iteration, as recorded in SolveReport::trace.
struct IterationLog {
  int k = 0;
  double mu = 0.0;             // duality / complementarity measure where defined
  double residual = 0.0;       // combined residual norm
  double alpha_pri = 0.0;
  double alpha_dual = 0.0;
  double sigma = 0.0;          // centering parameter (interior point only)
  double contraction_gap = 0.0;  // | r_b_next - (1-alpha_pri) r_b | (LP only)
};

struct SolveReport {
  std::string method;
  SolveStatus status = SolveStatus::MaxIterations;
  int iterations = 0;

  // Outer-loop counters for the Lagrangian infeasible active-set method.
  int lambda_updates = 0;
  int inner_iterations = 0;
  int direct_iterations = 0;

  // Working-set churn for the feasible active-set method.
  int working_set_adds = 0;
  int working_set_drops = 0;

  double objective = std::numeric_limits<double>::quiet_NaN();
  double final_residual = std::numeric_limits<double>::quiet_NaN();
  double wall_seconds = 0.0;

  std::vector<IterationLog> trace;
};

inline const char* to_string(SolveStatus status) {
  switch (status) {
    case SolveStatus::Converged: return "converged";
    case SolveStatus::MaxIterations: return "max-iterations";
    case SolveStatus::CycleDetected: return "cycle-detected";
    case SolveStatus::Infeasible: return "infeasible";
    case SolveStatus::Singular: return "singular";
  }
  return "unknown";
}

}  // namespace qps
