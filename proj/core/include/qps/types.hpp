#pragma once

#include <Eigen/Dense>

#include <limits>
#include <vector>

namespace qps {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;
using Index = Eigen::Index;
using IndexList = std::vector<Index>;

/// Unbounded marker for box bounds. Step-length and active-set logic tests
/// against this exactly (via std::isinf), never against a large finite value.
inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// Eigenvalue sign counts (positive, negative, zero) of a symmetric matrix.
struct Inertia {
  int positive = 0;
  int negative = 0;
  int zero = 0;

  friend bool operator==(const Inertia&, const Inertia&) = default;
};

}  // namespace qps
