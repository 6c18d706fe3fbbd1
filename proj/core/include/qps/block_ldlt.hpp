#pragma once

#include "qps/types.hpp"

#include <vector>

namespace qps {

/// Symmetric indefinite factorization  P'SP = L B L'  with unit lower
/// triangular L and block diagonal B of 1x1 / 2x2 pivots, chosen by the
/// bounded-growth pivoting rule with threshold (1+sqrt(17))/8.
///
/// Solves run the four-step scheme: forward substitution through L,
/// a block-diagonal solve, backward substitution through L', and the
/// permutation applied on both ends.
class BlockLdlt {
 public:
  explicit BlockLdlt(const Matrix& S);

  /// False when some pivot block was numerically singular; solve() refuses
  /// to run in that case.
  bool ok() const { return ok_; }

  Vector solve(const Vector& rhs) const;

  /// Row/column permutation P as an index map: permuted index k came from
  /// original index perm()[k].
  const std::vector<Index>& perm() const { return perm_; }

  /// Pivot block sizes in elimination order (each 1 or 2).
  const std::vector<int>& block_sizes() const { return blocks_; }

  Matrix unit_lower() const;
  Matrix block_diagonal() const;

 private:
  Index n_ = 0;
  bool ok_ = true;
  Matrix lb_;                 // L strictly below the diagonal, B on the (block) diagonal
  std::vector<Index> perm_;
  std::vector<int> blocks_;
};

}  // namespace qps
