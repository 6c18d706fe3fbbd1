#include "qps/block_ldlt.hpp"

#include "qps/errors.hpp"

#include <cmath>

namespace qps {

namespace {
// Bounded element growth threshold for 1x1 vs 2x2 pivot selection.
const double kAlpha = (1.0 + std::sqrt(17.0)) / 8.0;
}  // namespace

BlockLdlt::BlockLdlt(const Matrix& S) {
  if (S.rows() != S.cols()) fail(ErrorCode::DimensionMismatch, "matrix must be square");
  n_ = S.rows();
  lb_ = S;
  perm_.resize(n_);
  for (Index i = 0; i < n_; ++i) perm_[i] = i;

  const double norm = n_ > 0 ? S.cwiseAbs().maxCoeff() : 0.0;
  const double tiny = std::numeric_limits<double>::epsilon() * std::max<double>(n_, 1) * norm;

  auto swap_rows_cols = [&](Index a, Index b) {
    if (a == b) return;
    lb_.row(a).swap(lb_.row(b));
    lb_.col(a).swap(lb_.col(b));
    std::swap(perm_[a], perm_[b]);
  };

  Index k = 0;
  while (k < n_) {
    if (k == n_ - 1) {
      blocks_.push_back(1);
      if (std::abs(lb_(k, k)) <= tiny) ok_ = false;
      ++k;
      continue;
    }

    // Largest off-diagonal magnitude in column k below the diagonal.
    Index r = k;
    double lambda = 0.0;
    for (Index i = k + 1; i < n_; ++i) {
      const double v = std::abs(lb_(i, k));
      if (v > lambda) {
        lambda = v;
        r = i;
      }
    }

    int pivot = 1;
    const double akk = std::abs(lb_(k, k));
    if (akk >= kAlpha * lambda || lambda == 0.0) {
      pivot = 1;  // diagonal entry is big enough
    } else {
      // Largest magnitude in row/column r (excluding the diagonal).
      double sigma = 0.0;
      for (Index i = k; i < n_; ++i) {
        if (i == r) continue;
        const double v = std::abs(i > r ? lb_(i, r) : lb_(r, i));
        sigma = std::max(sigma, v);
      }
      if (akk * sigma >= kAlpha * lambda * lambda) {
        pivot = 1;
      } else if (std::abs(lb_(r, r)) >= kAlpha * sigma) {
        swap_rows_cols(k, r);
        pivot = 1;
      } else {
        swap_rows_cols(k + 1, r);
        pivot = 2;
      }
    }

    if (pivot == 1) {
      const double d = lb_(k, k);
      if (std::abs(d) <= tiny) {
        ok_ = false;
        blocks_.push_back(1);
        ++k;
        continue;
      }
      const Index rest = n_ - k - 1;
      if (rest > 0) {
        Vector col = lb_.col(k).segment(k + 1, rest);
        Vector l = col / d;
        lb_.block(k + 1, k + 1, rest, rest).noalias() -= l * col.transpose();
        lb_.col(k).segment(k + 1, rest) = l;
      }
      blocks_.push_back(1);
      ++k;
    } else {
      const double a = lb_(k, k);
      const double b = lb_(k + 1, k);
      const double c = lb_(k + 1, k + 1);
      const double det = a * c - b * b;
      if (std::abs(det) <= tiny * std::max({std::abs(a), std::abs(b), std::abs(c), 1.0})) {
        ok_ = false;
        blocks_.push_back(2);
        k += 2;
        continue;
      }
      const Index rest = n_ - k - 2;
      if (rest > 0) {
        Matrix C = lb_.block(k + 2, k, rest, 2);
        // C * inv([a b; b c]) via the adjugate.
        Matrix L2(rest, 2);
        L2.col(0) = (C.col(0) * c - C.col(1) * b) / det;
        L2.col(1) = (C.col(1) * a - C.col(0) * b) / det;
        lb_.block(k + 2, k + 2, rest, rest).noalias() -= L2 * C.transpose();
        lb_.block(k + 2, k, rest, 2) = L2;
      }
      blocks_.push_back(2);
      k += 2;
    }
  }
}

Vector BlockLdlt::solve(const Vector& rhs) const {
  if (rhs.size() != n_) fail(ErrorCode::DimensionMismatch, "rhs length");
  if (!ok_) fail(ErrorCode::SingularKkt, "factorization has a singular pivot block");

  // z = P' rhs
  Vector z(n_);
  for (Index i = 0; i < n_; ++i) z[i] = rhs[perm_[i]];

  // L z = z (unit lower, block column structure)
  Index k = 0;
  for (int bs : blocks_) {
    for (int j = 0; j < bs; ++j) {
      const Index col = k + j;
      for (Index i = k + bs; i < n_; ++i) z[i] -= lb_(i, col) * z[col];
    }
    k += bs;
  }

  // B zhat = z (block diagonal)
  k = 0;
  for (int bs : blocks_) {
    if (bs == 1) {
      z[k] /= lb_(k, k);
    } else {
      const double a = lb_(k, k);
      const double b = lb_(k + 1, k);
      const double c = lb_(k + 1, k + 1);
      const double det = a * c - b * b;
      const double z0 = z[k], z1 = z[k + 1];
      z[k] = (c * z0 - b * z1) / det;
      z[k + 1] = (a * z1 - b * z0) / det;
    }
    k += bs;
  }

  // L' zbar = zhat
  k = n_;
  for (auto it = blocks_.rbegin(); it != blocks_.rend(); ++it) {
    const int bs = *it;
    k -= bs;
    for (int j = bs - 1; j >= 0; --j) {
      const Index col = k + j;
      double acc = 0.0;
      for (Index i = k + bs; i < n_; ++i) acc += lb_(i, col) * z[i];
      z[col] -= acc;
    }
  }

  // solution = P zbar
  Vector x(n_);
  for (Index i = 0; i < n_; ++i) x[perm_[i]] = z[i];
  return x;
}

Matrix BlockLdlt::unit_lower() const {
  Matrix L = Matrix::Identity(n_, n_);
  Index k = 0;
  for (int bs : blocks_) {
    for (int j = 0; j < bs; ++j) {
      const Index col = k + j;
      for (Index i = k + bs; i < n_; ++i) L(i, col) = lb_(i, col);
    }
    k += bs;
  }
  return L;
}

Matrix BlockLdlt::block_diagonal() const {
  Matrix B = Matrix::Zero(n_, n_);
  Index k = 0;
  for (int bs : blocks_) {
    B(k, k) = lb_(k, k);
    if (bs == 2) {
      B(k + 1, k) = B(k, k + 1) = lb_(k + 1, k);
      B(k + 1, k + 1) = lb_(k + 1, k + 1);
    }
    k += bs;
  }
  return B;
}

}  // namespace qps
