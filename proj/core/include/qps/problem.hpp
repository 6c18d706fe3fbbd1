#pragma once

#include "qps/types.hpp"

#include <vector>

namespace qps {

enum class RowSense { LessEq, GreaterEq };

/// General convex quadratic program
///
///   min 1/2 x'Qx + d'x
///   s.t. E x = c_eq
///        G x {<=,>=} c_in   (sense per row)
///        lb <= x <= ub      (entries may be +-infinity)
///
/// Q is kept symmetric; use normalize() after filling fields by hand.
/// Instances are treated as immutable once constructed, so they can be
/// shared across concurrent solver invocations.
struct QpProblem {
  Matrix Q;
  Vector d;
  Matrix E;
  Vector c_eq;
  Matrix G;
  Vector c_in;
  std::vector<RowSense> sense;  // one entry per row of G
  Vector lb;
  Vector ub;

  Index num_vars() const { return d.size(); }
  Index num_eq() const { return E.rows(); }
  Index num_ineq() const { return G.rows(); }

  bool symmetrized = false;  // set when normalize() had to repair Q
};

/// Validates dimensions and bound ordering, symmetrizes Q as (Q+Q')/2.
/// Logs a warning (and sets p.symmetrized) if the asymmetry exceeds
/// 1e-12 * max|Q|. Throws SolverError(DimensionMismatch) on bad shapes.
void normalize(QpProblem& p);

/// Convenience constructor for problems without rows or bounds.
QpProblem make_unconstrained(Matrix Q, Vector d);

double objective(const Matrix& Q, const Vector& d, const Vector& x);
double objective(const QpProblem& p, const Vector& x);

/// Layout bookkeeping for the split/slack transformation:
/// variables are [x_plus (n), x_minus (n), z (slacks q)].
struct RecoverMap {
  Index n = 0;       // original variable count
  Index slacks = 0;  // q, one per inequality row after bounds were folded in
};

/// All-equality nonnegative form
///
///   min 1/2 xbar' Qbar xbar + dbar' xbar
///   s.t. B xbar = c,  xbar >= 0
///
/// with Qbar = blockdiag(Q, Q, 0) over the [x_plus, x_minus, z] layout.
struct StandardFormQp {
  Matrix Qbar;
  Vector dbar;
  Matrix B;
  Vector c;
  bool nonneg = true;
  RecoverMap recover;
};

/// Equality plus box form
///
///   min 1/2 x'Qx + d'x   s.t.  B x = c,  b <= x <= a.
struct BoxEqQp {
  Matrix Q;
  Vector d;
  Matrix B;
  Vector c;
  Vector a;  // upper bounds
  Vector b;  // lower bounds
};

/// Primal point with equality multipliers and bound multipliers under
/// the convention  B'lambda + Qx + d + s + t = 0,  s <= 0 (lower bounds),
/// t >= 0 (upper bounds).
struct KktSolution {
  Vector x;
  Vector lambda;
  Vector s;
  Vector t;
};

/// Inequality-only form  min 1/2 x'Qx + d'x  s.t.  A x >= c,
/// consumed by the interior-point and feasible active-set solvers.
struct InequalityQp {
  Matrix Q;
  Vector d;
  Matrix A;
  Vector c;
};

/// Splits x into nonnegative parts and adds one slack per inequality row.
/// Finite box bounds are folded into rows first. Feasible sets correspond
/// under x = x_plus - x_minus; objectives agree on complementary splits.
StandardFormQp to_standard_form(const QpProblem& p);

/// Maps a standard-form point back to the original variables, x = x_plus - x_minus.
Vector recover_solution(const StandardFormQp& sf, const Vector& xbar);

/// Rewrites every finite box bound as an inequality row; the returned
/// problem has all-infinite bounds and an identical feasible set.
QpProblem bounds_to_rows(const QpProblem& p);

/// Normalizes to A x >= c: inequality rows are flipped to the >= sense,
/// finite bounds become rows, and each equality row becomes a >=/<= pair.
InequalityQp to_inequality_ge(const QpProblem& p);

/// True when the problem has no general inequality rows, i.e. it already
/// is an equality-plus-box problem.
bool is_box_eq(const QpProblem& p);

BoxEqQp to_box_eq(const QpProblem& p);
QpProblem from_box_eq(const BoxEqQp& p);

/// Max-norm residual of the full first-order system for the box-equality
/// form (stationarity, equality rows, complementarity, bound and sign
/// violations), scaled by 1/(1 + data norms). Independent of any solver
/// internals; also used as the LIASM termination test.
double kkt_residual(const BoxEqQp& p, const KktSolution& sol);

}  // namespace qps
