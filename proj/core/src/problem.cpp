#include "qps/problem.hpp"

#include "qps/errors.hpp"
#include "qps/log.hpp"

#include <cmath>

namespace qps {

namespace {

void require(bool cond, const std::string& what) {
  if (!cond) fail(ErrorCode::DimensionMismatch, what);
}

}  // namespace

void normalize(QpProblem& p) {
  const Index n = p.d.size();
  require(p.Q.rows() == n && p.Q.cols() == n, "Q must be n x n");
  require(p.E.cols() == n || p.E.rows() == 0, "E column count");
  require(p.c_eq.size() == p.E.rows(), "c_eq length vs E rows");
  require(p.G.cols() == n || p.G.rows() == 0, "G column count");
  require(p.c_in.size() == p.G.rows(), "c_in length vs G rows");
  require(static_cast<Index>(p.sense.size()) == p.G.rows(), "sense length vs G rows");
  require(p.lb.size() == n && p.ub.size() == n, "bound lengths");
  for (Index i = 0; i < n; ++i) {
    if (p.lb[i] > p.ub[i]) fail(ErrorCode::InvalidArgument, "lb > ub at index " + std::to_string(i));
  }

  const double scale = p.Q.size() > 0 ? p.Q.cwiseAbs().maxCoeff() : 0.0;
  const double asym = (p.Q - p.Q.transpose()).cwiseAbs().maxCoeff();
  if (asym > 0.0) {
    p.Q = ((p.Q + p.Q.transpose()) / 2.0).eval();
    if (asym > 1e-12 * scale) {
      p.symmetrized = true;
      log_info("symmetrized quadratic term, asymmetry ", asym, " exceeded 1e-12 * ", scale);
    }
  }
}

QpProblem make_unconstrained(Matrix Q, Vector d) {
  QpProblem p;
  const Index n = d.size();
  p.Q = std::move(Q);
  p.d = std::move(d);
  p.E.resize(0, n);
  p.c_eq.resize(0);
  p.G.resize(0, n);
  p.c_in.resize(0);
  p.lb = Vector::Constant(n, -kInf);
  p.ub = Vector::Constant(n, kInf);
  normalize(p);
  return p;
}

double objective(const Matrix& Q, const Vector& d, const Vector& x) {
  return 0.5 * x.dot(Q * x) + d.dot(x);
}

double objective(const QpProblem& p, const Vector& x) { return objective(p.Q, p.d, x); }

QpProblem bounds_to_rows(const QpProblem& p) {
  const Index n = p.num_vars();
  Index extra = 0;
  for (Index i = 0; i < n; ++i) {
    if (std::isfinite(p.lb[i])) ++extra;
    if (std::isfinite(p.ub[i])) ++extra;
  }

  QpProblem out = p;
  out.lb = Vector::Constant(n, -kInf);
  out.ub = Vector::Constant(n, kInf);
  if (extra == 0) return out;

  const Index m0 = p.G.rows();
  out.G.conservativeResize(m0 + extra, n);
  out.c_in.conservativeResize(m0 + extra);
  out.sense.reserve(m0 + extra);
  Index r = m0;
  for (Index i = 0; i < n; ++i) {
    if (std::isfinite(p.lb[i])) {
      out.G.row(r).setZero();
      out.G(r, i) = 1.0;
      out.c_in[r] = p.lb[i];
      out.sense.push_back(RowSense::GreaterEq);
      ++r;
    }
    if (std::isfinite(p.ub[i])) {
      out.G.row(r).setZero();
      out.G(r, i) = 1.0;
      out.c_in[r] = p.ub[i];
      out.sense.push_back(RowSense::LessEq);
      ++r;
    }
  }
  return out;
}

StandardFormQp to_standard_form(const QpProblem& p) {
  const QpProblem rows = bounds_to_rows(p);
  const Index n = rows.num_vars();
  const Index k = rows.num_eq();
  const Index q = rows.num_ineq();
  const Index nbar = 2 * n + q;

  // Inequalities enter as a x + z = c with z >= 0, which is the <= sense;
  // >= rows are flipped.
  Matrix A_iota = rows.G;
  Vector c_iota = rows.c_in;
  for (Index i = 0; i < q; ++i) {
    if (rows.sense[i] == RowSense::GreaterEq) {
      A_iota.row(i) = -A_iota.row(i);
      c_iota[i] = -c_iota[i];
    }
  }

  StandardFormQp sf;
  sf.Qbar = Matrix::Zero(nbar, nbar);
  sf.Qbar.topLeftCorner(n, n) = rows.Q;
  sf.Qbar.block(n, n, n, n) = rows.Q;

  sf.dbar = Vector::Zero(nbar);
  sf.dbar.head(n) = rows.d;
  sf.dbar.segment(n, n) = -rows.d;

  sf.B = Matrix::Zero(k + q, nbar);
  sf.B.topLeftCorner(k, n) = rows.E;
  sf.B.block(0, n, k, n) = -rows.E;
  sf.B.block(k, 0, q, n) = A_iota;
  sf.B.block(k, n, q, n) = -A_iota;
  sf.B.block(k, 2 * n, q, q) = Matrix::Identity(q, q);

  sf.c.resize(k + q);
  sf.c.head(k) = rows.c_eq;
  sf.c.tail(q) = c_iota;

  sf.recover = RecoverMap{n, q};
  return sf;
}

Vector recover_solution(const StandardFormQp& sf, const Vector& xbar) {
  const Index n = sf.recover.n;
  if (xbar.size() != 2 * n + sf.recover.slacks) {
    fail(ErrorCode::DimensionMismatch, "split-form vector has wrong length");
  }
  return xbar.head(n) - xbar.segment(n, n);
}

InequalityQp to_inequality_ge(const QpProblem& p) {
  const QpProblem rows = bounds_to_rows(p);
  const Index n = rows.num_vars();
  const Index k = rows.num_eq();
  const Index q = rows.num_ineq();

  InequalityQp out;
  out.Q = rows.Q;
  out.d = rows.d;
  out.A.resize(q + 2 * k, n);
  out.c.resize(q + 2 * k);
  for (Index i = 0; i < q; ++i) {
    if (rows.sense[i] == RowSense::GreaterEq) {
      out.A.row(i) = rows.G.row(i);
      out.c[i] = rows.c_in[i];
    } else {
      out.A.row(i) = -rows.G.row(i);
      out.c[i] = -rows.c_in[i];
    }
  }
  // Each equality row contributes an opposing >= pair.
  out.A.block(q, 0, k, n) = rows.E;
  out.c.segment(q, k) = rows.c_eq;
  out.A.block(q + k, 0, k, n) = -rows.E;
  out.c.segment(q + k, k) = -rows.c_eq;
  return out;
}

bool is_box_eq(const QpProblem& p) { return p.num_ineq() == 0; }

BoxEqQp to_box_eq(const QpProblem& p) {
  if (!is_box_eq(p)) {
    fail(ErrorCode::InvalidArgument,
         "problem has general inequality rows; not an equality-plus-box problem");
  }
  return BoxEqQp{p.Q, p.d, p.E, p.c_eq, p.ub, p.lb};
}

QpProblem from_box_eq(const BoxEqQp& box) {
  QpProblem p;
  const Index n = box.d.size();
  p.Q = box.Q;
  p.d = box.d;
  p.E = box.B;
  p.c_eq = box.c;
  p.G.resize(0, n);
  p.c_in.resize(0);
  p.lb = box.b;
  p.ub = box.a;
  normalize(p);
  return p;
}

double kkt_residual(const BoxEqQp& p, const KktSolution& sol) {
  const Index n = p.d.size();
  const Vector& x = sol.x;
  const Vector stat = p.B.transpose() * sol.lambda + p.Q * x + p.d + sol.s + sol.t;
  double r = stat.cwiseAbs().maxCoeff();
  if (p.B.rows() > 0) r = std::max(r, (p.B * x - p.c).cwiseAbs().maxCoeff());

  for (Index i = 0; i < n; ++i) {
    // Complementarity terms are skipped for exactly-zero multipliers so that
    // infinite bounds do not produce 0 * inf.
    if (sol.s[i] != 0.0) r = std::max(r, std::abs(sol.s[i] * (x[i] - p.b[i])));
    if (sol.t[i] != 0.0) r = std::max(r, std::abs(sol.t[i] * (x[i] - p.a[i])));
    if (std::isfinite(p.b[i])) r = std::max(r, p.b[i] - x[i]);
    if (std::isfinite(p.a[i])) r = std::max(r, x[i] - p.a[i]);
    r = std::max(r, sol.s[i]);   // s must be <= 0
    r = std::max(r, -sol.t[i]);  // t must be >= 0
  }

  double data = p.d.size() > 0 ? p.d.cwiseAbs().maxCoeff() : 0.0;
  if (p.Q.size() > 0) data = std::max(data, p.Q.cwiseAbs().maxCoeff());
  if (p.B.size() > 0) data = std::max(data, p.B.cwiseAbs().maxCoeff());
  if (p.c.size() > 0) data = std::max(data, p.c.cwiseAbs().maxCoeff());
  return r / (1.0 + data);
}

}  // namespace qps
