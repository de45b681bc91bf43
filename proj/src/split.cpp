#include "posmap/split.hpp"

#include "posmap/matrix.hpp"
#include "posmap/peel.hpp"
#include "posmap/rng.hpp"

#include <cmath>
#include <optional>
#include <string>

namespace posmap {

namespace {

void require_hermitian(const ChoiMatrix& c, const char* what) {
  if (!c.is_hermitian()) throw DimensionError(std::string(what) + ": Choi matrix is not Hermitian");
}

Matrix psd_clip(const Matrix& h) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver((h + h.adjoint()) / 2.0);
  RealVector vals = solver.eigenvalues().cwiseMax(0.0);
  Matrix out = solver.eigenvectors() * vals.asDiagonal() * solver.eigenvectors().adjoint();
  return (out + out.adjoint()) / 2.0;
}

double min_eig(const Matrix& h) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver((h + h.adjoint()) / 2.0, Eigen::EigenvaluesOnly);
  return solver.eigenvalues()(0);
}

struct DykstraOutcome {
  bool converged = false;
  Matrix p;
  Matrix q;
  double gap = 0.0;
  int iterations = 0;
  std::vector<double> gap_history;
};

DykstraOutcome run_dykstra(const Matrix& c, int m, int n, Matrix p, Matrix q,
                           const SplitOptions& opts) {
  const double scale = std::max(1.0, c.norm());
  const Eigen::Index d = c.rows();
  Matrix corr_p = Matrix::Zero(d, d);
  Matrix corr_q = Matrix::Zero(d, d);

  DykstraOutcome out;
  out.gap_history.reserve(opts.max_iters);
  double best_gap = std::numeric_limits<double>::infinity();
  std::vector<double> best_hist;  // running best, for the stall test
  best_hist.reserve(opts.max_iters);

  for (int iter = 1; iter <= opts.max_iters; ++iter) {
    // Projection onto the affine set {(P, Q) : P + Q^Gamma = C}.
    const Matrix delta = c - p - partial_transpose(q, m, n);
    p += delta / 2.0;
    q += partial_transpose(delta, m, n) / 2.0;

    // Dykstra-corrected projection onto the product cone {P >= 0} x {Q >= 0}.
    const Matrix yp = p + corr_p;
    const Matrix yq = q + corr_q;
    p = psd_clip(yp);
    q = psd_clip(yq);
    corr_p = yp - p;
    corr_q = yq - q;

    const double gap = (c - p - partial_transpose(q, m, n)).norm();
    out.gap_history.push_back(gap);
    best_gap = std::min(best_gap, gap);
    best_hist.push_back(best_gap);
    out.iterations = iter;
    out.gap = gap;

    if (gap <= opts.feas_tol * scale) {
      out.converged = true;
      out.p = p;
      out.q = q;
      return out;
    }
    if (iter > opts.stall_window &&
        best_hist[iter - 1 - opts.stall_window] - best_gap < 1e-14) {
      break;  // stalled
    }
  }
  out.p = p;
  out.q = q;
  return out;
}

}  // namespace

Decomposition split_cp_ccp(const ChoiMatrix& c, const SplitOptions& opts) {
  require_hermitian(c, "split_cp_ccp");
  if (opts.max_iters <= 0 || opts.feas_tol <= 0.0 || opts.stall_window <= 0)
    throw DimensionError("split_cp_ccp: invalid options");
  const int m = c.input_dim();
  const int n = c.output_dim();
  const Matrix cmat = (c.data() + c.data().adjoint()) / 2.0;

  Matrix half = cmat / 2.0;
  DykstraOutcome out = run_dykstra(cmat, m, n, half, half, opts);
  if (!out.converged) {
    // A feasible instance can stall on a flat spot; retry once from a
    // deterministically perturbed start before declaring infeasibility.
    Rng rng(0x5eedULL);
    const double eps = 0.05 * std::max(1.0, cmat.norm());
    Matrix p0 = half + eps * rng.hermitian_gaussian(static_cast<int>(cmat.rows()));
    Matrix q0 = half + eps * rng.hermitian_gaussian(static_cast<int>(cmat.rows()));
    DykstraOutcome retry = run_dykstra(cmat, m, n, p0, q0, opts);
    if (!retry.converged)
      throw InfeasibleError("split_cp_ccp: affine gap " + std::to_string(retry.gap) +
                                " persists after " + std::to_string(out.iterations + retry.iterations) +
                                " iterations; the matrix appears to lie outside the CP + coCP cone",
                            retry.gap, out.iterations + retry.iterations);
    out = std::move(retry);
  }

  Decomposition d;
  d.cp = std::move(out.p);
  d.ccp = std::move(out.q);
  d.residual = out.gap;
  d.min_eig_cp = min_eig(d.cp);
  d.min_eig_ccp = min_eig(d.ccp);
  d.iterations = out.iterations;
  d.gap_history = std::move(out.gap_history);
  return d;
}

Decomposition decompose_2positive_3x3(const ChoiMatrix& c, const SplitOptions& opts,
                                      const SeesawOptions& seesaw) {
  require_hermitian(c, "decompose_2positive_3x3");
  if (c.input_dim() != 3 || c.output_dim() != 3)
    throw DimensionError("decompose_2positive_3x3: map must act M3 -> M3");

  PositivityVerdict pre = check_k_positive(c, 2, seesaw);
  if (pre.refuted())
    throw RefutedInputError("decompose_2positive_3x3: input refuted as 2-positive (witness value " +
                                std::to_string(pre.min_value_found) + ")",
                            pre.min_value_found, pre.witness.value_or(Vector()));

  const int pivot = select_pivot(c);
  PeelResult peel = peel_once(c, pivot);
  Decomposition inner = split_cp_ccp(peel.unlifted, opts);

  const int n = c.output_dim();
  Decomposition d;
  d.cp = peel.cp_part.data() + lift_blocks(inner.cp, n, peel.lift_set);
  d.ccp = lift_blocks(inner.ccp, n, peel.lift_set);
  d.residual = (c.data() - d.cp - partial_transpose(d.ccp, 3, 3)).norm();
  d.min_eig_cp = min_eig(d.cp);
  d.min_eig_ccp = min_eig(d.ccp);
  d.iterations = inner.iterations;
  d.gap_history = std::move(inner.gap_history);
  return d;
}

Decomposition decompose_2copositive_3x3(const ChoiMatrix& c, const SplitOptions& opts,
                                        const SeesawOptions& seesaw) {
  require_hermitian(c, "decompose_2copositive_3x3");
  ChoiMatrix flipped = c.partially_transposed();
  Decomposition mirrored;
  try {
    mirrored = decompose_2positive_3x3(flipped, opts, seesaw);
  } catch (const RefutedInputError& e) {
    throw RefutedInputError(
        "decompose_2copositive_3x3: input refuted as 2-copositive (witness value " +
            std::to_string(e.min_value) + ")",
        e.min_value, e.witness);
  }
  // Gamma(C) = P' + Q'^Gamma  implies  C = Q' + P'^Gamma: swap the parts.
  Decomposition d;
  d.cp = std::move(mirrored.ccp);
  d.ccp = std::move(mirrored.cp);
  d.residual = (c.data() - d.cp - partial_transpose(d.ccp, 3, 3)).norm();
  d.min_eig_cp = min_eig(d.cp);
  d.min_eig_ccp = min_eig(d.ccp);
  d.iterations = mirrored.iterations;
  d.gap_history = std::move(mirrored.gap_history);
  return d;
}

VerifyReport verify_decomposition(const ChoiMatrix& c, const Decomposition& d, double tol) {
  const int m = c.input_dim();
  const int n = c.output_dim();
  if (d.cp.rows() != c.data().rows() || d.ccp.rows() != c.data().rows())
    throw DimensionError("verify_decomposition: dimension mismatch");
  VerifyReport report;
  report.residual = (c.data() - d.cp - partial_transpose(d.ccp, m, n)).norm();
  report.min_eig_cp = min_eig(d.cp);
  report.min_eig_ccp = min_eig(d.ccp);
  report.residual_ok = report.residual <= tol * std::max(1.0, c.data().norm());
  report.cp_ok = report.min_eig_cp >= -tol;
  report.ccp_ok = report.min_eig_ccp >= -tol;
  report.pass = report.residual_ok && report.cp_ok && report.ccp_ok;
  return report;
}

}  // namespace posmap
