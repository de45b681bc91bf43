#include "posmap/positivity.hpp"

#include "posmap/matrix.hpp"
#include "posmap/rng.hpp"

#include <cmath>
#include <string>

namespace posmap {

namespace {

void require_hermitian(const ChoiMatrix& c, const char* what) {
  if (!c.is_hermitian()) throw DimensionError(std::string(what) + ": Choi matrix is not Hermitian");
}

Vector assemble_witness(const Matrix& x, const Matrix& y) {
  const int m = static_cast<int>(x.rows());
  const int n = static_cast<int>(y.rows());
  const int k = static_cast<int>(x.cols());
  Vector w = Vector::Zero(static_cast<Eigen::Index>(m) * n);
  for (int s = 0; s < k; ++s)
    for (int i = 0; i < m; ++i) w.segment(i * n, n) += x(i, s) * y.col(s);
  return w;
}

// Minimal eigenpair of a small Hermitian matrix.
std::pair<double, Vector> min_eigpair(const Matrix& h) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver((h + h.adjoint()) / 2.0);
  return {solver.eigenvalues()(0), solver.eigenvectors().col(0)};
}

struct SeesawRun {
  double value;
  Matrix x;  // m x k
  Matrix y;  // n x k
};

SeesawRun seesaw_restart(const Matrix& cmat, int m, int n, int k, std::uint64_t seed,
                         int max_iters, double conv_tol, double scale) {
  Rng rng(seed);
  Matrix x = rng.gaussian_matrix(m, k);
  Matrix y = rng.gaussian_matrix(n, k);

  double value = std::numeric_limits<double>::infinity();
  for (int iter = 0; iter < max_iters; ++iter) {
    // Orthonormalize the y side, pushing the triangular factor onto x so the
    // represented vector w = sum_s x_s (x) y_s is unchanged.
    {
      Eigen::HouseholderQR<Matrix> qr(y);
      Matrix q = qr.householderQ() * Matrix::Identity(n, k);
      Matrix r = Matrix(qr.matrixQR().triangularView<Eigen::Upper>()).topRows(k);
      x = x * r.transpose();
      y = q;
    }
    // Compressed km x km matrix: M[(s,i),(t,j)] = y_s* C_ij y_t.
    Matrix basis_y = Matrix::Zero(static_cast<Eigen::Index>(m) * n, static_cast<Eigen::Index>(k) * m);
    for (int s = 0; s < k; ++s)
      for (int i = 0; i < m; ++i) basis_y.col(s * m + i).segment(i * n, n) = y.col(s);
    auto [vx, xvec] = min_eigpair(basis_y.adjoint() * cmat * basis_y);
    for (int s = 0; s < k; ++s)
      for (int i = 0; i < m; ++i) x(i, s) = xvec(s * m + i);

    // Swap roles: orthonormalize x, minimize over the stacked y.
    {
      Eigen::HouseholderQR<Matrix> qr(x);
      Matrix q = qr.householderQ() * Matrix::Identity(m, k);
      Matrix r = Matrix(qr.matrixQR().triangularView<Eigen::Upper>()).topRows(k);
      y = y * r.transpose();
      x = q;
    }
    Matrix basis_x = Matrix::Zero(static_cast<Eigen::Index>(m) * n, static_cast<Eigen::Index>(k) * n);
    for (int s = 0; s < k; ++s)
      for (int i = 0; i < m; ++i) basis_x.block(i * n, s * n, n, n) = x(i, s) * Matrix::Identity(n, n);
    auto [vy, yvec] = min_eigpair(basis_x.adjoint() * cmat * basis_x);
    for (int s = 0; s < k; ++s) y.col(s) = yvec.segment(s * n, n);

    if (std::abs(value - vy) <= conv_tol * std::max(1.0, scale)) {
      value = vy;
      break;
    }
    value = vy;
  }
  return {value, x, y};
}

}  // namespace

SeesawResult min_schmidt_quadratic(const ChoiMatrix& c, int k, const SeesawOptions& opts) {
  require_hermitian(c, "min_schmidt_quadratic");
  const int m = c.input_dim();
  const int n = c.output_dim();
  if (k < 1 || k > std::min(m, n))
    throw DimensionError("min_schmidt_quadratic: k must be in [1, min(m, n)]");
  if (opts.restarts < 1 || opts.conv_tol <= 0.0)
    throw DimensionError("min_schmidt_quadratic: invalid options");

  const Matrix& cmat = c.data();
  const double scale = cmat.norm();

  double best_value = std::numeric_limits<double>::infinity();
  Vector best_witness;
  for (int r = 0; r < opts.restarts; ++r) {
    SeesawRun run = seesaw_restart(cmat, m, n, k, Rng::derive(opts.rng_seed, r), opts.max_iters,
                                   opts.conv_tol, scale);
    Vector w = assemble_witness(run.x, run.y);
    const double norm = w.norm();
    if (norm <= 0.0) continue;
    w /= norm;
    const double value = (w.adjoint() * cmat * w)(0).real();  // exact recompute
    if (value < best_value) {
      best_value = value;
      best_witness = w;
    }
  }
  return {best_value, best_witness};
}

PositivityVerdict check_k_positive(const ChoiMatrix& c, int k, const SeesawOptions& opts,
                                   double tol) {
  require_hermitian(c, "check_k_positive");
  const int m = c.input_dim();
  const int n = c.output_dim();
  if (k < 1 || k > std::min(m, n))
    throw DimensionError("check_k_positive: k must be in [1, min(m, n)]");

  PositivityVerdict verdict;
  verdict.k = k;

  if (k == std::min(m, n)) {
    // Choi's criterion: k-positivity at k = min(m, n) is complete positivity,
    // decided exactly by the spectrum.
    EigenResult eig = eig_hermitian(HermitianMatrix(c.data()));
    const double lambda_min = eig.eigenvalues(0);
    verdict.min_value_found = lambda_min;
    verdict.restarts_used = 0;
    if (lambda_min >= -kPsdTol * std::max(1.0, c.data().norm())) {
      verdict.kind = VerdictKind::CertifiedExact;
    } else {
      verdict.kind = VerdictKind::Refuted;
      verdict.witness = eig.eigenvectors.col(0).conjugate();
    }
    return verdict;
  }

  SeesawResult result = min_schmidt_quadratic(c, k, opts);
  verdict.min_value_found = result.value;
  verdict.restarts_used = opts.restarts;
  verdict.witness = result.witness.conjugate();  // state-side vector z
  if (result.value < -tol * std::max(1.0, c.data().norm())) {
    verdict.kind = VerdictKind::Refuted;
  } else {
    verdict.kind = VerdictKind::HeuristicUnrefuted;
  }
  return verdict;
}

PositivityVerdict check_k_copositive(const ChoiMatrix& c, int k, const SeesawOptions& opts,
                                     double tol) {
  require_hermitian(c, "check_k_copositive");
  return check_k_positive(c.partially_transposed(), k, opts, tol);
}

PositivityVerdict check_completely_positive(const ChoiMatrix& c, double tol) {
  require_hermitian(c, "check_completely_positive");
  PositivityVerdict verdict;
  verdict.k = std::min(c.input_dim(), c.output_dim());
  EigenResult eig = eig_hermitian(HermitianMatrix(c.data()));
  const double lambda_min = eig.eigenvalues(0);
  verdict.min_value_found = lambda_min;
  if (lambda_min >= -tol * std::max(1.0, c.data().norm())) {
    verdict.kind = VerdictKind::CertifiedExact;
  } else {
    verdict.kind = VerdictKind::Refuted;
    verdict.witness = eig.eigenvectors.col(0).conjugate();
  }
  return verdict;
}

PositivityVerdict check_completely_copositive(const ChoiMatrix& c, double tol) {
  require_hermitian(c, "check_completely_copositive");
  return check_completely_positive(c.partially_transposed(), tol);
}

}  // namespace posmap
