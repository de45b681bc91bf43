#include "posmap/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

namespace posmap {

namespace {

void require_finite(const Matrix& m, const char* what) {
  if (!m.allFinite()) throw DimensionError(std::string(what) + ": non-finite entries");
}

// Lexicographic comparison of complex column vectors by (re, im) pairs.
bool lex_less(const Matrix& vecs, int a, int b) {
  for (int i = 0; i < vecs.rows(); ++i) {
    const Complex x = vecs(i, a);
    const Complex y = vecs(i, b);
    if (x.real() != y.real()) return x.real() < y.real();
    if (x.imag() != y.imag()) return x.imag() < y.imag();
  }
  return false;
}

}  // namespace

HermitianMatrix HermitianMatrix::symmetrized(const Matrix& m) {
  if (m.rows() != m.cols()) throw DimensionError("HermitianMatrix: input is not square");
  require_finite(m, "HermitianMatrix");
  HermitianMatrix h;
  h.asymmetry_ = (m - m.adjoint()).norm() / std::max(1.0, m.norm());
  h.mat_ = ((m + m.adjoint()) / 2.0).eval();
  return h;
}

HermitianMatrix::HermitianMatrix(const Matrix& m) : HermitianMatrix(symmetrized(m)) {
  if (asymmetry_ > kHermitianErrTol)
    throw DimensionError("HermitianMatrix: relative asymmetry " + std::to_string(asymmetry_) +
                         " exceeds " + std::to_string(kHermitianErrTol));
}

HermitianMatrix hermitize(const Matrix& m) { return HermitianMatrix::symmetrized(m); }

EigenResult eig_hermitian(const HermitianMatrix& h) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(h.matrix());
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("eig_hermitian: eigensolver failed to converge");

  const int d = h.dim();
  RealVector vals = solver.eigenvalues();
  Matrix vecs = solver.eigenvectors();

  // Phase normalization: first significant entry of each column made real
  // positive.
  for (int j = 0; j < d; ++j) {
    const double colmax = vecs.col(j).cwiseAbs().maxCoeff();
    for (int i = 0; i < d; ++i) {
      const double mag = std::abs(vecs(i, j));
      if (mag > 1e-12 * colmax) {
        vecs.col(j) *= std::conj(vecs(i, j)) / mag;
        break;
      }
    }
  }

  // Ascending eigenvalues; exact ties ordered by eigenvector lexicographic
  // comparison for reproducible output.
  std::vector<int> order(d);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (vals(a) != vals(b)) return vals(a) < vals(b);
    return lex_less(vecs, a, b);
  });

  EigenResult result;
  result.eigenvalues.resize(d);
  result.eigenvectors.resize(d, d);
  for (int j = 0; j < d; ++j) {
    result.eigenvalues(j) = vals(order[j]);
    result.eigenvectors.col(j) = vecs.col(order[j]);
  }
  return result;
}

PsdResult is_psd(const HermitianMatrix& h, double tol) {
  if (h.dim() == 0) return {true, 0.0};
  Eigen::SelfAdjointEigenSolver<Matrix> solver(h.matrix(), Eigen::EigenvaluesOnly);
  const double lambda_min = solver.eigenvalues()(0);
  const double scale = std::max(1.0, h.matrix().norm());
  return {lambda_min >= -tol * scale, lambda_min};
}

PsdResult is_psd(const Matrix& m, double tol) { return is_psd(HermitianMatrix(m), tol); }

Matrix pinv(const Matrix& a, double rank_tol) {
  require_finite(a, "pinv");
  if (a.size() == 0) return a.adjoint();
  Eigen::JacobiSVD<Matrix> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& sigma = svd.singularValues();
  const double cutoff = rank_tol * (sigma.size() > 0 ? sigma(0) : 0.0);
  RealVector inv = RealVector::Zero(sigma.size());
  for (int i = 0; i < sigma.size(); ++i)
    if (sigma(i) > cutoff && sigma(i) > 0.0) inv(i) = 1.0 / sigma(i);
  return svd.matrixV() * inv.asDiagonal() * svd.matrixU().adjoint();
}

Matrix schur_complement(const HermitianMatrix& m, int split, SchurCorner corner) {
  const int d = m.dim();
  if (split <= 0 || split >= d)
    throw DimensionError("schur_complement: split " + std::to_string(split) +
                         " out of range for dimension " + std::to_string(d));
  const Matrix& mat = m.matrix();
  const Matrix a = mat.topLeftCorner(split, split);
  const Matrix b = mat.topRightCorner(split, d - split);
  const Matrix c = mat.bottomRightCorner(d - split, d - split);
  if (corner == SchurCorner::UpperLeft) return c - b.adjoint() * pinv(a) * b;
  return a - b * pinv(c) * b.adjoint();
}

bool range_included(const Matrix& b, const Matrix& a, double tol) {
  if (b.rows() != a.rows())
    throw DimensionError("range_included: row counts differ");
  const Matrix projector = a * pinv(a);  // orthogonal projector onto range(A)
  const double defect = (b - projector * b).norm();
  return defect <= tol * std::max(1.0, b.norm());
}

Matrix partial_transpose(const Matrix& t, int m, int n) {
  if (m <= 0 || n <= 0 || t.rows() != static_cast<Eigen::Index>(m) * n || t.rows() != t.cols())
    throw DimensionError("partial_transpose: matrix is not (mn) x (mn)");
  Matrix out(t.rows(), t.cols());
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      out.block(i * n, j * n, n, n) = t.block(j * n, i * n, n, n);
  return out;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

double trace_norm(const Matrix& a) {
  if (a.size() == 0) return 0.0;
  Eigen::JacobiSVD<Matrix> svd(a);
  return svd.singularValues().sum();
}

}  // namespace posmap
