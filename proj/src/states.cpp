#include "posmap/states.hpp"

#include "posmap/matrix.hpp"
#include "posmap/rng.hpp"

#include <cmath>
#include <string>

namespace posmap {

Matrix BipartiteVector::coefficient_matrix() const {
  if (amplitudes.size() != static_cast<Eigen::Index>(m) * n)
    throw DimensionError("BipartiteVector: amplitudes length is not m * n");
  Matrix w(m, n);
  for (int i = 0; i < m; ++i) w.row(i) = amplitudes.segment(i * n, n).transpose();
  return w;
}

DensityMatrix::DensityMatrix(int m, int n, const Matrix& data) : m_(m), n_(n) {
  if (m_ <= 0 || n_ <= 0) throw DimensionError("DensityMatrix: dimensions must be positive");
  const Eigen::Index d = static_cast<Eigen::Index>(m_) * n_;
  if (data.rows() != d || data.cols() != d)
    throw DimensionError("DensityMatrix: data must be " + std::to_string(d) + " x " +
                         std::to_string(d));
  HermitianMatrix h(data);
  const double trace = h.matrix().trace().real();
  if (std::abs(trace - 1.0) > 1e-10)
    throw DimensionError("DensityMatrix: trace " + std::to_string(trace) + " is not 1");
  const PsdResult psd = is_psd(h, 0.0);
  if (psd.min_eigenvalue < -1e-10)
    throw DimensionError("DensityMatrix: minimal eigenvalue " +
                         std::to_string(psd.min_eigenvalue) + " is negative");
  data_ = h.matrix();
}

int schmidt_rank(const BipartiteVector& z, double tol) {
  if (z.amplitudes.norm() == 0.0) throw std::invalid_argument("schmidt_rank: zero vector");
  Eigen::JacobiSVD<Matrix> svd(z.coefficient_matrix());
  const auto& sigma = svd.singularValues();
  const double cutoff = tol * sigma(0);
  int rank = 0;
  for (int i = 0; i < sigma.size(); ++i)
    if (sigma(i) > cutoff) ++rank;
  return rank;
}

bool is_ppt(const DensityMatrix& rho, double tol) {
  return is_psd(partial_transpose(rho.data(), rho.dim_a(), rho.dim_b()), tol).is_psd;
}

namespace {

// Truncates each column's m x n coefficient matrix to rank k.
Matrix clip_ensemble(const Matrix& g, int m, int n, int k) {
  Matrix clipped = g;
  for (Eigen::Index col = 0; col < g.cols(); ++col) {
    Matrix w(m, n);
    for (int i = 0; i < m; ++i) w.row(i) = g.col(col).segment(i * n, n).transpose();
    Eigen::JacobiSVD<Matrix> svd(w, Eigen::ComputeThinU | Eigen::ComputeThinV);
    RealVector sigma = svd.singularValues();
    for (int i = k; i < sigma.size(); ++i) sigma(i) = 0.0;
    const Matrix truncated = svd.matrixU() * sigma.asDiagonal() * svd.matrixV().adjoint();
    for (int i = 0; i < m; ++i)
      clipped.col(col).segment(i * n, n) = truncated.row(i).transpose();
  }
  return clipped;
}

}  // namespace

std::optional<EnsembleDecomposition> schmidt_number_upper(const DensityMatrix& rho, int k,
                                                          int ensemble_size,
                                                          const SeesawOptions& opts, double tol) {
  const int m = rho.dim_a();
  const int n = rho.dim_b();
  const Eigen::Index d = rho.data().rows();
  if (k < 1 || k > std::min(m, n))
    throw DimensionError("schmidt_number_upper: k must be in [1, min(m, n)]");

  EigenResult eig = eig_hermitian(HermitianMatrix(rho.data()));
  // Factor rho = L L* over the strictly positive eigenspace.
  int rank = 0;
  for (int i = 0; i < eig.eigenvalues.size(); ++i)
    if (eig.eigenvalues(i) > 1e-12) ++rank;
  if (ensemble_size < rank)
    throw DimensionError("schmidt_number_upper: ensemble_size must be at least rank(rho)");
  Matrix factor(d, rank);
  {
    int col = 0;
    for (int i = 0; i < eig.eigenvalues.size(); ++i)
      if (eig.eigenvalues(i) > 1e-12)
        factor.col(col++) = std::sqrt(eig.eigenvalues(i)) * eig.eigenvectors.col(i);
  }

  std::optional<EnsembleDecomposition> best;
  for (int restart = 0; restart < opts.restarts; ++restart) {
    Matrix g = Matrix::Zero(d, ensemble_size);
    g.leftCols(rank) = factor;
    if (restart > 0) {
      Rng rng(Rng::derive(opts.rng_seed, restart));
      g = g * rng.haar_unitary(ensemble_size);
    }

    double prev_residual = std::numeric_limits<double>::infinity();
    for (int iter = 0; iter < opts.max_iters; ++iter) {
      const Matrix clipped = clip_ensemble(g, m, n, k);
      const double residual = (rho.data() - clipped * clipped.adjoint()).norm();
      if (residual <= tol) {
        EnsembleDecomposition ensemble;
        ensemble.residual = residual;
        ensemble.max_schmidt_rank = 1;
        for (Eigen::Index col = 0; col < clipped.cols(); ++col) {
          const double weight = clipped.col(col).squaredNorm();
          if (weight <= 1e-14) continue;
          BipartiteVector z{m, n, clipped.col(col) / std::sqrt(weight)};
          ensemble.max_schmidt_rank = std::max(ensemble.max_schmidt_rank, schmidt_rank(z));
          ensemble.weights.push_back(weight);
          ensemble.vectors.push_back(std::move(z));
        }
        if (!best || ensemble.residual < best->residual) best = std::move(ensemble);
        return best;
      }
      if (std::abs(prev_residual - residual) <= opts.conv_tol) break;  // plateaued
      prev_residual = residual;

      // Procrustes refit: the ensemble closest to the clipped one among those
      // reconstructing rho exactly is L U V* from the SVD of L* H.
      Eigen::JacobiSVD<Matrix> svd(factor.adjoint() * clipped,
                                   Eigen::ComputeThinU | Eigen::ComputeThinV);
      g = factor * svd.matrixU() * svd.matrixV().adjoint();
    }
  }
  return std::nullopt;
}

int schmidt_number_lower(const DensityMatrix& rho, const std::vector<SchmidtWitness>& witnesses,
                         double tol) {
  int bound = 1;
  for (const auto& witness : witnesses) {
    if (witness.verdict.refuted())
      throw std::invalid_argument(
          "schmidt_number_lower: witness verdict is Refuted at its claimed order");
    if (witness.map.input_dim() != rho.dim_a() || witness.map.output_dim() != rho.dim_b())
      throw DimensionError("schmidt_number_lower: witness dimensions do not match the state");
    const double value = pair(rho.data(), witness.map);
    if (value < -tol) bound = std::max(bound, witness.k + 1);
  }
  return bound;
}

}  // namespace posmap
