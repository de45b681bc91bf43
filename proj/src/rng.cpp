#include "posmap/rng.hpp"

#include <cmath>
#include <numbers>

namespace posmap {

std::uint64_t Rng::derive(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

double Rng::uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

double Rng::gaussian() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  double u1 = 0.0;
  do {
    u1 = uniform();
  } while (u1 <= 0.0);
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double theta = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(theta);
  has_spare_ = true;
  return r * std::cos(theta);
}

Complex Rng::cgaussian() {
  const double re = gaussian();
  const double im = gaussian();
  return Complex(re, im) / std::sqrt(2.0);
}

Vector Rng::gaussian_vector(int dim) {
  Vector v(dim);
  for (int i = 0; i < dim; ++i) v(i) = cgaussian();
  return v;
}

Matrix Rng::gaussian_matrix(int rows, int cols) {
  Matrix g(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) g(i, j) = cgaussian();
  return g;
}

Matrix Rng::hermitian_gaussian(int dim) {
  Matrix g = gaussian_matrix(dim, dim);
  return (g + g.adjoint()) / 2.0;
}

Matrix Rng::psd_gaussian(int dim, int rank) {
  if (rank <= 0 || rank > dim) rank = dim;
  Matrix g = gaussian_matrix(dim, rank);
  Matrix p = g * g.adjoint();
  return (p + p.adjoint()) / 2.0;
}

Matrix Rng::haar_unitary(int dim) {
  Matrix g = gaussian_matrix(dim, dim);
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ() * Matrix::Identity(dim, dim);
  Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  // Fix the phase ambiguity so the distribution is Haar.
  for (int j = 0; j < dim; ++j) {
    const Complex d = r(j, j);
    const double mag = std::abs(d);
    if (mag > 0.0) q.col(j) *= d / mag;
  }
  return q;
}

}  // namespace posmap
