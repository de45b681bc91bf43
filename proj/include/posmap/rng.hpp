#pragma once

#include "posmap/types.hpp"

#include <cstdint>
#include <random>

namespace posmap {

// Deterministic random source.  Gaussian variates are produced by an explicit
// Box-Muller transform over mt19937_64 output so that a seed fixes the stream
// independently of the standard library's distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  // splitmix64 step, used to derive independent per-restart seeds.
  static std::uint64_t derive(std::uint64_t seed, std::uint64_t stream);

  double uniform();   // [0, 1)
  double gaussian();  // standard normal
  Complex cgaussian();  // complex normal, E|z|^2 = 1

  Vector gaussian_vector(int dim);
  Matrix gaussian_matrix(int rows, int cols);
  Matrix hermitian_gaussian(int dim);
  // G G* for a dim x rank complex Gaussian factor (rank <= 0 means full).
  Matrix psd_gaussian(int dim, int rank = -1);
  Matrix haar_unitary(int dim);

 private:
  std::mt19937_64 gen_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace posmap
