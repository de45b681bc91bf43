#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace posmap {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

// Default tolerances. All "relative" tolerances are applied against
// max(1, ||X||_F) of the matrix they qualify.
inline constexpr double kPsdTol = 1e-9;         // is_psd acceptance
inline constexpr double kPinvRankTol = 1e-10;   // singular value cutoff, relative to sigma_max
inline constexpr double kRangeTol = 1e-9;       // range inclusion
inline constexpr double kHermitianErrTol = 1e-6;  // asymmetry beyond this is an error
inline constexpr double kUnliftTol = 1e-8;      // zero block row/column detection
inline constexpr double kPeelRowTol = 1e-8;     // pivot row residual threshold
inline constexpr double kRefuteTol = 1e-8;      // see-saw refutation threshold
inline constexpr double kChoiHermTol = 1e-10;   // hermitian flag on Choi matrices

struct DimensionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Thrown when every diagonal block of a Choi matrix vanishes, i.e. the map is zero.
struct ZeroMapError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised by the peel when a pivot row/column block of the remainder does not
// vanish.  For a 2-positive input the block must vanish, so a violation is
// constructive evidence against 2-positivity.  The partially computed parts
// are carried along so callers can inspect them.
struct NotTwoPositiveError : std::runtime_error {
  int pivot = 0;          // pivot block index (0-based)
  int block = 0;          // violating block index (0-based)
  int round = 0;          // iteration round when raised from peel_iterate
  double residual = 0.0;  // Frobenius norm of the violating block
  Matrix cp_part;         // the U matrix computed before the check fired
  Matrix remainder;       // R = C - U
  NotTwoPositiveError(const std::string& msg, int pivot_, int block_, double residual_,
                      Matrix cp, Matrix rem)
      : std::runtime_error(msg),
        pivot(pivot_),
        block(block_),
        residual(residual_),
        cp_part(std::move(cp)),
        remainder(std::move(rem)) {}
};

// Raised by the CP + coCP feasibility solver when the iteration stalls or the
// budget is exhausted with a persistent affine gap.
struct InfeasibleError : std::runtime_error {
  double gap = 0.0;
  int iterations = 0;
  InfeasibleError(const std::string& msg, double gap_, int iterations_)
      : std::runtime_error(msg), gap(gap_), iterations(iterations_) {}
};

// Raised by the decomposition pipelines when the positivity pre-check refutes
// the input.
struct RefutedInputError : std::runtime_error {
  double min_value = 0.0;
  Vector witness;
  RefutedInputError(const std::string& msg, double min_value_, Vector witness_)
      : std::runtime_error(msg), min_value(min_value_), witness(std::move(witness_)) {}
};

}  // namespace posmap
