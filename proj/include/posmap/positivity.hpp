#pragma once

#include "posmap/choi.hpp"
#include "posmap/types.hpp"

#include <cstdint>
#include <optional>

namespace posmap {

struct SeesawOptions {
  int restarts = 64;
  int max_iters = 500;
  double conv_tol = 1e-9;
  std::uint64_t rng_seed = 0;
};

enum class VerdictKind { CertifiedExact, HeuristicUnrefuted, Refuted };

// Outcome of a k-positivity / k-copositivity check.
//
// CertifiedExact is only produced in the k = min(m, n) regime, where
// positivity of the Choi matrix decides the question exactly.  A Refuted
// verdict is always exact: it carries a unit witness z with Schmidt rank <= k
// whose pairing value conj(z)* C conj(z) = min_value_found is negative.
// HeuristicUnrefuted makes no positive claim.
struct PositivityVerdict {
  VerdictKind kind = VerdictKind::HeuristicUnrefuted;
  int k = 0;
  double min_value_found = 0.0;
  std::optional<Vector> witness;
  int restarts_used = 0;

  bool refuted() const { return kind == VerdictKind::Refuted; }
};

struct SeesawResult {
  double value;    // exact quadratic form of the witness, recomputed
  Vector witness;  // unit vector w with Schmidt rank <= k minimizing w* C w
};

// Approximately minimizes w* C w over unit vectors of Schmidt rank <= k via
// block-coordinate descent on w = sum_s x_s (x) y_s: with one side kept
// orthonormal, the optimal other side is the minimal eigenvector of a
// compressed k*dim matrix.  Best result over `restarts` random starts;
// deterministic for a fixed rng_seed.
SeesawResult min_schmidt_quadratic(const ChoiMatrix& c, int k, const SeesawOptions& opts = {});

PositivityVerdict check_k_positive(const ChoiMatrix& c, int k, const SeesawOptions& opts = {},
                                   double tol = kRefuteTol);
// Same procedure applied to the partial transpose.  The witness z of a
// refutation satisfies pair((z z*)^Gamma, phi) = min_value_found < 0.
PositivityVerdict check_k_copositive(const ChoiMatrix& c, int k, const SeesawOptions& opts = {},
                                     double tol = kRefuteTol);

// Choi criterion: completely positive iff the Choi matrix is PSD.
PositivityVerdict check_completely_positive(const ChoiMatrix& c, double tol = kPsdTol);
PositivityVerdict check_completely_copositive(const ChoiMatrix& c, double tol = kPsdTol);

}  // namespace posmap
