#pragma once

#include "posmap/choi.hpp"
#include "posmap/positivity.hpp"
#include "posmap/types.hpp"

#include <vector>

namespace posmap {

struct SplitOptions {
  int max_iters = 10000;
  double feas_tol = 1e-8;
  int stall_window = 200;  // declare infeasible when the best gap improves by
                           // less than 1e-14 across this many iterations
};

// A CP + coCP certificate: C = cp + ccp^Gamma with cp >= 0 and ccp >= 0.
struct Decomposition {
  Matrix cp;   // P, the Choi matrix of the completely positive part
  Matrix ccp;  // Q; the completely copositive part has Choi matrix Q^Gamma
  double residual = 0.0;     // ||C - P - Q^Gamma||_F
  double min_eig_cp = 0.0;
  double min_eig_ccp = 0.0;
  int iterations = 0;
  std::vector<double> gap_history;
};

struct VerifyReport {
  bool pass = false;
  bool residual_ok = false;
  bool cp_ok = false;
  bool ccp_ok = false;
  double residual = 0.0;
  double min_eig_cp = 0.0;
  double min_eig_ccp = 0.0;
};

// Seeks P, Q >= 0 with C = P + Q^Gamma by Dykstra-corrected alternating
// projections between the affine set {P + Q^Gamma = C} and the product PSD
// cone.  A persistent gap (stall or budget exhaustion, after one perturbed
// retry) raises InfeasibleError with the final gap.
Decomposition split_cp_ccp(const ChoiMatrix& c, const SplitOptions& opts = {});

// Pipeline for a 2-positive map on M3: peel off a CP part, split the
// remaining map on M2 -> M3 (decomposable by Woronowicz), lift both halves
// back.  The 2-positivity pre-check is heuristic; a refutation aborts with
// RefutedInputError, and peel/split errors catch false inputs constructively.
Decomposition decompose_2positive_3x3(const ChoiMatrix& c, const SplitOptions& opts = {},
                                      const SeesawOptions& seesaw = {});

// Mirror for 2-copositive maps: runs the pipeline on the partial transpose
// and swaps the parts back.
Decomposition decompose_2copositive_3x3(const ChoiMatrix& c, const SplitOptions& opts = {},
                                        const SeesawOptions& seesaw = {});

// Independently recomputes the residual and both minimal eigenvalues.
// Residual is measured relative to max(1, ||C||); eigenvalue floors are -tol.
VerifyReport verify_decomposition(const ChoiMatrix& c, const Decomposition& d, double tol = 1e-8);

}  // namespace posmap
