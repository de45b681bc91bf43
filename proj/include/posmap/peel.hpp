#pragma once

#include "posmap/choi.hpp"
#include "posmap/types.hpp"

#include <vector>

namespace posmap {

// One peel step C = U + R at pivot p: U_ij = A_ip A_pp^+ A_pj is the Choi
// matrix of a nonzero completely positive map, R has (for 2-positive inputs)
// a vanishing pivot block row/column and unlifts to the Choi matrix K of a
// map on one fewer input dimension.
struct PeelResult {
  int pivot;             // 0-based block index
  ChoiMatrix cp_part;    // U
  ChoiMatrix remainder;  // R = C - U
  ChoiMatrix unlifted;   // K, block row/column `pivot` removed from R
  LiftIndexSet lift_set;   // {pivot} in the m-block space
  double row_residual;   // max Frobenius norm over the pivot block row/column of R
};

struct IteratedPeelResult {
  std::vector<ChoiMatrix> cp_parts;  // each lifted back to the original space
  ChoiMatrix remainder;              // unlifted final positive part
  LiftIndexSet lift_set;             // accumulated removals, in the original space
};

// argmax_j of the diagonal block trace norms, lowest index on ties.
// Throws ZeroMapError when every diagonal block is below tol * max(1, ||C||).
int select_pivot(const ChoiMatrix& c, double tol = kPeelRowTol);

// Throws NotTwoPositiveError when a pivot row/column block of R exceeds
// tol * max(1, ||C||): for a 2-positive map those blocks vanish, so the
// violation (with its block index and residual) refutes 2-positivity.
PeelResult peel_once(const ChoiMatrix& c, int pivot, double tol = kPeelRowTol);

// Copositive variant: peels the partial transpose and transposes the parts
// back, so cp_part satisfies cp_part^Gamma >= 0.
PeelResult peel_copositive(const ChoiMatrix& c, int pivot, double tol = kPeelRowTol);

// Applies peel_once k-1 times, lowering the input dimension by one each
// round; intermediate CP parts are lifted back to the original space.  An
// intermediate zero remainder ends the iteration early with fewer parts.
IteratedPeelResult peel_iterate(const ChoiMatrix& c, int k, double tol = kPeelRowTol);

}  // namespace posmap
