#pragma once

#include "posmap/choi.hpp"
#include "posmap/types.hpp"

#include <utility>

namespace posmap {

// Generalized Choi map parameters: Phi[a,b,c] acts on M3 by
//   X |-> diag(a x11 + b x22 + c x33, c x11 + a x22 + b x33,
//              b x11 + c x22 + a x33) - (X - diag X).
struct GChoiParams {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
};

struct OmegaParams {
  double eps = 0.0;
};

// The 9x9 Choi matrix of Phi[a,b,c]: a on diagonal positions {0,4,8}, c on
// {1,5,6}, b on {2,3,7}, -1 couplings at (0,4), (0,8), (4,8) and mirrors.
ChoiMatrix gchoi_choi(const GChoiParams& p);

// Exact closed form: 2-positive iff a >= 2, or 1 <= a < 2 and
// bc >= (2-a)(b+c).
bool gchoi_is_2positive(const GChoiParams& p);

// The consequence of condition (*) used to certify the copositive part:
// bc >= (a - 1 - 2/a)^2.  Meaningful in the nontrivial regime (2-positive,
// not completely positive, i.e. 1 <= a < 2); see gchoi_star_applicable.
bool gchoi_condition_star(const GChoiParams& p);
bool gchoi_star_applicable(const GChoiParams& p);

// Closed-form split Phi = Phi1 + Phi2 with C_Phi1 >= 0 and C_Phi2^Gamma >= 0
// whenever condition (*) holds.  Phi1 carries the (2/a - a) couplings; Phi2
// is formed as the exact entrywise difference, so the sum reconstructs
// bit-exactly.  Requires a > 0.
std::pair<ChoiMatrix, ChoiMatrix> gchoi_explicit_decomposition(const GChoiParams& p);

// The weighted-family split
//   Phi[a,b,c] = (1 - s) Phi[(a-s)/(1-s), 0, 0] + s Phi[1, sqrt(b/c), sqrt(c/b)]
// with s = sqrt(bc).  Requires b, c > 0 and bc != 1.
std::pair<ChoiMatrix, ChoiMatrix> gchoi_alternative_decomposition(const GChoiParams& p);

// 4x4 Choi matrix: 1 at corners (0,0), (3,3); eps at (0,3), (1,2), (2,1), (3,0).
ChoiMatrix omega_choi(const OmegaParams& p);

// Positive iff |eps| <= 1/2.
bool omega_is_positive(const OmegaParams& p);

// The explicit CP + coCP split with halved corner diagonals: returns (P, Q)
// with C_omega = P + Q^Gamma; P and Q are PSD iff |eps| <= 1/2, which is
// required.
std::pair<Matrix, Matrix> omega_split(const OmegaParams& p);

}  // namespace posmap
