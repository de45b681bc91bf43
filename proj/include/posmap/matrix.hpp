#pragma once

#include "posmap/types.hpp"

namespace posmap {

// Square matrix forced Hermitian on construction: stores (M + M*)/2 and keeps
// the relative asymmetry ||M - M*|| / max(1, ||M||) as a diagnostic.  The
// constructor is the strict gate used where Hermiticity is a precondition and
// rejects asymmetry above kHermitianErrTol; `symmetrized` (and the hermitize
// operation) accepts any square matrix.
class HermitianMatrix {
 public:
  explicit HermitianMatrix(const Matrix& m);
  static HermitianMatrix symmetrized(const Matrix& m);

  const Matrix& matrix() const { return mat_; }
  int dim() const { return static_cast<int>(mat_.rows()); }
  double asymmetry() const { return asymmetry_; }

 private:
  HermitianMatrix() = default;
  Matrix mat_;
  double asymmetry_ = 0.0;
};

struct EigenResult {
  RealVector eigenvalues;  // ascending
  Matrix eigenvectors;     // orthonormal columns, phase-normalized
};

struct PsdResult {
  bool is_psd;
  double min_eigenvalue;
};

HermitianMatrix hermitize(const Matrix& m);

// Full spectral decomposition with a deterministic ordering: eigenvalues
// ascending, each eigenvector's first significant entry made real positive,
// exact eigenvalue ties ordered lexicographically by eigenvector entries.
EigenResult eig_hermitian(const HermitianMatrix& h);

// lambda_min >= -tol * max(1, ||H||_F), with lambda_min as certificate.
PsdResult is_psd(const HermitianMatrix& h, double tol = kPsdTol);
PsdResult is_psd(const Matrix& m, double tol = kPsdTol);

// Moore-Penrose pseudoinverse via SVD; singular values <= rank_tol * sigma_max
// are treated as zero.
Matrix pinv(const Matrix& a, double rank_tol = kPinvRankTol);

enum class SchurCorner { UpperLeft, LowerRight };

// For M = [[A, B], [B*, C]] partitioned at row/column `split`: returns
// M/A = C - B* A^+ B (UpperLeft) or M/C = A - B C^+ B* (LowerRight).
Matrix schur_complement(const HermitianMatrix& m, int split,
                        SchurCorner corner = SchurCorner::UpperLeft);

// range(B) included in range(A): ||(I - A A^+) B|| <= tol * max(1, ||B||).
bool range_included(const Matrix& b, const Matrix& a, double tol = kRangeTol);

// Block transposition on the first tensor factor: block (i,j) of the result
// is block (j,i) of the input, blocks being n x n.
Matrix partial_transpose(const Matrix& t, int m, int n);

// Kronecker product, row-major block convention: block (i,j) is a(i,j) * B.
Matrix kron(const Matrix& a, const Matrix& b);

// Trace norm (sum of singular values).
double trace_norm(const Matrix& a);

}  // namespace posmap
