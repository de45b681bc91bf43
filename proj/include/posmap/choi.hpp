#pragma once

#include "posmap/matrix.hpp"
#include "posmap/types.hpp"

#include <functional>
#include <utility>
#include <vector>

namespace posmap {

// Choi matrix of a linear map phi: M_m -> M_n, stored as the mn x mn matrix
// whose n x n block (i,j) is phi(E_ij).  Blocks are row-major: block (i,j)
// occupies rows [i*n, (i+1)*n) and columns [j*n, (j+1)*n), 0-based.
class ChoiMatrix {
 public:
  ChoiMatrix(int m, int n, Matrix data);

  int input_dim() const { return m_; }
  int output_dim() const { return n_; }
  int total_dim() const { return m_ * n_; }
  const Matrix& data() const { return data_; }
  bool is_hermitian() const { return hermitian_; }

  Eigen::Block<const Matrix> block(int i, int j) const;

  // phi(X) = sum_ij X(i,j) * block(i,j).
  Matrix apply(const Matrix& x) const;

  ChoiMatrix partially_transposed() const;

  static ChoiMatrix identity_map(int n);
  static ChoiMatrix transpose_map(int n);

 private:
  int m_;
  int n_;
  Matrix data_;
  bool hermitian_;
};

// Builds the Choi matrix of a black-box linear evaluator by applying it to
// every matrix unit E_ij.
ChoiMatrix choi_of_map(const std::function<Matrix(const Matrix&)>& apply, int m, int n);

// Sorted set of block indices (0-based, in the target space) at which zero
// block rows/columns were inserted by trivial lifting.
struct LiftIndexSet {
  int target_dim = 0;
  std::vector<int> indices;

  int source_dim() const { return target_dim - static_cast<int>(indices.size()); }
  void validate() const;
  // Composes with an inner lift performed in the surviving (source) space:
  // returns the combined index set in this set's target space.
  LiftIndexSet compose_inner(const LiftIndexSet& inner) const;
};

ChoiMatrix lift(const ChoiMatrix& c, const LiftIndexSet& set);
// Same insertion on a raw mn x mn grid with block size n.
Matrix lift_blocks(const Matrix& data, int n, const LiftIndexSet& set);

struct UnliftResult {
  ChoiMatrix choi;
  LiftIndexSet removed;
};

// Detects block indices whose block row and column both have Frobenius norm
// <= tol * ||C||_F, removes them.  A matrix whose blocks all vanish is
// returned unchanged with an empty index set.
UnliftResult unlift(const ChoiMatrix& c, double tol = kUnliftTol);
// Removes exactly the given block indices, no detection.
ChoiMatrix remove_blocks(const ChoiMatrix& c, const std::vector<int>& indices);

// The bilinear pairing <A, phi> = sum_ij Tr(phi(E_ij) A_ij^t), computed as
// Tr(C A^T) = sum of the entrywise (unconjugated) products.  For A = z z*
// this equals conj(z)* C conj(z).  Returns the real part; the imaginary part
// (a diagnostic, tiny for Hermitian A and C) is available via pair_complex.
double pair(const Matrix& a, const ChoiMatrix& c);
Complex pair_complex(const Matrix& a, const ChoiMatrix& c);

}  // namespace posmap
