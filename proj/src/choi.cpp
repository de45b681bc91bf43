#include "posmap/choi.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace posmap {

ChoiMatrix::ChoiMatrix(int m, int n, Matrix data) : m_(m), n_(n), data_(std::move(data)) {
  if (m_ <= 0 || n_ <= 0) throw DimensionError("ChoiMatrix: dimensions must be positive");
  const Eigen::Index d = static_cast<Eigen::Index>(m_) * n_;
  if (data_.rows() != d || data_.cols() != d)
    throw DimensionError("ChoiMatrix: data must be " + std::to_string(d) + " x " +
                         std::to_string(d));
  if (!data_.allFinite()) throw DimensionError("ChoiMatrix: non-finite entries");
  const double scale = std::max(1.0, data_.norm());
  hermitian_ = (data_ - data_.adjoint()).norm() <= kChoiHermTol * scale;
}

Eigen::Block<const Matrix> ChoiMatrix::block(int i, int j) const {
  return data_.block(i * n_, j * n_, n_, n_);
}

Matrix ChoiMatrix::apply(const Matrix& x) const {
  if (x.rows() != m_ || x.cols() != m_)
    throw DimensionError("apply_map: input must be " + std::to_string(m_) + " x " +
                         std::to_string(m_));
  Matrix out = Matrix::Zero(n_, n_);
  for (int i = 0; i < m_; ++i)
    for (int j = 0; j < m_; ++j) out += x(i, j) * block(i, j);
  return out;
}

ChoiMatrix ChoiMatrix::partially_transposed() const {
  return ChoiMatrix(m_, n_, partial_transpose(data_, m_, n_));
}

ChoiMatrix ChoiMatrix::identity_map(int n) {
  Matrix data = Matrix::Zero(n * n, n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) data(i * n + i, j * n + j) = 1.0;
  return ChoiMatrix(n, n, std::move(data));
}

ChoiMatrix ChoiMatrix::transpose_map(int n) {
  Matrix data = Matrix::Zero(n * n, n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) data(i * n + j, j * n + i) = 1.0;
  return ChoiMatrix(n, n, std::move(data));
}

ChoiMatrix choi_of_map(const std::function<Matrix(const Matrix&)>& apply, int m, int n) {
  if (m <= 0 || n <= 0) throw DimensionError("choi_of_map: dimensions must be positive");
  Matrix data(m * n, m * n);
  Matrix unit = Matrix::Zero(m, m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      unit(i, j) = 1.0;
      const Matrix out = apply(unit);
      unit(i, j) = 0.0;
      if (out.rows() != n || out.cols() != n)
        throw DimensionError("choi_of_map: evaluator output is not " + std::to_string(n) + " x " +
                             std::to_string(n));
      data.block(i * n, j * n, n, n) = out;
    }
  }
  return ChoiMatrix(m, n, std::move(data));
}

void LiftIndexSet::validate() const {
  if (static_cast<int>(indices.size()) > target_dim)
    throw DimensionError("LiftIndexSet: more insertions than target dimension");
  int prev = -1;
  for (int idx : indices) {
    if (idx <= prev || idx < 0 || idx >= target_dim)
      throw DimensionError("LiftIndexSet: indices must be strictly increasing within range");
    prev = idx;
  }
}

LiftIndexSet LiftIndexSet::compose_inner(const LiftIndexSet& inner) const {
  validate();
  inner.validate();
  if (inner.target_dim != source_dim())
    throw DimensionError("LiftIndexSet: inner set does not match surviving dimension");
  // Positions in the target space not occupied by this set, in order.
  std::vector<int> surviving;
  surviving.reserve(source_dim());
  auto it = indices.begin();
  for (int t = 0; t < target_dim; ++t) {
    if (it != indices.end() && *it == t) {
      ++it;
      continue;
    }
    surviving.push_back(t);
  }
  LiftIndexSet combined{target_dim, indices};
  for (int idx : inner.indices) combined.indices.push_back(surviving[idx]);
  std::sort(combined.indices.begin(), combined.indices.end());
  return combined;
}

Matrix lift_blocks(const Matrix& data, int n, const LiftIndexSet& set) {
  set.validate();
  const int s = set.source_dim();
  if (data.rows() != static_cast<Eigen::Index>(s) * n || data.rows() != data.cols())
    throw DimensionError("lift_blocks: data does not match source dimension");
  // src_of[t] = source block at target slot t, or -1 for an inserted zero slot.
  std::vector<int> src_of(set.target_dim, -1);
  {
    auto it = set.indices.begin();
    int next_src = 0;
    for (int t = 0; t < set.target_dim; ++t) {
      if (it != set.indices.end() && *it == t) {
        ++it;
        continue;
      }
      src_of[t] = next_src++;
    }
  }
  Matrix out = Matrix::Zero(static_cast<Eigen::Index>(set.target_dim) * n,
                            static_cast<Eigen::Index>(set.target_dim) * n);
  for (int ti = 0; ti < set.target_dim; ++ti) {
    if (src_of[ti] < 0) continue;
    for (int tj = 0; tj < set.target_dim; ++tj) {
      if (src_of[tj] < 0) continue;
      out.block(ti * n, tj * n, n, n) = data.block(src_of[ti] * n, src_of[tj] * n, n, n);
    }
  }
  return out;
}

ChoiMatrix lift(const ChoiMatrix& c, const LiftIndexSet& set) {
  if (set.source_dim() != c.input_dim())
    throw DimensionError("lift: index set does not match input dimension");
  return ChoiMatrix(set.target_dim, c.output_dim(), lift_blocks(c.data(), c.output_dim(), set));
}

ChoiMatrix remove_blocks(const ChoiMatrix& c, const std::vector<int>& indices) {
  const int m = c.input_dim();
  const int n = c.output_dim();
  const int reduced = m - static_cast<int>(indices.size());
  if (reduced <= 0) throw DimensionError("remove_blocks: nothing would remain");
  std::vector<int> keep;
  keep.reserve(reduced);
  for (int i = 0; i < m; ++i)
    if (std::find(indices.begin(), indices.end(), i) == indices.end()) keep.push_back(i);
  Matrix out(reduced * n, reduced * n);
  for (int i = 0; i < reduced; ++i)
    for (int j = 0; j < reduced; ++j)
      out.block(i * n, j * n, n, n) = c.block(keep[i], keep[j]);
  return ChoiMatrix(reduced, n, std::move(out));
}

UnliftResult unlift(const ChoiMatrix& c, double tol) {
  const int m = c.input_dim();
  const int n = c.output_dim();
  const double threshold = tol * c.data().norm();
  std::vector<int> zero_blocks;
  for (int q = 0; q < m; ++q) {
    const double row_norm = c.data().middleRows(q * n, n).norm();
    const double col_norm = c.data().middleCols(q * n, n).norm();
    if (row_norm <= threshold && col_norm <= threshold) zero_blocks.push_back(q);
  }
  if (zero_blocks.empty() || static_cast<int>(zero_blocks.size()) == m)
    return {c, LiftIndexSet{m, {}}};
  return {remove_blocks(c, zero_blocks), LiftIndexSet{m, zero_blocks}};
}

Complex pair_complex(const Matrix& a, const ChoiMatrix& c) {
  if (a.rows() != c.data().rows() || a.cols() != c.data().cols())
    throw DimensionError("pair: dimension mismatch");
  // Tr(C A^T), the computational form of sum_ij Tr(phi(E_ij) A_ij^t).
  return (c.data().array() * a.array()).sum();
}

double pair(const Matrix& a, const ChoiMatrix& c) { return pair_complex(a, c).real(); }

}  // namespace posmap
