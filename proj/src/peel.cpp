#include "posmap/peel.hpp"

#include "posmap/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace posmap {

namespace {

void require_hermitian(const ChoiMatrix& c, const char* what) {
  if (!c.is_hermitian()) throw DimensionError(std::string(what) + ": Choi matrix is not Hermitian");
}

}  // namespace

int select_pivot(const ChoiMatrix& c, double tol) {
  require_hermitian(c, "select_pivot");
  const int m = c.input_dim();
  const double threshold = tol * std::max(1.0, c.data().norm());
  int pivot = -1;
  double best = threshold;
  for (int j = 0; j < m; ++j) {
    const double tn = trace_norm(c.block(j, j));
    if (tn > best) {
      best = tn;
      pivot = j;
    }
  }
  if (pivot < 0)
    throw ZeroMapError("select_pivot: every diagonal block vanishes, the map is zero");
  return pivot;
}

PeelResult peel_once(const ChoiMatrix& c, int pivot, double tol) {
  require_hermitian(c, "peel_once");
  const int m = c.input_dim();
  const int n = c.output_dim();
  if (pivot < 0 || pivot >= m) throw DimensionError("peel_once: pivot out of range");
  const Matrix a_pp = c.block(pivot, pivot);
  if (a_pp.norm() <= 1e-14 * std::max(1.0, c.data().norm()))
    throw std::invalid_argument("peel_once: pivot diagonal block is zero");

  // U = (block column p) A_pp^+ (block row p); the factorized form makes U
  // PSD whenever A_pp is, and U_pp = A_pp reproduces the pivot block.
  const Matrix col_strip = c.data().middleCols(pivot * n, n);
  const Matrix row_strip = c.data().middleRows(pivot * n, n);
  Matrix u = col_strip * pinv(a_pp) * row_strip;
  u = ((u + u.adjoint()) / 2.0).eval();
  const Matrix r = c.data() - u;

  double row_residual = 0.0;
  int worst_block = pivot;
  for (int j = 0; j < m; ++j) {
    const double row_norm = r.block(pivot * n, j * n, n, n).norm();
    const double col_norm = r.block(j * n, pivot * n, n, n).norm();
    const double worst = std::max(row_norm, col_norm);
    if (worst > row_residual) {
      row_residual = worst;
      worst_block = j;
    }
  }
  if (row_residual > tol * std::max(1.0, c.data().norm()))
    throw NotTwoPositiveError(
        "peel_once: pivot row block (" + std::to_string(pivot) + "," + std::to_string(worst_block) +
            ") of the remainder has norm " + std::to_string(row_residual) +
            "; range(A_pj) is not contained in range(A_pp), so the map is not 2-positive",
        pivot, worst_block, row_residual, u, r);

  ChoiMatrix remainder(m, n, r);
  ChoiMatrix unlifted = remove_blocks(remainder, {pivot});
  return PeelResult{pivot,
                    ChoiMatrix(m, n, std::move(u)),
                    std::move(remainder),
                    std::move(unlifted),
                    LiftIndexSet{m, {pivot}},
                    row_residual};
}

PeelResult peel_copositive(const ChoiMatrix& c, int pivot, double tol) {
  require_hermitian(c, "peel_copositive");
  const int m = c.input_dim();
  const int n = c.output_dim();
  try {
    PeelResult res = peel_once(c.partially_transposed(), pivot, tol);
    return PeelResult{res.pivot,
                      res.cp_part.partially_transposed(),
                      res.remainder.partially_transposed(),
                      res.unlifted.partially_transposed(),
                      res.lift_set,
                      res.row_residual};
  } catch (const NotTwoPositiveError& e) {
    // Transpose the partial results back so they sum to the input.
    throw NotTwoPositiveError(std::string(e.what()) + " (copositive variant)", e.pivot, e.block,
                              e.residual, partial_transpose(e.cp_part, m, n),
                              partial_transpose(e.remainder, m, n));
  }
}

IteratedPeelResult peel_iterate(const ChoiMatrix& c, int k, double tol) {
  require_hermitian(c, "peel_iterate");
  const int m = c.input_dim();
  const int n = c.output_dim();
  if (k < 2 || k >= std::min(m, n))
    throw DimensionError("peel_iterate: k must satisfy 2 <= k < min(m, n)");

  IteratedPeelResult result{{}, c, LiftIndexSet{m, {}}};
  ChoiMatrix current = c;
  for (int round = 0; round < k - 1; ++round) {
    int pivot;
    try {
      pivot = select_pivot(current, tol);
    } catch (const ZeroMapError&) {
      if (round == 0) throw;
      break;  // depleted early: fewer CP parts
    }
    try {
      PeelResult step = peel_once(current, pivot, tol);
      result.cp_parts.push_back(
          result.lift_set.indices.empty()
              ? step.cp_part
              : ChoiMatrix(m, n, lift_blocks(step.cp_part.data(), n, result.lift_set)));
      result.lift_set = result.lift_set.compose_inner(step.lift_set);
      current = step.unlifted;
    } catch (NotTwoPositiveError& e) {
      e.round = round + 1;
      throw;
    }
  }
  result.remainder = current;
  return result;
}

}  // namespace posmap
