#include "posmap/families.hpp"

#include "posmap/matrix.hpp"

#include <cmath>
#include <string>

namespace posmap {

namespace {

void validate(const GChoiParams& p) {
  if (!(p.a >= 0.0) || !(p.b >= 0.0) || !(p.c >= 0.0) || !std::isfinite(p.a) ||
      !std::isfinite(p.b) || !std::isfinite(p.c))
    throw std::invalid_argument("gchoi: parameters must be finite and non-negative");
}

void set_sym(Matrix& m, int i, int j, double v) {
  m(i, j) = v;
  m(j, i) = v;
}

}  // namespace

ChoiMatrix gchoi_choi(const GChoiParams& p) {
  validate(p);
  Matrix m = Matrix::Zero(9, 9);
  const double diag[9] = {p.a, p.c, p.b, p.b, p.a, p.c, p.c, p.b, p.a};
  for (int i = 0; i < 9; ++i) m(i, i) = diag[i];
  set_sym(m, 0, 4, -1.0);
  set_sym(m, 0, 8, -1.0);
  set_sym(m, 4, 8, -1.0);
  return ChoiMatrix(3, 3, std::move(m));
}

bool gchoi_is_2positive(const GChoiParams& p) {
  validate(p);
  if (p.a >= 2.0) return true;
  return p.a >= 1.0 && p.b * p.c >= (2.0 - p.a) * (p.b + p.c);
}

bool gchoi_star_applicable(const GChoiParams& p) {
  return p.a >= 1.0 && p.a < 2.0 && gchoi_is_2positive(p);
}

bool gchoi_condition_star(const GChoiParams& p) {
  validate(p);
  if (p.a == 0.0) throw std::invalid_argument("gchoi_condition_star: a must be positive");
  const double t = p.a - 1.0 - 2.0 / p.a;
  return p.b * p.c >= t * t;
}

std::pair<ChoiMatrix, ChoiMatrix> gchoi_explicit_decomposition(const GChoiParams& p) {
  validate(p);
  if (p.a == 0.0) throw std::invalid_argument("gchoi_explicit_decomposition: a must be positive");
  const double coupling = 2.0 / p.a - p.a;  // the (2/a - a) entries of Phi1

  Matrix phi1 = Matrix::Zero(9, 9);
  const double diag1[9] = {p.a, p.c, p.b, p.b, p.a, 0.0, p.c, 0.0, p.a};
  for (int i = 0; i < 9; ++i) phi1(i, i) = diag1[i];
  set_sym(phi1, 0, 4, -1.0);
  set_sym(phi1, 0, 8, -1.0);
  set_sym(phi1, 4, 8, coupling);

  // Phi2 as the exact difference, so the pair reconstructs bit for bit.  Its
  // nonzero entries are c at (5,5), b at (7,7) and (a - 1 - 2/a) at (4,8).
  Matrix phi2 = gchoi_choi(p).data() - phi1;
  return {ChoiMatrix(3, 3, std::move(phi1)), ChoiMatrix(3, 3, std::move(phi2))};
}

std::pair<ChoiMatrix, ChoiMatrix> gchoi_alternative_decomposition(const GChoiParams& p) {
  validate(p);
  if (p.b <= 0.0 || p.c <= 0.0)
    throw std::invalid_argument("gchoi_alternative_decomposition: b and c must be positive");
  const double s = std::sqrt(p.b * p.c);
  if (s == 1.0)
    throw std::invalid_argument("gchoi_alternative_decomposition: bc = 1 is excluded");
  const GChoiParams first{(p.a - s) / (1.0 - s), 0.0, 0.0};
  const GChoiParams second{1.0, std::sqrt(p.b / p.c), std::sqrt(p.c / p.b)};
  Matrix m1 = (1.0 - s) * gchoi_choi(first).data();
  Matrix m2 = s * gchoi_choi(second).data();
  return {ChoiMatrix(3, 3, std::move(m1)), ChoiMatrix(3, 3, std::move(m2))};
}

ChoiMatrix omega_choi(const OmegaParams& p) {
  if (!std::isfinite(p.eps)) throw std::invalid_argument("omega_choi: eps must be finite");
  Matrix m = Matrix::Zero(4, 4);
  m(0, 0) = 1.0;
  m(3, 3) = 1.0;
  set_sym(m, 0, 3, p.eps);
  set_sym(m, 1, 2, p.eps);
  return ChoiMatrix(2, 2, std::move(m));
}

bool omega_is_positive(const OmegaParams& p) {
  if (!std::isfinite(p.eps)) throw std::invalid_argument("omega_is_positive: eps must be finite");
  return std::abs(p.eps) <= 0.5;
}

std::pair<Matrix, Matrix> omega_split(const OmegaParams& p) {
  if (!omega_is_positive(p))
    throw std::invalid_argument("omega_split: requires |eps| <= 1/2");
  Matrix cp = Matrix::Zero(4, 4);
  cp(0, 0) = 0.5;
  cp(3, 3) = 0.5;
  set_sym(cp, 0, 3, p.eps);
  // The copositive half has Choi matrix with the eps entries at (1,2)/(2,1);
  // its partial transpose Q happens to coincide with P.
  const Matrix ccp_choi = omega_choi(p).data() - cp;
  return {cp, partial_transpose(ccp_choi, 2, 2)};
}

}  // namespace posmap
