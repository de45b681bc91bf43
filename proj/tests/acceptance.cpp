// Acceptance suite: end-to-end checks of the library against its quantitative
// anchors, one pass/fail line per criterion.  Exit code is the number of
// failed criteria.

#include "posmap/choi.hpp"
#include "posmap/families.hpp"
#include "posmap/matrix.hpp"
#include "posmap/peel.hpp"
#include "posmap/positivity.hpp"
#include "posmap/rng.hpp"
#include "posmap/split.hpp"
#include "posmap/states.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

using namespace posmap;

namespace {

constexpr std::uint64_t kSeed = 20240817;

struct Criterion {
  int number;
  std::string title;
  double budget_seconds;
  std::function<bool(std::string&)> run;
};

bool expect(bool ok, const std::string& what, std::string& detail) {
  if (!ok && detail.size() < 4000) detail += "      failed: " + what + "\n";
  return ok;
}

std::vector<GChoiParams> acceptance_grid() {
  std::vector<GChoiParams> grid;
  for (int ia = 0; ia <= 8; ++ia)
    for (int ib = 0; ib <= 8; ++ib)
      for (int ic = 0; ic <= 8; ++ic)
        grid.push_back({1.0 + 0.25 * ia, 0.25 * ib, 0.25 * ic});
  return grid;
}

bool on_2positivity_boundary(const GChoiParams& p) {
  return p.a < 2.0 && std::abs(p.b * p.c - (2.0 - p.a) * (p.b + p.c)) < 1e-6;
}

Matrix gchoi_peel_cp_closed_form(const GChoiParams& p) {
  Matrix u = Matrix::Zero(9, 9);
  u(0, 0) = p.a;
  u(1, 1) = p.c;
  u(2, 2) = p.b;
  u(0, 4) = u(4, 0) = -1.0;
  u(0, 8) = u(8, 0) = -1.0;
  u(4, 4) = u(8, 8) = u(4, 8) = u(8, 4) = 1.0 / p.a;
  return u;
}

Matrix gchoi_peel_remainder_closed_form(const GChoiParams& p) {
  Matrix r = Matrix::Zero(9, 9);
  r(3, 3) = p.b;
  r(4, 4) = p.a - 1.0 / p.a;
  r(5, 5) = p.c;
  r(6, 6) = p.c;
  r(7, 7) = p.b;
  r(8, 8) = p.a - 1.0 / p.a;
  r(4, 8) = r(8, 4) = -1.0 - 1.0 / p.a;
  return r;
}

// --- criterion 1: Penrose properties of the pseudoinverse ------------------

bool criterion_penrose(std::string& detail) {
  Rng rng(Rng::derive(kSeed, 1));
  bool ok = true;
  for (int i = 0; i < 500; ++i) {
    const int rows = 1 + static_cast<int>(rng.uniform() * 12);
    const int cols = 1 + static_cast<int>(rng.uniform() * 12);
    const int variant = i % 4;
    Matrix a;
    switch (variant) {
      case 0: a = rng.gaussian_matrix(rows, cols); break;
      case 1: {  // rank deficient
        const int r = 1 + std::min(rows, cols) / 2;
        a = rng.gaussian_matrix(rows, r) * rng.gaussian_matrix(r, cols);
        break;
      }
      case 2:  // well-conditioned square, for P4
        a = rng.gaussian_matrix(rows, rows) + 3.0 * Matrix::Identity(rows, rows);
        break;
      default:  // PSD, for P5
        a = rng.psd_gaussian(rows);
        break;
    }
    const Matrix ap = pinv(a);
    const double na = std::max(1e-6, a.norm());
    const double nap = std::max(1e-6, ap.norm());
    ok &= expect((a * ap * a - a).norm() <= 1e-9 * na, "P1 A A+ A = A", detail);
    ok &= expect((ap * a * ap - ap).norm() <= 1e-9 * nap, "P1 A+ A A+ = A+", detail);
    const Matrix proj_range = a * ap;
    const Matrix proj_corange = ap * a;
    ok &= expect((proj_range - proj_range.adjoint()).norm() <= 1e-9 * std::max(1.0, na),
                 "P2 (A A+)* = A A+", detail);
    ok &= expect((proj_corange - proj_corange.adjoint()).norm() <= 1e-9 * std::max(1.0, na),
                 "P2 (A+ A)* = A+ A", detail);
    ok &= expect((proj_range * proj_range - proj_range).norm() <= 1e-9, "P3 idempotent", detail);
    ok &= expect((proj_range * a - a).norm() <= 1e-9 * na, "P3 fixes range(A)", detail);
    if (variant == 2)
      ok &= expect((ap - a.inverse()).norm() <= 1e-9 * a.inverse().norm(), "P4 inverse", detail);
    if (variant == 3) {
      const PsdResult psd = is_psd(hermitize(ap));
      ok &= expect(psd.min_eigenvalue >= -1e-9 * std::max(1.0, nap), "P5 pinv PSD", detail);
    }
  }
  return ok;
}

// --- criterion 2: block PSD equivalences ------------------------------------

bool criterion_block_equivalence(std::string& detail) {
  Rng rng(Rng::derive(kSeed, 2));
  bool ok = true;
  for (int i = 0; i < 200; ++i) {
    const int d = 2 + static_cast<int>(rng.uniform() * 7);
    const int split = 1 + static_cast<int>(rng.uniform() * (d - 1));
    Matrix m;
    switch (i % 4) {
      case 0: m = rng.psd_gaussian(d); break;
      case 1: m = rng.psd_gaussian(d, std::max(1, d - 2)); break;
      case 2: {
        m = rng.hermitian_gaussian(d);
        Eigen::SelfAdjointEigenSolver<Matrix> eig(m, Eigen::EigenvaluesOnly);
        if (eig.eigenvalues().cwiseAbs().minCoeff() < 1e-4 * m.norm()) {
          --i;
          continue;
        }
        break;
      }
      default: {
        Matrix a = rng.psd_gaussian(split, std::max(1, split - 1));
        Matrix b = rng.gaussian_matrix(split, d - split);
        Matrix c = rng.psd_gaussian(d - split);
        m = Matrix::Zero(d, d);
        m.topLeftCorner(split, split) = a;
        m.topRightCorner(split, d - split) = b;
        m.bottomLeftCorner(d - split, split) = b.adjoint();
        m.bottomRightCorner(d - split, d - split) = c;
        break;
      }
    }
    const double tol = 1e-8;
    HermitianMatrix hm(m);
    const bool brute = is_psd(hm, tol).is_psd;  // condition (1), brute force
    Matrix a = m.topLeftCorner(split, split);
    Matrix b = m.topRightCorner(split, d - split);
    Matrix c = m.bottomRightCorner(d - split, d - split);
    const bool cond2 =
        is_psd(hermitize(a), tol).is_psd &&
        is_psd(hermitize(schur_complement(hm, split, SchurCorner::UpperLeft)), tol).is_psd &&
        range_included(b, a, tol);
    const bool cond3 =
        is_psd(hermitize(c), tol).is_psd &&
        is_psd(hermitize(schur_complement(hm, split, SchurCorner::LowerRight)), tol).is_psd &&
        range_included(b.adjoint(), c, tol);
    ok &= expect(brute == cond2, "condition (1) == condition (2) at instance " + std::to_string(i),
                 detail);
    ok &= expect(brute == cond3, "condition (1) == condition (3) at instance " + std::to_string(i),
                 detail);
  }
  return ok;
}

// --- criterion 3: the omega family ------------------------------------------

bool criterion_omega(std::string& detail) {
  bool ok = true;
  SeesawOptions opts;
  opts.restarts = 64;
  opts.rng_seed = kSeed;

  for (int i = -14; i <= 14; ++i) {
    const double eps = 0.05 * i;
    if (std::abs(std::abs(eps) - 0.5) < 1e-6) continue;  // boundary band
    const PositivityVerdict v = check_k_positive(omega_choi({eps}), 1, opts);
    ok &= expect(v.refuted() == !omega_is_positive({eps}),
                 "positivity verdict at eps = " + std::to_string(eps), detail);
  }

  for (double eps : {0.5, -0.5}) {
    auto [p, q] = omega_split({eps});
    ChoiMatrix c = omega_choi({eps});
    const VerifyReport report = verify_decomposition(c, {p, q, 0, 0, 0, 0, {}}, 1e-8);
    ok &= expect(report.pass, "omega_split verifies at eps = " + std::to_string(eps), detail);
    ok &= expect(report.min_eig_cp >= -1e-10 && report.min_eig_ccp >= -1e-10,
                 "omega_split eigenvalue floors at eps = " + std::to_string(eps), detail);
  }

  for (int i = -14; i <= 14; ++i) {
    const double eps = 0.05 * i;
    Matrix u_expected = Matrix::Zero(4, 4);
    u_expected(0, 0) = 1.0;
    u_expected(0, 3) = u_expected(3, 0) = eps;
    u_expected(3, 3) = eps * eps;
    Matrix r_expected = Matrix::Zero(4, 4);
    r_expected(1, 2) = r_expected(2, 1) = eps;
    r_expected(3, 3) = 1.0 - eps * eps;
    if (i == 0) {
      const PeelResult res = peel_once(omega_choi({eps}), 0);
      ok &= expect((res.cp_part.data() - u_expected).cwiseAbs().maxCoeff() <= 1e-14,
                   "peel display U at eps = 0", detail);
      ok &= expect((res.remainder.data() - r_expected).cwiseAbs().maxCoeff() <= 1e-14,
                   "peel display R at eps = 0", detail);
      continue;
    }
    try {
      peel_once(omega_choi({eps}), 0);
      ok &= expect(false, "peel must refuse eps = " + std::to_string(eps), detail);
    } catch (const NotTwoPositiveError& e) {
      ok &= expect((e.cp_part - u_expected).cwiseAbs().maxCoeff() <= 1e-14,
                   "peel display U at eps = " + std::to_string(eps), detail);
      ok &= expect((e.remainder - r_expected).cwiseAbs().maxCoeff() <= 1e-14,
                   "peel display R at eps = " + std::to_string(eps), detail);
      ok &= expect(std::abs(e.residual - std::abs(eps)) <= 1e-12,
                   "peel residual equals |eps| at eps = " + std::to_string(eps), detail);
    }
  }
  return ok;
}

// --- criterion 4: the generalized Choi family oracle grid -------------------

bool criterion_gchoi_grid(std::string& detail) {
  bool ok = true;
  SeesawOptions opts;
  opts.restarts = 64;
  opts.rng_seed = kSeed;
  int checked = 0;
  int certified = 0;
  for (const GChoiParams& p : acceptance_grid()) {
    if (on_2positivity_boundary(p)) continue;  // boundary band excluded
    const ChoiMatrix c = gchoi_choi(p);
    const PositivityVerdict v = check_k_positive(c, 2, opts);
    const bool oracle = gchoi_is_2positive(p);
    if (v.refuted())
      ok &= expect(!oracle,
                   "refutation against the oracle at (" + std::to_string(p.a) + ", " +
                       std::to_string(p.b) + ", " + std::to_string(p.c) + ")",
                   detail);
    ++checked;

    const bool completely_positive = p.a >= 2.0;
    if (oracle && !completely_positive) {
      ok &= expect(gchoi_condition_star(p),
                   "condition (*) at (" + std::to_string(p.a) + ", " + std::to_string(p.b) + ", " +
                       std::to_string(p.c) + ")",
                   detail);
      auto [phi1, phi2] = gchoi_explicit_decomposition(p);
      ok &= expect(is_psd(phi1.data()).min_eigenvalue >= -1e-10, "C_Phi1 certificate", detail);
      ok &= expect(is_psd(phi2.partially_transposed().data()).min_eigenvalue >= -1e-10,
                   "C_Phi2 partial transpose certificate", detail);
      ok &= expect((phi1.data() + phi2.data() - c.data()).cwiseAbs().maxCoeff() == 0.0,
                   "exact sum reconstruction", detail);
      ++certified;
    }
  }
  ok &= expect(checked > 600, "grid coverage", detail);
  ok &= expect(certified > 50, "nontrivial certificate coverage", detail);
  return ok;
}

// --- criterion 5: peel correctness -------------------------------------------

bool criterion_peel(std::string& detail) {
  Rng rng(Rng::derive(kSeed, 5));
  bool ok = true;
  for (int i = 0; i < 100; ++i) {
    const ChoiMatrix c(3, 3, rng.psd_gaussian(9, 4 + i % 6));
    const int pivot = select_pivot(c);
    const PeelResult res = peel_once(c, pivot);
    const double scale = c.data().norm();
    ok &= expect((res.cp_part.data() + res.remainder.data() - c.data()).norm() <= 1e-12 * scale,
                 "reconstruction on random PSD " + std::to_string(i), detail);
    ok &= expect(is_psd(res.cp_part.data()).min_eigenvalue >= -1e-9 * scale,
                 "CP certificate on random PSD " + std::to_string(i), detail);
    ok &= expect(res.row_residual <= 1e-8 * scale,
                 "row residual on random PSD " + std::to_string(i), detail);
  }
  for (const GChoiParams& p : acceptance_grid()) {
    if (!gchoi_is_2positive(p)) continue;
    const ChoiMatrix c = gchoi_choi(p);
    const PeelResult res = peel_once(c, 0);
    const double scale = std::max(1.0, c.data().norm());
    ok &= expect((res.cp_part.data() + res.remainder.data() - c.data()).norm() <= 1e-12 * scale,
                 "family reconstruction", detail);
    ok &= expect(is_psd(res.cp_part.data()).min_eigenvalue >= -1e-9 * scale, "family CP part",
                 detail);
    ok &= expect(res.row_residual <= 1e-8 * scale, "family row residual", detail);
    ok &= expect(
        (res.cp_part.data() - gchoi_peel_cp_closed_form(p)).cwiseAbs().maxCoeff() <= 1e-12,
        "family U display", detail);
    ok &= expect(
        (res.remainder.data() - gchoi_peel_remainder_closed_form(p)).cwiseAbs().maxCoeff() <=
            1e-12,
        "family R display", detail);
  }
  return ok;
}

// --- criterion 6: the M3 decomposition pipeline ------------------------------

bool criterion_pipeline(std::string& detail) {
  bool ok = true;
  SeesawOptions opts;
  opts.restarts = 64;
  opts.rng_seed = kSeed;

  int accepted = 0;
  std::uint64_t stream = 0;
  const double margins[5] = {0.3, 0.5, 0.7, 0.9, 1.1};
  while (accepted < 50 && stream < 400) {
    Rng rng(Rng::derive(kSeed ^ 0xfeedULL, stream));
    const double margin = margins[stream % 5];
    ++stream;
    Matrix p = rng.psd_gaussian(9);
    p /= p.norm();
    Matrix q = rng.psd_gaussian(9);
    q /= q.norm();
    const double lambda_p = is_psd(p).min_eigenvalue;
    const double lambda_qg = is_psd(partial_transpose(q, 3, 3)).min_eigenvalue;
    const double theta = margin * lambda_p / std::abs(std::min(lambda_qg, -1e-12));
    const Matrix data = p + theta * partial_transpose(q, 3, 3);
    const ChoiMatrix c(3, 3, data);
    if (check_k_positive(c, 2, opts).refuted()) continue;  // instance filter

    const auto start = std::chrono::steady_clock::now();
    try {
      const Decomposition d = decompose_2positive_3x3(c, {}, opts);
      const double scale = std::max(1.0, c.data().norm());
      ok &= expect(d.residual <= 1e-7 * scale, "pipeline residual on random instance", detail);
      ok &= expect(d.min_eig_cp >= -1e-7 && d.min_eig_ccp >= -1e-7,
                   "pipeline certificates on random instance", detail);
    } catch (const std::exception& e) {
      ok &= expect(false, std::string("pipeline failed on accepted instance: ") + e.what(),
                   detail);
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    ok &= expect(elapsed < 5.0, "single run under 5 s", detail);
    ++accepted;
  }
  ok &= expect(accepted == 50, "collected 50 unrefuted random instances", detail);

  const GChoiParams family[10] = {{2.25, 0.5, 1.0}, {1.5, 1.5, 1.0},   {1.75, 0.75, 0.75},
                                  {2.0, 1.0, 1.0},  {2.5, 0.0, 0.0},   {3.0, 2.0, 2.0},
                                  {1.25, 2.0, 2.0}, {1.25, 1.75, 2.0}, {1.75, 2.0, 0.5},
                                  {2.75, 0.25, 0.0}};
  for (const GChoiParams& p : family) {
    if (!expect(gchoi_is_2positive(p), "family instance is 2-positive", detail)) {
      ok = false;
      continue;
    }
    const ChoiMatrix c = gchoi_choi(p);
    const auto start = std::chrono::steady_clock::now();
    try {
      const Decomposition d = decompose_2positive_3x3(c, {}, opts);
      const double scale = std::max(1.0, c.data().norm());
      ok &= expect(d.residual <= 1e-7 * scale, "pipeline residual on family instance", detail);
      ok &= expect(d.min_eig_cp >= -1e-7 && d.min_eig_ccp >= -1e-7,
                   "pipeline certificates on family instance", detail);
    } catch (const std::exception& e) {
      ok &= expect(false, std::string("pipeline failed on family instance: ") + e.what(), detail);
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    ok &= expect(elapsed < 5.0, "family run under 5 s", detail);
  }
  return ok;
}

// --- criterion 7: refutation power -------------------------------------------

bool criterion_refutation(std::string& detail) {
  SeesawOptions opts;
  opts.restarts = 64;
  opts.rng_seed = kSeed;
  const PositivityVerdict v = check_k_positive(gchoi_choi({1, 1, 1}), 2, opts);
  bool ok = expect(v.refuted(), "Phi[1,1,1] refuted at k = 2", detail);
  ok &= expect(v.min_value_found <= -0.30,
               "witness value " + std::to_string(v.min_value_found) + " <= -0.30", detail);
  if (v.witness) {
    const Vector w = v.witness->conjugate();
    const double recomputed = (w.adjoint() * gchoi_choi({1, 1, 1}).data() * w)(0).real();
    ok &= expect(std::abs(recomputed - v.min_value_found) <= 1e-10, "witness value recomputes",
                 detail);
    ok &= expect(schmidt_rank(BipartiteVector{3, 3, *v.witness}, 1e-8) <= 2,
                 "witness Schmidt rank <= 2", detail);
  } else {
    ok = expect(false, "witness attached", detail);
  }
  return ok;
}

// --- criterion 8: non-uniqueness at (1.5, 1, 0.25) ---------------------------

bool criterion_nonuniqueness(std::string& detail) {
  const GChoiParams p{1.5, 1.0, 0.25};
  const ChoiMatrix c = gchoi_choi(p);
  bool ok = true;

  auto [phi1, phi2] = gchoi_explicit_decomposition(p);
  const VerifyReport explicit_report = verify_decomposition(
      c, {phi1.data(), partial_transpose(phi2.data(), 3, 3), 0, 0, 0, 0, {}});
  ok &= expect(explicit_report.pass,
               "explicit decomposition verifies (min coCP eigenvalue " +
                   std::to_string(explicit_report.min_eig_ccp) +
                   "); note (1.5, 1, 0.25) lies outside the 2-positive regime: bc = 0.25 < "
                   "(a - 1 - 2/a)^2 = 0.694, so the closed-form coCP certificate cannot hold",
               detail);

  auto [alt1, alt2] = gchoi_alternative_decomposition(p);
  const VerifyReport alt_report = verify_decomposition(
      c, {alt1.data(), partial_transpose(alt2.data(), 3, 3), 0, 0, 0, 0, {}});
  ok &= expect(alt_report.pass, "alternative decomposition verifies", detail);

  ok &= expect((phi1.data() - alt1.data()).cwiseAbs().maxCoeff() > 1e-3,
               "decompositions differ entrywise by more than 1e-3", detail);
  return ok;
}

// --- criterion 9: iterated peel ----------------------------------------------

bool criterion_iterated_peel(std::string& detail) {
  Rng rng(Rng::derive(kSeed, 9));
  bool ok = true;
  for (int i = 0; i < 20; ++i) {
    const ChoiMatrix c(4, 4, rng.psd_gaussian(16, 6 + i % 11));
    try {
      const IteratedPeelResult res = peel_iterate(c, 3);
      ok &= expect(res.cp_parts.size() <= 2, "at most two CP parts", detail);
      ok &= expect(res.remainder.input_dim() == 2, "remainder input dimension 2", detail);
      Matrix total = lift_blocks(res.remainder.data(), 4, res.lift_set);
      for (const auto& part : res.cp_parts) total += part.data();
      ok &= expect((total - c.data()).norm() <= 1e-10 * std::max(1.0, c.data().norm()),
                   "iterated reconstruction", detail);
    } catch (const std::exception& e) {
      ok &= expect(false, std::string("peel_iterate failed: ") + e.what(), detail);
    }
  }
  return ok;
}

// --- criterion 10: state-side machinery --------------------------------------

bool criterion_states(std::string& detail) {
  bool ok = true;

  Vector z = Vector::Zero(9);
  for (int i = 0; i < 3; ++i) z(i * 3 + i) = 1.0 / std::sqrt(3.0);
  const DensityMatrix entangled(3, 3, z * z.adjoint());
  ok &= expect(!is_ppt(entangled), "maximally entangled state is not PPT", detail);

  SeesawOptions witness_opts;
  witness_opts.restarts = 64;
  witness_opts.rng_seed = kSeed;
  const ChoiMatrix witness = gchoi_choi({1, 1, 1});
  const PositivityVerdict verdict = check_k_positive(witness, 1, witness_opts);
  ok &= expect(!verdict.refuted(), "Phi[1,1,1] unrefuted as a positive map", detail);
  ok &= expect(schmidt_number_lower(entangled, {{witness, 1, verdict}}) >= 2,
               "Schmidt number lower bound >= 2", detail);

  SeesawOptions ensemble_opts;
  ensemble_opts.restarts = 16;
  ensemble_opts.max_iters = 2000;
  ensemble_opts.conv_tol = 1e-14;
  ensemble_opts.rng_seed = kSeed;
  Rng rng(Rng::derive(kSeed, 10));
  for (int inst = 0; inst < 5; ++inst) {
    const int terms = 4 + inst % 3;
    Matrix rho = Matrix::Zero(9, 9);
    std::vector<double> weights(terms);
    double total = 0.0;
    for (int t = 0; t < terms; ++t) {
      weights[t] = 0.2 + rng.uniform();
      total += weights[t];
    }
    for (int t = 0; t < terms; ++t) {
      Vector x = rng.gaussian_vector(3);
      Vector y = rng.gaussian_vector(3);
      x.normalize();
      y.normalize();
      Vector prod(9);
      for (int i = 0; i < 3; ++i) prod.segment(i * 3, 3) = x(i) * y;
      rho += (weights[t] / total) * (prod * prod.adjoint());
    }
    const DensityMatrix sep(3, 3, rho);
    const auto cert = schmidt_number_upper(sep, 1, 2 * 9, ensemble_opts, 1e-8);
    if (!expect(cert.has_value(),
                "separable certificate found for instance " + std::to_string(inst), detail)) {
      ok = false;
      continue;
    }
    ok &= expect(cert->residual <= 1e-8, "certificate residual", detail);
    ok &= expect(cert->max_schmidt_rank == 1, "certificate rank bound", detail);
  }
  return ok;
}

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {1, "Penrose pseudoinverse suite (500 matrices, residuals <= 1e-9)", 5.0,
       criterion_penrose},
      {2, "block PSD equivalences (200 matrices, three-way agreement)", 5.0,
       criterion_block_equivalence},
      {3, "omega family: positivity boundary, split certificates, peel displays", 5.0,
       criterion_omega},
      {4, "generalized Choi grid: oracle agreement and closed-form certificates", 120.0,
       criterion_gchoi_grid},
      {5, "peel correctness on PSD and family instances", 30.0, criterion_peel},
      {6, "M3 pipeline: 50 random + 10 family decompositions", 300.0, criterion_pipeline},
      {7, "refutation power at k = 2 on Phi[1,1,1]", 10.0, criterion_refutation},
      {8, "non-uniqueness of the decomposition at (1.5, 1, 0.25)", 1.0, criterion_nonuniqueness},
      {9, "iterated peel on completely positive maps of M4", 10.0, criterion_iterated_peel},
      {10, "state side: PPT, Schmidt bounds, separable ensembles", 20.0, criterion_states},
  };

  int failures = 0;
  for (const Criterion& criterion : criteria) {
    std::string detail;
    const auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = criterion.run(detail);
    } catch (const std::exception& e) {
      detail += std::string("      unexpected exception: ") + e.what() + "\n";
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_budget = elapsed < criterion.budget_seconds;
    if (!in_budget)
      detail += "      runtime " + std::to_string(elapsed) + " s exceeds budget of " +
                std::to_string(criterion.budget_seconds) + " s\n";
    const bool pass = ok && in_budget;
    std::printf("[%s] criterion %2d: %s (%.2f s)\n", pass ? "PASS" : "FAIL", criterion.number,
                criterion.title.c_str(), elapsed);
    if (!pass) {
      std::fputs(detail.c_str(), stdout);
      ++failures;
    }
  }
  if (failures)
    std::printf("%d of %zu criteria failed\n", failures, criteria.size());
  else
    std::printf("all %zu criteria passed\n", criteria.size());
  return failures;
}
