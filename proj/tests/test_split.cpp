#include "posmap/split.hpp"

#include "posmap/families.hpp"
#include "posmap/rng.hpp"

#include "test_support.hpp"

#include <doctest.h>

using namespace posmap;
using namespace posmap::test;

namespace {

SeesawOptions precheck_opts() {
  SeesawOptions opts;
  opts.restarts = 24;
  opts.rng_seed = 31;
  return opts;
}

}  // namespace

TEST_SUITE_BEGIN("split");

TEST_CASE("split_cp_ccp on the omega map") {
  ChoiMatrix c = omega_choi({0.5});
  Decomposition d = split_cp_ccp(c);
  VerifyReport report = verify_decomposition(c, d);
  CHECK(report.pass);
  CHECK(d.residual <= 1e-8 * std::max(1.0, c.data().norm()));
  CHECK(d.min_eig_cp >= -1e-8);
  CHECK(d.min_eig_ccp >= -1e-8);

  // The paper's explicit halves are one valid witness; the solver's split
  // need not coincide with them, only the certificates are contracted.
  auto [p, q] = omega_split({0.5});
  Decomposition explicit_split{p, q, 0.0, 0.0, 0.0, 0, {}};
  CHECK(verify_decomposition(c, explicit_split).pass);
}

TEST_CASE("split_cp_ccp on PSD input") {
  Rng rng(301);
  ChoiMatrix c(2, 3, rng.psd_gaussian(6));
  Decomposition d = split_cp_ccp(c);
  CHECK(verify_decomposition(c, d).pass);
}

TEST_CASE("split_cp_ccp on a 2-positive family instance") {
  ChoiMatrix c = gchoi_choi({1.5, 1, 1});
  Decomposition d = split_cp_ccp(c);
  CHECK(verify_decomposition(c, d).pass);
}

TEST_CASE("split gap history is non-increasing") {
  ChoiMatrix c = gchoi_choi({1.5, 1, 1});
  Decomposition d = split_cp_ccp(c);
  REQUIRE(!d.gap_history.empty());
  const double slack = 1e-12 * std::max(1.0, c.data().norm());
  for (std::size_t i = 1; i < d.gap_history.size(); ++i)
    CHECK(d.gap_history[i] <= d.gap_history[i - 1] + slack);
}

TEST_CASE("split_cp_ccp declares the indecomposable Choi map infeasible") {
  // Phi[1,0,1] is the classical positive indecomposable map; the affine gap
  // stalls at a macroscopic value.
  ChoiMatrix c = gchoi_choi({1, 0, 1});
  SplitOptions opts;
  opts.max_iters = 4000;
  try {
    split_cp_ccp(c, opts);
    FAIL("expected InfeasibleError");
  } catch (const InfeasibleError& e) {
    CHECK(e.gap > 0.1);
  }
}

TEST_CASE("split_cp_ccp follows the decomposability boundary of the family") {
  // Phi[1,b,c] is decomposable iff bc >= (2-a)^2/4 = 1/4; note Phi[1,1,1]
  // is decomposable although it is not 2-positive.
  CHECK_NOTHROW(split_cp_ccp(gchoi_choi({1, 1, 1})));
  CHECK_NOTHROW(split_cp_ccp(gchoi_choi({1, 0.5, 0.5})));
  SplitOptions opts;
  opts.max_iters = 3000;
  CHECK_THROWS_AS(split_cp_ccp(gchoi_choi({1, 0.2, 0.2}), opts), InfeasibleError);
}

TEST_CASE("decompose_2positive_3x3 pipeline") {
  ChoiMatrix c = gchoi_choi({1.5, 1, 1});
  Decomposition d = decompose_2positive_3x3(c, {}, precheck_opts());
  CHECK(d.residual <= 1e-8 * std::max(1.0, c.data().norm()));
  CHECK(verify_decomposition(c, d).pass);

  Rng rng(302);
  ChoiMatrix psd(3, 3, rng.psd_gaussian(9));
  Decomposition dp = decompose_2positive_3x3(psd, {}, precheck_opts());
  CHECK(verify_decomposition(psd, dp).pass);

  CHECK_THROWS_AS(decompose_2positive_3x3(gchoi_choi({1, 1, 1}), {}, precheck_opts()),
                  RefutedInputError);
  CHECK_THROWS_AS(decompose_2positive_3x3(ChoiMatrix(2, 2, Matrix::Zero(4, 4))), DimensionError);
}

TEST_CASE("pipeline closure: pairing splits linearly across the parts") {
  Rng rng(303);
  ChoiMatrix c = gchoi_choi({1.5, 1.5, 1.0});
  REQUIRE(gchoi_is_2positive({1.5, 1.5, 1.0}));
  Decomposition d = decompose_2positive_3x3(c, {}, precheck_opts());
  ChoiMatrix cp(3, 3, d.cp);
  ChoiMatrix ccp_part(3, 3, partial_transpose(d.ccp, 3, 3));
  ChoiMatrix recombined(3, 3, d.cp + partial_transpose(d.ccp, 3, 3));
  for (int trial = 0; trial < 10; ++trial) {
    Matrix state = rng.hermitian_gaussian(9);
    // The pairing itself is exactly additive across the parts...
    const double parts = pair(state, cp) + pair(state, ccp_part);
    CHECK(pair(state, recombined) == doctest::Approx(parts).epsilon(1e-10));
    // ...and against the input it is off by at most the split residual.
    CHECK(std::abs(pair(state, c) - parts) <= state.norm() * d.residual + 1e-12);
  }
  // Duality audit: the CP part pairs non-negatively with every state, the
  // coCP part with every partially transposed state.
  for (int trial = 0; trial < 10; ++trial) {
    Vector z = rng.gaussian_vector(9);
    z.normalize();
    Matrix state = z * z.adjoint();
    CHECK(pair(state, cp) >= -1e-7);
    CHECK(pair(partial_transpose(state, 3, 3), ccp_part) >= -1e-7);
  }
}

TEST_CASE("decompose_2copositive_3x3 examples") {
  Rng rng(304);
  Vector z = rng.gaussian_vector(9);
  z.normalize();
  ChoiMatrix flipped_state(3, 3, partial_transpose(z * z.adjoint(), 3, 3));
  Decomposition d = decompose_2copositive_3x3(flipped_state, {}, precheck_opts());
  CHECK(d.cp.norm() <= 1e-8);
  CHECK((d.ccp - z * z.adjoint()).norm() <= 1e-8);
  CHECK(verify_decomposition(flipped_state, d).pass);

  ChoiMatrix tau3 = ChoiMatrix::transpose_map(3);
  Decomposition dt = decompose_2copositive_3x3(tau3, {}, precheck_opts());
  CHECK(dt.cp.norm() <= 1e-8);
  CHECK(verify_decomposition(tau3, dt).pass);

  CHECK_THROWS_AS(decompose_2copositive_3x3(ChoiMatrix::identity_map(3), {}, precheck_opts()),
                  RefutedInputError);
}

TEST_CASE("verify_decomposition rejects broken certificates") {
  ChoiMatrix c = gchoi_choi({1.5, 1, 1});
  auto [phi1, phi2] = gchoi_explicit_decomposition({1.5, 1, 1});
  Decomposition good{phi1.data(), partial_transpose(phi2.data(), 3, 3), 0, 0, 0, 0, {}};
  CHECK(verify_decomposition(c, good).pass);

  Decomposition doubled{c.data(), c.data(), 0, 0, 0, 0, {}};
  VerifyReport bad_residual = verify_decomposition(c, doubled);
  CHECK_FALSE(bad_residual.pass);
  CHECK_FALSE(bad_residual.residual_ok);

  Matrix negative = Matrix::Zero(9, 9);
  negative(0, 0) = -1.0;
  Decomposition bad_cert{c.data() + negative - negative, negative, 0, 0, 0, 0, {}};
  // cp = C, ccp has eigenvalue -1: residual fails and the certificate fails.
  VerifyReport report = verify_decomposition(c, bad_cert);
  CHECK_FALSE(report.pass);
  CHECK_FALSE(report.ccp_ok);
}

TEST_SUITE_END();
