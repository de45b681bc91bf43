#include "posmap/io.hpp"

#include "posmap/families.hpp"
#include "posmap/rng.hpp"

#include "test_support.hpp"

#include <doctest.h>

#include <sstream>

using namespace posmap;
using namespace posmap::test;

TEST_SUITE_BEGIN("io");

TEST_CASE("round trip is bit-exact") {
  Rng rng(601);
  for (int trial = 0; trial < 10; ++trial) {
    MatrixDocument doc = make_choi_document(ChoiMatrix(2, 3, rng.hermitian_gaussian(6)));
    std::stringstream stream;
    write_document(doc, stream);
    MatrixDocument back = read_document(stream);
    CHECK(back.kind == DocumentKind::Choi);
    CHECK(back.m == 2);
    CHECK(back.n == 3);
    REQUIRE(back.data.rows() == doc.data.rows());
    CHECK((back.data - doc.data).cwiseAbs().maxCoeff() == 0.0);

    // Serializing again yields the identical byte stream.
    std::stringstream second;
    write_document(back, second);
    CHECK(second.str() == stream.str());
  }
}

TEST_CASE("adversarial doubles survive the decimal round trip") {
  Matrix tricky(2, 2);
  tricky << Complex(0.1, -0.3), Complex(1.0 / 3.0, 2.0 / 7.0),
      Complex(1e-300, 1e300), Complex(-5.551115123125783e-17, 4.9e-324);
  MatrixDocument doc = make_matrix_document(tricky);
  std::stringstream stream;
  write_document(doc, stream);
  MatrixDocument back = read_document(stream);
  CHECK((back.data - tricky).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("document validation") {
  // Kind mismatch.
  MatrixDocument doc = make_matrix_document(Matrix::Identity(4, 4));
  CHECK_THROWS_AS(to_choi(doc), IoError);

  // Malformed JSON.
  std::stringstream broken("{\"schema_version\": \"1\", ");
  CHECK_THROWS_AS(read_document(broken), IoError);

  // Wrong grid shape for a choi document.
  std::stringstream bad_shape(R"({
    "schema_version": "1", "kind": "choi", "m": 2, "n": 2,
    "re": [[1, 0], [0, 1]], "im": [[0, 0], [0, 0]]
  })");
  CHECK_THROWS_AS(read_document(bad_shape), IoError);

  // Unknown kind and unsupported schema version.
  std::stringstream bad_kind(R"({
    "schema_version": "1", "kind": "tensor", "m": 1, "n": 1,
    "re": [[1]], "im": [[0]]
  })");
  CHECK_THROWS_AS(read_document(bad_kind), IoError);
  std::stringstream bad_version(R"({
    "schema_version": "9", "kind": "matrix", "m": 1, "n": 1,
    "re": [[1]], "im": [[0]]
  })");
  CHECK_THROWS_AS(read_document(bad_version), IoError);

  // Ragged grid.
  std::stringstream ragged(R"({
    "schema_version": "1", "kind": "matrix", "m": 2, "n": 2,
    "re": [[1, 0], [0]], "im": [[0, 0], [0, 0]]
  })");
  CHECK_THROWS_AS(read_document(ragged), IoError);

  // Non-finite entries are rejected on write.
  Matrix inf_mat = Matrix::Zero(1, 1);
  inf_mat(0, 0) = std::numeric_limits<double>::infinity();
  std::stringstream sink;
  CHECK_THROWS_AS(write_document(make_matrix_document(inf_mat), sink), IoError);
}

TEST_CASE("density documents round trip through validation") {
  Matrix rho = Matrix::Identity(9, 9) / 9.0;
  MatrixDocument doc = make_density_document(DensityMatrix(3, 3, rho));
  std::stringstream stream;
  write_document(doc, stream);
  DensityMatrix back = to_density(read_document(stream));
  CHECK((back.data() - rho).norm() == 0.0);
}

TEST_SUITE_END();
