#include "posmap/choi.hpp"
#include "posmap/families.hpp"
#include "posmap/matrix.hpp"
#include "posmap/peel.hpp"
#include "posmap/positivity.hpp"
#include "posmap/split.hpp"
#include "posmap/states.hpp"

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

namespace py = pybind11;
using namespace posmap;

namespace {

SeesawOptions make_opts(int restarts, int max_iters, double conv_tol, std::uint64_t seed) {
  SeesawOptions opts;
  opts.restarts = restarts;
  opts.max_iters = max_iters;
  opts.conv_tol = conv_tol;
  opts.rng_seed = seed;
  return opts;
}

const char* kind_name(VerdictKind kind) {
  switch (kind) {
    case VerdictKind::CertifiedExact: return "certified-exact";
    case VerdictKind::HeuristicUnrefuted: return "heuristically-unrefuted";
    case VerdictKind::Refuted: return "refuted";
  }
  return "unknown";
}

}  // namespace

PYBIND11_MODULE(_posmap, m) {
  m.doc() = "Choi matrices, k-positivity checks, peel-off and CP + coCP decompositions";

  py::register_exception<DimensionError>(m, "DimensionError", PyExc_ValueError);
  py::register_exception<ZeroMapError>(m, "ZeroMapError", PyExc_RuntimeError);
  static py::exception<NotTwoPositiveError> not_two_positive(m, "NotTwoPositiveError",
                                                             PyExc_RuntimeError);
  static py::exception<InfeasibleError> infeasible(m, "InfeasibleError", PyExc_RuntimeError);
  static py::exception<RefutedInputError> refuted_input(m, "RefutedInputError",
                                                        PyExc_RuntimeError);

  py::class_<ChoiMatrix>(m, "ChoiMatrix")
      .def(py::init<int, int, Matrix>(), py::arg("m"), py::arg("n"), py::arg("data"))
      .def_property_readonly("m", &ChoiMatrix::input_dim)
      .def_property_readonly("n", &ChoiMatrix::output_dim)
      .def_property_readonly("data", &ChoiMatrix::data)
      .def_property_readonly("hermitian", &ChoiMatrix::is_hermitian)
      .def("apply", &ChoiMatrix::apply, py::arg("x"))
      .def("partial_transpose", &ChoiMatrix::partially_transposed)
      .def_static("identity_map", &ChoiMatrix::identity_map, py::arg("n"))
      .def_static("transpose_map", &ChoiMatrix::transpose_map, py::arg("n"))
      .def("__repr__", [](const ChoiMatrix& c) {
        return "ChoiMatrix(m=" + std::to_string(c.input_dim()) +
               ", n=" + std::to_string(c.output_dim()) + ")";
      });

  m.def("choi_of_map", &choi_of_map, py::arg("apply"), py::arg("m"), py::arg("n"),
        "Choi matrix of a black-box linear map evaluator");

  py::class_<LiftIndexSet>(m, "LiftIndexSet")
      .def(py::init([](int target_dim, std::vector<int> indices) {
             LiftIndexSet set{target_dim, std::move(indices)};
             set.validate();
             return set;
           }),
           py::arg("target_dim"), py::arg("indices"))
      .def_readonly("target_dim", &LiftIndexSet::target_dim)
      .def_readonly("indices", &LiftIndexSet::indices);

  m.def("lift", &lift, py::arg("choi"), py::arg("index_set"));
  m.def(
      "unlift",
      [](const ChoiMatrix& c, double tol) {
        UnliftResult res = unlift(c, tol);
        return py::make_tuple(res.choi, res.removed);
      },
      py::arg("choi"), py::arg("tol") = kUnliftTol);

  m.def("pair", &pair, py::arg("state"), py::arg("choi"),
        "bilinear pairing <A, phi> = sum_ij Tr(phi(E_ij) A_ij^t)");

  // matrix substrate
  m.def("hermitize", [](const Matrix& a) { return hermitize(a).matrix(); }, py::arg("a"));
  m.def(
      "eig_hermitian",
      [](const Matrix& h) {
        EigenResult r = eig_hermitian(HermitianMatrix(h));
        return py::make_tuple(r.eigenvalues, r.eigenvectors);
      },
      py::arg("h"), "ascending eigenvalues and phase-normalized eigenvectors");
  m.def(
      "is_psd",
      [](const Matrix& h, double tol) {
        PsdResult r = is_psd(HermitianMatrix(h), tol);
        return py::make_tuple(r.is_psd, r.min_eigenvalue);
      },
      py::arg("h"), py::arg("tol") = kPsdTol);
  m.def("pinv", &pinv, py::arg("a"), py::arg("rank_tol") = kPinvRankTol);
  m.def(
      "schur_complement",
      [](const Matrix& mat, int split, const std::string& corner) {
        return schur_complement(HermitianMatrix(mat), split,
                                corner == "lower-right" ? SchurCorner::LowerRight
                                                        : SchurCorner::UpperLeft);
      },
      py::arg("m"), py::arg("split"), py::arg("corner") = "upper-left");
  m.def("range_included", &range_included, py::arg("b"), py::arg("a"),
        py::arg("tol") = kRangeTol);
  m.def("partial_transpose", &partial_transpose, py::arg("t"), py::arg("m"), py::arg("n"));
  m.def("kron", &kron, py::arg("a"), py::arg("b"));

  // positivity
  py::class_<PositivityVerdict>(m, "PositivityVerdict")
      .def_property_readonly("kind",
                             [](const PositivityVerdict& v) { return kind_name(v.kind); })
      .def_readonly("k", &PositivityVerdict::k)
      .def_readonly("min_value", &PositivityVerdict::min_value_found)
      .def_readonly("restarts_used", &PositivityVerdict::restarts_used)
      .def_property_readonly("witness",
                             [](const PositivityVerdict& v) -> py::object {
                               if (!v.witness) return py::none();
                               return py::cast(*v.witness);
                             })
      .def_property_readonly("refuted", &PositivityVerdict::refuted)
      .def("__repr__", [](const PositivityVerdict& v) {
        return std::string("PositivityVerdict(kind='") + kind_name(v.kind) +
               "', k=" + std::to_string(v.k) +
               ", min_value=" + std::to_string(v.min_value_found) + ")";
      });

  m.def(
      "min_schmidt_quadratic",
      [](const ChoiMatrix& c, int k, int restarts, int max_iters, double conv_tol,
         std::uint64_t seed) {
        SeesawResult r =
            min_schmidt_quadratic(c, k, make_opts(restarts, max_iters, conv_tol, seed));
        return py::make_tuple(r.value, r.witness);
      },
      py::arg("choi"), py::arg("k"), py::arg("restarts") = 64, py::arg("max_iters") = 500,
      py::arg("conv_tol") = 1e-9, py::arg("seed") = 0);
  m.def(
      "check_k_positive",
      [](const ChoiMatrix& c, int k, int restarts, int max_iters, double conv_tol,
         std::uint64_t seed, double tol) {
        return check_k_positive(c, k, make_opts(restarts, max_iters, conv_tol, seed), tol);
      },
      py::arg("choi"), py::arg("k"), py::arg("restarts") = 64, py::arg("max_iters") = 500,
      py::arg("conv_tol") = 1e-9, py::arg("seed") = 0, py::arg("tol") = kRefuteTol);
  m.def(
      "check_k_copositive",
      [](const ChoiMatrix& c, int k, int restarts, int max_iters, double conv_tol,
         std::uint64_t seed, double tol) {
        return check_k_copositive(c, k, make_opts(restarts, max_iters, conv_tol, seed), tol);
      },
      py::arg("choi"), py::arg("k"), py::arg("restarts") = 64, py::arg("max_iters") = 500,
      py::arg("conv_tol") = 1e-9, py::arg("seed") = 0, py::arg("tol") = kRefuteTol);
  m.def("check_completely_positive", &check_completely_positive, py::arg("choi"),
        py::arg("tol") = kPsdTol);
  m.def("check_completely_copositive", &check_completely_copositive, py::arg("choi"),
        py::arg("tol") = kPsdTol);

  // peel
  py::class_<PeelResult>(m, "PeelResult")
      .def_readonly("pivot", &PeelResult::pivot)
      .def_readonly("cp_part", &PeelResult::cp_part)
      .def_readonly("remainder", &PeelResult::remainder)
      .def_readonly("unlifted", &PeelResult::unlifted)
      .def_readonly("lift_set", &PeelResult::lift_set)
      .def_readonly("row_residual", &PeelResult::row_residual);
  py::class_<IteratedPeelResult>(m, "IteratedPeelResult")
      .def_readonly("cp_parts", &IteratedPeelResult::cp_parts)
      .def_readonly("remainder", &IteratedPeelResult::remainder)
      .def_readonly("lift_set", &IteratedPeelResult::lift_set);

  m.def("select_pivot", &select_pivot, py::arg("choi"), py::arg("tol") = kPeelRowTol);
  m.def("peel_once", &peel_once, py::arg("choi"), py::arg("pivot"),
        py::arg("tol") = kPeelRowTol);
  m.def("peel_copositive", &peel_copositive, py::arg("choi"), py::arg("pivot"),
        py::arg("tol") = kPeelRowTol);
  m.def("peel_iterate", &peel_iterate, py::arg("choi"), py::arg("k"),
        py::arg("tol") = kPeelRowTol);

  // split
  py::class_<Decomposition>(m, "Decomposition")
      .def_readonly("cp", &Decomposition::cp)
      .def_readonly("ccp", &Decomposition::ccp)
      .def_readonly("residual", &Decomposition::residual)
      .def_readonly("min_eig_cp", &Decomposition::min_eig_cp)
      .def_readonly("min_eig_ccp", &Decomposition::min_eig_ccp)
      .def_readonly("iterations", &Decomposition::iterations)
      .def_readonly("gap_history", &Decomposition::gap_history);
  py::class_<VerifyReport>(m, "VerifyReport")
      .def_readonly("ok", &VerifyReport::pass)
      .def_readonly("residual_ok", &VerifyReport::residual_ok)
      .def_readonly("cp_ok", &VerifyReport::cp_ok)
      .def_readonly("ccp_ok", &VerifyReport::ccp_ok)
      .def_readonly("residual", &VerifyReport::residual)
      .def_readonly("min_eig_cp", &VerifyReport::min_eig_cp)
      .def_readonly("min_eig_ccp", &VerifyReport::min_eig_ccp);

  m.def(
      "split_cp_ccp",
      [](const ChoiMatrix& c, int max_iters, double feas_tol, int stall_window) {
        return split_cp_ccp(c, SplitOptions{max_iters, feas_tol, stall_window});
      },
      py::arg("choi"), py::arg("max_iters") = 10000, py::arg("feas_tol") = 1e-8,
      py::arg("stall_window") = 200);
  m.def(
      "decompose_2positive_3x3",
      [](const ChoiMatrix& c, int max_iters, double feas_tol, int restarts, std::uint64_t seed) {
        return decompose_2positive_3x3(c, SplitOptions{max_iters, feas_tol, 200},
                                       make_opts(restarts, 500, 1e-9, seed));
      },
      py::arg("choi"), py::arg("max_iters") = 10000, py::arg("feas_tol") = 1e-8,
      py::arg("restarts") = 64, py::arg("seed") = 0);
  m.def(
      "decompose_2copositive_3x3",
      [](const ChoiMatrix& c, int max_iters, double feas_tol, int restarts, std::uint64_t seed) {
        return decompose_2copositive_3x3(c, SplitOptions{max_iters, feas_tol, 200},
                                         make_opts(restarts, 500, 1e-9, seed));
      },
      py::arg("choi"), py::arg("max_iters") = 10000, py::arg("feas_tol") = 1e-8,
      py::arg("restarts") = 64, py::arg("seed") = 0);
  m.def(
      "verify_decomposition",
      [](const ChoiMatrix& c, const Matrix& cp, const Matrix& ccp, double tol) {
        return verify_decomposition(c, Decomposition{cp, ccp, 0, 0, 0, 0, {}}, tol);
      },
      py::arg("choi"), py::arg("cp"), py::arg("ccp"), py::arg("tol") = 1e-8);

  // families
  m.def("gchoi_choi", [](double a, double b, double c) { return gchoi_choi({a, b, c}); },
        py::arg("a"), py::arg("b"), py::arg("c"));
  m.def("gchoi_is_2positive",
        [](double a, double b, double c) { return gchoi_is_2positive({a, b, c}); }, py::arg("a"),
        py::arg("b"), py::arg("c"));
  m.def("gchoi_condition_star",
        [](double a, double b, double c) { return gchoi_condition_star({a, b, c}); },
        py::arg("a"), py::arg("b"), py::arg("c"));
  m.def("gchoi_explicit_decomposition",
        [](double a, double b, double c) { return gchoi_explicit_decomposition({a, b, c}); },
        py::arg("a"), py::arg("b"), py::arg("c"));
  m.def("gchoi_alternative_decomposition",
        [](double a, double b, double c) { return gchoi_alternative_decomposition({a, b, c}); },
        py::arg("a"), py::arg("b"), py::arg("c"));
  m.def("omega_choi", [](double eps) { return omega_choi({eps}); }, py::arg("eps"));
  m.def("omega_is_positive", [](double eps) { return omega_is_positive({eps}); },
        py::arg("eps"));
  m.def("omega_split", [](double eps) { return omega_split({eps}); }, py::arg("eps"));

  // states
  py::class_<BipartiteVector>(m, "BipartiteVector")
      .def(py::init<int, int, Vector>(), py::arg("m"), py::arg("n"), py::arg("amplitudes"))
      .def_readonly("m", &BipartiteVector::m)
      .def_readonly("n", &BipartiteVector::n)
      .def_readonly("amplitudes", &BipartiteVector::amplitudes)
      .def("coefficient_matrix", &BipartiteVector::coefficient_matrix);
  py::class_<DensityMatrix>(m, "DensityMatrix")
      .def(py::init<int, int, const Matrix&>(), py::arg("m"), py::arg("n"), py::arg("data"))
      .def_property_readonly("m", &DensityMatrix::dim_a)
      .def_property_readonly("n", &DensityMatrix::dim_b)
      .def_property_readonly("data", &DensityMatrix::data);
  py::class_<EnsembleDecomposition>(m, "EnsembleDecomposition")
      .def_readonly("weights", &EnsembleDecomposition::weights)
      .def_readonly("vectors", &EnsembleDecomposition::vectors)
      .def_readonly("max_schmidt_rank", &EnsembleDecomposition::max_schmidt_rank)
      .def_readonly("residual", &EnsembleDecomposition::residual);

  m.def("schmidt_rank", &schmidt_rank, py::arg("z"), py::arg("tol") = 1e-10);
  m.def(
      "schmidt_rank_of",
      [](const Matrix& coefficient, double tol) {
        const int rows = static_cast<int>(coefficient.rows());
        const int cols = static_cast<int>(coefficient.cols());
        Vector amplitudes(rows * cols);
        for (int i = 0; i < rows; ++i)
          amplitudes.segment(i * cols, cols) = coefficient.row(i).transpose();
        return schmidt_rank(BipartiteVector{rows, cols, amplitudes}, tol);
      },
      py::arg("coefficient_matrix"), py::arg("tol") = 1e-10,
      "Schmidt rank from an m x n coefficient grid");
  m.def("is_ppt", &is_ppt, py::arg("rho"), py::arg("tol") = kPsdTol);
  m.def(
      "schmidt_number_upper",
      [](const DensityMatrix& rho, int k, int ensemble_size, int restarts, int max_iters,
         double conv_tol, std::uint64_t seed, double tol) -> py::object {
        auto cert = schmidt_number_upper(rho, k, ensemble_size,
                                         make_opts(restarts, max_iters, conv_tol, seed), tol);
        if (!cert) return py::none();
        return py::cast(*cert);
      },
      py::arg("rho"), py::arg("k"), py::arg("ensemble_size"), py::arg("restarts") = 16,
      py::arg("max_iters") = 1000, py::arg("conv_tol") = 1e-14, py::arg("seed") = 0,
      py::arg("tol") = 1e-8);
  m.def(
      "schmidt_number_lower",
      [](const DensityMatrix& rho,
         const std::vector<std::tuple<ChoiMatrix, int, PositivityVerdict>>& witnesses,
         double tol) {
        std::vector<SchmidtWitness> entries;
        entries.reserve(witnesses.size());
        for (const auto& [map, k, verdict] : witnesses) entries.push_back({map, k, verdict});
        return schmidt_number_lower(rho, entries, tol);
      },
      py::arg("rho"), py::arg("witnesses"), py::arg("tol") = kRefuteTol);

  m.attr("__version__") = "0.1.0";
}
