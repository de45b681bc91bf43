// posmap: command-line front end for Choi-matrix positivity analysis,
// peel-off decompositions and CP + coCP splitting.
//
// Exit codes: 0 success / unrefuted / certified, 1 refuted or infeasible,
// 2 usage or input errors.  Reports are JSON on stdout; diagnostics go to
// stderr; matrices are written as JSON documents.

#include "posmap/choi.hpp"
#include "posmap/families.hpp"
#include "posmap/io.hpp"
#include "posmap/peel.hpp"
#include "posmap/positivity.hpp"
#include "posmap/split.hpp"
#include "posmap/states.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

namespace {

using namespace posmap;

constexpr int kExitOk = 0;
constexpr int kExitRefuted = 1;
constexpr int kExitUsage = 2;

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string json_vector(const Vector& v) {
  std::string re = "[";
  std::string im = "[";
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i) {
      re += ", ";
      im += ", ";
    }
    re += fmt(v(i).real());
    im += fmt(v(i).imag());
  }
  return "{\"re\": " + re + "], \"im\": " + im + "]}";
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv("POSMAP_SEED")) {
    try {
      return std::stoull(env);
    } catch (...) {
      std::cerr << "posmap: ignoring unparsable POSMAP_SEED\n";
    }
  }
  return 0;
}

void emit_document(const MatrixDocument& doc, const std::string& out_path) {
  if (out_path.empty())
    write_document(doc, std::cout);
  else
    write_document_file(doc, out_path);
}

const char* kind_string(VerdictKind kind) {
  switch (kind) {
    case VerdictKind::CertifiedExact: return "certified-exact";
    case VerdictKind::HeuristicUnrefuted: return "heuristically-unrefuted";
    case VerdictKind::Refuted: return "refuted";
  }
  return "unknown";
}

void print_verdict(const PositivityVerdict& verdict, bool copositive) {
  std::cout << "{\n";
  std::cout << "  \"check\": \"" << (copositive ? "k-copositive" : "k-positive") << "\",\n";
  std::cout << "  \"k\": " << verdict.k << ",\n";
  std::cout << "  \"kind\": \"" << kind_string(verdict.kind) << "\",\n";
  std::cout << "  \"min_value\": " << fmt(verdict.min_value_found) << ",\n";
  std::cout << "  \"restarts_used\": " << verdict.restarts_used;
  if (verdict.witness) std::cout << ",\n  \"witness\": " << json_vector(*verdict.witness);
  std::cout << "\n}\n";
}

int run_gen(const std::string& family, double a, double b, double c, double eps, int m, int n,
            const std::string& out_path) {
  MatrixDocument doc;
  if (family == "gchoi") {
    doc = make_choi_document(gchoi_choi({a, b, c}));
  } else if (family == "omega") {
    doc = make_choi_document(omega_choi({eps}));
  } else if (family == "identity" || family == "transpose") {
    if (n == 0) n = m;
    if (m != n) {
      std::cerr << "posmap gen: " << family << " requires m = n\n";
      return kExitUsage;
    }
    doc = make_choi_document(family == "identity" ? ChoiMatrix::identity_map(m)
                                                  : ChoiMatrix::transpose_map(m));
  }
  emit_document(doc, out_path);
  return kExitOk;
}

int run_check(const std::string& in_path, int k, bool copositive, double tol, int restarts,
              std::uint64_t seed) {
  ChoiMatrix c = to_choi(read_document_file(in_path));
  if (k <= 0) k = std::min(c.input_dim(), c.output_dim());
  SeesawOptions opts;
  opts.restarts = restarts;
  opts.rng_seed = seed;
  PositivityVerdict verdict = copositive ? check_k_copositive(c, k, opts, tol)
                                         : check_k_positive(c, k, opts, tol);
  print_verdict(verdict, copositive);
  return verdict.refuted() ? kExitRefuted : kExitOk;
}

int run_peel(const std::string& in_path, const std::string& pivot_arg, bool copositive, double tol,
             const std::string& out_prefix) {
  ChoiMatrix c = to_choi(read_document_file(in_path));
  int pivot;
  if (pivot_arg == "auto") {
    pivot = select_pivot(c, tol);
  } else {
    pivot = std::stoi(pivot_arg) - 1;  // 1-based on the command line
    if (pivot < 0 || pivot >= c.input_dim()) {
      std::cerr << "posmap peel: pivot out of range\n";
      return kExitUsage;
    }
  }
  try {
    PeelResult res = copositive ? peel_copositive(c, pivot, tol) : peel_once(c, pivot, tol);
    write_document_file(make_choi_document(res.cp_part), out_prefix + ".cp.json");
    write_document_file(make_choi_document(res.remainder), out_prefix + ".remainder.json");
    write_document_file(make_choi_document(res.unlifted), out_prefix + ".unlifted.json");
    std::cout << "{\n  \"pivot\": " << (res.pivot + 1)
              << ",\n  \"row_residual\": " << fmt(res.row_residual)
              << ",\n  \"files\": [\"" << out_prefix << ".cp.json\", \"" << out_prefix
              << ".remainder.json\", \"" << out_prefix << ".unlifted.json\"]\n}\n";
    return kExitOk;
  } catch (const NotTwoPositiveError& e) {
    std::cout << "{\n  \"error\": \"not-2-" << (copositive ? "copositive" : "positive")
              << "\",\n  \"pivot\": " << (e.pivot + 1) << ",\n  \"block\": " << (e.block + 1)
              << ",\n  \"residual\": " << fmt(e.residual) << "\n}\n";
    return kExitRefuted;
  }
}

int run_decompose(const std::string& in_path, const std::string& mode, double tol, int max_iters,
                  std::uint64_t seed, const std::string& out_prefix) {
  ChoiMatrix c = to_choi(read_document_file(in_path));
  SplitOptions opts;
  opts.feas_tol = tol;
  opts.max_iters = max_iters;
  SeesawOptions seesaw;
  seesaw.rng_seed = seed;
  try {
    Decomposition d;
    if (mode == "2pos")
      d = decompose_2positive_3x3(c, opts, seesaw);
    else if (mode == "2copos")
      d = decompose_2copositive_3x3(c, opts, seesaw);
    else
      d = split_cp_ccp(c, opts);
    VerifyReport report = verify_decomposition(c, d, tol);
    write_document_file(
        MatrixDocument{"1", DocumentKind::PlainMatrix, static_cast<int>(d.cp.rows()),
                       static_cast<int>(d.cp.cols()), d.cp},
        out_prefix + ".P.json");
    write_document_file(
        MatrixDocument{"1", DocumentKind::PlainMatrix, static_cast<int>(d.ccp.rows()),
                       static_cast<int>(d.ccp.cols()), d.ccp},
        out_prefix + ".Q.json");
    std::cout << "{\n  \"mode\": \"" << mode << "\",\n  \"residual\": " << fmt(report.residual)
              << ",\n  \"min_eig_cp\": " << fmt(report.min_eig_cp)
              << ",\n  \"min_eig_ccp\": " << fmt(report.min_eig_ccp)
              << ",\n  \"iterations\": " << d.iterations << ",\n  \"verified\": "
              << (report.pass ? "true" : "false") << "\n}\n";
    return report.pass ? kExitOk : kExitRefuted;
  } catch (const RefutedInputError& e) {
    std::cout << "{\n  \"error\": \"refuted-input\",\n  \"min_value\": " << fmt(e.min_value)
              << "\n}\n";
    return kExitRefuted;
  } catch (const NotTwoPositiveError& e) {
    std::cout << "{\n  \"error\": \"not-2-positive\",\n  \"pivot\": " << (e.pivot + 1)
              << ",\n  \"residual\": " << fmt(e.residual) << "\n}\n";
    return kExitRefuted;
  } catch (const InfeasibleError& e) {
    std::cout << "{\n  \"error\": \"infeasible\",\n  \"gap\": " << fmt(e.gap)
              << ",\n  \"iterations\": " << e.iterations << "\n}\n";
    return kExitRefuted;
  }
}

int run_pair(const std::string& state_path, const std::string& map_path) {
  MatrixDocument state_doc = read_document_file(state_path);
  if (state_doc.kind == DocumentKind::Choi) {
    std::cerr << "posmap pair: the state argument must be a density or matrix document\n";
    return kExitUsage;
  }
  ChoiMatrix map = to_choi(read_document_file(map_path));
  if (state_doc.data.rows() != map.data().rows()) {
    std::cerr << "posmap pair: state and map dimensions do not match\n";
    return kExitUsage;
  }
  std::printf("%.15g\n", pair(state_doc.data, map));
  return kExitOk;
}

int run_schmidt(const std::string& in_path, bool vector_mode, int k, double tol,
                std::uint64_t seed) {
  MatrixDocument doc = read_document_file(in_path);
  if (vector_mode) {
    if (doc.kind != DocumentKind::PlainMatrix) {
      std::cerr << "posmap schmidt --vector: expects a matrix document holding the m x n "
                   "coefficient grid\n";
      return kExitUsage;
    }
    Vector amplitudes(doc.data.size());
    for (int i = 0; i < doc.m; ++i)
      amplitudes.segment(i * doc.n, doc.n) = doc.data.row(i).transpose();
    const int rank = schmidt_rank(BipartiteVector{doc.m, doc.n, amplitudes}, tol);
    std::cout << "{\n  \"schmidt_rank\": " << rank << "\n}\n";
    return kExitOk;
  }
  DensityMatrix rho = to_density(doc);
  const bool ppt = is_ppt(rho);
  std::cout << "{\n  \"ppt\": " << (ppt ? "true" : "false");
  if (k > 0) {
    SeesawOptions opts;
    opts.rng_seed = seed;
    opts.max_iters = 800;
    opts.conv_tol = 1e-14;
    auto cert = schmidt_number_upper(rho, k, 2 * rho.data().rows(), opts, tol);
    if (cert) {
      std::cout << ",\n  \"upper_bound\": " << k << ",\n  \"ensemble_size\": "
                << cert->weights.size() << ",\n  \"residual\": " << fmt(cert->residual);
    } else {
      std::cout << ",\n  \"upper_bound\": null";
    }
  }
  std::cout << "\n}\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"positive-map toolkit: Choi matrices, k-positivity, peel-off and CP + coCP splits"};
  app.require_subcommand(1);
  app.fallthrough();  // global options may follow the subcommand

  double tol = 1e-8;
  std::uint64_t seed = default_seed();
  app.add_option("--tol", tol, "numerical tolerance")->capture_default_str();
  app.add_option("--seed", seed, "seed for randomized procedures (default: POSMAP_SEED or 0)");

  // gen
  auto* gen = app.add_subcommand("gen", "generate a family Choi matrix document");
  gen->require_subcommand(1);
  double a = 1.0, b = 1.0, c = 1.0, eps = 0.5;
  int gen_m = 3, gen_n = 0;
  std::string out_path;
  auto* gen_gchoi = gen->add_subcommand("gchoi", "generalized Choi map Phi[a,b,c] on M3");
  gen_gchoi->add_option("--a", a, "diagonal weight a")->required();
  gen_gchoi->add_option("--b", b, "diagonal weight b")->required();
  gen_gchoi->add_option("--c", c, "diagonal weight c")->required();
  auto* gen_omega = gen->add_subcommand("omega", "the omega(eps) map on M2");
  gen_omega->add_option("--eps", eps, "coupling parameter")->required();
  auto* gen_id = gen->add_subcommand("identity", "identity map on M_m");
  gen_id->add_option("--m", gen_m, "dimension")->required();
  gen_id->add_option("--n", gen_n, "output dimension (must equal m)");
  auto* gen_tau = gen->add_subcommand("transpose", "transpose map on M_m");
  gen_tau->add_option("--m", gen_m, "dimension")->required();
  gen_tau->add_option("--n", gen_n, "output dimension (must equal m)");
  for (auto* sub : {gen_gchoi, gen_omega, gen_id, gen_tau})
    sub->add_option("--out", out_path, "output file (default: stdout)");

  // check
  auto* check = app.add_subcommand("check", "k-positivity / k-copositivity verdict");
  std::string in_path;
  int k = 0;
  bool copositive = false;
  int restarts = 64;
  check->add_option("--in", in_path, "input Choi document")->required();
  check->add_option("--k", k, "positivity order (default: min(m, n))");
  check->add_flag("--copositive", copositive, "check k-copositivity instead");
  check->add_option("--restarts", restarts, "see-saw restarts")->capture_default_str();

  // peel
  auto* peel = app.add_subcommand("peel", "peel off a completely positive part");
  std::string pivot_arg = "auto";
  std::string out_prefix = "peel";
  bool peel_copos = false;
  peel->add_option("--in", in_path, "input Choi document")->required();
  peel->add_option("--pivot", pivot_arg, "pivot block, 1-based, or 'auto'")
      ->capture_default_str();
  peel->add_flag("--copositive", peel_copos, "peel a completely copositive part");
  peel->add_option("--out-prefix", out_prefix, "prefix for the output documents")
      ->capture_default_str();

  // decompose
  auto* decompose = app.add_subcommand("decompose", "CP + coCP decomposition");
  std::string mode = "feasibility";
  int max_iters = 10000;
  decompose->add_option("--in", in_path, "input Choi document")->required();
  decompose->add_option("--mode", mode, "2pos | 2copos | feasibility")
      ->check(CLI::IsMember({"2pos", "2copos", "feasibility"}))
      ->capture_default_str();
  decompose->add_option("--max-iter", max_iters, "projection iteration budget")
      ->capture_default_str();
  decompose->add_option("--out-prefix", out_prefix, "prefix for the P/Q documents")
      ->capture_default_str();

  // pair
  auto* pair_cmd = app.add_subcommand("pair", "bilinear pairing of a state with a map");
  std::string state_path, map_path;
  pair_cmd->add_option("--state", state_path, "state document (density or matrix)")->required();
  pair_cmd->add_option("--map", map_path, "map document (choi)")->required();

  // schmidt
  auto* schmidt = app.add_subcommand("schmidt", "Schmidt rank / number machinery");
  bool vector_mode = false;
  bool density_mode = false;
  int schmidt_k = 0;
  schmidt->add_option("--in", in_path, "input document")->required();
  schmidt->add_flag("--vector", vector_mode, "input is a coefficient-grid matrix document");
  schmidt->add_flag("--density", density_mode, "input is a density document");
  schmidt->add_option("--k", schmidt_k, "Schmidt number upper-bound target");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (gen_gchoi->parsed()) return run_gen("gchoi", a, b, c, eps, gen_m, gen_n, out_path);
    if (gen_omega->parsed()) return run_gen("omega", a, b, c, eps, gen_m, gen_n, out_path);
    if (gen_id->parsed()) return run_gen("identity", a, b, c, eps, gen_m, gen_n, out_path);
    if (gen_tau->parsed()) return run_gen("transpose", a, b, c, eps, gen_m, gen_n, out_path);
    if (check->parsed()) return run_check(in_path, k, copositive, tol, restarts, seed);
    if (peel->parsed()) return run_peel(in_path, pivot_arg, peel_copos, tol, out_prefix);
    if (decompose->parsed())
      return run_decompose(in_path, mode, tol, max_iters, seed, out_prefix);
    if (pair_cmd->parsed()) return run_pair(state_path, map_path);
    if (schmidt->parsed()) {
      if (vector_mode == density_mode) {
        std::cerr << "posmap schmidt: exactly one of --vector / --density is required\n";
        return kExitUsage;
      }
      return run_schmidt(in_path, vector_mode, schmidt_k, tol, seed);
    }
  } catch (const IoError& e) {
    std::cerr << "posmap: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ZeroMapError& e) {
    std::cerr << "posmap: " << e.what() << "\n";
    return kExitRefuted;
  } catch (const std::invalid_argument& e) {
    std::cerr << "posmap: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "posmap: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
