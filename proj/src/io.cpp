#include "posmap/io.hpp"

#include <json.hpp>

#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

namespace posmap {

namespace {

using nlohmann::json;

// 17 significant decimal digits: enough to reproduce any double bit-exactly.
std::string format_double(double v) {
  if (!std::isfinite(v)) throw IoError("document contains a non-finite value");
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void emit_grid(std::ostream& out, const Matrix& m, bool real_part) {
  out << "[";
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    out << (i == 0 ? "" : ",") << "\n    [";
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      const double v = real_part ? m(i, j).real() : m(i, j).imag();
      out << (j == 0 ? "" : ", ") << format_double(v);
    }
    out << "]";
  }
  out << "\n  ]";
}

DocumentKind parse_kind(const std::string& name) {
  if (name == "choi") return DocumentKind::Choi;
  if (name == "density") return DocumentKind::Density;
  if (name == "matrix") return DocumentKind::PlainMatrix;
  throw IoError("unknown document kind '" + name + "'");
}

void validate_document(const MatrixDocument& doc) {
  if (doc.m <= 0 || doc.n <= 0) throw IoError("document dimensions must be positive");
  Eigen::Index rows = doc.data.rows();
  Eigen::Index cols = doc.data.cols();
  if (doc.kind == DocumentKind::Choi || doc.kind == DocumentKind::Density) {
    const Eigen::Index d = static_cast<Eigen::Index>(doc.m) * doc.n;
    if (rows != d || cols != d)
      throw IoError("grid of a " + kind_name(doc.kind) + " document must be (m n) x (m n)");
  } else {
    if (rows != doc.m || cols != doc.n)
      throw IoError("grid of a matrix document must be m x n");
  }
  if (!doc.data.allFinite()) throw IoError("document contains a non-finite value");
}

}  // namespace

std::string kind_name(DocumentKind k) {
  switch (k) {
    case DocumentKind::Choi: return "choi";
    case DocumentKind::Density: return "density";
    case DocumentKind::PlainMatrix: return "matrix";
  }
  return "matrix";
}

MatrixDocument make_choi_document(const ChoiMatrix& c) {
  return MatrixDocument{"1", DocumentKind::Choi, c.input_dim(), c.output_dim(), c.data()};
}

MatrixDocument make_density_document(const DensityMatrix& rho) {
  return MatrixDocument{"1", DocumentKind::Density, rho.dim_a(), rho.dim_b(), rho.data()};
}

MatrixDocument make_matrix_document(const Matrix& m) {
  return MatrixDocument{"1", DocumentKind::PlainMatrix, static_cast<int>(m.rows()),
                        static_cast<int>(m.cols()), m};
}

ChoiMatrix to_choi(const MatrixDocument& doc) {
  if (doc.kind != DocumentKind::Choi)
    throw IoError("expected a choi document, found '" + kind_name(doc.kind) + "'");
  return ChoiMatrix(doc.m, doc.n, doc.data);
}

DensityMatrix to_density(const MatrixDocument& doc) {
  if (doc.kind != DocumentKind::Density)
    throw IoError("expected a density document, found '" + kind_name(doc.kind) + "'");
  return DensityMatrix(doc.m, doc.n, doc.data);
}

void write_document(const MatrixDocument& doc, std::ostream& out) {
  validate_document(doc);
  out << "{\n";
  out << "  \"schema_version\": \"" << doc.schema_version << "\",\n";
  out << "  \"kind\": \"" << kind_name(doc.kind) << "\",\n";
  out << "  \"m\": " << doc.m << ",\n";
  out << "  \"n\": " << doc.n << ",\n";
  out << "  \"re\": ";
  emit_grid(out, doc.data, true);
  out << ",\n  \"im\": ";
  emit_grid(out, doc.data, false);
  out << "\n}\n";
}

void write_document_file(const MatrixDocument& doc, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  write_document(doc, out);
  if (!out.good()) throw IoError("failed writing '" + path + "'");
}

MatrixDocument read_document(std::istream& in) {
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw IoError(std::string("malformed JSON: ") + e.what());
  }
  try {
    MatrixDocument doc;
    doc.schema_version = j.at("schema_version").get<std::string>();
    if (doc.schema_version != "1")
      throw IoError("unsupported schema_version '" + doc.schema_version + "'");
    doc.kind = parse_kind(j.at("kind").get<std::string>());
    doc.m = j.at("m").get<int>();
    doc.n = j.at("n").get<int>();
    const auto& re = j.at("re");
    const auto& im = j.at("im");
    if (!re.is_array() || !im.is_array() || re.empty() || re.size() != im.size())
      throw IoError("re/im grids must be equal-sized non-empty arrays");
    const std::size_t rows = re.size();
    const std::size_t cols = re.at(0).size();
    Matrix data(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
      const auto& re_row = re.at(i);
      const auto& im_row = im.at(i);
      if (!re_row.is_array() || re_row.size() != cols || !im_row.is_array() ||
          im_row.size() != cols)
        throw IoError("grid rows must be arrays of equal length");
      for (std::size_t k = 0; k < cols; ++k)
        data(i, k) = Complex(re_row.at(k).get<double>(), im_row.at(k).get<double>());
    }
    doc.data = std::move(data);
    validate_document(doc);
    return doc;
  } catch (const json::exception& e) {
    throw IoError(std::string("malformed document: ") + e.what());
  }
}

MatrixDocument read_document_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  return read_document(in);
}

}  // namespace posmap
