#pragma once

#include "posmap/choi.hpp"
#include "posmap/states.hpp"
#include "posmap/types.hpp"

#include <iosfwd>
#include <string>

namespace posmap {

enum class DocumentKind { Choi, Density, PlainMatrix };

// On-disk JSON form of a matrix: split re/im grids of decimal floats written
// with 17 significant digits, so write -> read round-trips bit-exactly.
// For choi/density documents the grid is (m n) x (m n) and (m, n) are the
// local dimensions; for plain matrix documents the grid is m x n directly.
struct MatrixDocument {
  std::string schema_version = "1";
  DocumentKind kind = DocumentKind::PlainMatrix;
  int m = 0;
  int n = 0;
  Matrix data;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string kind_name(DocumentKind k);

MatrixDocument make_choi_document(const ChoiMatrix& c);
MatrixDocument make_density_document(const DensityMatrix& rho);
MatrixDocument make_matrix_document(const Matrix& m);

ChoiMatrix to_choi(const MatrixDocument& doc);
DensityMatrix to_density(const MatrixDocument& doc);

void write_document(const MatrixDocument& doc, std::ostream& out);
void write_document_file(const MatrixDocument& doc, const std::string& path);

MatrixDocument read_document(std::istream& in);
MatrixDocument read_document_file(const std::string& path);

}  // namespace posmap
