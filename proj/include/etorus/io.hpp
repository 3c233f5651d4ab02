#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "etorus/transform.hpp"

namespace etorus::io {

inline constexpr int kFormatVersion = 1;

/// Samples live on F^e_M (columns s0..sn, side, eps, value_re, value_im);
/// coefficients on Λ^e_M (columns t0..tn, side, h_dual, c_re, c_im).
enum class FileKind { samples, coefficients };

enum class Format { csv, json };

/// A row that cannot be parsed; `row` is the 1-based data row (0 for the header).
class ParseError : public std::runtime_error {
 public:
  ParseError(size_t row, const std::string& what)
      : std::runtime_error(row == 0 ? "header: " + what : "row " + std::to_string(row) + ": " + what), row_(row) {}
  size_t row() const { return row_; }

 private:
  size_t row_;
};

struct GridRow {
  IntVector bary;
  Side side = Side::in_F;
  /// ε^e(x) for samples, h^{e∨}_λ for coefficients.
  Int multiplicity = 1;
  Complex value;

  friend bool operator==(const GridRow&, const GridRow&) = default;
};

struct GridFile {
  FileKind kind = FileKind::samples;
  GridId grid;
  std::vector<GridRow> rows;

  friend bool operator==(const GridFile&, const GridFile&) = default;
};

std::string kind_name(FileKind kind);
std::string side_name(Side side);
/// Header line 1 (without newline), e.g. "# etorus-grid version=1 kind=samples family=C rank=2 M=4 j=1".
std::string header_line(const GridFile& file);
std::vector<std::string> column_names(FileKind kind, int rank);

/// Canonical-order file for a transform's grid, with the given values.
GridFile sample_file(const DiscreteETransform& t, const SampleVector& values);
GridFile coefficient_file(const DiscreteETransform& t, const CoefficientVector& values);

void write(std::ostream& os, const GridFile& file, Format format);
/// Reads CSV or JSON (detected from the first character). Throws ParseError.
GridFile read(std::istream& is);

/// Checks header and rows against the canonical enumeration. Returns the
/// value column. GridMismatchError on configuration or coordinate mismatch;
/// ParseError on a wrong row count.
std::vector<Complex> extract_values(const GridFile& file, const DiscreteETransform& t, FileKind expected_kind);

/// Shortest "%.17g"-equivalent rendering, '.' decimal regardless of locale.
std::string format_double(double v);

struct MeshSample {
  std::vector<double> cartesian;
  std::vector<double> coweight;
  Complex value;
};

void write_mesh(std::ostream& os, const GridId& grid, const std::string& extra_header, const std::vector<MeshSample>& samples);

/// Reads real ω^∨-coordinates, one point per line, comma separated. Lines
/// starting with '#' and a non-numeric header line are skipped.
std::vector<std::vector<double>> read_points(std::istream& is, int rank);

}  // namespace etorus::io
