#include "etorus/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "json.hpp"

namespace etorus::io {

namespace {

constexpr std::string_view kGridMagic = "# etorus-grid";
constexpr std::string_view kMeshMagic = "# etorus-mesh";

std::vector<std::string> split(std::string_view line, char sep) {
  std::vector<std::string> out;
  size_t start = 0;
  while (true) {
    const size_t pos = line.find(sep, start);
    out.emplace_back(line.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

template <typename T>
bool parse_number(std::string_view s, T& out) {
  const auto* first = s.data();
  const auto* last = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last;
}

Int parse_int(const std::string& s, size_t row, const std::string& column) {
  Int v;
  if (!parse_number(std::string_view(s), v)) throw ParseError(row, "column " + column + ": not an integer: '" + s + "'");
  return v;
}

double parse_double(const std::string& s, size_t row, const std::string& column) {
  double v;
  if (!parse_number(std::string_view(s), v)) throw ParseError(row, "column " + column + ": not a number: '" + s + "'");
  return v;
}

Side parse_side(const std::string& s, size_t row) {
  if (s == "F") return Side::in_F;
  if (s == "rjF") return Side::in_rjF;
  throw ParseError(row, "side must be F or rjF, got '" + s + "'");
}

FileKind parse_kind(const std::string& s) {
  if (s == "samples") return FileKind::samples;
  if (s == "coefficients") return FileKind::coefficients;
  throw ParseError(0, "unknown kind '" + s + "'");
}

GridId parse_grid_id(const std::map<std::string, std::string>& kv) {
  auto get = [&](const std::string& key) {
    const auto it = kv.find(key);
    if (it == kv.end()) throw ParseError(0, "missing key '" + key + "'");
    return it->second;
  };
  const std::string version = get("version");
  if (version != std::to_string(kFormatVersion)) throw ParseError(0, "unsupported format version " + version);
  const auto family = parse_family(get("family"));
  if (!family) throw ParseError(0, "bad family '" + get("family") + "'");
  GridId id;
  id.type.family = *family;
  id.type.rank = static_cast<int>(parse_int(get("rank"), 0, "rank"));
  id.level = parse_int(get("M"), 0, "M");
  id.j = static_cast<int>(parse_int(get("j"), 0, "j"));
  if (!SimpleType::is_supported(id.type.family, id.type.rank)) throw ParseError(0, "unsupported type " + id.type.name());
  if (id.level < 1 || id.j < 1 || id.j > id.type.rank) throw ParseError(0, "M or j out of range");
  return id;
}

GridRow parse_fields(const std::vector<std::string>& fields, const std::vector<std::string>& columns, size_t row) {
  if (fields.size() != columns.size())
    throw ParseError(row, "expected " + std::to_string(columns.size()) + " fields, got " + std::to_string(fields.size()));
  const size_t coords = columns.size() - 4;
  GridRow r;
  for (size_t i = 0; i < coords; ++i) r.bary.push_back(parse_int(trim(fields[i]), row, columns[i]));
  r.side = parse_side(trim(fields[coords]), row);
  r.multiplicity = parse_int(trim(fields[coords + 1]), row, columns[coords + 1]);
  r.value = {parse_double(trim(fields[coords + 2]), row, columns[coords + 2]),
             parse_double(trim(fields[coords + 3]), row, columns[coords + 3])};
  return r;
}

GridFile read_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line) || !line.starts_with(kGridMagic)) throw ParseError(0, "missing '# etorus-grid' header line");
  std::map<std::string, std::string> kv;
  std::istringstream tokens(line.substr(kGridMagic.size()));
  for (std::string tok; tokens >> tok;) {
    const auto eq = tok.find('=');
    if (eq == std::string::npos) throw ParseError(0, "malformed header token '" + tok + "'");
    kv[tok.substr(0, eq)] = tok.substr(eq + 1);
  }
  GridFile file;
  file.grid = parse_grid_id(kv);
  file.kind = parse_kind(kv.count("kind") ? kv["kind"] : "");
  const auto columns = column_names(file.kind, file.grid.type.rank);
  if (!std::getline(is, line)) throw ParseError(0, "missing column header");
  std::vector<std::string> names;
  for (const auto& c : split(trim(line), ',')) names.push_back(trim(c));
  if (names != columns) throw ParseError(0, "column header does not match the file kind");
  size_t row = 0;
  while (std::getline(is, line)) {
    if (trim(line).empty()) continue;
    ++row;
    file.rows.push_back(parse_fields(split(trim(line), ','), columns, row));
  }
  return file;
}

GridFile read_json(std::istream& is) {
  nlohmann::json doc;
  try {
    is >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(0, std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || doc.value("format", "") != "etorus-grid") throw ParseError(0, "not an etorus-grid document");
  std::map<std::string, std::string> kv;
  for (const char* key : {"version", "family", "rank", "M", "j", "kind"}) {
    if (!doc.contains(key)) throw ParseError(0, std::string("missing key '") + key + "'");
    kv[key] = doc[key].is_string() ? doc[key].get<std::string>() : doc[key].dump();
  }
  GridFile file;
  file.grid = parse_grid_id(kv);
  file.kind = parse_kind(kv["kind"]);
  const auto columns = column_names(file.kind, file.grid.type.rank);
  if (!doc.contains("columns") || doc["columns"] != nlohmann::json(columns))
    throw ParseError(0, "column list does not match the file kind");
  if (!doc.contains("rows") || !doc["rows"].is_array()) throw ParseError(0, "missing rows array");
  size_t row = 0;
  for (const auto& r : doc["rows"]) {
    ++row;
    if (!r.is_array()) throw ParseError(row, "row is not an array");
    std::vector<std::string> fields;
    for (const auto& cell : r) fields.push_back(cell.is_string() ? cell.get<std::string>() : cell.dump());
    file.rows.push_back(parse_fields(fields, columns, row));
  }
  return file;
}

}  // namespace

std::string kind_name(FileKind kind) { return kind == FileKind::samples ? "samples" : "coefficients"; }

std::string side_name(Side side) { return side == Side::in_F ? "F" : "rjF"; }

std::string format_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  if (ec != std::errc()) throw std::runtime_error("number formatting failed");
  return std::string(buf, ptr);
}

std::string header_line(const GridFile& file) {
  std::ostringstream os;
  os << kGridMagic << " version=" << kFormatVersion << " kind=" << kind_name(file.kind)
     << " family=" << family_char(file.grid.type.family) << " rank=" << file.grid.type.rank << " M=" << file.grid.level
     << " j=" << file.grid.j;
  return os.str();
}

std::vector<std::string> column_names(FileKind kind, int rank) {
  const bool samples = kind == FileKind::samples;
  std::vector<std::string> cols;
  for (int i = 0; i <= rank; ++i) cols.push_back((samples ? "s" : "t") + std::to_string(i));
  cols.emplace_back("side");
  cols.emplace_back(samples ? "eps" : "h_dual");
  cols.emplace_back(samples ? "value_re" : "c_re");
  cols.emplace_back(samples ? "value_im" : "c_im");
  return cols;
}

GridFile sample_file(const DiscreteETransform& t, const SampleVector& values) {
  if (!(values.grid == t.grid_id()) || values.values.size() != t.size()) throw GridMismatchError("samples do not match the grid");
  GridFile file{FileKind::samples, t.grid_id(), {}};
  for (const auto& p : t.points()) file.rows.push_back({p.bary.sygma, p.bary.side, p.eps, values.values[p.index]});
  return file;
}

GridFile coefficient_file(const DiscreteETransform& t, const CoefficientVector& values) {
  if (!(values.grid == t.grid_id()) || values.values.size() != t.size())
    throw GridMismatchError("coefficients do not match the grid");
  GridFile file{FileKind::coefficients, t.grid_id(), {}};
  for (const auto& w : t.weights()) file.rows.push_back({w.bary.sygma, w.bary.side, w.h_dual, values.values[w.index]});
  return file;
}

void write(std::ostream& os, const GridFile& file, Format format) {
  const auto columns = column_names(file.kind, file.grid.type.rank);
  if (format == Format::csv) {
    os << header_line(file) << '\n';
    for (size_t i = 0; i < columns.size(); ++i) os << (i ? "," : "") << columns[i];
    os << '\n';
    for (const auto& r : file.rows) {
      for (Int v : r.bary) os << v << ',';
      os << side_name(r.side) << ',' << r.multiplicity << ',' << format_double(r.value.real()) << ','
         << format_double(r.value.imag()) << '\n';
    }
    return;
  }
  nlohmann::ordered_json doc;
  doc["format"] = "etorus-grid";
  doc["version"] = kFormatVersion;
  doc["kind"] = kind_name(file.kind);
  doc["family"] = std::string(1, family_char(file.grid.type.family));
  doc["rank"] = file.grid.type.rank;
  doc["M"] = file.grid.level;
  doc["j"] = file.grid.j;
  doc["columns"] = columns;
  auto rows = nlohmann::ordered_json::array();
  for (const auto& r : file.rows) {
    auto row = nlohmann::ordered_json::array();
    for (Int v : r.bary) row.push_back(v);
    row.push_back(side_name(r.side));
    row.push_back(r.multiplicity);
    row.push_back(r.value.real());
    row.push_back(r.value.imag());
    rows.push_back(std::move(row));
  }
  doc["rows"] = std::move(rows);
  os << doc.dump(1) << '\n';
}

GridFile read(std::istream& is) {
  is >> std::ws;
  if (is.peek() == '{') return read_json(is);
  return read_csv(is);
}

std::vector<Complex> extract_values(const GridFile& file, const DiscreteETransform& t, FileKind expected_kind) {
  if (file.kind != expected_kind)
    throw GridMismatchError("file holds " + kind_name(file.kind) + ", expected " + kind_name(expected_kind));
  const GridId& id = t.grid_id();
  if (!(file.grid == id))
    throw GridMismatchError("file grid " + file.grid.type.name() + " M=" + std::to_string(file.grid.level) + " j=" +
                            std::to_string(file.grid.j) + " differs from " + id.type.name() + " M=" +
                            std::to_string(id.level) + " j=" + std::to_string(id.j));
  const size_t expected = t.size();
  if (file.rows.size() != expected)
    throw ParseError(std::min(file.rows.size(), expected) + 1,
                     "expected " + std::to_string(expected) + " rows, file has " + std::to_string(file.rows.size()));
  std::vector<Complex> values(expected);
  for (size_t k = 0; k < expected; ++k) {
    const auto& row = file.rows[k];
    const BarycentricPoint& canon = expected_kind == FileKind::samples ? t.points()[k].bary : t.weights()[k].bary;
    const Int mult = expected_kind == FileKind::samples ? t.points()[k].eps : t.weights()[k].h_dual;
    if (row.bary != canon.sygma || row.side != canon.side || row.multiplicity != mult)
      throw GridMismatchError("row " + std::to_string(k + 1) + " does not match canonical grid entry " +
                              to_string(canon.sygma) + " " + side_name(canon.side));
    if (!std::isfinite(row.value.real()) || !std::isfinite(row.value.imag()))
      throw ParseError(k + 1, "non-finite value");
    values[k] = row.value;
  }
  return values;
}

void write_mesh(std::ostream& os, const GridId& grid, const std::string& extra_header, const std::vector<MeshSample>& samples) {
  const int n = grid.type.rank;
  os << kMeshMagic << " version=" << kFormatVersion << " family=" << family_char(grid.type.family) << " rank=" << n
     << " M=" << grid.level << " j=" << grid.j;
  if (!extra_header.empty()) os << ' ' << extra_header;
  os << '\n';
  for (int i = 1; i <= n; ++i) os << 'x' << i << ',';
  for (int i = 1; i <= n; ++i) os << 'y' << i << ',';
  os << "value_re,value_im\n";
  for (const auto& s : samples) {
    for (double v : s.cartesian) os << format_double(v) << ',';
    for (double v : s.coweight) os << format_double(v) << ',';
    os << format_double(s.value.real()) << ',' << format_double(s.value.imag()) << '\n';
  }
}

std::vector<std::vector<double>> read_points(std::istream& is, int rank) {
  std::vector<std::vector<double>> out;
  std::string line;
  size_t row = 0;
  bool first = true;
  while (std::getline(is, line)) {
    const std::string t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    const auto fields = split(t, ',');
    std::vector<double> y;
    bool numeric = true;
    for (const auto& f : fields) {
      double v;
      if (!parse_number(std::string_view(trim(f)), v)) {
        numeric = false;
        break;
      }
      y.push_back(v);
    }
    if (!numeric && first) {
      first = false;
      continue;  // column header
    }
    first = false;
    ++row;
    if (!numeric) throw ParseError(row, "point coordinates must be numeric");
    if (static_cast<int>(y.size()) != rank)
      throw ParseError(row, "expected " + std::to_string(rank) + " coordinates, got " + std::to_string(y.size()));
    out.push_back(std::move(y));
  }
  return out;
}

}  // namespace etorus::io
