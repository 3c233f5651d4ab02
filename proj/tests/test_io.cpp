#include "doctest.h"

#include <charconv>
#include <cstring>
#include <random>
#include <sstream>

#include "etorus/io.hpp"

using namespace etorus;

namespace {

std::vector<Complex> random_values(std::mt19937_64& rng, size_t n) {
  std::uniform_real_distribution<double> d(-1e3, 1e3);
  std::vector<Complex> v(n);
  for (auto& z : v) z = {d(rng) / 7.0, d(rng) * 1e-9};
  return v;
}

io::GridFile round_trip(const io::GridFile& f, io::Format format) {
  std::ostringstream os;
  io::write(os, f, format);
  std::istringstream is(os.str());
  return io::read(is);
}

std::string csv_of(const io::GridFile& f) {
  std::ostringstream os;
  io::write(os, f, io::Format::csv);
  return os.str();
}

}  // namespace

TEST_CASE("header and columns") {
  const DiscreteETransform t({Family::C, 2}, 4);
  const auto f = io::sample_file(t, t.make_samples(std::vector<Complex>(t.size())));
  CHECK(io::header_line(f) == "# etorus-grid version=1 kind=samples family=C rank=2 M=4 j=1");
  CHECK(io::column_names(io::FileKind::samples, 2) ==
        std::vector<std::string>{"s0", "s1", "s2", "side", "eps", "value_re", "value_im"});
  CHECK(io::column_names(io::FileKind::coefficients, 1) ==
        std::vector<std::string>{"t0", "t1", "side", "h_dual", "c_re", "c_im"});
  const std::string text = csv_of(f);
  CHECK(text.rfind("# etorus-grid version=1 kind=samples family=C rank=2 M=4 j=1\ns0,s1,s2,side,eps,value_re,value_im\n0,0,4,F,1,0,0\n", 0) == 0);
  CHECK(text.find("1,1,1,rjF,4,0,0\n") != std::string::npos);
}

TEST_CASE("format_double round-trips bit-exactly") {
  std::mt19937_64 rng(51);
  std::uniform_int_distribution<std::uint64_t> bits;
  int checked = 0;
  while (checked < 2000) {
    const std::uint64_t b = bits(rng);
    double v;
    std::memcpy(&v, &b, sizeof v);
    if (!std::isfinite(v)) continue;
    const std::string s = io::format_double(v);
    CHECK(s.find(',') == std::string::npos);
    double back = 0.0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), back);
    CHECK(res.ptr == s.data() + s.size());
    std::uint64_t bb;
    std::memcpy(&bb, &back, sizeof bb);
    CHECK(bb == b);
    ++checked;
  }
  CHECK(io::format_double(0.25) == "0.25");
  CHECK(io::format_double(-1.0) == "-1");
}

TEST_CASE("CSV and JSON round trips") {
  std::mt19937_64 rng(52);
  for (const auto& type : {SimpleType{Family::C, 2}, SimpleType{Family::A, 3}, SimpleType{Family::D, 4}}) {
    for (int j = 1; j <= 2; ++j) {
      const DiscreteETransform t(type, 3, j);
      const auto values = random_values(rng, t.size());
      const auto s = io::sample_file(t, t.make_samples(values));
      const auto c = io::coefficient_file(t, t.make_coefficients(random_values(rng, t.size())));
      for (auto format : {io::Format::csv, io::Format::json}) {
        CHECK(round_trip(s, format) == s);
        CHECK(round_trip(c, format) == c);
      }
      CHECK(io::extract_values(round_trip(s, io::Format::csv), t, io::FileKind::samples) == values);
      CHECK(io::extract_values(round_trip(s, io::Format::json), t, io::FileKind::samples) == values);
    }
  }
}

TEST_CASE("extract_values validation") {
  const DiscreteETransform t({Family::C, 2}, 4);
  const DiscreteETransform t5({Family::C, 2}, 5);
  std::vector<Complex> vals(t.size(), 1.0);
  const auto f = io::sample_file(t, t.make_samples(vals));
  CHECK(io::extract_values(f, t, io::FileKind::samples) == vals);
  CHECK_THROWS_AS(io::extract_values(f, t5, io::FileKind::samples), GridMismatchError);
  CHECK_THROWS_AS(io::extract_values(f, t, io::FileKind::coefficients), GridMismatchError);

  auto truncated = f;
  truncated.rows.resize(4);
  try {
    io::extract_values(truncated, t, io::FileKind::samples);
    FAIL("expected ParseError");
  } catch (const io::ParseError& e) {
    CHECK(e.row() == 5);
  }

  auto swapped = f;
  std::swap(swapped.rows[0], swapped.rows[1]);
  CHECK_THROWS_AS(io::extract_values(swapped, t, io::FileKind::samples), GridMismatchError);

  auto bad_eps = f;
  bad_eps.rows[2].multiplicity = 3;
  CHECK_THROWS_AS(io::extract_values(bad_eps, t, io::FileKind::samples), GridMismatchError);
}

TEST_CASE("malformed CSV rows report their row number") {
  const DiscreteETransform t({Family::C, 2}, 4);
  std::string text = csv_of(io::sample_file(t, t.make_samples(std::vector<Complex>(t.size()))));
  auto replace_line = [&](int line, const std::string& with) {
    std::istringstream in(text);
    std::ostringstream out;
    std::string l;
    for (int k = 1; std::getline(in, l); ++k) out << (k == line ? with : l) << '\n';
    return out.str();
  };
  const std::vector<std::pair<std::string, size_t>> cases{
      {replace_line(5, "0,2,0,F,2,abc,0"), 3},
      {replace_line(3, "0,0,4,F,1,0"), 1},
      {replace_line(4, "0,1,2,X,4,0,0"), 2},
      {replace_line(1, "# etorus-grid version=2 kind=samples family=C rank=2 M=4 j=1"), 0},
      {replace_line(2, "s0,s1,s2,side,eps,re,im"), 0},
      {replace_line(1, "garbage"), 0},
  };
  for (const auto& [bad, row] : cases) {
    std::istringstream is(bad);
    try {
      io::read(is);
      FAIL("expected ParseError");
    } catch (const io::ParseError& e) {
      CHECK(e.row() == row);
    }
  }
  std::istringstream broken_json("{\"format\": \"etorus-grid\", ");
  CHECK_THROWS_AS(io::read(broken_json), io::ParseError);
}

TEST_CASE("points files") {
  std::istringstream in("# comment\ny1,y2\n0.1,0.2\n\n-1e-3, 4\n");
  const auto pts = io::read_points(in, 2);
  REQUIRE(pts.size() == 2);
  CHECK(pts[1] == std::vector<double>{-1e-3, 4.0});
  std::istringstream wrong("0.1,0.2,0.3\n");
  CHECK_THROWS_AS(io::read_points(wrong, 2), io::ParseError);
}

TEST_CASE("mesh output") {
  const GridId id{{Family::A, 1}, 3, 1};
  std::ostringstream os;
  io::write_mesh(os, id, "mode=mesh resolution=2", {{{0.5}, {0.25}, {1.0, -0.0}}, {{-0.5}, {-0.25}, {0.5, 0.0}}});
  CHECK(os.str() == "# etorus-mesh version=1 family=A rank=1 M=3 j=1 mode=mesh resolution=2\nx1,y1,value_re,value_im\n"
                    "0.5,0.25,1,-0\n-0.5,-0.25,0.5,0\n");
}
