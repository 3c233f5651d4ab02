#include "doctest.h"

#include <algorithm>
#include <map>

#include "etorus/grids.hpp"
#include "support/oracles.hpp"

using namespace etorus;

namespace {

Int pow_int(Int b, int e) {
  Int r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

/// Independent count of Eq. (FM)/(riFM) solutions by box scan.
Int brute_count(const IntVector& marks, Int M) {
  const int n = static_cast<int>(marks.size());
  Int total = 0;
  IntVector s(n, 0);
  while (true) {
    Int s0 = M;
    bool ok = true, all_pos = true;
    for (int i = 0; i < n; ++i) {
      s0 -= marks[i] * s[i];
      all_pos = all_pos && s[i] >= 1;
    }
    if (s0 < 0) ok = false;
    if (ok) {
      ++total;
      if (all_pos && s0 >= 1) ++total;
    }
    int k = 0;
    while (k < n && ++s[k] > M) s[k++] = 0;
    if (k == n) break;
  }
  return total;
}

/// Table 1 pattern for C2 points: ε^e by zero pattern.
Int table1_eps(const IntVector& s) {
  const bool z0 = s[0] == 0, z1 = s[1] == 0, z2 = s[2] == 0;
  if (z0 && z1) return 1;       // [0,0,s_2]
  if (z0 && z2) return 2;       // [0,s_1,0]
  if (z1 && z2) return 1;       // [s_0,0,0]
  return 4;
}

Int table1_h(const IntVector& t, Side side) {
  if (side == Side::in_rjF) return 1;
  const bool z0 = t[0] == 0, z1 = t[1] == 0, z2 = t[2] == 0;
  if (z0 && z1) return 2;
  if (z0 && z2) return 4;
  if (z1 && z2) return 4;
  return 1;
}

}  // namespace

TEST_CASE("C2, M=4 grid") {
  const RootSystemData c2({Family::C, 2});
  const auto pts = enumerate_Fe_M(c2, 4, 1);
  CHECK(pts.size() == 10);
  size_t interior = 0;
  for (const auto& p : pts)
    if (p.bary.side == Side::in_rjF) {
      ++interior;
      CHECK(p.bary.sygma == IntVector{1, 1, 1});
    }
  CHECK(interior == 1);
  CHECK(enumerate_Lambda_e_M(c2, 4, 1).size() == 10);
  Int sum = 0;
  for (const auto& p : pts) sum += p.eps;
  CHECK(sum == 32);
}

TEST_CASE("A1 grids") {
  const RootSystemData a1({Family::A, 1});
  const auto pts = enumerate_Fe_M(a1, 1, 1);
  REQUIRE(pts.size() == 2);
  CHECK(pts[0].bary.sygma == IntVector{0, 1});
  CHECK(pts[1].bary.sygma == IntVector{1, 0});
  const auto w = enumerate_Lambda_e_M(a1, 2, 1);
  REQUIRE(w.size() == 4);
  std::vector<Int> f_side;
  for (const auto& x : w)
    if (x.bary.side == Side::in_F) f_side.push_back(x.coords[0]);
  std::sort(f_side.begin(), f_side.end());
  CHECK(f_side == std::vector<Int>{0, 1, 2});
  CHECK(w.back().bary.side == Side::in_rjF);
  CHECK(binomial(3, 1) + binomial(1, 1) == 4);
}

TEST_CASE("canonical order: F block then interior block, lexicographic") {
  for (const auto& t : oracle::small_types()) {
    const RootSystemData rsd(t);
    for (Int M = 1; M <= 6; ++M) {
      const auto pts = enumerate_Fe_M(rsd, M, 1);
      for (size_t k = 0; k < pts.size(); ++k) CHECK(pts[k].index == k);
      for (size_t k = 1; k < pts.size(); ++k) {
        const auto& a = pts[k - 1].bary;
        const auto& b = pts[k].bary;
        if (a.side == b.side)
          CHECK(a.sygma < b.sygma);
        else
          CHECK((a.side == Side::in_F && b.side == Side::in_rjF));
      }
    }
  }
}

TEST_CASE("count_formula examples") {
  CHECK(count_formula({Family::C, 2}, 4) == 10);
  CHECK(count_formula({Family::A, 1}, 1) == 2);
  CHECK(count_formula({Family::D, 4}, 2) == 11);
  CHECK(brute_count(RootSystemData({Family::D, 4}).marks(), 2) == 11);
  CHECK_THROWS_AS(count_formula({Family::D, 3}, 2), InvalidTypeError);
  CHECK_THROWS_AS(count_formula({Family::B, 2}, 2), InvalidTypeError);
}

TEST_CASE("count formula, Proposition and brute count agree with enumeration") {
  for (Family f : {Family::A, Family::B, Family::C, Family::D})
    for (int n = 1; n <= 5; ++n) {
      if (!SimpleType::is_supported(f, n)) continue;
      const RootSystemData rsd({f, n});
      for (Int M = 1; M <= 10; ++M) {
        CAPTURE(rsd.type().name());
        CAPTURE(M);
        const Int enumerated = static_cast<Int>(enumerate_Fe_M(rsd, M, 1).size());
        CHECK(enumerated == count_formula({f, n}, M));
        CHECK(enumerated == brute_count(rsd.marks(), M));
        CHECK(enumerated == static_cast<Int>(enumerate_Lambda_e_M(rsd, M, 1).size()));
        const Int m = rsd.coxeter();
        const Int fm = count_F_M(rsd.marks(), M);
        if (M < m) CHECK(enumerated == fm);
        if (M == m) CHECK(enumerated == fm + 1);
        if (M > m) CHECK(enumerated == fm + count_F_M(rsd.marks(), M - m));
        if (f == Family::B) CHECK(enumerated == count_formula({Family::C, n}, M));
      }
    }
}

TEST_CASE("eps sums to c·M^n and divides |W^e|") {
  for (const auto& t : oracle::small_types()) {
    const RootSystemData rsd(t);
    const Int we = rsd.weyl_order() / 2;
    for (Int M = 1; M <= 6; ++M)
      for (int j = 1; j <= t.rank; ++j) {
        Int sum = 0;
        for (const auto& p : enumerate_Fe_M(rsd, M, j)) {
          sum += p.eps;
          CHECK(we % p.eps == 0);
          if (p.bary.side == Side::in_rjF) CHECK(p.eps == we);
        }
        CHECK(sum == rsd.center() * pow_int(M, t.rank));
        for (const auto& w : enumerate_Lambda_e_M(rsd, M, j)) {
          CHECK(we % w.h_dual == 0);
          if (w.bary.side == Side::in_rjF) CHECK(w.h_dual == 1);
        }
      }
  }
}

TEST_CASE("Table 1 patterns for C2") {
  const RootSystemData c2({Family::C, 2});
  for (Int M : {4, 5, 6, 8}) {
    for (const auto& p : enumerate_Fe_M(c2, M, 1)) {
      if (p.bary.side == Side::in_rjF)
        CHECK(p.eps == 4);
      else
        CHECK(p.eps == table1_eps(p.bary.sygma));
    }
    for (const auto& w : enumerate_Lambda_e_M(c2, M, 1)) CHECK(w.h_dual == table1_h(w.bary.sygma, w.bary.side));
  }
}

TEST_CASE("stabilizer_order_diagram examples") {
  const RootSystemData c2({Family::C, 2});
  CHECK(stabilizer_order_diagram({{4, 0, 0}, 4, Side::in_F, 1}, c2, Lattice::point) == 4);
  CHECK(stabilizer_order_diagram({{0, 2, 0}, 4, Side::in_F, 1}, c2, Lattice::point) == 2);
  CHECK(stabilizer_order_diagram({{4, 0, 0}, 4, Side::in_F, 1}, c2, Lattice::weight) == 4);
  CHECK(stabilizer_order_diagram({{1, 1, 1}, 4, Side::in_rjF, 1}, c2, Lattice::point) == 1);
  CHECK_THROWS_AS(stabilizer_order_diagram({{1, 1, 0}, 4, Side::in_F, 1}, c2, Lattice::point), InvariantError);
}

TEST_CASE("stabilizer_order_brute examples") {
  const RootSystemData c2({Family::C, 2});
  const auto even = even_subgroup(enumerate_weyl(c2));
  for (Int M = 1; M <= 6; ++M) CHECK(stabilizer_order_brute({{M, 0, 0}, M, Side::in_F, 1}, even, c2, Lattice::point) == 4);
  CHECK(stabilizer_order_brute({{1, 1, 1}, 4, Side::in_F, 1}, even, c2, Lattice::point) == 1);
}

TEST_CASE("diagram procedure equals brute stabilizers") {
  for (const auto& t : oracle::small_types()) {
    const RootSystemData rsd(t);
    const auto even = even_subgroup(enumerate_weyl(rsd));
    for (Int M = 1; M <= 6; ++M) {
      for (const auto& p : enumerate_Fe_M(rsd, M, 1))
        CHECK(stabilizer_order_diagram(p.bary, rsd, Lattice::point) == stabilizer_order_brute(p.bary, even, rsd, Lattice::point));
      for (const auto& w : enumerate_Lambda_e_M(rsd, M, 1))
        CHECK(stabilizer_order_diagram(w.bary, rsd, Lattice::weight) ==
              stabilizer_order_brute(w.bary, even, rsd, Lattice::weight));
    }
  }
}

TEST_CASE("grids are complete, distinct W^e-orbit representatives of the torus") {
  for (const auto& t : oracle::small_types()) {
    const RootSystemData rsd(t);
    const auto even = even_subgroup(enumerate_weyl(rsd));
    const Int we = static_cast<Int>(even.size());
    for (Int M = 1; M <= 4; ++M)
      for (int j = 1; j <= t.rank; ++j) {
        CAPTURE(t.name());
        CAPTURE(M);
        CAPTURE(j);
        const auto op = oracle::orbits(rsd, even, M, Lattice::point);
        const auto pts = enumerate_Fe_M(rsd, M, j);
        CHECK(pts.size() == op.sizes.size());
        std::set<size_t> seen;
        for (const auto& p : pts) {
          const size_t orbit = op.orbit_of.at(oracle::reduce(rsd, p.coords, M, Lattice::point));
          CHECK(seen.insert(orbit).second);
          CHECK(static_cast<Int>(op.sizes[orbit]) == p.eps);
        }
        const auto ow = oracle::orbits(rsd, even, M, Lattice::weight);
        const auto wts = enumerate_Lambda_e_M(rsd, M, j);
        CHECK(wts.size() == ow.sizes.size());
        std::set<size_t> seen_w;
        for (const auto& w : wts) {
          const size_t orbit = ow.orbit_of.at(oracle::reduce(rsd, w.coords, M, Lattice::weight));
          CHECK(seen_w.insert(orbit).second);
          CHECK(we / static_cast<Int>(ow.sizes[orbit]) == w.h_dual);
        }
      }
  }
}

TEST_CASE("torus enumeration sizes") {
  for (const auto& t : oracle::small_types()) {
    const RootSystemData rsd(t);
    for (Int M = 1; M <= 4; ++M) {
      CHECK(static_cast<Int>(torus_points(rsd, M).size()) == rsd.center() * pow_int(M, t.rank));
      CHECK(static_cast<Int>(torus_weights(rsd, M).size()) == rsd.center() * pow_int(M, t.rank));
    }
  }
  CHECK_THROWS_AS(torus_points(RootSystemData({Family::D, 4}), 5, 100), SizeLimitError);
}

TEST_CASE("column Hermite form") {
  const IntMatrix a{{2, -1}, {-2, 2}};
  const IntMatrix h = column_hermite_form(a);
  CHECK(h(0, 1) == 0);
  CHECK(h(0, 0) > 0);
  CHECK(h(1, 1) > 0);
  CHECK(h(0, 0) * h(1, 1) == 2);
}
