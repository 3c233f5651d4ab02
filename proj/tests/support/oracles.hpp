// Independent reference computations used by the unit and acceptance tests.
// None of these call into the code path they are used to check.
#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <numbers>
#include <random>
#include <set>
#include <vector>

#include "etorus/grids.hpp"
#include "etorus/rootdata.hpp"
#include "etorus/weyl.hpp"

namespace oracle {

using etorus::Int;
using etorus::IntVector;
using Complex = std::complex<double>;

/// Inverse of the Cartan matrix by Gauss-Jordan elimination in doubles.
inline std::vector<std::vector<double>> inverse_cartan(const etorus::IntMatrix& c) {
  const int n = c.rows();
  std::vector<std::vector<double>> a(n, std::vector<double>(2 * n, 0.0));
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) a[i][k] = static_cast<double>(c(i, k));
    a[i][n + i] = 1.0;
  }
  for (int col = 0; col < n; ++col) {
    int piv = col;
    for (int r = col + 1; r < n; ++r)
      if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
    std::swap(a[col], a[piv]);
    const double p = a[col][col];
    for (auto& v : a[col]) v /= p;
    for (int r = 0; r < n; ++r) {
      if (r == col) continue;
      const double f = a[r][col];
      for (int k = 0; k < 2 * n; ++k) a[r][k] -= f * a[col][k];
    }
  }
  std::vector<std::vector<double>> inv(n, std::vector<double>(n));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) inv[i][k] = a[i][n + k];
  return inv;
}

/// ⟨Σ t_i ω_i, Σ y_j ω^∨_j⟩ = tᵀ C⁻¹ y in floating point.
inline double pairing(const std::vector<std::vector<double>>& inv, const IntVector& t, const std::vector<double>& y) {
  double s = 0.0;
  for (size_t i = 0; i < t.size(); ++i)
    for (size_t k = 0; k < y.size(); ++k) s += static_cast<double>(t[i]) * inv[i][k] * y[k];
  return s;
}

inline double frac(double v) { return v - std::floor(v); }

/// Distance between two phases on the circle R/Z.
inline double circle_distance(double a, double b) {
  const double d = frac(a - b);
  return std::min(d, 1.0 - d);
}

/// Ξ_λ(y) by direct summation of Eq. (E) with floating pairings; y in ω^∨-coordinates.
inline Complex direct_E(const etorus::RootSystemData& rsd, const std::vector<etorus::WeylElement>& even,
                        const IntVector& lambda, const std::vector<double>& y) {
  const auto inv = inverse_cartan(rsd.cartan());
  Complex s = 0.0;
  for (const auto& w : even) s += std::polar(1.0, 2.0 * std::numbers::pi * pairing(inv, w.apply_to_weight(lambda), y));
  return s;
}

inline std::vector<double> scaled_point(const IntVector& s, Int level) {
  std::vector<double> y(s.size());
  for (size_t i = 0; i < s.size(); ++i) y[i] = static_cast<double>(s[i]) / static_cast<double>(level);
  return y;
}

/// Euclidean model of C_2: α_1 = e_1 − e_2, α_2 = 2e_2; ω_1 = e_1, ω_2 = e_1 + e_2;
/// ω^∨_1 = e_1, ω^∨_2 = (e_1 + e_2)/2.
struct C2Model {
  static std::vector<double> weight(const IntVector& t) {
    return {static_cast<double>(t[0] + t[1]), static_cast<double>(t[1])};
  }
  static std::vector<double> coweight(const std::vector<double>& y) { return {y[0] + 0.5 * y[1], 0.5 * y[1]}; }
  static double dot(const std::vector<double>& a, const std::vector<double>& b) { return a[0] * b[0] + a[1] * b[1]; }
  /// Reflection in the hyperplane orthogonal to α_i, 1-based.
  static std::vector<double> reflect(int i, const std::vector<double>& x) {
    const std::vector<double> alpha = i == 1 ? std::vector<double>{1.0, -1.0} : std::vector<double>{0.0, 2.0};
    const double f = 2.0 * dot(x, alpha) / dot(alpha, alpha);
    return {x[0] - f * alpha[0], x[1] - f * alpha[1]};
  }
};

/// Reduces v modulo the column lattice of a lower-triangular Hermite basis.
inline IntVector reduce_mod_lattice(IntVector v, const etorus::IntMatrix& hermite) {
  const int n = hermite.rows();
  for (int i = 0; i < n; ++i) {
    const Int d = hermite(i, i);
    const Int k = (v[i] >= 0 ? v[i] / d : -((-v[i] + d - 1) / d));
    if (k != 0)
      for (int r = i; r < n; ++r) v[r] -= k * hermite(r, i);
  }
  return v;
}

/// Partition of a finite abelian group Zⁿ/L into W^e-orbits.
struct OrbitPartition {
  std::map<IntVector, size_t> orbit_of;
  std::vector<size_t> sizes;
};

/// W^e-orbits on (1/M)P^∨/Q^∨ (points: lattice C·M, acting by point matrices)
/// or on P/MQ (weights: lattice Cᵀ·M, acting by weight matrices).
inline OrbitPartition orbits(const etorus::RootSystemData& rsd, const std::vector<etorus::WeylElement>& even, Int level,
                             etorus::Lattice side) {
  const bool points = side == etorus::Lattice::point;
  const etorus::IntMatrix basis = (points ? rsd.cartan() : rsd.cartan().transposed()).scaled(level);
  const etorus::IntMatrix h = etorus::column_hermite_form(basis);
  const auto reps = points ? etorus::torus_points(rsd, level) : etorus::torus_weights(rsd, level);
  OrbitPartition out;
  for (const auto& r : reps) {
    const IntVector key = reduce_mod_lattice(r, h);
    if (out.orbit_of.count(key)) continue;
    std::set<IntVector> orbit;
    for (const auto& w : even) orbit.insert(reduce_mod_lattice(points ? w.apply_to_point(key) : w.apply_to_weight(key), h));
    for (const auto& o : orbit) out.orbit_of[o] = out.sizes.size();
    out.sizes.push_back(orbit.size());
  }
  return out;
}

inline IntVector reduce(const etorus::RootSystemData& rsd, const IntVector& v, Int level, etorus::Lattice side) {
  const bool points = side == etorus::Lattice::point;
  const etorus::IntMatrix basis = (points ? rsd.cartan() : rsd.cartan().transposed()).scaled(level);
  return reduce_mod_lattice(v, etorus::column_hermite_form(basis));
}

/// Barycentric membership tests in scaled ω^∨-coordinates.
inline bool in_F(const etorus::RootSystemData& rsd, const IntVector& s, Int level) {
  Int s0 = level;
  for (size_t i = 0; i < s.size(); ++i) {
    if (s[i] < 0) return false;
    s0 -= rsd.marks()[i] * s[i];
  }
  return s0 >= 0;
}

inline bool in_int_F(const etorus::RootSystemData& rsd, const IntVector& s, Int level) {
  Int s0 = level;
  for (size_t i = 0; i < s.size(); ++i) {
    if (s[i] < 1) return false;
    s0 -= rsd.marks()[i] * s[i];
  }
  return s0 >= 1;
}

/// w·s for every w, each reduced into the Hermite box of M·Q^∨ so that a small
/// window of further shifts reaches F.
inline std::vector<IntVector> box_images(const etorus::RootSystemData& rsd, const std::vector<etorus::WeylElement>& group,
                                         const IntVector& s, Int level) {
  const etorus::IntMatrix h = etorus::column_hermite_form(rsd.cartan().scaled(level));
  std::vector<IntVector> out;
  for (const auto& w : group) out.push_back(reduce_mod_lattice(w.apply_to_point(s), h));
  return out;
}

/// All representatives of x's W^aff_e-orbit (w ∈ W^e, shifts by M·Q^∨ from a
/// coefficient box) that land in F ∪ r_j·int(F). Expected to be exactly one.
inline std::set<IntVector> scan_Fe(const etorus::RootSystemData& rsd, const std::vector<etorus::WeylElement>& group,
                                   const IntVector& s, Int level, int j, int box) {
  const int n = rsd.rank();
  const auto rj = etorus::simple_reflection(rsd, j);
  const auto images = box_images(rsd, group, s, level);
  std::set<IntVector> hits;
  IntVector coeff(n, -box);
  while (true) {
    IntVector shift(n, 0);
    for (int i = 0; i < n; ++i)
      for (int r = 0; r < n; ++r) shift[r] += coeff[i] * rsd.cartan()(r, i) * level;
    for (const auto& base : images) {
      IntVector y = base;
      for (int r = 0; r < n; ++r) y[r] += shift[r];
      if (in_F(rsd, y, level) || in_int_F(rsd, rj.apply_to_point(y), level)) hits.insert(y);
    }
    int k = 0;
    while (k < n && ++coeff[k] > box) coeff[k++] = -box;
    if (k == n) break;
  }
  return hits;
}

/// Same scan for the full W and F only.
inline std::set<IntVector> scan_F(const etorus::RootSystemData& rsd, const std::vector<etorus::WeylElement>& group,
                                  const IntVector& s, Int level, int box) {
  const int n = rsd.rank();
  const auto images = box_images(rsd, group, s, level);
  std::set<IntVector> hits;
  IntVector coeff(n, -box);
  while (true) {
    IntVector shift(n, 0);
    for (int i = 0; i < n; ++i)
      for (int r = 0; r < n; ++r) shift[r] += coeff[i] * rsd.cartan()(r, i) * level;
    for (const auto& base : images) {
      IntVector y = base;
      for (int r = 0; r < n; ++r) y[r] += shift[r];
      if (in_F(rsd, y, level)) hits.insert(y);
    }
    int k = 0;
    while (k < n && ++coeff[k] > box) coeff[k++] = -box;
    if (k == n) break;
  }
  return hits;
}

inline IntVector random_vector(std::mt19937_64& rng, int n, Int lo, Int hi) {
  std::uniform_int_distribution<Int> d(lo, hi);
  IntVector v(n);
  for (auto& x : v) x = d(rng);
  return v;
}

/// Types with small groups used across property tests.
inline std::vector<etorus::SimpleType> small_types() {
  using etorus::Family;
  return {{Family::A, 1}, {Family::A, 2}, {Family::A, 3}, {Family::B, 3}, {Family::C, 2}, {Family::C, 3}, {Family::D, 4}};
}

}  // namespace oracle
