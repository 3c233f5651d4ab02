#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "etorus/efun.hpp"
#include "etorus/grids.hpp"
#include "etorus/rootdata.hpp"
#include "etorus/weyl.hpp"

namespace etorus {

/// Identifies the grid a vector lives on; analysis and synthesis must agree on all of it.
struct GridId {
  SimpleType type;
  Int level = 1;
  int j = 1;

  friend bool operator==(const GridId&, const GridId&) = default;
};

/// Values on F^e_M in canonical order.
struct SampleVector {
  GridId grid;
  std::vector<Complex> values;
};

/// Expansion coefficients c_λ on Λ^e_M in canonical order.
struct CoefficientVector {
  GridId grid;
  std::vector<Complex> values;
};

struct GramReport {
  size_t size = 0;
  std::vector<Complex> matrix;  // row-major, size × size
  double max_offdiag_abs = 0.0;
  double max_diag_reldev = 0.0;

  const Complex& operator()(size_t r, size_t c) const { return matrix[r * size + c]; }
};

struct PlancherelReport {
  double lhs = 0.0;
  double rhs = 0.0;
  double reldev = 0.0;
};

struct TransformOptions {
  Int group_cap = kDefaultGroupCap;
  size_t cell_cap = kDefaultTableCap;
  /// 0: ETORUS_THREADS or hardware concurrency.
  unsigned threads = 0;
};

/// |a − b| / max(|a|, |b|), 0 when both vanish.
double relative_deviation(double a, double b);

/// Discrete E-transform on one grid F^e_M with labels Λ^e_M. Builds the root
/// data, the even Weyl group, both grids and the full E-table once; every
/// operation afterwards is a lookup-and-sum over that table.
class DiscreteETransform {
 public:
  DiscreteETransform(SimpleType type, Int level, int j = 1, TransformOptions options = {});

  const GridId& grid_id() const { return id_; }
  const RootSystemData& root_system() const { return rsd_; }
  const std::vector<WeylElement>& even_group() const { return even_group_; }
  const std::vector<GridPoint>& points() const { return points_; }
  const std::vector<WeightPoint>& weights() const { return weights_; }
  const ETable& table() const { return table_; }
  size_t size() const { return points_.size(); }

  /// c·|W^e|·Mⁿ.
  double scale() const { return scale_; }
  /// ⟨Ξ_λ, Ξ_λ⟩ = c·|W^e|·Mⁿ·h^{e∨}_λ for the weight at `index`.
  double norm_squared(size_t index) const { return scale_ * static_cast<double>(weights_[index].h_dual); }

  SampleVector make_samples(std::vector<Complex> values) const;
  CoefficientVector make_coefficients(std::vector<Complex> values) const;
  /// Ξ_λ sampled on the grid, for the weight at `index`.
  SampleVector sample_E(size_t index) const;

  /// Σ_x ε^e(x) f(x) conj(g(x)).
  Complex scalar_product(const SampleVector& f, const SampleVector& g) const;
  CoefficientVector forward(const SampleVector& f) const;
  /// Interpolant evaluated on every grid point.
  SampleVector inverse(const CoefficientVector& cv) const;
  /// Interpolant at a lattice point, exact phases.
  Complex interpolate(const CoefficientVector& cv, const PointCoord& x) const;
  /// Interpolant at a real point given in ω^∨-coordinates.
  Complex interpolate(const CoefficientVector& cv, std::span<const double> y) const;

  GramReport gram_matrix() const;
  PlancherelReport plancherel_check(const SampleVector& f) const;
  PlancherelReport plancherel_check(const SampleVector& f, const CoefficientVector& cv) const;

  /// Σ over all of (1/M)P^∨/Q^∨ of Ξ_λ conj(Ξ_λ′), for labels at the given indices.
  Complex full_torus_product(size_t lambda, size_t lambda_prime) const;

 private:
  void require_grid(const GridId& other) const;

  GridId id_;
  TransformOptions options_;
  RootSystemData rsd_;
  std::vector<WeylElement> even_group_;
  std::vector<GridPoint> points_;
  std::vector<WeightPoint> weights_;
  ETable table_;
  double scale_ = 1.0;
};

/// Σ_{y ∈ (1/M)P^∨/Q^∨} e^{2πi⟨λ−λ′, y⟩}, by brute enumeration of the coset group.
Complex abelian_orthogonality_oracle(const RootSystemData& rsd, Int level, const WeightCoord& lambda,
                                     const WeightCoord& lambda_prime, Int cap = 10'000'000);

}  // namespace etorus
