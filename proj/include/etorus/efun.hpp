#pragma once

#include <complex>
#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include "etorus/grids.hpp"
#include "etorus/rootdata.hpp"
#include "etorus/weyl.hpp"

namespace etorus {

using Complex = std::complex<double>;

/// e^{2πi k/d}. Multiples of a quarter turn are exact.
Complex unit_root(Int numerator, Int denominator);
inline Complex unit_root(const RationalPhase& p) { return unit_root(p.numerator, p.denominator); }

/// All d-th roots of unity, e^{2πi k/d} for k = 0..d-1.
class RootsOfUnity {
 public:
  explicit RootsOfUnity(Int order);
  Int order() const { return static_cast<Int>(table_.size()); }
  const Complex& operator[](Int k) const { return table_[static_cast<size_t>(k)]; }

  /// Shared immutable table per order.
  static std::shared_ptr<const RootsOfUnity> shared(Int order);

 private:
  std::vector<Complex> table_;
};

/// Ξ_λ(x) = Σ_{w ∈ W^e} e^{2πi⟨wλ, x⟩}, summed over group elements in canonical order.
Complex evaluate_E(const RootSystemData& rsd, const std::vector<WeylElement>& even_group, const WeightCoord& lambda,
                   const PointCoord& x);

/// Ξ_λ at a real point given by ω^∨-coordinates y (not scaled). Phases are
/// computed in floating point from the exact rational pairing matrix.
Complex evaluate_E_real(const RootSystemData& rsd, const std::vector<WeylElement>& even_group, std::span<const Int> lambda,
                        std::span<const double> y);

/// Dense row-major table, rows = weights, columns = points.
struct ETable {
  size_t rows = 0;
  size_t cols = 0;
  std::vector<Complex> values;

  const Complex& operator()(size_t r, size_t c) const { return values[r * cols + c]; }
};

inline constexpr size_t kDefaultTableCap = 50'000'000;

/// Ξ_λ(x) for every (λ, x) pair, both in canonical order. All points must share one level.
ETable evaluate_E_table(const RootSystemData& rsd, const std::vector<WeylElement>& even_group,
                        const std::vector<WeightPoint>& weights, const std::vector<GridPoint>& points, unsigned threads = 1,
                        size_t cell_cap = kDefaultTableCap);

}  // namespace etorus
