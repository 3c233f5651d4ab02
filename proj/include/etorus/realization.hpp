#pragma once

#include <span>
#include <vector>

#include "etorus/rootdata.hpp"

namespace etorus {

/// Fixed orthonormal-coordinate realization of the simple roots: row i of the
/// lower-triangular Cholesky factor of the Gram matrix ⟨α_i, α_j⟩ (long roots
/// have squared length 2). Only used to place off-lattice points in Rⁿ; all
/// lattice pairings go through the exact rational path.
class EuclideanRealization {
 public:
  explicit EuclideanRealization(const RootSystemData& rsd);

  int rank() const { return rank_; }
  /// Cartesian coordinates of α_i.
  std::span<const double> simple_root(int i) const { return {roots_.data() + static_cast<size_t>(i) * rank_, static_cast<size_t>(rank_)}; }

  /// Σ y_i ω^∨_i → Cartesian (solves ⟨x, α_i⟩ = y_i).
  std::vector<double> to_cartesian(std::span<const double> coweight_coords) const;
  /// Cartesian → ω^∨-coordinates y_i = ⟨x, α_i⟩.
  std::vector<double> from_cartesian(std::span<const double> x) const;

 private:
  int rank_;
  std::vector<double> roots_;  // row-major lower triangular
};

/// Real ω^∨-coordinates of sample points covering F^e = F ∪ r_j·int(F), cell-centred
/// so that no sample sits on a wall. Rank 1: `resolution` points; rank 2:
/// resolution² points on a collapsed-square mesh split between the two simplices.
std::vector<std::vector<double>> fundamental_domain_mesh(const RootSystemData& rsd, int j, int resolution);

}  // namespace etorus
