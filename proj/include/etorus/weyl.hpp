#pragma once

#include <cstddef>
#include <vector>

#include "etorus/core.hpp"
#include "etorus/rootdata.hpp"

namespace etorus {

/// One Weyl group element. Columns act on column vectors: weight_matrix on
/// ω-coordinates of weights, point_matrix on ω^∨-coordinates of points.
class WeylElement {
 public:
  WeylElement() = default;
  WeylElement(IntMatrix weight_matrix, IntMatrix point_matrix, int parity)
      : weight_(std::move(weight_matrix)), point_(std::move(point_matrix)), parity_(parity) {}

  static WeylElement identity(int rank);

  const IntMatrix& weight_matrix() const { return weight_; }
  const IntMatrix& point_matrix() const { return point_; }
  /// Determinant of the geometric action, ±1.
  int parity() const { return parity_; }
  int rank() const { return weight_.rows(); }

  IntVector apply_to_weight(std::span<const Int> t) const { return weight_.apply(t); }
  IntVector apply_to_point(std::span<const Int> s) const { return point_.apply(s); }

  friend WeylElement operator*(const WeylElement& a, const WeylElement& b) {
    return {a.weight_ * b.weight_, a.point_ * b.point_, a.parity_ * b.parity_};
  }
  friend bool operator==(const WeylElement& a, const WeylElement& b) { return a.weight_ == b.weight_; }

 private:
  IntMatrix weight_;
  IntMatrix point_;
  int parity_ = 1;
};

/// r_i, 1 ≤ i ≤ n.
WeylElement simple_reflection(const RootSystemData& rsd, int i);
/// Reflection r_ξ in the highest root.
WeylElement highest_root_reflection(const RootSystemData& rsd);
/// Reflection r_η in the highest dual root.
WeylElement dual_highest_root_reflection(const RootSystemData& rsd);

inline constexpr Int kDefaultGroupCap = 1'000'000;

/// Full Weyl group as a BFS closure over r_1..r_n, layer by layer (word length),
/// each layer sorted lexicographically by weight matrix. Identity comes first.
std::vector<WeylElement> enumerate_weyl(const RootSystemData& rsd, Int cap = kDefaultGroupCap);

/// Parity +1 elements, canonical order preserved.
std::vector<WeylElement> even_subgroup(const std::vector<WeylElement>& elements);

WeightCoord apply_to_weight(const WeylElement& w, const WeightCoord& t);
PointCoord apply_to_point(const WeylElement& w, const PointCoord& x);

enum class Side { in_F, in_rjF };

/// Barycentric representative [s_0, …, s_n] of level M. For Side::in_rjF the
/// coordinates are those of the interior point of F (resp. F^∨) that r_j maps
/// onto the represented point.
struct BarycentricPoint {
  IntVector sygma;
  Int level = 1;
  Side side = Side::in_F;
  int j = 1;

  friend bool operator==(const BarycentricPoint&, const BarycentricPoint&) = default;
};

/// Fold output: the original vector equals w·(coordinates of point) + level·q.
/// For points q ∈ Q^∨ is in ω^∨-coordinates; for weights q ∈ Q in ω-coordinates.
struct FoldResult {
  BarycentricPoint point;
  WeylElement w;
  IntVector q;
};

/// s_0 = M − Σ m_i s_i prepended to s.
BarycentricPoint point_barycentric(const RootSystemData& rsd, const PointCoord& x);
BarycentricPoint weight_barycentric(const RootSystemData& rsd, const WeightCoord& t, Int level);

/// Scaled ω^∨-coordinates (numerators over M) of the point a barycentric vector represents.
IntVector point_coordinates(const RootSystemData& rsd, const BarycentricPoint& b);
/// ω-coordinates of the weight a barycentric vector represents.
IntVector weight_coordinates(const RootSystemData& rsd, const BarycentricPoint& b);

FoldResult fold_to_F(const RootSystemData& rsd, const PointCoord& x);
FoldResult fold_to_Fe(const RootSystemData& rsd, const PointCoord& x, int j = 1);
/// Folds t into M·F^∨ modulo the dual affine group Q ⋊ W (scaled by M).
FoldResult fold_weight_to_F_dual(const RootSystemData& rsd, const WeightCoord& t, Int level);
FoldResult fold_weight_to_Lambda_e(const RootSystemData& rsd, const WeightCoord& t, Int level, int j = 1);

/// d ∈ M·Q^∨ for d in scaled ω^∨-coordinates.
bool in_scaled_coroot_lattice(const RootSystemData& rsd, std::span<const Int> d, Int level);
/// v ∈ M·Q for v in ω-coordinates.
bool in_scaled_root_lattice(const RootSystemData& rsd, std::span<const Int> v, Int level);

}  // namespace etorus
