#pragma once

#include <cstddef>
#include <vector>

#include "etorus/core.hpp"
#include "etorus/rootdata.hpp"
#include "etorus/weyl.hpp"

namespace etorus {

/// A representative of F^e_M.
struct GridPoint {
  BarycentricPoint bary;
  /// Scaled ω^∨-coordinates of the represented point (numerators over M).
  IntVector coords;
  /// Even orbit size ε^e(x) = |W^e| / h^e_x.
  Int eps = 1;
  size_t index = 0;
};

/// A representative of Λ^e_M.
struct WeightPoint {
  BarycentricPoint bary;
  /// ω-coordinates of the weight.
  IntVector coords;
  /// Even stabilizer order h^{e∨}_λ modulo MQ.
  Int h_dual = 1;
  size_t index = 0;
};

enum class Lattice { point, weight };

/// F^e_M in canonical order: the F_M block (all s_i ≥ 0), then the r_j·int(F)
/// block (all s_i ≥ 1), each lexicographic in [s_0, …, s_n].
std::vector<GridPoint> enumerate_Fe_M(const RootSystemData& rsd, Int level, int j = 1);
/// Λ^e_M in the same canonical layout on the dual side.
std::vector<WeightPoint> enumerate_Lambda_e_M(const RootSystemData& rsd, Int level, int j = 1);

/// All non-negative solutions of s_0 + Σ μ_i s_i = M (min_value = 0) or all
/// solutions with every coordinate ≥ 1 (min_value = 1), lexicographic.
std::vector<IntVector> barycentric_solutions(const IntVector& marks, Int level, Int min_value);

/// |F_M|: number of non-negative solutions of s_0 + Σ m_i s_i = M (0 for M < 0).
Int count_F_M(const IntVector& marks, Int level);

/// Closed-form |F^e_M| for A_n, B_n, C_n, D_n. Throws InvalidTypeError outside the bounds.
Int count_formula(SimpleType type, Int level);

Int binomial(Int a, Int b);

/// h^e_x (points) or h^{e∨}_λ (weights) from the zero pattern of the
/// barycentric vector on the (dual) extended Dynkin diagram.
Int stabilizer_order_diagram(const BarycentricPoint& bary, const RootSystemData& rsd, Lattice side);

/// Number of w in the even group fixing the representative modulo M·Q^∨ (points)
/// or M·Q (weights), by exact integer congruence.
Int stabilizer_order_brute(const BarycentricPoint& bary, const std::vector<WeylElement>& even_group,
                           const RootSystemData& rsd, Lattice side);

/// Lower-triangular column Hermite normal form of a full-rank integer matrix.
IntMatrix column_hermite_form(const IntMatrix& basis);

/// One representative per coset of Zⁿ / (basis·Zⁿ), boxed by the Hermite diagonal.
std::vector<IntVector> coset_representatives(const IntMatrix& basis, Int cap);

/// Scaled ω^∨-coordinates of all c·Mⁿ elements of (1/M)P^∨/Q^∨.
std::vector<IntVector> torus_points(const RootSystemData& rsd, Int level, Int cap = 10'000'000);
/// ω-coordinates of all c·Mⁿ elements of P/MQ.
std::vector<IntVector> torus_weights(const RootSystemData& rsd, Int level, Int cap = 10'000'000);

}  // namespace etorus
