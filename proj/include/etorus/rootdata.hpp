#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "etorus/core.hpp"

namespace etorus {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D' };

std::optional<Family> parse_family(std::string_view s);
char family_char(Family f);

/// Classical simple type. Use make() for the validated constructor.
struct SimpleType {
  Family family = Family::A;
  int rank = 1;

  /// Throws InvalidTypeError unless A_n (n≥1), B_n (n≥3), C_n (n≥2) or D_n (n≥4).
  static SimpleType make(Family family, int rank);
  static bool is_supported(Family family, int rank);

  std::string name() const;
  friend bool operator==(const SimpleType&, const SimpleType&) = default;
};

/// Integer weight in the ω-basis (element of P).
struct WeightCoord {
  IntVector coords;
};

/// The point (s_1 ω^∨_1 + … + s_n ω^∨_n)/M of (1/M)P^∨.
struct PointCoord {
  IntVector coords;
  Int level = 1;
};

/// Exact value k/d of a pairing modulo 1, reduced, 0 ≤ k < d.
struct RationalPhase {
  Int numerator = 0;
  Int denominator = 1;

  static RationalPhase reduced(Int numerator, Int denominator);
  double value() const { return static_cast<double>(numerator) / static_cast<double>(denominator); }
  friend bool operator==(const RationalPhase&, const RationalPhase&) = default;
};

struct DiagramNeighbor {
  int node = 0;
  /// Product a_ij·a_ji of the extended Cartan entries: 1 single, 2 double,
  /// 4 for the infinite bond of affine A_1.
  int multiplicity = 1;
  friend bool operator==(const DiagramNeighbor&, const DiagramNeighbor&) = default;
};

/// Extended Dynkin diagram on nodes {0,…,n}; node 0 is the affine node.
struct ExtendedDiagram {
  std::vector<std::vector<DiagramNeighbor>> adjacency;

  int node_count() const { return static_cast<int>(adjacency.size()); }
  int multiplicity(int a, int b) const;
  friend bool operator==(const ExtendedDiagram&, const ExtendedDiagram&) = default;
};

/// Static data of a classical root system, Bourbaki numbering,
/// C_ij = 2⟨α_i,α_j⟩/⟨α_j,α_j⟩. Immutable once built.
class RootSystemData {
 public:
  explicit RootSystemData(SimpleType type);

  const SimpleType& type() const { return type_; }
  int rank() const { return type_.rank; }

  const IntMatrix& cartan() const { return cartan_; }
  /// det(C)·C⁻¹; ⟨ω_i, ω^∨_j⟩ = cartan_adjugate(i,j) / center.
  const IntMatrix& cartan_adjugate() const { return adjugate_; }
  const IntVector& marks() const { return marks_; }
  const IntVector& dual_marks() const { return dual_marks_; }
  Int coxeter() const { return coxeter_; }
  Int center() const { return center_; }
  /// Squared lengths of the simple roots up to a common factor (short = 1 for B/C).
  const IntVector& root_norms() const { return norms_; }

  const ExtendedDiagram& ext_diagram() const { return ext_diagram_; }
  const ExtendedDiagram& dual_ext_diagram() const { return dual_ext_diagram_; }

  /// ξ = Σ m_i α_i in ω-coordinates.
  const IntVector& highest_root_weight() const { return xi_weight_; }
  /// Coefficients of ξ^∨ = 2ξ/⟨ξ,ξ⟩ in the α^∨-basis.
  const IntVector& highest_coroot_coeffs() const { return xi_coroot_coeffs_; }
  /// ξ^∨ in ω^∨-coordinates.
  const IntVector& highest_coroot_coweight() const { return xi_coroot_coweight_; }
  /// η = Σ m^∨_i α^∨_i in ω^∨-coordinates.
  const IntVector& dual_highest_root_coweight() const { return eta_coweight_; }
  /// Coefficients of 2η/⟨η,η⟩ in the α-basis.
  const IntVector& dual_highest_coroot_coeffs() const { return eta_coroot_coeffs_; }
  /// 2η/⟨η,η⟩ in ω-coordinates.
  const IntVector& dual_highest_coroot_weight() const { return eta_coroot_weight_; }

  /// Weyl group order |W|.
  Int weyl_order() const;

 private:
  SimpleType type_;
  IntMatrix cartan_;
  IntMatrix adjugate_;
  IntVector marks_;
  IntVector dual_marks_;
  Int coxeter_ = 0;
  Int center_ = 0;
  IntVector norms_;
  ExtendedDiagram ext_diagram_;
  ExtendedDiagram dual_ext_diagram_;
  IntVector xi_weight_;
  IntVector xi_coroot_coeffs_;
  IntVector xi_coroot_coweight_;
  IntVector eta_coweight_;
  IntVector eta_coroot_coeffs_;
  IntVector eta_coroot_weight_;
};

RootSystemData build_root_system(SimpleType type);

/// Cartan matrix of a classical type; B/C/D accept any rank ≥ 2 here so the
/// tables can be reused for subdiagrams and dual systems.
IntMatrix cartan_matrix(Family family, int rank);
IntVector marks_table(Family family, int rank);
IntVector dual_marks_table(Family family, int rank);
ExtendedDiagram ext_diagram_table(Family family, int rank);

/// Positive roots in α-coordinates, generated as the W-orbit closure of the simple roots.
std::vector<IntVector> positive_roots(const IntMatrix& cartan);
/// α-coordinates of the root of maximal height.
IntVector derive_marks(const IntMatrix& cartan);
/// Extended diagram computed from the extended Cartan matrix of a system with
/// the given Cartan matrix, marks and simple-root norms.
ExtendedDiagram derive_ext_diagram(const IntMatrix& cartan, const IntVector& marks, const IntVector& norms);

/// |W| for A_k: (k+1)!, B_k/C_k: 2^k k!, D_k: 2^{k-1} k!. Accepts any k ≥ 1 (D: k ≥ 2).
Int weyl_order(Family family, int rank);

/// ⟨Σ t_i ω_i, Σ (s_j/M) ω^∨_j⟩ mod 1, exactly.
RationalPhase pairing_phase(const RootSystemData& rsd, const WeightCoord& t, const PointCoord& x);
/// Unreduced numerator of the same pairing over the denominator center·M, in [0, center·M).
Int pairing_numerator(const RootSystemData& rsd, std::span<const Int> t, std::span<const Int> s, Int level);

}  // namespace etorus
