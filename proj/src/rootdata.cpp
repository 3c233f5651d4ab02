#include "etorus/rootdata.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

namespace etorus {

namespace {

bool tables_defined(Family family, int rank) {
  switch (family) {
    case Family::A: return rank >= 1;
    case Family::B: return rank >= 2;
    case Family::C: return rank >= 2;
    case Family::D: return rank >= 4;
  }
  return false;
}

void require_tables(Family family, int rank) {
  if (!tables_defined(family, rank))
    throw InvalidTypeError(std::string("no root-system tables for ") + family_char(family) + std::to_string(rank));
}

IntVector norms_table(Family family, int rank) {
  switch (family) {
    case Family::A:
    case Family::D: return IntVector(rank, 2);
    case Family::B: {
      IntVector n(rank, 2);
      n.back() = 1;
      return n;
    }
    case Family::C: {
      IntVector n(rank, 1);
      n.back() = 2;
      return n;
    }
  }
  return {};
}

Int expected_center(Family family, int rank) {
  switch (family) {
    case Family::A: return rank + 1;
    case Family::B:
    case Family::C: return 2;
    case Family::D: return 4;
  }
  return 0;
}

Family dual_family(Family f) {
  if (f == Family::B) return Family::C;
  if (f == Family::C) return Family::B;
  return f;
}

void add_edge(ExtendedDiagram& d, int a, int b, int mult) {
  d.adjacency[a].push_back({b, mult});
  d.adjacency[b].push_back({a, mult});
}

void sort_adjacency(ExtendedDiagram& d) {
  for (auto& nb : d.adjacency)
    std::sort(nb.begin(), nb.end(), [](const DiagramNeighbor& x, const DiagramNeighbor& y) { return x.node < y.node; });
}

Int max_of(const IntVector& v) { return *std::max_element(v.begin(), v.end()); }
Int min_of(const IntVector& v) { return *std::min_element(v.begin(), v.end()); }

// c_i = m_i·N_i/N_long: coefficients of 2ξ/⟨ξ,ξ⟩ over the simple coroots (ξ is long).
IntVector top_coroot_coeffs(const IntVector& marks, const IntVector& norms) {
  const Int long_norm = max_of(norms);
  IntVector k(marks.size());
  for (size_t i = 0; i < marks.size(); ++i) {
    const Int num = checked::mul(marks[i], norms[i]);
    if (num % long_norm != 0) throw InvariantError("highest coroot is not integral");
    k[i] = num / long_norm;
  }
  return k;
}

void check(bool cond, const std::string& what) {
  if (!cond) throw InvariantError("root system validation failed: " + what);
}

}  // namespace

std::optional<Family> parse_family(std::string_view s) {
  if (s.size() != 1) return std::nullopt;
  switch (s[0]) {
    case 'A': case 'a': return Family::A;
    case 'B': case 'b': return Family::B;
    case 'C': case 'c': return Family::C;
    case 'D': case 'd': return Family::D;
    default: return std::nullopt;
  }
}

char family_char(Family f) { return static_cast<char>(f); }

bool SimpleType::is_supported(Family family, int rank) {
  switch (family) {
    case Family::A: return rank >= 1;
    case Family::B: return rank >= 3;
    case Family::C: return rank >= 2;
    case Family::D: return rank >= 4;
  }
  return false;
}

SimpleType SimpleType::make(Family family, int rank) {
  if (!is_supported(family, rank)) {
    const int lo = family == Family::A ? 1 : family == Family::B ? 3 : family == Family::C ? 2 : 4;
    throw InvalidTypeError(std::string("invalid type ") + family_char(family) + std::to_string(rank) + ": rank must be >= " +
                           std::to_string(lo));
  }
  return SimpleType{family, rank};
}

std::string SimpleType::name() const { return family_char(family) + std::to_string(rank); }

RationalPhase RationalPhase::reduced(Int numerator, Int denominator) {
  if (denominator <= 0) throw std::invalid_argument("phase denominator must be positive");
  Int k = mod_floor(numerator, denominator);
  if (k == 0) return {0, 1};
  const Int g = gcd(k, denominator);
  return {k / g, denominator / g};
}

int ExtendedDiagram::multiplicity(int a, int b) const {
  for (const auto& nb : adjacency.at(a))
    if (nb.node == b) return nb.multiplicity;
  return 0;
}

IntMatrix cartan_matrix(Family family, int rank) {
  require_tables(family, rank);
  const int n = rank;
  IntMatrix c(n, n);
  for (int i = 0; i < n; ++i) c(i, i) = 2;
  auto link = [&](int i, int j) {  // single bond between 1-based nodes i, j
    c(i - 1, j - 1) = -1;
    c(j - 1, i - 1) = -1;
  };
  switch (family) {
    case Family::A:
      for (int i = 1; i < n; ++i) link(i, i + 1);
      break;
    case Family::B:
      for (int i = 1; i < n; ++i) link(i, i + 1);
      c(n - 2, n - 1) = -2;
      break;
    case Family::C:
      for (int i = 1; i < n; ++i) link(i, i + 1);
      c(n - 1, n - 2) = -2;
      break;
    case Family::D:
      for (int i = 1; i < n - 1; ++i) link(i, i + 1);
      link(n - 2, n);
      break;
  }
  return c;
}

IntVector marks_table(Family family, int rank) {
  require_tables(family, rank);
  const int n = rank;
  switch (family) {
    case Family::A: return IntVector(n, 1);
    case Family::B: {
      IntVector m(n, 2);
      m[0] = 1;
      return m;
    }
    case Family::C: {
      IntVector m(n, 2);
      m[n - 1] = 1;
      return m;
    }
    case Family::D: {
      IntVector m(n, 2);
      m[0] = m[n - 2] = m[n - 1] = 1;
      return m;
    }
  }
  return {};
}

IntVector dual_marks_table(Family family, int rank) { return marks_table(dual_family(family), rank); }

ExtendedDiagram ext_diagram_table(Family family, int rank) {
  require_tables(family, rank);
  const int n = rank;
  ExtendedDiagram d;
  d.adjacency.resize(n + 1);
  switch (family) {
    case Family::A:
      if (n == 1) {
        add_edge(d, 0, 1, 4);
      } else {
        for (int i = 0; i < n; ++i) add_edge(d, i, i + 1, 1);
        add_edge(d, n, 0, 1);
      }
      break;
    case Family::B:
      if (n == 2) {
        add_edge(d, 0, 2, 2);
        add_edge(d, 1, 2, 2);
      } else {
        add_edge(d, 0, 2, 1);
        for (int i = 1; i < n - 1; ++i) add_edge(d, i, i + 1, 1);
        add_edge(d, n - 1, n, 2);
      }
      break;
    case Family::C:
      add_edge(d, 0, 1, 2);
      for (int i = 1; i < n - 1; ++i) add_edge(d, i, i + 1, 1);
      add_edge(d, n - 1, n, 2);
      break;
    case Family::D:
      add_edge(d, 0, 2, 1);
      for (int i = 1; i < n - 1; ++i) add_edge(d, i, i + 1, 1);
      add_edge(d, n - 2, n, 1);
      break;
  }
  sort_adjacency(d);
  return d;
}

std::vector<IntVector> positive_roots(const IntMatrix& cartan) {
  const int n = cartan.rows();
  std::set<IntVector> seen;
  std::deque<IntVector> queue;
  for (int i = 0; i < n; ++i) {
    IntVector e(n, 0);
    e[i] = 1;
    seen.insert(e);
    queue.push_back(std::move(e));
  }
  while (!queue.empty()) {
    IntVector beta = std::move(queue.front());
    queue.pop_front();
    for (int i = 0; i < n; ++i) {
      // ⟨β, α_i^∨⟩ = Σ_k β_k C_ki
      Int pairing = 0;
      for (int k = 0; k < n; ++k) pairing += beta[k] * cartan(k, i);
      if (pairing == 0) continue;
      IntVector next = beta;
      next[i] -= pairing;
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }
  std::vector<IntVector> out;
  for (const auto& r : seen)
    if (std::all_of(r.begin(), r.end(), [](Int v) { return v >= 0; })) out.push_back(r);
  return out;
}

IntVector derive_marks(const IntMatrix& cartan) {
  const auto roots = positive_roots(cartan);
  auto height = [](const IntVector& r) { return std::accumulate(r.begin(), r.end(), Int{0}); };
  return *std::max_element(roots.begin(), roots.end(),
                           [&](const IntVector& a, const IntVector& b) { return height(a) < height(b); });
}

ExtendedDiagram derive_ext_diagram(const IntMatrix& cartan, const IntVector& marks, const IntVector& norms) {
  const int n = cartan.rows();
  const IntVector xi_weight = cartan.transposed().apply(marks);
  const IntVector xi_coroot = cartan.apply(top_coroot_coeffs(marks, norms));
  auto entry = [&](int i, int j) -> Int {
    if (i == j) return 2;
    if (i == 0) return -xi_weight[j - 1];
    if (j == 0) return -xi_coroot[i - 1];
    return cartan(i - 1, j - 1);
  };
  ExtendedDiagram d;
  d.adjacency.resize(n + 1);
  for (int i = 0; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      const Int mult = entry(i, j) * entry(j, i);
      if (mult != 0) add_edge(d, i, j, static_cast<int>(mult));
    }
  sort_adjacency(d);
  return d;
}

Int weyl_order(Family family, int rank) {
  if (rank < 1 || (family == Family::D && rank < 2)) throw InvalidTypeError("weyl_order: rank out of range");
  Int factorial = 1;
  for (int i = 2; i <= rank; ++i) factorial = checked::mul(factorial, i);
  switch (family) {
    case Family::A: return checked::mul(factorial, rank + 1);
    case Family::B:
    case Family::C: return checked::mul(factorial, Int{1} << rank);
    case Family::D: return checked::mul(factorial, Int{1} << (rank - 1));
  }
  return 0;
}

RootSystemData::RootSystemData(SimpleType type) : type_(SimpleType::make(type.family, type.rank)) {
  const Family f = type_.family;
  const int n = type_.rank;
  cartan_ = cartan_matrix(f, n);
  adjugate_ = adjugate(cartan_);
  center_ = determinant(cartan_);
  marks_ = marks_table(f, n);
  dual_marks_ = dual_marks_table(f, n);
  coxeter_ = 1 + std::accumulate(marks_.begin(), marks_.end(), Int{0});
  norms_ = norms_table(f, n);
  ext_diagram_ = ext_diagram_table(f, n);
  dual_ext_diagram_ = ext_diagram_table(dual_family(f), n);

  xi_weight_ = cartan_.transposed().apply(marks_);
  xi_coroot_coeffs_ = top_coroot_coeffs(marks_, norms_);
  xi_coroot_coweight_ = cartan_.apply(xi_coroot_coeffs_);

  // Coroot norms are proportional to 1/N_i; rescale to stay integral.
  const Int nl = max_of(norms_), ns = min_of(norms_);
  IntVector dual_norms(n);
  for (int i = 0; i < n; ++i) dual_norms[i] = nl * ns / norms_[i];
  eta_coweight_ = cartan_.apply(dual_marks_);
  eta_coroot_coeffs_ = top_coroot_coeffs(dual_marks_, dual_norms);
  eta_coroot_weight_ = cartan_.transposed().apply(eta_coroot_coeffs_);

  // Cross-validate the hardcoded tables against values derived from the Cartan matrix.
  check(center_ == expected_center(f, n), "det(C) differs from the center order");
  check(cartan_ * adjugate_ == [&] {
    IntMatrix ci = IntMatrix::identity(n);
    for (int i = 0; i < n; ++i) ci(i, i) = center_;
    return ci;
  }(), "C·adj(C) != c·I");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) check(cartan_(i, j) == 2, "Cartan diagonal");
      else check(cartan_(i, j) <= 0 && cartan_(i, j) >= -2, "Cartan off-diagonal range");
      check(cartan_(i, j) * norms_[j] == cartan_(j, i) * norms_[i], "root norms do not symmetrize C");
    }
  check(derive_marks(cartan_) == marks_, "marks table");
  check(derive_marks(cartan_.transposed()) == dual_marks_, "dual marks table");
  IntVector a = marks_, b = dual_marks_;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  check(a == b, "dual marks are not a permutation of marks");
  check(derive_ext_diagram(cartan_, marks_, norms_) == ext_diagram_, "extended diagram table");
  check(derive_ext_diagram(cartan_.transposed(), dual_marks_, dual_norms) == dual_ext_diagram_,
        "dual extended diagram table");
}

Int RootSystemData::weyl_order() const { return etorus::weyl_order(type_.family, type_.rank); }

RootSystemData build_root_system(SimpleType type) { return RootSystemData(type); }

Int pairing_numerator(const RootSystemData& rsd, std::span<const Int> t, std::span<const Int> s, Int level) {
  if (level < 1) throw std::invalid_argument("pairing: level must be >= 1");
  const Int modulus = checked::mul(rsd.center(), level);
  const IntVector ts = rsd.cartan_adjugate().apply_left(t);
  return mod_floor(dot(ts, s), modulus);
}

RationalPhase pairing_phase(const RootSystemData& rsd, const WeightCoord& t, const PointCoord& x) {
  return RationalPhase::reduced(pairing_numerator(rsd, t.coords, x.coords, x.level), checked::mul(rsd.center(), x.level));
}

}  // namespace etorus
