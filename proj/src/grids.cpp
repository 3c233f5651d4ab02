#include "etorus/grids.hpp"

#include <algorithm>
#include <functional>

namespace etorus {

namespace {

void solutions_rec(const IntVector& marks, size_t i, Int remaining, Int min_value, IntVector& current,
                   std::vector<IntVector>& out) {
  const size_t n = marks.size();
  if (i + 1 == n) {
    if (remaining % marks[i] != 0) return;
    const Int last = remaining / marks[i];
    if (last < min_value) return;
    current[i + 1] = last;
    out.push_back(current);
    return;
  }
  for (Int v = min_value; v * marks[i] <= remaining; ++v) {
    current[i + 1] = v;
    solutions_rec(marks, i + 1, remaining - v * marks[i], min_value, current, out);
  }
}

const IntVector& marks_for(const RootSystemData& rsd, Lattice side) {
  return side == Lattice::point ? rsd.marks() : rsd.dual_marks();
}

void validate(const BarycentricPoint& b, const RootSystemData& rsd, Lattice side) {
  const int n = rsd.rank();
  if (static_cast<int>(b.sygma.size()) != n + 1) throw InvariantError("barycentric vector has length != rank+1");
  const Int lo = b.side == Side::in_F ? 0 : 1;
  if (std::any_of(b.sygma.begin(), b.sygma.end(), [&](Int v) { return v < lo; }))
    throw InvariantError("barycentric coordinates out of range");
  const IntVector& m = marks_for(rsd, side);
  Int total = b.sygma[0];
  for (int i = 0; i < n; ++i) total += b.sygma[i + 1] * m[i];
  if (total != b.level) throw InvariantError("barycentric level identity violated");
}

// Order of the Weyl group of one connected component of a subdiagram.
Int component_order(const ExtendedDiagram& diagram, const std::vector<int>& nodes, const std::vector<char>& member) {
  const Int k = static_cast<Int>(nodes.size());
  bool double_edge = false;
  bool branch = false;
  Int edges = 0;
  for (int v : nodes) {
    int degree = 0;
    for (const auto& nb : diagram.adjacency[v]) {
      if (!member[nb.node]) continue;
      ++degree;
      if (nb.multiplicity == 2) double_edge = true;
      else if (nb.multiplicity != 1) throw InvariantError("subdiagram contains an unsupported bond");
    }
    if (degree > 3) throw InvariantError("subdiagram node of degree > 3");
    if (degree == 3) branch = true;
    edges += degree;
  }
  edges /= 2;
  if (edges != k - 1) throw InvariantError("subdiagram component is not a tree");
  if (double_edge && branch) throw InvariantError("subdiagram component is not of classical finite type");
  if (double_edge) return weyl_order(Family::B, static_cast<int>(k));
  if (branch) return weyl_order(Family::D, static_cast<int>(k));
  return weyl_order(Family::A, static_cast<int>(k));
}

}  // namespace

std::vector<IntVector> barycentric_solutions(const IntVector& marks, Int level, Int min_value) {
  std::vector<IntVector> out;
  IntVector current(marks.size() + 1, 0);
  for (Int s0 = min_value; s0 <= level; ++s0) {
    current[0] = s0;
    solutions_rec(marks, 0, level - s0, min_value, current, out);
  }
  return out;
}

Int count_F_M(const IntVector& marks, Int level) {
  if (level < 0) return 0;
  // ways[v]: number of (s_1..s_n) with Σ m_i s_i = v; s_0 absorbs the rest.
  std::vector<Int> ways(static_cast<size_t>(level) + 1, 0);
  ways[0] = 1;
  for (Int m : marks)
    for (Int v = m; v <= level; ++v) ways[v] = checked::add(ways[v], ways[v - m]);
  Int total = 0;
  for (Int w : ways) total = checked::add(total, w);
  return total;
}

Int binomial(Int a, Int b) {
  if (b < 0 || a < b) return 0;
  b = std::min(b, a - b);
  Int r = 1;
  for (Int i = 1; i <= b; ++i) r = checked::mul(r, a - b + i) / i;
  return r;
}

Int count_formula(SimpleType type, Int level) {
  type = SimpleType::make(type.family, type.rank);
  if (level < 1) throw std::invalid_argument("count_formula: M must be >= 1");
  const Int n = type.rank;
  const Int M = level;
  const Int k = M / 2;
  const bool even = M % 2 == 0;
  switch (type.family) {
    case Family::A: return binomial(n + M, n) + binomial(M - 1, n);
    case Family::B:
    case Family::C:
      if (even) return binomial(n + k, n) + binomial(n + k - 1, n) + binomial(k, n) + binomial(k - 1, n);
      return 2 * binomial(n + k, n) + 2 * binomial(k, n);
    case Family::D:
      if (even)
        return binomial(n + k, n) + 6 * binomial(n + k - 1, n) + binomial(n + k - 2, n) + binomial(k + 1, n) +
               6 * binomial(k, n) + binomial(k - 1, n);
      return 4 * (binomial(n + k, n) + binomial(n + k - 1, n) + binomial(k + 1, n) + binomial(k, n));
  }
  return 0;
}

Int stabilizer_order_diagram(const BarycentricPoint& bary, const RootSystemData& rsd, Lattice side) {
  validate(bary, rsd, side);
  if (bary.side == Side::in_rjF) return 1;
  const ExtendedDiagram& diagram = side == Lattice::point ? rsd.ext_diagram() : rsd.dual_ext_diagram();
  const int nodes = diagram.node_count();
  std::vector<char> member(nodes, 0);
  bool any = false;
  for (int i = 0; i < nodes; ++i)
    if (bary.sygma[i] == 0) member[i] = any = true;
  if (!any) return 1;

  std::vector<char> visited(nodes, 0);
  Int product = 1;
  for (int start = 0; start < nodes; ++start) {
    if (!member[start] || visited[start]) continue;
    std::vector<int> component{start};
    visited[start] = 1;
    for (size_t k = 0; k < component.size(); ++k)
      for (const auto& nb : diagram.adjacency[component[k]])
        if (member[nb.node] && !visited[nb.node]) {
          visited[nb.node] = 1;
          component.push_back(nb.node);
        }
    product = checked::mul(product, component_order(diagram, component, member));
  }
  if (product % 2 != 0) throw InvariantError("odd stabilizer product");
  return product / 2;
}

Int stabilizer_order_brute(const BarycentricPoint& bary, const std::vector<WeylElement>& even_group,
                           const RootSystemData& rsd, Lattice side) {
  validate(bary, rsd, side);
  const bool points = side == Lattice::point;
  const IntVector x = points ? point_coordinates(rsd, bary) : weight_coordinates(rsd, bary);
  Int count = 0;
  IntVector diff(x.size());
  for (const auto& w : even_group) {
    const IntVector wx = points ? w.apply_to_point(x) : w.apply_to_weight(x);
    for (size_t k = 0; k < x.size(); ++k) diff[k] = wx[k] - x[k];
    const bool fixed = points ? in_scaled_coroot_lattice(rsd, diff, bary.level) : in_scaled_root_lattice(rsd, diff, bary.level);
    if (fixed) ++count;
  }
  return count;
}

std::vector<GridPoint> enumerate_Fe_M(const RootSystemData& rsd, Int level, int j) {
  if (level < 1) throw std::invalid_argument("grid level M must be >= 1");
  if (j < 1 || j > rsd.rank()) throw std::invalid_argument("reflection index j must be in 1..rank");
  const Int even_order = rsd.weyl_order() / 2;
  std::vector<GridPoint> out;
  for (const Side side : {Side::in_F, Side::in_rjF})
    for (auto& s : barycentric_solutions(rsd.marks(), level, side == Side::in_F ? 0 : 1)) {
      GridPoint p;
      p.bary = {std::move(s), level, side, j};
      p.coords = point_coordinates(rsd, p.bary);
      p.eps = even_order / stabilizer_order_diagram(p.bary, rsd, Lattice::point);
      p.index = out.size();
      out.push_back(std::move(p));
    }
  return out;
}

std::vector<WeightPoint> enumerate_Lambda_e_M(const RootSystemData& rsd, Int level, int j) {
  if (level < 1) throw std::invalid_argument("grid level M must be >= 1");
  if (j < 1 || j > rsd.rank()) throw std::invalid_argument("reflection index j must be in 1..rank");
  std::vector<WeightPoint> out;
  for (const Side side : {Side::in_F, Side::in_rjF})
    for (auto& t : barycentric_solutions(rsd.dual_marks(), level, side == Side::in_F ? 0 : 1)) {
      WeightPoint p;
      p.bary = {std::move(t), level, side, j};
      p.coords = weight_coordinates(rsd, p.bary);
      p.h_dual = stabilizer_order_diagram(p.bary, rsd, Lattice::weight);
      p.index = out.size();
      out.push_back(std::move(p));
    }
  return out;
}

IntMatrix column_hermite_form(const IntMatrix& basis) {
  const int n = basis.rows();
  if (basis.cols() != n) throw std::invalid_argument("Hermite form needs a square basis");
  IntMatrix h = basis;
  auto col_axpy = [&](int dst, int src, Int factor) {  // col_dst -= factor·col_src
    for (int r = 0; r < n; ++r) h(r, dst) = checked::sub(h(r, dst), checked::mul(factor, h(r, src)));
  };
  auto col_swap = [&](int a, int b) {
    for (int r = 0; r < n; ++r) std::swap(h(r, a), h(r, b));
  };
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j)
      while (h(i, j) != 0) {
        col_axpy(i, j, h(i, i) / h(i, j));
        col_swap(i, j);
      }
    if (h(i, i) == 0) throw InvariantError("lattice basis is singular");
    if (h(i, i) < 0)
      for (int r = 0; r < n; ++r) h(r, i) = -h(r, i);
  }
  return h;
}

std::vector<IntVector> coset_representatives(const IntMatrix& basis, Int cap) {
  const IntMatrix h = column_hermite_form(basis);
  const int n = h.rows();
  Int total = 1;
  for (int i = 0; i < n; ++i) total = checked::mul(total, h(i, i));
  if (total > cap) throw SizeLimitError("coset enumeration needs " + std::to_string(total) + " representatives; cap is " +
                                        std::to_string(cap));
  std::vector<IntVector> out;
  out.reserve(static_cast<size_t>(total));
  IntVector v(n, 0);
  // Odometer over the box 0 ≤ v_i < H_ii, last coordinate fastest.
  while (true) {
    out.push_back(v);
    int i = n - 1;
    while (i >= 0 && ++v[i] == h(i, i)) v[i--] = 0;
    if (i < 0) break;
  }
  return out;
}

std::vector<IntVector> torus_points(const RootSystemData& rsd, Int level, Int cap) {
  // columns: α^∨_i in ω^∨-coordinates
  return coset_representatives(rsd.cartan().scaled(level), cap);
}

std::vector<IntVector> torus_weights(const RootSystemData& rsd, Int level, Int cap) {
  // columns: α_i in ω-coordinates
  return coset_representatives(rsd.cartan().transposed().scaled(level), cap);
}

}  // namespace etorus
