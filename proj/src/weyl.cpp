#include "etorus/weyl.hpp"

#include <algorithm>
#include <unordered_set>

namespace etorus {

namespace {

struct MatrixHash {
  size_t operator()(const IntVector& v) const noexcept {
    size_t h = 1469598103934665603ull;
    for (Int x : v) h = (h ^ static_cast<size_t>(x + 0x9e3779b9)) * 1099511628211ull;
    return h;
  }
};

// x ↦ x − ⟨x, root⟩·coroot as a matrix: I − coroot·functionalᵀ.
IntMatrix rank_one_reflection(const IntVector& coroot, const IntVector& functional) {
  const int n = static_cast<int>(coroot.size());
  IntMatrix m = IntMatrix::identity(n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) m(r, c) -= coroot[r] * functional[c];
  return m;
}

IntVector unit(int n, int i) {
  IntVector e(n, 0);
  e[i] = 1;
  return e;
}

// One side of the affine folding: the coordinate walls x_i ≥ 0, the top wall
// Σ μ_i x_i ≤ M, and the generators acting on the relevant coordinates.
struct AffineSide {
  const RootSystemData& rsd;
  bool points;  // false: weights

  const IntVector& marks() const { return points ? rsd.marks() : rsd.dual_marks(); }
  // Translation of r_0 (resp. r_0^∨), unscaled.
  const IntVector& top_translation() const {
    return points ? rsd.highest_coroot_coweight() : rsd.dual_highest_coroot_weight();
  }
  WeylElement top_reflection() const {
    return points ? highest_root_reflection(rsd) : dual_highest_root_reflection(rsd);
  }
  const IntMatrix& action(const WeylElement& w) const { return points ? w.point_matrix() : w.weight_matrix(); }

  // Simple reflection r_i (1-based) applied in place.
  void reflect(IntVector& x, int i) const {
    const Int xi = x[i - 1];
    const int n = rsd.rank();
    for (int k = 0; k < n; ++k) {
      const Int entry = points ? rsd.cartan()(k, i - 1) : rsd.cartan()(i - 1, k);
      x[k] = checked::sub(x[k], checked::mul(xi, entry));
    }
  }

  void reflect_top(IntVector& x, Int level) const {
    const Int height = dot(marks(), x);
    const IntVector& tau = top_translation();
    for (size_t k = 0; k < x.size(); ++k) x[k] = checked::add(x[k], checked::mul(level - height, tau[k]));
  }

  BarycentricPoint barycentric(const IntVector& x, Int level) const {
    BarycentricPoint b;
    b.level = level;
    b.sygma.reserve(x.size() + 1);
    b.sygma.push_back(level - dot(marks(), x));
    b.sygma.insert(b.sygma.end(), x.begin(), x.end());
    return b;
  }

  IntVector coordinates(const BarycentricPoint& b) const {
    const int n = rsd.rank();
    if (static_cast<int>(b.sygma.size()) != n + 1) throw InvariantError("barycentric vector has wrong length");
    IntVector x(b.sygma.begin() + 1, b.sygma.end());
    if (b.side == Side::in_rjF) {
      if (b.j < 1 || b.j > n) throw InvariantError("reflection index out of range");
      reflect(x, b.j);
    }
    return x;
  }

  FoldResult fold(IntVector x, Int level) const {
    if (level < 1) throw std::invalid_argument("fold: level must be >= 1");
    const int n = rsd.rank();
    WeylElement w = WeylElement::identity(n);
    IntVector q(n, 0);
    // Invariant: original = w·x + level·q.
    for (long iter = 0;; ++iter) {
      if (iter > 10'000'000) throw InvariantError("affine folding did not terminate");
      int violated = -1;
      for (int i = 1; i <= n; ++i)
        if (x[i - 1] < 0) {
          violated = i;
          break;
        }
      if (violated > 0) {
        reflect(x, violated);
        w = w * simple_reflection(rsd, violated);
        continue;
      }
      if (dot(marks(), x) > level) {
        const IntVector shift = action(w).apply(top_translation());
        for (int k = 0; k < n; ++k) q[k] = checked::add(q[k], shift[k]);
        reflect_top(x, level);
        w = w * top_reflection();
        continue;
      }
      break;
    }
    return {barycentric(x, level), std::move(w), std::move(q)};
  }

  FoldResult fold_even(IntVector x, Int level, int j) const {
    const int n = rsd.rank();
    if (j < 1 || j > n) throw std::invalid_argument("fold: reflection index j must be in 1..rank");
    FoldResult r = fold(std::move(x), level);
    r.point.j = j;
    if (r.w.parity() == 1) return r;
    const auto& s = r.point.sygma;
    const auto zero = std::find(s.begin(), s.end(), Int{0});
    if (zero == s.end()) {
      r.w = r.w * simple_reflection(rsd, j);
      r.point.side = Side::in_rjF;
      return r;
    }
    const int i = static_cast<int>(zero - s.begin());
    if (i > 0) {
      r.w = r.w * simple_reflection(rsd, i);
    } else {
      const IntVector shift = action(r.w).apply(top_translation());
      for (int k = 0; k < n; ++k) r.q[k] = checked::add(r.q[k], shift[k]);
      r.w = r.w * top_reflection();
    }
    return r;
  }
};

}  // namespace

WeylElement WeylElement::identity(int rank) { return {IntMatrix::identity(rank), IntMatrix::identity(rank), 1}; }

WeylElement simple_reflection(const RootSystemData& rsd, int i) {
  const int n = rsd.rank();
  if (i < 1 || i > n) throw std::invalid_argument("simple reflection index out of range");
  const IntMatrix& c = rsd.cartan();
  // Weights: t ↦ t − t_i·(row i of C). Points: s ↦ s − s_i·(column i of C).
  IntVector row(c.row(i - 1).begin(), c.row(i - 1).end());
  return {rank_one_reflection(row, unit(n, i - 1)), rank_one_reflection(c.column(i - 1), unit(n, i - 1)), -1};
}

WeylElement highest_root_reflection(const RootSystemData& rsd) {
  return {rank_one_reflection(rsd.highest_root_weight(), rsd.highest_coroot_coeffs()),
          rank_one_reflection(rsd.highest_coroot_coweight(), rsd.marks()), -1};
}

WeylElement dual_highest_root_reflection(const RootSystemData& rsd) {
  return {rank_one_reflection(rsd.dual_highest_coroot_weight(), rsd.dual_marks()),
          rank_one_reflection(rsd.dual_highest_root_coweight(), rsd.dual_highest_coroot_coeffs()), -1};
}

std::vector<WeylElement> enumerate_weyl(const RootSystemData& rsd, Int cap) {
  const Int order = rsd.weyl_order();
  if (order > cap)
    throw SizeLimitError("Weyl group of " + rsd.type().name() + " has " + std::to_string(order) +
                         " elements; raise the group cap to at least " + std::to_string(order));
  const int n = rsd.rank();
  std::vector<WeylElement> generators;
  for (int i = 1; i <= n; ++i) generators.push_back(simple_reflection(rsd, i));

  std::vector<WeylElement> out{WeylElement::identity(n)};
  std::unordered_set<IntVector, MatrixHash> seen{out.front().weight_matrix().data()};
  size_t layer_begin = 0;
  while (layer_begin < out.size()) {
    const size_t layer_end = out.size();
    std::vector<WeylElement> next;
    for (size_t k = layer_begin; k < layer_end; ++k)
      for (const auto& g : generators) {
        WeylElement h = out[k] * g;
        if (seen.insert(h.weight_matrix().data()).second) next.push_back(std::move(h));
      }
    std::sort(next.begin(), next.end(),
              [](const WeylElement& a, const WeylElement& b) { return a.weight_matrix() < b.weight_matrix(); });
    for (auto& h : next) out.push_back(std::move(h));
    layer_begin = layer_end;
  }
  if (static_cast<Int>(out.size()) != order) throw InvariantError("Weyl group closure has unexpected order");
  return out;
}

std::vector<WeylElement> even_subgroup(const std::vector<WeylElement>& elements) {
  std::vector<WeylElement> out;
  std::copy_if(elements.begin(), elements.end(), std::back_inserter(out), [](const WeylElement& w) { return w.parity() == 1; });
  return out;
}

WeightCoord apply_to_weight(const WeylElement& w, const WeightCoord& t) { return {w.apply_to_weight(t.coords)}; }

PointCoord apply_to_point(const WeylElement& w, const PointCoord& x) { return {w.apply_to_point(x.coords), x.level}; }

BarycentricPoint point_barycentric(const RootSystemData& rsd, const PointCoord& x) {
  return AffineSide{rsd, true}.barycentric(x.coords, x.level);
}

BarycentricPoint weight_barycentric(const RootSystemData& rsd, const WeightCoord& t, Int level) {
  return AffineSide{rsd, false}.barycentric(t.coords, level);
}

IntVector point_coordinates(const RootSystemData& rsd, const BarycentricPoint& b) {
  return AffineSide{rsd, true}.coordinates(b);
}

IntVector weight_coordinates(const RootSystemData& rsd, const BarycentricPoint& b) {
  return AffineSide{rsd, false}.coordinates(b);
}

FoldResult fold_to_F(const RootSystemData& rsd, const PointCoord& x) { return AffineSide{rsd, true}.fold(x.coords, x.level); }

FoldResult fold_to_Fe(const RootSystemData& rsd, const PointCoord& x, int j) {
  return AffineSide{rsd, true}.fold_even(x.coords, x.level, j);
}

FoldResult fold_weight_to_F_dual(const RootSystemData& rsd, const WeightCoord& t, Int level) {
  return AffineSide{rsd, false}.fold(t.coords, level);
}

FoldResult fold_weight_to_Lambda_e(const RootSystemData& rsd, const WeightCoord& t, Int level, int j) {
  return AffineSide{rsd, false}.fold_even(t.coords, level, j);
}

bool in_scaled_coroot_lattice(const RootSystemData& rsd, std::span<const Int> d, Int level) {
  const Int modulus = checked::mul(rsd.center(), level);
  const IntVector r = rsd.cartan_adjugate().apply(d);
  return std::all_of(r.begin(), r.end(), [&](Int v) { return v % modulus == 0; });
}

bool in_scaled_root_lattice(const RootSystemData& rsd, std::span<const Int> v, Int level) {
  const Int modulus = checked::mul(rsd.center(), level);
  const IntVector r = rsd.cartan_adjugate().apply_left(v);
  return std::all_of(r.begin(), r.end(), [&](Int x) { return x % modulus == 0; });
}

}  // namespace etorus
