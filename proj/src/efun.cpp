#include "etorus/efun.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

#include "etorus/parallel.hpp"
#include "etorus/summation.hpp"

namespace etorus {

Complex unit_root(Int numerator, Int denominator) {
  if (denominator <= 0) throw std::invalid_argument("unit_root: denominator must be positive");
  Int k = mod_floor(numerator, denominator);
  // Quarter turns are exact; everything else is evaluated on the symmetric range [-1/2, 1/2).
  if ((4 * k) % denominator == 0) {
    switch ((4 * k) / denominator) {
      case 0: return {1.0, 0.0};
      case 1: return {0.0, 1.0};
      case 2: return {-1.0, 0.0};
      default: return {0.0, -1.0};
    }
  }
  if (2 * k >= denominator) k -= denominator;
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(denominator);
  return {std::cos(angle), std::sin(angle)};
}

RootsOfUnity::RootsOfUnity(Int order) {
  if (order <= 0) throw std::invalid_argument("RootsOfUnity: order must be positive");
  table_.resize(static_cast<size_t>(order));
  for (Int k = 0; k < order; ++k) table_[static_cast<size_t>(k)] = unit_root(k, order);
}

std::shared_ptr<const RootsOfUnity> RootsOfUnity::shared(Int order) {
  static std::mutex mutex;
  static std::map<Int, std::weak_ptr<const RootsOfUnity>> cache;
  std::lock_guard lock(mutex);
  if (auto hit = cache[order].lock()) return hit;
  auto table = std::make_shared<const RootsOfUnity>(order);
  cache[order] = table;
  return table;
}

Complex evaluate_E(const RootSystemData& rsd, const std::vector<WeylElement>& even_group, const WeightCoord& lambda,
                   const PointCoord& x) {
  const Int denominator = checked::mul(rsd.center(), x.level);
  CompensatedComplexSum sum;
  for (const auto& w : even_group) {
    const Int k = pairing_numerator(rsd, w.apply_to_weight(lambda.coords), x.coords, x.level);
    sum.add(unit_root(RationalPhase::reduced(k, denominator)));
  }
  return sum.value();
}

Complex evaluate_E_real(const RootSystemData& rsd, const std::vector<WeylElement>& even_group, std::span<const Int> lambda,
                        std::span<const double> y) {
  const int n = rsd.rank();
  const double c = static_cast<double>(rsd.center());
  CompensatedComplexSum sum;
  for (const auto& w : even_group) {
    const IntVector row = rsd.cartan_adjugate().apply_left(w.apply_to_weight(lambda));
    double phase = 0.0;
    for (int i = 0; i < n; ++i) phase += static_cast<double>(row[i]) / c * y[i];
    phase -= std::floor(phase);
    const double angle = 2.0 * std::numbers::pi * phase;
    sum.add({std::cos(angle), std::sin(angle)});
  }
  return sum.value();
}

ETable evaluate_E_table(const RootSystemData& rsd, const std::vector<WeylElement>& even_group,
                        const std::vector<WeightPoint>& weights, const std::vector<GridPoint>& points, unsigned threads,
                        size_t cell_cap) {
  ETable table;
  table.rows = weights.size();
  table.cols = points.size();
  if (table.rows != 0 && table.cols > cell_cap / table.rows)
    throw SizeLimitError("E-table of " + std::to_string(table.rows) + "x" + std::to_string(table.cols) +
                         " exceeds the cell cap " + std::to_string(cell_cap));
  if (points.empty()) return table;
  const Int level = points.front().bary.level;
  const Int modulus = checked::mul(rsd.center(), level);
  const auto roots = RootsOfUnity::shared(modulus);
  table.values.assign(table.rows * table.cols, Complex{});

  parallel_for(table.rows, threads, [&](size_t r) {
    // Row functionals (wλ)ᵀ·adj(C) mod cM, one per group element.
    std::vector<IntVector> functionals;
    functionals.reserve(even_group.size());
    for (const auto& w : even_group) {
      IntVector f = rsd.cartan_adjugate().apply_left(w.apply_to_weight(weights[r].coords));
      for (Int& v : f) v = mod_floor(v, modulus);
      functionals.push_back(std::move(f));
    }
    for (size_t col = 0; col < table.cols; ++col) {
      const IntVector& s = points[col].coords;
      CompensatedComplexSum sum;
      for (const auto& f : functionals) {
        Int k = 0;
        for (size_t i = 0; i < s.size(); ++i) k = mod_floor(k + checked::mul(f[i], mod_floor(s[i], modulus)), modulus);
        sum.add((*roots)[k]);
      }
      table.values[r * table.cols + col] = sum.value();
    }
  });
  return table;
}

}  // namespace etorus
