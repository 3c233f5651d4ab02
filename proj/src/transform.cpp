#include "etorus/transform.hpp"

#include <algorithm>
#include <cmath>

#include "etorus/parallel.hpp"
#include "etorus/summation.hpp"

namespace etorus {

double relative_deviation(double a, double b) {
  const double denom = std::max(std::abs(a), std::abs(b));
  return denom == 0.0 ? 0.0 : std::abs(a - b) / denom;
}

DiscreteETransform::DiscreteETransform(SimpleType type, Int level, int j, TransformOptions options)
    : id_{SimpleType::make(type.family, type.rank), level, j}, options_(options), rsd_(id_.type) {
  if (level < 1) throw std::invalid_argument("grid level M must be >= 1");
  if (j < 1 || j > rsd_.rank()) throw std::invalid_argument("reflection index j must be in 1..rank");
  options_.threads = resolve_threads(options_.threads);
  even_group_ = even_subgroup(enumerate_weyl(rsd_, options_.group_cap));
  points_ = enumerate_Fe_M(rsd_, level, j);
  weights_ = enumerate_Lambda_e_M(rsd_, level, j);
  if (points_.size() != weights_.size()) throw InvariantError("|F^e_M| != |Lambda^e_M|");
  table_ = evaluate_E_table(rsd_, even_group_, weights_, points_, options_.threads, options_.cell_cap);
  scale_ = static_cast<double>(rsd_.center()) * static_cast<double>(even_group_.size()) *
           std::pow(static_cast<double>(level), rsd_.rank());
}

void DiscreteETransform::require_grid(const GridId& other) const {
  if (!(other == id_))
    throw GridMismatchError("vector belongs to " + other.type.name() + " M=" + std::to_string(other.level) +
                            " j=" + std::to_string(other.j) + ", transform is " + id_.type.name() +
                            " M=" + std::to_string(id_.level) + " j=" + std::to_string(id_.j));
}

SampleVector DiscreteETransform::make_samples(std::vector<Complex> values) const {
  if (values.size() != points_.size()) throw GridMismatchError("sample vector length differs from |F^e_M|");
  return {id_, std::move(values)};
}

CoefficientVector DiscreteETransform::make_coefficients(std::vector<Complex> values) const {
  if (values.size() != weights_.size()) throw GridMismatchError("coefficient vector length differs from |Lambda^e_M|");
  return {id_, std::move(values)};
}

SampleVector DiscreteETransform::sample_E(size_t index) const {
  std::vector<Complex> v(table_.cols);
  for (size_t c = 0; c < table_.cols; ++c) v[c] = table_(index, c);
  return {id_, std::move(v)};
}

Complex DiscreteETransform::scalar_product(const SampleVector& f, const SampleVector& g) const {
  require_grid(f.grid);
  require_grid(g.grid);
  if (f.values.size() != points_.size() || g.values.size() != points_.size())
    throw GridMismatchError("sample vector length differs from |F^e_M|");
  CompensatedComplexSum sum;
  for (size_t k = 0; k < points_.size(); ++k)
    sum.add(static_cast<double>(points_[k].eps) * f.values[k] * std::conj(g.values[k]));
  return sum.value();
}

CoefficientVector DiscreteETransform::forward(const SampleVector& f) const {
  require_grid(f.grid);
  if (f.values.size() != points_.size()) throw GridMismatchError("sample vector length differs from |F^e_M|");
  std::vector<Complex> weighted(points_.size());
  for (size_t k = 0; k < points_.size(); ++k) weighted[k] = static_cast<double>(points_[k].eps) * f.values[k];
  std::vector<Complex> coeffs(weights_.size());
  parallel_for(weights_.size(), options_.threads, [&](size_t r) {
    CompensatedComplexSum sum;
    for (size_t c = 0; c < points_.size(); ++c) sum.add(weighted[c] * std::conj(table_(r, c)));
    coeffs[r] = sum.value() / norm_squared(r);
  });
  return {id_, std::move(coeffs)};
}

SampleVector DiscreteETransform::inverse(const CoefficientVector& cv) const {
  require_grid(cv.grid);
  if (cv.values.size() != weights_.size()) throw GridMismatchError("coefficient vector length differs from |Lambda^e_M|");
  std::vector<Complex> values(points_.size());
  parallel_for(points_.size(), options_.threads, [&](size_t c) {
    CompensatedComplexSum sum;
    for (size_t r = 0; r < weights_.size(); ++r) sum.add(cv.values[r] * table_(r, c));
    values[c] = sum.value();
  });
  return {id_, std::move(values)};
}

Complex DiscreteETransform::interpolate(const CoefficientVector& cv, const PointCoord& x) const {
  require_grid(cv.grid);
  CompensatedComplexSum sum;
  for (size_t r = 0; r < weights_.size(); ++r)
    if (cv.values[r] != Complex{}) sum.add(cv.values[r] * evaluate_E(rsd_, even_group_, {weights_[r].coords}, x));
  return sum.value();
}

Complex DiscreteETransform::interpolate(const CoefficientVector& cv, std::span<const double> y) const {
  require_grid(cv.grid);
  if (static_cast<int>(y.size()) != rsd_.rank()) throw std::invalid_argument("point dimension differs from the rank");
  CompensatedComplexSum sum;
  for (size_t r = 0; r < weights_.size(); ++r)
    if (cv.values[r] != Complex{}) sum.add(cv.values[r] * evaluate_E_real(rsd_, even_group_, weights_[r].coords, y));
  return sum.value();
}

GramReport DiscreteETransform::gram_matrix() const {
  GramReport report;
  const size_t n = weights_.size();
  report.size = n;
  report.matrix.assign(n * n, Complex{});
  parallel_for(n, options_.threads, [&](size_t r) {
    for (size_t r2 = 0; r2 < n; ++r2) {
      CompensatedComplexSum sum;
      for (size_t c = 0; c < points_.size(); ++c)
        sum.add(static_cast<double>(points_[c].eps) * table_(r, c) * std::conj(table_(r2, c)));
      report.matrix[r * n + r2] = sum.value();
    }
  });
  for (size_t r = 0; r < n; ++r)
    for (size_t r2 = 0; r2 < n; ++r2) {
      const Complex g = report(r, r2);
      if (r == r2) {
        const double expected = norm_squared(r);
        report.max_diag_reldev = std::max(report.max_diag_reldev, std::abs(g - expected) / expected);
      } else {
        report.max_offdiag_abs = std::max(report.max_offdiag_abs, std::abs(g));
      }
    }
  return report;
}

PlancherelReport DiscreteETransform::plancherel_check(const SampleVector& f) const {
  return plancherel_check(f, forward(f));
}

PlancherelReport DiscreteETransform::plancherel_check(const SampleVector& f, const CoefficientVector& cv) const {
  require_grid(f.grid);
  require_grid(cv.grid);
  CompensatedSum lhs, rhs;
  for (size_t k = 0; k < points_.size(); ++k) lhs.add(static_cast<double>(points_[k].eps) * std::norm(f.values[k]));
  for (size_t r = 0; r < weights_.size(); ++r) rhs.add(static_cast<double>(weights_[r].h_dual) * std::norm(cv.values[r]));
  PlancherelReport report{lhs.value(), scale_ * rhs.value(), 0.0};
  report.reldev = relative_deviation(report.lhs, report.rhs);
  return report;
}

Complex DiscreteETransform::full_torus_product(size_t lambda, size_t lambda_prime) const {
  const auto torus = torus_points(rsd_, id_.level);
  CompensatedComplexSum sum;
  for (const auto& y : torus) {
    const PointCoord x{y, id_.level};
    sum.add(evaluate_E(rsd_, even_group_, {weights_[lambda].coords}, x) *
            std::conj(evaluate_E(rsd_, even_group_, {weights_[lambda_prime].coords}, x)));
  }
  return sum.value();
}

Complex abelian_orthogonality_oracle(const RootSystemData& rsd, Int level, const WeightCoord& lambda,
                                     const WeightCoord& lambda_prime, Int cap) {
  if (lambda.coords.size() != lambda_prime.coords.size() || static_cast<int>(lambda.coords.size()) != rsd.rank())
    throw std::invalid_argument("weight dimension differs from the rank");
  IntVector diff(lambda.coords.size());
  for (size_t i = 0; i < diff.size(); ++i) diff[i] = checked::sub(lambda.coords[i], lambda_prime.coords[i]);
  const Int modulus = checked::mul(rsd.center(), level);
  CompensatedComplexSum sum;
  for (const auto& y : torus_points(rsd, level, cap)) sum.add(unit_root(pairing_numerator(rsd, diff, y, level), modulus));
  return sum.value();
}

}  // namespace etorus
