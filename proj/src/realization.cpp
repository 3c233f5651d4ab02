#include "etorus/realization.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace etorus {

EuclideanRealization::EuclideanRealization(const RootSystemData& rsd) : rank_(rsd.rank()) {
  const int n = rank_;
  const Int long_norm = *std::max_element(rsd.root_norms().begin(), rsd.root_norms().end());
  // ⟨α_i, α_j⟩ = C_ij·|α_j|²/2 with |α_long|² = 2.
  auto gram = [&](int i, int j) {
    return static_cast<double>(rsd.cartan()(i, j)) * static_cast<double>(rsd.root_norms()[j]) / static_cast<double>(long_norm);
  };
  roots_.assign(static_cast<size_t>(n) * n, 0.0);
  auto at = [&](int i, int j) -> double& { return roots_[static_cast<size_t>(i) * n + j]; };
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j <= i; ++j) {
      double s = gram(i, j);
      for (int k = 0; k < j; ++k) s -= at(i, k) * at(j, k);
      if (i == j) {
        if (s <= 0.0) throw InvariantError("Gram matrix of simple roots is not positive definite");
        at(i, i) = std::sqrt(s);
      } else {
        at(i, j) = s / at(j, j);
      }
    }
  }
}

std::vector<double> EuclideanRealization::to_cartesian(std::span<const double> y) const {
  const int n = rank_;
  std::vector<double> x(n, 0.0);
  for (int i = 0; i < n; ++i) {
    double s = y[i];
    for (int k = 0; k < i; ++k) s -= roots_[static_cast<size_t>(i) * n + k] * x[k];
    x[i] = s / roots_[static_cast<size_t>(i) * n + i];
  }
  return x;
}

std::vector<double> EuclideanRealization::from_cartesian(std::span<const double> x) const {
  const int n = rank_;
  std::vector<double> y(n, 0.0);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k <= i; ++k) y[i] += roots_[static_cast<size_t>(i) * n + k] * x[k];
  return y;
}

std::vector<std::vector<double>> fundamental_domain_mesh(const RootSystemData& rsd, int j, int resolution) {
  const int n = rsd.rank();
  if (resolution < 1) throw std::invalid_argument("mesh resolution must be >= 1");
  if (j < 1 || j > n) throw std::invalid_argument("reflection index j must be in 1..rank");
  if (n > 2) throw std::invalid_argument("mesh emission supports rank 1 and 2 only; pass an explicit points file");
  const auto& m = rsd.marks();
  auto reflect = [&](std::vector<double>& y) {
    const double yj = y[j - 1];
    for (int k = 0; k < n; ++k) y[k] -= yj * static_cast<double>(rsd.cartan()(k, j - 1));
  };

  std::vector<std::vector<double>> out;
  if (n == 1) {
    // F = [0, 1/m_1]; r_1 maps it to [-1/m_1, 0].
    for (int k = 0; k < resolution; ++k) {
      const double u = (k + 0.5) / resolution;
      std::vector<double> y{(2.0 * u - 1.0) / static_cast<double>(m[0])};
      out.push_back(std::move(y));
    }
    return out;
  }
  const int first_half = (resolution + 1) / 2;
  for (int a = 0; a < resolution; ++a) {
    const double u = (a + 0.5) / resolution;
    for (int b = 0; b < resolution; ++b) {
      const bool reflected = b >= first_half;
      const int cells = reflected ? resolution - first_half : first_half;
      const double v = ((reflected ? b - first_half : b) + 0.5) / cells;
      // Collapsed square: barycentric (1−u, u(1−v), uv) on the vertices 0, ω^∨_1/m_1, ω^∨_2/m_2.
      std::vector<double> y{u * (1.0 - v) / static_cast<double>(m[0]), u * v / static_cast<double>(m[1])};
      if (reflected) reflect(y);
      out.push_back(std::move(y));
    }
  }
  return out;
}

}  // namespace etorus
