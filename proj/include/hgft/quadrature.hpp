#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace hgft {

template <typename Scalar>
struct QuadratureRule {
  std::vector<Scalar> nodes;
  std::vector<Scalar> weights;
};

/// Gauss-Legendre rule on [a, b] with nodes in ascending order. Roots are
/// found by Newton iteration on the three-term recurrence.
template <typename Scalar>
QuadratureRule<Scalar> gauss_legendre(std::size_t n, Scalar a = Scalar(-1), Scalar b = Scalar(1)) {
  if (n == 0) throw std::invalid_argument("gauss_legendre: n must be positive");
  QuadratureRule<Scalar> rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const Scalar half = (b - a) / 2;
  const Scalar mid = (b + a) / 2;
  const std::size_t m = (n + 1) / 2;
  for (std::size_t i = 0; i < m; ++i) {
    Scalar x = std::cos(std::numbers::pi_v<Scalar> * (static_cast<Scalar>(i) + Scalar(0.75)) /
                        (static_cast<Scalar>(n) + Scalar(0.5)));
    Scalar dp = 0;
    for (int iter = 0; iter < 100; ++iter) {
      Scalar p0 = 1;
      Scalar p1 = x;
      for (std::size_t k = 2; k <= n; ++k) {
        const Scalar p2 = ((2 * static_cast<Scalar>(k) - 1) * x * p1 - (static_cast<Scalar>(k) - 1) * p0) /
                          static_cast<Scalar>(k);
        p0 = p1;
        p1 = p2;
      }
      if (n == 1) {
        p1 = x;
        p0 = 1;
      }
      dp = static_cast<Scalar>(n) * (x * p1 - p0) / (x * x - 1);
      const Scalar dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) <= 4 * std::numeric_limits<Scalar>::epsilon()) break;
    }
    // Recompute the derivative at the converged root.
    {
      Scalar p0 = 1;
      Scalar p1 = x;
      for (std::size_t k = 2; k <= n; ++k) {
        const Scalar p2 = ((2 * static_cast<Scalar>(k) - 1) * x * p1 - (static_cast<Scalar>(k) - 1) * p0) /
                          static_cast<Scalar>(k);
        p0 = p1;
        p1 = p2;
      }
      dp = (n == 1) ? Scalar(1) : static_cast<Scalar>(n) * (x * p1 - p0) / (x * x - 1);
    }
    const Scalar w = 2 / ((1 - x * x) * dp * dp);
    // x is the i-th largest root; store ascending.
    rule.nodes[n - 1 - i] = mid + half * x;
    rule.nodes[i] = mid - half * x;
    rule.weights[n - 1 - i] = half * w;
    rule.weights[i] = half * w;
  }
  return rule;
}

}  // namespace hgft
