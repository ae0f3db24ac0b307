#pragma once

#include <cmath>
#include <utility>
#include <vector>

#include "isofield/common.hpp"
#include "isofield/legendre.hpp"

namespace isofield {

struct GaussLegendreRule {
  std::vector<double> nodes;    // in (-1, 1), ascending
  std::vector<double> weights;  // positive, sum to 2
};

/// n-point Gauss-Legendre rule on [-1,1], exact for polynomials of degree
/// <= 2n-1. Newton iteration from the Chebyshev-like initial guesses.
inline GaussLegendreRule gauss_legendre_nodes(int n) {
  require(n >= 1, "gauss_legendre_nodes: need n >= 1");
  GaussLegendreRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
    for (int it = 0; it < 100; ++it) {
      const double p = legendre_p(n, x);
      const double pm1 = legendre_p(n - 1, x);
      const double dp = n * (x * p - pm1) / (x * x - 1.0);
      const double dx = p / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    const double pm1 = legendre_p(n - 1, x);
    const double dp = n * (x * legendre_p(n, x) - pm1) / (x * x - 1.0);
    rule.nodes[n - 1 - i] = x;
    rule.weights[n - 1 - i] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  return rule;
}

}  // namespace isofield
