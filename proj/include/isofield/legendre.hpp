#pragma once

#include <cmath>
#include <vector>

#include "isofield/common.hpp"

namespace isofield {

/// Legendre polynomial P_l(x) by the three-term recurrence.
inline double legendre_p(int l, double x) {
  require(l >= 0, "legendre_p: negative degree");
  if (l == 0) return 1.0;
  double pm1 = 1.0, p = x;
  for (int k = 1; k < l; ++k) {
    const double pp1 = ((2 * k + 1) * x * p - k * pm1) / (k + 1);
    pm1 = p;
    p = pp1;
  }
  return p;
}

/// Associated Legendre function P_l^m(x) with the Condon-Shortley phase,
/// by upward recursion in l from the diagonal seed.
inline double assoc_legendre(int l, int m, double x) {
  require(l >= 0 && m >= 0 && m <= l, "assoc_legendre: need 0 <= m <= l");
  require(std::abs(x) <= 1.0, "assoc_legendre: |x| > 1");

  // P_m^m = (-1)^m (2m-1)!! (1-x^2)^{m/2}
  double pmm = 1.0;
  if (m > 0) {
    const double s = std::sqrt((1.0 - x) * (1.0 + x));
    double fact = 1.0;
    for (int i = 1; i <= m; ++i) {
      pmm *= -fact * s;
      fact += 2.0;
    }
  }
  if (l == m) return pmm;

  double pm1 = pmm;                      // P_m^m
  double p = x * (2 * m + 1) * pmm;      // P_{m+1}^m
  for (int ll = m + 2; ll <= l; ++ll) {
    const double pp1 = ((2 * ll - 1) * x * p - (ll + m - 1) * pm1) / (ll - m);
    pm1 = p;
    p = pp1;
  }
  return p;
}

/// Table of fully normalized associated Legendre values
///   N_{lm}(x) = sqrt((2l+1) (l-m)!/(l+m)!) P_l^m(x),   0 <= m <= l <= lmax,
/// normalized so that (1/2) int_-1^1 N_{lm}^2 dx = 1. These are the colatitude
/// parts of the harmonics orthonormal under the probability measure.
class NormalizedLegendreTable {
 public:
  NormalizedLegendreTable(int lmax, double x) : lmax_(lmax) {
    require(lmax >= 0, "NormalizedLegendreTable: negative lmax");
    require(std::abs(x) <= 1.0, "NormalizedLegendreTable: |x| > 1");
    values_.assign(static_cast<std::size_t>(lmax + 1) * (lmax + 2) / 2, 0.0);
    const double s = std::sqrt((1.0 - x) * (1.0 + x));

    // Diagonal: N_{mm}, then N_{m+1,m}, then upward in l.
    double diag = 1.0;  // N_00
    for (int m = 0; m <= lmax; ++m) {
      if (m > 0) diag *= -s * std::sqrt((2.0 * m + 1.0) / (2.0 * m));
      at(m, m) = diag;
      if (m + 1 <= lmax) at(m + 1, m) = x * std::sqrt(2.0 * m + 3.0) * diag;
      double prev_a = std::sqrt(2.0 * m + 3.0);
      for (int l = m + 2; l <= lmax; ++l) {
        const double a =
            std::sqrt((4.0 * l * l - 1.0) / (static_cast<double>(l) * l - static_cast<double>(m) * m));
        at(l, m) = a * (x * at(l - 1, m) - at(l - 2, m) / prev_a);
        prev_a = a;
      }
    }
  }

  double operator()(int l, int m) const { return values_[index(l, m)]; }
  int lmax() const { return lmax_; }

 private:
  double& at(int l, int m) { return values_[index(l, m)]; }
  std::size_t index(int l, int m) const {
    return static_cast<std::size_t>(l) * (l + 1) / 2 + m;
  }
  int lmax_;
  std::vector<double> values_;
};

}  // namespace isofield
