#pragma once

#include <cmath>

#include "isofield/common.hpp"
#include "isofield/legendre.hpp"

namespace isofield {

/// Index (l, m) into the degree-l harmonic block, -l <= m <= l.
struct SphericalIndex {
  int degree = 0;
  int order = 0;

  SphericalIndex(int l, int m) : degree(l), order(m) {
    require(l >= 0 && std::abs(m) <= l, "SphericalIndex: need |m| <= l, l >= 0");
  }
};

/// Spherical harmonic Y_{lm}(theta, phi) orthonormal under the probability
/// measure on the sphere (total mass 1): sqrt(4*pi) times the conventional
/// harmonic, so Y_00 = 1 and sum_m |Y_{lm}|^2 = 2l+1.
inline cplx spherical_harmonic(const SphericalIndex& idx, double colatitude,
                               double longitude) {
  const int l = idx.degree, m = idx.order, am = std::abs(m);
  const NormalizedLegendreTable table(l, std::cos(colatitude));
  const double np = table(l, am);
  if (m >= 0) return np * std::polar(1.0, m * longitude);
  // Y_{l,-|m|} = (-1)^m conj(Y_{l,|m|})
  return parity_sign(am) * np * std::polar(1.0, m * longitude);
}

/// Conjugation-compatible basis element: phi_{lm} = Y_{lm} for m >= 0 and
/// (-1)^m Y_{lm} for m < 0, so that conj(phi_{lm}) = phi_{l,-m} pointwise.
inline cplx conj_compatible_phi(const SphericalIndex& idx, double colatitude,
                                double longitude) {
  const cplx y = spherical_harmonic(idx, colatitude, longitude);
  return idx.order >= 0 ? y : parity_sign(idx.order) * y;
}

}  // namespace isofield
