#pragma once

#include <array>
#include <cmath>
#include <complex>

#include "isofield/common.hpp"
#include "isofield/rng.hpp"

namespace isofield {

/// Wraps t into [0, period).
inline double wrap_angle(double t, double period) {
  double r = std::fmod(t, period);
  if (r < 0) r += period;
  if (r == period) r = 0.0;  // guard against fmod rounding
  return r;
}

/// ZYZ Euler triple parameterizing a rotation g = R_z(alpha) R_y(beta) R_z(gamma).
/// For SO(3) use gamma in [0, 2*pi); for SU(2) gamma runs over [0, 4*pi).
struct EulerRotation {
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;

  static EulerRotation identity() { return {}; }

  /// Canonical SO(3) element: alpha, gamma wrapped to [0,2pi), beta in [0,pi].
  static EulerRotation so3(double a, double b, double g) {
    require(b >= 0.0 && b <= kPi, "EulerRotation: beta outside [0, pi]");
    return {wrap_angle(a, kTwoPi), b, wrap_angle(g, kTwoPi)};
  }

  /// Canonical SU(2) element: gamma wrapped to [0,4pi).
  static EulerRotation su2(double a, double b, double g) {
    require(b >= 0.0 && b <= kPi, "EulerRotation: beta outside [0, pi]");
    return {wrap_angle(a, kTwoPi), b, wrap_angle(g, 2.0 * kTwoPi)};
  }
};

using Mat3 = std::array<std::array<double, 3>, 3>;

inline Mat3 mat3_mul(const Mat3& a, const Mat3& b) {
  Mat3 c{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      double s = 0.0;
      for (int k = 0; k < 3; ++k) s += a[i][k] * b[k][j];
      c[i][j] = s;
    }
  return c;
}

inline Mat3 mat3_transpose(const Mat3& a) {
  Mat3 t{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) t[i][j] = a[j][i];
  return t;
}

/// 3x3 matrix of the active rotation R_z(alpha) R_y(beta) R_z(gamma).
inline Mat3 rotation_matrix(const EulerRotation& g) {
  const double ca = std::cos(g.alpha), sa = std::sin(g.alpha);
  const double cb = std::cos(g.beta), sb = std::sin(g.beta);
  const double cg = std::cos(g.gamma), sg = std::sin(g.gamma);
  return Mat3{{{ca * cb * cg - sa * sg, -ca * cb * sg - sa * cg, ca * sb},
               {sa * cb * cg + ca * sg, -sa * cb * sg + ca * cg, sa * sb},
               {-sb * cg, sb * sg, cb}}};
}

/// ZYZ Euler angles of a rotation matrix; beta in [0,pi], the degenerate
/// charts beta = 0, pi resolved with gamma = 0.
inline EulerRotation euler_from_matrix(const Mat3& r) {
  const double sb = std::hypot(r[0][2], r[1][2]);
  const double beta = std::atan2(sb, r[2][2]);
  if (sb > 1e-12) {
    return EulerRotation::so3(std::atan2(r[1][2], r[0][2]), beta,
                              std::atan2(r[2][1], -r[2][0]));
  }
  if (r[2][2] > 0) {  // beta ~ 0: R = R_z(alpha + gamma)
    return EulerRotation::so3(std::atan2(r[1][0], r[0][0]), 0.0, 0.0);
  }
  // beta ~ pi: R = [[-cos d, -sin d, 0], [-sin d, cos d, 0], [0,0,-1]], d = alpha - gamma
  return EulerRotation::so3(std::atan2(-r[0][1], -r[0][0]), kPi, 0.0);
}

/// Group product g1 * g2 (apply g2 first) through the 3x3 representation.
inline EulerRotation compose(const EulerRotation& g1, const EulerRotation& g2) {
  return euler_from_matrix(mat3_mul(rotation_matrix(g1), rotation_matrix(g2)));
}

inline EulerRotation inverse(const EulerRotation& g) {
  return euler_from_matrix(mat3_transpose(rotation_matrix(g)));
}

/// Haar-distributed SO(3) element: alpha, gamma uniform, cos(beta) uniform.
inline EulerRotation haar_random_so3(CounterRng& rng) {
  const double alpha = rng.uniform(0.0, kTwoPi);
  const double beta = std::acos(rng.uniform(-1.0, 1.0));
  const double gamma = rng.uniform(0.0, kTwoPi);
  return EulerRotation::so3(alpha, beta, gamma);
}

/// Haar-distributed SU(2) element (gamma over [0, 4*pi)).
inline EulerRotation haar_random_su2(CounterRng& rng) {
  const double alpha = rng.uniform(0.0, kTwoPi);
  const double beta = std::acos(rng.uniform(-1.0, 1.0));
  const double gamma = rng.uniform(0.0, 2.0 * kTwoPi);
  return EulerRotation::su2(alpha, beta, gamma);
}

using Mat2c = std::array<std::array<cplx, 2>, 2>;

/// Fundamental SU(2) matrix
///   [ a b ]   a = cos(b/2) e^{-i(alpha+gamma)/2},  b = -sin(b/2) e^{-i(alpha-gamma)/2}
///   [ c d ],  c = sin(b/2) e^{ i(alpha-gamma)/2},  d = cos(b/2) e^{ i(alpha+gamma)/2}
/// Unitary with determinant 1 and conj(a) = d.
inline Mat2c su2_matrix(const EulerRotation& g) {
  const double ch = std::cos(0.5 * g.beta), sh = std::sin(0.5 * g.beta);
  const double u = 0.5 * (g.alpha + g.gamma), v = 0.5 * (g.alpha - g.gamma);
  const cplx eu = std::polar(1.0, -u), ev = std::polar(1.0, -v);
  return Mat2c{{{ch * eu, -sh * ev}, {sh * std::conj(ev), ch * std::conj(eu)}}};
}

inline Mat2c mat2_mul(const Mat2c& x, const Mat2c& y) {
  Mat2c z{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      z[i][j] = x[i][0] * y[0][j] + x[i][1] * y[1][j];
  return z;
}

inline Mat2c mat2_adjoint(const Mat2c& x) {
  return Mat2c{{{std::conj(x[0][0]), std::conj(x[1][0])},
                {std::conj(x[0][1]), std::conj(x[1][1])}}};
}

/// Euler angles (gamma in [0,4pi)) of an SU(2) matrix. The degenerate charts
/// beta ~ 0 or pi keep the phase information in gamma so that
/// su2_matrix(euler_from_su2(U)) reproduces U.
inline EulerRotation euler_from_su2(const Mat2c& u) {
  const double ch = std::abs(u[0][0]);
  const double sh = std::abs(u[1][0]);
  const double beta = 2.0 * std::atan2(sh, ch);
  double half_sum = 0.0, half_diff = 0.0;
  if (ch >= 1e-14) half_sum = std::arg(u[1][1]);   // (alpha+gamma)/2 mod 2pi
  if (sh >= 1e-14) half_diff = std::arg(u[1][0]);  // (alpha-gamma)/2 mod 2pi
  double alpha, gamma;
  if (ch >= sh) {
    alpha = wrap_angle(half_sum + half_diff, kTwoPi);
    gamma = wrap_angle(2.0 * half_sum - alpha, 2.0 * kTwoPi);
  } else {
    alpha = wrap_angle(half_sum + half_diff, kTwoPi);
    gamma = wrap_angle(alpha - 2.0 * half_diff, 2.0 * kTwoPi);
  }
  return EulerRotation{alpha, std::min(beta, kPi), gamma};
}

inline EulerRotation su2_compose(const EulerRotation& g1, const EulerRotation& g2) {
  return euler_from_su2(mat2_mul(su2_matrix(g1), su2_matrix(g2)));
}

inline EulerRotation su2_inverse(const EulerRotation& g) {
  return euler_from_su2(mat2_adjoint(su2_matrix(g)));
}

}  // namespace isofield
