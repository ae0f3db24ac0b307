#pragma once

#include <cmath>
#include <vector>

#include "isofield/coefficients.hpp"
#include "isofield/common.hpp"
#include "isofield/legendre.hpp"
#include "isofield/spectrum.hpp"
#include "isofield/sphere_grid.hpp"
#include "isofield/spherical_harmonics.hpp"

namespace isofield {

/// Values of the conjugation-compatible basis at a fixed set of points,
/// packed like HarmonicCoefficients. phi_{lm}(theta, phi) = N_{l|m|}(cos
/// theta) e^{i m phi} for every m, which is what makes the table cheap.
class BasisTable {
 public:
  BasisTable(int lmax, const std::vector<SphereGrid::Node>& points)
      : lmax_(lmax), n_points_(points.size()) {
    values_.resize(n_points_ * block_size());
    for (std::size_t p = 0; p < n_points_; ++p) {
      const NormalizedLegendreTable leg(lmax, std::cos(points[p].colatitude));
      cplx* row = &values_[p * block_size()];
      for (int l = 0; l <= lmax; ++l)
        for (int m = -l; m <= l; ++m)
          row[static_cast<std::size_t>(l) * l + static_cast<std::size_t>(m + l)] =
              leg(l, std::abs(m)) * std::polar(1.0, m * points[p].longitude);
    }
  }

  int lmax() const { return lmax_; }
  std::size_t point_count() const { return n_points_; }

  const cplx* row(std::size_t p) const { return &values_[p * block_size()]; }

  /// T(x_p) = sum_{lm} a_{lm} phi_{lm}(x_p)
  cplx evaluate(const HarmonicCoefficients& coeffs, std::size_t p) const {
    require(coeffs.lmax() <= lmax_, "BasisTable: coefficient bandlimit too high");
    const cplx* r = row(p);
    cplx s{0.0, 0.0};
    const std::size_t n = static_cast<std::size_t>(coeffs.lmax() + 1) *
                          (coeffs.lmax() + 1);
    for (int l = 0; l <= coeffs.lmax(); ++l)
      for (int m = -l; m <= l; ++m) {
        const std::size_t i =
            static_cast<std::size_t>(l) * l + static_cast<std::size_t>(m + l);
        s += coeffs.at(l, m) * r[i];
      }
    (void)n;
    return s;
  }

 private:
  std::size_t block_size() const {
    return static_cast<std::size_t>(lmax_ + 1) * (lmax_ + 1);
  }
  int lmax_;
  std::size_t n_points_;
  std::vector<cplx> values_;
};

/// Synthesis T(x_j) = sum_{lm} a_{lm} phi_{lm}(x_j) on the grid nodes. When
/// the coefficients obey the reality constraint the imaginary residual is
/// checked against 1e-10 and the result flagged real.
inline FieldValues synthesize(const HarmonicCoefficients& coeffs,
                              const SphereGrid& grid) {
  require(coeffs.lmax() <= grid.lmax(),
          "synthesize: coefficient bandlimit exceeds grid bandlimit");
  const BasisTable table(coeffs.lmax(), grid.nodes());
  FieldValues out{grid, {}, false, 0.0};
  out.values.resize(grid.node_count());
  double max_imag = 0.0;
  for (std::size_t j = 0; j < grid.node_count(); ++j) {
    out.values[j] = table.evaluate(coeffs, j);
    max_imag = std::max(max_imag, std::abs(out.values[j].imag()));
  }
  out.max_abs_imag = max_imag;
  const double scale = std::max(1.0, std::sqrt(coeffs.squared_norm()));
  if (coeffs.reality_defect() < 1e-14 * scale) {
    if (max_imag > 1e-10 * scale)
      throw internal_error("synthesize: imaginary residual above tolerance for "
                           "reality-constrained coefficients");
    out.real_flagged = true;
    for (auto& v : out.values) v = cplx{v.real(), 0.0};
  }
  return out;
}

/// Analysis a_{lm} = sum_j w_j T(x_j) conj(phi_{lm}(x_j)): the coefficients of
/// the expansion recovered by quadrature against the basis. For the
/// conjugation-compatible basis conj(phi_{lm}) = phi_{l,-m}, so this is the
/// integral of T phi_{l,-m} dm. Exact for bandlimited fields on a grid with
/// sufficient nodes; analyze(synthesize(a)) = a is the normative check.
inline HarmonicCoefficients analyze(const FieldValues& field, int lmax) {
  require(lmax <= field.grid.lmax(),
          "analyze: requested bandlimit exceeds grid bandlimit");
  const SphereGrid& grid = field.grid;
  const BasisTable table(lmax, grid.nodes());
  HarmonicCoefficients out(lmax);
  const std::size_t nblk = static_cast<std::size_t>(lmax + 1) * (lmax + 1);
  std::vector<cplx> acc(nblk, cplx{0.0, 0.0});
  for (std::size_t j = 0; j < grid.node_count(); ++j) {
    const cplx wt = grid.weights()[j] * field.values[j];
    const cplx* r = table.row(j);
    for (std::size_t i = 0; i < nblk; ++i) acc[i] += wt * std::conj(r[i]);
  }
  for (int l = 0; l <= lmax; ++l)
    for (int m = -l; m <= l; ++m)
      out.at(l, m) = acc[static_cast<std::size_t>(l) * l +
                         static_cast<std::size_t>(m + l)];
  return out;
}

/// Isotropic covariance R(x, y) = sum_l lambda_l (2l+1) P_l(cos angle) under
/// the probability-measure normalization.
inline double covariance_kernel(const AngularPowerSpectrum& spectrum,
                                double cos_angle) {
  require(std::abs(cos_angle) <= 1.0, "covariance_kernel: |cos| > 1");
  double s = 0.0;
  for (int l = 0; l <= spectrum.lmax(); ++l)
    s += spectrum[l] * (2.0 * l + 1.0) * legendre_p(l, cos_angle);
  return s;
}

}  // namespace isofield
