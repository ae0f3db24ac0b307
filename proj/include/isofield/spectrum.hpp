#pragma once

#include <cmath>
#include <vector>

#include "isofield/common.hpp"

namespace isofield {

/// Angular power spectrum: one nonnegative covariance eigenvalue lambda_l per
/// degree block. Total field variance is sum_l lambda_l (2l+1).
class AngularPowerSpectrum {
 public:
  explicit AngularPowerSpectrum(std::vector<double> lambdas)
      : lambda_(std::move(lambdas)) {
    for (double v : lambda_)
      require(v >= 0.0, "AngularPowerSpectrum: negative eigenvalue");
  }

  /// lambda_l = scale * (1+l)^(-slope)
  static AngularPowerSpectrum power_law(double scale, double slope, int lmax) {
    require(scale >= 0.0, "AngularPowerSpectrum: negative scale");
    std::vector<double> v(static_cast<std::size_t>(lmax) + 1);
    for (int l = 0; l <= lmax; ++l)
      v[static_cast<std::size_t>(l)] = scale * std::pow(1.0 + l, -slope);
    return AngularPowerSpectrum(std::move(v));
  }

  static AngularPowerSpectrum flat(double value, int lmax) {
    return AngularPowerSpectrum(
        std::vector<double>(static_cast<std::size_t>(lmax) + 1, value));
  }

  int lmax() const { return static_cast<int>(lambda_.size()) - 1; }
  double operator[](int l) const { return lambda_[static_cast<std::size_t>(l)]; }
  const std::vector<double>& values() const { return lambda_; }

  double total_variance() const {
    double s = 0.0;
    for (int l = 0; l <= lmax(); ++l) s += (*this)[l] * (2.0 * l + 1.0);
    return s;
  }

 private:
  std::vector<double> lambda_;
};

}  // namespace isofield
