#pragma once

#include <cmath>
#include <vector>

#include "isofield/common.hpp"

namespace isofield {

/// Block-indexed harmonic coefficients a_{lm} in the conjugation-compatible
/// basis, 0 <= l <= lmax, -l <= m <= l, packed degree by degree. A real field
/// corresponds to the reality constraint a_{l,-m} = conj(a_{lm}) with a_{l0}
/// real.
class HarmonicCoefficients {
 public:
  explicit HarmonicCoefficients(int lmax)
      : lmax_(lmax),
        a_(static_cast<std::size_t>(lmax + 1) * (lmax + 1), cplx{0.0, 0.0}) {
    require(lmax >= 0, "HarmonicCoefficients: negative lmax");
  }

  int lmax() const { return lmax_; }
  std::size_t size() const { return a_.size(); }

  cplx& at(int l, int m) { return a_[index(l, m)]; }
  const cplx& at(int l, int m) const { return a_[index(l, m)]; }

  /// View of the degree-l block, index m + l.
  std::vector<cplx> block(int l) const {
    check_degree(l);
    const std::size_t off = static_cast<std::size_t>(l) * l;
    return {a_.begin() + off, a_.begin() + off + (2 * l + 1)};
  }

  void set_block(int l, const std::vector<cplx>& b) {
    check_degree(l);
    require(static_cast<int>(b.size()) == 2 * l + 1,
            "HarmonicCoefficients: block size mismatch");
    const std::size_t off = static_cast<std::size_t>(l) * l;
    for (std::size_t i = 0; i < b.size(); ++i) a_[off + i] = b[i];
  }

  /// Largest violation of a_{l,-m} = conj(a_{lm}) (including Im a_{l0}).
  double reality_defect() const {
    double worst = 0.0;
    for (int l = 0; l <= lmax_; ++l) {
      worst = std::max(worst, std::abs(at(l, 0).imag()));
      for (int m = 1; m <= l; ++m)
        worst = std::max(worst, std::abs(at(l, -m) - std::conj(at(l, m))));
    }
    return worst;
  }

  /// Rewrites the m <= 0 entries from the m >= 0 ones so the constraint holds
  /// exactly.
  void enforce_reality() {
    for (int l = 0; l <= lmax_; ++l) {
      at(l, 0) = cplx{at(l, 0).real(), 0.0};
      for (int m = 1; m <= l; ++m) at(l, -m) = std::conj(at(l, m));
    }
  }

  /// sum_{lm} |a_{lm}|^2; equals the field energy by Parseval.
  double squared_norm() const {
    double s = 0.0;
    for (const cplx& v : a_) s += std::norm(v);
    return s;
  }

  double block_squared_norm(int l) const {
    check_degree(l);
    double s = 0.0;
    for (int m = -l; m <= l; ++m) s += std::norm(at(l, m));
    return s;
  }

  double max_abs_diff(const HarmonicCoefficients& other) const {
    require(lmax_ == other.lmax_, "HarmonicCoefficients: lmax mismatch");
    double worst = 0.0;
    for (std::size_t i = 0; i < a_.size(); ++i)
      worst = std::max(worst, std::abs(a_[i] - other.a_[i]));
    return worst;
  }

 private:
  void check_degree(int l) const {
    require(l >= 0 && l <= lmax_, "HarmonicCoefficients: degree out of range");
  }
  std::size_t index(int l, int m) const {
    require(l >= 0 && l <= lmax_ && std::abs(m) <= l,
            "HarmonicCoefficients: index out of range");
    return static_cast<std::size_t>(l) * l + static_cast<std::size_t>(m + l);
  }

  int lmax_;
  std::vector<cplx> a_;
};

}  // namespace isofield
