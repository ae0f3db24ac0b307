#pragma once

#include <cmath>
#include <vector>

#include "isofield/common.hpp"
#include "isofield/euler.hpp"

namespace isofield {

/// Dense (2l+1) x (2l+1) complex matrix of an irreducible block, indexed by
/// signed orders k (row) and m (column), both in -l..l.
class RepMatrix {
 public:
  explicit RepMatrix(int degree)
      : degree_(degree), dim_(2 * degree + 1),
        entries_(static_cast<std::size_t>(dim_) * dim_, cplx{0.0, 0.0}) {
    require(degree >= 0, "RepMatrix: negative degree");
  }

  static RepMatrix identity(int degree) {
    RepMatrix m(degree);
    for (int k = -degree; k <= degree; ++k) m.at(k, k) = 1.0;
    return m;
  }

  int degree() const { return degree_; }
  int dim() const { return dim_; }

  cplx& at(int k, int m) { return entries_[index(k, m)]; }
  const cplx& at(int k, int m) const { return entries_[index(k, m)]; }

  RepMatrix operator*(const RepMatrix& other) const {
    require(degree_ == other.degree_, "RepMatrix: degree mismatch");
    RepMatrix out(degree_);
    for (int k = -degree_; k <= degree_; ++k)
      for (int m = -degree_; m <= degree_; ++m) {
        cplx s{0.0, 0.0};
        for (int j = -degree_; j <= degree_; ++j) s += at(k, j) * other.at(j, m);
        out.at(k, m) = s;
      }
    return out;
  }

  /// max_{k,m} |(M M† - I)_{k,m}|
  double unitarity_defect() const {
    double worst = 0.0;
    for (int k = -degree_; k <= degree_; ++k)
      for (int m = -degree_; m <= degree_; ++m) {
        cplx s{0.0, 0.0};
        for (int j = -degree_; j <= degree_; ++j)
          s += at(k, j) * std::conj(at(m, j));
        if (k == m) s -= 1.0;
        worst = std::max(worst, std::abs(s));
      }
    return worst;
  }

  double max_abs_diff(const RepMatrix& other) const {
    require(degree_ == other.degree_, "RepMatrix: degree mismatch");
    double worst = 0.0;
    for (std::size_t i = 0; i < entries_.size(); ++i)
      worst = std::max(worst, std::abs(entries_[i] - other.entries_[i]));
    return worst;
  }

  /// Matrix-vector product on a coefficient block v indexed by m in -l..l
  /// (v[m + l]).
  std::vector<cplx> apply(const std::vector<cplx>& v) const {
    require(static_cast<int>(v.size()) == dim_, "RepMatrix: block size mismatch");
    std::vector<cplx> out(static_cast<std::size_t>(dim_), cplx{0.0, 0.0});
    for (int k = -degree_; k <= degree_; ++k) {
      cplx s{0.0, 0.0};
      for (int m = -degree_; m <= degree_; ++m)
        s += at(k, m) * v[static_cast<std::size_t>(m + degree_)];
      out[static_cast<std::size_t>(k + degree_)] = s;
    }
    return out;
  }

 private:
  std::size_t index(int k, int m) const {
    return static_cast<std::size_t>(k + degree_) * dim_ +
           static_cast<std::size_t>(m + degree_);
  }
  int degree_;
  int dim_;
  std::vector<cplx> entries_;
};

namespace detail {

/// Border entry d^l_{l,m}(beta) = sqrt(C(2l, l+m)) cos^{l+m}(b/2) (-sin(b/2))^{l-m},
/// evaluated in log space to stay finite at high degree.
inline double wigner_d_top_row(int l, int m, double cos_half, double sin_half) {
  const int p = l + m, q = l - m;
  if (cos_half == 0.0 && p > 0) return 0.0;
  if (sin_half == 0.0 && q > 0) return 0.0;
  double log_mag = 0.5 * (std::lgamma(2.0 * l + 1.0) - std::lgamma(p + 1.0) -
                          std::lgamma(q + 1.0));
  if (p > 0) log_mag += p * std::log(cos_half);
  if (q > 0) log_mag += q * std::log(sin_half);
  const double sign = (q % 2 == 0) ? 1.0 : -1.0;
  return sign * std::exp(log_mag);
}

}  // namespace detail

/// All Wigner small-d matrices d^l(beta) for l = 0..lmax, built by the
/// three-term recursion in the degree. Border entries (max(|k|,|m|) = l) come
/// from the closed form; the recursion's l-2 coefficient vanishes one step
/// inside the border, so the sweep needs no other seeds.
inline std::vector<RepMatrix> wigner_small_d_all(int lmax, double beta) {
  require(lmax >= 0, "wigner_small_d_all: negative lmax");
  const double x = std::cos(beta);
  const double ch = std::cos(0.5 * beta), sh = std::sin(0.5 * beta);

  std::vector<RepMatrix> d;
  d.reserve(static_cast<std::size_t>(lmax) + 1);
  d.push_back(RepMatrix::identity(0));
  for (int l = 1; l <= lmax; ++l) {
    RepMatrix cur(l);
    for (int k = -l; k <= l; ++k) {
      for (int m = -l; m <= l; ++m) {
        const int peak = std::max(std::abs(k), std::abs(m));
        double val;
        if (peak == l) {
          // Map onto the top row by the standard symmetries.
          if (k == l) {
            val = detail::wigner_d_top_row(l, m, ch, sh);
          } else if (k == -l) {
            val = parity_sign(l + m) * detail::wigner_d_top_row(l, -m, ch, sh);
          } else if (m == l) {
            val = parity_sign(k - l) * detail::wigner_d_top_row(l, k, ch, sh);
          } else {  // m == -l
            val = detail::wigner_d_top_row(l, -k, ch, sh);
          }
        } else {
          const double lm1 = l - 1.0;
          const double denom =
              lm1 * std::sqrt((static_cast<double>(l) * l - static_cast<double>(k) * k) *
                              (static_cast<double>(l) * l - static_cast<double>(m) * m));
          double t = (2.0 * l - 1.0) * (lm1 * l * x - static_cast<double>(k) * m) *
                     d[static_cast<std::size_t>(l - 1)].at(k, m).real();
          if (peak <= l - 2) {
            t -= l *
                 std::sqrt((lm1 * lm1 - static_cast<double>(k) * k) *
                           (lm1 * lm1 - static_cast<double>(m) * m)) *
                 d[static_cast<std::size_t>(l - 2)].at(k, m).real();
          }
          val = t / denom;
        }
        cur.at(k, m) = val;
      }
    }
    d.push_back(std::move(cur));
  }
  return d;
}

/// Wigner small-d matrix d^l(beta): real entries, orthogonal, d^l(0) = I.
inline RepMatrix wigner_small_d(int l, double beta) {
  return std::move(wigner_small_d_all(l, beta).back());
}

/// Wigner D-matrix in the spherical-harmonic basis:
///   D^l_{k,m}(g) = e^{-i k alpha} d^l_{k,m}(beta) e^{-i m gamma}.
/// With this convention Y_{lm}(g^{-1} x) = sum_k D^l_{k,m}(g) Y_{lk}... pinned
/// operationally by the rotate/evaluate consistency test: the rotated
/// coefficient block is a~ = D~(g) a.
inline RepMatrix wigner_D(int l, const EulerRotation& g) {
  RepMatrix d = wigner_small_d(l, g.beta);
  RepMatrix out(l);
  for (int k = -l; k <= l; ++k) {
    const cplx ek = std::polar(1.0, -k * g.alpha);
    for (int m = -l; m <= l; ++m)
      out.at(k, m) = ek * d.at(k, m).real() * std::polar(1.0, -m * g.gamma);
  }
  return out;
}

/// Diagonal +-1 change of basis between the spherical harmonics Y_{lm} and the
/// conjugation-compatible basis phi_{lm} (phi = Y for m >= 0, (-1)^m Y for m < 0).
inline double phi_basis_sign(int m) { return m >= 0 ? 1.0 : parity_sign(m); }

/// Representation matrix in the conjugation-compatible basis: D~ = S D S with
/// S = diag(phi_basis_sign). Entrywise |D~| = |D|, and conj(D~_{k,m}) = D~_{-k,-m}.
inline RepMatrix rep_matrix_phi_basis(int l, const EulerRotation& g) {
  RepMatrix out = wigner_D(l, g);
  for (int k = -l; k <= l; ++k)
    for (int m = -l; m <= l; ++m)
      out.at(k, m) *= phi_basis_sign(k) * phi_basis_sign(m);
  return out;
}

/// Same, for every degree up to lmax at a single group element (one small-d
/// sweep shared across blocks).
inline std::vector<RepMatrix> rep_matrix_phi_basis_all(int lmax, const EulerRotation& g) {
  std::vector<RepMatrix> d = wigner_small_d_all(lmax, g.beta);
  std::vector<RepMatrix> out;
  out.reserve(d.size());
  for (int l = 0; l <= lmax; ++l) {
    RepMatrix m_l(l);
    for (int k = -l; k <= l; ++k) {
      const cplx ek = std::polar(1.0, -k * g.alpha);
      for (int m = -l; m <= l; ++m) {
        m_l.at(k, m) = phi_basis_sign(k) * phi_basis_sign(m) * ek *
                       d[static_cast<std::size_t>(l)].at(k, m).real() *
                       std::polar(1.0, -m * g.gamma);
      }
    }
    out.push_back(std::move(m_l));
  }
  return out;
}

/// Character e^{i k theta} of the circle group.
inline cplx torus_character(int k, double theta) {
  return std::polar(1.0, k * theta);
}

}  // namespace isofield
