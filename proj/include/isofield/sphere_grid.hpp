#pragma once

#include <cmath>
#include <vector>

#include "isofield/common.hpp"
#include "isofield/quadrature.hpp"

namespace isofield {

/// Gauss-Legendre x equiangular quadrature grid on the sphere. Weights are
/// normalized to total mass 1 (probability measure); with n_theta >= lmax+1
/// and n_phi >= 2 lmax+1 the rule integrates products of two bandlimited
/// functions exactly.
class SphereGrid {
 public:
  struct Node {
    double colatitude;
    double longitude;
  };

  static SphereGrid build(int lmax) {
    require(lmax >= 0, "SphereGrid: negative lmax");
    return SphereGrid(lmax, lmax + 1, 2 * lmax + 1);
  }

  SphereGrid(int lmax, int n_theta, int n_phi) : lmax_(lmax) {
    require(n_theta >= lmax + 1 && n_phi >= 2 * lmax + 1,
            "SphereGrid: grid too small for the requested bandlimit");
    const GaussLegendreRule rule = gauss_legendre_nodes(n_theta);
    nodes_.reserve(static_cast<std::size_t>(n_theta) * n_phi);
    weights_.reserve(nodes_.capacity());
    for (int i = 0; i < n_theta; ++i) {
      const double theta = std::acos(rule.nodes[static_cast<std::size_t>(i)]);
      const double w = 0.5 * rule.weights[static_cast<std::size_t>(i)] / n_phi;
      for (int j = 0; j < n_phi; ++j) {
        nodes_.push_back({theta, kTwoPi * j / n_phi});
        weights_.push_back(w);
      }
    }
    n_theta_ = n_theta;
    n_phi_ = n_phi;
  }

  int lmax() const { return lmax_; }
  int n_theta() const { return n_theta_; }
  int n_phi() const { return n_phi_; }
  std::size_t node_count() const { return nodes_.size(); }
  const std::vector<Node>& nodes() const { return nodes_; }
  const std::vector<double>& weights() const { return weights_; }

  double weight_sum() const {
    double s = 0.0;
    for (double w : weights_) s += w;
    return s;
  }

 private:
  int lmax_;
  int n_theta_ = 0;
  int n_phi_ = 0;
  std::vector<Node> nodes_;
  std::vector<double> weights_;
};

/// Field samples aligned with a grid's nodes. Synthesis flags the result real
/// when the coefficients obey the reality constraint.
struct FieldValues {
  SphereGrid grid;
  std::vector<cplx> values;
  bool real_flagged = false;
  double max_abs_imag = 0.0;

  double real_at(std::size_t j) const { return values[j].real(); }
};

/// Quadrature energy sum_j w_j T(x_j)^2 of a real field.
inline double field_energy(const FieldValues& field) {
  require(field.real_flagged, "field_energy: field is not flagged real");
  double s = 0.0;
  for (std::size_t j = 0; j < field.values.size(); ++j)
    s += field.grid.weights()[j] * field.values[j].real() * field.values[j].real();
  return s;
}

}  // namespace isofield
