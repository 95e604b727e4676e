#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

namespace ndlt {

enum class Manifold { S2, SO3 };

const char* to_string(Manifold m);
Manifold manifold_from_string(const std::string_view s);

/// Gauss-Legendre rule on [-1, 1]. Nodes are strictly increasing.
struct GaussLegendre1D {
  std::vector<double> nodes;
  std::vector<double> weights;

  std::size_t order() const { return nodes.size(); }
};

/// Gauss-Legendre rule with n nodes, exact for polynomials of degree 2n-1.
/// Throws std::invalid_argument for n == 0.
GaussLegendre1D gauss_legendre(int n);

/// Legendre polynomial P_n(t) and its derivative, by the three-term recurrence.
struct LegendreValue {
  double value;
  double derivative;
};
LegendreValue legendre_p(int n, double t);

/// A point of a tensor-product rule. S2 rules leave gamma at zero.
struct QuadraturePoint {
  double alpha;
  double beta;
  double gamma;
};

/**
 * Tensor-product Gauss-Legendre rule on S2 or SO(3).
 *
 * Longitudes (and the third Euler angle on SO(3)) are 2L+1 equispaced
 * angles; colatitudes are arccos of the L+1 Gauss-Legendre nodes, sorted
 * by ascending beta. Points are stored alpha-major, then beta, then gamma.
 *
 * The rule integrates every product u * conj(u') of basis functions with
 * degrees up to L exactly, so exactness_degree() == 2L.
 */
class QuadratureRule {
 public:
  QuadratureRule(Manifold manifold, int bandwidth);

  Manifold manifold() const { return manifold_; }
  int bandwidth() const { return bandwidth_; }
  int exactness_degree() const { return 2 * bandwidth_; }

  /// Equispaced count along alpha and gamma (2L+1).
  int n_longitude() const { return 2 * bandwidth_ + 1; }
  /// Gauss-Legendre count along beta (L+1).
  int n_latitude() const { return bandwidth_ + 1; }

  std::size_t size() const { return points_.size(); }
  std::span<const QuadraturePoint> points() const { return points_; }
  std::span<const double> weights() const { return weights_; }

  /// cos(beta_i) and the 1-D weights, in ascending-beta order.
  std::span<const double> latitude_nodes() const { return cos_beta_; }
  std::span<const double> latitude_weights() const { return lat_weights_; }
  std::span<const double> betas() const { return betas_; }
  double longitude_step() const;

  std::size_t index(int a, int b, int g = 0) const;

  bool operator==(const QuadratureRule& other) const {
    return manifold_ == other.manifold_ && bandwidth_ == other.bandwidth_;
  }

 private:
  Manifold manifold_;
  int bandwidth_;
  std::vector<double> cos_beta_;
  std::vector<double> betas_;
  std::vector<double> lat_weights_;
  std::vector<QuadraturePoint> points_;
  std::vector<double> weights_;
};

QuadratureRule s2_rule(int bandwidth);
QuadratureRule so3_rule(int bandwidth);

/// Total measure of the manifold: 4 pi for S2, 8 pi^2 for SO(3).
double manifold_volume(Manifold m);

}  // namespace ndlt
