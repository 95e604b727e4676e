#include "ndlt/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace ndlt {

using std::numbers::pi;

const char* to_string(Manifold m) { return m == Manifold::S2 ? "s2" : "so3"; }

Manifold manifold_from_string(std::string_view s) {
  if (s == "s2") return Manifold::S2;
  if (s == "so3") return Manifold::SO3;
  throw std::invalid_argument("unknown manifold '" + std::string(s) + "'");
}

double manifold_volume(Manifold m) { return m == Manifold::S2 ? 4 * pi : 8 * pi * pi; }

LegendreValue legendre_p(int n, double t) {
  double p0 = 1.0, p1 = t;
  if (n == 0) return {1.0, 0.0};
  for (int k = 2; k <= n; ++k) {
    const double p2 = ((2 * k - 1) * t * p1 - (k - 1) * p0) / k;
    p0 = p1;
    p1 = p2;
  }
  // P'_n = n (t P_n - P_{n-1}) / (t^2 - 1), valid away from the endpoints.
  const double dp = n * (t * p1 - p0) / (t * t - 1.0);
  return {p1, dp};
}

GaussLegendre1D gauss_legendre(int n) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: order must be >= 1");

  GaussLegendre1D rule;
  rule.nodes.assign(n, 0.0);
  rule.weights.assign(n, 0.0);

  // Roots are symmetric; solve for the positive half and mirror.
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    double t = std::cos(pi * (i + 0.75) / (n + 0.5));
    LegendreValue p{};
    int iter = 0;
    for (;; ++iter) {
      if (iter == 100) throw std::runtime_error("gauss_legendre: Newton iteration did not converge");
      p = legendre_p(n, t);
      const double dt = p.value / p.derivative;
      t -= dt;
      if (std::abs(dt) < 1e-15) break;
    }
    p = legendre_p(n, t);
    const double w = 2.0 / ((1.0 - t * t) * p.derivative * p.derivative);
    // i-th largest root goes to the top end.
    rule.nodes[n - 1 - i] = t;
    rule.nodes[i] = -t;
    rule.weights[n - 1 - i] = w;
    rule.weights[i] = w;
  }
  if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
  return rule;
}

QuadratureRule::QuadratureRule(Manifold manifold, int bandwidth)
    : manifold_(manifold), bandwidth_(bandwidth) {
  if (bandwidth < 1) throw std::invalid_argument("quadrature rule: bandwidth must be >= 1");

  const GaussLegendre1D gl = gauss_legendre(bandwidth + 1);
  const int nlat = n_latitude();
  // Ascending beta is descending cos(beta).
  for (int i = 0; i < nlat; ++i) {
    const double t = gl.nodes[nlat - 1 - i];
    cos_beta_.push_back(t);
    betas_.push_back(std::acos(t));
    lat_weights_.push_back(gl.weights[nlat - 1 - i]);
  }

  const int nlon = n_longitude();
  const double step = longitude_step();
  if (manifold == Manifold::S2) {
    points_.reserve(static_cast<std::size_t>(nlon) * nlat);
    for (int a = 0; a < nlon; ++a)
      for (int b = 0; b < nlat; ++b) {
        points_.push_back({a * step, betas_[b], 0.0});
        weights_.push_back(lat_weights_[b] * step);
      }
  } else {
    points_.reserve(static_cast<std::size_t>(nlon) * nlat * nlon);
    for (int a = 0; a < nlon; ++a)
      for (int b = 0; b < nlat; ++b)
        for (int g = 0; g < nlon; ++g) {
          points_.push_back({a * step, betas_[b], g * step});
          weights_.push_back(lat_weights_[b] * step * step);
        }
  }
}

double QuadratureRule::longitude_step() const { return 2 * pi / n_longitude(); }

std::size_t QuadratureRule::index(int a, int b, int g) const {
  const std::size_t nlat = n_latitude();
  if (manifold_ == Manifold::S2) return a * nlat + b;
  const std::size_t nlon = n_longitude();
  return (a * nlat + b) * nlon + g;
}

QuadratureRule s2_rule(int bandwidth) { return QuadratureRule(Manifold::S2, bandwidth); }
QuadratureRule so3_rule(int bandwidth) { return QuadratureRule(Manifold::SO3, bandwidth); }

}  // namespace ndlt
