#pragma once

#include <Eigen/Core>
#include <complex>
#include <vector>

#include "ndlt/rotation.hpp"

namespace ndlt {

using cdouble = std::complex<double>;
using RealMatrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using ComplexMatrix = Eigen::Matrix<cdouble, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

/// Associated Legendre function P_l^m(t), Condon-Shortley phase, 0 <= m <= l.
double assoc_legendre(int l, int m, double t);

/**
 * Orthonormal spherical harmonic
 *   Y_{l,m}(alpha, beta) = sqrt((2l+1)/4pi (l-m)!/(l+m)!) P_l^m(cos beta) e^{i m alpha},
 * with Y_{l,-m} = (-1)^m conj(Y_{l,m}).
 */
cdouble sph_harm(int l, int m, double alpha, double beta);

/**
 * Normalized associated Legendre values
 *   lambda_{l,m}(t) = sqrt((2l+1)/4pi (l-m)!/(l+m)!) P_l^m(t)
 * for 0 <= m <= l <= L at one t, so that Y_{l,m} = lambda_{l,m}(cos beta) e^{i m alpha}.
 */
class NormalizedLegendre {
 public:
  NormalizedLegendre(int max_degree, double t);

  double operator()(int l, int m) const { return values_[l * (l + 1) / 2 + m]; }
  int max_degree() const { return max_degree_; }

 private:
  int max_degree_;
  std::vector<double> values_;
};

/**
 * Small Wigner-d blocks d^l(beta) for l = 0..L, entry (m+l, n+l) = d^l_{mn}(beta).
 *
 * Each (m, n) column over l is produced by the three-term recurrence in the
 * degree, seeded at l0 = max(|m|, |n|) from the closed-form edge values
 * (evaluated in log space so the seeds do not underflow early).
 */
class WignerTable {
 public:
  WignerTable(int max_degree, double beta);

  int max_degree() const { return max_degree_; }
  Eigen::Map<const RealMatrix> block(int l) const;
  double operator()(int l, int m, int n) const {
    return data_[offset(l) + static_cast<std::size_t>(m + l) * (2 * l + 1) + (n + l)];
  }

  /// Sum of (2k+1)^2 over k < l.
  static std::size_t offset(int l) {
    const std::size_t ll = l;
    return ll * (4 * ll * ll - 1) / 3;
  }

 private:
  int max_degree_;
  std::vector<double> data_;
};

/// d^l(beta) as a (2l+1)x(2l+1) matrix.
RealMatrix wigner_d(int l, double beta);

/// D^l_{mn}(R) = e^{-i m alpha} d^l_{mn}(beta) e^{-i n gamma}; unitary.
ComplexMatrix wigner_D(int l, const Rotation& r);

/// D^l(R) for every l = 0..L.
std::vector<ComplexMatrix> wigner_D_blocks(int max_degree, const Rotation& r);

}  // namespace ndlt
