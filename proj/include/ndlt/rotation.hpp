#pragma once

#include <Eigen/Core>
#include <Eigen/Geometry>
#include <random>

namespace ndlt {

/**
 * A rotation in ZYZ Euler angles, R = Rz(alpha) Ry(beta) Rz(gamma), acting
 * actively on column vectors. Angles are normalized so that alpha and gamma
 * lie in [0, 2 pi) and beta in [0, pi].
 */
struct Rotation {
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;

  Rotation() = default;
  Rotation(double a, double b, double g);

  static Rotation identity() { return {}; }
  /// Nearest ZYZ triple for a proper orthogonal matrix.
  static Rotation from_matrix(const Eigen::Matrix3d& m);

  Eigen::Matrix3d matrix() const;
  Rotation inverse() const;
};

/// this ∘ other: apply `second` after `first`.
Rotation compose(const Rotation& second, const Rotation& first);

/// Uniform (Haar) random rotation: alpha, gamma uniform, cos(beta) uniform.
Rotation random_rotation(std::mt19937_64& rng);

/// Unit vector with azimuth alpha and colatitude beta.
Eigen::Vector3d unit_vector(double alpha, double beta);

/// Azimuth in [0, 2 pi) and colatitude in [0, pi] of a non-zero vector.
struct SphericalAngles {
  double alpha;
  double beta;
};
SphericalAngles spherical_angles(const Eigen::Vector3d& v);

}  // namespace ndlt
