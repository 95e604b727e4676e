#include "ndlt/rotation.hpp"

#include <Eigen/Geometry>
#include <algorithm>
#include <cmath>
#include <numbers>

namespace ndlt {

namespace {

constexpr double kTwoPi = 2 * std::numbers::pi;

double wrap_angle(double a) {
  a = std::fmod(a, kTwoPi);
  if (a < 0) a += kTwoPi;
  if (a >= kTwoPi) a = 0.0;
  return a;
}

}  // namespace

Rotation::Rotation(double a, double b, double g) : alpha(a), beta(b), gamma(g) {
  // A beta outside [0, pi] is folded back via Rz(a)Ry(-b)Rz(g) = Rz(a+pi)Ry(b)Rz(g+pi).
  beta = std::fmod(beta, kTwoPi);
  if (beta < 0) beta += kTwoPi;
  if (beta > std::numbers::pi) {
    beta = kTwoPi - beta;
    alpha += std::numbers::pi;
    gamma += std::numbers::pi;
  }
  alpha = wrap_angle(alpha);
  gamma = wrap_angle(gamma);
}

Eigen::Matrix3d Rotation::matrix() const {
  const Eigen::Matrix3d rz1 = Eigen::AngleAxisd(alpha, Eigen::Vector3d::UnitZ()).toRotationMatrix();
  const Eigen::Matrix3d ry = Eigen::AngleAxisd(beta, Eigen::Vector3d::UnitY()).toRotationMatrix();
  const Eigen::Matrix3d rz2 = Eigen::AngleAxisd(gamma, Eigen::Vector3d::UnitZ()).toRotationMatrix();
  return rz1 * ry * rz2;
}

Rotation Rotation::from_matrix(const Eigen::Matrix3d& m) {
  const double c = std::clamp(m(2, 2), -1.0, 1.0);
  const double s = std::hypot(m(0, 2), m(1, 2));
  if (s > 1e-12) {
    const double beta = std::atan2(s, c);
    const double alpha = std::atan2(m(1, 2), m(0, 2));
    const double gamma = std::atan2(m(2, 1), -m(2, 0));
    return {alpha, beta, gamma};
  }
  // Gimbal lock: only alpha +/- gamma is determined; put it all in alpha.
  if (c > 0) return {std::atan2(m(1, 0), m(0, 0)), 0.0, 0.0};
  return {std::atan2(-m(1, 0), -m(0, 0)), std::numbers::pi, 0.0};
}

Rotation Rotation::inverse() const {
  // (Rz(a)Ry(b)Rz(g))^-1 = Rz(-g)Ry(-b)Rz(-a) = Rz(pi-g)Ry(b)Rz(pi-a).
  return {std::numbers::pi - gamma, beta, std::numbers::pi - alpha};
}

Rotation compose(const Rotation& second, const Rotation& first) {
  return Rotation::from_matrix(second.matrix() * first.matrix());
}

Rotation random_rotation(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> angle(0.0, kTwoPi);
  std::uniform_real_distribution<double> cosine(-1.0, 1.0);
  const double a = angle(rng);
  const double cb = cosine(rng);
  const double g = angle(rng);
  return {a, std::acos(cb), g};
}

Eigen::Vector3d unit_vector(double alpha, double beta) {
  const double sb = std::sin(beta);
  return {sb * std::cos(alpha), sb * std::sin(alpha), std::cos(beta)};
}

SphericalAngles spherical_angles(const Eigen::Vector3d& v) {
  const double r = v.norm();
  const double beta = std::acos(std::clamp(v.z() / r, -1.0, 1.0));
  double alpha = std::atan2(v.y(), v.x());
  if (alpha < 0) alpha += kTwoPi;
  return {alpha, beta};
}

}  // namespace ndlt
