#include "ndlt/filterbank.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ndlt {

namespace {
constexpr double kHalfPi = std::numbers::pi / 2;
}

const char* to_string(FilterKind k) {
  switch (k) {
    case FilterKind::A: return "a";
    case FilterKind::B1: return "b1";
    case FilterKind::B2: return "b2";
    case FilterKind::Alpha: return "alpha";
    case FilterKind::Beta1: return "beta1";
    case FilterKind::Beta2: return "beta2";
  }
  return "?";
}

double nu(double t) {
  if (t <= 0.0) return 0.0;
  if (t >= 1.0) return 1.0;
  if (t > 0.5) return 1.0 - nu(1.0 - t);
  const double t2 = t * t;
  return t2 * t2 * (35.0 - 84.0 * t + 70.0 * t2 - 20.0 * t2 * t);
}

double filter_hat(FilterKind kind, double xi) {
  const double x = std::abs(xi);
  switch (kind) {
    case FilterKind::A:
      if (x < 0.125) return 1.0;
      if (x <= 0.25) return std::cos(kHalfPi * nu(8 * x - 1));
      return 0.0;
    case FilterKind::B1:
      if (x < 0.125) return 0.0;
      if (x <= 0.25) return std::sin(kHalfPi * nu(8 * x - 1));
      if (x <= 0.5) return std::cos(kHalfPi * nu(4 * x - 1));
      return 0.0;
    case FilterKind::B2:
      if (x < 0.25) return 0.0;
      if (x <= 0.5) return std::sin(kHalfPi * nu(4 * x - 1));
      return 0.0;
    default:
      throw std::invalid_argument("filter_hat: kind must be a, b1 or b2");
  }
}

double generator_hat(FilterKind kind, double xi) {
  const double x = std::abs(xi);
  switch (kind) {
    case FilterKind::Alpha:
      if (x < 0.25) return 1.0;
      if (x <= 0.5) return std::cos(kHalfPi * nu(4 * x - 1));
      return 0.0;
    case FilterKind::Beta1:
      if (x < 0.25) return 0.0;
      if (x < 0.5) return std::sin(kHalfPi * nu(4 * x - 1));
      if (x <= 1.0) {
        const double c = std::cos(kHalfPi * nu(2 * x - 1));
        return c * c;
      }
      return 0.0;
    case FilterKind::Beta2:
      if (x < 0.5) return 0.0;
      if (x <= 1.0) return 0.5 * std::sin(std::numbers::pi * nu(2 * x - 1));
      return 0.0;
    default:
      throw std::invalid_argument("generator_hat: kind must be alpha, beta1 or beta2");
  }
}

double profile(FilterKind kind, double xi) {
  switch (kind) {
    case FilterKind::A:
    case FilterKind::B1:
    case FilterKind::B2:
      return filter_hat(kind, xi);
    default:
      return generator_hat(kind, xi);
  }
}

}  // namespace ndlt
