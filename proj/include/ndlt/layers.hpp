#pragma once

#include <cstddef>
#include <memory>
#include <optional>

#include "ndlt/needlet.hpp"
#include "ndlt/spectral.hpp"

namespace ndlt {

/// sigma sqrt(2 ln N) / sqrt(N).
double shrinkage_threshold(double sigma, std::size_t n);

struct ShrinkageConfig {
  double sigma = 0.0;
  /// Count the threshold normalizes over; defaults to all high-pass coefficients.
  std::optional<std::size_t> count;
};

/// Total number of high-pass coefficients over all bands and channels.
template <class Real, Manifold M>
std::size_t highpass_count(const BasicNeedletCoefficients<Real, M>& c);

/// x / |x| (|x| - lambda)_+, the phase-preserving soft threshold.
template <class Real>
std::complex<Real> soft_threshold(std::complex<Real> x, Real lambda) {
  const Real a = std::abs(x);
  if (a <= lambda) return {};
  return x * ((a - lambda) / a);
}

/// Soft-thresholds every high-pass coefficient; the low pass is copied untouched.
template <class Real, Manifold M>
BasicNeedletCoefficients<Real, M> shrink(const BasicNeedletCoefficients<Real, M>& c, const ShrinkageConfig& cfg);

/// Keeps degrees 0..floor(L/2).
template <class Real, Manifold M>
BasicSpectrum<Real, M> spectral_pool(const BasicSpectrum<Real, M>& f);

/// Synthesis on `rule`, max(Re, 0) pointwise, analysis back to f's bandwidth.
template <class Real, Manifold M>
BasicSpectrum<Real, M> spatial_relu(const BasicSpectrum<Real, M>& f, const std::shared_ptr<const QuadratureRule>& rule);

/// Pointwise max(Re, 0) with the imaginary part dropped.
template <class Real>
void relu_in_place(BasicGridSignal<Real>& g) {
  for (auto& v : g.samples()) v = std::max(v.real(), Real(0));
}

}  // namespace ndlt
