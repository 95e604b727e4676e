#pragma once

#include <cmath>
#include <random>

#include "ndlt/spectral.hpp"

namespace ndlt {

/**
 * Random band-limited coefficients: independent complex Gaussians scaled by
 * (1 + l)^(-decay), normalized to unit total energy.
 */
template <class Real, Manifold M>
BasicSpectrum<Real, M> random_spectrum(int bandwidth, std::mt19937_64& rng, double decay = 1.0, int channels = 1) {
  BasicSpectrum<double, M> f(bandwidth, channels);
  std::normal_distribution<double> g(0.0, std::sqrt(0.5));
  for (int c = 0; c < channels; ++c)
    for (int l = 0; l <= bandwidth; ++l) {
      const double s = std::pow(1.0 + l, -decay);
      for (auto& v : f.degree(c, l)) v = s * std::complex<double>(g(rng), g(rng));
    }
  const double scale = 1.0 / std::sqrt(squared_norm(f));
  for (auto& v : f.data()) v *= scale;
  return f.template cast<Real>();
}

}  // namespace ndlt
