#pragma once

#include <memory>
#include <random>
#include <vector>

#include "ndlt/harmonics.hpp"
#include "ndlt/spectral.hpp"

namespace ndlt {

/// Finest scale J for an input of bandwidth L: ceil(log2 L) + 1, at least 2.
int finest_scale(int bandwidth);

/// Largest degree carried by the low-pass sequence v_j: min(2^(j-1), L).
int lowpass_bandwidth(int j, int bandwidth);

/// Largest degree carried by the high-pass sequence w^n_j: min(2^j, L).
int highpass_bandwidth(int j, int bandwidth);

/**
 * Multi-level needlet coefficients in the frequency domain.
 *
 * Holds the coarse low-pass v_{J0} and the high passes w^n_j for
 * n = 1, 2 and j = J0..J-1, in that order.
 */
template <class Real, Manifold M>
struct BasicNeedletCoefficients {
  using Spectrum = BasicSpectrum<Real, M>;
  static constexpr Manifold manifold = M;

  int j0 = 1;
  int j = 2;
  int bandwidth = 0;  ///< bandwidth of the signal that was decomposed
  Spectrum lowpass;
  std::vector<Spectrum> highpass;  ///< index 2 (scale - j0) + (n - 1)

  int channels() const { return lowpass.channels(); }
  Spectrum& band(int scale, int n) { return highpass.at(2 * (scale - j0) + (n - 1)); }
  const Spectrum& band(int scale, int n) const { return highpass.at(2 * (scale - j0) + (n - 1)); }

  /// Zero coefficients with consistent shapes.
  static BasicNeedletCoefficients zeros(int bandwidth, int j0, int channels = 1);
  /// Throws std::invalid_argument unless every band has the shape implied by the scales.
  void validate() const;

  bool operator==(const BasicNeedletCoefficients&) const = default;
};

template <class Real>
using BasicNeedletS2 = BasicNeedletCoefficients<Real, Manifold::S2>;
template <class Real>
using BasicNeedletSO3 = BasicNeedletCoefficients<Real, Manifold::SO3>;
using NeedletS2 = BasicNeedletS2<double>;
using NeedletSO3 = BasicNeedletSO3<double>;

/// Frequency-domain decomposition from v_J = f down to scale j0.
template <class Real, Manifold M>
BasicNeedletCoefficients<Real, M> decompose(const BasicSpectrum<Real, M>& f, int j0);

/// Inverse of decompose.
template <class Real, Manifold M>
BasicSpectrum<Real, M> reconstruct(const BasicNeedletCoefficients<Real, M>& c);

/// Every low pass v_J, v_{J-1}, ..., v_{j0} produced by the cascade.
template <class Real, Manifold M>
std::vector<BasicSpectrum<Real, M>> lowpass_cascade(const BasicSpectrum<Real, M>& f, int j0);

template <class Real, Manifold M>
double squared_norm(const BasicNeedletCoefficients<Real, M>& c);
template <class Real, Manifold M>
double squared_norm_highpass(const BasicNeedletCoefficients<Real, M>& c);
template <class Real, Manifold M>
double squared_distance(const BasicNeedletCoefficients<Real, M>& a, const BasicNeedletCoefficients<Real, M>& b);
template <class Real, Manifold M>
double squared_distance_highpass(const BasicNeedletCoefficients<Real, M>& a,
                                 const BasicNeedletCoefficients<Real, M>& b);

/// Sampled needlet sequences sqrt(w_k) v(x_k), one grid per band.
struct SpatialNeedlet {
  GridSignal lowpass;
  std::vector<GridSignal> highpass;
};

/// Rules for each band, low pass first. Each rule has the band's bandwidth.
std::vector<std::shared_ptr<const QuadratureRule>> band_rules(const NeedletS2& c);
std::vector<std::shared_ptr<const QuadratureRule>> band_rules(const NeedletSO3& c);

/// Throws PreconditionError if a rule integrates fewer degrees than twice the band's bandwidth.
template <Manifold M>
SpatialNeedlet spatial_coeffs(const BasicNeedletCoefficients<double, M>& c,
                              const std::vector<std::shared_ptr<const QuadratureRule>>& rules);
template <Manifold M>
SpatialNeedlet spatial_coeffs(const BasicNeedletCoefficients<double, M>& c);

/// Weighted analysis of spatial sequences back to coefficients shaped like `like`.
template <Manifold M>
BasicNeedletCoefficients<double, M> coeffs_from_spatial(const SpatialNeedlet& s,
                                                        const BasicNeedletCoefficients<double, M>& like);

enum class KernelKind { Lowpass, Highpass1, Highpass2 };

/// Needlet kernel on S2 at scale j centred at y, by direct sum over degrees
/// l <= min(2^j, max_degree). Low pass uses alpha_hat(l/2^j), high passes beta_hat^n(l/2^j).
cdouble needlet_kernel(int j, double y_alpha, double y_beta, double x_alpha, double x_beta, KernelKind kind,
                       int max_degree = -1);

struct TightnessReport {
  double reconstruction = 0;   ///< max relative error of reconstruct(decompose(f))
  double level_energy = 0;     ///< max relative residual of ||v_j||^2 = ||v_{j-1}||^2 + sum_n ||w^n_{j-1}||^2
  double spatial_energy = 0;   ///< max relative residual of spatial vs spectral band energies
  double frame_operator = 0;   ///< max |sum over bands of |multiplier(l)|^2 - 1|
};

/// Checks the tight-frame identities on random signals of bandwidth L.
TightnessReport verify_tightness(Manifold manifold, int bandwidth, int j0, int trials, std::uint64_t seed = 1,
                                 bool spatial = true);

}  // namespace ndlt
