#pragma once

#include <array>
#include <vector>

#include "ndlt/harmonics.hpp"
#include "ndlt/needlet.hpp"
#include "ndlt/spectral.hpp"

namespace ndlt {

/// sqrt(8 pi^2 / (2l + 1)), the factor relating SO(3) and S2 degree-l normalizations.
double convolution_scale(int l);

/// Spectral rotation f_l <- D^l(R) f_l, i.e. the spectrum of x -> f(R^-1 x).
template <class Real, Manifold M>
BasicSpectrum<Real, M> rotate(const BasicSpectrum<Real, M>& f, const Rotation& r);

/// Same with precomputed blocks D^0..D^L (at least f's bandwidth).
template <class Real, Manifold M>
BasicSpectrum<Real, M> rotate(const BasicSpectrum<Real, M>& f, const std::vector<ComplexMatrix>& blocks);

template <class Real, Manifold M>
BasicNeedletCoefficients<Real, M> rotate(const BasicNeedletCoefficients<Real, M>& c, const Rotation& r);

/**
 * Spectrum of (phi * f)(R) = integral over S2 of conj(phi(R^-1 x)) f(x) dx:
 * block l = kappa_l f_l phi_l^H with kappa_l = convolution_scale(l).
 *
 * `phi` has one channel (shared) or as many as `f`.
 */
template <class Real>
BasicSpectralSO3<Real> s2_convolve(const BasicSpectralS2<Real>& f, const BasicSpectralS2<Real>& phi);

/// SO(3) counterpart: block l = kappa_l F_l Phi_l^H.
template <class Real>
BasicSpectralSO3<Real> so3_convolve(const BasicSpectralSO3<Real>& f, const BasicSpectralSO3<Real>& phi);

/// One complex response per degree for the low pass, first and second high pass.
struct ZonalFilterTriple {
  std::array<std::vector<cdouble>, 3> response;

  static ZonalFilterTriple identity(int bandwidth);
  static ZonalFilterTriple zero(int bandwidth);
};

/// Full-block filters, applied with s2_convolve or so3_convolve per band.
template <class Real, Manifold M>
struct BlockFilterTriple {
  std::array<BasicSpectrum<Real, M>, 3> filters;
};

/// SO(3) filters with blocks I / kappa_l, for which so3_convolve is the identity.
SpectralSO3 identity_so3_filter(int bandwidth);

/// Degree-wise product of each band with its zonal response.
template <class Real, Manifold M>
BasicNeedletCoefficients<Real, M> needlet_block_convolve(const BasicNeedletCoefficients<Real, M>& c,
                                                         const ZonalFilterTriple& t);

template <class Real>
BasicNeedletSO3<Real> needlet_block_convolve(const BasicNeedletS2<Real>& c, const BlockFilterTriple<Real, Manifold::S2>& t);

template <class Real>
BasicNeedletSO3<Real> needlet_block_convolve(const BasicNeedletSO3<Real>& c,
                                             const BlockFilterTriple<Real, Manifold::SO3>& t);

}  // namespace ndlt
