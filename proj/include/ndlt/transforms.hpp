#pragma once

#include <memory>

#include "ndlt/harmonics.hpp"
#include "ndlt/spectral.hpp"

namespace ndlt {

// Analysis applies the quadrature weights once:
//   f_hat = sum_k w_k f(x_k) conj(u(x_k)),
// and synthesis is the plain expansion f(x) = sum f_hat u(x). On S2 u = Y_{l,m};
// on SO(3) u^l_{mn}(R) = sqrt((2l+1)/8pi^2) conj(D^l_{mn}(R)), the orthonormal
// basis on which rotations act as f_hat^l <- D^l(R) f_hat^l.

/// S2 forward transform. `bandwidth` < 0 means the rule's bandwidth.
template <class Real>
BasicSpectralS2<Real> s2_analysis(const BasicGridSignal<Real>& f, int bandwidth = -1);

template <class Real>
BasicGridSignal<Real> s2_synthesis(const BasicSpectralS2<Real>& f, std::shared_ptr<const QuadratureRule> rule);

template <class Real>
BasicSpectralSO3<Real> so3_analysis(const BasicGridSignal<Real>& f, int bandwidth = -1);

template <class Real>
BasicGridSignal<Real> so3_synthesis(const BasicSpectralSO3<Real>& f, std::shared_ptr<const QuadratureRule> rule);

/// Orthonormal SO(3) basis function u^l_{mn}(R).
cdouble so3_basis(int l, int m, int n, const Rotation& r);

/// Direct (non-fast) evaluation of a spectrum at one point, channel c.
cdouble s2_evaluate(const SpectralS2& f, int c, double alpha, double beta);
cdouble so3_evaluate(const SpectralSO3& f, int c, const Rotation& r);

}  // namespace ndlt
