#pragma once

namespace ndlt {

/// Filter bank {a; b1, b2} and needlet generators {alpha; beta1, beta2}.
enum class FilterKind { A, B1, B2, Alpha, Beta1, Beta2 };

const char* to_string(FilterKind k);

/// Smooth ramp t^4 (35 - 84 t + 70 t^2 - 20 t^3), clamped to 0 below 0 and 1 above 1.
double nu(double t);

/// Fourier profile of a, b1 or b2. Zero for |xi| > 1/2.
double filter_hat(FilterKind kind, double xi);

/// Fourier profile of alpha, beta1 or beta2. Zero for |xi| > 1.
///
/// beta2 is 1/2 sin(pi nu(2|xi| - 1)) on [1/2, 1], the form that satisfies
/// beta2_hat(2 xi) = b2_hat(xi) alpha_hat(xi).
double generator_hat(FilterKind kind, double xi);

/// Dispatches to filter_hat or generator_hat.
double profile(FilterKind kind, double xi);

}  // namespace ndlt
