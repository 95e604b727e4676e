#include "ndlt/layers.hpp"

#include <cmath>
#include <stdexcept>

#include "ndlt/transforms.hpp"

namespace ndlt {

double shrinkage_threshold(double sigma, std::size_t n) {
  if (sigma < 0) throw std::invalid_argument("shrinkage: sigma must be non-negative");
  if (n < 1) throw std::invalid_argument("shrinkage: coefficient count must be >= 1");
  const double dn = static_cast<double>(n);
  return sigma * std::sqrt(2.0 * std::log(dn)) / std::sqrt(dn);
}

template <class Real, Manifold M>
std::size_t highpass_count(const BasicNeedletCoefficients<Real, M>& c) {
  std::size_t n = 0;
  for (const auto& b : c.highpass) n += b.data().size();
  return n;
}

template <class Real, Manifold M>
BasicNeedletCoefficients<Real, M> shrink(const BasicNeedletCoefficients<Real, M>& c, const ShrinkageConfig& cfg) {
  const std::size_t n = cfg.count.value_or(std::max<std::size_t>(highpass_count(c), 1));
  const Real lambda = static_cast<Real>(shrinkage_threshold(cfg.sigma, n));
  auto out = c;
  if (lambda == Real(0)) return out;
  for (auto& b : out.highpass)
    for (auto& v : b.data()) v = soft_threshold(v, lambda);
  return out;
}

template <class Real, Manifold M>
BasicSpectrum<Real, M> spectral_pool(const BasicSpectrum<Real, M>& f) {
  if (f.bandwidth() < 2) throw std::invalid_argument("spectral_pool: bandwidth must be >= 2");
  return with_bandwidth(f, f.bandwidth() / 2);
}

template <class Real, Manifold M>
BasicSpectrum<Real, M> spatial_relu(const BasicSpectrum<Real, M>& f, const std::shared_ptr<const QuadratureRule>& rule) {
  if (!rule || rule->manifold() != M || rule->bandwidth() != f.bandwidth())
    throw std::invalid_argument("spatial_relu: rule does not match the spectrum");
  if constexpr (M == Manifold::S2) {
    auto g = s2_synthesis(f, rule);
    relu_in_place(g);
    return s2_analysis(g, f.bandwidth());
  } else {
    auto g = so3_synthesis(f, rule);
    relu_in_place(g);
    return so3_analysis(g, f.bandwidth());
  }
}

#define NDLT_INSTANTIATE(Real, M)                                                                          \
  template std::size_t highpass_count(const BasicNeedletCoefficients<Real, M>&);                           \
  template BasicNeedletCoefficients<Real, M> shrink(const BasicNeedletCoefficients<Real, M>&,              \
                                                    const ShrinkageConfig&);                               \
  template BasicSpectrum<Real, M> spectral_pool(const BasicSpectrum<Real, M>&);                            \
  template BasicSpectrum<Real, M> spatial_relu(const BasicSpectrum<Real, M>&,                              \
                                               const std::shared_ptr<const QuadratureRule>&);

NDLT_INSTANTIATE(float, Manifold::S2)
NDLT_INSTANTIATE(float, Manifold::SO3)
NDLT_INSTANTIATE(double, Manifold::S2)
NDLT_INSTANTIATE(double, Manifold::SO3)
#undef NDLT_INSTANTIATE

}  // namespace ndlt
