#include "ndlt/needlet.hpp"

#include <bit>
#include <cmath>

#include "ndlt/errors.hpp"
#include "ndlt/filterbank.hpp"
#include "ndlt/harmonics.hpp"
#include "ndlt/signals.hpp"
#include "ndlt/transforms.hpp"

namespace ndlt {

int finest_scale(int bandwidth) {
  if (bandwidth < 1) return 2;
  const int lg = std::bit_width(static_cast<unsigned>(bandwidth - 1));  // ceil(log2 L)
  return std::max(lg + 1, 2);
}

int lowpass_bandwidth(int j, int bandwidth) {
  return j >= 1 && j - 1 < 30 ? std::min(1 << (j - 1), bandwidth) : std::min(0, bandwidth);
}

int highpass_bandwidth(int j, int bandwidth) { return j < 30 ? std::min(1 << j, bandwidth) : bandwidth; }

namespace {

template <class Real, Manifold M>
void scale_degrees(const BasicSpectrum<Real, M>& in, BasicSpectrum<Real, M>& out, FilterKind kind, int j,
                   bool accumulate) {
  const double step = std::ldexp(1.0, -j);
  for (int c = 0; c < out.channels(); ++c)
    for (int l = 0; l <= out.bandwidth(); ++l) {
      auto dst = out.degree(c, l);
      if (l > in.bandwidth()) {
        if (!accumulate) std::fill(dst.begin(), dst.end(), std::complex<Real>{});
        continue;
      }
      const Real h = static_cast<Real>(filter_hat(kind, l * step));
      auto src = in.degree(c, l);
      for (std::size_t i = 0; i < dst.size(); ++i) {
        if (accumulate)
          dst[i] += h * src[i];
        else
          dst[i] = h * src[i];
      }
    }
}

void check_scales(int j0, int j) {
  if (j0 < 1) throw std::invalid_argument("needlet: coarse scale j0 must be >= 1");
  if (j0 >= j) throw std::invalid_argument("needlet: coarse scale j0 must be below the finest scale J");
}

}  // namespace

template <class Real, Manifold M>
BasicNeedletCoefficients<Real, M> BasicNeedletCoefficients<Real, M>::zeros(int bandwidth, int j0, int channels) {
  BasicNeedletCoefficients c;
  c.bandwidth = bandwidth;
  c.j0 = j0;
  c.j = finest_scale(bandwidth);
  check_scales(c.j0, c.j);
  c.lowpass = Spectrum(lowpass_bandwidth(j0, bandwidth), channels);
  for (int s = j0; s < c.j; ++s)
    for (int n = 0; n < 2; ++n) c.highpass.emplace_back(highpass_bandwidth(s, bandwidth), channels);
  return c;
}

template <class Real, Manifold M>
void BasicNeedletCoefficients<Real, M>::validate() const {
  if (bandwidth < 0) throw std::invalid_argument("needlet: negative bandwidth");
  if (j != finest_scale(bandwidth)) throw std::invalid_argument("needlet: finest scale does not match bandwidth");
  check_scales(j0, j);
  if (lowpass.bandwidth() != lowpass_bandwidth(j0, bandwidth))
    throw std::invalid_argument("needlet: low-pass bandwidth does not match scale");
  if (highpass.size() != static_cast<std::size_t>(2 * (j - j0)))
    throw std::invalid_argument("needlet: wrong number of high-pass bands");
  for (int s = j0; s < j; ++s)
    for (int n = 1; n <= 2; ++n) {
      const auto& b = band(s, n);
      if (b.bandwidth() != highpass_bandwidth(s, bandwidth) || b.channels() != lowpass.channels())
        throw std::invalid_argument("needlet: high-pass band shape does not match scale");
    }
}

template <class Real, Manifold M>
std::vector<BasicSpectrum<Real, M>> lowpass_cascade(const BasicSpectrum<Real, M>& f, int j0) {
  const int jj = finest_scale(f.bandwidth());
  check_scales(j0, jj);
  std::vector<BasicSpectrum<Real, M>> out;
  out.push_back(f);
  for (int s = jj; s > j0; --s) {
    BasicSpectrum<Real, M> next(lowpass_bandwidth(s - 1, f.bandwidth()), f.channels());
    scale_degrees(out.back(), next, FilterKind::A, s, false);
    out.push_back(std::move(next));
  }
  return out;
}

template <class Real, Manifold M>
BasicNeedletCoefficients<Real, M> decompose(const BasicSpectrum<Real, M>& f, int j0) {
  auto c = BasicNeedletCoefficients<Real, M>::zeros(f.bandwidth(), j0, f.channels());
  BasicSpectrum<Real, M> v = f;
  for (int s = c.j; s > j0; --s) {
    scale_degrees(v, c.band(s - 1, 1), FilterKind::B1, s, false);
    scale_degrees(v, c.band(s - 1, 2), FilterKind::B2, s, false);
    BasicSpectrum<Real, M> next(lowpass_bandwidth(s - 1, f.bandwidth()), f.channels());
    scale_degrees(v, next, FilterKind::A, s, false);
    v = std::move(next);
  }
  c.lowpass = std::move(v);
  return c;
}

template <class Real, Manifold M>
BasicSpectrum<Real, M> reconstruct(const BasicNeedletCoefficients<Real, M>& c) {
  c.validate();
  BasicSpectrum<Real, M> v = c.lowpass;
  for (int s = c.j0 + 1; s <= c.j; ++s) {
    const int bw = s == c.j ? c.bandwidth : lowpass_bandwidth(s, c.bandwidth);
    BasicSpectrum<Real, M> next(bw, c.channels());
    scale_degrees(v, next, FilterKind::A, s, false);
    scale_degrees(c.band(s - 1, 1), next, FilterKind::B1, s, true);
    scale_degrees(c.band(s - 1, 2), next, FilterKind::B2, s, true);
    v = std::move(next);
  }
  return v;
}

template <class Real, Manifold M>
double squared_norm(const BasicNeedletCoefficients<Real, M>& c) {
  return squared_norm(c.lowpass) + squared_norm_highpass(c);
}

template <class Real, Manifold M>
double squared_norm_highpass(const BasicNeedletCoefficients<Real, M>& c) {
  double acc = 0;
  for (const auto& b : c.highpass) acc += squared_norm(b);
  return acc;
}

template <class Real, Manifold M>
double squared_distance_highpass(const BasicNeedletCoefficients<Real, M>& a,
                                 const BasicNeedletCoefficients<Real, M>& b) {
  if (a.highpass.size() != b.highpass.size()) throw std::invalid_argument("needlet: band count mismatch");
  double acc = 0;
  for (std::size_t i = 0; i < a.highpass.size(); ++i) acc += squared_distance(a.highpass[i], b.highpass[i]);
  return acc;
}

template <class Real, Manifold M>
double squared_distance(const BasicNeedletCoefficients<Real, M>& a, const BasicNeedletCoefficients<Real, M>& b) {
  return squared_distance(a.lowpass, b.lowpass) + squared_distance_highpass(a, b);
}

namespace {

template <Manifold M>
std::shared_ptr<const QuadratureRule> rule_for(int bandwidth) {
  return std::make_shared<const QuadratureRule>(M, std::max(bandwidth, 1));
}

template <Manifold M>
std::vector<std::shared_ptr<const QuadratureRule>> rules_for(const BasicNeedletCoefficients<double, M>& c) {
  std::vector<std::shared_ptr<const QuadratureRule>> out{rule_for<M>(c.lowpass.bandwidth())};
  for (const auto& b : c.highpass) out.push_back(rule_for<M>(b.bandwidth()));
  return out;
}

template <Manifold M>
GridSignal weighted_synthesis(const BasicSpectrum<double, M>& f, const std::shared_ptr<const QuadratureRule>& rule) {
  if (!rule || rule->manifold() != M) throw std::invalid_argument("spatial_coeffs: rule manifold mismatch");
  if (rule->exactness_degree() < 2 * f.bandwidth())
    throw PreconditionError("spatial_coeffs: quadrature exactness below twice the band bandwidth");
  GridSignal g = [&] {
    if constexpr (M == Manifold::S2)
      return s2_synthesis(f, rule);
    else
      return so3_synthesis(f, rule);
  }();
  const auto w = rule->weights();
  for (int c = 0; c < g.channels(); ++c) {
    auto ch = g.channel(c);
    for (std::size_t k = 0; k < ch.size(); ++k) ch[k] *= std::sqrt(w[k]);
  }
  return g;
}

template <Manifold M>
BasicSpectrum<double, M> weighted_analysis(const GridSignal& g, int bandwidth) {
  GridSignal u = g;
  const auto w = g.rule().weights();
  for (int c = 0; c < u.channels(); ++c) {
    auto ch = u.channel(c);
    for (std::size_t k = 0; k < ch.size(); ++k) ch[k] /= std::sqrt(w[k]);
  }
  if constexpr (M == Manifold::S2)
    return s2_analysis(u, bandwidth);
  else
    return so3_analysis(u, bandwidth);
}

}  // namespace

std::vector<std::shared_ptr<const QuadratureRule>> band_rules(const NeedletS2& c) { return rules_for(c); }
std::vector<std::shared_ptr<const QuadratureRule>> band_rules(const NeedletSO3& c) { return rules_for(c); }

template <Manifold M>
SpatialNeedlet spatial_coeffs(const BasicNeedletCoefficients<double, M>& c,
                              const std::vector<std::shared_ptr<const QuadratureRule>>& rules) {
  if (rules.size() != c.highpass.size() + 1) throw std::invalid_argument("spatial_coeffs: one rule per band required");
  SpatialNeedlet out{weighted_synthesis(c.lowpass, rules[0]), {}};
  for (std::size_t i = 0; i < c.highpass.size(); ++i)
    out.highpass.push_back(weighted_synthesis(c.highpass[i], rules[i + 1]));
  return out;
}

template <Manifold M>
SpatialNeedlet spatial_coeffs(const BasicNeedletCoefficients<double, M>& c) {
  return spatial_coeffs(c, rules_for(c));
}

template <Manifold M>
BasicNeedletCoefficients<double, M> coeffs_from_spatial(const SpatialNeedlet& s,
                                                        const BasicNeedletCoefficients<double, M>& like) {
  if (s.highpass.size() != like.highpass.size()) throw std::invalid_argument("coeffs_from_spatial: band count mismatch");
  auto out = like;
  out.lowpass = weighted_analysis<M>(s.lowpass, like.lowpass.bandwidth());
  for (std::size_t i = 0; i < like.highpass.size(); ++i)
    out.highpass[i] = weighted_analysis<M>(s.highpass[i], like.highpass[i].bandwidth());
  return out;
}

cdouble needlet_kernel(int j, double y_alpha, double y_beta, double x_alpha, double x_beta, KernelKind kind,
                       int max_degree) {
  if (j < 1) throw std::invalid_argument("needlet_kernel: scale must be >= 1");
  const FilterKind g = kind == KernelKind::Lowpass     ? FilterKind::Alpha
                       : kind == KernelKind::Highpass1 ? FilterKind::Beta1
                                                       : FilterKind::Beta2;
  int lmax = 1 << j;
  if (max_degree >= 0) lmax = std::min(lmax, max_degree);
  const double step = std::ldexp(1.0, -j);
  cdouble acc{};
  for (int l = 0; l <= lmax; ++l) {
    const double h = generator_hat(g, l * step);
    if (h == 0.0) continue;
    cdouble s{};
    for (int m = -l; m <= l; ++m) s += std::conj(sph_harm(l, m, y_alpha, y_beta)) * sph_harm(l, m, x_alpha, x_beta);
    acc += h * s;
  }
  return acc;
}

namespace {

template <Manifold M>
void tightness_trials(TightnessReport& r, int bandwidth, int j0, int trials, std::mt19937_64& rng, bool spatial) {
  using Spectrum = BasicSpectrum<double, M>;
  for (int t = 0; t < trials; ++t) {
    const auto f = random_spectrum<double, M>(bandwidth, rng);
    const auto c = decompose(f, j0);
    r.reconstruction = std::max(r.reconstruction, std::sqrt(squared_distance(reconstruct(c), f) / squared_norm(f)));
    const auto levels = lowpass_cascade(f, j0);
    for (std::size_t i = 1; i < levels.size(); ++i) {
      const int s = c.j - static_cast<int>(i);  // levels[i] = v_s
      const double lhs = squared_norm(levels[i - 1]);
      const double rhs = squared_norm(levels[i]) + squared_norm(c.band(s, 1)) + squared_norm(c.band(s, 2));
      if (lhs > 0) r.level_energy = std::max(r.level_energy, std::abs(lhs - rhs) / lhs);
    }
    if (spatial) {
      const auto sp = spatial_coeffs(c);
      auto energy = [](const GridSignal& g) {
        double e = 0;
        for (auto v : g.samples()) e += std::norm(v);
        return e;
      };
      const double total = squared_norm(f);
      r.spatial_energy = std::max(r.spatial_energy, std::abs(energy(sp.lowpass) - squared_norm(c.lowpass)) / total);
      for (std::size_t i = 0; i < c.highpass.size(); ++i)
        r.spatial_energy =
            std::max(r.spatial_energy, std::abs(energy(sp.highpass[i]) - squared_norm(c.highpass[i])) / total);
    }
  }
  // Frame operator on the basis: decompose a unit coefficient at each degree.
  for (int l = 0; l <= bandwidth; ++l) {
    Spectrum e(bandwidth);
    e.degree(0, l)[0] = 1.0;
    const double g = squared_norm(decompose(e, j0));
    r.frame_operator = std::max(r.frame_operator, std::abs(g - 1.0));
  }
}

}  // namespace

TightnessReport verify_tightness(Manifold manifold, int bandwidth, int j0, int trials, std::uint64_t seed,
                                 bool spatial) {
  TightnessReport r;
  std::mt19937_64 rng(seed);
  if (manifold == Manifold::S2)
    tightness_trials<Manifold::S2>(r, bandwidth, j0, trials, rng, spatial);
  else
    tightness_trials<Manifold::SO3>(r, bandwidth, j0, trials, rng, spatial);
  return r;
}

#define NDLT_INSTANTIATE(Real, M)                                                                                 \
  template struct BasicNeedletCoefficients<Real, M>;                                                              \
  template BasicNeedletCoefficients<Real, M> decompose(const BasicSpectrum<Real, M>&, int);                       \
  template BasicSpectrum<Real, M> reconstruct(const BasicNeedletCoefficients<Real, M>&);                          \
  template std::vector<BasicSpectrum<Real, M>> lowpass_cascade(const BasicSpectrum<Real, M>&, int);               \
  template double squared_norm(const BasicNeedletCoefficients<Real, M>&);                                         \
  template double squared_norm_highpass(const BasicNeedletCoefficients<Real, M>&);                                \
  template double squared_distance(const BasicNeedletCoefficients<Real, M>&, const BasicNeedletCoefficients<Real, M>&); \
  template double squared_distance_highpass(const BasicNeedletCoefficients<Real, M>&,                             \
                                            const BasicNeedletCoefficients<Real, M>&);

NDLT_INSTANTIATE(float, Manifold::S2)
NDLT_INSTANTIATE(float, Manifold::SO3)
NDLT_INSTANTIATE(double, Manifold::S2)
NDLT_INSTANTIATE(double, Manifold::SO3)
#undef NDLT_INSTANTIATE

template SpatialNeedlet spatial_coeffs(const NeedletS2&, const std::vector<std::shared_ptr<const QuadratureRule>>&);
template SpatialNeedlet spatial_coeffs(const NeedletSO3&, const std::vector<std::shared_ptr<const QuadratureRule>>&);
template SpatialNeedlet spatial_coeffs(const NeedletS2&);
template SpatialNeedlet spatial_coeffs(const NeedletSO3&);
template NeedletS2 coeffs_from_spatial(const SpatialNeedlet&, const NeedletS2&);
template NeedletSO3 coeffs_from_spatial(const SpatialNeedlet&, const NeedletSO3&);

}  // namespace ndlt
