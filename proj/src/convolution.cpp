#include "ndlt/convolution.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ndlt {

double convolution_scale(int l) { return std::sqrt(8 * std::numbers::pi * std::numbers::pi / (2 * l + 1)); }

template <class Real, Manifold M>
BasicSpectrum<Real, M> rotate(const BasicSpectrum<Real, M>& f, const std::vector<ComplexMatrix>& blocks) {
  using C = std::complex<Real>;
  using Mat = Eigen::Matrix<C, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
  using Vec = Eigen::Matrix<C, Eigen::Dynamic, 1>;
  if (static_cast<int>(blocks.size()) <= f.bandwidth()) throw std::invalid_argument("rotate: too few Wigner blocks");
  BasicSpectrum<Real, M> out(f.bandwidth(), f.channels());
  for (int l = 0; l <= f.bandwidth(); ++l) {
    const int w = 2 * l + 1;
    const Mat d = blocks[l].template cast<C>();
    for (int c = 0; c < f.channels(); ++c) {
      if constexpr (M == Manifold::S2) {
        Eigen::Map<Vec>(out.degree(c, l).data(), w) = d * Eigen::Map<const Vec>(f.degree(c, l).data(), w);
      } else {
        out.block(c, l) = d * f.block(c, l);
      }
    }
  }
  return out;
}

template <class Real, Manifold M>
BasicSpectrum<Real, M> rotate(const BasicSpectrum<Real, M>& f, const Rotation& r) {
  return rotate(f, wigner_D_blocks(f.bandwidth(), r));
}

template <class Real, Manifold M>
BasicNeedletCoefficients<Real, M> rotate(const BasicNeedletCoefficients<Real, M>& c, const Rotation& r) {
  const auto blocks = wigner_D_blocks(c.bandwidth, r);
  auto out = c;
  out.lowpass = rotate(c.lowpass, blocks);
  for (auto& b : out.highpass) b = rotate(b, blocks);
  return out;
}

namespace {

template <class Real, Manifold M>
int filter_channel(const BasicSpectrum<Real, M>& phi, int c) {
  return phi.channels() == 1 ? 0 : c;
}

template <class Real, Manifold M, Manifold P>
void check_pair(const BasicSpectrum<Real, M>& f, const BasicSpectrum<Real, P>& phi, const char* what) {
  if (f.bandwidth() != phi.bandwidth()) throw std::invalid_argument(std::string(what) + ": bandwidth mismatch");
  if (phi.channels() != 1 && phi.channels() != f.channels())
    throw std::invalid_argument(std::string(what) + ": filter channels must be 1 or match the signal");
}

}  // namespace

template <class Real>
BasicSpectralSO3<Real> s2_convolve(const BasicSpectralS2<Real>& f, const BasicSpectralS2<Real>& phi) {
  using C = std::complex<Real>;
  using Vec = Eigen::Matrix<C, Eigen::Dynamic, 1>;
  check_pair(f, phi, "s2_convolve");
  BasicSpectralSO3<Real> out(f.bandwidth(), f.channels());
  for (int c = 0; c < f.channels(); ++c)
    for (int l = 0; l <= f.bandwidth(); ++l) {
      const int w = 2 * l + 1;
      const Real k = static_cast<Real>(convolution_scale(l));
      Eigen::Map<const Vec> a(f.degree(c, l).data(), w);
      Eigen::Map<const Vec> b(phi.degree(filter_channel(phi, c), l).data(), w);
      out.block(c, l) = k * a * b.adjoint();
    }
  return out;
}

template <class Real>
BasicSpectralSO3<Real> so3_convolve(const BasicSpectralSO3<Real>& f, const BasicSpectralSO3<Real>& phi) {
  check_pair(f, phi, "so3_convolve");
  BasicSpectralSO3<Real> out(f.bandwidth(), f.channels());
  for (int c = 0; c < f.channels(); ++c)
    for (int l = 0; l <= f.bandwidth(); ++l) {
      const Real k = static_cast<Real>(convolution_scale(l));
      out.block(c, l).noalias() = k * f.block(c, l) * phi.block(filter_channel(phi, c), l).adjoint();
    }
  return out;
}

ZonalFilterTriple ZonalFilterTriple::identity(int bandwidth) {
  ZonalFilterTriple t;
  for (auto& r : t.response) r.assign(bandwidth + 1, cdouble(1.0));
  return t;
}

ZonalFilterTriple ZonalFilterTriple::zero(int bandwidth) {
  ZonalFilterTriple t;
  for (auto& r : t.response) r.assign(bandwidth + 1, cdouble{});
  return t;
}

SpectralSO3 identity_so3_filter(int bandwidth) {
  SpectralSO3 phi(bandwidth);
  for (int l = 0; l <= bandwidth; ++l)
    for (int m = -l; m <= l; ++m) phi(0, l, m, m) = 1.0 / convolution_scale(l);
  return phi;
}

namespace {

template <class Real, Manifold M>
BasicSpectrum<Real, M> apply_zonal(const BasicSpectrum<Real, M>& band, const std::vector<cdouble>& response) {
  if (static_cast<int>(response.size()) <= band.bandwidth())
    throw std::invalid_argument("needlet_block_convolve: zonal response shorter than band bandwidth");
  auto out = band;
  for (int c = 0; c < band.channels(); ++c)
    for (int l = 0; l <= band.bandwidth(); ++l) {
      const auto h = std::complex<Real>(response[l]);
      for (auto& v : out.degree(c, l)) v *= h;
    }
  return out;
}

template <class Real, Manifold M>
BasicSpectrum<Real, M> fit_filter(const BasicSpectrum<Real, M>& phi, int bandwidth) {
  if (phi.bandwidth() < bandwidth)
    throw std::invalid_argument("needlet_block_convolve: filter bandwidth below band bandwidth");
  return phi.bandwidth() == bandwidth ? phi : with_bandwidth(phi, bandwidth);
}

template <class Real, Manifold M, class Conv>
BasicNeedletSO3<Real> block_convolve(const BasicNeedletCoefficients<Real, M>& c,
                                     const BlockFilterTriple<Real, M>& t, Conv conv) {
  c.validate();
  BasicNeedletSO3<Real> out;
  out.j0 = c.j0;
  out.j = c.j;
  out.bandwidth = c.bandwidth;
  out.lowpass = conv(c.lowpass, fit_filter(t.filters[0], c.lowpass.bandwidth()));
  for (std::size_t i = 0; i < c.highpass.size(); ++i) {
    const auto& band = c.highpass[i];
    out.highpass.push_back(conv(band, fit_filter(t.filters[1 + i % 2], band.bandwidth())));
  }
  return out;
}

}  // namespace

template <class Real, Manifold M>
BasicNeedletCoefficients<Real, M> needlet_block_convolve(const BasicNeedletCoefficients<Real, M>& c,
                                                         const ZonalFilterTriple& t) {
  c.validate();
  auto out = c;
  out.lowpass = apply_zonal(c.lowpass, t.response[0]);
  for (std::size_t i = 0; i < c.highpass.size(); ++i) out.highpass[i] = apply_zonal(c.highpass[i], t.response[1 + i % 2]);
  return out;
}

template <class Real>
BasicNeedletSO3<Real> needlet_block_convolve(const BasicNeedletS2<Real>& c, const BlockFilterTriple<Real, Manifold::S2>& t) {
  return block_convolve(c, t, [](const auto& a, const auto& b) { return s2_convolve(a, b); });
}

template <class Real>
BasicNeedletSO3<Real> needlet_block_convolve(const BasicNeedletSO3<Real>& c,
                                             const BlockFilterTriple<Real, Manifold::SO3>& t) {
  return block_convolve(c, t, [](const auto& a, const auto& b) { return so3_convolve(a, b); });
}

#define NDLT_INSTANTIATE_M(Real, M)                                                                              \
  template BasicSpectrum<Real, M> rotate(const BasicSpectrum<Real, M>&, const Rotation&);                        \
  template BasicSpectrum<Real, M> rotate(const BasicSpectrum<Real, M>&, const std::vector<ComplexMatrix>&);      \
  template BasicNeedletCoefficients<Real, M> rotate(const BasicNeedletCoefficients<Real, M>&, const Rotation&);  \
  template BasicNeedletCoefficients<Real, M> needlet_block_convolve(const BasicNeedletCoefficients<Real, M>&,    \
                                                                    const ZonalFilterTriple&);
#define NDLT_INSTANTIATE(Real)                                                                                   \
  NDLT_INSTANTIATE_M(Real, Manifold::S2)                                                                         \
  NDLT_INSTANTIATE_M(Real, Manifold::SO3)                                                                        \
  template BasicSpectralSO3<Real> s2_convolve(const BasicSpectralS2<Real>&, const BasicSpectralS2<Real>&);       \
  template BasicSpectralSO3<Real> so3_convolve(const BasicSpectralSO3<Real>&, const BasicSpectralSO3<Real>&);    \
  template BasicNeedletSO3<Real> needlet_block_convolve(const BasicNeedletS2<Real>&,                             \
                                                        const BlockFilterTriple<Real, Manifold::S2>&);           \
  template BasicNeedletSO3<Real> needlet_block_convolve(const BasicNeedletSO3<Real>&,                            \
                                                        const BlockFilterTriple<Real, Manifold::SO3>&);

NDLT_INSTANTIATE(float)
NDLT_INSTANTIATE(double)
#undef NDLT_INSTANTIATE
#undef NDLT_INSTANTIATE_M

}  // namespace ndlt
