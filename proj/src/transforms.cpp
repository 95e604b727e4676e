#include "ndlt/transforms.hpp"

#include <fftw3.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "ndlt/errors.hpp"

namespace ndlt {

namespace {

template <class Real>
struct Fftw;

template <>
struct Fftw<double> {
  using plan_type = fftw_plan;
  static void* malloc(std::size_t n) { return fftw_malloc(n); }
  static void free(void* p) { fftw_free(p); }
  static plan_type plan(int rank, const int* dims, void* in, void* out, int sign) {
    return fftw_plan_dft(rank, dims, static_cast<fftw_complex*>(in), static_cast<fftw_complex*>(out), sign,
                         FFTW_ESTIMATE);
  }
  static void execute(plan_type p) { fftw_execute(p); }
  static void destroy(plan_type p) { fftw_destroy_plan(p); }
};

template <>
struct Fftw<float> {
  using plan_type = fftwf_plan;
  static void* malloc(std::size_t n) { return fftwf_malloc(n); }
  static void free(void* p) { fftwf_free(p); }
  static plan_type plan(int rank, const int* dims, void* in, void* out, int sign) {
    return fftwf_plan_dft(rank, dims, static_cast<fftwf_complex*>(in), static_cast<fftwf_complex*>(out), sign,
                          FFTW_ESTIMATE);
  }
  static void execute(plan_type p) { fftwf_execute(p); }
  static void destroy(plan_type p) { fftwf_destroy_plan(p); }
};

// Square n or n x n DFT with owned, FFTW-aligned buffers. FFTW_ESTIMATE keeps
// the chosen algorithm, and therefore the output bits, independent of timing.
template <class Real>
class Dft {
 public:
  using value_type = std::complex<Real>;

  Dft(int rank, int n, int sign) : size_(rank == 1 ? n : n * n) {
    const int dims[2] = {n, n};
    in_ = static_cast<value_type*>(Fftw<Real>::malloc(sizeof(value_type) * size_));
    out_ = static_cast<value_type*>(Fftw<Real>::malloc(sizeof(value_type) * size_));
    plan_ = Fftw<Real>::plan(rank, dims, in_, out_, sign);
    if (!plan_) throw std::runtime_error("FFTW planning failed");
  }
  ~Dft() {
    Fftw<Real>::destroy(plan_);
    Fftw<Real>::free(in_);
    Fftw<Real>::free(out_);
  }
  Dft(const Dft&) = delete;
  Dft& operator=(const Dft&) = delete;

  value_type* in() { return in_; }
  const value_type* out() const { return out_; }
  void clear() { std::fill(in_, in_ + size_, value_type{}); }
  void execute() { Fftw<Real>::execute(plan_); }

 private:
  std::size_t size_;
  value_type* in_;
  value_type* out_;
  typename Fftw<Real>::plan_type plan_;
};

// Frequency m stored at m mod n.
inline int bin(int m, int n) { return m >= 0 ? m : m + n; }

void require_manifold(const QuadratureRule& rule, Manifold want, const char* what) {
  if (rule.manifold() != want) throw std::invalid_argument(std::string(what) + ": rule is on the wrong manifold");
}

double so3_norm(int l) { return std::sqrt((2.0 * l + 1) / (8 * std::numbers::pi * std::numbers::pi)); }

}  // namespace

template <class Real>
BasicSpectralS2<Real> s2_analysis(const BasicGridSignal<Real>& f, int bandwidth) {
  const QuadratureRule& rule = f.rule();
  require_manifold(rule, Manifold::S2, "s2_analysis");
  const int L = bandwidth < 0 ? rule.bandwidth() : bandwidth;
  if (L > rule.bandwidth())
    throw PreconditionError("s2_analysis: rule is not exact for the requested bandwidth");

  using C = std::complex<Real>;
  const int nlon = rule.n_longitude();
  const int nlat = rule.n_latitude();
  const Real dphi = static_cast<Real>(rule.longitude_step());
  BasicSpectralS2<Real> out(L, f.channels());
  Dft<Real> dft(1, nlon, FFTW_FORWARD);

  for (int b = 0; b < nlat; ++b) {
    const NormalizedLegendre leg(L, rule.latitude_nodes()[b]);
    const Real w = static_cast<Real>(rule.latitude_weights()[b]) * dphi;
    for (int c = 0; c < f.channels(); ++c) {
      auto samples = f.channel(c);
      for (int a = 0; a < nlon; ++a) dft.in()[a] = samples[rule.index(a, b)];
      dft.execute();
      const C* h = dft.out();
      for (int l = 0; l <= L; ++l)
        for (int m = -l; m <= l; ++m) {
          const int am = std::abs(m);
          Real p = static_cast<Real>(leg(l, am));
          if (m < 0 && am % 2 == 1) p = -p;
          out(c, l, m) += w * p * h[bin(m, nlon)];
        }
    }
  }
  return out;
}

template <class Real>
BasicGridSignal<Real> s2_synthesis(const BasicSpectralS2<Real>& f, std::shared_ptr<const QuadratureRule> rule_ptr) {
  if (!rule_ptr) throw std::invalid_argument("s2_synthesis: null rule");
  const QuadratureRule& rule = *rule_ptr;
  require_manifold(rule, Manifold::S2, "s2_synthesis");
  if (rule.bandwidth() < f.bandwidth())
    throw PreconditionError("s2_synthesis: rule bandwidth is below the spectrum bandwidth");

  using C = std::complex<Real>;
  const int L = f.bandwidth();
  const int nlon = rule.n_longitude();
  const int nlat = rule.n_latitude();
  BasicGridSignal<Real> out(rule_ptr, f.channels());
  Dft<Real> dft(1, nlon, FFTW_BACKWARD);

  for (int b = 0; b < nlat; ++b) {
    const NormalizedLegendre leg(L, rule.latitude_nodes()[b]);
    for (int c = 0; c < f.channels(); ++c) {
      dft.clear();
      C* g = dft.in();
      for (int m = -L; m <= L; ++m) {
        const int am = std::abs(m);
        C acc{};
        for (int l = am; l <= L; ++l) {
          Real p = static_cast<Real>(leg(l, am));
          if (m < 0 && am % 2 == 1) p = -p;
          acc += p * f(c, l, m);
        }
        g[bin(m, nlon)] = acc;
      }
      dft.execute();
      auto samples = out.channel(c);
      for (int a = 0; a < nlon; ++a) samples[rule.index(a, b)] = dft.out()[a];
    }
  }
  return out;
}

template <class Real>
BasicSpectralSO3<Real> so3_analysis(const BasicGridSignal<Real>& f, int bandwidth) {
  const QuadratureRule& rule = f.rule();
  require_manifold(rule, Manifold::SO3, "so3_analysis");
  const int L = bandwidth < 0 ? rule.bandwidth() : bandwidth;
  if (L > rule.bandwidth())
    throw PreconditionError("so3_analysis: rule is not exact for the requested bandwidth");

  using C = std::complex<Real>;
  const int nlon = rule.n_longitude();
  const int nlat = rule.n_latitude();
  const double dphi = rule.longitude_step();
  BasicSpectralSO3<Real> out(L, f.channels());
  Dft<Real> dft(2, nlon, FFTW_FORWARD);

  for (int b = 0; b < nlat; ++b) {
    const WignerTable d(L, rule.betas()[b]);
    const double w = rule.latitude_weights()[b] * dphi * dphi;
    for (int c = 0; c < f.channels(); ++c) {
      auto samples = f.channel(c);
      for (int a = 0; a < nlon; ++a)
        for (int g = 0; g < nlon; ++g) dft.in()[a * nlon + g] = samples[rule.index(a, b, g)];
      dft.execute();
      const C* h = dft.out();
      for (int l = 0; l <= L; ++l) {
        const double scale = w * so3_norm(l);
        auto blk = out.block(c, l);
        for (int m = -l; m <= l; ++m)
          for (int n = -l; n <= l; ++n)
            blk(m + l, n + l) += static_cast<Real>(scale * d(l, m, n)) * h[bin(m, nlon) * nlon + bin(n, nlon)];
      }
    }
  }
  return out;
}

template <class Real>
BasicGridSignal<Real> so3_synthesis(const BasicSpectralSO3<Real>& f, std::shared_ptr<const QuadratureRule> rule_ptr) {
  if (!rule_ptr) throw std::invalid_argument("so3_synthesis: null rule");
  const QuadratureRule& rule = *rule_ptr;
  require_manifold(rule, Manifold::SO3, "so3_synthesis");
  if (rule.bandwidth() < f.bandwidth())
    throw PreconditionError("so3_synthesis: rule bandwidth is below the spectrum bandwidth");

  using C = std::complex<Real>;
  const int L = f.bandwidth();
  const int nlon = rule.n_longitude();
  const int nlat = rule.n_latitude();
  BasicGridSignal<Real> out(rule_ptr, f.channels());
  Dft<Real> dft(2, nlon, FFTW_BACKWARD);

  for (int b = 0; b < nlat; ++b) {
    const WignerTable d(L, rule.betas()[b]);
    for (int c = 0; c < f.channels(); ++c) {
      dft.clear();
      C* g = dft.in();
      for (int m = -L; m <= L; ++m)
        for (int n = -L; n <= L; ++n) {
          C acc{};
          for (int l = std::max(std::abs(m), std::abs(n)); l <= L; ++l)
            acc += static_cast<Real>(so3_norm(l) * d(l, m, n)) * f(c, l, m, n);
          g[bin(m, nlon) * nlon + bin(n, nlon)] = acc;
        }
      dft.execute();
      auto samples = out.channel(c);
      for (int a = 0; a < nlon; ++a)
        for (int gg = 0; gg < nlon; ++gg) samples[rule.index(a, b, gg)] = dft.out()[a * nlon + gg];
    }
  }
  return out;
}

template BasicSpectralS2<double> s2_analysis(const BasicGridSignal<double>&, int);
template BasicSpectralS2<float> s2_analysis(const BasicGridSignal<float>&, int);
template BasicGridSignal<double> s2_synthesis(const BasicSpectralS2<double>&, std::shared_ptr<const QuadratureRule>);
template BasicGridSignal<float> s2_synthesis(const BasicSpectralS2<float>&, std::shared_ptr<const QuadratureRule>);
template BasicSpectralSO3<double> so3_analysis(const BasicGridSignal<double>&, int);
template BasicSpectralSO3<float> so3_analysis(const BasicGridSignal<float>&, int);
template BasicGridSignal<double> so3_synthesis(const BasicSpectralSO3<double>&, std::shared_ptr<const QuadratureRule>);
template BasicGridSignal<float> so3_synthesis(const BasicSpectralSO3<float>&, std::shared_ptr<const QuadratureRule>);

cdouble so3_basis(int l, int m, int n, const Rotation& r) {
  if (std::abs(m) > l || std::abs(n) > l) throw std::invalid_argument("so3_basis: requires |m|, |n| <= l");
  const WignerTable d(l, r.beta);
  return so3_norm(l) * std::polar(d(l, m, n), m * r.alpha + n * r.gamma);
}

cdouble s2_evaluate(const SpectralS2& f, int c, double alpha, double beta) {
  const int L = f.bandwidth();
  const NormalizedLegendre leg(L, std::cos(beta));
  cdouble acc{};
  for (int l = 0; l <= L; ++l)
    for (int m = -l; m <= l; ++m) {
      const int am = std::abs(m);
      const double p = (m < 0 && am % 2 == 1) ? -leg(l, am) : leg(l, am);
      acc += f(c, l, m) * p * std::polar(1.0, m * alpha);
    }
  return acc;
}

cdouble so3_evaluate(const SpectralSO3& f, int c, const Rotation& r) {
  const int L = f.bandwidth();
  const WignerTable d(L, r.beta);
  cdouble acc{};
  for (int l = 0; l <= L; ++l)
    for (int m = -l; m <= l; ++m)
      for (int n = -l; n <= l; ++n)
        acc += f(c, l, m, n) * so3_norm(l) * std::polar(d(l, m, n), m * r.alpha + n * r.gamma);
  return acc;
}

}  // namespace ndlt
