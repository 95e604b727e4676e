#pragma once

#include <Eigen/Core>
#include <algorithm>
#include <complex>
#include <cstddef>
#include <memory>
#include <span>
#include <stdexcept>
#include <vector>

#include "ndlt/quadrature.hpp"

namespace ndlt {

/**
 * Generalized Fourier coefficients on S2 or SO(3), per channel.
 *
 * S2 stores f_{l,m} l-major with m = -l..l. SO(3) stores one
 * (2l+1)x(2l+1) block per degree, row-major with rows m and columns n.
 * In both layouts all entries of one degree are contiguous, so degree-wise
 * operators can be written once over degree().
 */
template <class Real, Manifold M>
class BasicSpectrum {
 public:
  using real_type = Real;
  using value_type = std::complex<Real>;
  using Block = Eigen::Matrix<value_type, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
  static constexpr Manifold manifold = M;

  BasicSpectrum() = default;
  explicit BasicSpectrum(int bandwidth, int channels = 1)
      : bandwidth_(bandwidth), channels_(channels) {
    if (bandwidth < 0) throw std::invalid_argument("spectrum: negative bandwidth");
    if (channels < 1) throw std::invalid_argument("spectrum: channels must be >= 1");
    data_.assign(per_channel() * channels, value_type{});
  }

  int bandwidth() const { return bandwidth_; }
  int channels() const { return channels_; }

  static std::size_t degree_size(int l) {
    const std::size_t w = 2 * static_cast<std::size_t>(l) + 1;
    return M == Manifold::S2 ? w : w * w;
  }
  static std::size_t degree_offset(int l) {
    const std::size_t ll = l;
    return M == Manifold::S2 ? ll * ll : ll * (4 * ll * ll - 1) / 3;
  }
  /// Entries per channel for bandwidth L.
  static std::size_t count_for(int bandwidth) { return degree_offset(bandwidth + 1); }
  std::size_t per_channel() const { return count_for(bandwidth_); }

  std::span<value_type> data() { return data_; }
  std::span<const value_type> data() const { return data_; }
  std::span<value_type> channel(int c) { return data().subspan(c * per_channel(), per_channel()); }
  std::span<const value_type> channel(int c) const { return data().subspan(c * per_channel(), per_channel()); }
  std::span<value_type> degree(int c, int l) { return channel(c).subspan(degree_offset(l), degree_size(l)); }
  std::span<const value_type> degree(int c, int l) const {
    return channel(c).subspan(degree_offset(l), degree_size(l));
  }

  value_type& operator()(int c, int l, int m) requires(M == Manifold::S2) { return degree(c, l)[m + l]; }
  const value_type& operator()(int c, int l, int m) const requires(M == Manifold::S2) {
    return degree(c, l)[m + l];
  }
  value_type& operator()(int c, int l, int m, int n) requires(M == Manifold::SO3) {
    return degree(c, l)[static_cast<std::size_t>(m + l) * (2 * l + 1) + (n + l)];
  }
  const value_type& operator()(int c, int l, int m, int n) const requires(M == Manifold::SO3) {
    return degree(c, l)[static_cast<std::size_t>(m + l) * (2 * l + 1) + (n + l)];
  }

  Eigen::Map<Block> block(int c, int l) requires(M == Manifold::SO3) {
    return Eigen::Map<Block>(degree(c, l).data(), 2 * l + 1, 2 * l + 1);
  }
  Eigen::Map<const Block> block(int c, int l) const requires(M == Manifold::SO3) {
    return Eigen::Map<const Block>(degree(c, l).data(), 2 * l + 1, 2 * l + 1);
  }

  template <class Other>
  BasicSpectrum<Other, M> cast() const {
    BasicSpectrum<Other, M> out(bandwidth_, channels_);
    auto dst = out.data();
    for (std::size_t i = 0; i < data_.size(); ++i) dst[i] = std::complex<Other>(data_[i]);
    return out;
  }

  bool operator==(const BasicSpectrum&) const = default;

 private:
  int bandwidth_ = 0;
  int channels_ = 1;
  std::vector<value_type> data_;
};

template <class Real>
using BasicSpectralS2 = BasicSpectrum<Real, Manifold::S2>;
template <class Real>
using BasicSpectralSO3 = BasicSpectrum<Real, Manifold::SO3>;
using SpectralS2 = BasicSpectralS2<double>;
using SpectralSO3 = BasicSpectralSO3<double>;

template <class Real, Manifold M>
double squared_norm(const BasicSpectrum<Real, M>& f) {
  double acc = 0.0;
  for (const auto& v : f.data()) acc += std::norm(std::complex<double>(v));
  return acc;
}

/// Sum of squared differences; spectra of different bandwidth are compared
/// as if zero-padded.
template <class Real, Manifold M>
double squared_distance(const BasicSpectrum<Real, M>& a, const BasicSpectrum<Real, M>& b) {
  if (a.channels() != b.channels()) throw std::invalid_argument("squared_distance: channel mismatch");
  const int lmax = std::max(a.bandwidth(), b.bandwidth());
  double acc = 0.0;
  for (int c = 0; c < a.channels(); ++c)
    for (int l = 0; l <= lmax; ++l) {
      const std::size_t n = BasicSpectrum<Real, M>::degree_size(l);
      for (std::size_t i = 0; i < n; ++i) {
        const std::complex<double> x = l <= a.bandwidth() ? std::complex<double>(a.degree(c, l)[i]) : 0.0;
        const std::complex<double> y = l <= b.bandwidth() ? std::complex<double>(b.degree(c, l)[i]) : 0.0;
        acc += std::norm(x - y);
      }
    }
  return acc;
}

/// Copy of `f` keeping degrees <= bandwidth (zero-padding when larger).
template <class Real, Manifold M>
BasicSpectrum<Real, M> with_bandwidth(const BasicSpectrum<Real, M>& f, int bandwidth) {
  BasicSpectrum<Real, M> out(bandwidth, f.channels());
  const int lmax = std::min(bandwidth, f.bandwidth());
  for (int c = 0; c < f.channels(); ++c)
    for (int l = 0; l <= lmax; ++l) {
      auto src = f.degree(c, l);
      std::copy(src.begin(), src.end(), out.degree(c, l).begin());
    }
  return out;
}

/**
 * True when the coefficients are those of a real-valued function:
 * f_{l,-m} = (-1)^m conj(f_{l,m}) on S2 and
 * F_{-m,-n} = (-1)^{m-n} conj(F_{m,n}) on SO(3).
 */
template <class Real, Manifold M>
bool is_conjugate_symmetric(const BasicSpectrum<Real, M>& f, double tol) {
  for (int c = 0; c < f.channels(); ++c)
    for (int l = 0; l <= f.bandwidth(); ++l) {
      if constexpr (M == Manifold::S2) {
        for (int m = -l; m <= l; ++m) {
          const double sign = (m % 2 == 0) ? 1.0 : -1.0;
          const auto want = sign * std::conj(std::complex<double>(f(c, l, m)));
          if (std::abs(std::complex<double>(f(c, l, -m)) - want) > tol) return false;
        }
      } else {
        for (int m = -l; m <= l; ++m)
          for (int n = -l; n <= l; ++n) {
            const double sign = ((m - n) % 2 == 0) ? 1.0 : -1.0;
            const auto want = sign * std::conj(std::complex<double>(f(c, l, m, n)));
            if (std::abs(std::complex<double>(f(c, l, -m, -n)) - want) > tol) return false;
          }
      }
    }
  return true;
}

/// Multi-channel complex samples on the points of a quadrature rule,
/// channel-major in the rule's point order.
template <class Real>
class BasicGridSignal {
 public:
  using value_type = std::complex<Real>;

  BasicGridSignal(std::shared_ptr<const QuadratureRule> rule, int channels = 1)
      : rule_(std::move(rule)), channels_(channels) {
    if (!rule_) throw std::invalid_argument("grid signal: null rule");
    if (channels < 1) throw std::invalid_argument("grid signal: channels must be >= 1");
    samples_.assign(rule_->size() * channels, value_type{});
  }

  const QuadratureRule& rule() const { return *rule_; }
  const std::shared_ptr<const QuadratureRule>& rule_ptr() const { return rule_; }
  int channels() const { return channels_; }
  std::size_t points() const { return rule_->size(); }

  std::span<value_type> samples() { return samples_; }
  std::span<const value_type> samples() const { return samples_; }
  std::span<value_type> channel(int c) { return samples().subspan(c * points(), points()); }
  std::span<const value_type> channel(int c) const { return samples().subspan(c * points(), points()); }

 private:
  std::shared_ptr<const QuadratureRule> rule_;
  int channels_;
  std::vector<value_type> samples_;
};

using GridSignal = BasicGridSignal<double>;

}  // namespace ndlt
