#include "ndlt/harmonics.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ndlt {

using std::numbers::pi;

double assoc_legendre(int l, int m, double t) {
  if (m < 0 || m > l) throw std::invalid_argument("assoc_legendre: requires 0 <= m <= l");
  const double somx2 = std::sqrt((1.0 - t) * (1.0 + t));
  double pmm = 1.0;
  double fact = 1.0;
  for (int i = 1; i <= m; ++i) {
    pmm *= -fact * somx2;
    fact += 2.0;
  }
  if (l == m) return pmm;
  double pmmp1 = t * (2 * m + 1) * pmm;
  if (l == m + 1) return pmmp1;
  double pll = 0.0;
  for (int ll = m + 2; ll <= l; ++ll) {
    pll = ((2 * ll - 1) * t * pmmp1 - (ll + m - 1) * pmm) / (ll - m);
    pmm = pmmp1;
    pmmp1 = pll;
  }
  return pll;
}

NormalizedLegendre::NormalizedLegendre(int max_degree, double t)
    : max_degree_(max_degree), values_(static_cast<std::size_t>(max_degree + 1) * (max_degree + 2) / 2) {
  const double s = std::sqrt((1.0 - t) * (1.0 + t));
  auto at = [this](int l, int m) -> double& { return values_[l * (l + 1) / 2 + m]; };

  double diag = 1.0 / std::sqrt(4 * pi);
  for (int m = 0; m <= max_degree; ++m) {
    if (m > 0) diag *= -std::sqrt((2.0 * m + 1) / (2.0 * m)) * s;
    at(m, m) = diag;
    if (m + 1 > max_degree) continue;
    at(m + 1, m) = t * std::sqrt(2.0 * m + 3) * diag;
    for (int l = m + 2; l <= max_degree; ++l) {
      const double a = std::sqrt((4.0 * l * l - 1) / (double(l) * l - double(m) * m));
      const double b = std::sqrt(((l - 1.0) * (l - 1.0) - double(m) * m) / (4.0 * (l - 1.0) * (l - 1.0) - 1));
      at(l, m) = a * (t * at(l - 1, m) - b * at(l - 2, m));
    }
  }
}

cdouble sph_harm(int l, int m, double alpha, double beta) {
  if (l < 0 || std::abs(m) > l) throw std::invalid_argument("sph_harm: requires |m| <= l");
  const NormalizedLegendre leg(l, std::cos(beta));
  const int am = std::abs(m);
  const double v = leg(l, am);
  const cdouble y = std::polar(v, am * alpha);
  if (m >= 0) return y;
  return (am % 2 == 0 ? 1.0 : -1.0) * std::conj(y);
}

namespace {

// d^{l0}_{mn} where l0 = max(|m|, |n|), from the closed-form edge rows.
double wigner_edge(int m, int n, double log_cos, double log_sin, bool cos_zero, bool sin_zero) {
  const int l0 = std::max(std::abs(m), std::abs(n));
  double sign = 1.0;
  // Reduce to the m == l0 row: d_{mn} = (-1)^{n-m} d_{nm}, d_{-l0,n} = (-1)^{l0+n} d_{l0,-n}.
  if (std::abs(m) < std::abs(n)) {
    if ((n - m) % 2 != 0) sign = -sign;
    std::swap(m, n);
  }
  if (m < 0) {
    if ((l0 + n) % 2 != 0) sign = -sign;
    n = -n;
  }
  // d^{l0}_{l0,n} = sqrt(C(2 l0, l0+n)) cos^{l0+n}(b/2) (-sin(b/2))^{l0-n}.
  const int pc = l0 + n;
  const int ps = l0 - n;
  if ((cos_zero && pc > 0) || (sin_zero && ps > 0)) return 0.0;
  if (ps % 2 != 0) sign = -sign;
  double log_mag = 0.5 * (std::lgamma(2.0 * l0 + 1) - std::lgamma(pc + 1.0) - std::lgamma(ps + 1.0));
  if (pc > 0) log_mag += pc * log_cos;
  if (ps > 0) log_mag += ps * log_sin;
  return sign * std::exp(log_mag);
}

}  // namespace

WignerTable::WignerTable(int max_degree, double beta)
    : max_degree_(max_degree), data_(offset(max_degree + 1), 0.0) {
  if (max_degree < 0) throw std::invalid_argument("WignerTable: negative degree");
  const double ch = std::cos(beta / 2);
  const double sh = std::sin(beta / 2);
  const bool cos_zero = std::abs(ch) < 1e-300;
  const bool sin_zero = std::abs(sh) < 1e-300;
  const double log_cos = cos_zero ? 0.0 : std::log(std::abs(ch));
  const double log_sin = sin_zero ? 0.0 : std::log(std::abs(sh));
  const double cb = std::cos(beta);

  auto slot = [this](int l, int m, int n) -> double& {
    return data_[offset(l) + static_cast<std::size_t>(m + l) * (2 * l + 1) + (n + l)];
  };

  const int L = max_degree;
  for (int m = -L; m <= L; ++m) {
    for (int n = -L; n <= L; ++n) {
      const int l0 = std::max(std::abs(m), std::abs(n));
      double prev = 0.0;
      double cur = wigner_edge(m, n, log_cos, log_sin, cos_zero, sin_zero);
      slot(l0, m, n) = cur;
      const double mn = double(m) * n;
      for (int l = l0; l < L; ++l) {
        const double lp1 = l + 1.0;
        const double scale =
            lp1 * (2.0 * l + 1) / std::sqrt((lp1 * lp1 - double(m) * m) * (lp1 * lp1 - double(n) * n));
        const double shift = l == 0 ? 0.0 : mn / (double(l) * lp1);
        const double back =
            l == 0 ? 0.0 : std::sqrt((double(l) * l - double(m) * m) * (double(l) * l - double(n) * n)) / (l * (2.0 * l + 1));
        const double next = scale * ((cb - shift) * cur - back * prev);
        prev = cur;
        cur = next;
        slot(l + 1, m, n) = cur;
      }
    }
  }
}

Eigen::Map<const RealMatrix> WignerTable::block(int l) const {
  return Eigen::Map<const RealMatrix>(data_.data() + offset(l), 2 * l + 1, 2 * l + 1);
}

RealMatrix wigner_d(int l, double beta) {
  if (l < 0) throw std::invalid_argument("wigner_d: negative degree");
  const WignerTable table(l, beta);
  return table.block(l);
}

namespace {

ComplexMatrix dress(const Eigen::Map<const RealMatrix>& d, int l, const Rotation& r) {
  ComplexMatrix out(2 * l + 1, 2 * l + 1);
  for (int m = -l; m <= l; ++m) {
    const cdouble em = std::polar(1.0, -m * r.alpha);
    for (int n = -l; n <= l; ++n)
      out(m + l, n + l) = em * d(m + l, n + l) * std::polar(1.0, -n * r.gamma);
  }
  return out;
}

}  // namespace

ComplexMatrix wigner_D(int l, const Rotation& r) {
  const WignerTable table(l, r.beta);
  return dress(table.block(l), l, r);
}

std::vector<ComplexMatrix> wigner_D_blocks(int max_degree, const Rotation& r) {
  const WignerTable table(max_degree, r.beta);
  std::vector<ComplexMatrix> out;
  out.reserve(max_degree + 1);
  for (int l = 0; l <= max_degree; ++l) out.push_back(dress(table.block(l), l, r));
  return out;
}

}  // namespace ndlt
