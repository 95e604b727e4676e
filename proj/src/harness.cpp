#include "ndlt/harness.hpp"

#include <cmath>
#include <iomanip>
#include <json.hpp>
#include <numbers>
#include <sstream>

#include "ndlt/errors.hpp"
#include "ndlt/signals.hpp"
#include "ndlt/transforms.hpp"

namespace ndlt {

const char* to_string(Precision p) { return p == Precision::Single ? "single" : "double"; }

Precision precision_from_string(const std::string& s) {
  if (s == "single") return Precision::Single;
  if (s == "double") return Precision::Double;
  throw std::invalid_argument("unknown precision: " + s);
}

std::vector<Rotation> random_rotations(int count, std::mt19937_64& rng) {
  std::vector<Rotation> out;
  for (int i = 0; i < count; ++i) out.push_back(random_rotation(rng));
  return out;
}

template <class Real, Manifold M>
BasicSpectrum<Real, M> random_filter(int bandwidth, std::mt19937_64& rng) {
  BasicSpectrum<double, M> phi(bandwidth);
  for (int l = 0; l <= bandwidth; ++l) {
    std::normal_distribution<double> g(0.0, std::sqrt(0.5 / (2 * l + 1)) / convolution_scale(l));
    for (auto& v : phi.degree(0, l)) v = cdouble(g(rng), g(rng));
  }
  return phi.template cast<Real>();
}

template <class Real, Manifold M>
BlockFilterTriple<Real, M> random_filter_triple(int bandwidth, std::mt19937_64& rng) {
  BlockFilterTriple<Real, M> t;
  for (auto& f : t.filters) f = random_filter<Real, M>(bandwidth, rng);
  return t;
}

namespace {

/// Omega-weighted squared distance between ReLU'd syntheses.
template <class Real>
double relu_distance(const BasicSpectralSO3<Real>& a, const BasicSpectralSO3<Real>& b,
                     const std::shared_ptr<const QuadratureRule>& rule) {
  auto ga = so3_synthesis(a, rule);
  auto gb = so3_synthesis(b, rule);
  relu_in_place(ga);
  relu_in_place(gb);
  const auto w = rule->weights();
  double acc = 0;
  for (int c = 0; c < ga.channels(); ++c) {
    auto x = ga.channel(c);
    auto y = gb.channel(c);
    for (std::size_t k = 0; k < x.size(); ++k) acc += w[k] * std::norm(std::complex<double>(x[k] - y[k]));
  }
  return acc;
}

struct TrialInputs {
  SpectralS2 f2;
  SpectralSO3 f3;
  BlockFilterTriple<double, Manifold::S2> t2;
  BlockFilterTriple<double, Manifold::SO3> t3;
  std::vector<Rotation> rotations;
};

TrialInputs make_trial(const AblationConfig& cfg, int trial) {
  std::seed_seq seq{cfg.seed, static_cast<std::uint64_t>(trial)};
  std::mt19937_64 rng(seq);
  TrialInputs in;
  in.f2 = random_spectrum<double, Manifold::S2>(cfg.bandwidth, rng);
  in.f3 = random_spectrum<double, Manifold::SO3>(cfg.bandwidth, rng);
  in.t2 = random_filter_triple<double, Manifold::S2>(cfg.bandwidth, rng);
  in.t3 = random_filter_triple<double, Manifold::SO3>(cfg.bandwidth, rng);
  in.rotations = random_rotations(cfg.rotations, rng);
  return in;
}

template <class Real, Manifold M>
BlockFilterTriple<Real, M> cast_triple(const BlockFilterTriple<double, M>& t) {
  BlockFilterTriple<Real, M> out;
  for (int i = 0; i < 3; ++i) out.filters[i] = t.filters[i].template cast<Real>();
  return out;
}

/// Per-trial maxima for the five rows at one precision.
template <class Real>
std::array<double, 5> ablation_trial(const AblationConfig& cfg, const TrialInputs& in,
                                     const std::shared_ptr<const QuadratureRule>& rule) {
  const Precision p = std::is_same_v<Real, float> ? Precision::Single : Precision::Double;
  const auto f2 = in.f2.cast<Real>();
  const auto f3 = in.f3.cast<Real>();
  const auto t2 = cast_triple<Real>(in.t2);
  const auto t3 = cast_triple<Real>(in.t3);
  const std::span<const Rotation> rots(in.rotations);
  const int j0 = cfg.j0;

  auto conv2 = [&](const BasicSpectralS2<Real>& f) { return needlet_block_convolve(decompose(f, j0), t2); };
  auto conv3 = [&](const BasicSpectralSO3<Real>& f) { return needlet_block_convolve(decompose(f, j0), t3); };
  auto relu = [&](const BasicSpectralSO3<Real>& f) { return reconstruct(conv3(f)); };
  const ShrinkageConfig sc{cfg.sigma, {}};
  auto shr = [&](const BasicSpectralSO3<Real>& f) { return shrink(conv3(f), sc); };
  auto pool = [&](const BasicSpectralSO3<Real>& f) { return spectral_pool(f); };
  auto full = [](const auto& a, const auto& b) { return squared_distance(a, b); };
  auto high = [](const auto& a, const auto& b) { return squared_distance_highpass(a, b); };
  auto spatial = [&](const auto& a, const auto& b) { return relu_distance(a, b, rule); };

  return {equivariance_error("S2-Conv", p, conv2, f2, rots, full).max_error,
          equivariance_error("SO(3)-Conv", p, conv3, f3, rots, full).max_error,
          equivariance_error("SO(3)+ReLU", p, relu, f3, rots, spatial).max_error,
          equivariance_error("SO(3)+Shrinkage", p, shr, f3, rots, high).max_error,
          equivariance_error("Pooling", p, pool, f3, rots, full).max_error};
}

}  // namespace

std::vector<AblationRow> ablation_table(const AblationConfig& cfg) {
  if (cfg.trials < 1 || cfg.rotations < 1) throw std::invalid_argument("ablation_table: trials and rotations must be >= 1");
  const auto rule = std::make_shared<const QuadratureRule>(so3_rule(cfg.bandwidth));
  std::vector<AblationRow> rows{{"S2-Conv"}, {"SO(3)-Conv"}, {"SO(3)+ReLU"}, {"SO(3)+Shrinkage"}, {"Pooling"}};
  for (int t = 0; t < cfg.trials; ++t) {
    const auto in = make_trial(cfg, t);
    const auto s = ablation_trial<float>(cfg, in, rule);
    const auto d = ablation_trial<double>(cfg, in, rule);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      rows[i].single_error += s[i] / cfg.trials;
      rows[i].double_error += d[i] / cfg.trials;
    }
  }
  return rows;
}

std::vector<SweepPoint> sigma_sweep(const SpectralSO3& f, std::span<const double> sigmas, const SweepConfig& cfg) {
  std::mt19937_64 rng(cfg.seed);
  const auto triple = random_filter_triple<double, Manifold::SO3>(f.bandwidth(), rng);
  const auto rotations = random_rotations(cfg.rotations, rng);
  const auto base = needlet_block_convolve(decompose(f, cfg.j0), triple);
  std::vector<NeedletSO3> rotated_first;
  for (const auto& r : rotations) rotated_first.push_back(needlet_block_convolve(decompose(rotate(f, r), cfg.j0), triple));
  const double before = squared_norm_highpass(base);
  std::vector<SweepPoint> out;
  for (double sigma : sigmas) {
    if (!(sigma > 0)) throw std::invalid_argument("sigma_sweep: sigma values must be positive");
    const ShrinkageConfig sc{sigma, {}};
    const auto shrunk = shrink(base, sc);
    SweepPoint p{sigma, 0.0, before > 0 ? 1.0 - squared_norm_highpass(shrunk) / before : 0.0};
    for (std::size_t i = 0; i < rotations.size(); ++i)
      p.error = std::max(p.error, squared_distance_highpass(shrink(rotated_first[i], sc), rotate(shrunk, rotations[i])));
    out.push_back(p);
  }
  return out;
}

std::vector<double> log_space(double from, double to, int points) {
  if (!(from > 0) || !(to > 0) || points < 1) throw std::invalid_argument("log_space: need positive bounds and points");
  std::vector<double> out;
  if (points == 1) return {from};
  const double a = std::log10(from), b = std::log10(to);
  for (int i = 0; i < points; ++i) out.push_back(std::pow(10.0, a + (b - a) * i / (points - 1)));
  return out;
}

std::vector<DecayPoint> decay_curve(const SpectralSO3& f, std::span<const int> j0s, double sigma, int rotations,
                                    std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const auto triple = random_filter_triple<double, Manifold::SO3>(f.bandwidth(), rng);
  const auto rots = random_rotations(rotations, rng);
  const ShrinkageConfig sc{sigma, highpass_count(decompose(f, 1))};
  std::vector<DecayPoint> out;
  for (int j0 : j0s) {
    auto pipeline = [&](const SpectralSO3& g) { return shrink(needlet_block_convolve(decompose(g, j0), triple), sc); };
    auto high = [](const NeedletSO3& a, const NeedletSO3& b) { return squared_distance_highpass(a, b); };
    out.push_back({j0, equivariance_error("decay", Precision::Double, pipeline, f, rots, high).max_error});
  }
  return out;
}

GridSignal molecule_potential_signal(std::span<const Atom> atoms, int center, double charge,
                                     std::shared_ptr<const QuadratureRule> rule) {
  if (center < 0 || center >= static_cast<int>(atoms.size())) throw std::invalid_argument("molecule: center out of range");
  if (!rule || rule->manifold() != Manifold::S2) throw std::invalid_argument("molecule: an S2 rule is required");
  const Atom& c = atoms[center];
  for (std::size_t j = 0; j < atoms.size(); ++j) {
    if (static_cast<int>(j) == center || atoms[j].charge != charge) continue;
    if (std::abs((atoms[j].position - c.position).norm() - 1.0) < 1e-9)
      throw GeometryError("molecule: atom lies on the unit sphere around the center");
  }
  GridSignal g(rule);
  auto out = g.channel(0);
  const auto pts = rule->points();
  for (std::size_t k = 0; k < pts.size(); ++k) {
    const Eigen::Vector3d x = c.position + unit_vector(pts[k].alpha, pts[k].beta);
    double u = 0;
    for (std::size_t j = 0; j < atoms.size(); ++j)
      if (static_cast<int>(j) != center && atoms[j].charge == charge) u += c.charge * charge / (x - atoms[j].position).norm();
    out[k] = u;
  }
  return g;
}

std::string format_ablation(const std::vector<AblationRow>& rows, const std::string& format) {
  std::ostringstream os;
  os << std::setprecision(3);
  if (format == "json") {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& r : rows) j.push_back({{"operator", r.label}, {"single", r.single_error}, {"double", r.double_error}});
    return j.dump(2) + "\n";
  }
  if (format == "csv") {
    os << "operator,single,double\n";
    for (const auto& r : rows) os << r.label << ',' << r.single_error << ',' << r.double_error << '\n';
    return os.str();
  }
  if (format != "text") throw std::invalid_argument("unknown format: " + format);
  os << std::left << std::setw(18) << "operator" << std::setw(12) << "single" << "double\n";
  for (const auto& r : rows) os << std::setw(18) << r.label << std::setw(12) << r.single_error << r.double_error << '\n';
  return os.str();
}

std::string format_sweep(const std::vector<SweepPoint>& points, const std::string& format) {
  std::ostringstream os;
  os << std::setprecision(6);
  if (format == "json") {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& p : points) j.push_back({{"sigma", p.sigma}, {"error", p.error}, {"compression", p.compression}});
    return j.dump(2) + "\n";
  }
  if (format == "csv") {
    os << "sigma,error,compression\n";
    for (const auto& p : points) os << p.sigma << ',' << p.error << ',' << p.compression << '\n';
    return os.str();
  }
  if (format != "text") throw std::invalid_argument("unknown format: " + format);
  os << std::left << std::setw(14) << "sigma" << std::setw(14) << "error" << "compression\n";
  for (const auto& p : points) os << std::setw(14) << p.sigma << std::setw(14) << p.error << p.compression << '\n';
  return os.str();
}

#define NDLT_INSTANTIATE(Real, M)                                                              \
  template BasicSpectrum<Real, M> random_filter(int, std::mt19937_64&);                        \
  template BlockFilterTriple<Real, M> random_filter_triple(int, std::mt19937_64&);

NDLT_INSTANTIATE(float, Manifold::S2)
NDLT_INSTANTIATE(float, Manifold::SO3)
NDLT_INSTANTIATE(double, Manifold::S2)
NDLT_INSTANTIATE(double, Manifold::SO3)
#undef NDLT_INSTANTIATE

}  // namespace ndlt
