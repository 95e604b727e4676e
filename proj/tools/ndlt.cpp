#include <CLI11.hpp>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <json.hpp>
#include <random>
#include <sstream>

#include "ndlt/container.hpp"
#include "ndlt/errors.hpp"
#include "ndlt/filterbank.hpp"
#include "ndlt/harness.hpp"
#include "ndlt/signals.hpp"
#include "ndlt/transforms.hpp"

namespace {

using namespace ndlt;

constexpr int kExitParse = 2;
constexpr int kExitCorrupt = 3;
constexpr int kExitPrecondition = 4;
constexpr int kExitUsage = 64;

/// Wrong container kind for a subcommand, or an invalid flag combination.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Globals {
  std::uint64_t seed = 1;
  std::string precision = "double";
  std::string format = "text";
};

const char* kind_name(const ContainerValue& v) { return to_string(manifest_of(v).kind); }

template <class T>
const T& expect(const ContainerValue& v, const char* what) {
  if (const T* p = std::get_if<T>(&v)) return *p;
  throw UsageError(std::string(what) + ": unexpected container kind '" + kind_name(v) + "'");
}

/// Runs `op` on f in the requested precision and returns double-precision output.
template <class Spectrum, class Op>
auto in_precision(const Globals& g, const Spectrum& f, Op op) {
  if (g.precision == "single") {
    auto out = op(f.template cast<float>());
    if constexpr (requires { out.template cast<double>(); })
      return out.template cast<double>();
    else
      return out;
  }
  return op(f);
}

template <Manifold M>
BasicNeedletCoefficients<double, M> promote(const BasicNeedletCoefficients<float, M>& c) {
  BasicNeedletCoefficients<double, M> out;
  out.j0 = c.j0;
  out.j = c.j;
  out.bandwidth = c.bandwidth;
  out.lowpass = c.lowpass.template cast<double>();
  for (const auto& b : c.highpass) out.highpass.push_back(b.template cast<double>());
  return out;
}

template <Manifold M>
BasicNeedletCoefficients<float, M> demote(const BasicNeedletCoefficients<double, M>& c) {
  BasicNeedletCoefficients<float, M> out;
  out.j0 = c.j0;
  out.j = c.j;
  out.bandwidth = c.bandwidth;
  out.lowpass = c.lowpass.template cast<float>();
  for (const auto& b : c.highpass) out.highpass.push_back(b.template cast<float>());
  return out;
}

template <Manifold M, class Op>
BasicNeedletCoefficients<double, M> needlet_in_precision(const Globals& g, const BasicNeedletCoefficients<double, M>& c,
                                                         Op op) {
  if (g.precision == "single") return promote(op(demote(c)));
  return op(c);
}

void emit(const std::string& text, const std::string& out) {
  if (out.empty())
    std::cout << text;
  else
    write_text_file(text, out);
}

std::vector<Atom> read_atoms(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot open " + path);
  std::vector<Atom> atoms;
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream ls(line);
    Atom a;
    std::string extra;
    if (!(ls >> a.charge >> a.position.x() >> a.position.y() >> a.position.z()) || (ls >> extra))
      throw ParseError(path + ":" + std::to_string(lineno) + ": expected 'charge x y z'");
    atoms.push_back(a);
  }
  return atoms;
}

std::string format_filters(int grid, const std::string& format) {
  const FilterKind kinds[] = {FilterKind::A,     FilterKind::B1,    FilterKind::B2,
                              FilterKind::Alpha, FilterKind::Beta1, FilterKind::Beta2};
  std::ostringstream os;
  os << std::setprecision(17);
  if (format == "json") {
    nlohmann::json j;
    for (int i = 0; i < grid; ++i) {
      const double xi = grid == 1 ? 0.0 : static_cast<double>(i) / (grid - 1);
      j["xi"].push_back(xi);
      for (auto k : kinds) j[to_string(k)].push_back(profile(k, xi));
    }
    return j.dump(2) + "\n";
  }
  const char sep = format == "csv" ? ',' : ' ';
  if (format != "csv" && format != "text") throw UsageError("unknown format: " + format);
  os << "xi";
  for (auto k : kinds) os << sep << to_string(k);
  os << '\n';
  for (int i = 0; i < grid; ++i) {
    const double xi = grid == 1 ? 0.0 : static_cast<double>(i) / (grid - 1);
    os << xi;
    for (auto k : kinds) os << sep << profile(k, xi);
    os << '\n';
  }
  return os.str();
}

struct PartitionReport {
  double partition = 0;
  double refinement = 0;
  double two_scale = 0;
};

PartitionReport partition_report(int grid) {
  PartitionReport r;
  for (int i = 0; i < grid; ++i) {
    const double xi = 0.5 * i / std::max(grid - 1, 1);
    const double a = filter_hat(FilterKind::A, xi), b1 = filter_hat(FilterKind::B1, xi), b2 = filter_hat(FilterKind::B2, xi);
    const double al = generator_hat(FilterKind::Alpha, xi);
    r.partition = std::max(r.partition, std::abs(a * a + b1 * b1 + b2 * b2 - 1));
    r.refinement = std::max({r.refinement, std::abs(generator_hat(FilterKind::Alpha, 2 * xi) - a * al),
                             std::abs(generator_hat(FilterKind::Beta1, 2 * xi) - b1 * al),
                             std::abs(generator_hat(FilterKind::Beta2, 2 * xi) - b2 * al)});
    const double A2 = generator_hat(FilterKind::Alpha, 2 * xi), B1 = generator_hat(FilterKind::Beta1, 2 * xi),
                 B2 = generator_hat(FilterKind::Beta2, 2 * xi);
    r.two_scale = std::max(r.two_scale, std::abs(A2 * A2 + B1 * B1 + B2 * B2 - al * al));
  }
  return r;
}

std::string format_pairs(const std::vector<std::pair<std::string, double>>& kv, const std::string& format) {
  std::ostringstream os;
  os << std::setprecision(6);
  if (format == "json") {
    nlohmann::json j;
    for (const auto& [k, v] : kv) j[k] = v;
    return j.dump(2) + "\n";
  }
  if (format == "csv") {
    for (std::size_t i = 0; i < kv.size(); ++i) os << (i ? "," : "") << kv[i].first;
    os << '\n';
    for (std::size_t i = 0; i < kv.size(); ++i) os << (i ? "," : "") << kv[i].second;
    os << '\n';
    return os.str();
  }
  if (format != "text") throw UsageError("unknown format: " + format);
  for (const auto& [k, v] : kv) os << std::left << std::setw(24) << k << v << '\n';
  return os.str();
}

int run(int argc, char** argv) {
  CLI::App app{"Needlet transforms, convolutions and equivariance checks on S2 and SO(3)"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--seed", g.seed, "Random seed")->capture_default_str();
  app.add_option("--precision", g.precision, "Arithmetic precision")
      ->check(CLI::IsMember({"single", "double"}))
      ->capture_default_str();
  app.add_option("--format", g.format, "Report format")->check(CLI::IsMember({"text", "json", "csv"}))->capture_default_str();

  std::function<void()> action;
  auto sub = [&](const std::string& name, const std::string& help) {
    auto* s = app.add_subcommand(name, help);
    s->fallthrough();
    return s;
  };
  auto manifold_opt = [](CLI::App* s, std::string& m) {
    return s->add_option("--manifold", m, "s2 or so3")->check(CLI::IsMember({"s2", "so3"}))->capture_default_str();
  };

  // quadrature
  std::string q_manifold = "s2", q_out;
  int q_bandwidth = 0;
  auto* quad = sub("quadrature", "Write a Gauss-Legendre quadrature rule");
  manifold_opt(quad, q_manifold);
  quad->add_option("--bandwidth,-L", q_bandwidth, "Bandwidth L")->required();
  quad->add_option("--out,-o", q_out, "Output container");
  quad->callback([&] {
    action = [&] {
      const QuadratureRule rule(manifold_from_string(q_manifold), q_bandwidth);
      if (!q_out.empty()) write_container(rule, q_out);
      double wsum = 0;
      for (double w : rule.weights()) wsum += w;
      emit(format_pairs({{"points", double(rule.size())},
                         {"exactness_degree", double(rule.exactness_degree())},
                         {"weight_sum", wsum}},
                        g.format),
           "");
    };
  });

  // gen
  auto* gen = sub("gen", "Generate signals");
  gen->require_subcommand(1);
  std::string gen_manifold = "s2", gen_out, atoms_path;
  int gen_bandwidth = 16, gen_channels = 1, h_l = 0, h_m = 0, h_n = 0, center = 0;
  double decay = 1.0, charge = 1.0;
  auto* gr = gen->add_subcommand("random", "Random band-limited spectrum");
  gr->fallthrough();
  manifold_opt(gr, gen_manifold);
  gr->add_option("--bandwidth,-L", gen_bandwidth)->capture_default_str();
  gr->add_option("--decay", decay, "Amplitude decay exponent of (1+l)")->capture_default_str();
  gr->add_option("--channels", gen_channels)->capture_default_str()->check(CLI::PositiveNumber);
  gr->add_option("--out,-o", gen_out)->required();
  gr->callback([&] {
    action = [&] {
      std::mt19937_64 rng(g.seed);
      if (gen_manifold == "s2")
        write_container(random_spectrum<double, Manifold::S2>(gen_bandwidth, rng, decay, gen_channels), gen_out);
      else
        write_container(random_spectrum<double, Manifold::SO3>(gen_bandwidth, rng, decay, gen_channels), gen_out);
    };
  });
  auto* gh = gen->add_subcommand("harmonic", "Single unit coefficient");
  gh->fallthrough();
  manifold_opt(gh, gen_manifold);
  auto* bw_h = gh->add_option("--bandwidth,-L", gen_bandwidth, "Defaults to l");
  gh->add_option("--l", h_l)->required();
  gh->add_option("--m", h_m)->required();
  auto* n_opt = gh->add_option("--n", h_n, "Column index (so3 only)");
  gh->add_option("--out,-o", gen_out)->required();
  gh->callback([&] {
    action = [&] {
      const int L = bw_h->count() ? gen_bandwidth : h_l;
      if (h_l < 0 || std::abs(h_m) > h_l || std::abs(h_n) > h_l || L < h_l)
        throw UsageError("gen harmonic: need 0 <= |m|, |n| <= l <= bandwidth");
      if (gen_manifold == "s2") {
        if (n_opt->count()) throw UsageError("gen harmonic: --n only applies to so3");
        SpectralS2 f(L);
        f(0, h_l, h_m) = 1.0;
        write_container(f, gen_out);
      } else {
        SpectralSO3 f(L);
        f(0, h_l, h_m, h_n) = 1.0;
        write_container(f, gen_out);
      }
    };
  });
  auto* gm = gen->add_subcommand("molecule", "Potential signal on the unit sphere around an atom");
  gm->fallthrough();
  gm->add_option("--atoms", atoms_path, "Text file with 'charge x y z' per line")->required();
  gm->add_option("--center", center)->required();
  gm->add_option("--charge", charge)->required();
  gm->add_option("--bandwidth,-L", gen_bandwidth)->capture_default_str();
  gm->add_option("--out,-o", gen_out)->required();
  gm->callback([&] {
    action = [&] {
      const auto atoms = read_atoms(atoms_path);
      auto rule = std::make_shared<const QuadratureRule>(s2_rule(gen_bandwidth));
      write_container(molecule_potential_signal(atoms, center, charge, rule), gen_out);
    };
  });

  // transform
  std::string in, out;
  int t_bandwidth = -1;
  auto* tr = sub("transform", "Grid to spectrum (analysis) or spectrum to grid (synthesis)");
  tr->add_option("--in,-i", in)->required();
  tr->add_option("--out,-o", out)->required();
  tr->add_option("--bandwidth,-L", t_bandwidth, "Analysis bandwidth or synthesis rule bandwidth");
  tr->callback([&] {
    action = [&] {
      const auto v = read_container(in);
      if (const auto* grid = std::get_if<GridSignal>(&v)) {
        const bool s2 = grid->rule().manifold() == Manifold::S2;
        if (g.precision == "single") {
          BasicGridSignal<float> gf(grid->rule_ptr(), grid->channels());
          for (std::size_t k = 0; k < gf.samples().size(); ++k) gf.samples()[k] = std::complex<float>(grid->samples()[k]);
          if (s2)
            write_container(s2_analysis(gf, t_bandwidth).cast<double>(), out);
          else
            write_container(so3_analysis(gf, t_bandwidth).cast<double>(), out);
        } else if (s2) {
          write_container(s2_analysis(*grid, t_bandwidth), out);
        } else {
          write_container(so3_analysis(*grid, t_bandwidth), out);
        }
        return;
      }
      auto synth = [&](const auto& f) {
        using Spectrum = std::decay_t<decltype(f)>;
        const int L = t_bandwidth >= 0 ? t_bandwidth : std::max(f.bandwidth(), 1);
        auto rule = std::make_shared<const QuadratureRule>(Spectrum::manifold, L);
        auto one = [&](const auto& spectrum) {
          if constexpr (Spectrum::manifold == Manifold::S2)
            return s2_synthesis(spectrum, rule);
          else
            return so3_synthesis(spectrum, rule);
        };
        GridSignal result(rule, f.channels());
        if (g.precision == "single") {
          const auto gs = one(f.template cast<float>());
          for (std::size_t k = 0; k < gs.samples().size(); ++k) result.samples()[k] = cdouble(gs.samples()[k]);
        } else {
          result = one(f);
        }
        write_container(result, out);
      };
      if (const auto* f = std::get_if<SpectralS2>(&v))
        synth(*f);
      else if (const auto* f3 = std::get_if<SpectralSO3>(&v))
        synth(*f3);
      else
        throw UsageError(std::string("transform: unexpected container kind '") + kind_name(v) + "'");
    };
  });

  // decompose / reconstruct
  int j0 = 1;
  auto* de = sub("decompose", "Multi-level needlet decomposition");
  de->add_option("--in,-i", in)->required();
  de->add_option("--out,-o", out)->required();
  de->add_option("--j0", j0, "Coarse scale")->capture_default_str();
  de->callback([&] {
    action = [&] {
      const auto v = read_container(in);
      if (const auto* f = std::get_if<SpectralS2>(&v)) {
        write_container(g.precision == "single" ? promote(decompose(f->cast<float>(), j0)) : decompose(*f, j0), out);
      } else if (const auto* f3 = std::get_if<SpectralSO3>(&v)) {
        write_container(g.precision == "single" ? promote(decompose(f3->cast<float>(), j0)) : decompose(*f3, j0), out);
      } else {
        throw UsageError(std::string("decompose: unexpected container kind '") + kind_name(v) + "'");
      }
    };
  });
  auto* re = sub("reconstruct", "Inverse needlet transform");
  re->add_option("--in,-i", in)->required();
  re->add_option("--out,-o", out)->required();
  re->callback([&] {
    action = [&] {
      const auto v = read_container(in);
      if (const auto* c = std::get_if<NeedletS2>(&v))
        write_container(g.precision == "single" ? reconstruct(demote(*c)).cast<double>() : reconstruct(*c), out);
      else
        write_container(g.precision == "single" ? reconstruct(demote(expect<NeedletSO3>(v, "reconstruct"))).cast<double>()
                                                : reconstruct(expect<NeedletSO3>(v, "reconstruct")),
                        out);
    };
  });

  // convolve
  std::string signal, filter;
  auto* cv = sub("convolve", "Spectral convolution (S2 x S2 -> SO(3), SO(3) x SO(3) -> SO(3))");
  cv->add_option("--signal", signal)->required();
  cv->add_option("--filter", filter)->required();
  cv->add_option("--out,-o", out)->required();
  cv->callback([&] {
    action = [&] {
      const auto f = read_container(signal);
      const auto phi = read_container(filter);
      if (const auto* f2 = std::get_if<SpectralS2>(&f)) {
        const auto& p2 = expect<SpectralS2>(phi, "convolve --filter");
        write_container(in_precision(g, *f2, [&](const auto& x) {
                          using R = typename std::decay_t<decltype(x)>::real_type;
                          return s2_convolve(x, p2.cast<R>());
                        }),
                        out);
      } else {
        const auto& f3 = expect<SpectralSO3>(f, "convolve --signal");
        const auto& p3 = expect<SpectralSO3>(phi, "convolve --filter");
        write_container(in_precision(g, f3, [&](const auto& x) {
                          using R = typename std::decay_t<decltype(x)>::real_type;
                          return so3_convolve(x, p3.cast<R>());
                        }),
                        out);
      }
    };
  });

  // rotate
  double alpha = 0, beta = 0, gamma = 0;
  auto* ro = sub("rotate", "Rotate a spectrum or needlet coefficients by ZYZ Euler angles");
  ro->add_option("--in,-i", in)->required();
  ro->add_option("--out,-o", out)->required();
  ro->add_option("--alpha", alpha)->capture_default_str();
  ro->add_option("--beta", beta)->capture_default_str();
  ro->add_option("--gamma", gamma)->capture_default_str();
  ro->callback([&] {
    action = [&] {
      const Rotation r(alpha, beta, gamma);
      const auto v = read_container(in);
      auto spin = [&](const auto& x) { return rotate(x, r); };
      if (const auto* f = std::get_if<SpectralS2>(&v))
        write_container(in_precision(g, *f, spin), out);
      else if (const auto* f3 = std::get_if<SpectralSO3>(&v))
        write_container(in_precision(g, *f3, spin), out);
      else if (const auto* c2 = std::get_if<NeedletS2>(&v))
        write_container(needlet_in_precision(g, *c2, spin), out);
      else if (const auto* c3 = std::get_if<NeedletSO3>(&v))
        write_container(needlet_in_precision(g, *c3, spin), out);
      else
        throw UsageError(std::string("rotate: unexpected container kind '") + kind_name(v) + "'");
    };
  });

  // shrink / pool
  double sigma = 0;
  std::size_t count = 0;
  auto* sh = sub("shrink", "Soft-threshold the high-pass needlet bands");
  sh->add_option("--in,-i", in)->required();
  sh->add_option("--out,-o", out)->required();
  sh->add_option("--sigma", sigma)->required()->check(CLI::NonNegativeNumber);
  auto* count_opt = sh->add_option("--count", count, "Coefficient count N in the threshold")->check(CLI::PositiveNumber);
  sh->callback([&] {
    action = [&] {
      ShrinkageConfig cfg{sigma, {}};
      if (count_opt->count()) cfg.count = count;
      const auto v = read_container(in);
      auto op = [&](const auto& c) { return shrink(c, cfg); };
      if (const auto* c2 = std::get_if<NeedletS2>(&v))
        write_container(needlet_in_precision(g, *c2, op), out);
      else
        write_container(needlet_in_precision(g, expect<NeedletSO3>(v, "shrink"), op), out);
    };
  });
  auto* po = sub("pool", "Keep degrees up to half the bandwidth");
  po->add_option("--in,-i", in)->required();
  po->add_option("--out,-o", out)->required();
  po->callback([&] {
    action = [&] {
      const auto v = read_container(in);
      auto op = [](const auto& x) { return spectral_pool(x); };
      if (const auto* f = std::get_if<SpectralS2>(&v))
        write_container(in_precision(g, *f, op), out);
      else
        write_container(in_precision(g, expect<SpectralSO3>(v, "pool"), op), out);
    };
  });

  // filters
  int grid = 1001;
  std::string f_out;
  auto* fi = sub("filters", "Sample the filter bank and generator profiles on [0, 1]");
  fi->add_option("--grid", grid)->capture_default_str()->check(CLI::PositiveNumber);
  fi->add_option("--out,-o", f_out);
  fi->callback([&] { action = [&] { emit(format_filters(grid, g.format), f_out); }; });

  // verify
  auto* ve = sub("verify", "Numerical checks");
  ve->require_subcommand(1);
  int v_bandwidth = 16, trials = 10, rotations = 10, v_j0 = 1;
  double v_sigma = 1e-3;
  std::string v_manifold = "s2";
  auto* vq = ve->add_subcommand("equivariance", "Equivariance ablation table");
  vq->fallthrough();
  vq->add_option("--bandwidth,-L", v_bandwidth)->capture_default_str();
  vq->add_option("--sigma", v_sigma)->capture_default_str()->check(CLI::NonNegativeNumber);
  vq->add_option("--trials", trials)->capture_default_str()->check(CLI::PositiveNumber);
  vq->add_option("--rotations", rotations)->capture_default_str()->check(CLI::PositiveNumber);
  vq->add_option("--j0", v_j0)->capture_default_str();
  vq->callback([&] {
    action = [&] {
      AblationConfig cfg{v_bandwidth, v_j0, v_sigma, trials, rotations, g.seed};
      emit(format_ablation(ablation_table(cfg), g.format), "");
    };
  });
  auto* vt = ve->add_subcommand("tight-frame", "Reconstruction, energy and frame-operator residuals");
  vt->fallthrough();
  manifold_opt(vt, v_manifold);
  vt->add_option("--bandwidth,-L", v_bandwidth)->capture_default_str();
  vt->add_option("--trials", trials)->capture_default_str()->check(CLI::PositiveNumber);
  vt->add_option("--j0", v_j0)->capture_default_str();
  vt->callback([&] {
    action = [&] {
      const auto r = verify_tightness(manifold_from_string(v_manifold), v_bandwidth, v_j0, trials, g.seed);
      emit(format_pairs({{"reconstruction", r.reconstruction},
                         {"level_energy", r.level_energy},
                         {"spatial_energy", r.spatial_energy},
                         {"frame_operator", r.frame_operator}},
                        g.format),
           "");
    };
  });
  int p_grid = 10000;
  auto* vp = ve->add_subcommand("partition", "Filter-bank identities on a grid");
  vp->fallthrough();
  vp->add_option("--grid", p_grid)->capture_default_str()->check(CLI::PositiveNumber);
  vp->callback([&] {
    action = [&] {
      const auto r = partition_report(p_grid);
      emit(format_pairs({{"partition_of_unity", r.partition}, {"refinement", r.refinement}, {"two_scale_energy", r.two_scale}},
                        g.format),
           "");
    };
  });

  // sweep-sigma
  double s_from = 1e-7, s_to = 1.0, s_decay = 1.75;
  int s_points = 15, s_bandwidth = 64, s_j0 = 1, s_rotations = 10;
  std::string s_out;
  auto* sw = sub("sweep-sigma", "Equivariance error and compression against the shrinkage level");
  sw->add_option("--from", s_from)->capture_default_str()->check(CLI::PositiveNumber);
  sw->add_option("--to", s_to)->capture_default_str()->check(CLI::PositiveNumber);
  sw->add_option("--points", s_points)->capture_default_str()->check(CLI::PositiveNumber);
  sw->add_option("--bandwidth,-L", s_bandwidth)->capture_default_str();
  sw->add_option("--decay", s_decay)->capture_default_str();
  sw->add_option("--j0", s_j0)->capture_default_str();
  sw->add_option("--rotations", s_rotations)->capture_default_str()->check(CLI::PositiveNumber);
  sw->add_option("--out,-o", s_out, "CSV output (sigma,error,compression)");
  sw->callback([&] {
    action = [&] {
      std::mt19937_64 rng(g.seed);
      const auto f = random_spectrum<double, Manifold::SO3>(s_bandwidth, rng, s_decay);
      const auto sigmas = log_space(s_from, s_to, s_points);
      const auto pts = sigma_sweep(f, sigmas, {s_j0, s_rotations, g.seed});
      emit(format_sweep(pts, s_out.empty() ? g.format : "csv"), s_out);
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }
  if (action) action();
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const ndlt::ParseError& e) {
    std::cerr << "ndlt: parse error: " << e.what() << '\n';
    return kExitParse;
  } catch (const ndlt::CorruptionError& e) {
    std::cerr << "ndlt: corrupt container: " << e.what() << '\n';
    return kExitCorrupt;
  } catch (const UsageError& e) {
    std::cerr << "ndlt: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ndlt::GeometryError& e) {
    std::cerr << "ndlt: " << e.what() << '\n';
    return kExitPrecondition;
  } catch (const std::invalid_argument& e) {
    std::cerr << "ndlt: " << e.what() << '\n';
    return kExitPrecondition;
  } catch (const std::exception& e) {
    std::cerr << "ndlt: " << e.what() << '\n';
    return 1;
  }
}
