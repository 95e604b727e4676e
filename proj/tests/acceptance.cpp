// End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
// exits nonzero if any fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iterator>
#include <random>
#include <string>
#include <vector>

#include "ndlt/container.hpp"
#include "ndlt/filterbank.hpp"
#include "ndlt/harness.hpp"
#include "ndlt/needlet.hpp"
#include "ndlt/signals.hpp"
#include "ndlt/transforms.hpp"

using namespace ndlt;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond) ok = false;
    if (!detail.empty()) detail += "; ";
    detail += (cond ? "" : "!") + what;
  }
};

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

int failures = 0;

void criterion(int id, const std::string& name, double limit_seconds, const std::function<void(Outcome&)>& body) {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.require(false, std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  o.require(secs < limit_seconds, "runtime " + sci(secs) + "s < " + sci(limit_seconds) + "s");
  if (!o.ok) ++failures;
  std::printf("%s criterion %d (%s): %s\n", o.ok ? "PASS" : "FAIL", id, name.c_str(), o.detail.c_str());
  std::fflush(stdout);
}

template <Manifold M>
double roundtrip_error(int L, int trials, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto rule = std::make_shared<const QuadratureRule>(M, L);
  double worst = 0;
  for (int t = 0; t < trials; ++t) {
    const auto f = random_spectrum<double, M>(L, rng);
    BasicSpectrum<double, M> back;
    if constexpr (M == Manifold::S2)
      back = s2_analysis(s2_synthesis(f, rule), L);
    else
      back = so3_analysis(so3_synthesis(f, rule), L);
    worst = std::max(worst, std::sqrt(squared_distance(f, back) / squared_norm(f)));
  }
  return worst;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream is(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(is), {}};
}

}  // namespace

int main() {
  criterion(1, "filter identities", 1.0, [](Outcome& o) {
    const int n = 10000;
    double partition = 0, refinement = 0;
    for (int i = 0; i < n; ++i) {
      const double xi = 0.5 * i / (n - 1);
      const double a = filter_hat(FilterKind::A, xi), b1 = filter_hat(FilterKind::B1, xi),
                   b2 = filter_hat(FilterKind::B2, xi), al = generator_hat(FilterKind::Alpha, xi);
      partition = std::max(partition, std::abs(a * a + b1 * b1 + b2 * b2 - 1));
      refinement = std::max({refinement, std::abs(generator_hat(FilterKind::Alpha, 2 * xi) - a * al),
                             std::abs(generator_hat(FilterKind::Beta1, 2 * xi) - b1 * al),
                             std::abs(generator_hat(FilterKind::Beta2, 2 * xi) - b2 * al)});
    }
    o.require(partition < 1e-14, "partition " + sci(partition) + " < 1e-14");
    o.require(refinement < 1e-14, "refinement " + sci(refinement) + " < 1e-14");
  });

  criterion(2, "transform round trips", 30.0, [](Outcome& o) {
    const double s2 = roundtrip_error<Manifold::S2>(32, 5, 11);
    const double so3 = roundtrip_error<Manifold::SO3>(16, 5, 12);
    o.require(s2 < 1e-11, "S2 L=32 " + sci(s2) + " < 1e-11");
    o.require(so3 < 1e-10, "SO3 L=16 " + sci(so3) + " < 1e-10");
  });

  criterion(3, "tight frame", 60.0, [](Outcome& o) {
    double recon = 0, level = 0, spatial = 0;
    for (Manifold m : {Manifold::S2, Manifold::SO3})
      for (int L : {4, 8, 16, 32})
        for (int j0 = 1; j0 < finest_scale(L); ++j0) {
          const auto r = verify_tightness(m, L, j0, 10, 100 + L + j0);
          recon = std::max(recon, r.reconstruction);
          level = std::max(level, r.level_energy);
          spatial = std::max(spatial, r.spatial_energy);
        }
    o.require(recon < 1e-12, "reconstruction " + sci(recon) + " < 1e-12");
    o.require(level < 1e-12, "per-level energy " + sci(level) + " < 1e-12");
    o.require(spatial < 1e-12, "spatial energy " + sci(spatial) + " < 1e-12");
  });

  criterion(4, "equivariance ablation", 300.0, [](Outcome& o) {
    const auto rows = ablation_table(AblationConfig{});
    for (const auto& r : rows) {
      const std::string tag = r.label + " " + sci(r.double_error) + "/" + sci(r.single_error);
      if (r.label == "Pooling") {
        o.require(r.double_error == 0 && r.single_error == 0, tag + " == 0");
      } else if (r.label == "SO(3)+Shrinkage") {
        o.require(r.double_error >= 5e-9 && r.double_error <= 5e-5, tag + " double in [5e-9, 5e-5]");
        o.require(r.single_error >= 2e-6 && r.single_error <= 2e-2, tag + " single in [2e-6, 2e-2]");
      } else {
        o.require(r.double_error < 1e-12 && r.single_error < 1e-5, tag + " < 1e-12/1e-5");
      }
    }
    o.require(rows.size() == 5, "five rows");
  });

  criterion(5, "sigma sensitivity", 300.0, [](Outcome& o) {
    std::mt19937_64 rng(1);
    const auto f = random_spectrum<double, Manifold::SO3>(64, rng, 1.75);
    const auto sigmas = log_space(1e-7, 1, 15);
    const auto pts = sigma_sweep(f, sigmas, {1, 10, 1});
    double small = 0;
    bool monotone = true;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (pts[i].sigma <= 1e-6 * (1 + 1e-12)) small = std::max(small, pts[i].error);
      if (i > 0 && pts[i].error < pts[i - 1].error) monotone = false;
    }
    const auto at = [&](double s) {
      return *std::min_element(pts.begin(), pts.end(), [&](const SweepPoint& a, const SweepPoint& b) {
        return std::abs(std::log(a.sigma / s)) < std::abs(std::log(b.sigma / s));
      });
    };
    const auto p = at(0.1);
    o.require(small < 1e-6, "error(sigma<=1e-6) " + sci(small) + " < 1e-6");
    o.require(p.error >= 0.01 && p.error <= 1, "error(" + sci(p.sigma) + ") " + sci(p.error) + " in [0.01, 1]");
    o.require(p.compression >= 0.10 && p.compression <= 0.30,
              "compression " + sci(p.compression) + " in [0.10, 0.30]");
    o.require(monotone, "monotone in sigma");
  });

  criterion(6, "coarse-scale decay", 120.0, [](Outcome& o) {
    const int L = 32;
    std::mt19937_64 rng(6);
    const auto f = random_spectrum<double, Manifold::SO3>(L, rng, 2.0);
    std::vector<int> j0s;
    for (int j0 = 1; j0 < finest_scale(L); ++j0) j0s.push_back(j0);
    const auto pts = decay_curve(f, j0s, 0.01, 10, 6);
    bool nonincreasing = true;
    std::string curve;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (i > 0 && pts[i].error > pts[i - 1].error) nonincreasing = false;
      curve += (i ? "," : "") + sci(pts[i].error);
    }
    o.require(nonincreasing, "non-increasing [" + curve + "]");

    // Degrees <= 4 lie below every band w_j with j >= 4.
    const auto low = with_bandwidth(with_bandwidth(random_spectrum<double, Manifold::SO3>(L, rng, 2.0), 4), L);
    const int empty[] = {4, 5};
    double worst = 0;
    for (const auto& p : decay_curve(low, empty, 0.01, 10, 7)) worst = std::max(worst, p.error);
    o.require(worst == 0, "empty high-pass error " + sci(worst) + " == 0");
  });

  criterion(7, "convolution oracle", 60.0, [](Outcome& o) {
    std::mt19937_64 rng(7);
    double conv = 0;
    for (int L : {1, 4, 8}) {
      const auto f = random_spectrum<double, Manifold::S2>(L, rng);
      const auto phi = random_spectrum<double, Manifold::S2>(L, rng);
      const auto out = s2_convolve(f, phi);
      const auto s2 = s2_rule(L);
      std::vector<cdouble> fx;
      for (const auto& p : s2.points()) fx.push_back(s2_evaluate(f, 0, p.alpha, p.beta));
      for (int t = 0; t < 20; ++t) {
        const Rotation r = random_rotation(rng);
        const Eigen::Matrix3d rinv = r.inverse().matrix();
        cdouble acc{};
        for (std::size_t i = 0; i < s2.size(); ++i) {
          const auto p = s2.points()[i];
          const auto x = spherical_angles(rinv * unit_vector(p.alpha, p.beta));
          acc += s2.weights()[i] * std::conj(s2_evaluate(phi, 0, x.alpha, x.beta)) * fx[i];
        }
        conv = std::max(conv, std::abs(acc - so3_evaluate(out, 0, r)));
      }
    }
    double hom = 0;
    for (int t = 0; t < 20; ++t) {
      const Rotation r1 = random_rotation(rng), r2 = random_rotation(rng);
      for (int l = 0; l <= 8; ++l)
        hom = std::max(hom, (wigner_D(l, r1) * wigner_D(l, r2) - wigner_D(l, compose(r1, r2))).norm());
    }
    o.require(conv < 1e-8, "brute-force convolution " + sci(conv) + " < 1e-8");
    o.require(hom < 1e-11, "Wigner homomorphism " + sci(hom) + " < 1e-11");
  });

  criterion(8, "container I/O", 30.0, [](Outcome& o) {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "ndlt_acceptance";
    fs::remove_all(dir);
    fs::create_directories(dir);
    const auto produce = [](std::uint64_t seed) {
      std::mt19937_64 rng(seed);
      const auto f2 = random_spectrum<double, Manifold::S2>(8, rng, 1.0, 2);
      const auto f3 = random_spectrum<double, Manifold::SO3>(8, rng);
      auto rule = std::make_shared<const QuadratureRule>(s2_rule(8));
      return std::vector<ContainerValue>{f2,
                                         f3,
                                         decompose(f2, 1),
                                         decompose(f3, 2),
                                         s2_synthesis(f2, rule),
                                         QuadratureRule(Manifold::SO3, 4)};
    };
    const auto a = produce(42), b = produce(42);
    bool identical = true, seeded = true;
    for (std::size_t i = 0; i < a.size(); ++i) {
      const auto p1 = dir / ("a" + std::to_string(i)), p2 = dir / ("b" + std::to_string(i));
      const auto p3 = dir / ("c" + std::to_string(i));
      write_container(a[i], p1.string());
      write_container(read_container(p1.string()), p2.string());
      write_container(b[i], p3.string());
      identical = identical && slurp(p1) == slurp(p2);
      seeded = seeded && slurp(p1) == slurp(p3);
    }
    fs::remove_all(dir);
    o.require(identical, "write/read/write byte-identical for all kinds");
    o.require(seeded, "fixed seed byte-identical");
  });

  std::printf("%s: %d criteria failed\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
