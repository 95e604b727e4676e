#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "ndlt/errors.hpp"
#include "ndlt/harness.hpp"
#include "ndlt/signals.hpp"
#include "ndlt/transforms.hpp"

namespace ndlt {
namespace {

TEST(Equivariance, IdentityPipelineIsExact) {
  std::mt19937_64 rng(1);
  const auto f = random_spectrum<double, Manifold::SO3>(8, rng);
  const auto rots = random_rotations(5, rng);
  auto id = [](const SpectralSO3& g) { return g; };
  auto dist = [](const SpectralSO3& a, const SpectralSO3& b) { return squared_distance(a, b); };
  const auto r = equivariance_error("identity", Precision::Double, id, f, std::span<const Rotation>(rots), dist);
  EXPECT_EQ(r.max_error, 0.0);
  EXPECT_EQ(r.rotations, 5);
  EXPECT_THROW(equivariance_error("x", Precision::Double, id, f, std::span<const Rotation>(), dist), std::invalid_argument);
}

TEST(Equivariance, ConvolutionAndShrinkage) {
  std::mt19937_64 rng(2);
  const int L = 16;
  const auto f = random_spectrum<double, Manifold::SO3>(L, rng);
  const auto t = random_filter_triple<double, Manifold::SO3>(L, rng);
  const auto rots = random_rotations(10, rng);
  auto conv = [&](const SpectralSO3& g) { return needlet_block_convolve(decompose(g, 1), t); };
  auto shr = [&](const SpectralSO3& g) { return shrink(conv(g), {1e-3, {}}); };
  auto high = [](const NeedletSO3& a, const NeedletSO3& b) { return squared_distance_highpass(a, b); };
  auto full = [](const NeedletSO3& a, const NeedletSO3& b) { return squared_distance(a, b); };
  const auto c = equivariance_error("conv", Precision::Double, conv, f, std::span<const Rotation>(rots), full);
  EXPECT_LT(c.max_error, 1e-12);
  EXPECT_GE(c.max_error, c.mean_error);
  const auto s = equivariance_error("shrink", Precision::Double, shr, f, std::span<const Rotation>(rots), high);
  EXPECT_GT(s.max_error, 5e-9);
  EXPECT_LT(s.max_error, 5e-5);
}

TEST(Equivariance, LinearPipelinesAtBandwidth32) {
  std::mt19937_64 rng(3);
  const auto f = random_spectrum<double, Manifold::S2>(32, rng);
  const auto phi = random_filter<double, Manifold::S2>(32, rng);
  const auto rots = random_rotations(3, rng);
  auto conv = [&](const SpectralS2& g) { return s2_convolve(g, phi); };
  auto pool = [](const SpectralS2& g) { return spectral_pool(g); };
  auto d3 = [](const SpectralSO3& a, const SpectralSO3& b) { return squared_distance(a, b); };
  auto d2 = [](const SpectralS2& a, const SpectralS2& b) { return squared_distance(a, b); };
  EXPECT_LT(equivariance_error("c", Precision::Double, conv, f, std::span<const Rotation>(rots), d3).max_error, 1e-12);
  EXPECT_EQ(equivariance_error("p", Precision::Double, pool, f, std::span<const Rotation>(rots), d2).max_error, 0.0);
}

TEST(RandomFilter, RoughlyNormPreserving) {
  std::mt19937_64 rng(4);
  const auto f = random_spectrum<double, Manifold::SO3>(16, rng);
  const auto phi = random_filter<double, Manifold::SO3>(16, rng);
  const double ratio = squared_norm(so3_convolve(f, phi)) / squared_norm(f);
  EXPECT_GT(ratio, 0.2);
  EXPECT_LT(ratio, 5.0);
}

TEST(Ablation, RowsAndLandmarks) {
  AblationConfig cfg;
  cfg.trials = 2;
  const auto rows = ablation_table(cfg);
  ASSERT_EQ(rows.size(), 5u);
  EXPECT_EQ(rows[0].label, "S2-Conv");
  EXPECT_EQ(rows[4].label, "Pooling");
  EXPECT_EQ(rows[4].single_error, 0.0);
  EXPECT_EQ(rows[4].double_error, 0.0);
  EXPECT_LE(rows[0].double_error, 1e-12);
  EXPECT_LT(rows[1].single_error, 1e-5);
  EXPECT_GT(rows[3].single_error, 2e-6);
  EXPECT_LT(rows[3].single_error, 2e-2);
  const auto again = ablation_table(cfg);
  for (std::size_t i = 0; i < rows.size(); ++i) EXPECT_EQ(rows[i].double_error, again[i].double_error);
}

TEST(Ablation, Formats) {
  const std::vector<AblationRow> rows{{"Pooling", 0.0, 0.0}};
  EXPECT_NE(format_ablation(rows, "text").find("Pooling"), std::string::npos);
  EXPECT_EQ(format_ablation(rows, "csv"), "operator,single,double\nPooling,0,0\n");
  EXPECT_NE(format_ablation(rows, "json").find("\"operator\": \"Pooling\""), std::string::npos);
  EXPECT_THROW(format_ablation(rows, "xml"), std::invalid_argument);
}

TEST(SigmaSweep, MonotoneAndSmallSigmaIsNegligible) {
  std::mt19937_64 rng(5);
  const auto f = random_spectrum<double, Manifold::SO3>(16, rng, 1.75);
  const auto sigmas = log_space(1e-7, 1, 8);
  const auto pts = sigma_sweep(f, sigmas, {1, 4, 5});
  ASSERT_EQ(pts.size(), sigmas.size());
  for (std::size_t i = 1; i < pts.size(); ++i) {
    EXPECT_GE(pts[i].error, pts[i - 1].error - 1e-15) << i;
    EXPECT_GE(pts[i].compression, pts[i - 1].compression);
  }
  EXPECT_LT(pts[0].error, 1e-6);
  EXPECT_GE(pts[0].compression, 0.0);
  EXPECT_LE(pts.back().compression, 1.0);
  const double bad[] = {0.0};
  EXPECT_THROW(sigma_sweep(f, bad, {}), std::invalid_argument);
}

TEST(SigmaSweep, LogSpace) {
  const auto v = log_space(1e-7, 1, 15);
  ASSERT_EQ(v.size(), 15u);
  EXPECT_NEAR(v.front(), 1e-7, 1e-22);
  EXPECT_NEAR(v.back(), 1.0, 1e-15);
  EXPECT_NEAR(v[2], 1e-6, 1e-20);
  EXPECT_THROW(log_space(0, 1, 3), std::invalid_argument);
}

TEST(DecayCurve, NonIncreasingInCoarseScale) {
  std::mt19937_64 rng(6);
  const auto f = random_spectrum<double, Manifold::SO3>(16, rng, 2.0);
  const int j0s[] = {1, 2, 3, 4};
  const auto pts = decay_curve(f, j0s, 0.01, 4, 6);
  for (std::size_t i = 1; i < pts.size(); ++i) EXPECT_LE(pts[i].error, pts[i - 1].error) << i;
  EXPECT_GT(pts.front().error, 0.0);
}

TEST(DecayCurve, ZeroWhenHighPassBandsAreEmpty) {
  // Degrees <= 4 lie below the support of every band w_j with j >= 4.
  std::mt19937_64 rng(7);
  const auto f = with_bandwidth(with_bandwidth(random_spectrum<double, Manifold::SO3>(16, rng), 4), 16);
  const int j0s[] = {3, 4};
  const auto pts = decay_curve(f, j0s, 0.01, 3, 7);
  EXPECT_GT(pts[0].error, 0.0);
  EXPECT_EQ(pts[1].error, 0.0);
}

TEST(Molecule, NoMatchingAtomsGivesZero) {
  const std::vector<Atom> atoms{{6.0, {0, 0, 0}}, {1.0, {2, 0, 0}}};
  auto rule = std::make_shared<const QuadratureRule>(s2_rule(8));
  const auto g = molecule_potential_signal(atoms, 0, 8.0, rule);
  for (auto v : g.samples()) EXPECT_EQ(v, cdouble{});
}

TEST(Molecule, PeaksTowardTheAtom) {
  const std::vector<Atom> atoms{{6.0, {0.5, 0.5, 0.5}}, {1.0, {0.5, 3.5, 0.5}}};
  auto rule = std::make_shared<const QuadratureRule>(s2_rule(12));
  const auto g = molecule_potential_signal(atoms, 0, 1.0, rule);
  const auto dir = Eigen::Vector3d(0, 1, 0);
  std::size_t best = 0, nearest = 0;
  double best_dot = -2;
  for (std::size_t k = 0; k < rule->size(); ++k) {
    if (g.channel(0)[k].real() > g.channel(0)[best].real()) best = k;
    const double d = unit_vector(rule->points()[k].alpha, rule->points()[k].beta).dot(dir);
    if (d > best_dot) best_dot = d, nearest = k;
  }
  EXPECT_EQ(best, nearest);
  // Direct evaluation at one point.
  const auto p = rule->points()[7];
  const Eigen::Vector3d x = atoms[0].position + unit_vector(p.alpha, p.beta);
  EXPECT_NEAR(g.channel(0)[7].real(), 6.0 / (x - atoms[1].position).norm(), 1e-14);
}

TEST(Molecule, RotationEquivariance) {
  std::mt19937_64 rng(8);
  const Eigen::Vector3d c(0.2, -0.1, 0.4);
  std::vector<Atom> atoms{{8.0, c}};
  std::uniform_real_distribution<double> u(-1, 1);
  for (int i = 0; i < 4; ++i) {
    Eigen::Vector3d d(u(rng), u(rng), u(rng));
    atoms.push_back({1.0, c + (3.0 + i) * d.normalized()});
  }
  auto rule = std::make_shared<const QuadratureRule>(s2_rule(24));
  const auto f = s2_analysis(molecule_potential_signal(atoms, 0, 1.0, rule));
  const Rotation r = random_rotation(rng);
  auto moved = atoms;
  for (auto& a : moved) a.position = c + r.matrix() * (a.position - c);
  const auto g = s2_analysis(molecule_potential_signal(moved, 0, 1.0, rule));
  EXPECT_LT(std::sqrt(squared_distance(g, rotate(f, r))), 1e-8);
}

TEST(Molecule, AtomOnSphereIsDegenerate) {
  const std::vector<Atom> atoms{{6.0, {0, 0, 0}}, {1.0, {0, 0, 1.0}}};
  auto rule = std::make_shared<const QuadratureRule>(s2_rule(4));
  EXPECT_THROW(molecule_potential_signal(atoms, 0, 1.0, rule), GeometryError);
  EXPECT_NO_THROW(molecule_potential_signal(atoms, 0, 2.0, rule));
  EXPECT_THROW(molecule_potential_signal(atoms, 3, 1.0, rule), std::invalid_argument);
}

}  // namespace
}  // namespace ndlt
