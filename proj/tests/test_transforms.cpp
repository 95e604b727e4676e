#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "ndlt/errors.hpp"
#include "ndlt/transforms.hpp"
#include "oracles.hpp"

namespace ndlt {
namespace {

using std::numbers::pi;

TEST(S2Transform, UnitCoefficientSynthesizesHarmonic) {
  auto rule = std::make_shared<const QuadratureRule>(s2_rule(8));
  SpectralS2 f(8);
  f(0, 5, -3) = 1.0;
  const auto g = s2_synthesis(f, rule);
  for (std::size_t k = 0; k < rule->size(); ++k) {
    const auto p = rule->points()[k];
    EXPECT_NEAR(std::abs(g.channel(0)[k] - sph_harm(5, -3, p.alpha, p.beta)), 0.0, 1e-13);
  }
}

TEST(S2Transform, ConstantHasOnlyMonopole) {
  auto rule = std::make_shared<const QuadratureRule>(s2_rule(6));
  GridSignal g(rule);
  for (auto& v : g.samples()) v = 1.0;
  const auto f = s2_analysis(g);
  EXPECT_NEAR(std::abs(f(0, 0, 0) - std::sqrt(4 * pi)), 0.0, 1e-12);
  EXPECT_NEAR(squared_norm(f), 4 * pi, 1e-11);
}

TEST(S2Transform, RoundTripAndParseval) {
  std::mt19937_64 rng(21);
  for (int L : {1, 5, 32}) {
    auto rule = std::make_shared<const QuadratureRule>(s2_rule(L));
    const auto f = oracle::random_spectrum<SpectralS2>(L, rng, 1.0, 2);
    const auto g = s2_synthesis(f, rule);
    const auto back = s2_analysis(g);
    EXPECT_LT(oracle::relative_error(back, f), 1e-12) << "L=" << L;
    double grid = 0;
    for (int c = 0; c < 2; ++c)
      for (std::size_t k = 0; k < rule->size(); ++k) grid += rule->weights()[k] * std::norm(g.channel(c)[k]);
    EXPECT_NEAR(grid / squared_norm(f), 1.0, 1e-12);
  }
}

TEST(S2Transform, MatchesDirectEvaluation) {
  std::mt19937_64 rng(5);
  auto rule = std::make_shared<const QuadratureRule>(s2_rule(7));
  const auto f = oracle::random_spectrum<SpectralS2>(7, rng);
  const auto g = s2_synthesis(f, rule);
  for (std::size_t k = 0; k < rule->size(); k += 7) {
    const auto p = rule->points()[k];
    EXPECT_NEAR(std::abs(g.channel(0)[k] - s2_evaluate(f, 0, p.alpha, p.beta)), 0.0, 1e-12);
  }
}

TEST(S2Transform, LowerBandwidthAnalysisTruncates) {
  std::mt19937_64 rng(8);
  auto rule = std::make_shared<const QuadratureRule>(s2_rule(10));
  const auto f = oracle::random_spectrum<SpectralS2>(10, rng);
  const auto low = s2_analysis(s2_synthesis(f, rule), 4);
  EXPECT_LT(oracle::relative_error(low, with_bandwidth(f, 4)), 1e-12);
  EXPECT_THROW(s2_analysis(s2_synthesis(f, rule), 11), PreconditionError);
}

TEST(S2Transform, RejectsWrongManifold) {
  auto rule = std::make_shared<const QuadratureRule>(so3_rule(2));
  GridSignal g(rule);
  EXPECT_THROW(s2_analysis(g), std::invalid_argument);
}

TEST(S2Transform, SinglePrecision) {
  std::mt19937_64 rng(2);
  auto rule = std::make_shared<const QuadratureRule>(s2_rule(16));
  const auto f = oracle::random_spectrum<SpectralS2>(16, rng).cast<float>();
  const auto back = s2_analysis(s2_synthesis(f, rule));
  EXPECT_LT(std::sqrt(squared_distance(back, f) / squared_norm(f)), 1e-5);
}

TEST(SO3Transform, UnitCoefficientSynthesizesBasis) {
  auto rule = std::make_shared<const QuadratureRule>(so3_rule(4));
  SpectralSO3 f(4);
  f(0, 3, 2, -1) = 1.0;
  const auto g = so3_synthesis(f, rule);
  for (std::size_t k = 0; k < rule->size(); ++k) {
    const auto p = rule->points()[k];
    EXPECT_NEAR(std::abs(g.channel(0)[k] - so3_basis(3, 2, -1, Rotation(p.alpha, p.beta, p.gamma))), 0.0, 1e-13);
  }
}

TEST(SO3Transform, ConstantHasOnlyDegreeZero) {
  auto rule = std::make_shared<const QuadratureRule>(so3_rule(3));
  GridSignal g(rule);
  for (auto& v : g.samples()) v = 1.0;
  const auto f = so3_analysis(g);
  EXPECT_NEAR(std::abs(f(0, 0, 0, 0) - std::sqrt(8 * pi * pi)), 0.0, 1e-11);
  EXPECT_NEAR(squared_norm(f), 8 * pi * pi, 1e-10);
}

TEST(SO3Transform, RoundTripAndParseval) {
  std::mt19937_64 rng(31);
  for (int L : {1, 4, 16}) {
    auto rule = std::make_shared<const QuadratureRule>(so3_rule(L));
    const auto f = oracle::random_spectrum<SpectralSO3>(L, rng, 1.0, 2);
    const auto g = so3_synthesis(f, rule);
    EXPECT_LT(oracle::relative_error(so3_analysis(g), f), 1e-12) << "L=" << L;
    double grid = 0;
    for (std::size_t k = 0; k < g.samples().size(); ++k) grid += rule->weights()[k % rule->size()] * std::norm(g.samples()[k]);
    EXPECT_NEAR(grid / squared_norm(f), 1.0, 1e-12);
  }
}

TEST(SO3Transform, MatchesDirectEvaluation) {
  std::mt19937_64 rng(6);
  auto rule = std::make_shared<const QuadratureRule>(so3_rule(5));
  const auto f = oracle::random_spectrum<SpectralSO3>(5, rng);
  const auto g = so3_synthesis(f, rule);
  for (std::size_t k = 0; k < rule->size(); k += 13) {
    const auto p = rule->points()[k];
    EXPECT_NEAR(std::abs(g.channel(0)[k] - so3_evaluate(f, 0, Rotation(p.alpha, p.beta, p.gamma))), 0.0, 1e-12);
  }
}

// f(R^-1 x) sampled directly equals the synthesis of D(R) f_hat.
TEST(RotationConvention, S2ResamplingMatchesSpectralAction) {
  std::mt19937_64 rng(41);
  const int L = 6;
  auto rule = std::make_shared<const QuadratureRule>(s2_rule(L));
  const auto f = oracle::random_spectrum<SpectralS2>(L, rng);
  for (int trial = 0; trial < 5; ++trial) {
    const Rotation r = random_rotation(rng);
    const auto blocks = wigner_D_blocks(L, r);
    SpectralS2 rotated(L);
    for (int l = 0; l <= L; ++l) {
      Eigen::Map<const Eigen::VectorXcd> in(f.degree(0, l).data(), 2 * l + 1);
      Eigen::Map<Eigen::VectorXcd>(rotated.degree(0, l).data(), 2 * l + 1) = blocks[l] * in;
    }
    const Eigen::Matrix3d rinv = r.inverse().matrix();
    for (std::size_t k = 0; k < rule->size(); k += 5) {
      const auto p = rule->points()[k];
      const auto q = spherical_angles(rinv * unit_vector(p.alpha, p.beta));
      EXPECT_NEAR(std::abs(s2_evaluate(rotated, 0, p.alpha, p.beta) - s2_evaluate(f, 0, q.alpha, q.beta)), 0.0, 1e-11);
    }
  }
}

TEST(RotationConvention, SO3ResamplingMatchesSpectralAction) {
  std::mt19937_64 rng(43);
  const int L = 4;
  const auto f = oracle::random_spectrum<SpectralSO3>(L, rng);
  for (int trial = 0; trial < 5; ++trial) {
    const Rotation r = random_rotation(rng);
    const auto blocks = wigner_D_blocks(L, r);
    SpectralSO3 rotated(L);
    for (int l = 0; l <= L; ++l) rotated.block(0, l) = blocks[l] * f.block(0, l);
    for (int s = 0; s < 6; ++s) {
      const Rotation x = random_rotation(rng);
      EXPECT_NEAR(std::abs(so3_evaluate(rotated, 0, x) - so3_evaluate(f, 0, compose(r.inverse(), x))), 0.0, 1e-11);
    }
  }
}

}  // namespace
}  // namespace ndlt
