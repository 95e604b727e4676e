#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "ndlt/convolution.hpp"
#include "ndlt/layers.hpp"

namespace ndlt {

enum class Precision { Single, Double };
const char* to_string(Precision p);
Precision precision_from_string(const std::string& s);

struct EquivarianceReport {
  std::string label;
  Precision precision = Precision::Double;
  int rotations = 0;
  double max_error = 0;
  double mean_error = 0;
};

/**
 * Squared discrepancy d(pipeline(rotate(f, R)), rotate(pipeline(f), R)) over
 * the given rotations. `distance` is any callable on two pipeline outputs.
 */
template <class In, class Pipeline, class Distance>
EquivarianceReport equivariance_error(std::string label, Precision precision, Pipeline&& pipeline, const In& f,
                                      std::span<const Rotation> rotations, Distance&& distance) {
  if (rotations.empty()) throw std::invalid_argument("equivariance_error: no rotations");
  EquivarianceReport r{std::move(label), precision, static_cast<int>(rotations.size()), 0, 0};
  const auto base = pipeline(f);
  for (const auto& rot : rotations) {
    const double e = distance(pipeline(rotate(f, rot)), rotate(base, rot));
    r.max_error = std::max(r.max_error, e);
    r.mean_error += e / rotations.size();
  }
  return r;
}

std::vector<Rotation> random_rotations(int count, std::mt19937_64& rng);

/**
 * Random filter with entries of variance 1/((2l+1) kappa_l^2), so that
 * convolving with it roughly preserves energy.
 */
template <class Real, Manifold M>
BasicSpectrum<Real, M> random_filter(int bandwidth, std::mt19937_64& rng);

template <class Real, Manifold M>
BlockFilterTriple<Real, M> random_filter_triple(int bandwidth, std::mt19937_64& rng);

struct AblationConfig {
  int bandwidth = 16;
  int j0 = 1;
  double sigma = 1e-3;
  int trials = 10;
  int rotations = 10;
  std::uint64_t seed = 1;
};

struct AblationRow {
  std::string label;
  double single_error = 0;  ///< mean over trials of the per-trial maximum
  double double_error = 0;
};

/// Rows S2-Conv, SO(3)-Conv, SO(3)+ReLU, SO(3)+Shrinkage, Pooling.
std::vector<AblationRow> ablation_table(const AblationConfig& cfg);

struct SweepPoint {
  double sigma = 0;
  double error = 0;        ///< max over rotations of the high-pass squared discrepancy
  double compression = 0;  ///< 1 - high-pass energy after / before shrinkage
};

struct SweepConfig {
  int j0 = 1;
  int rotations = 4;
  std::uint64_t seed = 1;
};

/// Equivariance error and compression of conv + shrink on f for each sigma.
std::vector<SweepPoint> sigma_sweep(const SpectralSO3& f, std::span<const double> sigmas, const SweepConfig& cfg);

/// Log-spaced values from `from` to `to` inclusive.
std::vector<double> log_space(double from, double to, int points);

struct DecayPoint {
  int j0 = 0;
  double error = 0;
};

/**
 * Shrinkage equivariance error of f for each coarse scale j0, with the
 * threshold fixed by sigma and the high-pass count of the finest
 * decomposition, so only the number of thresholded bands varies.
 */
std::vector<DecayPoint> decay_curve(const SpectralSO3& f, std::span<const int> j0s, double sigma, int rotations,
                                    std::uint64_t seed);

struct Atom {
  double charge = 0;
  Eigen::Vector3d position = Eigen::Vector3d::Zero();
};

/**
 * Samples of U_z(x) = sum over atoms j != center with charge z of
 * z_center z / |x - p_j| on the unit sphere around atom `center`.
 * Throws GeometryError if such an atom lies within 1e-9 of the sphere.
 */
GridSignal molecule_potential_signal(std::span<const Atom> atoms, int center, double charge,
                                     std::shared_ptr<const QuadratureRule> rule);

/// Table rendering as text, json or csv.
std::string format_ablation(const std::vector<AblationRow>& rows, const std::string& format);
std::string format_sweep(const std::vector<SweepPoint>& points, const std::string& format);

}  // namespace ndlt
