#pragma once

#include <cstdint>
#include <random>
#include <string_view>

#include "cfbayes/distribution.hpp"

namespace cfbayes {

enum class Family { Dirichlet, Product, NaiveBayes, XorNoise };

std::string_view to_string(Family family);
/// Throws UnknownFamily.
Family parse_family(std::string_view text);

/// Reproducible generator: std::mt19937_64 seeded with splitmix64(seed).
/// Uniforms use the top 53 bits of each draw, so streams are identical on
/// every conforming standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  std::uint64_t next();
  /// Uniform on [0, 1).
  double uniform();
  double uniform(double lo, double hi);
  /// Exp(1) = Gamma(1, 1).
  double exponential();

 private:
  std::mt19937_64 engine_;
};

std::uint64_t splitmix64(std::uint64_t x);

/// Random table over attributes "x0".."x{k-1}" with attribute 0 acting as
/// the hypothesis:
///   dirichlet   - symmetric Dirichlet(1) over all 2^k states
///   product     - independent attributes, marginals U[0.05, 0.95]
///   naive-bayes - P(h), P(ei|h), P(ei|!h) each U[0.05, 0.95]
///   xor-noise   - (x1, x2) uniform, h = x1 xor x2 flipped with prob eps ~ U[0, 0.2],
///                 remaining attributes independent with marginals U[0.05, 0.95]
/// Throws SpaceTooLarge (k > 20), InvalidSpace (k < 2), InvalidArgument
/// (xor-noise with k < 3).
JointDistribution sample_distribution(Family family, std::size_t k, std::uint64_t seed);

}  // namespace cfbayes
