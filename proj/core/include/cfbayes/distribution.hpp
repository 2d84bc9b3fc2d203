#pragma once

#include <span>
#include <string>
#include <vector>

#include "cfbayes/space.hpp"

namespace cfbayes {

/// Tolerances used when accepting a raw probability table.
inline constexpr double kNegativeMassSlack = 1e-15;
inline constexpr double kNormalizationWindow = 1e-9;

/// Dense joint probability table over a binary propositional space. Immutable
/// once constructed; the only way to obtain one is through validation.
class JointDistribution {
 public:
  /// Validates and (within the normalization window) renormalizes.
  /// Throws LengthMismatch, NegativeMass, MassNotOne, SpaceTooLarge.
  static JointDistribution validate(std::vector<std::string> attribute_names,
                                    std::vector<double> probabilities);

  const PropositionalSpace& space() const noexcept { return space_; }
  std::span<const double> probabilities() const noexcept { return probs_; }
  double operator[](StateIndex s) const { return probs_.at(s); }

 private:
  JointDistribution(PropositionalSpace space, std::vector<double> probs)
      : space_(std::move(space)), probs_(std::move(probs)) {}

  PropositionalSpace space_;
  std::vector<double> probs_;
};

}  // namespace cfbayes
