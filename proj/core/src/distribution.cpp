#include "cfbayes/distribution.hpp"

#include <cmath>
#include <numeric>

#include "cfbayes/error.hpp"

namespace cfbayes {

JointDistribution JointDistribution::validate(std::vector<std::string> attribute_names,
                                              std::vector<double> probabilities) {
  PropositionalSpace space(std::move(attribute_names));
  if (probabilities.size() != space.state_count()) {
    throw Error(ErrorKind::LengthMismatch,
                "expected " + std::to_string(space.state_count()) + " probabilities, got " +
                    std::to_string(probabilities.size()));
  }
  for (std::size_t i = 0; i < probabilities.size(); ++i) {
    const double p = probabilities[i];
    if (!std::isfinite(p)) {
      throw Error(ErrorKind::MalformedInput, "non-finite probability at index " + std::to_string(i));
    }
    if (p < -kNegativeMassSlack) {
      throw Error(ErrorKind::NegativeMass, "negative probability at index " + std::to_string(i));
    }
  }
  for (auto& p : probabilities) p = std::max(p, 0.0);
  const double sum = std::accumulate(probabilities.begin(), probabilities.end(), 0.0);
  if (std::abs(sum - 1.0) > kNormalizationWindow) {
    throw Error(ErrorKind::MassNotOne, "probabilities sum to " + std::to_string(sum));
  }
  if (sum != 1.0) {
    for (auto& p : probabilities) p /= sum;
  }
  return JointDistribution(std::move(space), std::move(probabilities));
}

}  // namespace cfbayes
