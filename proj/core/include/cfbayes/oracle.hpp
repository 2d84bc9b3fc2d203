#pragma once

#include "cfbayes/distribution.hpp"
#include "cfbayes/event.hpp"
#include "cfbayes/problem.hpp"

namespace cfbayes {

/// Conditioning events at or below this mass are treated as impossible.
inline constexpr double kZeroMass = 1e-15;

// Exact queries by enumeration over the full table.

double marginal(const JointDistribution& dist, const Event& event);

/// P(target | given). Throws ZeroProbabilityEvidence when P(given) <= kZeroMass
/// and InvalidArgument when the two events share an attribute.
double conditional(const JointDistribution& dist, const Event& target, const Event& given);

/// P(h=true | observed evidence); with nothing observed this is P(h=true).
double predictive_solution(const JointDistribution& dist, const Problem& problem,
                           const EvidenceAssignment& assignment);

/// P(evidence_event | h = h_value).
double diagnostic_probability(const JointDistribution& dist, const Problem& problem,
                              const Event& evidence_event, bool h_value);

}  // namespace cfbayes
