#include "cfbayes/oracle.hpp"

#include "cfbayes/error.hpp"

namespace cfbayes {
namespace {

double mass(const JointDistribution& dist, const EventMask& m) {
  const auto probs = dist.probabilities();
  double total = 0.0;
  for (StateIndex s = 0; s < probs.size(); ++s) {
    if (m.matches(s)) total += probs[s];
  }
  return total;
}

}  // namespace

double marginal(const JointDistribution& dist, const Event& event) {
  if (event.empty()) return 1.0;
  return mass(dist, event_mask(dist.space(), event));
}

double conditional(const JointDistribution& dist, const Event& target, const Event& given) {
  for (const auto& lit : target.literals()) {
    if (given.mentions(lit.attr)) {
      throw Error(ErrorKind::InvalidArgument, "target and conditioning events share an attribute");
    }
  }
  const double denom = marginal(dist, given);
  if (denom <= kZeroMass) {
    throw Error(ErrorKind::ZeroProbabilityEvidence, "conditioning event has zero probability");
  }
  return marginal(dist, target & given) / denom;
}

double predictive_solution(const JointDistribution& dist, const Problem& problem,
                           const EvidenceAssignment& assignment) {
  assignment.check_against(problem);
  const Event h = problem.hypothesis_event();
  const Event observed = assignment.observed_event();
  if (observed.empty()) return marginal(dist, h);
  return conditional(dist, h, observed);
}

double diagnostic_probability(const JointDistribution& dist, const Problem& problem,
                              const Event& evidence_event, bool h_value) {
  if (evidence_event.mentions(problem.hypothesis())) {
    throw Error(ErrorKind::InvalidArgument, "diagnostic event must not mention the hypothesis");
  }
  return conditional(dist, evidence_event, problem.hypothesis_event(h_value));
}

}  // namespace cfbayes
