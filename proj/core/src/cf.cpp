#include "cfbayes/cf.hpp"

#include <algorithm>

#include "cfbayes/error.hpp"
#include "cfbayes/oracle.hpp"

namespace cfbayes {

double mb_of(double prior, double posterior) {
  if (prior == 1.0) return 1.0;
  return (std::max(posterior, prior) - prior) / (1.0 - prior);
}

double md_of(double prior, double posterior) {
  if (prior == 0.0) return 1.0;
  return (prior - std::min(posterior, prior)) / prior;
}

BeliefMeasures cf_direct(const JointDistribution& dist, const Problem& problem,
                         const Event& evidence_event) {
  if (evidence_event.mentions(problem.hypothesis())) {
    throw Error(ErrorKind::InvalidArgument, "evidence event must not mention the hypothesis");
  }
  const Event h = problem.hypothesis_event();
  const double prior = marginal(dist, h);
  const double posterior = evidence_event.empty() ? prior : conditional(dist, h, evidence_event);
  return BeliefMeasures::from(mb_of(prior, posterior), md_of(prior, posterior));
}

double combine_mb(double mb_a, double mb_b) { return mb_a + mb_b * (1.0 - mb_a); }

double combine_md(double md_a, double md_b) { return md_a + md_b * (1.0 - md_a); }

namespace {

BeliefMeasures apply_caps(double mb, double md) {
  if (mb == 1.0 && md == 1.0) {
    throw Error(ErrorKind::ContradictoryCertainty,
                "combined evidence is certain both for and against the hypothesis");
  }
  if (md == 1.0) return BeliefMeasures::from(0.0, 1.0);
  if (mb == 1.0) return BeliefMeasures::from(1.0, 0.0);
  return BeliefMeasures::from(mb, md);
}

}  // namespace

BeliefMeasures combine(const BeliefMeasures& a, const BeliefMeasures& b) {
  return apply_caps(combine_mb(a.mb, b.mb), combine_md(a.md, b.md));
}

BeliefMeasures fold_combine(std::span<const BeliefMeasures> measures) {
  if (measures.empty()) throw Error(ErrorKind::InvalidArgument, "nothing to combine");
  double mb = 0.0;
  double md = 0.0;
  for (const auto& m : measures) {
    mb = combine_mb(mb, m.mb);
    md = combine_md(md, m.md);
  }
  return apply_caps(mb, md);
}

}  // namespace cfbayes
