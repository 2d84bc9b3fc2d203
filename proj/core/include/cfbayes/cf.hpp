#pragma once

#include <span>

#include "cfbayes/distribution.hpp"
#include "cfbayes/event.hpp"
#include "cfbayes/problem.hpp"

namespace cfbayes {

/// Measure of increased belief, increased disbelief and their difference.
struct BeliefMeasures {
  double mb = 0.0;
  double md = 0.0;
  double cf = 0.0;

  static BeliefMeasures from(double mb, double md) { return {mb, md, mb - md}; }

  bool operator==(const BeliefMeasures&) const = default;
};

/// MB from a prior and posterior of h: 1 if prior == 1, else the normalized
/// increase (max(posterior, prior) - prior) / (1 - prior).
double mb_of(double prior, double posterior);

/// MD from a prior and posterior of h: 1 if prior == 0, else the normalized
/// decrease (prior - min(posterior, prior)) / prior.
double md_of(double prior, double posterior);

/// Belief measures of h=true given `evidence_event`, computed from the table.
BeliefMeasures cf_direct(const JointDistribution& dist, const Problem& problem,
                         const Event& evidence_event);

/// Probabilistic sum x + y(1 - x).
double combine_mb(double mb_a, double mb_b);
double combine_md(double md_a, double md_b);

/// Parallel combination of two pieces of evidence. Both streams are summed
/// first, then the certainty caps are applied: raw MD of 1 zeroes MB, raw MB
/// of 1 zeroes MD, and both at once throw ContradictoryCertainty.
BeliefMeasures combine(const BeliefMeasures& a, const BeliefMeasures& b);

/// Folds all streams then applies the caps once, so the result does not
/// depend on input order. Throws InvalidArgument on an empty list.
BeliefMeasures fold_combine(std::span<const BeliefMeasures> measures);

}  // namespace cfbayes
