#include "cfbayes/lab.hpp"

#include <cmath>

#include "cfbayes/error.hpp"
#include "cfbayes/oracle.hpp"

namespace cfbayes {

GapRecord gap_record_for_event(const JointDistribution& dist, const Problem& problem,
                               const Event& evidence) {
  if (evidence.empty()) throw Error(ErrorKind::InvalidArgument, "gap record needs evidence");
  GapRecord r;
  r.evidence = evidence;
  r.direct = cf_direct(dist, problem, evidence);
  std::vector<BeliefMeasures> parts;
  parts.reserve(evidence.size());
  for (const auto& lit : evidence.literals()) {
    parts.push_back(cf_direct(dist, problem, Event{lit}));
  }
  r.combined = fold_combine(parts);
  r.m1_gap = std::abs(r.direct.mb - r.combined.mb);
  r.m2_gap = std::abs(r.direct.md - r.combined.md);
  r.cf_gap = std::abs(r.direct.cf - r.combined.cf);
  return r;
}

GapRecord gap_record(const JointDistribution& dist, const Problem& problem,
                     const EvidenceAssignment& assignment) {
  assignment.check_against(problem);
  if (!assignment.is_full()) {
    throw Error(ErrorKind::InvalidArgument, "gap_record needs a full true/false assignment");
  }
  return gap_record_for_event(dist, problem, assignment.observed_event());
}

LemmaGaps lemma_gaps(const JointDistribution& dist, const Problem& problem) {
  LemmaGaps out;
  double sum_m1 = 0.0, sum_m2 = 0.0, sum_cf = 0.0;
  for (const auto& event : full_evidence_events(problem)) {
    GapRecord r;
    try {
      r = gap_record_for_event(dist, problem, event);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::ZeroProbabilityEvidence ||
          e.kind() == ErrorKind::ContradictoryCertainty) {
        ++out.skipped;
        continue;
      }
      throw;
    }
    ++out.evaluated;
    out.m1.max = std::max(out.m1.max, r.m1_gap);
    out.m2.max = std::max(out.m2.max, r.m2_gap);
    out.cf.max = std::max(out.cf.max, r.cf_gap);
    sum_m1 += r.m1_gap;
    sum_m2 += r.m2_gap;
    sum_cf += r.cf_gap;
  }
  if (out.evaluated == 0) {
    throw Error(ErrorKind::EverythingSkipped, "no evidence assignment could be evaluated");
  }
  const auto n = static_cast<double>(out.evaluated);
  out.m1.mean = sum_m1 / n;
  out.m2.mean = sum_m2 / n;
  out.cf.mean = sum_cf / n;
  return out;
}

double product_condition_gap(const JointDistribution& dist, const Problem& problem,
                             const Literal& a, const Literal& b, Branch branch) {
  if (a.attr == b.attr || a.attr == problem.hypothesis() || b.attr == problem.hypothesis()) {
    throw Error(ErrorKind::InvalidArgument, "need two literals on distinct evidence attributes");
  }
  const bool target = branch == Branch::Md;  // Mb works with !h, Md with h
  const Event t = problem.hypothesis_event(target);
  const double prior_h = marginal(dist, problem.hypothesis_event());
  const double post_a = conditional(dist, problem.hypothesis_event(), Event{a});
  const double post_b = conditional(dist, problem.hypothesis_event(), Event{b});
  const bool same = branch == Branch::Mb ? (post_a > prior_h && post_b > prior_h)
                                         : (post_a < prior_h && post_b < prior_h);
  if (!same) {
    throw Error(ErrorKind::NotSameDirection,
                branch == Branch::Mb ? "both literals must confirm the hypothesis"
                                     : "both literals must disconfirm the hypothesis");
  }
  const double p_t = marginal(dist, t);
  const double t_ab = conditional(dist, t, Event{a, b});
  const double t_a = conditional(dist, t, Event{a});
  const double t_b = conditional(dist, t, Event{b});
  return std::abs(t_ab * p_t - t_a * t_b);
}

EquivalenceTally& EquivalenceTally::operator+=(const EquivalenceTally& other) {
  pairs += other.pairs;
  agreements += other.agreements;
  borderline += other.borderline;
  hard_disagreements += other.hard_disagreements;
  product_mb_gap_max = std::max(product_mb_gap_max, other.product_mb_gap_max);
  product_md_gap_max = std::max(product_md_gap_max, other.product_md_gap_max);
  return *this;
}

EquivalenceTally check_product_condition(const JointDistribution& dist, const Problem& problem) {
  EquivalenceTally tally;
  const auto& ev = problem.evidence();
  for (std::size_t i = 0; i < ev.size(); ++i) {
    for (std::size_t j = i + 1; j < ev.size(); ++j) {
      for (int pa = 0; pa < 2; ++pa) {
        for (int pb = 0; pb < 2; ++pb) {
          const Literal a{ev[i], pa == 1};
          const Literal b{ev[j], pb == 1};
          for (Branch branch : {Branch::Mb, Branch::Md}) {
            double product = 0.0;
            GapRecord pair;
            try {
              product = product_condition_gap(dist, problem, a, b, branch);
              pair = gap_record_for_event(dist, problem, Event{a, b});
            } catch (const Error& e) {
              if (e.kind() == ErrorKind::NotSameDirection ||
                  e.kind() == ErrorKind::ZeroProbabilityEvidence ||
                  e.kind() == ErrorKind::ContradictoryCertainty) {
                continue;
              }
              throw;
            }
            const double pairwise = branch == Branch::Mb ? pair.m1_gap : pair.m2_gap;
            auto& pmax = branch == Branch::Mb ? tally.product_mb_gap_max : tally.product_md_gap_max;
            pmax = std::max(pmax, product);
            ++tally.pairs;
            if ((pairwise <= kEquivalenceTolerance) == (product <= kEquivalenceTolerance)) {
              ++tally.agreements;
            } else if ((pairwise <= kEquivalenceZero && product > kEquivalenceHard) ||
                       (product <= kEquivalenceZero && pairwise > kEquivalenceHard)) {
              ++tally.hard_disagreements;
            } else {
              ++tally.borderline;
            }
          }
        }
      }
    }
  }
  return tally;
}

}  // namespace cfbayes
