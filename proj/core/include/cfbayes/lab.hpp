#pragma once

#include <cstddef>

#include "cfbayes/cf.hpp"
#include "cfbayes/distribution.hpp"
#include "cfbayes/problem.hpp"

namespace cfbayes {

/// Direct belief measures (from P(h | whole event)) against the ones combined
/// literal by literal with the parallel combination rules.
struct GapRecord {
  Event evidence;
  BeliefMeasures direct;
  BeliefMeasures combined;
  double m1_gap = 0.0;
  double m2_gap = 0.0;
  double cf_gap = 0.0;
};

/// Gap record for any non-empty evidence event. Throws ZeroProbabilityEvidence
/// when the event or one of its literals is impossible, ContradictoryCertainty
/// from the combination.
GapRecord gap_record_for_event(const JointDistribution& dist, const Problem& problem,
                               const Event& evidence);

/// Gap record for a full true/false evidence assignment (InvalidArgument
/// otherwise).
GapRecord gap_record(const JointDistribution& dist, const Problem& problem,
                     const EvidenceAssignment& assignment);

struct GapStats {
  double max = 0.0;
  double mean = 0.0;
};

struct LemmaGaps {
  GapStats m1;
  GapStats m2;
  GapStats cf;
  std::size_t evaluated = 0;
  std::size_t skipped = 0;
};

/// Aggregates over every full evidence assignment; impossible or contradictory
/// assignments are skipped and counted. Throws EverythingSkipped.
LemmaGaps lemma_gaps(const JointDistribution& dist, const Problem& problem);

enum class Branch { Mb, Md };

/// Product form of pairwise consistency for two literals that both strictly
/// confirm (Mb) or both strictly disconfirm (Md) h:
///   Mb: |P(!h|ab) P(!h) - P(!h|a) P(!h|b)|
///   Md: |P(h|ab) P(h) - P(h|a) P(h|b)|
/// Throws NotSameDirection, ZeroProbabilityEvidence.
double product_condition_gap(const JointDistribution& dist, const Problem& problem,
                             const Literal& a, const Literal& b, Branch branch);

/// Outcome of comparing "pairwise gap <= 1e-9" with "product gap <= 1e-9".
struct EquivalenceTally {
  std::size_t pairs = 0;
  std::size_t agreements = 0;
  std::size_t borderline = 0;
  std::size_t hard_disagreements = 0;
  double product_mb_gap_max = 0.0;
  double product_md_gap_max = 0.0;

  EquivalenceTally& operator+=(const EquivalenceTally& other);
};

inline constexpr double kEquivalenceTolerance = 1e-9;
inline constexpr double kEquivalenceZero = 1e-12;
inline constexpr double kEquivalenceHard = 1e-6;

/// Runs the cross-check over every pair of literals on distinct evidence
/// attributes that point in the same direction. Impossible pairs are ignored.
EquivalenceTally check_product_condition(const JointDistribution& dist, const Problem& problem);

}  // namespace cfbayes
