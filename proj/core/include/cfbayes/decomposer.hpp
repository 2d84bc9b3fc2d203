#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "cfbayes/distribution.hpp"
#include "cfbayes/problem.hpp"

namespace cfbayes {

using EvidenceGroup = std::vector<AttributeIndex>;

/// Disjoint, non-empty groups covering the problem's evidence.
class EvidencePartition {
 public:
  /// Throws InvalidPartition. Groups are sorted internally and ordered by
  /// their smallest attribute.
  EvidencePartition(const Problem& problem, std::vector<EvidenceGroup> groups);

  static EvidencePartition singletons(const Problem& problem);
  static EvidencePartition single_group(const Problem& problem);

  const std::vector<EvidenceGroup>& groups() const noexcept { return groups_; }
  std::size_t size() const noexcept { return groups_.size(); }

  bool operator==(const EvidencePartition&) const = default;

 private:
  explicit EvidencePartition(std::vector<EvidenceGroup> groups) : groups_(std::move(groups)) {}
  std::vector<EvidenceGroup> groups_;
};

/// Surrogate posterior treating each group as one conditionally independent
/// piece of evidence given both h values:
///   P(h) prod_g P(E_g | h) / sum_v P(h=v) prod_g P(E_g | h=v).
/// Throws ZeroProbabilityEvidence when either h value is impossible or the
/// normalizer vanishes.
double approx_predictive_solution(const JointDistribution& dist, const Problem& problem,
                                  const EvidencePartition& partition,
                                  const EvidenceAssignment& assignment);

struct PartitionError {
  double max_error = 0.0;
  double mean_error = 0.0;
  std::size_t skipped = 0;
};

/// |surrogate - exact| over all full evidence assignments of positive mass.
/// Throws EverythingSkipped.
PartitionError partition_error(const JointDistribution& dist, const Problem& problem,
                               const EvidencePartition& partition);

struct MergeStep {
  EvidenceGroup left;
  EvidenceGroup right;
  double score = 0.0;      // summed pairwise I(ei; ej | h)
  double max_error = 0.0;  // after the merge
};

struct DecompositionReport {
  EvidencePartition partition;
  PartitionError error;
  std::vector<MergeStep> trace;
};

inline constexpr double kMergeScoreTieWindow = 1e-12;

/// Greedy merging from singletons: while max_error > target_tol, merge the
/// legal pair of groups with the largest summed conditional mutual
/// information; stop when no merge keeps groups within max_group_size.
/// Throws InvalidArgument for target_tol <= 0 or max_group_size == 0.
DecompositionReport greedy_decompose(const JointDistribution& dist, const Problem& problem,
                                     double target_tol, std::size_t max_group_size);

/// JSON with attribute names for groups.
std::string decomposition_to_json(const DecompositionReport& report,
                                  const PropositionalSpace& space);

}  // namespace cfbayes
