#pragma once

#include <map>
#include <vector>

#include "cfbayes/event.hpp"
#include "cfbayes/space.hpp"

namespace cfbayes {

/// A subjective instantiation: one attribute plays the hypothesis (always
/// read as the positive literal h=true), all others are evidence.
class Problem {
 public:
  Problem(const PropositionalSpace& space, AttributeIndex hypothesis);

  AttributeIndex hypothesis() const noexcept { return hypothesis_; }
  const std::vector<AttributeIndex>& evidence() const noexcept { return evidence_; }
  std::size_t attribute_count() const noexcept { return attribute_count_; }

  Event hypothesis_event(bool value = true) const { return Event{{hypothesis_, value}}; }

 private:
  AttributeIndex hypothesis_;
  std::size_t attribute_count_;
  std::vector<AttributeIndex> evidence_;
};

enum class Observation { False, True, Unknown };

/// Three-valued observation of each evidence attribute. Unknown attributes are
/// marginalized out of every conditioning event.
class EvidenceAssignment {
 public:
  EvidenceAssignment() = default;
  explicit EvidenceAssignment(std::map<AttributeIndex, Observation> values)
      : values_(std::move(values)) {}

  /// Every evidence attribute of `problem` set to Unknown.
  static EvidenceAssignment all_unknown(const Problem& problem);
  /// Full true/false assignment from a bit pattern over problem.evidence()
  /// (bit i of `bits`, counting from the most significant of n, is evidence i).
  static EvidenceAssignment from_bits(const Problem& problem, std::uint32_t bits);

  void set(AttributeIndex attr, Observation value) { values_[attr] = value; }
  const std::map<AttributeIndex, Observation>& values() const noexcept { return values_; }

  /// Throws InvalidArgument unless the keys are exactly problem.evidence().
  void check_against(const Problem& problem) const;
  bool is_full() const;

  /// Conjunction of all non-unknown observations.
  Event observed_event() const;

 private:
  std::map<AttributeIndex, Observation> values_;
};

/// Full evidence assignments of `problem`, as events, in index order
/// (evidence attribute order, first evidence attribute most significant).
std::vector<Event> full_evidence_events(const Problem& problem);

}  // namespace cfbayes
