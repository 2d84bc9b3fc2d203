#include "cfbayes/problem.hpp"

#include "cfbayes/error.hpp"

namespace cfbayes {

Problem::Problem(const PropositionalSpace& space, AttributeIndex hypothesis)
    : hypothesis_(hypothesis), attribute_count_(space.size()) {
  if (hypothesis >= space.size()) {
    throw Error(ErrorKind::UnknownAttribute, "hypothesis index " + std::to_string(hypothesis));
  }
  for (AttributeIndex a = 0; a < space.size(); ++a) {
    if (a != hypothesis) evidence_.push_back(a);
  }
}

EvidenceAssignment EvidenceAssignment::all_unknown(const Problem& problem) {
  EvidenceAssignment out;
  for (auto a : problem.evidence()) out.values_[a] = Observation::Unknown;
  return out;
}

EvidenceAssignment EvidenceAssignment::from_bits(const Problem& problem, std::uint32_t bits) {
  EvidenceAssignment out;
  const auto& ev = problem.evidence();
  const std::size_t n = ev.size();
  for (std::size_t i = 0; i < n; ++i) {
    const bool v = (bits >> (n - 1 - i)) & 1u;
    out.values_[ev[i]] = v ? Observation::True : Observation::False;
  }
  return out;
}

void EvidenceAssignment::check_against(const Problem& problem) const {
  const auto& ev = problem.evidence();
  bool ok = values_.size() == ev.size();
  for (auto a : ev) ok = ok && values_.contains(a);
  if (!ok) {
    throw Error(ErrorKind::InvalidArgument,
                "evidence assignment must cover exactly the problem's evidence attributes");
  }
}

bool EvidenceAssignment::is_full() const {
  for (const auto& [attr, obs] : values_) {
    if (obs == Observation::Unknown) return false;
  }
  return true;
}

Event EvidenceAssignment::observed_event() const {
  std::vector<Literal> lits;
  for (const auto& [attr, obs] : values_) {
    if (obs != Observation::Unknown) lits.push_back({attr, obs == Observation::True});
  }
  return Event(std::move(lits));
}

std::vector<Event> full_evidence_events(const Problem& problem) {
  const std::size_t n = problem.evidence().size();
  std::vector<Event> out;
  out.reserve(std::size_t{1} << n);
  for (std::uint32_t bits = 0; bits < (std::uint32_t{1} << n); ++bits) {
    out.push_back(EvidenceAssignment::from_bits(problem, bits).observed_event());
  }
  return out;
}

}  // namespace cfbayes
