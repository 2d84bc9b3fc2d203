#include "cfbayes/space.hpp"

#include <algorithm>
#include <unordered_set>

#include "cfbayes/error.hpp"

namespace cfbayes {

PropositionalSpace::PropositionalSpace(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.size() > kMaxAttributes) {
    throw Error(ErrorKind::SpaceTooLarge, std::to_string(names_.size()) + " attributes, at most " +
                                              std::to_string(kMaxAttributes) + " supported");
  }
  if (names_.size() < kMinAttributes) {
    throw Error(ErrorKind::InvalidSpace, "need at least 2 attributes");
  }
  std::unordered_set<std::string> seen;
  for (const auto& n : names_) {
    if (n.empty()) throw Error(ErrorKind::InvalidSpace, "empty attribute name");
    if (!seen.insert(n).second) throw Error(ErrorKind::DuplicateAttribute, "attribute '" + n + "'");
  }
}

std::optional<AttributeIndex> PropositionalSpace::find(std::string_view name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<AttributeIndex>(it - names_.begin());
}

AttributeIndex PropositionalSpace::index_of(std::string_view name) const {
  if (auto idx = find(name)) return *idx;
  throw Error(ErrorKind::UnknownAttribute, "no attribute named '" + std::string(name) + "'");
}

StateIndex PropositionalSpace::bit(AttributeIndex attr) const {
  if (attr >= names_.size()) {
    throw Error(ErrorKind::UnknownAttribute, "attribute index " + std::to_string(attr));
  }
  return StateIndex{1} << (names_.size() - 1 - attr);
}

StateIndex state_index(const PropositionalSpace& space, std::span<const bool> assignment) {
  if (assignment.size() != space.size()) {
    throw Error(ErrorKind::LengthMismatch, "assignment must cover every attribute");
  }
  StateIndex s = 0;
  for (bool v : assignment) s = (s << 1) | (v ? 1u : 0u);
  return s;
}

}  // namespace cfbayes
