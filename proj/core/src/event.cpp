#include "cfbayes/event.hpp"

#include <algorithm>

#include "cfbayes/error.hpp"

namespace cfbayes {

Event::Event(std::initializer_list<Literal> literals) : Event(std::vector<Literal>(literals)) {}

Event::Event(std::vector<Literal> literals) : literals_(std::move(literals)) {
  std::sort(literals_.begin(), literals_.end(),
            [](const Literal& a, const Literal& b) { return a.attr < b.attr; });
  auto dup = std::adjacent_find(literals_.begin(), literals_.end(),
                                [](const Literal& a, const Literal& b) { return a.attr == b.attr; });
  if (dup != literals_.end()) {
    throw Error(ErrorKind::DuplicateAttribute,
                "attribute " + std::to_string(dup->attr) + " appears twice in an event");
  }
}

bool Event::mentions(AttributeIndex attr) const {
  return std::any_of(literals_.begin(), literals_.end(),
                     [attr](const Literal& l) { return l.attr == attr; });
}

Event Event::operator&(const Event& other) const {
  std::vector<Literal> all = literals_;
  all.insert(all.end(), other.literals_.begin(), other.literals_.end());
  return Event(std::move(all));
}

EventMask event_mask(const PropositionalSpace& space, const Event& event) {
  EventMask m;
  for (const auto& lit : event.literals()) {
    const StateIndex b = space.bit(lit.attr);
    m.mask |= b;
    if (lit.polarity) m.value |= b;
  }
  return m;
}

std::vector<StateIndex> event_states(const PropositionalSpace& space, const Event& event) {
  const EventMask m = event_mask(space, event);
  std::vector<StateIndex> out;
  const auto n = static_cast<StateIndex>(space.state_count());
  for (StateIndex s = 0; s < n; ++s) {
    if (m.matches(s)) out.push_back(s);
  }
  return out;
}

}  // namespace cfbayes
