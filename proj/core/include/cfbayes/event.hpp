#pragma once

#include <initializer_list>
#include <vector>

#include "cfbayes/space.hpp"

namespace cfbayes {

struct Literal {
  AttributeIndex attr;
  bool polarity;

  bool operator==(const Literal&) const = default;
};

/// Conjunction of literals over distinct attributes. The empty event is the
/// sure event. Literals are kept sorted by attribute.
class Event {
 public:
  Event() = default;
  Event(std::initializer_list<Literal> literals);
  explicit Event(std::vector<Literal> literals);

  const std::vector<Literal>& literals() const noexcept { return literals_; }
  bool empty() const noexcept { return literals_.empty(); }
  std::size_t size() const noexcept { return literals_.size(); }
  bool mentions(AttributeIndex attr) const;

  /// Conjunction; throws DuplicateAttribute when the two share an attribute.
  Event operator&(const Event& other) const;

  bool operator==(const Event&) const = default;

 private:
  std::vector<Literal> literals_;
};

/// Bit pattern form of an event: state s satisfies it iff (s & mask) == value.
struct EventMask {
  StateIndex mask = 0;
  StateIndex value = 0;

  bool matches(StateIndex s) const noexcept { return (s & mask) == value; }
};

EventMask event_mask(const PropositionalSpace& space, const Event& event);

std::vector<StateIndex> event_states(const PropositionalSpace& space, const Event& event);

}  // namespace cfbayes
