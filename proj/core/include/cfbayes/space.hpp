#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace cfbayes {

using AttributeIndex = std::size_t;
using StateIndex = std::uint32_t;

inline constexpr std::size_t kMinAttributes = 2;
inline constexpr std::size_t kMaxAttributes = 20;

/// Ordered set of binary attributes. Attribute 0 is the most significant bit
/// of a state index; `true` is encoded as 1.
class PropositionalSpace {
 public:
  explicit PropositionalSpace(std::vector<std::string> names);

  std::size_t size() const noexcept { return names_.size(); }
  std::size_t state_count() const noexcept { return std::size_t{1} << names_.size(); }

  const std::string& name(AttributeIndex attr) const { return names_.at(attr); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  std::optional<AttributeIndex> find(std::string_view name) const;
  AttributeIndex index_of(std::string_view name) const;

  /// Bit of `attr` inside a state index.
  StateIndex bit(AttributeIndex attr) const;

  bool operator==(const PropositionalSpace&) const = default;

 private:
  std::vector<std::string> names_;
};

/// One truth value per attribute, in attribute order.
StateIndex state_index(const PropositionalSpace& space, std::span<const bool> assignment);

}  // namespace cfbayes
