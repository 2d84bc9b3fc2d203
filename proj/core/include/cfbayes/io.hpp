#pragma once

#include <filesystem>
#include <string>

#include "cfbayes/distribution.hpp"

namespace cfbayes {

/// {"attributes": [...], "probabilities": [...]}; MalformedInput on bad JSON
/// or schema, plus every validation error.
JointDistribution parse_distribution(const std::string& text);
std::string serialize_distribution(const JointDistribution& dist);

JointDistribution load_distribution(const std::filesystem::path& path);
void save_distribution(const JointDistribution& dist, const std::filesystem::path& path);

/// Shortest representation that round-trips exactly.
std::string format_double(double value);

}  // namespace cfbayes
