#pragma once

#include <string_view>
#include <vector>

#include "cfbayes/distribution.hpp"

namespace cfbayes::fixtures {

// Canonical three-attribute tables over ("h", "a", "b"), state index = h a b.

/// Fully independent: P(h)=.5, P(a)=.6, P(b)=.4.
JointDistribution pr1();
/// Naive Bayes: P(h)=.5, P(a|h)=.8, P(a|!h)=.4, P(b|h)=.6, P(b|!h)=.2.
JointDistribution nb1();
/// h = a xor b with (a, b) uniform.
JointDistribution xor1();
/// Independent given h=true and marginally independent evidence.
JointDistribution dstrict1();
/// Independent given h=false and marginally independent evidence.
JointDistribution m1x1();

std::vector<std::string_view> names();
/// Throws InvalidArgument on an unknown name.
JointDistribution by_name(std::string_view name);

}  // namespace cfbayes::fixtures
