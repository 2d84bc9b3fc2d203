#include "cfbayes/fixtures.hpp"

#include "cfbayes/error.hpp"

namespace cfbayes::fixtures {
namespace {

JointDistribution make(std::vector<double> probs) {
  return JointDistribution::validate({"h", "a", "b"}, std::move(probs));
}

}  // namespace

JointDistribution pr1() { return make({0.12, 0.08, 0.18, 0.12, 0.12, 0.08, 0.18, 0.12}); }
JointDistribution nb1() { return make({0.24, 0.06, 0.16, 0.04, 0.04, 0.06, 0.16, 0.24}); }
JointDistribution xor1() { return make({0.25, 0, 0, 0.25, 0, 0.25, 0.25, 0}); }
JointDistribution dstrict1() { return make({0.20, 0.10, 0.20, 0.00, 0.04, 0.06, 0.16, 0.24}); }
JointDistribution m1x1() { return make({0.24, 0.06, 0.16, 0.04, 0.00, 0.10, 0.20, 0.20}); }

std::vector<std::string_view> names() { return {"PR1", "NB1", "XOR1", "DSTRICT1", "M1X1"}; }

JointDistribution by_name(std::string_view name) {
  if (name == "PR1") return pr1();
  if (name == "NB1") return nb1();
  if (name == "XOR1") return xor1();
  if (name == "DSTRICT1") return dstrict1();
  if (name == "M1X1") return m1x1();
  throw Error(ErrorKind::InvalidArgument, "unknown fixture '" + std::string(name) + "'");
}

}  // namespace cfbayes::fixtures
