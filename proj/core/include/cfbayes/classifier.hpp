#pragma once

#include <array>
#include <optional>
#include <string_view>

#include "cfbayes/distribution.hpp"
#include "cfbayes/problem.hpp"

namespace cfbayes {

/// Which hypothesis value(s) the factorization
/// P(e1..en | h=v) = prod_i P(ei | h=v) must hold for.
enum class IndependenceVariant { HTrue, HFalse, Symmetric };

inline constexpr std::array kAllVariants{IndependenceVariant::HTrue, IndependenceVariant::HFalse,
                                         IndependenceVariant::Symmetric};

enum class ProblemClass { Decomposable, WeaklyDecomposable, Holistic };

std::string_view to_string(IndependenceVariant variant);
std::string_view to_string(ProblemClass cls);
std::optional<IndependenceVariant> parse_variant(std::string_view text);

inline constexpr double kDefaultClassifyTolerance = 1e-9;

struct ClassificationReport {
  ProblemClass cls;
  IndependenceVariant variant;
  double ci_gap;
  double marginal_gap;
  double tolerance;
};

/// Max-abs deviation of the diagnostic structure from its per-evidence
/// factorization, over every full evidence assignment and every h value the
/// variant requires.
double conditional_independence_gap(const JointDistribution& dist, const Problem& problem,
                                    IndependenceVariant variant);

/// Max-abs deviation of P(E) from prod_i P(ei) over full evidence assignments.
double marginal_independence_gap(const JointDistribution& dist, const Problem& problem);

/// Class from precomputed gaps. Throws InvalidArgument unless tol > 0.
ProblemClass class_from_gaps(double ci_gap, double marginal_gap, double tol);

ClassificationReport classify(const JointDistribution& dist, const Problem& problem,
                              IndependenceVariant variant,
                              double tol = kDefaultClassifyTolerance);

/// The WD test alone, with the marginal test skipped.
bool is_weakly_decomposable(const JointDistribution& dist, const Problem& problem,
                            IndependenceVariant variant, double tol = kDefaultClassifyTolerance);

/// I(ei; ej | h) in nats, conditioning on the attribute `hypothesis`.
double conditional_mutual_information(const JointDistribution& dist, AttributeIndex attr_i,
                                      AttributeIndex attr_j, AttributeIndex hypothesis);

}  // namespace cfbayes
