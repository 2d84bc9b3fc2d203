#include "cfbayes/classifier.hpp"

#include <cmath>

#include "cfbayes/error.hpp"
#include "cfbayes/oracle.hpp"

namespace cfbayes {

std::string_view to_string(IndependenceVariant variant) {
  switch (variant) {
    case IndependenceVariant::HTrue: return "h-true";
    case IndependenceVariant::HFalse: return "h-false";
    case IndependenceVariant::Symmetric: return "symmetric";
  }
  return "?";
}

std::string_view to_string(ProblemClass cls) {
  switch (cls) {
    case ProblemClass::Decomposable: return "Decomposable";
    case ProblemClass::WeaklyDecomposable: return "WeaklyDecomposable";
    case ProblemClass::Holistic: return "Holistic";
  }
  return "?";
}

std::optional<IndependenceVariant> parse_variant(std::string_view text) {
  for (auto v : kAllVariants) {
    if (to_string(v) == text) return v;
  }
  return std::nullopt;
}

namespace {

/// Max-abs factorization deviation of the evidence given h = h_value, or of
/// the evidence marginal when h_value is empty.
double factorization_gap(const JointDistribution& dist, const Problem& problem,
                         std::optional<bool> h_value) {
  const auto& space = dist.space();
  const auto probs = dist.probabilities();
  const auto& evidence = problem.evidence();
  const std::size_t n = evidence.size();
  const StateIndex h_bit = space.bit(problem.hypothesis());

  double norm = 1.0;
  if (h_value) {
    norm = marginal(dist, problem.hypothesis_event(*h_value));
    if (norm <= kZeroMass) {
      throw Error(ErrorKind::ZeroProbabilityEvidence,
                  std::string("P(h=") + (*h_value ? "true" : "false") + ") is zero");
    }
  }
  auto in_scope = [&](StateIndex s) {
    return !h_value || (((s & h_bit) != 0) == *h_value);
  };

  // P(e_i = true | scope)
  std::vector<double> p_true(n, 0.0);
  for (StateIndex s = 0; s < probs.size(); ++s) {
    if (!in_scope(s)) continue;
    for (std::size_t i = 0; i < n; ++i) {
      if (s & space.bit(evidence[i])) p_true[i] += probs[s];
    }
  }
  for (auto& p : p_true) p /= norm;

  // P(E | scope) for each full evidence assignment, indexed by the evidence bits.
  std::vector<double> joint(std::size_t{1} << n, 0.0);
  for (StateIndex s = 0; s < probs.size(); ++s) {
    if (!in_scope(s)) continue;
    std::size_t e = 0;
    for (std::size_t i = 0; i < n; ++i) e = (e << 1) | ((s & space.bit(evidence[i])) ? 1u : 0u);
    joint[e] += probs[s];
  }

  double gap = 0.0;
  for (std::size_t e = 0; e < joint.size(); ++e) {
    double product = 1.0;
    for (std::size_t i = 0; i < n; ++i) {
      const bool v = (e >> (n - 1 - i)) & 1u;
      product *= v ? p_true[i] : 1.0 - p_true[i];
    }
    gap = std::max(gap, std::abs(joint[e] / norm - product));
  }
  return gap;
}

}  // namespace

double conditional_independence_gap(const JointDistribution& dist, const Problem& problem,
                                    IndependenceVariant variant) {
  switch (variant) {
    case IndependenceVariant::HTrue: return factorization_gap(dist, problem, true);
    case IndependenceVariant::HFalse: return factorization_gap(dist, problem, false);
    case IndependenceVariant::Symmetric:
      return std::max(factorization_gap(dist, problem, true),
                      factorization_gap(dist, problem, false));
  }
  throw Error(ErrorKind::InvalidArgument, "unknown independence variant");
}

double marginal_independence_gap(const JointDistribution& dist, const Problem& problem) {
  return factorization_gap(dist, problem, std::nullopt);
}

ProblemClass class_from_gaps(double ci_gap, double marginal_gap, double tol) {
  if (!(tol > 0.0)) throw Error(ErrorKind::InvalidArgument, "tolerance must be positive");
  if (ci_gap > tol) return ProblemClass::Holistic;
  return marginal_gap <= tol ? ProblemClass::Decomposable : ProblemClass::WeaklyDecomposable;
}

ClassificationReport classify(const JointDistribution& dist, const Problem& problem,
                              IndependenceVariant variant, double tol) {
  ClassificationReport r{};
  r.variant = variant;
  r.tolerance = tol;
  r.ci_gap = conditional_independence_gap(dist, problem, variant);
  r.marginal_gap = marginal_independence_gap(dist, problem);
  r.cls = class_from_gaps(r.ci_gap, r.marginal_gap, tol);
  return r;
}

bool is_weakly_decomposable(const JointDistribution& dist, const Problem& problem,
                            IndependenceVariant variant, double tol) {
  if (!(tol > 0.0)) throw Error(ErrorKind::InvalidArgument, "tolerance must be positive");
  return conditional_independence_gap(dist, problem, variant) <= tol;
}

double conditional_mutual_information(const JointDistribution& dist, AttributeIndex attr_i,
                                      AttributeIndex attr_j, AttributeIndex hypothesis) {
  const auto& space = dist.space();
  if (attr_i == attr_j || attr_i == hypothesis || attr_j == hypothesis) {
    throw Error(ErrorKind::InvalidArgument, "CMI needs three distinct attributes");
  }
  const StateIndex hb = space.bit(hypothesis), ib = space.bit(attr_i), jb = space.bit(attr_j);
  // table[h][x][y]
  double table[2][2][2] = {};
  const auto probs = dist.probabilities();
  for (StateIndex s = 0; s < probs.size(); ++s) {
    table[(s & hb) ? 1 : 0][(s & ib) ? 1 : 0][(s & jb) ? 1 : 0] += probs[s];
  }
  double info = 0.0;
  for (int h = 0; h < 2; ++h) {
    const double ph = table[h][0][0] + table[h][0][1] + table[h][1][0] + table[h][1][1];
    if (ph <= kZeroMass) {
      throw Error(ErrorKind::ZeroProbabilityEvidence, "a hypothesis value has zero probability");
    }
    for (int x = 0; x < 2; ++x) {
      for (int y = 0; y < 2; ++y) {
        const double pxy = table[h][x][y] / ph;
        if (pxy <= 0.0) continue;
        const double px = (table[h][x][0] + table[h][x][1]) / ph;
        const double py = (table[h][0][y] + table[h][1][y]) / ph;
        info += ph * pxy * std::log(pxy / (px * py));
      }
    }
  }
  return info;
}

}  // namespace cfbayes
