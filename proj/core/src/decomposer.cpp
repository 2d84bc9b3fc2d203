#include "cfbayes/decomposer.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <set>

#include <json.hpp>

#include "cfbayes/classifier.hpp"
#include "cfbayes/error.hpp"
#include "cfbayes/oracle.hpp"

namespace cfbayes {

EvidencePartition::EvidencePartition(const Problem& problem, std::vector<EvidenceGroup> groups) {
  std::set<AttributeIndex> seen;
  for (auto& g : groups) {
    if (g.empty()) throw Error(ErrorKind::InvalidPartition, "empty evidence group");
    std::sort(g.begin(), g.end());
    for (auto a : g) {
      if (a == problem.hypothesis() || a >= problem.attribute_count()) {
        throw Error(ErrorKind::InvalidPartition,
                    "attribute " + std::to_string(a) + " is not evidence");
      }
      if (!seen.insert(a).second) {
        throw Error(ErrorKind::InvalidPartition,
                    "attribute " + std::to_string(a) + " appears in two groups");
      }
    }
  }
  if (seen.size() != problem.evidence().size()) {
    throw Error(ErrorKind::InvalidPartition, "groups do not cover all evidence");
  }
  std::sort(groups.begin(), groups.end());
  groups_ = std::move(groups);
}

EvidencePartition EvidencePartition::singletons(const Problem& problem) {
  std::vector<EvidenceGroup> groups;
  for (auto a : problem.evidence()) groups.push_back({a});
  return EvidencePartition(std::move(groups));
}

EvidencePartition EvidencePartition::single_group(const Problem& problem) {
  return EvidencePartition({problem.evidence()});
}

namespace {

Event restrict(const Event& full, const EvidenceGroup& group) {
  std::vector<Literal> lits;
  for (const auto& lit : full.literals()) {
    if (std::binary_search(group.begin(), group.end(), lit.attr)) lits.push_back(lit);
  }
  return Event(std::move(lits));
}

double surrogate(const JointDistribution& dist, const Problem& problem,
                 const EvidencePartition& partition, const Event& full) {
  double weight[2];
  for (int v = 0; v < 2; ++v) {
    const Event h = problem.hypothesis_event(v == 1);
    const double prior = marginal(dist, h);
    if (prior <= kZeroMass) {
      throw Error(ErrorKind::ZeroProbabilityEvidence, "a hypothesis value has zero probability");
    }
    double w = prior;
    for (const auto& g : partition.groups()) w *= conditional(dist, restrict(full, g), h);
    weight[v] = w;
  }
  const double norm = weight[0] + weight[1];
  if (norm <= kZeroMass) {
    throw Error(ErrorKind::ZeroProbabilityEvidence, "surrogate evidence has zero probability");
  }
  return weight[1] / norm;
}

}  // namespace

double approx_predictive_solution(const JointDistribution& dist, const Problem& problem,
                                  const EvidencePartition& partition,
                                  const EvidenceAssignment& assignment) {
  assignment.check_against(problem);
  if (!assignment.is_full()) {
    throw Error(ErrorKind::InvalidArgument, "surrogate needs a full true/false assignment");
  }
  return surrogate(dist, problem, partition, assignment.observed_event());
}

PartitionError partition_error(const JointDistribution& dist, const Problem& problem,
                               const EvidencePartition& partition) {
  PartitionError out;
  double sum = 0.0;
  std::size_t evaluated = 0;
  const Event h = problem.hypothesis_event();
  for (const auto& event : full_evidence_events(problem)) {
    if (marginal(dist, event) <= kZeroMass) {
      ++out.skipped;
      continue;
    }
    double approx = 0.0;
    try {
      approx = surrogate(dist, problem, partition, event);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::ZeroProbabilityEvidence) throw;
      ++out.skipped;
      continue;
    }
    const double err = std::abs(approx - conditional(dist, h, event));
    out.max_error = std::max(out.max_error, err);
    sum += err;
    ++evaluated;
  }
  if (evaluated == 0) {
    throw Error(ErrorKind::EverythingSkipped, "no evidence assignment could be evaluated");
  }
  out.mean_error = sum / static_cast<double>(evaluated);
  return out;
}

DecompositionReport greedy_decompose(const JointDistribution& dist, const Problem& problem,
                                     double target_tol, std::size_t max_group_size) {
  if (!(target_tol > 0.0)) throw Error(ErrorKind::InvalidArgument, "target_tol must be positive");
  if (max_group_size == 0) throw Error(ErrorKind::InvalidArgument, "max_group_size must be >= 1");

  const auto& ev = problem.evidence();
  const std::size_t k = problem.attribute_count();
  std::vector<std::vector<double>> cmi(k, std::vector<double>(k, 0.0));
  for (std::size_t i = 0; i < ev.size(); ++i) {
    for (std::size_t j = i + 1; j < ev.size(); ++j) {
      const double v = conditional_mutual_information(dist, ev[i], ev[j], problem.hypothesis());
      cmi[ev[i]][ev[j]] = cmi[ev[j]][ev[i]] = v;
    }
  }

  std::vector<EvidenceGroup> groups;
  for (auto a : ev) groups.push_back({a});
  DecompositionReport report{EvidencePartition::singletons(problem), {}, {}};
  report.error = partition_error(dist, problem, report.partition);

  while (report.error.max_error > target_tol) {
    // groups stay sorted by smallest attribute, so scanning (i, j) in order
    // visits candidate pairs by ascending attribute-index pair.
    std::optional<std::pair<std::size_t, std::size_t>> best;
    double best_score = 0.0;
    for (std::size_t i = 0; i < groups.size(); ++i) {
      for (std::size_t j = i + 1; j < groups.size(); ++j) {
        if (groups[i].size() + groups[j].size() > max_group_size) continue;
        double score = 0.0;
        for (auto a : groups[i]) {
          for (auto b : groups[j]) score += cmi[a][b];
        }
        if (!best || score > best_score + kMergeScoreTieWindow) {
          best = {i, j};
          best_score = score;
        }
      }
    }
    if (!best) break;
    auto [i, j] = *best;
    MergeStep step{groups[i], groups[j], best_score, 0.0};
    groups[i].insert(groups[i].end(), groups[j].begin(), groups[j].end());
    std::sort(groups[i].begin(), groups[i].end());
    groups.erase(groups.begin() + static_cast<std::ptrdiff_t>(j));
    std::sort(groups.begin(), groups.end());
    report.partition = EvidencePartition(problem, groups);
    report.error = partition_error(dist, problem, report.partition);
    step.max_error = report.error.max_error;
    report.trace.push_back(std::move(step));
  }
  return report;
}

std::string decomposition_to_json(const DecompositionReport& report,
                                  const PropositionalSpace& space) {
  using json = nlohmann::ordered_json;
  auto names = [&](const EvidenceGroup& g) {
    json arr = json::array();
    for (auto a : g) arr.push_back(space.name(a));
    return arr;
  };
  json doc;
  doc["partition"] = json::array();
  for (const auto& g : report.partition.groups()) doc["partition"].push_back(names(g));
  doc["max_error"] = report.error.max_error;
  doc["mean_error"] = report.error.mean_error;
  doc["skipped"] = report.error.skipped;
  doc["merges"] = json::array();
  for (const auto& step : report.trace) {
    json merge;
    merge["left"] = names(step.left);
    merge["right"] = names(step.right);
    merge["score"] = step.score;
    merge["max_error"] = step.max_error;
    doc["merges"].push_back(std::move(merge));
  }
  return doc.dump(2) + "\n";
}

}  // namespace cfbayes
