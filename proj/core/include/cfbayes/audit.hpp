#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "cfbayes/classifier.hpp"
#include "cfbayes/lab.hpp"
#include "cfbayes/sampler.hpp"

namespace cfbayes {

inline const std::vector<double> kDefaultToleranceGrid{1e-12, 1e-9, 1e-6, 1e-3};

struct AuditConfig {
  std::vector<Family> families;
  std::size_t count = 100;  // per family
  std::size_t attributes = 3;
  std::uint64_t seed = 42;
  std::vector<double> tolerances = kDefaultToleranceGrid;
  std::size_t threads = 0;  // 0: hardware concurrency
  bool product_condition = true;

  /// Throws InvalidArgument.
  void validate() const;
  /// Tolerance used for the per-row class columns: the loosest in the grid.
  double row_tolerance() const;
};

struct AuditRow {
  std::size_t dist_id = 0;
  Family family = Family::Dirichlet;
  std::uint64_t seed = 0;
  std::size_t k = 0;
  // Absent when P(h=v) = 0 for the required value.
  std::optional<double> ci_gap_htrue;
  std::optional<double> ci_gap_hfalse;
  double marginal_gap = 0.0;
  std::optional<LemmaGaps> lemma;
  std::size_t skipped_assignments = 0;
  EquivalenceTally product_condition;

  std::optional<double> ci_gap(IndependenceVariant variant) const;
  std::optional<ProblemClass> classify(IndependenceVariant variant, double tol) const;
};

enum class Lemma { Mb, Md, Cf };

struct SummaryEntry {
  Lemma lemma;
  IndependenceVariant variant;
  double tolerance;
  std::optional<ProblemClass> cls;  // nullopt: "Unclassified"
  std::size_t consistent = 0;
  std::size_t inconsistent = 0;
};

struct AuditReport {
  AuditConfig config;
  std::vector<AuditRow> rows;
  std::vector<SummaryEntry> summary;
};

/// Hypothesis is attribute 0 of every sampled table. Rows are evaluated in
/// parallel and stored by index, so the report does not depend on the
/// thread count.
AuditReport audit(const AuditConfig& config);

/// Row i of family f uses seed config.seed + i.
std::uint64_t row_seed(const AuditConfig& config, std::size_t index_in_family);

std::string_view to_string(Lemma lemma);
/// "strict", "hfalse", "symmetric" as used in the CSV headers.
std::string_view csv_label(IndependenceVariant variant);

void write_rows_csv(const AuditReport& report, std::ostream& out);
void write_summary_csv(const AuditReport& report, std::ostream& out);

}  // namespace cfbayes
