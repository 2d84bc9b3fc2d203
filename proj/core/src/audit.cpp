#include "cfbayes/audit.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <exception>
#include <thread>

#include "cfbayes/error.hpp"
#include "cfbayes/io.hpp"

namespace cfbayes {

void AuditConfig::validate() const {
  if (families.empty()) throw Error(ErrorKind::InvalidArgument, "no families requested");
  if (count == 0) throw Error(ErrorKind::InvalidArgument, "count must be positive");
  if (attributes < 2 || attributes > 12) {
    throw Error(ErrorKind::InvalidArgument, "audit attribute count must be within [2, 12]");
  }
  if (tolerances.empty()) throw Error(ErrorKind::InvalidArgument, "empty tolerance grid");
  for (double t : tolerances) {
    if (!(t > 0.0)) throw Error(ErrorKind::InvalidArgument, "tolerances must be positive");
  }
  if (attributes < 3 &&
      std::find(families.begin(), families.end(), Family::XorNoise) != families.end()) {
    throw Error(ErrorKind::InvalidArgument, "xor-noise needs at least 3 attributes");
  }
}

double AuditConfig::row_tolerance() const {
  return *std::max_element(tolerances.begin(), tolerances.end());
}

std::uint64_t row_seed(const AuditConfig& config, std::size_t index_in_family) {
  return config.seed + index_in_family;
}

std::optional<double> AuditRow::ci_gap(IndependenceVariant variant) const {
  switch (variant) {
    case IndependenceVariant::HTrue: return ci_gap_htrue;
    case IndependenceVariant::HFalse: return ci_gap_hfalse;
    case IndependenceVariant::Symmetric:
      if (!ci_gap_htrue || !ci_gap_hfalse) return std::nullopt;
      return std::max(*ci_gap_htrue, *ci_gap_hfalse);
  }
  return std::nullopt;
}

std::optional<ProblemClass> AuditRow::classify(IndependenceVariant variant, double tol) const {
  const auto gap = ci_gap(variant);
  if (!gap) return std::nullopt;
  return class_from_gaps(*gap, marginal_gap, tol);
}

namespace {

AuditRow evaluate_row(const AuditConfig& config, std::size_t dist_id, Family family,
                      std::uint64_t seed) {
  AuditRow row;
  row.dist_id = dist_id;
  row.family = family;
  row.seed = seed;
  row.k = config.attributes;
  const auto dist = sample_distribution(family, config.attributes, seed);
  const Problem problem(dist.space(), 0);

  auto guarded = [](auto&& fn) -> std::optional<double> {
    try {
      return fn();
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::ZeroProbabilityEvidence) return std::nullopt;
      throw;
    }
  };
  row.ci_gap_htrue = guarded(
      [&] { return conditional_independence_gap(dist, problem, IndependenceVariant::HTrue); });
  row.ci_gap_hfalse = guarded(
      [&] { return conditional_independence_gap(dist, problem, IndependenceVariant::HFalse); });
  row.marginal_gap = marginal_independence_gap(dist, problem);

  try {
    row.lemma = lemma_gaps(dist, problem);
    row.skipped_assignments = row.lemma->skipped;
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::EverythingSkipped) throw;
    row.skipped_assignments = std::size_t{1} << problem.evidence().size();
  }
  if (config.product_condition) row.product_condition = check_product_condition(dist, problem);
  return row;
}

double lemma_gap(const LemmaGaps& g, Lemma lemma) {
  switch (lemma) {
    case Lemma::Mb: return g.m1.max;
    case Lemma::Md: return g.m2.max;
    case Lemma::Cf: return g.cf.max;
  }
  return 0.0;
}

constexpr std::array kLemmas{Lemma::Mb, Lemma::Md, Lemma::Cf};
constexpr std::array<std::optional<ProblemClass>, 4> kSummaryClasses{
    ProblemClass::Decomposable, ProblemClass::WeaklyDecomposable, ProblemClass::Holistic,
    std::nullopt};

std::vector<SummaryEntry> summarize(const AuditConfig& config, const std::vector<AuditRow>& rows) {
  std::vector<SummaryEntry> out;
  for (auto lemma : kLemmas) {
    for (auto variant : kAllVariants) {
      for (double tol : config.tolerances) {
        for (const auto& cls : kSummaryClasses) {
          SummaryEntry e{lemma, variant, tol, cls, 0, 0};
          for (const auto& row : rows) {
            if (row.classify(variant, tol) != cls) continue;
            const bool ok = row.lemma && lemma_gap(*row.lemma, lemma) <= tol;
            ++(ok ? e.consistent : e.inconsistent);
          }
          out.push_back(e);
        }
      }
    }
  }
  return out;
}

}  // namespace

AuditReport audit(const AuditConfig& config) {
  config.validate();
  struct Job {
    Family family;
    std::uint64_t seed;
  };
  std::vector<Job> jobs;
  for (auto family : config.families) {
    for (std::size_t i = 0; i < config.count; ++i) jobs.push_back({family, row_seed(config, i)});
  }

  AuditReport report;
  report.config = config;
  report.rows.resize(jobs.size());

  std::size_t threads = config.threads ? config.threads : std::thread::hardware_concurrency();
  threads = std::clamp<std::size_t>(threads, 1, jobs.size());
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> failures(threads);
  auto worker = [&](std::size_t w) {
    try {
      for (std::size_t i = next++; i < jobs.size(); i = next++) {
        report.rows[i] = evaluate_row(config, i, jobs[i].family, jobs[i].seed);
      }
    } catch (...) {
      failures[w] = std::current_exception();
    }
  };
  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < threads; ++w) pool.emplace_back(worker, w);
  }
  for (const auto& f : failures) {
    if (f) std::rethrow_exception(f);
  }
  report.summary = summarize(config, report.rows);
  return report;
}

std::string_view to_string(Lemma lemma) {
  switch (lemma) {
    case Lemma::Mb: return "lemma1_mb";
    case Lemma::Md: return "lemma2_md";
    case Lemma::Cf: return "lemma3_cf";
  }
  return "?";
}

std::string_view csv_label(IndependenceVariant variant) {
  switch (variant) {
    case IndependenceVariant::HTrue: return "strict";
    case IndependenceVariant::HFalse: return "hfalse";
    case IndependenceVariant::Symmetric: return "symmetric";
  }
  return "?";
}

namespace {

constexpr std::string_view kSkipped = "skipped";
constexpr std::string_view kUnclassified = "Unclassified";

std::string_view class_label(const std::optional<ProblemClass>& cls) {
  return cls ? to_string(*cls) : kUnclassified;
}

std::string optional_number(const std::optional<double>& v) {
  return v ? format_double(*v) : std::string(kSkipped);
}

}  // namespace

void write_rows_csv(const AuditReport& report, std::ostream& out) {
  out << "dist_id,family,seed,k,class_strict,class_hfalse,class_symmetric,ci_gap_htrue,"
         "ci_gap_hfalse,marginal_gap,m1_gap_max,m1_gap_mean,m2_gap_max,m2_gap_mean,cf_gap_max,"
         "cf_gap_mean,skipped_assignments\n";
  const double tol = report.config.row_tolerance();
  for (const auto& row : report.rows) {
    out << row.dist_id << ',' << to_string(row.family) << ',' << row.seed << ',' << row.k;
    for (auto v : kAllVariants) out << ',' << class_label(row.classify(v, tol));
    out << ',' << optional_number(row.ci_gap_htrue) << ',' << optional_number(row.ci_gap_hfalse)
        << ',' << format_double(row.marginal_gap);
    if (row.lemma) {
      const auto& g = *row.lemma;
      for (const auto* s : {&g.m1, &g.m2, &g.cf}) {
        out << ',' << format_double(s->max) << ',' << format_double(s->mean);
      }
    } else {
      for (int i = 0; i < 6; ++i) out << ',' << kSkipped;
    }
    out << ',' << row.skipped_assignments << '\n';
  }
}

void write_summary_csv(const AuditReport& report, std::ostream& out) {
  out << "lemma,variant,tolerance,class,consistent_count,inconsistent_count\n";
  for (const auto& e : report.summary) {
    out << to_string(e.lemma) << ',' << csv_label(e.variant) << ',' << format_double(e.tolerance)
        << ',' << class_label(e.cls) << ',' << e.consistent << ',' << e.inconsistent << '\n';
  }
}

}  // namespace cfbayes
