// Acceptance suite: one line per criterion, non-zero exit if any fails.
//
//   cfbayes_acceptance [output-dir]
//
// Report files produced along the way (audit CSVs, decomposition JSON, CLI
// outputs) are kept in the output directory and scanned by criterion 9.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cfbayes/audit.hpp"
#include "cfbayes/cf.hpp"
#include "cfbayes/classifier.hpp"
#include "cfbayes/decomposer.hpp"
#include "cfbayes/error.hpp"
#include "cfbayes/fixtures.hpp"
#include "cfbayes/io.hpp"
#include "cfbayes/lab.hpp"
#include "cfbayes/oracle.hpp"
#include "cfbayes/sampler.hpp"
#include "support/run_command.hpp"

namespace fs = std::filesystem;
using namespace cfbayes;

namespace {

struct Check {
  bool ok = true;
  std::ostringstream detail;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail << " [failed: " << what << "]";
    }
  }
  void near(double actual, double expected, double tol, const std::string& what) {
    const bool cond = std::abs(actual - expected) <= tol;
    if (!cond) {
      ok = false;
      detail << " [failed: " << what << " = " << format_double(actual) << ", expected "
             << format_double(expected) << " +/- " << tol << "]";
    }
  }
  template <typename Fn>
  void expect_error(Fn&& fn, ErrorKind kind, const std::string& what) {
    try {
      fn();
      expect(false, what + " raised nothing");
    } catch (const Error& e) {
      expect(e.kind() == kind, what + " raised " + std::string(to_string(e.kind())));
    }
  }
};

struct Criterion {
  int id;
  std::string title;
  double budget_seconds;  // 0: no runtime bound
  std::function<void(Check&)> body;
};

const Problem kProblem(PropositionalSpace({"h", "a", "b"}), 0);
const Literal kA{1, true}, kNotA{1, false}, kB{2, true}, kNotB{2, false};
const Event kH{{0, true}};

fs::path g_out;

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const fs::path& p, const std::string& text) {
  std::ofstream out(p, std::ios::binary);
  out << text;
}

GapRecord full_record(const JointDistribution& d, bool a, bool b) {
  return gap_record(d, kProblem,
                    EvidenceAssignment({{1, a ? Observation::True : Observation::False},
                                        {2, b ? Observation::True : Observation::False}}));
}

std::string audit_bytes(const AuditReport& r) {
  std::ostringstream os;
  write_rows_csv(r, os);
  os << "--\n";
  write_summary_csv(r, os);
  return os.str();
}

AuditReport g_dirichlet_audit;
AuditReport g_product_audit;

// 1
void oracle_fixtures(Check& c) {
  const auto nb1 = fixtures::nb1();
  c.near(marginal(nb1, Event{kA}), 0.6, 1e-12, "NB1 P(a)");
  c.near(conditional(nb1, kH, Event{kA}), 2.0 / 3.0, 1e-12, "NB1 P(h|a)");
  c.near(conditional(nb1, kH, Event{kA, kB}), 6.0 / 7.0, 1e-12, "NB1 P(h|a,b)");
  c.near(diagnostic_probability(nb1, kProblem, Event{kA, kB}, true), 0.48, 1e-12, "NB1 P(a,b|h)");
  c.near(conditional(fixtures::xor1(), kH, Event{kA, kNotB}), 1.0, 1e-12, "XOR1 P(h|a,!b)");
}

// 2
void cf_mapping(Check& c) {
  c.expect(mb_of(1.0, 0.4) == 1.0, "prior 1 => MB = 1");
  c.expect(md_of(0.0, 0.3) == 1.0, "prior 0 => MD = 1");
  // Priors strictly inside (0, 1): at the endpoints only the coherent
  // posteriors (equal to the prior) can arise from a table.
  Rng rng(2024);
  std::size_t violations = 0;
  for (int i = 0; i < 10000; ++i) {
    double prior = rng.uniform();
    while (prior == 0.0) prior = rng.uniform();
    const double posterior = i % 50 == 0 ? prior : rng.uniform();
    if (std::min(mb_of(prior, posterior), md_of(prior, posterior)) != 0.0) ++violations;
  }
  c.expect(std::min(mb_of(1.0, 1.0), md_of(1.0, 1.0)) == 0.0, "coherent prior-1 pair");
  c.expect(std::min(mb_of(0.0, 0.0), md_of(0.0, 0.0)) == 0.0, "coherent prior-0 pair");
  c.expect(violations == 0, std::to_string(violations) + " pairs with min(MB, MD) != 0");
  c.detail << " 10000 pairs";
}

// 3
void combination_algebra(Check& c) {
  Rng rng(7);
  std::size_t bad = 0;
  for (const auto& op : {&combine_mb, &combine_md}) {
    for (int i = 0; i < 10000; ++i) {
      const double x = rng.uniform(), y = rng.uniform(), z = rng.uniform();
      const double bump = rng.uniform() * (1.0 - x);
      bad += std::abs(op(x, y) - op(y, x)) > 1e-12;
      bad += std::abs(op(op(x, y), z) - op(x, op(y, z))) > 1e-12;
      bad += op(x, 0.0) != x || op(0.0, x) != x;
      bad += op(x, 1.0) != 1.0 || op(1.0, x) != 1.0;
      bad += op(x + bump, y) < op(x, y);
      bad += op(x, y + rng.uniform() * (1.0 - y)) < op(x, y);
      const double r = op(x, y);
      bad += r < 0.0 || r > 1.0;
    }
  }
  c.expect(bad == 0, std::to_string(bad) + " algebra violations");

  std::mt19937_64 shuffler(11);
  std::size_t perm_bad = 0;
  for (int i = 0; i < 1000; ++i) {
    const std::size_t len = 1 + static_cast<std::size_t>(rng.uniform() * 6.0);
    std::vector<BeliefMeasures> xs;
    for (std::size_t j = 0; j < len; ++j) {
      xs.push_back(BeliefMeasures::from(rng.uniform(), rng.uniform()));
    }
    const auto base = fold_combine(xs);
    for (int s = 0; s < 5; ++s) {
      std::shuffle(xs.begin(), xs.end(), shuffler);
      const auto other = fold_combine(xs);
      perm_bad += std::abs(other.mb - base.mb) > 1e-12 || std::abs(other.md - base.md) > 1e-12 ||
                  std::abs(other.cf - base.cf) > 1e-12;
    }
  }
  c.expect(perm_bad == 0, std::to_string(perm_bad) + " permutation mismatches");
  c.detail << " 2x10000 triples, 1000 lists";
}

// 4
void lemma_gap_fixtures(Check& c) {
  c.near(full_record(fixtures::nb1(), true, true).m1_gap, 1.0 / 21.0, 1e-9, "NB1 (T,T) m1_gap");
  c.near(full_record(fixtures::nb1(), false, false).m2_gap, 1.0 / 21.0, 1e-9, "NB1 (F,F) m2_gap");
  c.near(full_record(fixtures::nb1(), true, false).cf_gap, 0.0, 1e-12, "NB1 (T,F) cf_gap");
  c.expect(full_record(fixtures::m1x1(), true, true).m1_gap <= 1e-12, "M1X1 (T,T) m1_gap <= 1e-12");
  c.near(full_record(fixtures::dstrict1(), true, true).m1_gap, 1.0 / 3.0, 1e-9, "DSTRICT1 (T,T) m1_gap");
  c.near(lemma_gaps(fixtures::xor1(), kProblem).cf.max, 1.0, 1e-12, "XOR1 max cf_gap");
}

// 5
void product_condition(Check& c) {
  EquivalenceTally total;
  for (auto name : {"NB1", "M1X1", "DSTRICT1"}) {
    total += check_product_condition(fixtures::by_name(name), kProblem);
  }
  for (std::uint64_t i = 0; i < 1000; ++i) {
    const auto d = sample_distribution(Family::Dirichlet, 3, 42 + i);
    total += check_product_condition(d, Problem(d.space(), 0));
  }
  c.expect(total.pairs > 0, "no same-direction pairs evaluated");
  c.expect(total.hard_disagreements == 0,
           std::to_string(total.hard_disagreements) + " hard disagreements");
  c.detail << " pairs=" << total.pairs << " agreements=" << total.agreements
           << " borderline=" << total.borderline << " hard=" << total.hard_disagreements;
}

// 6
void rarity_audit(Check& c) {
  AuditConfig dir;
  dir.families = {Family::Dirichlet};
  dir.count = 1000;
  dir.attributes = 3;
  dir.seed = 42;
  dir.tolerances = {1e-6};
  g_dirichlet_audit = audit(dir);
  auto again = dir;
  again.threads = 1;
  const auto second = audit(again);
  c.expect(audit_bytes(g_dirichlet_audit) == audit_bytes(second), "two dirichlet runs differ");

  for (auto v : kAllVariants) {
    std::size_t wd_or_better = 0;
    for (const auto& row : g_dirichlet_audit.rows) {
      const auto cls = row.classify(v, 1e-6);
      wd_or_better += cls && *cls != ProblemClass::Holistic;
    }
    const double frac = static_cast<double>(wd_or_better) / 1000.0;
    c.expect(frac < 0.01, "dirichlet WD-or-better fraction under " + std::string(to_string(v)));
    c.detail << ' ' << to_string(v) << "=" << frac;
  }

  AuditConfig prod = dir;
  prod.families = {Family::Product};
  prod.count = 100;
  g_product_audit = audit(prod);
  std::size_t decomposable = 0, consistent = 0;
  for (const auto& row : g_product_audit.rows) {
    decomposable += row.classify(IndependenceVariant::Symmetric, 1e-6) == ProblemClass::Decomposable;
    consistent += row.lemma && row.lemma->cf.max <= 1e-6;
  }
  c.expect(decomposable == 100, "product Decomposable " + std::to_string(decomposable) + "/100");
  c.expect(consistent == 100, "product cf-consistent " + std::to_string(consistent) + "/100");
  c.expect(audit_bytes(g_product_audit) == audit_bytes(audit(prod)), "two product runs differ");

  std::ofstream rows(g_out / "audit_dirichlet_rows.csv", std::ios::binary);
  write_rows_csv(g_dirichlet_audit, rows);
  std::ofstream summary(g_out / "audit_dirichlet_summary.csv", std::ios::binary);
  write_summary_csv(g_dirichlet_audit, summary);
  std::ofstream prows(g_out / "audit_product_rows.csv", std::ios::binary);
  write_rows_csv(g_product_audit, prows);
  std::ofstream psummary(g_out / "audit_product_summary.csv", std::ios::binary);
  write_summary_csv(g_product_audit, psummary);
  c.detail << " product: D=" << decomposable << " cf-consistent=" << consistent;
}

// 7
void classifier_corollary(Check& c) {
  AuditConfig mixed;
  mixed.families = {Family::NaiveBayes, Family::XorNoise, Family::Product, Family::Dirichlet};
  mixed.count = 100;
  mixed.attributes = 4;
  mixed.seed = 42;
  mixed.product_condition = false;
  const auto extra = audit(mixed);

  const std::vector<double> grid = kDefaultToleranceGrid;
  std::size_t rows = 0, violations = 0, decomposables = 0;
  for (const AuditReport* report : std::initializer_list<const AuditReport*>{&g_dirichlet_audit, &g_product_audit, &extra}) {
    for (const auto& row : report->rows) {
      ++rows;
      const auto dist = sample_distribution(row.family, row.k, row.seed);
      const Problem p(dist.space(), 0);
      for (auto v : kAllVariants) {
        int previous = static_cast<int>(ProblemClass::Holistic);
        for (double tol : grid) {
          const auto cls = row.classify(v, tol);
          if (!cls) continue;
          if (*cls == ProblemClass::Decomposable) {
            ++decomposables;
            violations += !is_weakly_decomposable(dist, p, v, tol);
          }
          violations += static_cast<int>(*cls) > previous;
          previous = static_cast<int>(*cls);
        }
      }
    }
  }
  c.expect(decomposables > 0, "no Decomposable rows to check");
  c.expect(violations == 0, std::to_string(violations) + " corollary/monotonicity violations");
  c.detail << " rows=" << rows << " decomposable-checks=" << decomposables;
}

// 8
void decomposer(Check& c) {
  const auto x2 = greedy_decompose(fixtures::xor1(), kProblem, 1e-9, 2);
  c.expect(x2.trace.size() == 1, "XOR1 size-2 merges = " + std::to_string(x2.trace.size()));
  c.near(x2.error.max_error, 0.0, 1e-12, "XOR1 size-2 max_error");
  const auto x1 = greedy_decompose(fixtures::xor1(), kProblem, 1e-9, 1);
  c.near(x1.error.max_error, 0.5, 1e-12, "XOR1 size-1 max_error");
  for (auto name : {"NB1", "PR1"}) {
    const auto r = greedy_decompose(fixtures::by_name(name), kProblem, 1e-9, 2);
    c.expect(r.trace.empty(), std::string(name) + " needed merges");
  }
  write_file(g_out / "decompose_xor1_g2.json", decomposition_to_json(x2, fixtures::xor1().space()));
  write_file(g_out / "decompose_xor1_g1.json", decomposition_to_json(x1, fixtures::xor1().space()));

  double worst = 0.0;
  for (std::uint64_t i = 0; i < 100; ++i) {
    const auto d = sample_distribution(Family::Dirichlet, 4, 42 + i);
    const Problem p(d.space(), 0);
    worst = std::max(worst, partition_error(d, p, EvidencePartition::single_group(p)).max_error);
  }
  c.near(worst, 0.0, 1e-12, "single-group error over 100 dirichlet(k=4)");
}

// 9
void error_handling(Check& c) {
  c.expect_error([] { conditional(fixtures::xor1(), Event{}, Event{{0, true}, kNotA, kNotB}); },
                 ErrorKind::ZeroProbabilityEvidence, "zero-probability conditioning");
  c.expect_error([] { combine(BeliefMeasures::from(1, 0), BeliefMeasures::from(0, 1)); },
                 ErrorKind::ContradictoryCertainty, "contradictory certainty");
  c.expect_error([] { parse_distribution("{\"attributes\": [\"h\", \"a\"], \"probabilities\": [1, 0, 0]}"); },
                 ErrorKind::LengthMismatch, "short probability vector");
  c.expect_error([] { parse_distribution("not json"); }, ErrorKind::MalformedInput, "malformed file");
  c.expect_error([] { sample_distribution(Family::Dirichlet, 21, 0); }, ErrorKind::SpaceTooLarge,
                 "oversized space");

  using testing_support::run_command;
  const std::string cli = CFBAYES_CLI_PATH;
  const std::string fx = CFBAYES_FIXTURE_DIR;
  write_file(g_out / "zero.json",
             R"({"attributes": ["h","a","b"], "probabilities": [0.2,0.1,0.1,0,0.2,0.2,0.2,0]})");
  write_file(g_out / "malformed.json", R"({"attributes": ["h","a","b"], "probabilities": [0.5, 0.5]})");
  const auto status = [&](const std::string& args) { return run_command(cli + " " + args).status; };
  c.expect(status("cf --dist " + (g_out / "zero.json").string() +
                  " --hypothesis h --evidence a=true,b=true") == 2,
           "CLI zero-probability exit 2");
  c.expect(status("classify --dist " + (g_out / "malformed.json").string() + " --hypothesis h") == 1,
           "CLI malformed file exit 1");
  c.expect(status("gen --family dirichlet --attrs 21 --out " + (g_out / "big.json").string()) == 1,
           "CLI oversized space exit 1");
  c.expect(status("classify --dist " + fx + "/NB1.json") == 3, "CLI usage exit 3");

  // CLI report outputs join the scan below.
  c.expect(status("audit --families product,naive-bayes,xor-noise --count 50 --attrs 3 --out-dir " +
                  (g_out / "cli_audit").string()) == 0,
           "CLI audit");
  const auto dec = run_command(cli + " decompose --dist " + fx + "/XOR1.json --hypothesis h --max-group-size 2");
  c.expect(dec.status == 0, "CLI decompose");
  write_file(g_out / "cli_decompose_xor1.json", dec.out);

  std::size_t scanned = 0;
  for (const auto& entry : fs::recursive_directory_iterator(g_out)) {
    const auto ext = entry.path().extension();
    if (ext != ".csv" && ext != ".json") continue;
    if (entry.path().filename() == "malformed.json" || entry.path().filename() == "zero.json") continue;
    ++scanned;
    std::string text = slurp(entry.path());
    std::transform(text.begin(), text.end(), text.begin(), [](unsigned char ch) { return std::tolower(ch); });
    for (const char* bad : {"nan", "inf", "null"}) {
      c.expect(text.find(bad) == std::string::npos,
               entry.path().filename().string() + " contains " + bad);
    }
  }
  c.expect(scanned >= 8, "too few report files scanned: " + std::to_string(scanned));
  c.detail << " scanned " << scanned << " report files";
}

}  // namespace

int main(int argc, char** argv) {
  g_out = argc > 1 ? fs::path(argv[1]) : fs::temp_directory_path() / "cfbayes_acceptance";
  fs::remove_all(g_out);
  fs::create_directories(g_out);

  const std::vector<Criterion> criteria{
      {1, "oracle fixture suite", 1.0, oracle_fixtures},
      {2, "CF mapping suite", 0.0, cf_mapping},
      {3, "combination algebra", 5.0, combination_algebra},
      {4, "lemma-gap fixtures", 0.0, lemma_gap_fixtures},
      {5, "product-condition equivalence", 10.0, product_condition},
      {6, "rarity audit", 30.0, rarity_audit},
      {7, "classifier corollary", 0.0, classifier_corollary},
      {8, "decomposer", 10.0, decomposer},
      {9, "error handling and report hygiene", 0.0, error_handling},
  };

  int failures = 0;
  for (const auto& cr : criteria) {
    Check check;
    const auto start = std::chrono::steady_clock::now();
    try {
      cr.body(check);
    } catch (const std::exception& e) {
      check.expect(false, std::string("unexpected exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (cr.budget_seconds > 0.0 && secs >= cr.budget_seconds) {
      check.expect(false, "runtime " + std::to_string(secs) + " s over budget");
    }
    failures += !check.ok;
    std::printf("[%s] criterion %d: %s (%.3f s)%s\n", check.ok ? "PASS" : "FAIL", cr.id, cr.title.c_str(),
                secs, check.detail.str().c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
