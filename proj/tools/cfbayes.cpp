// cfbayes: certainty-factor vs. Bayesian consistency toolkit.
//
// Exit status: 0 success, 1 input/validation error, 2 computation error,
// 3 usage error. Reports go to stdout or files, diagnostics to stderr.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cfbayes/audit.hpp"
#include "cfbayes/cf.hpp"
#include "cfbayes/classifier.hpp"
#include "cfbayes/decomposer.hpp"
#include "cfbayes/error.hpp"
#include "cfbayes/io.hpp"
#include "cfbayes/lab.hpp"
#include "cfbayes/sampler.hpp"

namespace {

using namespace cfbayes;

enum Exit : int { kOk = 0, kInputError = 1, kComputeError = 2, kUsageError = 3 };

int exit_code(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::ZeroProbabilityEvidence:
    case ErrorKind::ContradictoryCertainty:
    case ErrorKind::EverythingSkipped:
    case ErrorKind::NotSameDirection:
      return kComputeError;
    default:
      return kInputError;
  }
}

/// 12 significant digits for human-readable output.
std::string human(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

double parse_number(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) {
    throw Error(ErrorKind::InvalidArgument, "bad " + what + " '" + text + "'");
  }
  return v;
}

IndependenceVariant variant_from(const std::string& text) {
  if (auto v = parse_variant(text)) return *v;
  throw Error(ErrorKind::InvalidArgument,
              "unknown variant '" + text + "' (h-true, h-false, symmetric)");
}

std::string classification_line(const ClassificationReport& r) {
  return std::string(to_string(r.cls)) + " ci_gap=" + human(r.ci_gap) +
         " marginal_gap=" + human(r.marginal_gap) + " variant=" +
         std::string(to_string(r.variant)) + " tol=" + human(r.tolerance);
}

std::string measures(const BeliefMeasures& m) {
  return "mb=" + human(m.mb) + " md=" + human(m.md) + " cf=" + human(m.cf);
}

struct GenArgs {
  std::string family;
  std::size_t attrs = 3;
  std::uint64_t seed = 0;
  std::string out;
};

int run_gen(const GenArgs& a) {
  const auto dist = sample_distribution(parse_family(a.family), a.attrs, a.seed);
  save_distribution(dist, a.out);
  const Problem problem(dist.space(), 0);
  std::cout << "wrote " << a.out << " (" << dist.space().state_count() << " states, family "
            << a.family << ", seed " << a.seed << ")\n";
  for (auto v : kAllVariants) {
    try {
      std::cout << "hypothesis " << dist.space().name(0) << ": "
                << classification_line(classify(dist, problem, v)) << '\n';
    } catch (const Error& e) {
      std::cout << "hypothesis " << dist.space().name(0) << ": unclassified variant="
                << to_string(v) << " (" << e.what() << ")\n";
    }
  }
  return kOk;
}

struct ClassifyArgs {
  std::string dist;
  std::string hypothesis;
  std::string variant = "symmetric";
  double tol = kDefaultClassifyTolerance;
};

int run_classify(const ClassifyArgs& a) {
  const auto dist = load_distribution(a.dist);
  const Problem problem(dist.space(), dist.space().index_of(a.hypothesis));
  const auto variant = variant_from(a.variant);
  std::cout << classification_line(classify(dist, problem, variant, a.tol)) << '\n';
  return kOk;
}

struct CfArgs {
  std::string dist;
  std::string hypothesis;
  std::string evidence;
};

Event parse_evidence(const PropositionalSpace& space, const Problem& problem,
                     const std::string& text) {
  std::vector<Literal> lits;
  for (const auto& item : split(text, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) {
      throw Error(ErrorKind::InvalidArgument, "evidence item '" + item + "' is not name=value");
    }
    const auto name = item.substr(0, eq);
    const auto value = item.substr(eq + 1);
    if (value != "true" && value != "false") {
      throw Error(ErrorKind::InvalidArgument, "evidence value must be true or false: '" + item + "'");
    }
    const auto attr = space.index_of(name);
    if (attr == problem.hypothesis()) {
      throw Error(ErrorKind::InvalidArgument, "the hypothesis cannot be used as evidence");
    }
    lits.push_back({attr, value == "true"});
  }
  if (lits.empty()) throw Error(ErrorKind::InvalidArgument, "no evidence given");
  return Event(std::move(lits));
}

int run_cf(const CfArgs& a) {
  const auto dist = load_distribution(a.dist);
  const Problem problem(dist.space(), dist.space().index_of(a.hypothesis));
  const Event evidence = parse_evidence(dist.space(), problem, a.evidence);
  const auto r = gap_record_for_event(dist, problem, evidence);
  std::cout << "direct   " << measures(r.direct) << '\n'
            << "combined " << measures(r.combined) << '\n'
            << "m1_gap=" << human(r.m1_gap) << " m2_gap=" << human(r.m2_gap)
            << " cf_gap=" << human(r.cf_gap) << '\n';
  return kOk;
}

struct AuditArgs {
  std::string families;
  std::size_t count = 100;
  std::size_t attrs = 3;
  std::uint64_t seed = 42;
  std::string tols;
  std::string out_dir = ".";
  std::size_t threads = 0;
};

int run_audit(const AuditArgs& a) {
  AuditConfig config;
  for (const auto& f : split(a.families, ',')) config.families.push_back(parse_family(f));
  config.count = a.count;
  config.attributes = a.attrs;
  config.seed = a.seed;
  config.threads = a.threads;
  if (!a.tols.empty()) {
    config.tolerances.clear();
    for (const auto& t : split(a.tols, ',')) config.tolerances.push_back(parse_number(t, "tolerance"));
  }
  config.validate();

  const std::filesystem::path dir(a.out_dir);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw Error(ErrorKind::InvalidArgument, "cannot create " + dir.string());

  const auto report = audit(config);
  for (const auto& [name, writer] :
       {std::pair{"rows.csv", &write_rows_csv}, std::pair{"summary.csv", &write_summary_csv}}) {
    std::ofstream out(dir / name, std::ios::binary);
    if (!out) throw Error(ErrorKind::InvalidArgument, "cannot write " + (dir / name).string());
    writer(report, out);
  }
  std::cerr << "audited " << report.rows.size() << " distributions into " << dir.string() << '\n';
  return kOk;
}

struct DecomposeArgs {
  std::string dist;
  std::string hypothesis;
  double tol = 1e-9;
  std::size_t max_group_size = 0;  // 0: unbounded
  std::string out;
};

int run_decompose(const DecomposeArgs& a) {
  const auto dist = load_distribution(a.dist);
  const Problem problem(dist.space(), dist.space().index_of(a.hypothesis));
  const std::size_t limit = a.max_group_size ? a.max_group_size : problem.evidence().size();
  const auto report = greedy_decompose(dist, problem, a.tol, limit);
  const auto json = decomposition_to_json(report, dist.space());
  if (!a.out.empty()) {
    std::ofstream out(a.out);
    if (!out) throw Error(ErrorKind::InvalidArgument, "cannot write " + a.out);
    out << json;
  }
  std::cout << json;
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Certainty factors against exact Bayesian belief"};
  app.require_subcommand(1);
  int status = kOk;

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Sample a random joint distribution");
  gen_cmd->add_option("--family", gen.family, "dirichlet, product, naive-bayes, xor-noise")->required();
  gen_cmd->add_option("--attrs", gen.attrs, "Attribute count")->required();
  gen_cmd->add_option("--seed", gen.seed, "Random seed");
  gen_cmd->add_option("--out", gen.out, "Output distribution file")->required();

  ClassifyArgs cls;
  auto* cls_cmd = app.add_subcommand("classify", "Decomposability class of a problem");
  cls_cmd->add_option("--dist", cls.dist, "Distribution file")->required();
  cls_cmd->add_option("--hypothesis", cls.hypothesis, "Hypothesis attribute")->required();
  cls_cmd->add_option("--variant", cls.variant, "h-true, h-false or symmetric");
  cls_cmd->add_option("--tol", cls.tol, "Tolerance");

  CfArgs cf;
  auto* cf_cmd = app.add_subcommand("cf", "Direct vs combined certainty factors");
  cf_cmd->add_option("--dist", cf.dist, "Distribution file")->required();
  cf_cmd->add_option("--hypothesis", cf.hypothesis, "Hypothesis attribute")->required();
  cf_cmd->add_option("--evidence", cf.evidence, "name=true|false,...")->required();

  AuditArgs aud;
  auto* aud_cmd = app.add_subcommand("audit", "Sample distributions and tabulate consistency gaps");
  aud_cmd->add_option("--families", aud.families, "Comma-separated families")->required();
  aud_cmd->add_option("--count", aud.count, "Distributions per family");
  aud_cmd->add_option("--attrs", aud.attrs, "Attribute count");
  aud_cmd->add_option("--seed", aud.seed, "Base seed");
  aud_cmd->add_option("--tols", aud.tols, "Comma-separated tolerance grid");
  aud_cmd->add_option("--out-dir", aud.out_dir, "Directory for rows.csv and summary.csv");
  aud_cmd->add_option("--threads", aud.threads, "Worker threads (0: all cores)");

  DecomposeArgs dec;
  auto* dec_cmd = app.add_subcommand("decompose", "Greedy evidence grouping for holistic problems");
  dec_cmd->add_option("--dist", dec.dist, "Distribution file")->required();
  dec_cmd->add_option("--hypothesis", dec.hypothesis, "Hypothesis attribute")->required();
  dec_cmd->add_option("--tol", dec.tol, "Target max error");
  dec_cmd->add_option("--max-group-size", dec.max_group_size, "Largest allowed group");
  dec_cmd->add_option("--out", dec.out, "Also write the JSON report here");

  auto guarded = [&status](auto fn) {
    return [&status, fn] {
      try {
        status = fn();
      } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        status = exit_code(e);
      } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        status = kInputError;
      }
    };
  };
  gen_cmd->callback(guarded([&] { return run_gen(gen); }));
  cls_cmd->callback(guarded([&] { return run_classify(cls); }));
  cf_cmd->callback(guarded([&] { return run_cf(cf); }));
  aud_cmd->callback(guarded([&] { return run_audit(aud); }));
  dec_cmd->callback(guarded([&] { return run_decompose(dec); }));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsageError;
  }
  return status;
}
