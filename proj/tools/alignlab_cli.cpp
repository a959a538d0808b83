// Command-line surface for the attributed graph-pair alignment toolkit.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "alignlab/alignment.hpp"
#include "alignlab/bounds.hpp"
#include "alignlab/experiments.hpp"
#include "alignlab/json_io.hpp"
#include "alignlab/model.hpp"
#include "alignlab/verification.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitSizeCap = 3;
constexpr int kExitSweepCell = 4;
constexpr int kExitVerification = 5;

int exit_code_for(const alignlab::Error& e) {
  return e.code() == alignlab::Errc::n_too_large ? kExitSizeCap : kExitValidation;
}

alignlab::JointEdgeDistribution parse_dist(const std::string& csv) {
  std::vector<double> vals;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) vals.push_back(std::stod(item));
  if (vals.size() != 4)
    alignlab::fail(alignlab::Errc::invalid_argument,
                   "distribution must be four comma-separated values p11,p10,p01,p00");
  return alignlab::validate(vals[0], vals[1], vals[2], vals[3]);
}

std::vector<int> parse_perm(const std::string& csv) {
  std::vector<int> vals;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) vals.push_back(std::stoi(item));
  return vals;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) alignlab::fail(alignlab::Errc::invalid_argument, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content << "\n";
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) alignlab::fail(alignlab::Errc::invalid_argument, "cannot write " + path);
  out << content;
  if (content.empty() || content.back() != '\n') out << "\n";
}

int default_threads() {
  if (const char* env = std::getenv("ALIGN_LAB_THREADS")) {
    const int t = std::atoi(env);
    if (t >= 1) return t;
  }
  return 1;
}

struct SampleArgs {
  int n = 3;
  int m = 0;
  std::string p, q;
  std::uint64_t seed = 0;
  std::string perm;
  std::string out;
};

int cmd_sample(const SampleArgs& args) {
  const alignlab::ModelParams params{args.n, args.m, parse_dist(args.p), parse_dist(args.q)};
  alignlab::check_params(params);
  const alignlab::GraphPair pair = alignlab::sample_pair(params, args.seed);
  const alignlab::Permutation truth =
      args.perm.empty() ? alignlab::Permutation::random(args.n, args.seed)
                        : alignlab::Permutation(parse_perm(args.perm));
  if (truth.size() != args.n)
    alignlab::fail(alignlab::Errc::dimension_mismatch, "--perm length must equal --n");
  const alignlab::AttributedGraph g2prime = alignlab::anonymize(pair.g2, truth);

  nlohmann::ordered_json j;
  j["n"] = args.n;
  j["m"] = args.m;
  j["p"] = nlohmann::ordered_json::parse(alignlab::distribution_to_json(params.p_user));
  j["q"] = nlohmann::ordered_json::parse(alignlab::distribution_to_json(params.q_attr));
  j["seed"] = args.seed;
  j["perm"] = truth.mapping();
  j["g1"] = nlohmann::ordered_json::parse(alignlab::graph_to_json(pair.g1));
  j["g2"] = nlohmann::ordered_json::parse(alignlab::graph_to_json(pair.g2));
  j["g2prime"] = nlohmann::ordered_json::parse(alignlab::graph_to_json(g2prime));
  write_output(args.out, j.dump(2));
  std::cerr << "perm:";
  for (int v : truth.mapping()) std::cerr << " " << v;
  std::cerr << "\n";
  return kExitOk;
}

struct AlignArgs {
  std::string g1_path, g2prime_path;
  std::string p, q;
  int cap = alignlab::kDefaultAlignCap;
  std::string out;
};

int cmd_align(const AlignArgs& args) {
  const alignlab::AttributedGraph g1 = alignlab::graph_from_json(read_file(args.g1_path));
  const alignlab::AttributedGraph g2p = alignlab::graph_from_json(read_file(args.g2prime_path));
  const alignlab::ModelParams params{g1.n(), g1.m(), parse_dist(args.p), parse_dist(args.q)};
  const alignlab::AlignmentOutcome outcome = alignlab::map_align(g1, g2p, params, args.cap);
  write_output(args.out, alignlab::alignment_outcome_to_json(outcome));
  return kExitOk;
}

struct BoundsArgs {
  int n = 2;
  int m = 0;
  std::string p, q;
  double eps = 0.0;
  std::string out;
};

int cmd_bounds(const BoundsArgs& args) {
  const alignlab::ModelParams params{args.n, args.m, parse_dist(args.p), parse_dist(args.q)};
  const alignlab::MarginReport report = alignlab::margin_report(params, args.eps);
  write_output(args.out, alignlab::margin_report_to_json(report));
  return kExitOk;
}

struct PhaseArgs {
  std::string config_path;
  std::string out;
  int threads = 0;
};

int cmd_phase(const PhaseArgs& args) {
  const alignlab::SweepSpec spec = alignlab::sweep_spec_from_json(read_file(args.config_path));
  const int threads = args.threads >= 1 ? args.threads : default_threads();
  const auto outcomes = alignlab::phase_sweep(spec, threads);
  write_output(args.out, alignlab::sweep_to_csv(outcomes));
  int failed = 0;
  for (const auto& cell : outcomes) {
    if (!cell.result.has_value()) {
      ++failed;
      std::cerr << "cell " << cell.cell_index << " failed: " << cell.error << "\n";
    }
  }
  std::cerr << "cells: " << outcomes.size() - static_cast<std::size_t>(failed) << " ok, "
            << failed << " failed\n";
  return failed > 0 ? kExitSweepCell : kExitOk;
}

struct VerifyArgs {
  std::vector<std::string> suites;
  std::uint64_t seed = 12345;
};

int cmd_verify(const VerifyArgs& args) {
  const auto results = alignlab::run_verification(args.suites, args.seed);
  bool any_failure = false;
  for (const auto& suite : results) {
    if (suite.passed()) {
      std::printf("suite %-8s PASS  (%d checks)\n", suite.name.c_str(), suite.checks);
    } else {
      any_failure = true;
      std::printf("suite %-8s FAIL  (%d of %d checks failed)\n", suite.name.c_str(),
                  suite.failures, suite.checks);
      for (const auto& msg : suite.messages) std::printf("  - %s\n", msg.c_str());
    }
  }
  return any_failure ? kExitVerification : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"attributed graph-pair alignment toolkit"};
  app.require_subcommand(1);

  SampleArgs sample;
  auto* sample_cmd = app.add_subcommand("sample", "sample a correlated pair and anonymize it");
  sample_cmd->add_option("--n", sample.n, "user vertex count")->required();
  sample_cmd->add_option("--m", sample.m, "attribute vertex count")->required();
  sample_cmd->add_option("--p", sample.p, "user-pair law p11,p10,p01,p00")->required();
  sample_cmd->add_option("--q", sample.q, "attribute-pair law q11,q10,q01,q00")->required();
  sample_cmd->add_option("--seed", sample.seed, "sampling seed")->required();
  sample_cmd->add_option("--perm", sample.perm, "explicit permutation (comma list); default random");
  sample_cmd->add_option("--out", sample.out, "output path (default stdout)");

  AlignArgs align;
  auto* align_cmd = app.add_subcommand("align", "exhaustive minimum weighted distance alignment");
  align_cmd->add_option("--g1", align.g1_path, "graph JSON")->required();
  align_cmd->add_option("--g2prime", align.g2prime_path, "anonymized graph JSON")->required();
  align_cmd->add_option("--p", align.p, "user-pair law")->required();
  align_cmd->add_option("--q", align.q, "attribute-pair law")->required();
  align_cmd->add_option("--cap", align.cap, "exhaustive search cap");
  align_cmd->add_option("--out", align.out, "output path (default stdout)");

  BoundsArgs bounds;
  auto* bounds_cmd = app.add_subcommand("bounds", "margins and feasibility region");
  bounds_cmd->add_option("--n", bounds.n, "user vertex count")->required();
  bounds_cmd->add_option("--m", bounds.m, "attribute vertex count")->required();
  bounds_cmd->add_option("--p", bounds.p, "user-pair law")->required();
  bounds_cmd->add_option("--q", bounds.q, "attribute-pair law")->required();
  bounds_cmd->add_option("--eps", bounds.eps, "margin slack for region labels");
  bounds_cmd->add_option("--out", bounds.out, "output path (default stdout)");

  PhaseArgs phase;
  auto* phase_cmd = app.add_subcommand("phase", "Monte Carlo success-rate sweep to CSV");
  phase_cmd->add_option("--config", phase.config_path, "sweep spec JSON")->required();
  phase_cmd->add_option("--out", phase.out, "CSV output path (default stdout)");
  phase_cmd->add_option("--threads", phase.threads, "worker threads (default ALIGN_LAB_THREADS or 1)");

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "run the self-check suites");
  verify_cmd->add_option("--suite", verify.suites, "suite name (repeatable; default all)");
  verify_cmd->add_option("--seed", verify.seed, "randomization seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitValidation;
  }

  try {
    if (sample_cmd->parsed()) return cmd_sample(sample);
    if (align_cmd->parsed()) return cmd_align(align);
    if (bounds_cmd->parsed()) return cmd_bounds(bounds);
    if (phase_cmd->parsed()) return cmd_phase(phase);
    if (verify_cmd->parsed()) return cmd_verify(verify);
  } catch (const alignlab::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }
  return kExitOk;
}
