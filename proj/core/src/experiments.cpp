#include "alignlab/experiments.hpp"

#include <cmath>
#include <cstdio>
#include <map>
#include <string>
#include <thread>

#include "alignlab/rng.hpp"
#include "alignlab/weight_poly.hpp"

namespace alignlab {

std::uint64_t trial_seed(std::uint64_t master_seed, std::int64_t cell_index,
                         std::int64_t trial_index) {
  return stable_hash({master_seed, static_cast<std::uint64_t>(cell_index),
                      static_cast<std::uint64_t>(trial_index)});
}

namespace {

struct CellAccumulator {
  std::int64_t successes = 0;
  std::int64_t tie_break_successes = 0;
  std::map<std::int64_t, std::int64_t> x_histogram;  // X value -> trial count

  void merge(const CellAccumulator& other) {
    successes += other.successes;
    tie_break_successes += other.tie_break_successes;
    for (const auto& [x, c] : other.x_histogram) x_histogram[x] += c;
  }
};

void run_alignment_trials(const ModelParams& params, std::uint64_t master_seed,
                          std::int64_t cell_index, std::int64_t first, std::int64_t last,
                          std::int64_t stride, int cap, CellAccumulator& acc) {
  for (std::int64_t t = first; t < last; t += stride) {
    const std::uint64_t ts = trial_seed(master_seed, cell_index, t);
    const GraphPair pair = sample_pair(params, ts);
    const Permutation truth = Permutation::random(params.n, ts);
    const AttributedGraph g2_anon = anonymize(pair.g2, truth);
    const AlignmentOutcome outcome = map_align(pair.g1, g2_anon, params, cap, truth);
    if (outcome.matches_truth.value_or(false)) ++acc.successes;
    if (outcome.tie_break(ts) == truth) ++acc.tie_break_successes;
    const EquivStats es = count_indistinguishable(intersection(pair));
    ++acc.x_histogram[es.x_count];
  }
}

CellResult finalize_cell(const ModelParams& params, std::int64_t trials,
                         const CellAccumulator& acc, double eps) {
  CellResult cell;
  cell.params = params;
  cell.trials = trials;
  cell.successes = acc.successes;
  cell.tie_break_successes = acc.tie_break_successes;
  cell.success_rate = trials > 0 ? static_cast<double>(acc.successes) / trials : 0.0;
  cell.ci = wilson_interval(acc.successes, trials);
  double ceiling_sum = 0.0;
  for (const auto& [x, c] : acc.x_histogram) {
    if (x == 0) cell.x_zero_trials += c;
    ceiling_sum += static_cast<double>(c) * map_success_upper_given_x(x);
  }
  cell.mean_success_ceiling = trials > 0 ? ceiling_sum / trials : 0.0;
  cell.margin_thm1 = margin_thm1(params);
  cell.margin_lemma2 = margin_lemma2(params);
  cell.margin_converse = margin_converse(params);
  cell.region = classify_region(params, eps);
  return cell;
}

CellResult run_alignment_cell(const ModelParams& params, std::int64_t trials,
                              std::uint64_t master_seed, int cap, std::int64_t cell_index,
                              int threads, double eps) {
  check_params(params);
  if (trials < 1) fail(Errc::invalid_argument, "trials must be >= 1");
  CellAccumulator total;
  if (threads <= 1) {
    run_alignment_trials(params, master_seed, cell_index, 0, trials, 1, cap, total);
  } else {
    // Striped partition; every trial's outcome is a pure function of its
    // seed, and merges are integer sums, so the totals match any schedule.
    std::vector<CellAccumulator> partial(static_cast<std::size_t>(threads));
    std::vector<std::thread> workers;
    workers.reserve(static_cast<std::size_t>(threads));
    for (int w = 0; w < threads; ++w) {
      workers.emplace_back([&, w] {
        run_alignment_trials(params, master_seed, cell_index, w, trials, threads, cap,
                             partial[static_cast<std::size_t>(w)]);
      });
    }
    for (auto& th : workers) th.join();
    for (const auto& p : partial) total.merge(p);
  }
  return finalize_cell(params, trials, total, eps);
}

}  // namespace

CellResult mc_alignment_success(const ModelParams& params, std::int64_t trials,
                                std::uint64_t seed, int cap, std::int64_t cell_index) {
  return run_alignment_cell(params, trials, seed, cap, cell_index, 1, 0.0);
}

DeltaEventEstimate mc_delta_event(const ModelParams& params, const Permutation& perm,
                                  std::int64_t trials, std::uint64_t seed) {
  check_params(params);
  if (trials < 1) fail(Errc::invalid_argument, "trials must be >= 1");
  const Weights w = weights(params);
  DeltaEventEstimate est;
  est.trials = trials;
  for (std::int64_t t = 0; t < trials; ++t) {
    const GraphPair pair = sample_pair(params, trial_seed(seed, 0, t));
    if (delta_pi(pair.g1, pair.g2, perm, w) <= kCoeffTolerance) ++est.hits;
  }
  est.rate = static_cast<double>(est.hits) / static_cast<double>(trials);
  est.ci = wilson_interval(est.hits, trials);
  return est;
}

EquivFrequencies mc_equiv_frequencies(const ModelParams& params, std::int64_t trials,
                                      std::uint64_t seed) {
  check_params(params);
  if (trials < 1) fail(Errc::invalid_argument, "trials must be >= 1");
  const int n = params.n;
  const double pair_tuples = static_cast<double>(user_pair_count(n));
  const double triple_tuples =
      n >= 3 ? static_cast<double>(n) * (n - 1) * (n - 2) / 6.0 : 0.0;
  const double two_pair_tuples =
      n >= 4 ? 3.0 * static_cast<double>(n) * (n - 1) * (n - 2) * (n - 3) / 24.0 : 0.0;

  double sums[3] = {0.0, 0.0, 0.0};
  double sq_sums[3] = {0.0, 0.0, 0.0};
  for (std::int64_t t = 0; t < trials; ++t) {
    const GraphPair pair = sample_pair(params, trial_seed(seed, 0, t));
    const EquivStats es = count_indistinguishable(intersection(pair));
    const double vals[3] = {
        pair_tuples > 0.0 ? static_cast<double>(es.x_count) / pair_tuples : 0.0,
        triple_tuples > 0.0 ? static_cast<double>(es.triple_count) / triple_tuples : 0.0,
        two_pair_tuples > 0.0 ? static_cast<double>(es.two_disjoint_pair_count) / two_pair_tuples
                              : 0.0,
    };
    for (int k = 0; k < 3; ++k) {
      sums[k] += vals[k];
      sq_sums[k] += vals[k] * vals[k];
    }
  }
  EquivFrequencies f;
  f.trials = trials;
  const double nt = static_cast<double>(trials);
  f.pair_freq = sums[0] / nt;
  f.triple_freq = sums[1] / nt;
  f.two_pair_freq = sums[2] / nt;
  const auto sd = [&](int k, double mean) {
    if (trials < 2) return 0.0;
    const double var = std::max(0.0, (sq_sums[k] - nt * mean * mean) / (nt - 1.0));
    return std::sqrt(var);
  };
  f.pair_sd = sd(0, f.pair_freq);
  f.triple_sd = sd(1, f.triple_freq);
  f.two_pair_sd = sd(2, f.two_pair_freq);
  return f;
}

std::int64_t SweepSpec::cell_count() const {
  return static_cast<std::int64_t>(n_values.size()) * static_cast<std::int64_t>(m_values.size()) *
         static_cast<std::int64_t>(p_values.size()) * static_cast<std::int64_t>(q_values.size());
}

ModelParams SweepSpec::cell_params(std::int64_t index) const {
  const auto nq = static_cast<std::int64_t>(q_values.size());
  const auto np = static_cast<std::int64_t>(p_values.size());
  const auto nm = static_cast<std::int64_t>(m_values.size());
  const std::int64_t qi = index % nq;
  const std::int64_t pi = (index / nq) % np;
  const std::int64_t mi = (index / (nq * np)) % nm;
  const std::int64_t ni = index / (nq * np * nm);
  return ModelParams{n_values[static_cast<std::size_t>(ni)], m_values[static_cast<std::size_t>(mi)],
                     p_values[static_cast<std::size_t>(pi)], q_values[static_cast<std::size_t>(qi)]};
}

void SweepSpec::validate_cells() const {
  if (n_values.empty() || m_values.empty() || p_values.empty() || q_values.empty())
    fail(Errc::invalid_argument, "sweep grid has an empty axis");
  if (trials < 1) fail(Errc::invalid_argument, "trials must be >= 1");
  for (std::int64_t i = 0; i < cell_count(); ++i) check_params(cell_params(i));
}

std::vector<SweepCellOutcome> phase_sweep(const SweepSpec& spec, int threads) {
  spec.validate_cells();
  if (threads < 1) threads = 1;
  std::vector<SweepCellOutcome> outcomes;
  outcomes.reserve(static_cast<std::size_t>(spec.cell_count()));
  for (std::int64_t i = 0; i < spec.cell_count(); ++i) {
    SweepCellOutcome out;
    out.cell_index = i;
    try {
      out.result = run_alignment_cell(spec.cell_params(i), spec.trials, spec.seed, spec.cap, i,
                                      threads, spec.eps);
    } catch (const Error& e) {
      out.error = e.what();
    }
    outcomes.push_back(std::move(out));
  }
  return outcomes;
}

namespace {

std::string fmt9(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return buf;
}

}  // namespace

std::string sweep_to_csv(const std::vector<SweepCellOutcome>& outcomes) {
  std::string csv =
      "n,m,p11,p10,p01,p00,q11,q10,q01,q00,trials,successes,success_rate,ci_low,ci_high,"
      "margin_thm1,margin_lemma2,margin_converse,region\n";
  std::string failures;
  for (const auto& out : outcomes) {
    if (!out.result.has_value()) {
      failures += "# cell " + std::to_string(out.cell_index) + " error: " + out.error + "\n";
      continue;
    }
    const CellResult& c = *out.result;
    const auto& p = c.params.p_user;
    const auto& q = c.params.q_attr;
    csv += std::to_string(c.params.n) + "," + std::to_string(c.params.m) + "," + fmt9(p.p11) +
           "," + fmt9(p.p10) + "," + fmt9(p.p01) + "," + fmt9(p.p00) + "," + fmt9(q.p11) + "," +
           fmt9(q.p10) + "," + fmt9(q.p01) + "," + fmt9(q.p00) + "," + std::to_string(c.trials) +
           "," + std::to_string(c.successes) + "," + fmt9(c.success_rate) + "," + fmt9(c.ci.low) +
           "," + fmt9(c.ci.high) + "," + fmt9(c.margin_thm1) + "," + fmt9(c.margin_lemma2) + "," +
           fmt9(c.margin_converse) + "," + c.region + "\n";
  }
  return csv + failures;
}

}  // namespace alignlab
