#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "alignlab/alignment.hpp"
#include "alignlab/bounds.hpp"
#include "alignlab/equivalence.hpp"
#include "alignlab/model.hpp"
#include "alignlab/stats.hpp"

namespace alignlab {

/// Seed of trial `trial_index` of cell `cell_index`; the only coupling
/// between the master seed and any random draw, so results are independent
/// of worker count and scheduling.
std::uint64_t trial_seed(std::uint64_t master_seed, std::int64_t cell_index,
                         std::int64_t trial_index);

struct CellResult {
  ModelParams params;
  std::int64_t trials = 0;
  std::int64_t successes = 0;        // unique minimizer equal to the truth
  std::int64_t tie_break_successes = 0;  // seeded uniform tie-break, for context
  double success_rate = 0.0;
  WilsonInterval ci;                 // 95% Wilson interval of success_rate
  std::int64_t x_zero_trials = 0;    // trials whose intersection graph had X = 0
  double mean_success_ceiling = 0.0; // average of 1/(X+1) over trials
  double margin_thm1 = 0.0;
  double margin_lemma2 = 0.0;
  double margin_converse = 0.0;
  std::string region;
};

/// Empirical exact-alignment rate of the exhaustive estimator: per trial,
/// sample a pair, draw the hidden permutation, anonymize, align. Ties count
/// as failure; a seeded tie-break column is reported separately.
CellResult mc_alignment_success(const ModelParams& params, std::int64_t trials,
                                std::uint64_t seed, int cap = kDefaultAlignCap,
                                std::int64_t cell_index = 0);

struct DeltaEventEstimate {
  std::int64_t trials = 0;
  std::int64_t hits = 0;  // delta_pi <= 0 (within tolerance)
  double rate = 0.0;
  WilsonInterval ci;
};

/// Empirical frequency of the misalignment event of one fixed permutation.
DeltaEventEstimate mc_delta_event(const ModelParams& params, const Permutation& perm,
                                  std::int64_t trials, std::uint64_t seed);

struct EquivFrequencies {
  std::int64_t trials = 0;
  double pair_freq = 0.0;      // per unordered pair
  double triple_freq = 0.0;    // per unordered triple
  double two_pair_freq = 0.0;  // per unordered disjoint pair of pairs
  // Per-trial sample standard deviations of the tuple-averaged indicators.
  double pair_sd = 0.0;
  double triple_sd = 0.0;
  double two_pair_sd = 0.0;
};

/// Samples intersection graphs and averages indistinguishability event
/// frequencies, normalized per tuple.
EquivFrequencies mc_equiv_frequencies(const ModelParams& params, std::int64_t trials,
                                      std::uint64_t seed);

/// Grid specification: the cell list is the cartesian product, row-major in
/// (n, m, p, q) order.
struct SweepSpec {
  std::vector<int> n_values;
  std::vector<int> m_values;
  std::vector<JointEdgeDistribution> p_values;
  std::vector<JointEdgeDistribution> q_values;
  std::int64_t trials = 2000;
  std::uint64_t seed = 0;
  int cap = kDefaultAlignCap;
  double eps = 0.0;  // region-classification slack

  std::int64_t cell_count() const;
  ModelParams cell_params(std::int64_t index) const;
  void validate_cells() const;
};

struct SweepCellOutcome {
  std::int64_t cell_index = 0;
  std::optional<CellResult> result;  // empty on failure
  std::string error;                 // failure description when empty
};

/// Runs every cell; trials may fan out over `threads` workers without
/// affecting any count. Cell failures are captured, not thrown.
std::vector<SweepCellOutcome> phase_sweep(const SweepSpec& spec, int threads = 1);

/// Fixed-schema CSV of the sweep (header + one row per successful cell, in
/// cell order); failed cells become trailing "# cell <i> error: ..." lines.
std::string sweep_to_csv(const std::vector<SweepCellOutcome>& outcomes);

}  // namespace alignlab
