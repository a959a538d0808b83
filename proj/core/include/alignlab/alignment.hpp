#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "alignlab/model.hpp"

namespace alignlab {

/// Log-likelihood-ratio weights of the minimum weighted distance estimator:
/// w1 = log(p11 p00 / (p10 p01)), w2 likewise for the attribute law.
struct Weights {
  double w1 = 0.0;
  double w2 = 0.0;
};

/// Requires all eight entries positive and positive correlation on both laws.
Weights weights(const ModelParams& params);

/// Joint indicator counts over a declared pair set: mu[i][j] counts user pairs
/// with (g1, g2)(e) = (i, j), nu likewise for attribute pairs.
struct MuNuCounts {
  std::array<std::array<std::int64_t, 2>, 2> mu{{{0, 0}, {0, 0}}};
  std::array<std::array<std::int64_t, 2>, 2> nu{{{0, 0}, {0, 0}}};

  std::int64_t mu_total() const { return mu[0][0] + mu[0][1] + mu[1][0] + mu[1][1]; }
  std::int64_t nu_total() const { return nu[0][0] + nu[0][1] + nu[1][0] + nu[1][1]; }
};

/// Counts over all vertex pairs of two same-shape graphs.
MuNuCounts joint_counts(const AttributedGraph& g1, const AttributedGraph& g2);

/// Hamming distance restricted to user-user pairs.
std::int64_t delta_u(const AttributedGraph& g1, const AttributedGraph& g2);
/// Hamming distance restricted to user-attribute pairs.
std::int64_t delta_a(const AttributedGraph& g1, const AttributedGraph& g2);

/// Integer mismatch counts (du, da) of g1 against perm^-1(g2_anon), computed
/// without materializing the relabeled graph.
struct DistanceCounts {
  std::int64_t du = 0;
  std::int64_t da = 0;
};
DistanceCounts distance_counts(const AttributedGraph& g1, const AttributedGraph& g2_anon,
                               const Permutation& perm);

/// w1 * du + w2 * da for the alignment perm.
double weighted_distance(const AttributedGraph& g1, const AttributedGraph& g2_anon,
                         const Permutation& perm, const Weights& w);

/// Weighted-distance excess of perm over the identity on a plain pair:
/// w1 (Du(g1, perm(g2)) - Du(g1, g2)) + w2 (Da(g1, perm(g2)) - Da(g1, g2)).
double delta_pi(const AttributedGraph& g1, const AttributedGraph& g2, const Permutation& perm,
                const Weights& w);

struct AlignmentOutcome {
  std::vector<Permutation> minimizers;  // lexicographic order, never empty
  double min_distance = 0.0;
  bool unique = false;
  /// Set when ground truth was supplied: unique and equal to it.
  std::optional<bool> matches_truth;

  /// One minimizer drawn uniformly; deterministic in the seed.
  const Permutation& tie_break(std::uint64_t seed) const;
};

inline constexpr int kDefaultAlignCap = 9;
/// Distances within this of the minimum count as tied.
inline constexpr double kDistanceTieTolerance = 1e-9;

/// Exhaustive minimum weighted distance estimator over S_n. Returns the full
/// argmin set. Requires n <= cap.
AlignmentOutcome map_align(const AttributedGraph& g1, const AttributedGraph& g2_anon,
                           const ModelParams& params, int cap = kDefaultAlignCap,
                           const std::optional<Permutation>& truth = std::nullopt);

/// Log of the unnormalized posterior of perm given (g1, g2_anon):
/// sum mu_ij log p_ij + sum nu_ij log q_ij of (g1, perm^-1(g2_anon)).
/// Cross-checks the counts against the permutation-invariant edge totals.
double posterior_oracle(const AttributedGraph& g1, const AttributedGraph& g2_anon,
                        const Permutation& perm, const ModelParams& params);

}  // namespace alignlab
