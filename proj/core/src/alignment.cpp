#include "alignlab/alignment.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "alignlab/rng.hpp"

namespace alignlab {

Weights weights(const ModelParams& params) {
  check_params(params);
  const auto& p = params.p_user;
  const auto& q = params.q_attr;
  if (!p.all_positive() || !q.all_positive())
    fail(Errc::zero_entry, "weights need all eight distribution entries > 0");
  const double w1 = std::log(p.p11 * p.p00 / (p.p10 * p.p01));
  const double w2 = std::log(q.p11 * q.p00 / (q.p10 * q.p01));
  if (w1 <= 0.0 || w2 <= 0.0)
    fail(Errc::nonpositive_correlation,
         "weights w1=" + std::to_string(w1) + ", w2=" + std::to_string(w2) + " must be positive");
  return Weights{w1, w2};
}

static void require_same_shape(const AttributedGraph& g1, const AttributedGraph& g2) {
  if (g1.n() != g2.n() || g1.m() != g2.m())
    fail(Errc::dimension_mismatch, "graphs have different dimensions");
}

MuNuCounts joint_counts(const AttributedGraph& g1, const AttributedGraph& g2) {
  require_same_shape(g1, g2);
  MuNuCounts c;
  const int n = g1.n();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j)
      ++c.mu[g1.user_edge(i, j) ? 1 : 0][g2.user_edge(i, j) ? 1 : 0];
    for (int a = 0; a < g1.m(); ++a)
      ++c.nu[g1.attr_edge(i, a) ? 1 : 0][g2.attr_edge(i, a) ? 1 : 0];
  }
  return c;
}

std::int64_t delta_u(const AttributedGraph& g1, const AttributedGraph& g2) {
  require_same_shape(g1, g2);
  std::int64_t d = 0;
  const int n = g1.n();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (g1.user_edge(i, j) != g2.user_edge(i, j)) ++d;
  return d;
}

std::int64_t delta_a(const AttributedGraph& g1, const AttributedGraph& g2) {
  require_same_shape(g1, g2);
  std::int64_t d = 0;
  for (int i = 0; i < g1.n(); ++i)
    for (int w = 0; w < g1.attr_words_per_row(); ++w)
      d += std::popcount(g1.attr_row_word(i, w) ^ g2.attr_row_word(i, w));
  return d;
}

DistanceCounts distance_counts(const AttributedGraph& g1, const AttributedGraph& g2_anon,
                               const Permutation& perm) {
  require_same_shape(g1, g2_anon);
  if (perm.size() != g1.n()) fail(Errc::dimension_mismatch, "permutation length != n");
  DistanceCounts c;
  const int n = g1.n();
  // g1(i,j) against g2_anon(perm(i), perm(j)): the pair-level view of
  // comparing g1 with perm^-1(g2_anon).
  for (int i = 0; i < n; ++i) {
    const int pi = perm(i);
    for (int j = i + 1; j < n; ++j)
      if (g1.user_edge(i, j) != g2_anon.user_edge(pi, perm(j))) ++c.du;
    for (int w = 0; w < g1.attr_words_per_row(); ++w)
      c.da += std::popcount(g1.attr_row_word(i, w) ^ g2_anon.attr_row_word(pi, w));
  }
  return c;
}

double weighted_distance(const AttributedGraph& g1, const AttributedGraph& g2_anon,
                         const Permutation& perm, const Weights& w) {
  const DistanceCounts c = distance_counts(g1, g2_anon, perm);
  return w.w1 * static_cast<double>(c.du) + w.w2 * static_cast<double>(c.da);
}

double delta_pi(const AttributedGraph& g1, const AttributedGraph& g2, const Permutation& perm,
                const Weights& w) {
  require_same_shape(g1, g2);
  if (perm.size() != g1.n()) fail(Errc::dimension_mismatch, "permutation length != n");
  // Distances against perm(g2) and g2 itself; perm(g2) has edge (i,j) iff g2
  // has (perm^-1(i), perm^-1(j)), equivalently compare g1 at (perm(i), perm(j)).
  const Permutation inv = perm.inverse();
  const int n = g1.n();
  std::int64_t du_perm = 0;
  std::int64_t du_id = 0;
  std::int64_t da_perm = 0;
  std::int64_t da_id = 0;
  for (int i = 0; i < n; ++i) {
    const int qi = inv(i);
    for (int j = i + 1; j < n; ++j) {
      const bool e1 = g1.user_edge(i, j);
      if (e1 != g2.user_edge(qi, inv(j))) ++du_perm;
      if (e1 != g2.user_edge(i, j)) ++du_id;
    }
    for (int w2 = 0; w2 < g1.attr_words_per_row(); ++w2) {
      da_perm += std::popcount(g1.attr_row_word(i, w2) ^ g2.attr_row_word(qi, w2));
      da_id += std::popcount(g1.attr_row_word(i, w2) ^ g2.attr_row_word(i, w2));
    }
  }
  return w.w1 * static_cast<double>(du_perm - du_id) + w.w2 * static_cast<double>(da_perm - da_id);
}

const Permutation& AlignmentOutcome::tie_break(std::uint64_t seed) const {
  SplitMix64 gen(mix64(seed ^ kStreamTieBreak));
  const auto idx = gen.next_below(minimizers.size());
  return minimizers[static_cast<std::size_t>(idx)];
}

namespace {

// (du, da) of g1 against mapping^-1(g2_anon) without materializing anything.
DistanceCounts distance_counts_raw(const AttributedGraph& g1, const AttributedGraph& g2_anon,
                                   const std::vector<int>& mapping) {
  DistanceCounts c;
  const int n = g1.n();
  const int wpr = g1.attr_words_per_row();
  for (int i = 0; i < n; ++i) {
    const int pi = mapping[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < n; ++j)
      if (g1.user_edge(i, j) != g2_anon.user_edge(pi, mapping[static_cast<std::size_t>(j)])) ++c.du;
    for (int w = 0; w < wpr; ++w)
      c.da += std::popcount(g1.attr_row_word(i, w) ^ g2_anon.attr_row_word(pi, w));
  }
  return c;
}

}  // namespace

AlignmentOutcome map_align(const AttributedGraph& g1, const AttributedGraph& g2_anon,
                           const ModelParams& params, int cap,
                           const std::optional<Permutation>& truth) {
  require_same_shape(g1, g2_anon);
  const int n = g1.n();
  if (n > cap)
    fail(Errc::n_too_large, "n=" + std::to_string(n) + " exceeds exhaustive search cap " +
                                std::to_string(cap));
  const Weights w = weights(params);

  // Candidates within tolerance of the running minimum; entries that a later
  // improvement pushes out of tolerance are filtered at the end, so the
  // result is exactly the set within tolerance of the final minimum.
  std::vector<std::pair<double, std::vector<int>>> candidates;
  double best = std::numeric_limits<double>::infinity();
  for_each_permutation(n, [&](const std::vector<int>& mapping) {
    const DistanceCounts c = distance_counts_raw(g1, g2_anon, mapping);
    const double d = w.w1 * static_cast<double>(c.du) + w.w2 * static_cast<double>(c.da);
    if (d <= best + kDistanceTieTolerance) {
      best = std::min(best, d);
      candidates.emplace_back(d, mapping);
    }
  });

  AlignmentOutcome out;
  out.min_distance = best;
  for (auto& [d, mapping] : candidates)
    if (d <= best + kDistanceTieTolerance) out.minimizers.emplace_back(std::move(mapping));
  out.unique = out.minimizers.size() == 1;
  if (truth.has_value()) out.matches_truth = out.unique && out.minimizers.front() == *truth;
  return out;
}

double posterior_oracle(const AttributedGraph& g1, const AttributedGraph& g2_anon,
                        const Permutation& perm, const ModelParams& params) {
  require_same_shape(g1, g2_anon);
  check_params(params);
  if (!params.p_user.all_positive() || !params.q_attr.all_positive())
    fail(Errc::zero_entry, "posterior needs all distribution entries > 0");

  // Counts of (g1, perm^-1(g2_anon)) over both pair classes.
  const int n = g1.n();
  MuNuCounts c;
  for (int i = 0; i < n; ++i) {
    const int pi = perm(i);
    for (int j = i + 1; j < n; ++j)
      ++c.mu[g1.user_edge(i, j) ? 1 : 0][g2_anon.user_edge(pi, perm(j)) ? 1 : 0];
    for (int a = 0; a < g1.m(); ++a)
      ++c.nu[g1.attr_edge(i, a) ? 1 : 0][g2_anon.attr_edge(pi, a) ? 1 : 0];
  }

  // Edge totals are permutation-invariant; a mismatch means the counting
  // above went wrong.
  const std::int64_t beta_u_1 = g1.user_edge_count();
  const std::int64_t beta_u_2 = g2_anon.user_edge_count();
  const std::int64_t beta_a_1 = g1.attr_edge_count();
  const std::int64_t beta_a_2 = g2_anon.attr_edge_count();
  if (c.mu[1][1] + c.mu[1][0] != beta_u_1 || c.mu[1][1] + c.mu[0][1] != beta_u_2 ||
      c.nu[1][1] + c.nu[1][0] != beta_a_1 || c.nu[1][1] + c.nu[0][1] != beta_a_2)
    fail(Errc::invalid_argument, "joint counts disagree with edge totals");

  const auto& p = params.p_user;
  const auto& q = params.q_attr;
  const double logp[2][2] = {{std::log(p.p00), std::log(p.p01)}, {std::log(p.p10), std::log(p.p11)}};
  const double logq[2][2] = {{std::log(q.p00), std::log(q.p01)}, {std::log(q.p10), std::log(q.p11)}};
  double lp = 0.0;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      lp += static_cast<double>(c.mu[a][b]) * logp[a][b];
      lp += static_cast<double>(c.nu[a][b]) * logq[a][b];
    }
  return lp;
}

}  // namespace alignlab
