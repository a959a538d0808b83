#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "alignlab/alignment.hpp"
#include "alignlab/model.hpp"
#include "alignlab/orbits.hpp"

namespace alignlab::reference {

// Direct-definition implementations used to cross-check the production path.
// Everything here recomputes from first principles (flat enumeration, naive
// loops) and deliberately shares no logic with the optimized code it checks.

std::int64_t naive_delta_u(const AttributedGraph& g1, const AttributedGraph& g2);
std::int64_t naive_delta_a(const AttributedGraph& g1, const AttributedGraph& g2);

/// Materializes perm^-1(g2_anon) and recounts both distances.
double naive_weighted_distance(const AttributedGraph& g1, const AttributedGraph& g2_anon,
                               const Permutation& perm, const Weights& w);

/// Exact law of the distance excess of `perm` as integer exponent pairs
/// (a, b) -> probability, by enumerating every joint edge assignment on the
/// moving pair set. Work grows as 4^|moving set|.
std::map<std::pair<int, int>, double> brute_delta_law(const Permutation& perm, int m,
                                                      const JointEdgeDistribution& p,
                                                      const JointEdgeDistribution& q);

/// P(excess <= 0) from a brute law.
double brute_p_delta_leq_zero(const std::map<std::pair<int, int>, double>& law, const Weights& w);

/// Law of the single-orbit excess exponent by flat enumeration of all
/// 2^l x 2^l assignments on one size-l cycle.
std::map<int, double> brute_orbit_law(int l, const JointEdgeDistribution& dist);

/// Exact generating function values of Hyp(r, N, K) and Bin(r, K/N) by
/// summation of the mass function.
double hyp_pgf_exact(std::int64_t r, std::int64_t N, std::int64_t K, double z);
double bin_pgf_exact(std::int64_t r, double p, double z);

/// log C(n, k) via lgamma.
double log_choose(std::int64_t n, std::int64_t k);

/// Exact indistinguishability event probabilities for an intersection graph
/// with iid Bernoulli(p11) user edges and Bernoulli(q11) attribute edges,
/// by weighted enumeration of all graphs. Feasible for C(n,2) + n m <= ~22.
struct ExactEquivProbs {
  double pair = 0.0;
  double triple = 0.0;
  double two_pairs = 0.0;
};
ExactEquivProbs enumerate_equiv_probs(int n, int m, double p11, double q11);

/// Exact alignment statistics of the tiny-instance family by enumeration of
/// all graph pairs and hidden permutations. Feasible for n <= 3, small m.
struct ExactAlignmentStats {
  double p_success_unique = 0.0;  // unique minimizer equals the truth
  double p_x_zero = 0.0;          // intersection graph has no equivalent pair
};
ExactAlignmentStats enumerate_alignment_stats(const ModelParams& params);

}  // namespace alignlab::reference
