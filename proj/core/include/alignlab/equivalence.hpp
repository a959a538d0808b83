#pragma once

#include <cstdint>
#include <vector>

#include "alignlab/model.hpp"

namespace alignlab {

/// Counts of indistinguishable-vertex events in one graph. Two user vertices
/// i, j are indistinguishable when their rows agree on every user vertex
/// outside {i, j} and on every attribute vertex; swapping such a pair is an
/// automorphism. Triples additionally require the internal triangle edges to
/// agree; disjoint-pair events are unordered pairs of vertex-disjoint
/// indistinguishable pairs.
struct EquivStats {
  std::int64_t x_count = 0;                 // indistinguishable unordered pairs
  std::int64_t triple_count = 0;            // unordered triples, all pairs equivalent
  std::int64_t two_disjoint_pair_count = 0; // unordered {pair, pair}, disjoint
  std::vector<std::pair<int, int>> pairs;   // the counted pairs, i < j
};

EquivStats count_indistinguishable(const AttributedGraph& g);

/// Probability that a fixed user pair is indistinguishable in the
/// intersection graph: (1 - 2 p11 + 2 p11^2)^{n-2} (1 - 2 q11 + 2 q11^2)^m.
double p_equiv_pair(int n, int m, double p11, double q11);

/// Same for a fixed triple: (1 - 3 p11 + 3 p11^2)^{n-2} (1 - 3 q11 + 3 q11^2)^m.
double p_equiv_triple(int n, int m, double p11, double q11);

/// Same for two fixed disjoint pairs; requires n >= 4.
double p_equiv_two_pairs(int n, int m, double p11, double q11);

/// Second-moment upper bound on P(X = 0) where X counts indistinguishable
/// pairs; assembled from the three closed forms and clamped to [0, 1].
double chebyshev_p_x_zero(int n, int m, double p11, double q11);

/// Success ceiling of any estimator given x indistinguishable pairs: 1/(x+1).
double map_success_upper_given_x(std::int64_t x_count);
/// Aggregate form 1/2 + p_x_zero / 2.
double map_success_upper(double p_x_zero);

}  // namespace alignlab
