#include "alignlab/equivalence.hpp"

#include <cmath>
#include <string>

namespace alignlab {

namespace {

// Rows of i and j agree on every user vertex outside {i,j} and on every
// attribute vertex. The internal edge {i,j} is deliberately ignored.
bool rows_equivalent(const AttributedGraph& g, int i, int j) {
  for (int v = 0; v < g.n(); ++v) {
    if (v == i || v == j) continue;
    if (g.user_edge(i, v) != g.user_edge(j, v)) return false;
  }
  for (int w = 0; w < g.attr_words_per_row(); ++w)
    if (g.attr_row_word(i, w) != g.attr_row_word(j, w)) return false;
  return true;
}

}  // namespace

EquivStats count_indistinguishable(const AttributedGraph& g) {
  EquivStats stats;
  const int n = g.n();
  std::vector<std::uint8_t> equiv(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (rows_equivalent(g, i, j)) {
        equiv[static_cast<std::size_t>(i) * n + j] = 1;
        stats.pairs.emplace_back(i, j);
      }
    }
  }
  stats.x_count = static_cast<std::int64_t>(stats.pairs.size());

  // The pairwise relation is transitive, so a triple counts exactly when all
  // three of its pairs do; the internal-triangle condition follows.
  const auto eq = [&](int a, int b) {
    return equiv[static_cast<std::size_t>(std::min(a, b)) * n + std::max(a, b)] != 0;
  };
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (!eq(i, j)) continue;
      for (int k = j + 1; k < n; ++k)
        if (eq(j, k) && eq(i, k)) ++stats.triple_count;
    }

  for (std::size_t a = 0; a < stats.pairs.size(); ++a)
    for (std::size_t b = a + 1; b < stats.pairs.size(); ++b) {
      const auto& [i, j] = stats.pairs[a];
      const auto& [k, l] = stats.pairs[b];
      if (i != k && i != l && j != k && j != l) ++stats.two_disjoint_pair_count;
    }
  return stats;
}

double p_equiv_pair(int n, int m, double p11, double q11) {
  if (n < 2) fail(Errc::n_too_small, "pair event needs n >= 2");
  return std::pow(1.0 - 2.0 * p11 + 2.0 * p11 * p11, n - 2) *
         std::pow(1.0 - 2.0 * q11 + 2.0 * q11 * q11, m);
}

double p_equiv_triple(int n, int m, double p11, double q11) {
  if (n < 3) fail(Errc::n_too_small, "triple event needs n >= 3");
  return std::pow(1.0 - 3.0 * p11 + 3.0 * p11 * p11, n - 2) *
         std::pow(1.0 - 3.0 * q11 + 3.0 * q11 * q11, m);
}

double p_equiv_two_pairs(int n, int m, double p11, double q11) {
  if (n < 4) fail(Errc::n_too_small, "disjoint-pair event needs n >= 4");
  // the four cross edges between the two pairs must agree; the edges inside
  // each pair stay free
  const double s = 1.0 - p11;
  const double c0 = std::pow(p11, 4) + std::pow(s, 4);
  return c0 * std::pow(1.0 - 2.0 * p11 + 2.0 * p11 * p11, 2 * n - 8) *
         std::pow(1.0 - 2.0 * q11 + 2.0 * q11 * q11, 2 * m);
}

double chebyshev_p_x_zero(int n, int m, double p11, double q11) {
  if (n < 4) fail(Errc::n_too_small, "second-moment bound needs n >= 4");
  const double p2 = p_equiv_pair(n, m, p11, q11);
  if (!(p2 > 0.0)) fail(Errc::zero_pair_probability, "P(pair equivalence) is zero");
  const double p3 = p_equiv_triple(n, m, p11, q11);
  const double p22 = p_equiv_two_pairs(n, m, p11, q11);
  const double nn = static_cast<double>(n);
  const double bound = 2.0 / (nn * (nn - 1.0) * p2) +
                       4.0 * (nn - 2.0) / (nn * (nn - 1.0)) * p3 / (p2 * p2) +
                       (nn - 2.0) * (nn - 3.0) / (nn * (nn - 1.0)) * p22 / (p2 * p2) - 1.0;
  return std::min(1.0, std::max(0.0, bound));
}

double map_success_upper_given_x(std::int64_t x_count) {
  if (x_count < 0) fail(Errc::invalid_argument, "x_count must be >= 0");
  return 1.0 / static_cast<double>(x_count + 1);
}

double map_success_upper(double p_x_zero) {
  if (!(p_x_zero >= 0.0 && p_x_zero <= 1.0))
    fail(Errc::invalid_argument, "p_x_zero must lie in [0,1]");
  return 0.5 + 0.5 * p_x_zero;
}

}  // namespace alignlab
