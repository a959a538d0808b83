#include "alignlab/model.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "alignlab/rng.hpp"

namespace alignlab {

void check_params(const ModelParams& params) {
  if (params.n < 1) fail(Errc::invalid_argument, "n must be >= 1");
  if (params.m < 0) fail(Errc::invalid_argument, "m must be >= 0");
  validate(params.p_user.as_array());
  validate(params.q_attr.as_array());
}

std::int64_t pair_index(int n, int i, int j) {
  if (i > j) std::swap(i, j);
  // pairs (i, i+1..n-1) occupy a contiguous block
  return static_cast<std::int64_t>(i) * n - static_cast<std::int64_t>(i) * (i + 1) / 2 +
         (j - i - 1);
}

std::pair<int, int> pair_from_index(int n, std::int64_t k) {
  int i = 0;
  std::int64_t block = n - 1;
  while (k >= block) {
    k -= block;
    --block;
    ++i;
  }
  return {i, i + 1 + static_cast<int>(k)};
}

AttributedGraph::AttributedGraph(int n, int m)
    : n_(n),
      m_(m),
      attr_wpr_(m > 0 ? (m + 63) / 64 : 0),
      user_adj_(static_cast<std::size_t>(user_pair_count(n)), 0),
      attr_words_(static_cast<std::size_t>(n) * static_cast<std::size_t>(attr_wpr_), 0) {}

void AttributedGraph::set_user_edge(int i, int j, bool present) {
  user_adj_[static_cast<std::size_t>(pair_index(n_, i, j))] = present ? 1 : 0;
}

void AttributedGraph::set_attr_edge(int i, int a, bool present) {
  auto& word = attr_words_[static_cast<std::size_t>(i) * static_cast<std::size_t>(attr_wpr_) +
                           static_cast<std::size_t>(a >> 6)];
  const std::uint64_t bit = 1ULL << (a & 63);
  word = present ? (word | bit) : (word & ~bit);
}

std::int64_t AttributedGraph::user_edge_count() const {
  std::int64_t c = 0;
  for (auto v : user_adj_) c += v;
  return c;
}

std::int64_t AttributedGraph::attr_edge_count() const {
  std::int64_t c = 0;
  for (auto w : attr_words_) c += std::popcount(w);
  return c;
}

int AttributedGraph::user_degree(int i) const {
  int d = 0;
  for (int j = 0; j < n_; ++j)
    if (j != i && user_edge(i, j)) ++d;
  return d;
}

int AttributedGraph::attr_vertex_degree(int a) const {
  int d = 0;
  for (int i = 0; i < n_; ++i)
    if (attr_edge(i, a)) ++d;
  return d;
}

std::vector<std::pair<int, int>> AttributedGraph::user_edges() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      if (user_edge(i, j)) out.emplace_back(i, j);
  return out;
}

std::vector<std::pair<int, int>> AttributedGraph::attr_edges() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < n_; ++i)
    for (int a = 0; a < m_; ++a)
      if (attr_edge(i, a)) out.emplace_back(i, a);
  return out;
}

bool AttributedGraph::operator==(const AttributedGraph& other) const {
  return n_ == other.n_ && m_ == other.m_ && user_adj_ == other.user_adj_ &&
         attr_words_ == other.attr_words_;
}

namespace {

// Joint outcome of one pair from a single uniform: 0 -> (1,1), 1 -> (1,0),
// 2 -> (0,1), 3 -> (0,0).
int draw_outcome(const JointEdgeDistribution& d, double u) {
  if (u < d.p11) return 0;
  if (u < d.p11 + d.p10) return 1;
  if (u < d.p11 + d.p10 + d.p01) return 2;
  return 3;
}

}  // namespace

GraphPair sample_pair(const ModelParams& params, std::uint64_t seed) {
  check_params(params);
  const int n = params.n;
  const int m = params.m;
  GraphPair pair{AttributedGraph(n, m), AttributedGraph(n, m)};
  const std::int64_t tu = user_pair_count(n);
  for (std::int64_t k = 0; k < tu; ++k) {
    const double u = uniform01(stable_hash({seed, kStreamUserPair, static_cast<std::uint64_t>(k)}));
    const int o = draw_outcome(params.p_user, u);
    const auto [i, j] = pair_from_index(n, k);
    if (o == 0 || o == 1) pair.g1.set_user_edge(i, j, true);
    if (o == 0 || o == 2) pair.g2.set_user_edge(i, j, true);
  }
  for (int i = 0; i < n; ++i) {
    for (int a = 0; a < m; ++a) {
      const auto k = static_cast<std::uint64_t>(i) * static_cast<std::uint64_t>(m) +
                     static_cast<std::uint64_t>(a);
      const double u = uniform01(stable_hash({seed, kStreamAttrPair, k}));
      const int o = draw_outcome(params.q_attr, u);
      if (o == 0 || o == 1) pair.g1.set_attr_edge(i, a, true);
      if (o == 0 || o == 2) pair.g2.set_attr_edge(i, a, true);
    }
  }
  return pair;
}

AttributedGraph anonymize(const AttributedGraph& g, const Permutation& perm) {
  if (perm.size() != g.n()) fail(Errc::dimension_mismatch, "permutation length != user vertex count");
  AttributedGraph out(g.n(), g.m());
  for (int i = 0; i < g.n(); ++i) {
    for (int j = i + 1; j < g.n(); ++j) {
      if (g.user_edge(i, j)) out.set_user_edge(perm(i), perm(j), true);
    }
    for (int a = 0; a < g.m(); ++a) {
      if (g.attr_edge(i, a)) out.set_attr_edge(perm(i), a, true);
    }
  }
  return out;
}

AttributedGraph intersection(const GraphPair& pair) {
  if (pair.g1.n() != pair.g2.n() || pair.g1.m() != pair.g2.m())
    fail(Errc::dimension_mismatch, "graph pair dimensions differ");
  AttributedGraph out(pair.g1.n(), pair.g1.m());
  for (int i = 0; i < out.n(); ++i) {
    for (int j = i + 1; j < out.n(); ++j)
      if (pair.g1.user_edge(i, j) && pair.g2.user_edge(i, j)) out.set_user_edge(i, j, true);
    for (int a = 0; a < out.m(); ++a)
      if (pair.g1.attr_edge(i, a) && pair.g2.attr_edge(i, a)) out.set_attr_edge(i, a, true);
  }
  return out;
}

}  // namespace alignlab
