#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "alignlab/distribution.hpp"
#include "alignlab/permutation.hpp"

namespace alignlab {

/// Attributed pair model: n user vertices, m attribute vertices, user-user
/// pairs drawn from p_user and user-attribute pairs from q_attr.
struct ModelParams {
  int n = 1;
  int m = 0;
  JointEdgeDistribution p_user;
  JointEdgeDistribution q_attr;
};

/// Throws on n < 1 or m < 0.
void check_params(const ModelParams& params);

inline std::int64_t user_pair_count(int n) {
  return static_cast<std::int64_t>(n) * (n - 1) / 2;
}

/// Canonical index of the unordered user pair {i, j}, i < j, in
/// lexicographic order; the inverse of pair_from_index.
std::int64_t pair_index(int n, int i, int j);
std::pair<int, int> pair_from_index(int n, std::int64_t k);

/// Undirected graph on n user vertices and m attribute vertices.
/// User-user adjacency is stored per unordered pair; self-loops and
/// attribute-attribute edges are unrepresentable. Immutable once built.
class AttributedGraph {
 public:
  AttributedGraph() = default;
  AttributedGraph(int n, int m);

  int n() const { return n_; }
  int m() const { return m_; }

  bool user_edge(int i, int j) const {
    return user_adj_[static_cast<std::size_t>(pair_index(n_, i, j))] != 0;
  }
  bool attr_edge(int i, int a) const {
    return (attr_row_word(i, a >> 6) >> (a & 63)) & 1ULL;
  }

  void set_user_edge(int i, int j, bool present);
  void set_attr_edge(int i, int a, bool present);

  /// Attribute incidence of user i, packed 64 attributes per word.
  int attr_words_per_row() const { return attr_wpr_; }
  std::uint64_t attr_row_word(int i, int w) const {
    return attr_words_[static_cast<std::size_t>(i) * static_cast<std::size_t>(attr_wpr_) +
                       static_cast<std::size_t>(w)];
  }

  std::int64_t user_edge_count() const;
  std::int64_t attr_edge_count() const;
  int user_degree(int i) const;
  int attr_vertex_degree(int a) const;

  /// Sorted [i, j] lists with i < j, and [i, a] lists; matches the JSON schema.
  std::vector<std::pair<int, int>> user_edges() const;
  std::vector<std::pair<int, int>> attr_edges() const;

  bool operator==(const AttributedGraph& other) const;

 private:
  int n_ = 0;
  int m_ = 0;
  int attr_wpr_ = 0;
  std::vector<std::uint8_t> user_adj_;    // indexed by pair_index
  std::vector<std::uint64_t> attr_words_;
};

struct GraphPair {
  AttributedGraph g1;
  AttributedGraph g2;
};

/// Draws every vertex pair independently from its joint law. The draw for a
/// pair depends only on (seed, canonical pair index), never on sampling order.
GraphPair sample_pair(const ModelParams& params, std::uint64_t seed);

/// Relabels user vertices: output has user edge {i,j} iff the input has
/// {perm^-1(i), perm^-1(j)}, and attribute edge (i,a) iff (perm^-1(i), a).
AttributedGraph anonymize(const AttributedGraph& g, const Permutation& perm);

/// Edge present iff present in both graphs.
AttributedGraph intersection(const GraphPair& pair);

}  // namespace alignlab
