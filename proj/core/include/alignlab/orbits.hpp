#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "alignlab/permutation.hpp"

namespace alignlab {

enum class PairKind { user, attr };

/// One orbit of the induced permutation on vertex pairs, listed in traversal
/// order: pair t maps to pair t+1 (mod size).
struct Orbit {
  PairKind kind;
  /// For user kind: (i, j) with i < j. For attr kind: (user, attribute).
  std::vector<std::pair<int, int>> pairs;

  int size() const { return static_cast<int>(pairs.size()); }
};

/// Partition of all vertex pairs into orbits under (u,v) -> (perm(u), perm(v))
/// and (u,a) -> (perm(u), a).
struct OrbitDecomposition {
  std::vector<Orbit> orbits;
  std::map<int, std::int64_t> t_l_user;  // orbit size -> count, user pairs
  std::map<int, std::int64_t> t_l_attr;
  std::int64_t t_user = 0;       // C(n,2)
  std::int64_t t_attr = 0;       // n*m
  std::int64_t t1_user = 0;      // fixed user pairs
  std::int64_t t1_attr = 0;      // fixed attribute pairs
  std::int64_t t_tilde_user = 0; // moving user pairs
  std::int64_t t_tilde_attr = 0; // moving attribute pairs
  int n_moved = 0;               // vertices moved by the permutation

  int max_orbit_size() const;
};

OrbitDecomposition induced_orbits(const Permutation& perm, int m);

}  // namespace alignlab
