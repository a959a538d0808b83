#include "alignlab/orbits.hpp"

#include <algorithm>

#include "alignlab/model.hpp"

namespace alignlab {

int OrbitDecomposition::max_orbit_size() const {
  int mx = 0;
  for (const auto& o : orbits) mx = std::max(mx, o.size());
  return mx;
}

OrbitDecomposition induced_orbits(const Permutation& perm, int m) {
  const int n = perm.size();
  OrbitDecomposition dec;
  dec.n_moved = perm.moved_count();
  dec.t_user = user_pair_count(n);
  dec.t_attr = static_cast<std::int64_t>(n) * m;

  // User-user pairs: {i,j} -> {perm(i), perm(j)} on canonical indices.
  std::vector<char> visited(static_cast<std::size_t>(dec.t_user), 0);
  for (std::int64_t start = 0; start < dec.t_user; ++start) {
    if (visited[static_cast<std::size_t>(start)]) continue;
    Orbit orbit{PairKind::user, {}};
    std::int64_t k = start;
    do {
      visited[static_cast<std::size_t>(k)] = 1;
      const auto [i, j] = pair_from_index(n, k);
      orbit.pairs.emplace_back(i, j);
      k = pair_index(n, perm(i), perm(j));
    } while (k != start);
    const int l = orbit.size();
    ++dec.t_l_user[l];
    if (l == 1)
      ++dec.t1_user;
    else
      dec.t_tilde_user += l;
    dec.orbits.push_back(std::move(orbit));
  }

  // User-attribute pairs: (i, a) -> (perm(i), a); the orbit of (i, a) follows
  // the vertex cycle containing i, so walk vertex cycles directly.
  for (const auto& cycle : perm.cycles()) {
    for (int a = 0; a < m; ++a) {
      Orbit orbit{PairKind::attr, {}};
      orbit.pairs.reserve(cycle.size());
      for (int v : cycle) orbit.pairs.emplace_back(v, a);
      const int l = orbit.size();
      ++dec.t_l_attr[l];
      if (l == 1)
        ++dec.t1_attr;
      else
        dec.t_tilde_attr += l;
      dec.orbits.push_back(std::move(orbit));
    }
  }
  return dec;
}

}  // namespace alignlab
