#include "alignlab/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "alignlab/rng.hpp"

namespace alignlab {

Permutation::Permutation(std::vector<int> mapping) : map_(std::move(mapping)) {
  const int n = size();
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (int v : map_) {
    if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)])
      fail(Errc::invalid_argument, "mapping is not a bijection on [0," + std::to_string(n) + ")");
    seen[static_cast<std::size_t>(v)] = 1;
  }
  std::vector<char> visited(static_cast<std::size_t>(n), 0);
  for (int start = 0; start < n; ++start) {
    if (visited[static_cast<std::size_t>(start)]) continue;
    std::vector<int> cycle;
    int v = start;
    do {
      visited[static_cast<std::size_t>(v)] = 1;
      cycle.push_back(v);
      v = map_[static_cast<std::size_t>(v)];
    } while (v != start);
    if (cycle.size() == 1) ++fixed_points_;
    cycles_.push_back(std::move(cycle));
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 0);
  return Permutation(std::move(v));
}

Permutation Permutation::random(int n, std::uint64_t seed) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 0);
  SplitMix64 gen(mix64(seed ^ kStreamPerm));
  for (int i = n - 1; i > 0; --i) {
    const auto j = static_cast<int>(gen.next_below(static_cast<std::uint64_t>(i) + 1));
    std::swap(v[static_cast<std::size_t>(i)], v[static_cast<std::size_t>(j)]);
  }
  return Permutation(std::move(v));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(map_.size());
  for (int i = 0; i < size(); ++i) inv[static_cast<std::size_t>(map_[static_cast<std::size_t>(i)])] = i;
  return Permutation(std::move(inv));
}

Permutation Permutation::compose(const Permutation& other) const {
  if (size() != other.size()) fail(Errc::dimension_mismatch, "composing permutations of different sizes");
  std::vector<int> out(map_.size());
  for (int v = 0; v < size(); ++v) out[static_cast<std::size_t>(v)] = (*this)(other(v));
  return Permutation(std::move(out));
}

}  // namespace alignlab
