#pragma once

#include <cstdint>
#include <vector>

#include "alignlab/errors.hpp"

namespace alignlab {

/// Bijection on user vertices [0, n) with cached cycle structure.
class Permutation {
 public:
  Permutation() = default;
  /// Validates that `mapping` is a bijection.
  explicit Permutation(std::vector<int> mapping);

  static Permutation identity(int n);
  /// Uniform draw from S_n via seeded Fisher-Yates.
  static Permutation random(int n, std::uint64_t seed);

  int size() const { return static_cast<int>(map_.size()); }
  int operator()(int v) const { return map_[static_cast<std::size_t>(v)]; }
  const std::vector<int>& mapping() const { return map_; }

  Permutation inverse() const;
  /// (*this) after `other`: result(v) = this(other(v)).
  Permutation compose(const Permutation& other) const;

  const std::vector<std::vector<int>>& cycles() const { return cycles_; }
  int fixed_point_count() const { return fixed_points_; }
  /// Number of non-fixed vertices, written n-tilde elsewhere.
  int moved_count() const { return size() - fixed_points_; }
  bool is_identity() const { return fixed_points_ == size(); }

  bool operator==(const Permutation& other) const { return map_ == other.map_; }
  bool operator<(const Permutation& other) const { return map_ < other.map_; }

 private:
  std::vector<int> map_;
  std::vector<std::vector<int>> cycles_;
  int fixed_points_ = 0;
};

/// Calls fn(perm) for every permutation of [0, n) in lexicographic order.
template <typename Fn>
void for_each_permutation(int n, Fn&& fn) {
  std::vector<int> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = i;
  while (true) {
    fn(v);
    int i = n - 2;
    while (i >= 0 && v[static_cast<std::size_t>(i)] >= v[static_cast<std::size_t>(i) + 1]) --i;
    if (i < 0) return;
    int j = n - 1;
    while (v[static_cast<std::size_t>(j)] <= v[static_cast<std::size_t>(i)]) --j;
    std::swap(v[static_cast<std::size_t>(i)], v[static_cast<std::size_t>(j)]);
    for (int a = i + 1, b = n - 1; a < b; ++a, --b)
      std::swap(v[static_cast<std::size_t>(a)], v[static_cast<std::size_t>(b)]);
  }
}

}  // namespace alignlab
