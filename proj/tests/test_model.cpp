#include <doctest.h>

#include <cmath>
#include <map>
#include <set>
#include <vector>

#include "alignlab/alignment.hpp"
#include "alignlab/model.hpp"
#include "alignlab/reference.hpp"
#include "alignlab/rng.hpp"
#include "alignlab/stats.hpp"

using namespace alignlab;

namespace {

ModelParams toy_params(int n, int m) {
  return ModelParams{n, m, validate(0.3, 0.1, 0.1, 0.5), validate(0.2, 0.1, 0.15, 0.55)};
}

}  // namespace

TEST_CASE("pair indexing is a bijection") {
  const int n = 9;
  for (std::int64_t k = 0; k < user_pair_count(n); ++k) {
    const auto [i, j] = pair_from_index(n, k);
    CHECK(i < j);
    CHECK(pair_index(n, i, j) == k);
    CHECK(pair_index(n, j, i) == k);
  }
}

TEST_CASE("degenerate laws sample degenerate graphs") {
  ModelParams params{5, 3, validate(1, 0, 0, 0), validate(1, 0, 0, 0)};
  const GraphPair complete = sample_pair(params, 7);
  CHECK(complete.g1.user_edge_count() == user_pair_count(5));
  CHECK(complete.g2.attr_edge_count() == 15);

  params.p_user = validate(0, 0, 0, 1);
  params.q_attr = validate(0, 0, 0, 1);
  const GraphPair empty = sample_pair(params, 7);
  CHECK(empty.g1.user_edge_count() == 0);
  CHECK(empty.g2.user_edge_count() == 0);
  CHECK(empty.g1.attr_edge_count() == 0);
}

TEST_CASE("sampling is deterministic and seed-sensitive") {
  const ModelParams params = toy_params(12, 5);
  const GraphPair a = sample_pair(params, 123);
  const GraphPair b = sample_pair(params, 123);
  CHECK(a.g1 == b.g1);
  CHECK(a.g2 == b.g2);
  const GraphPair c = sample_pair(params, 124);
  CHECK_FALSE(a.g1 == c.g1);
}

TEST_CASE("sampled joint frequencies match the law within 4 sigma") {
  const ModelParams params = toy_params(64, 30);  // 2016 user pairs per draw
  std::int64_t counts[4] = {0, 0, 0, 0};
  std::int64_t total = 0;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const GraphPair pair = sample_pair(params, seed);
    for (int i = 0; i < params.n; ++i)
      for (int j = i + 1; j < params.n; ++j) {
        const int g1 = pair.g1.user_edge(i, j) ? 1 : 0;
        const int g2 = pair.g2.user_edge(i, j) ? 1 : 0;
        ++counts[(1 - g1) * 2 + (1 - g2)];
        ++total;
      }
  }
  CHECK(total == 50 * user_pair_count(64));
  const double expected[4] = {params.p_user.p11, params.p_user.p10, params.p_user.p01,
                              params.p_user.p00};
  for (int k = 0; k < 4; ++k) {
    const double phat = static_cast<double>(counts[k]) / static_cast<double>(total);
    const double sigma = std::sqrt(expected[k] * (1 - expected[k]) / static_cast<double>(total));
    CHECK(std::fabs(phat - expected[k]) <= 4.0 * sigma);
  }
}

TEST_CASE("empirical (1,1) rate sits inside a Wilson 99% interval") {
  const ModelParams params{50, 10, validate(0.1, 0.2, 0.15, 0.55), validate(0.3, 0.1, 0.1, 0.5)};
  std::int64_t hits = 0;
  std::int64_t total = 0;
  for (std::uint64_t seed = 0; seed < 82; ++seed) {  // 82*1225 > 1e5 draws
    const GraphPair pair = sample_pair(params, seed);
    for (int i = 0; i < params.n; ++i)
      for (int j = i + 1; j < params.n; ++j) {
        hits += pair.g1.user_edge(i, j) && pair.g2.user_edge(i, j) ? 1 : 0;
        ++total;
      }
  }
  const WilsonInterval ci = wilson_interval(hits, total, 2.5758);
  CHECK(ci.low <= 0.1);
  CHECK(0.1 <= ci.high);
}

TEST_CASE("anonymize relabels exactly") {
  const ModelParams params = toy_params(6, 3);
  const AttributedGraph g = sample_pair(params, 5).g1;

  SUBCASE("identity is a no-op") { CHECK(anonymize(g, Permutation::identity(6)) == g); }

  SUBCASE("roundtrip through the inverse") {
    const Permutation perm = Permutation::random(6, 17);
    CHECK(anonymize(anonymize(g, perm), perm.inverse()) == g);
  }

  SUBCASE("edge-by-edge definition") {
    const Permutation perm = Permutation::random(6, 17);
    const AttributedGraph h = anonymize(g, perm);
    for (int i = 0; i < 6; ++i) {
      for (int j = i + 1; j < 6; ++j)
        CHECK(h.user_edge(perm(i), perm(j)) == g.user_edge(i, j));
      for (int a = 0; a < 3; ++a) CHECK(h.attr_edge(perm(i), a) == g.attr_edge(i, a));
    }
  }

  SUBCASE("degree multiset is preserved, attribute degrees unchanged") {
    const Permutation perm = Permutation::random(6, 23);
    const AttributedGraph h = anonymize(g, perm);
    std::multiset<int> before, after;
    for (int i = 0; i < 6; ++i) {
      before.insert(g.user_degree(i));
      after.insert(h.user_degree(i));
    }
    CHECK(before == after);
    for (int a = 0; a < 3; ++a) CHECK(g.attr_vertex_degree(a) == h.attr_vertex_degree(a));
  }

  SUBCASE("dimension mismatch throws") {
    CHECK_THROWS_AS(anonymize(g, Permutation::identity(5)), Error);
  }
}

TEST_CASE("cycle-notation example: fix 0, swap 1 and 2") {
  AttributedGraph g(3, 3);
  g.set_user_edge(0, 1, true);
  g.set_attr_edge(1, 0, true);
  g.set_attr_edge(2, 2, true);
  const Permutation pi({0, 2, 1});
  const AttributedGraph h = anonymize(g, pi);
  CHECK(h.user_edge(0, 2));
  CHECK_FALSE(h.user_edge(0, 1));
  CHECK(h.attr_edge(2, 0));
  CHECK(h.attr_edge(1, 2));
}

TEST_CASE("intersection matches the set-AND oracle") {
  const ModelParams params = toy_params(6, 2);
  const GraphPair pair = sample_pair(params, 9);
  const AttributedGraph inter = intersection(pair);

  SUBCASE("idempotent and absorbing") {
    CHECK(intersection({inter, inter}) == inter);
    const AttributedGraph empty(6, 2);
    CHECK(intersection({pair.g1, empty}) == empty);
  }

  SUBCASE("edge-count equals the brute AND") {
    std::int64_t expected = 0;
    for (int i = 0; i < 6; ++i)
      for (int j = i + 1; j < 6; ++j)
        expected += pair.g1.user_edge(i, j) && pair.g2.user_edge(i, j) ? 1 : 0;
    CHECK(inter.user_edge_count() == expected);
  }
}

TEST_CASE("attribute counts beyond one machine word") {
  const ModelParams params{6, 70, validate(0.3, 0.1, 0.1, 0.5), validate(0.2, 0.1, 0.15, 0.55)};
  const GraphPair pair = sample_pair(params, 55);
  CHECK(pair.g1.attr_edge(0, 69) == pair.g1.attr_edge(0, 69));  // in-range access
  std::int64_t direct = 0;
  for (int i = 0; i < 6; ++i)
    for (int a = 0; a < 70; ++a)
      if (pair.g1.attr_edge(i, a)) ++direct;
  CHECK(pair.g1.attr_edge_count() == direct);

  const Permutation perm = Permutation::random(6, 9);
  CHECK(anonymize(anonymize(pair.g1, perm), perm.inverse()) == pair.g1);

  std::int64_t mismatches = 0;
  for (int i = 0; i < 6; ++i)
    for (int a = 0; a < 70; ++a)
      if (pair.g1.attr_edge(i, a) != pair.g2.attr_edge(i, a)) ++mismatches;
  CHECK(delta_a(pair.g1, pair.g2) == mismatches);
}

TEST_CASE("permutation basics") {
  CHECK_THROWS_AS(Permutation({0, 0, 2}), Error);
  const Permutation p({2, 0, 1, 3});
  CHECK(p.fixed_point_count() == 1);
  CHECK(p.moved_count() == 3);
  CHECK(p.inverse().compose(p) == Permutation::identity(4));

  // uniform draw touches every permutation of S_3 roughly equally
  std::map<std::vector<int>, int> counts;
  for (std::uint64_t s = 0; s < 6000; ++s) ++counts[Permutation::random(3, s).mapping()];
  CHECK(counts.size() == 6);
  for (const auto& [mapping, c] : counts) CHECK(std::fabs(c - 1000.0) < 170.0);
}
