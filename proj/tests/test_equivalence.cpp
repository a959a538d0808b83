#include <doctest.h>

#include <cmath>
#include <map>
#include <utility>
#include <vector>

#include "alignlab/equivalence.hpp"
#include "alignlab/experiments.hpp"
#include "alignlab/reference.hpp"
#include "alignlab/rng.hpp"

using namespace alignlab;

TEST_CASE("counting on canonical graphs") {
  SUBCASE("empty graph: every pair, triple and disjoint pair") {
    const EquivStats es = count_indistinguishable(AttributedGraph(4, 0));
    CHECK(es.x_count == 6);
    CHECK(es.triple_count == 4);
    CHECK(es.two_disjoint_pair_count == 3);
  }
  SUBCASE("complete user graph behaves like the empty one") {
    AttributedGraph g(4, 0);
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) g.set_user_edge(i, j, true);
    CHECK(count_indistinguishable(g).x_count == 6);
  }
  SUBCASE("star graph: only the leaves are equivalent") {
    AttributedGraph g(4, 0);
    g.set_user_edge(0, 1, true);
    g.set_user_edge(0, 2, true);
    g.set_user_edge(0, 3, true);
    const EquivStats es = count_indistinguishable(g);
    CHECK(es.x_count == 3);
    CHECK(es.triple_count == 1);
    CHECK(es.two_disjoint_pair_count == 0);
  }
  SUBCASE("attributes break symmetry") {
    AttributedGraph g(3, 1);
    g.set_attr_edge(0, 0, true);
    const EquivStats es = count_indistinguishable(g);
    CHECK(es.x_count == 1);  // only {1,2}
    REQUIRE(es.pairs.size() == 1);
    CHECK(es.pairs[0] == std::pair<int, int>{1, 2});
  }
}

TEST_CASE("pair count is consistent with equivalence classes") {
  SplitMix64 gen(31);
  for (int rep = 0; rep < 100; ++rep) {
    ModelParams params{7, 2, validate(0.3, 0.1, 0.1, 0.5), validate(0.3, 0.1, 0.1, 0.5)};
    const AttributedGraph g = intersection(sample_pair(params, gen.next()));
    const EquivStats es = count_indistinguishable(g);
    // transitivity: classes partition the vertices, so counts decompose
    std::vector<int> parent(7);
    for (int i = 0; i < 7; ++i) parent[static_cast<std::size_t>(i)] = i;
    const auto find = [&](int v) {
      while (parent[static_cast<std::size_t>(v)] != v) v = parent[static_cast<std::size_t>(v)];
      return v;
    };
    for (const auto& [i, j] : es.pairs) parent[static_cast<std::size_t>(find(j))] = find(i);
    std::map<int, std::int64_t> class_size;
    for (int v = 0; v < 7; ++v) ++class_size[find(v)];
    std::int64_t pairs = 0;
    std::int64_t triples = 0;
    for (const auto& [root, s] : class_size) {
      pairs += s * (s - 1) / 2;
      triples += s * (s - 1) * (s - 2) / 6;
    }
    CHECK(es.x_count == pairs);
    CHECK(es.triple_count == triples);
  }
}

TEST_CASE("closed forms: hand values") {
  CHECK(p_equiv_pair(5, 2, 0.0, 0.0) == doctest::Approx(1.0));
  CHECK(p_equiv_pair(3, 1, 0.5, 0.5) == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(p_equiv_triple(3, 0, 0.5, 0.0) == doctest::Approx(0.25).epsilon(1e-12));
  // four cross edges at p = 1/2: 2 of 16 assignments
  CHECK(p_equiv_two_pairs(4, 0, 0.5, 0.0) == doctest::Approx(0.125).epsilon(1e-12));
  CHECK_THROWS_AS(p_equiv_two_pairs(3, 0, 0.5, 0.0), Error);
}

TEST_CASE("closed forms match exact enumeration") {
  const auto exact = reference::enumerate_equiv_probs(4, 1, 0.3, 0.4);
  CHECK(exact.pair == doctest::Approx(p_equiv_pair(4, 1, 0.3, 0.4)).epsilon(1e-10));
  CHECK(exact.triple == doctest::Approx(p_equiv_triple(4, 1, 0.3, 0.4)).epsilon(1e-10));
  CHECK(exact.two_pairs == doctest::Approx(p_equiv_two_pairs(4, 1, 0.3, 0.4)).epsilon(1e-10));
}

TEST_CASE("second-moment bound") {
  SUBCASE("degenerate law gives zero") {
    CHECK(chebyshev_p_x_zero(6, 2, 0.0, 0.0) == doctest::Approx(0.0).epsilon(1e-12));
  }
  SUBCASE("re-assembly from the three closed forms") {
    const int n = 10;
    const int m = 0;
    const double p11 = 0.05;
    const double p2 = p_equiv_pair(n, m, p11, 0);
    const double ex = n * (n - 1) / 2.0 * p2;
    const double ex2 = ex + n * (n - 1.0) * (n - 2.0) * p_equiv_triple(n, m, p11, 0) +
                       n * (n - 1.0) * (n - 2.0) * (n - 3.0) / 4.0 *
                           p_equiv_two_pairs(n, m, p11, 0);
    const double expected = std::min(1.0, std::max(0.0, (ex2 - ex * ex) / (ex * ex)));
    CHECK(chebyshev_p_x_zero(n, m, p11, 0) == doctest::Approx(expected).epsilon(1e-10));
  }
  SUBCASE("clamped to [0,1]") {
    CHECK(chebyshev_p_x_zero(5, 3, 0.49, 0.49) <= 1.0);
    CHECK(chebyshev_p_x_zero(5, 3, 0.49, 0.49) >= 0.0);
  }
}

TEST_CASE("success ceilings") {
  CHECK(map_success_upper_given_x(0) == doctest::Approx(1.0));
  CHECK(map_success_upper_given_x(1) == doctest::Approx(0.5));
  CHECK(map_success_upper_given_x(3) == doctest::Approx(0.25));
  CHECK(map_success_upper(0.0) == doctest::Approx(0.5));
  CHECK(map_success_upper(1.0) == doctest::Approx(1.0));
  CHECK_THROWS_AS(map_success_upper(1.5), Error);
}

TEST_CASE("closed forms track simulation across a 3x3 parameter grid") {
  int idx = 0;
  for (int n : {5, 6, 7}) {
    for (double p11 : {0.1, 0.2, 0.3}) {
      const int m = 2;
      const double q11 = 0.2;
      const double rp = (1.0 - p11) / 3.0;
      const double rq = (1.0 - q11) / 3.0;
      const ModelParams params{n, m, validate(p11, rp, rp, rp), validate(q11, rq, rq, rq)};
      const std::int64_t trials = 20000;
      const EquivFrequencies f = mc_equiv_frequencies(params, trials, 600 + idx++);
      const double st = std::sqrt(static_cast<double>(trials));
      CHECK(std::fabs(f.pair_freq - p_equiv_pair(n, m, p11, q11)) <=
            4.0 * f.pair_sd / st + 1e-12);
      CHECK(std::fabs(f.triple_freq - p_equiv_triple(n, m, p11, q11)) <=
            4.0 * f.triple_sd / st + 1e-12);
      CHECK(std::fabs(f.two_pair_freq - p_equiv_two_pairs(n, m, p11, q11)) <=
            4.0 * f.two_pair_sd / st + 1e-12);
    }
  }
}

TEST_CASE("chebyshev bound dominates the empirical no-equivalent-pair rate") {
  const ModelParams params{8, 2, validate(0.3, 0.1, 0.1, 0.5), validate(0.3, 0.1, 0.1, 0.5)};
  const std::int64_t trials = 20000;
  std::int64_t zero = 0;
  for (std::int64_t t = 0; t < trials; ++t) {
    const auto g = intersection(sample_pair(params, trial_seed(808, 0, t)));
    if (count_indistinguishable(g).x_count == 0) ++zero;
  }
  const double phat = static_cast<double>(zero) / trials;
  const double sigma = std::sqrt(std::max(phat * (1 - phat), 1e-9) / trials);
  CHECK(phat <= chebyshev_p_x_zero(8, 2, 0.3, 0.3) + 3 * sigma);
}

TEST_CASE("swapping a counted pair is an automorphism") {
  SplitMix64 gen(47);
  for (int rep = 0; rep < 60; ++rep) {
    ModelParams params{6, 2, validate(0.35, 0.1, 0.1, 0.45), validate(0.25, 0.05, 0.05, 0.65)};
    const AttributedGraph g = intersection(sample_pair(params, gen.next()));
    for (const auto& [i, j] : count_indistinguishable(g).pairs) {
      std::vector<int> mapping(6);
      for (int v = 0; v < 6; ++v) mapping[static_cast<std::size_t>(v)] = v;
      std::swap(mapping[static_cast<std::size_t>(i)], mapping[static_cast<std::size_t>(j)]);
      CHECK(anonymize(g, Permutation(mapping)) == g);
    }
  }
}
