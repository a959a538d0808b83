#include "alignlab/verification.hpp"

#include <cmath>
#include <cstdio>

#include "alignlab/bounds.hpp"
#include "alignlab/equivalence.hpp"
#include "alignlab/genfunc.hpp"
#include "alignlab/reference.hpp"
#include "alignlab/rng.hpp"

namespace alignlab {

namespace {

std::string fmt(const char* pattern, double a, double b) {
  char buf[160];
  std::snprintf(buf, sizeof(buf), pattern, a, b);
  return buf;
}

void check(SuiteResult& suite, bool ok, const std::string& message) {
  ++suite.checks;
  if (!ok) {
    ++suite.failures;
    suite.messages.push_back(message);
  }
}

JointEdgeDistribution random_positive_dist(SplitMix64& gen) {
  // rejection-sample until positively correlated with all entries > 0
  while (true) {
    double v[4];
    double s = 0.0;
    for (double& x : v) {
      x = 0.02 + gen.next_uniform01();
      s += x;
    }
    JointEdgeDistribution d{v[0] / s, v[1] / s, v[2] / s, v[3] / s};
    if (d.positively_correlated() && psi(d) < 0.49) return d;
  }
}

ModelParams random_params(int n, int m, SplitMix64& gen) {
  return ModelParams{n, m, random_positive_dist(gen), random_positive_dist(gen)};
}

}  // namespace

SuiteResult verify_genfunc(std::uint64_t seed) {
  SuiteResult suite{"genfunc"};
  SplitMix64 gen(mix64(seed ^ 0x67656e66ULL));

  // exact law vs brute-force enumeration over the moving set
  for (int n = 2; n <= 4; ++n) {
    for (int m : {0, 1}) {
      const ModelParams params = random_params(n, m, gen);
      const Weights w = weights(params);
      for_each_permutation(n, [&](const std::vector<int>& mapping) {
        const Permutation perm(mapping);
        const auto law = reference::brute_delta_law(perm, m, params.p_user, params.q_attr);
        const WeightExponentPoly poly = full_pgf(perm, params);
        check(suite, poly.is_pgf(), "orbit-product law is not a probability law");
        double worst = 0.0;
        for (const auto& [e, c] : poly.terms()) {
          const auto it = law.find(e);
          const double ref = it == law.end() ? 0.0 : it->second;
          worst = std::max(worst, std::fabs(c - ref));
        }
        for (const auto& [e, c] : law) worst = std::max(worst, std::fabs(c - poly.coefficient(e.first, e.second)));
        check(suite, worst <= 1e-12, fmt("coefficient gap %.3g exceeds 1e-12 (n-side %.0f)", worst,
                                         static_cast<double>(n)));
        const double exact = prob_delta_leq_zero(poly, w);
        const double ref = reference::brute_p_delta_leq_zero(law, w);
        check(suite, std::fabs(exact - ref) <= 1e-10,
              fmt("P(delta<=0) %.12g vs brute %.12g", exact, ref));
      });
    }
  }

  // single-orbit law vs flat enumeration
  for (int l = 1; l <= 4; ++l) {
    const JointEdgeDistribution d = random_positive_dist(gen);
    const auto law = reference::brute_orbit_law(l, d);
    const WeightExponentPoly poly = orbit_pgf(l, d, PairKind::user);
    for (const auto& [e, c] : law)
      check(suite, std::fabs(poly.coefficient(e, 0) - c) <= 1e-12,
            fmt("orbit law coefficient mismatch %.12g vs %.12g", poly.coefficient(e, 0), c));
  }

  // closed form of the 2-orbit value
  for (int rep = 0; rep < 20; ++rep) {
    const JointEdgeDistribution d = random_positive_dist(gen);
    const Weights w{1.3, 0.7};
    const double z = 0.05 + 1.5 * gen.next_uniform01();
    const double via_poly = orbit_pgf(2, d, PairKind::user).evaluate(z, w);
    const double closed = a2_closed(d, PairKind::user, z, w);
    check(suite, std::fabs(via_poly - closed) <= 1e-12,
          fmt("2-orbit closed form %.12g vs enumeration %.12g", closed, via_poly));
  }

  // minimum of the closed form over z in (0,1) sits at e^{-1/4} with value 1-2psi
  for (int rep = 0; rep < 5; ++rep) {
    const ModelParams params = random_params(3, 0, gen);
    const Weights w = weights(params);
    const double at_opt = a2_closed(params.p_user, PairKind::user, std::exp(-0.25), w);
    const double target = 1.0 - 2.0 * psi(params.p_user);
    check(suite, std::fabs(at_opt - target) <= 1e-10,
          fmt("value at e^-1/4 %.12g vs 1-2psi %.12g", at_opt, target));
    for (int k = 1; k < 40; ++k) {
      const double z = static_cast<double>(k) / 40.0;
      check(suite, a2_closed(params.p_user, PairKind::user, z, w) >= at_opt - 1e-12,
            fmt("grid value below the claimed minimum at z=%.3g (%.12g)", z, at_opt));
    }
  }
  return suite;
}

SuiteResult verify_dominance(std::uint64_t seed) {
  SuiteResult suite{"dominance"};
  SplitMix64 gen(mix64(seed ^ 0x6c656d34ULL));
  for (int n = 2; n <= 4; ++n) {
    for (int m : {0, 1, 2}) {
      const ModelParams params = random_params(n, m, gen);
      const Weights w = weights(params);
      const double psi_u = psi(params.p_user);
      const double psi_a = psi(params.q_attr);
      for_each_permutation(n, [&](const std::vector<int>& mapping) {
        const Permutation perm(mapping);
        if (perm.is_identity()) return;
        const double exact = prob_delta_leq_zero(full_pgf(perm, params), w);
        const double bound = misalignment_bound(n, perm.moved_count(), m, psi_u, psi_a);
        check(suite, bound + 1e-12 >= exact,
              fmt("bound %.12g below exact misalignment probability %.12g", bound, exact));
      });
    }
  }
  return suite;
}

SuiteResult verify_tails(std::uint64_t seed) {
  SuiteResult suite{"tails"};
  SplitMix64 gen(mix64(seed ^ 0x66616374ULL));

  // power bound: A_l <= A_2^{l/2} on both pair classes
  const double zs[4] = {std::exp(-0.25), 0.5, 0.9, 1.1};
  for (int rep = 0; rep < 25; ++rep) {
    const JointEdgeDistribution d = random_positive_dist(gen);
    const JointEdgeDistribution d2 = random_positive_dist(gen);
    const Weights w{std::log(d.p11 * d.p00 / (d.p10 * d.p01)),
                    std::log(d2.p11 * d2.p00 / (d2.p10 * d2.p01))};
    for (int l = 3; l <= 6; ++l) {
      for (double z : zs) {
        const double lhs_u = orbit_pgf(l, d, PairKind::user).evaluate(z, w);
        const double rhs_u = std::pow(orbit_pgf(2, d, PairKind::user).evaluate(z, w),
                                      static_cast<double>(l) / 2.0);
        check(suite, lhs_u <= rhs_u * (1.0 + 1e-12),
              fmt("user power bound violated: %.12g > %.12g", lhs_u, rhs_u));
        const double lhs_a = orbit_pgf(l, d2, PairKind::attr).evaluate(z, w);
        const double rhs_a = std::pow(orbit_pgf(2, d2, PairKind::attr).evaluate(z, w),
                                      static_cast<double>(l) / 2.0);
        check(suite, lhs_a <= rhs_a * (1.0 + 1e-12),
              fmt("attr power bound violated: %.12g > %.12g", lhs_a, rhs_a));
      }
    }
  }

  // coefficient and tail bounds on random laws
  const Weights w{1.0, 0.6180339887};
  for (int rep = 0; rep < 100; ++rep) {
    WeightExponentPoly poly;
    const int terms = 2 + static_cast<int>(gen.next_below(6));
    double mass = 0.0;
    std::vector<std::pair<int, int>> exps;
    for (int t = 0; t < terms; ++t) {
      const int a = static_cast<int>(gen.next_below(9)) - 4;
      const int b = static_cast<int>(gen.next_below(9)) - 4;
      const double c = 0.05 + gen.next_uniform01();
      poly.add_term(a, b, c);
      mass += c;
      exps.emplace_back(a, b);
    }
    WeightExponentPoly pgf;
    for (const auto& [e, c] : poly.terms()) pgf.add_term(e.first, e.second, c / mass);

    const auto& [ja, jb] = exps[gen.next_below(exps.size())];
    const double j = ja * w.w1 + jb * w.w2;
    const double zp = 0.05 + 2.0 * gen.next_uniform01();
    check(suite, pgf.mass_at(j, w) <= pgf_tail_bound(pgf, w, zp, j, TailDirection::point) + 1e-12,
          "point coefficient bound violated");
    const double zl = 0.05 + 0.95 * gen.next_uniform01();
    check(suite, pgf.mass_leq(j, w) <= pgf_tail_bound(pgf, w, zl, j, TailDirection::leq) + 1e-12,
          "lower tail bound violated");
    const double zg = 1.0 + 2.0 * gen.next_uniform01();
    check(suite, pgf.mass_geq(j, w) <= pgf_tail_bound(pgf, w, zg, j, TailDirection::geq) + 1e-12,
          "upper tail bound violated");
  }
  return suite;
}

SuiteResult verify_converse(std::uint64_t seed) {
  SuiteResult suite{"converse"};
  SplitMix64 gen(mix64(seed ^ 0x636f6e76ULL));

  // closed forms vs weighted enumeration of every intersection graph
  const struct {
    int n, m;
    double p11, q11;
  } cases[] = {{4, 1, 0.3, 0.4}, {5, 0, 0.2, 0.0}, {4, 2, 0.45, 0.15}, {5, 1, 0.08, 0.6}};
  for (const auto& cs : cases) {
    const auto exact = reference::enumerate_equiv_probs(cs.n, cs.m, cs.p11, cs.q11);
    check(suite, std::fabs(exact.pair - p_equiv_pair(cs.n, cs.m, cs.p11, cs.q11)) <= 1e-10,
          fmt("pair closed form %.12g vs enumeration %.12g",
              p_equiv_pair(cs.n, cs.m, cs.p11, cs.q11), exact.pair));
    check(suite, std::fabs(exact.triple - p_equiv_triple(cs.n, cs.m, cs.p11, cs.q11)) <= 1e-10,
          fmt("triple closed form %.12g vs enumeration %.12g",
              p_equiv_triple(cs.n, cs.m, cs.p11, cs.q11), exact.triple));
    check(suite,
          std::fabs(exact.two_pairs - p_equiv_two_pairs(cs.n, cs.m, cs.p11, cs.q11)) <= 1e-10,
          fmt("disjoint-pair closed form %.12g vs enumeration %.12g",
              p_equiv_two_pairs(cs.n, cs.m, cs.p11, cs.q11), exact.two_pairs));
  }

  // second-moment bound equals its re-assembly from the three closed forms
  for (int rep = 0; rep < 20; ++rep) {
    const int n = 4 + static_cast<int>(gen.next_below(8));
    const int m = static_cast<int>(gen.next_below(4));
    const double p11 = gen.next_uniform01() * 0.5;
    const double q11 = gen.next_uniform01() * 0.5;
    const double p2 = p_equiv_pair(n, m, p11, q11);
    const double nn = n;
    const double ex = nn * (nn - 1) / 2.0 * p2;
    const double ex2 = ex +
                       nn * (nn - 1) * (nn - 2) * p_equiv_triple(n, m, p11, q11) +
                       nn * (nn - 1) * (nn - 2) * (nn - 3) / 4.0 *
                           p_equiv_two_pairs(n, m, p11, q11);
    const double reassembled = std::min(1.0, std::max(0.0, (ex2 - ex * ex) / (ex * ex)));
    const double direct = chebyshev_p_x_zero(n, m, p11, q11);
    check(suite, std::fabs(direct - reassembled) <= 1e-9,
          fmt("second-moment bound %.12g vs re-assembly %.12g", direct, reassembled));
  }

  // swapping a counted indistinguishable pair is an automorphism
  for (int rep = 0; rep < 40; ++rep) {
    const ModelParams params = random_params(6, 2, gen);
    const AttributedGraph g = intersection(sample_pair(params, gen.next()));
    const EquivStats es = count_indistinguishable(g);
    for (const auto& [i, j] : es.pairs) {
      std::vector<int> swap_map(6);
      for (int v = 0; v < 6; ++v) swap_map[static_cast<std::size_t>(v)] = v;
      std::swap(swap_map[static_cast<std::size_t>(i)], swap_map[static_cast<std::size_t>(j)]);
      check(suite, anonymize(g, Permutation(swap_map)) == g,
            "swapping an indistinguishable pair changed the graph");
    }
  }
  return suite;
}

SuiteResult verify_hyp(std::uint64_t seed) {
  SuiteResult suite{"hyp"};
  SplitMix64 gen(mix64(seed ^ 0x68797065ULL));
  for (int rep = 0; rep < 50; ++rep) {
    const int n = 6 + static_cast<int>(gen.next_below(25));
    const Permutation perm = Permutation::random(n, gen.next());
    const int n_moved = perm.moved_count();
    if (n_moved < 2) continue;
    // moving user pairs, counted directly
    std::int64_t K = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (std::min(perm(i), perm(j)) != i || std::max(perm(i), perm(j)) != j) ++K;
    const std::int64_t N = user_pair_count(n);
    const auto rmax = static_cast<std::int64_t>(3.0 * n * std::log(n));
    const std::int64_t r = static_cast<std::int64_t>(gen.next_below(
        static_cast<std::uint64_t>(std::min(N, rmax)) + 1));
    const double z = 0.01 + 0.98 * gen.next_uniform01();
    const double hyp = reference::hyp_pgf_exact(r, N, K, z);
    const double bin = reference::bin_pgf_exact(r, static_cast<double>(K) / N, z);
    check(suite, hyp <= bin * (1.0 + 1e-9), fmt("Hyp pgf %.12g above Bin pgf %.12g", hyp, bin));
    const double bound = hyp_pgf_bound(r, n, n_moved, z);
    check(suite, hyp <= bound * (1.0 + 1e-9),
          fmt("Hyp pgf %.12g above exponential bound %.12g", hyp, bound));
  }
  return suite;
}

std::vector<std::string> verification_suite_names() {
  return {"genfunc", "dominance", "tails", "converse", "hyp"};
}

std::vector<SuiteResult> run_verification(const std::vector<std::string>& suites,
                                          std::uint64_t seed) {
  std::vector<std::string> wanted = suites;
  if (wanted.empty() || (wanted.size() == 1 && wanted.front() == "all"))
    wanted = verification_suite_names();
  std::vector<SuiteResult> results;
  for (const auto& name : wanted) {
    if (name == "genfunc")
      results.push_back(verify_genfunc(seed));
    else if (name == "dominance")
      results.push_back(verify_dominance(seed));
    else if (name == "tails")
      results.push_back(verify_tails(seed));
    else if (name == "converse")
      results.push_back(verify_converse(seed));
    else if (name == "hyp")
      results.push_back(verify_hyp(seed));
    else
      fail(Errc::invalid_argument, "unknown verification suite '" + name + "'");
  }
  return results;
}

}  // namespace alignlab
