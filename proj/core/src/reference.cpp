#include "alignlab/reference.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>

#include "alignlab/equivalence.hpp"
#include "alignlab/weight_poly.hpp"

namespace alignlab::reference {

std::int64_t naive_delta_u(const AttributedGraph& g1, const AttributedGraph& g2) {
  std::int64_t d = 0;
  for (int i = 0; i < g1.n(); ++i)
    for (int j = 0; j < g1.n(); ++j)
      if (i < j && g1.user_edge(i, j) != g2.user_edge(i, j)) ++d;
  return d;
}

std::int64_t naive_delta_a(const AttributedGraph& g1, const AttributedGraph& g2) {
  std::int64_t d = 0;
  for (int i = 0; i < g1.n(); ++i)
    for (int a = 0; a < g1.m(); ++a)
      if (g1.attr_edge(i, a) != g2.attr_edge(i, a)) ++d;
  return d;
}

double naive_weighted_distance(const AttributedGraph& g1, const AttributedGraph& g2_anon,
                               const Permutation& perm, const Weights& w) {
  const int n = g1.n();
  const int m = g1.m();
  // materialize perm^-1(g2_anon) edge by edge
  std::vector<std::vector<char>> user(static_cast<std::size_t>(n),
                                      std::vector<char>(static_cast<std::size_t>(n), 0));
  std::vector<std::vector<char>> attr(static_cast<std::size_t>(n),
                                      std::vector<char>(static_cast<std::size_t>(m), 0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j)
      if (i != j)
        user[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
            g2_anon.user_edge(std::min(perm(i), perm(j)), std::max(perm(i), perm(j))) ? 1 : 0;
    for (int a = 0; a < m; ++a)
      attr[static_cast<std::size_t>(i)][static_cast<std::size_t>(a)] =
          g2_anon.attr_edge(perm(i), a) ? 1 : 0;
  }
  std::int64_t du = 0;
  std::int64_t da = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j)
      if (g1.user_edge(i, j) !=
          (user[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] != 0))
        ++du;
    for (int a = 0; a < m; ++a)
      if (g1.attr_edge(i, a) !=
          (attr[static_cast<std::size_t>(i)][static_cast<std::size_t>(a)] != 0))
        ++da;
  }
  return w.w1 * static_cast<double>(du) + w.w2 * static_cast<double>(da);
}

namespace {

struct OracleOrbit {
  bool user = true;
  // slot t maps to slot t+1 (mod size) under the induced pair permutation
  std::vector<std::pair<int, int>> slots;
};

// Cycles of the induced map restricted to moving pairs, walked directly from
// the vertex permutation.
std::vector<OracleOrbit> moving_cycles(const Permutation& perm, int m) {
  const int n = perm.size();
  std::vector<OracleOrbit> orbits;

  std::vector<char> seen_user(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
  const auto user_key = [n](int i, int j) {
    return static_cast<std::size_t>(std::min(i, j)) * static_cast<std::size_t>(n) +
           static_cast<std::size_t>(std::max(i, j));
  };
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (seen_user[user_key(i, j)]) continue;
      const int pi = std::min(perm(i), perm(j));
      const int pj = std::max(perm(i), perm(j));
      if (pi == i && pj == j) {
        seen_user[user_key(i, j)] = 1;  // fixed pair, contributes nothing
        continue;
      }
      OracleOrbit orbit;
      orbit.user = true;
      int a = i;
      int b = j;
      do {
        seen_user[user_key(a, b)] = 1;
        orbit.slots.emplace_back(std::min(a, b), std::max(a, b));
        const int na = perm(a);
        const int nb = perm(b);
        a = std::min(na, nb);
        b = std::max(na, nb);
      } while (!(a == i && b == j));
      orbits.push_back(std::move(orbit));
    }
  }

  std::vector<char> seen_attr(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    if (seen_attr[static_cast<std::size_t>(i)] || perm(i) == i) continue;
    std::vector<int> cycle;
    int v = i;
    do {
      seen_attr[static_cast<std::size_t>(v)] = 1;
      cycle.push_back(v);
      v = perm(v);
    } while (v != i);
    for (int a = 0; a < m; ++a) {
      OracleOrbit orbit;
      orbit.user = false;
      for (int u : cycle) orbit.slots.emplace_back(u, a);
      orbits.push_back(std::move(orbit));
    }
  }
  return orbits;
}

// Joint enumeration over every edge assignment on the moving set. Exponents
// are accumulated into a flat (a, b) grid; the grid index of a leaf is known
// from the running exponent, so leaves cost one multiply-add.
struct LawAccumulator {
  std::vector<double> grid;
  int a_max = 0;
  int b_max = 0;
  const std::vector<OracleOrbit>* orbits = nullptr;
  double prob_user[4] = {0, 0, 0, 0};  // [g*2+h]
  double prob_attr[4] = {0, 0, 0, 0};

  void add(int a, int b, double prob) {
    grid[static_cast<std::size_t>(a + a_max) * (2 * b_max + 1) +
         static_cast<std::size_t>(b + b_max)] += prob;
  }

  // Enumerates the 4^size assignments of orbit `oi` starting at slot t.
  void orbit_rec(std::size_t oi, int t, int h_first, int g_prev, int h_prev, int exponent,
                 double prob, int a, int b) {
    const OracleOrbit& orbit = (*orbits)[oi];
    const int size = static_cast<int>(orbit.slots.size());
    if (t == size) {
      // close the cycle: the last slot compares against h of slot 0
      exponent += (g_prev != h_first) - (g_prev != h_prev);
      if (orbit.user)
        next_orbit(oi + 1, a + exponent, b, prob);
      else
        next_orbit(oi + 1, a, b + exponent, prob);
      return;
    }
    const double* pr = orbit.user ? prob_user : prob_attr;
    for (int g = 0; g < 2; ++g) {
      for (int h = 0; h < 2; ++h) {
        const double p2 = prob * pr[g * 2 + h];
        if (p2 == 0.0) continue;
        int e2 = exponent;
        if (t > 0) e2 += (g_prev != h) - (g_prev != h_prev);
        orbit_rec(oi, t + 1, t == 0 ? h : h_first, g, h, e2, p2, a, b);
      }
    }
  }

  void next_orbit(std::size_t oi, int a, int b, double prob) {
    if (oi == orbits->size()) {
      add(a, b, prob);
      return;
    }
    orbit_rec(oi, 0, 0, 0, 0, 0, prob, a, b);
  }
};

}  // namespace

std::map<std::pair<int, int>, double> brute_delta_law(const Permutation& perm, int m,
                                                      const JointEdgeDistribution& p,
                                                      const JointEdgeDistribution& q) {
  const std::vector<OracleOrbit> orbits = moving_cycles(perm, m);
  LawAccumulator acc;
  acc.orbits = &orbits;
  for (const auto& orbit : orbits) {
    if (orbit.user)
      acc.a_max += static_cast<int>(orbit.slots.size());
    else
      acc.b_max += static_cast<int>(orbit.slots.size());
  }
  acc.grid.assign(static_cast<std::size_t>(2 * acc.a_max + 1) *
                      static_cast<std::size_t>(2 * acc.b_max + 1),
                  0.0);
  const double pu[4] = {p.p00, p.p01, p.p10, p.p11};
  const double pa[4] = {q.p00, q.p01, q.p10, q.p11};
  std::copy(pu, pu + 4, acc.prob_user);
  std::copy(pa, pa + 4, acc.prob_attr);
  acc.next_orbit(0, 0, 0, 1.0);

  std::map<std::pair<int, int>, double> law;
  for (int a = -acc.a_max; a <= acc.a_max; ++a)
    for (int b = -acc.b_max; b <= acc.b_max; ++b) {
      const double c = acc.grid[static_cast<std::size_t>(a + acc.a_max) * (2 * acc.b_max + 1) +
                                static_cast<std::size_t>(b + acc.b_max)];
      if (c != 0.0) law[{a, b}] = c;
    }
  return law;
}

double brute_p_delta_leq_zero(const std::map<std::pair<int, int>, double>& law, const Weights& w) {
  double s = 0.0;
  for (const auto& [e, c] : law)
    if (e.first * w.w1 + e.second * w.w2 <= kCoeffTolerance) s += c;
  return s;
}

std::map<int, double> brute_orbit_law(int l, const JointEdgeDistribution& dist) {
  const double pr[2][2] = {{dist.p00, dist.p01}, {dist.p10, dist.p11}};
  std::map<int, double> law;
  const std::int64_t total = std::int64_t{1} << (2 * l);
  for (std::int64_t code = 0; code < total; ++code) {
    double prob = 1.0;
    int exponent = 0;
    for (int t = 0; t < l; ++t) {
      const int gt = static_cast<int>((code >> (2 * t)) & 1);
      const int ht = static_cast<int>((code >> (2 * t + 1)) & 1);
      const int hn = static_cast<int>((code >> (2 * ((t + 1) % l) + 1)) & 1);
      prob *= pr[gt][ht];
      exponent += (gt != hn) - (gt != ht);
    }
    law[exponent] += prob;
  }
  return law;
}

double log_choose(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n) return -std::numeric_limits<double>::infinity();
  return std::lgamma(static_cast<double>(n) + 1.0) - std::lgamma(static_cast<double>(k) + 1.0) -
         std::lgamma(static_cast<double>(n - k) + 1.0);
}

double hyp_pgf_exact(std::int64_t r, std::int64_t N, std::int64_t K, double z) {
  const std::int64_t lo = std::max<std::int64_t>(0, r - (N - K));
  const std::int64_t hi = std::min(r, K);
  double s = 0.0;
  for (std::int64_t k = lo; k <= hi; ++k) {
    const double logp = log_choose(K, k) + log_choose(N - K, r - k) - log_choose(N, r);
    s += std::exp(logp) * std::pow(z, static_cast<double>(k));
  }
  return s;
}

double bin_pgf_exact(std::int64_t r, double p, double z) {
  if (p <= 0.0) return 1.0;
  if (p >= 1.0) return std::pow(z, static_cast<double>(r));
  double s = 0.0;
  for (std::int64_t k = 0; k <= r; ++k) {
    const double logp = log_choose(r, k) + k * std::log(p) + (r - k) * std::log1p(-p);
    s += std::exp(logp) * std::pow(z, static_cast<double>(k));
  }
  return s;
}

namespace {

// Graph scratchpad for exact enumeration: user adjacency and attribute rows
// as plain matrices.
struct TinyGraph {
  int n, m;
  std::vector<char> user;  // n*n, symmetric
  std::vector<char> attr;  // n*m

  TinyGraph(int n_, int m_)
      : n(n_), m(m_), user(static_cast<std::size_t>(n_) * n_, 0),
        attr(static_cast<std::size_t>(n_) * m_, 0) {}

  char& u(int i, int j) { return user[static_cast<std::size_t>(i) * n + j]; }
  char uc(int i, int j) const { return user[static_cast<std::size_t>(i) * n + j]; }
  char& a(int i, int x) { return attr[static_cast<std::size_t>(i) * m + x]; }
  char ac(int i, int x) const { return attr[static_cast<std::size_t>(i) * m + x]; }
};

bool tiny_equiv(const TinyGraph& g, int i, int j) {
  for (int v = 0; v < g.n; ++v) {
    if (v == i || v == j) continue;
    if (g.uc(i, v) != g.uc(j, v)) return false;
  }
  for (int x = 0; x < g.m; ++x)
    if (g.ac(i, x) != g.ac(j, x)) return false;
  return true;
}

}  // namespace

ExactEquivProbs enumerate_equiv_probs(int n, int m, double p11, double q11) {
  const int pair_bits = static_cast<int>(user_pair_count(n));
  const int attr_bits = n * m;
  const int bits = pair_bits + attr_bits;
  if (bits > 24) fail(Errc::n_too_large, "enumeration over 2^" + std::to_string(bits) + " graphs");

  std::vector<std::pair<int, int>> pair_of;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pair_of.emplace_back(i, j);

  ExactEquivProbs probs;
  TinyGraph g(n, m);
  for (std::int64_t code = 0; code < (std::int64_t{1} << bits); ++code) {
    double w = 1.0;
    for (int b = 0; b < pair_bits; ++b) {
      const bool on = (code >> b) & 1;
      const auto [i, j] = pair_of[static_cast<std::size_t>(b)];
      g.u(i, j) = g.u(j, i) = on ? 1 : 0;
      w *= on ? p11 : (1.0 - p11);
      if (w == 0.0) break;
    }
    if (w > 0.0) {
      for (int b = 0; b < attr_bits; ++b) {
        const bool on = (code >> (pair_bits + b)) & 1;
        g.a(b / m, b % m) = on ? 1 : 0;
        w *= on ? q11 : (1.0 - q11);
        if (w == 0.0) break;
      }
    }
    if (w == 0.0) continue;
    if (tiny_equiv(g, 0, 1)) {
      probs.pair += w;
      if (n >= 3 && tiny_equiv(g, 1, 2) && tiny_equiv(g, 0, 2)) probs.triple += w;
      if (n >= 4 && tiny_equiv(g, 2, 3)) probs.two_pairs += w;
    }
  }
  return probs;
}

ExactAlignmentStats enumerate_alignment_stats(const ModelParams& params) {
  check_params(params);
  const int n = params.n;
  const int m = params.m;
  const int pair_slots = static_cast<int>(user_pair_count(n));
  const int attr_slots = n * m;
  const int slots = pair_slots + attr_slots;
  if (slots > 10) fail(Errc::n_too_large, "enumeration over 4^" + std::to_string(slots) + " pairs");

  std::vector<std::pair<int, int>> pair_of;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pair_of.emplace_back(i, j);

  std::vector<Permutation> perms;
  for_each_permutation(n, [&](const std::vector<int>& v) { perms.emplace_back(v); });

  const double pu[4] = {params.p_user.p11, params.p_user.p10, params.p_user.p01,
                        params.p_user.p00};
  const double qa[4] = {params.q_attr.p11, params.q_attr.p10, params.q_attr.p01,
                        params.q_attr.p00};
  // state s encodes (g1,g2): 0->(1,1), 1->(1,0), 2->(0,1), 3->(0,0)
  const bool in_g1[4] = {true, true, false, false};
  const bool in_g2[4] = {true, false, true, false};

  ExactAlignmentStats stats;
  std::vector<int> state(static_cast<std::size_t>(slots), 0);
  std::int64_t total = 1;
  for (int s = 0; s < slots; ++s) total *= 4;
  for (std::int64_t code = 0; code < total; ++code) {
    std::int64_t c = code;
    double w = 1.0;
    for (int s = 0; s < slots; ++s) {
      state[static_cast<std::size_t>(s)] = static_cast<int>(c % 4);
      c /= 4;
      w *= s < pair_slots ? pu[state[static_cast<std::size_t>(s)]]
                          : qa[state[static_cast<std::size_t>(s)]];
    }
    if (w == 0.0) continue;
    GraphPair gp{AttributedGraph(n, m), AttributedGraph(n, m)};
    for (int s = 0; s < pair_slots; ++s) {
      const auto [i, j] = pair_of[static_cast<std::size_t>(s)];
      if (in_g1[state[static_cast<std::size_t>(s)]]) gp.g1.set_user_edge(i, j, true);
      if (in_g2[state[static_cast<std::size_t>(s)]]) gp.g2.set_user_edge(i, j, true);
    }
    for (int s = 0; s < attr_slots; ++s) {
      const int i = s / m;
      const int a = s % m;
      const int st = state[static_cast<std::size_t>(pair_slots + s)];
      if (in_g1[st]) gp.g1.set_attr_edge(i, a, true);
      if (in_g2[st]) gp.g2.set_attr_edge(i, a, true);
    }
    const EquivStats es = count_indistinguishable(intersection(gp));
    if (es.x_count == 0) stats.p_x_zero += w;
    double success = 0.0;
    for (const auto& truth : perms) {
      const AlignmentOutcome out =
          map_align(gp.g1, anonymize(gp.g2, truth), params, kDefaultAlignCap, truth);
      if (out.matches_truth.value_or(false)) success += 1.0;
    }
    stats.p_success_unique += w * success / static_cast<double>(perms.size());
  }
  return stats;
}

}  // namespace alignlab::reference
