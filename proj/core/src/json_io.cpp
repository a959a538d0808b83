#include "alignlab/json_io.hpp"

#include <cstdio>
#include <cstdlib>

#include <nlohmann/json.hpp>

namespace alignlab {

using nlohmann::json;
using ordered_json = nlohmann::ordered_json;

double round9(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return std::strtod(buf, nullptr);
}

namespace {

ordered_json dist_json(const JointEdgeDistribution& d) {
  return ordered_json{{"p11", round9(d.p11)},
                      {"p10", round9(d.p10)},
                      {"p01", round9(d.p01)},
                      {"p00", round9(d.p00)}};
}

JointEdgeDistribution dist_from(const json& j) {
  return validate(j.at("p11").get<double>(), j.at("p10").get<double>(), j.at("p01").get<double>(),
                  j.at("p00").get<double>());
}

}  // namespace

std::string graph_to_json(const AttributedGraph& g) {
  ordered_json j;
  j["n"] = g.n();
  j["m"] = g.m();
  auto& ue = j["user_edges"] = ordered_json::array();
  for (const auto& [a, b] : g.user_edges()) ue.push_back({a, b});
  auto& ae = j["attr_edges"] = ordered_json::array();
  for (const auto& [a, b] : g.attr_edges()) ae.push_back({a, b});
  return j.dump();
}

AttributedGraph graph_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    fail(Errc::invalid_argument, std::string("graph JSON parse failure: ") + e.what());
  }
  const int n = j.at("n").get<int>();
  const int m = j.at("m").get<int>();
  if (n < 1 || m < 0) fail(Errc::invalid_argument, "graph JSON has invalid dimensions");
  AttributedGraph g(n, m);
  for (const auto& e : j.at("user_edges")) {
    const int a = e.at(0).get<int>();
    const int b = e.at(1).get<int>();
    if (a < 0 || b < 0 || a >= n || b >= n || a >= b)
      fail(Errc::invalid_argument, "user edge [" + std::to_string(a) + "," + std::to_string(b) +
                                       "] violates 0 <= i < j < n");
    g.set_user_edge(a, b, true);
  }
  for (const auto& e : j.at("attr_edges")) {
    const int a = e.at(0).get<int>();
    const int b = e.at(1).get<int>();
    if (a < 0 || b < 0 || a >= n || b >= m)
      fail(Errc::invalid_argument, "attribute edge [" + std::to_string(a) + "," +
                                       std::to_string(b) + "] out of range");
    g.set_attr_edge(a, b, true);
  }
  return g;
}

std::string distribution_to_json(const JointEdgeDistribution& d) { return dist_json(d).dump(); }

JointEdgeDistribution distribution_from_json(const std::string& text) {
  try {
    return dist_from(json::parse(text));
  } catch (const json::exception& e) {
    fail(Errc::invalid_argument, std::string("distribution JSON parse failure: ") + e.what());
  }
}

std::string margin_report_to_json(const MarginReport& r) {
  ordered_json j;
  j["margin_thm1"] = round9(r.margin_thm1);
  j["margin_lemma2"] = round9(r.margin_lemma2);
  j["margin_converse"] = round9(r.margin_converse);
  j["sparse_checks"] = ordered_json{{"p11_n_over_log_n", round9(r.sparse_p11_ratio)},
                                    {"p10_p01_times_log_n", round9(r.sparse_cross_ratio)},
                                    {"odds_ratio_times_log_n_cubed", round9(r.sparse_skew_ratio)}};
  j["region"] = r.region;
  return j.dump();
}

std::string equiv_stats_to_json(const EquivStats& s) {
  ordered_json j;
  j["x_count"] = s.x_count;
  j["triple_count"] = s.triple_count;
  j["two_disjoint_pair_count"] = s.two_disjoint_pair_count;
  auto& pairs = j["pairs"] = ordered_json::array();
  for (const auto& [a, b] : s.pairs) pairs.push_back({a, b});
  return j.dump();
}

std::string alignment_outcome_to_json(const AlignmentOutcome& o) {
  ordered_json j;
  j["min_distance"] = round9(o.min_distance);
  j["unique"] = o.unique;
  auto& mins = j["minimizers"] = ordered_json::array();
  for (const auto& p : o.minimizers) mins.push_back(p.mapping());
  if (o.matches_truth.has_value()) j["matches_truth"] = *o.matches_truth;
  return j.dump();
}

std::string cell_result_to_json(const CellResult& c) {
  ordered_json j;
  j["n"] = c.params.n;
  j["m"] = c.params.m;
  j["p"] = dist_json(c.params.p_user);
  j["q"] = dist_json(c.params.q_attr);
  j["trials"] = c.trials;
  j["successes"] = c.successes;
  j["tie_break_successes"] = c.tie_break_successes;
  j["success_rate"] = round9(c.success_rate);
  j["ci_low"] = round9(c.ci.low);
  j["ci_high"] = round9(c.ci.high);
  j["x_zero_trials"] = c.x_zero_trials;
  j["mean_success_ceiling"] = round9(c.mean_success_ceiling);
  j["margin_thm1"] = round9(c.margin_thm1);
  j["margin_lemma2"] = round9(c.margin_lemma2);
  j["margin_converse"] = round9(c.margin_converse);
  j["region"] = c.region;
  return j.dump();
}

namespace {

std::vector<int> int_axis(const json& j, const std::string& key) {
  const auto& node = j.at(key);
  std::vector<int> out;
  if (node.is_array()) {
    for (const auto& v : node) out.push_back(v.get<int>());
  } else if (node.is_object()) {
    const int start = node.at("start").get<int>();
    const int stop = node.at("stop").get<int>();
    const int steps = node.at("steps").get<int>();
    if (steps < 1) fail(Errc::invalid_argument, "axis '" + key + "' needs steps >= 1");
    if (steps == 1) {
      out.push_back(start);
    } else {
      for (int s = 0; s < steps; ++s) {
        const double v = start + (stop - start) * static_cast<double>(s) / (steps - 1);
        out.push_back(static_cast<int>(v + (v >= 0 ? 0.5 : -0.5)));
      }
    }
  } else {
    out.push_back(node.get<int>());
  }
  return out;
}

std::vector<JointEdgeDistribution> dist_axis(const json& j, const std::string& key) {
  const auto& node = j.at(key);
  std::vector<JointEdgeDistribution> out;
  const auto read_quad = [](const json& q) {
    if (!q.is_array() || q.size() != 4)
      fail(Errc::invalid_argument, "distribution must be a 4-element array");
    return validate(q.at(0).get<double>(), q.at(1).get<double>(), q.at(2).get<double>(),
                    q.at(3).get<double>());
  };
  if (node.is_array() && !node.empty() && node.at(0).is_array()) {
    for (const auto& q : node) out.push_back(read_quad(q));
  } else {
    out.push_back(read_quad(node));
  }
  return out;
}

}  // namespace

SweepSpec sweep_spec_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    fail(Errc::invalid_argument, std::string("sweep JSON parse failure: ") + e.what());
  }
  SweepSpec spec;
  try {
    spec.n_values = int_axis(j, "n");
    spec.m_values = int_axis(j, "m");
    spec.p_values = dist_axis(j, "p");
    spec.q_values = dist_axis(j, "q");
    if (!j.contains("seed")) fail(Errc::invalid_argument, "sweep config requires a seed");
    spec.seed = j.at("seed").get<std::uint64_t>();
    spec.trials = j.value("trials", std::int64_t{2000});
    spec.cap = j.value("cap", kDefaultAlignCap);
    spec.eps = j.value("eps", 0.0);
  } catch (const json::exception& e) {
    fail(Errc::invalid_argument, std::string("sweep JSON field failure: ") + e.what());
  }
  spec.validate_cells();
  return spec;
}

}  // namespace alignlab
