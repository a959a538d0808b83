#include <doctest.h>

#include <string>

#include "alignlab/json_io.hpp"

using namespace alignlab;

TEST_CASE("graph JSON round trip") {
  AttributedGraph g(4, 2);
  g.set_user_edge(0, 2, true);
  g.set_user_edge(1, 3, true);
  g.set_attr_edge(3, 1, true);
  const std::string text = graph_to_json(g);
  CHECK(text.find("\"user_edges\":[[0,2],[1,3]]") != std::string::npos);
  CHECK(text.find("\"attr_edges\":[[3,1]]") != std::string::npos);
  CHECK(graph_from_json(text) == g);
}

TEST_CASE("graph JSON validation") {
  CHECK_THROWS_AS(graph_from_json("{"), Error);
  CHECK_THROWS_AS(graph_from_json(R"({"n":3,"m":0,"user_edges":[[2,1]],"attr_edges":[]})"), Error);
  CHECK_THROWS_AS(graph_from_json(R"({"n":3,"m":0,"user_edges":[[0,3]],"attr_edges":[]})"), Error);
  CHECK_THROWS_AS(graph_from_json(R"({"n":3,"m":1,"user_edges":[],"attr_edges":[[0,1]]})"), Error);
}

TEST_CASE("distribution JSON round trip") {
  const auto d = validate(0.12, 0.08, 0.08, 0.72);
  const std::string text = distribution_to_json(d);
  CHECK(text == R"({"p11":0.12,"p10":0.08,"p01":0.08,"p00":0.72})");
  const auto back = distribution_from_json(text);
  CHECK(back.p11 == doctest::Approx(0.12));
  CHECK_THROWS_AS(distribution_from_json(R"({"p11":0.5,"p10":0.5,"p01":0.5,"p00":0.5})"), Error);
}

TEST_CASE("floats carry nine significant digits") {
  CHECK(round9(1.0 / 3.0) == doctest::Approx(0.333333333).epsilon(1e-12));
  const std::string text = distribution_to_json(validate(1.0 / 3.0, 1.0 / 3.0, 1.0 / 6.0, 1.0 / 6.0));
  CHECK(text.find("0.333333333") != std::string::npos);
  CHECK(text.find("0.3333333333") == std::string::npos);
}

TEST_CASE("margin report JSON carries all named fields") {
  const ModelParams params{100, 10, validate(0.05, 0.01, 0.01, 0.93),
                           validate(0.1, 0.01, 0.01, 0.88)};
  const std::string text = margin_report_to_json(margin_report(params));
  for (const char* key :
       {"margin_thm1", "margin_lemma2", "margin_converse", "sparse_checks", "p11_n_over_log_n",
        "p10_p01_times_log_n", "odds_ratio_times_log_n_cubed", "region"})
    CHECK(text.find(key) != std::string::npos);
}

TEST_CASE("sweep spec parsing") {
  const std::string text = R"({
    "n": [4, 5],
    "m": {"start": 0, "stop": 4, "steps": 3},
    "p": [[0.3, 0.1, 0.1, 0.5]],
    "q": [[0.3, 0.1, 0.1, 0.5], [0.4, 0.05, 0.05, 0.5]],
    "trials": 10,
    "seed": 99
  })";
  const SweepSpec spec = sweep_spec_from_json(text);
  CHECK(spec.n_values == std::vector<int>{4, 5});
  CHECK(spec.m_values == std::vector<int>{0, 2, 4});
  CHECK(spec.p_values.size() == 1);
  CHECK(spec.q_values.size() == 2);
  CHECK(spec.trials == 10);
  CHECK(spec.seed == 99);
  CHECK(spec.cell_count() == 12);

  CHECK_THROWS_AS(sweep_spec_from_json(R"({"n":[3],"m":[0],"p":[[0.3,0.1,0.1,0.5]],"q":[[0.3,0.1,0.1,0.5]]})"),
                  Error);  // missing seed
  CHECK_THROWS_AS(sweep_spec_from_json(R"({"n":[0],"m":[0],"p":[[0.3,0.1,0.1,0.5]],"q":[[0.3,0.1,0.1,0.5]],"seed":1})"),
                  Error);  // invalid cell
}

TEST_CASE("equiv stats and alignment outcome serialization") {
  AttributedGraph g(4, 0);
  const std::string es = equiv_stats_to_json(count_indistinguishable(g));
  CHECK(es.find("\"x_count\":6") != std::string::npos);
  CHECK(es.find("\"triple_count\":4") != std::string::npos);

  const ModelParams params{3, 0, validate(0.3, 0.1, 0.1, 0.5), validate(0.3, 0.1, 0.1, 0.5)};
  const AttributedGraph empty(3, 0);
  const std::string out = alignment_outcome_to_json(map_align(empty, empty, params));
  CHECK(out.find("\"unique\":false") != std::string::npos);
  CHECK(out.find("[0,1,2]") != std::string::npos);
}
