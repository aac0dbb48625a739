#include <doctest.h>

#include "confspace/report.hpp"

using namespace confspace;

TEST_CASE("series JSON") {
  const auto s = expand(punctured_torus_conf_closed_form(), 2);
  const Json j = series_coefficient_json(s[2], 2);
  CHECK(j.dump() ==
        R"({"coefficients":[{"u":1,"value":"2","x":0,"y":0},{"u":3,"value":"-2","x":0,"y":0},)"
        R"({"u":4,"value":"1","x":0,"y":0}],"n":2})");
  const auto k4 = expand(punctured_torus_conf_hodge_closed_form(), 1);
  const Json j4 = series_coefficient_json(k4[1], 1);
  int last_u = -1;
  for (const auto& c : j4["coefficients"]) {
    CHECK(c["u"].get<int>() >= last_u);
    last_u = c["u"].get<int>();
    CHECK(c["value"].is_string());
  }
  CHECK(series_json(s).size() == 3);
}

TEST_CASE("spectral report JSON is deterministic") {
  const auto a = spectral_report_json(spectral_report(3)).dump();
  const auto b = spectral_report_json(spectral_report(3)).dump();
  CHECK(a == b);
  const Json j = Json::parse(a);
  for (const char* key : {"n", "e2_inv", "e3_inv", "betti", "hodge", "purity", "violations", "series_match"})
    CHECK(j.contains(key));
  CHECK(j["violations"].empty());
  CHECK(j["purity"] == true);
  CHECK(j["betti"] == Json::array({1, 2, 4, 4}));
  CHECK(j["e3_inv"]["1,1"] == 4);
}

TEST_CASE("bidegree space dump") {
  QuotientAlgebra a(2, RelationSet::e2());
  const Json j = bidegree_space_json(*a.space(1, 1));
  CHECK(j["free_basis"] == Json::array({"g12.x1", "g12.x2", "g12.y1", "g12.y2"}));
  CHECK(j["relation_rank"] == 2);
  CHECK(j["quotient_dim"] == 2);
}

TEST_CASE("lemma summary JSON") {
  std::vector<LemmaResult> rs{{"a", 2, true, "", 0.1}, {"b", 2, false, "g12.g23", 0.2}};
  const Json j = lemma_summary_json(rs);
  CHECK(j["all_pass"] == false);
  CHECK(j["results"][1]["counterexample"] == "g12.g23");
  CHECK_FALSE(j["results"][0].contains("counterexample"));
}
