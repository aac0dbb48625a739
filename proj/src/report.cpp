#include "confspace/report.hpp"

#include <string>

namespace confspace {

namespace {

std::string pq_key(int p, int q) { return std::to_string(p) + "," + std::to_string(q); }

}  // namespace

Json series_coefficient_json(const MultiPoly& coeff, int n) {
  Json list = Json::array();
  // MultiPoly terms are already ordered by (u, x, y, t).
  for (const auto& [e, c] : coeff.terms())
    list.push_back({{"x", e.x}, {"y", e.y}, {"u", e.u}, {"value", c.get_str()}});
  return {{"n", n}, {"coefficients", std::move(list)}};
}

Json series_json(const Series& s) {
  Json out = Json::array();
  for (std::size_t k = 0; k < s.size(); ++k)
    out.push_back(series_coefficient_json(s[k], static_cast<int>(k)));
  return out;
}

Json hodge_json(const HodgeTable& table) {
  Json out = Json::array();
  for (const auto& [key, dim] : table)
    out.push_back({{"i", key.i}, {"a", key.a}, {"b", key.b}, {"dim", dim}});
  return out;
}

Json spectral_report_json(const SpectralReport& report) {
  Json e2 = Json::object(), e3 = Json::object();
  for (const auto& [pq, d] : report.dims) {
    e2[pq_key(pq.first, pq.second)] = d.e2_inv;
    e3[pq_key(pq.first, pq.second)] = d.e3;
  }
  Json violations = Json::array();
  for (const auto& [p, q] : report.violations) violations.push_back(pq_key(p, q));
  Json out{{"n", report.n},
           {"e2_inv", std::move(e2)},
           {"e3_inv", std::move(e3)},
           {"betti", report.betti},
           {"hodge", hodge_json(report.hodge)},
           {"purity", report.purity_ok},
           {"violations", std::move(violations)}};
  out["series_match"] = report.series_match ? Json(*report.series_match) : Json(nullptr);
  return out;
}

Json bidegree_space_json(const BidegreeSpace& space) {
  const auto& L = space.layout();
  Json free = Json::array(), quotient = Json::array();
  for (GenMask m : space.free_basis()) free.push_back(L.format(m));
  for (GenMask m : space.quotient_basis()) quotient.push_back(L.format(m));
  return {{"n", space.n()},
          {"p", space.p()},
          {"q", space.q()},
          {"free_basis", std::move(free)},
          {"relation_rank", space.relation_rank()},
          {"quotient_dim", space.dim()},
          {"quotient_basis", std::move(quotient)}};
}

Json lemma_summary_json(const std::vector<LemmaResult>& results) {
  Json list = Json::array();
  bool all = true;
  for (const auto& r : results) {
    Json entry{{"name", r.name}, {"n", r.n}, {"pass", r.pass}};
    if (!r.pass) entry["counterexample"] = r.counterexample;
    all = all && r.pass;
    list.push_back(std::move(entry));
  }
  return {{"all_pass", all}, {"results", std::move(list)}};
}

}  // namespace confspace
