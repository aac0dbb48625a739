#ifndef CONFSPACE_REPORT_HPP
#define CONFSPACE_REPORT_HPP

#include <vector>

#include <nlohmann/json.hpp>

#include "confspace/gcalg.hpp"
#include "confspace/lemmas.hpp"
#include "confspace/series.hpp"
#include "confspace/specseq.hpp"

namespace confspace {

using Json = nlohmann::json;

/// {"n", "coefficients": [{"x","y","u","value"}]} for one t^n coefficient,
/// sorted by (u, x, y); values are exact decimal strings.
Json series_coefficient_json(const MultiPoly& coeff, int n);

/// One document per t-degree 0..s.size()-1.
Json series_json(const Series& s);

Json spectral_report_json(const SpectralReport& report);

Json hodge_json(const HodgeTable& table);

/// Free basis, relation rank and quotient dimension of one bidegree piece.
Json bidegree_space_json(const BidegreeSpace& space);

/// Per-property pass/fail, counterexample on failure.
Json lemma_summary_json(const std::vector<LemmaResult>& results);

}  // namespace confspace

#endif  // CONFSPACE_REPORT_HPP
