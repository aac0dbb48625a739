#ifndef CONFSPACE_LEMMAS_HPP
#define CONFSPACE_LEMMAS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "confspace/gcalg.hpp"

namespace confspace {

struct LemmaOptions {
  int workers = 1;
  std::uint64_t seed = 20240601;
  /// Random cases per randomized property.
  std::size_t samples = 200;
};

struct LemmaResult {
  std::string name;
  int n = 0;
  bool pass = true;
  std::string counterexample;
  double seconds = 0;
};

/// Names of the properties in run order.
const std::vector<std::string>& lemma_names();

/// Every property for one n.
std::vector<LemmaResult> run_lemmas(int n, const LemmaOptions& opts = {});

/// Every property for n_min..n_max.
std::vector<LemmaResult> run_lemma_suite(int n_min, int n_max, const LemmaOptions& opts = {});

/// Path monomial g_{i1 i2} g_{i2 i3} ... g_{i(r-1) ir}.
Element path_monomial(const Layout& layout, const std::vector<int>& tuple);

}  // namespace confspace

#endif  // CONFSPACE_LEMMAS_HPP
