#include <doctest.h>

#include "confspace/gcalg.hpp"
#include "confspace/lemmas.hpp"

using namespace confspace;
using G = Generator;

TEST_CASE("property suite n = 0..5") {
  for (int n = 0; n <= 5; ++n)
    for (const auto& r : run_lemmas(n)) {
      CAPTURE(n);
      CAPTURE(r.name);
      CHECK_MESSAGE(r.pass, r.counterexample);
    }
}

TEST_CASE("every property is reported") {
  const auto results = run_lemmas(2);
  REQUIRE(results.size() == lemma_names().size());
  for (std::size_t k = 0; k < results.size(); ++k) CHECK(results[k].name == lemma_names()[k]);
}

TEST_CASE("tree to path with both signs") {
  QuotientAlgebra a(4, RelationSet::e2());
  const auto& L = a.layout();
  auto s = a.space(0, 3);
  const Element tree = Element::product(L, std::vector<G>{G::g(1, 2), G::g(2, 3), G::g(2, 4)});
  const Element p1 = path_monomial(L, {1, 2, 3, 4}), p2 = path_monomial(L, {1, 2, 4, 3});
  CHECK(is_zero(s->reduce(tree - (p1 - p2))));
  // With g_ij = g_ji the sum form does not hold.
  CHECK_FALSE(is_zero(s->reduce(tree - (p1 + p2))));
}

TEST_CASE("path monomial") {
  const Layout L(4);
  CHECK(path_monomial(L, {3, 1, 2}) == Element::product(L, std::vector<G>{G::g(1, 3), G::g(1, 2)}));
  CHECK(path_monomial(L, {2}) == Element::unit());
}
