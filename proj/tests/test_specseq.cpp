#include <doctest.h>

#include "confspace/specseq.hpp"
#include "small_oracle.hpp"

using namespace confspace;

namespace {

std::map<Bidegree, std::size_t> nonzero_e3(const SpectralReport& r) {
  std::map<Bidegree, std::size_t> out;
  for (const auto& [pq, d] : r.dims)
    if (d.e3) out[pq] = d.e3;
  return out;
}

}  // namespace

TEST_CASE("invariant bases at n = 2") {
  QuotientAlgebra a(2, RelationSet::e2());
  CHECK(invariant_basis(*a.space(1, 0)).dim() == 2);
  CHECK(invariant_basis(*a.space(2, 0)).dim() == 1);
  CHECK(invariant_basis(*a.space(1, 1)).dim() == 2);
}

TEST_CASE("invariant basis vectors are fixed by the generators") {
  for (int n = 2; n <= 4; ++n) {
    QuotientAlgebra a(n, RelationSet::e2());
    for (int p = 0; p <= 2 * n; ++p)
      for (int q = 0; q < n; ++q) {
        auto s = a.space(p, q);
        const auto inv = invariant_basis(*s);
        for (const auto& v : inv.basis)
          for (const auto& g : sn_generators(n)) CHECK(act_coords(*s, g, v) == v);
      }
  }
}

TEST_CASE("E3 at small n") {
  const auto r0 = spectral_report(0);
  CHECK(nonzero_e3(r0) == std::map<Bidegree, std::size_t>{{{0, 0}, 1}});
  const auto r1 = spectral_report(1);
  CHECK(nonzero_e3(r1) == std::map<Bidegree, std::size_t>{{{0, 0}, 1}, {{1, 0}, 2}});
  const auto r2 = spectral_report(2);
  CHECK(nonzero_e3(r2) == std::map<Bidegree, std::size_t>{{{0, 0}, 1}, {{1, 0}, 2}, {{1, 1}, 2}});
  // d(g12) spans the (2,0) invariants.
  CHECK(r2.dims.at({2, 0}).e2_inv == 1);
  CHECK(r2.dims.at({2, 0}).im_in == 1);
  CHECK(r2.e3(2, 0) == 0);
}

TEST_CASE("purity") {
  for (int n = 0; n <= 2; ++n) {
    auto r = spectral_report(n);
    CHECK(r.purity_ok);
    CHECK(r.violations.empty());
  }
  auto r = spectral_report(2);
  r.dims[{0, 1}].e3 = 1;
  CHECK_FALSE(purity_check(r));
  CHECK(r.violations == std::vector<Bidegree>{{0, 1}});
  CHECK_THROWS_AS(betti_and_hodge(r), ConsistencyError);
}

TEST_CASE("Betti and Hodge numbers") {
  const auto r1 = spectral_report(1);
  CHECK(r1.betti == std::vector<std::int64_t>{1, 2});
  CHECK(r1.hodge.at({1, 1, 0}) == 1);
  CHECK(r1.hodge.at({1, 0, 1}) == 1);
  const auto r2 = spectral_report(2);
  CHECK(r2.betti == std::vector<std::int64_t>{1, 2, 2});
  CHECK(r2.hodge.at({2, 2, 1}) == 1);
  CHECK(r2.hodge.at({2, 1, 2}) == 1);
  CHECK(spectral_report(3).betti == std::vector<std::int64_t>{1, 2, 4, 4});
}

TEST_CASE("engine matches the series for n = 0..5") {
  for (int n = 0; n <= 5; ++n) {
    CAPTURE(n);
    const auto r = spectral_report(n);
    const auto verdict = verify_against_series(r);
    CHECK(verdict.match);
    CHECK(r.series_match == true);
    CHECK(r.betti == series_betti(n));
    CHECK(r.hodge == series_hodge(n));
    CHECK(r.purity_ok);
    CHECK(higher_differentials_vanish(r));
    std::int64_t euler = 0;
    for (std::size_t i = 0; i < r.betti.size(); ++i) euler += (i % 2 ? -1 : 1) * r.betti[i];
    CHECK(euler == (n % 2 ? -1 : 1));
  }
}

TEST_CASE("engine matches the brute-force oracle") {
  for (int n = 0; n <= 4; ++n) {
    CAPTURE(n);
    const auto oracle = small_oracle::brute_force(n);
    const auto r = spectral_report(n);
    std::map<std::pair<int, int>, std::size_t> inv;
    for (const auto& [pq, d] : r.dims)
      if (d.e2_inv) inv[pq] = d.e2_inv;
    CHECK(inv == oracle.invariant_dims);
    CHECK(nonzero_e3(r) == oracle.e3);
    CHECK(r.betti == oracle.betti);
    std::map<std::tuple<int, int, int>, std::size_t> hodge;
    for (const auto& [k, d] : r.hodge) hodge[{k.i, k.a, k.b}] = static_cast<std::size_t>(d);
    CHECK(hodge == oracle.hodge);
  }
}

TEST_CASE("worker count does not change the report") {
  SpectralOptions one, many;
  many.workers = 4;
  many.modular_prescreen = true;
  const auto a = e3_dims(4, one), b = e3_dims(4, many);
  REQUIRE(a.dims.size() == b.dims.size());
  for (const auto& [pq, d] : a.dims) {
    const auto& e = b.dims.at(pq);
    CHECK(d.e2_inv == e.e2_inv);
    CHECK(d.ker == e.ker);
    CHECK(d.im_in == e.im_in);
    CHECK(d.e3 == e.e3);
  }
  CHECK(a.e3_hodge == b.e3_hodge);
}
