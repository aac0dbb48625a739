#include <doctest.h>

#include "confspace/invariants.hpp"
#include "confspace/oracle.hpp"
#include "small_oracle.hpp"

using namespace confspace;
using G = Generator;

namespace {

Element prod(const Layout& L, std::vector<Generator> gens) { return Element::product(L, gens); }

GenMask mask(const Layout& L, std::vector<Generator> gens) { return normalize(L, gens)->mask; }

VMonomial vm(std::uint32_t xs, std::uint32_t ys, std::vector<std::pair<int, int>> xp,
             std::vector<std::pair<int, int>> yp = {}) {
  VMonomial v;
  v.xs = xs;
  v.ys = ys;
  v.xpairs = std::move(xp);
  v.ypairs = std::move(yp);
  return v;
}

}  // namespace

TEST_CASE("Arnold algebra invariants") {
  CHECK(arnold_conf_betti(0) == std::vector<std::int64_t>{1});
  CHECK(arnold_conf_betti(1) == std::vector<std::int64_t>{1});
  CHECK(arnold_conf_betti(2) == std::vector<std::int64_t>{1, 1});
  for (int n = 2; n <= 6; ++n) {
    CAPTURE(n);
    const auto h = arnold_conf_betti(n);
    REQUIRE(h.size() >= 2);
    CHECK(h[0] == 1);
    CHECK(h[1] == 1);
    for (std::size_t r = 2; r < h.size(); ++r) CHECK(h[r] == 0);
  }
  for (int n = 2; n <= 4; ++n) {
    const auto brute = small_oracle::arnold_invariants(n);
    const auto h = arnold_conf_betti(n);
    REQUIRE(brute.size() == h.size());
    for (std::size_t r = 0; r < h.size(); ++r) CHECK(static_cast<std::size_t>(h[r]) == brute[r]);
  }
}

TEST_CASE("V basis") {
  // Index-disjoint monomials: sum over matchings of 3^singles * 2^pairs.
  const std::vector<std::size_t> sizes{1, 3, 11, 45, 201, 963};
  for (int n = 0; n <= 5; ++n) {
    const auto basis = v_basis(n);
    CHECK(basis.size() == sizes[n]);
    for (const auto& v : basis) CHECK(v.disjoint());
  }
}

TEST_CASE("phi") {
  const Layout L(4);
  CHECK(phi(L, vm(0, 0, {{1, 2}})) == prod(L, {G::g(1, 2), G::x(1)}));
  CHECK(phi(L, VMonomial{}) == Element::unit());
  CHECK(phi(L, vm(0b1, 0b10, {{3, 4}})) == prod(L, {G::x(1), G::y(2), G::g(3, 4), G::x(3)}));
}

TEST_CASE("psi rules") {
  const Layout L(4);
  // A: adjacent edges.
  CHECK(psi(L, mask(L, {G::g(1, 2), G::g(2, 3)})).empty());
  CHECK(psi(L, mask(L, {G::g(1, 2), G::g(2, 3), G::x(4)})).empty());
  CHECK(classify(L, mask(L, {G::g(1, 2), G::g(2, 3)})).type == PsiType::A);
  // C: g12 x1 -> x_12.
  CHECK(psi(L, mask(L, {G::g(1, 2), G::x(1)})) == VElement{{vm(0, 0, {{1, 2}}), 1}});
  // B: bare g.
  CHECK(psi(L, mask(L, {G::g(1, 2), G::x(3)})).empty());
  CHECK(classify(L, mask(L, {G::g(1, 2), G::x(3)})).type == PsiType::B);
}

TEST_CASE("psi is a left inverse of phi") {
  for (int n = 0; n <= 5; ++n) {
    CAPTURE(n);
    const auto bad = check_left_inverse(n);
    CHECK_MESSAGE(!bad, *bad);
  }
}

TEST_CASE("psi kills the relations of W") {
  for (int n = 0; n <= 3; ++n) CHECK_FALSE(check_psi_annihilates_relations(n).has_value());
  for (int n = 4; n <= 5; ++n) CHECK_FALSE(check_psi_annihilates_relations(n, 500, 7).has_value());
}

TEST_CASE("phi is injective on W") {
  for (int n = 0; n <= 5; ++n) CHECK_FALSE(check_phi_injective_on_w(n).has_value());
}

TEST_CASE("W is a quotient of E2") {
  for (int n = 2; n <= 4; ++n) {
    QuotientAlgebra e2(n, RelationSet::e2()), w(n, RelationSet::w_algebra());
    for (int p = 0; p <= 2 * n; ++p)
      for (int q = 0; q <= e2.layout().num_edges(); ++q) CHECK(w.space(p, q)->dim() <= e2.space(p, q)->dim());
  }
}

TEST_CASE("disjoint-pair classes are nonzero in the invariants") {
  for (int n = 2; n <= 5; ++n) {
    QuotientAlgebra a(n, RelationSet::e2());
    const auto& L = a.layout();
    auto s = a.space(2, 0);
    CHECK_FALSE(is_zero(symmetrized_coords(*s, prod(L, {G::x(1), G::y(2)}))));
    if (n >= 4) {
      auto s2 = a.space(3, 1);
      CHECK_FALSE(is_zero(symmetrized_coords(*s2, prod(L, {G::x(1), G::y(2), G::g(3, 4), G::x(3)}))));
    }
  }
}
