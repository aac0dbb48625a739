#include <doctest.h>

#include <numeric>

#include "confspace/gcalg.hpp"
#include "confspace/invariants.hpp"
#include "confspace/reference.hpp"
#include "small_oracle.hpp"

using namespace confspace;
using G = Generator;

namespace {

Element prod(const Layout& L, std::vector<Generator> gens, const Rational& c = 1) {
  return Element::product(L, gens, c);
}

GenMask mask(const Layout& L, std::vector<Generator> gens) {
  auto s = normalize(L, gens);
  REQUIRE(s.has_value());
  return s->mask;
}

Vector coords(const BidegreeSpace& s, std::initializer_list<std::pair<GenMask, int>> terms) {
  Element e;
  for (auto [m, c] : terms) e.add_term(m, c);
  return s.reduce(e);
}

std::uint64_t binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST_CASE("normalize") {
  const Layout L(2);
  CHECK_FALSE(normalize(L, std::vector<G>{G::x(1), G::x(1)}).has_value());
  auto a = normalize(L, std::vector<G>{G::x(2), G::x(1)});
  REQUIRE(a);
  CHECK(a->sign == -1);
  CHECK(L.format(a->mask) == "x1.x2");
  auto b = normalize(L, std::vector<G>{G::g(1, 2), G::y(1), G::x(1)});
  REQUIRE(b);
  CHECK(b->sign == -1);
  CHECK(L.format(b->mask) == "g12.x1.y1");
}

TEST_CASE("free basis") {
  const Layout L2(2), L3(3);
  CHECK(free_basis(L2, 1, 0).size() == 4);
  CHECK(free_basis(L2, 0, 1).size() == 1);
  CHECK(free_basis(L2, 0, 2).empty());
  std::vector<std::string> names;
  for (GenMask m : free_basis(L3, 0, 2)) names.push_back(L3.format(m));
  std::sort(names.begin(), names.end());
  CHECK(names == std::vector<std::string>{"g12.g13", "g12.g23", "g13.g23"});
  for (int n = 0; n <= 4; ++n) {
    const Layout L(n);
    for (int p = 0; p <= 2 * n; ++p)
      for (int q = 0; q <= L.num_edges(); ++q)
        CHECK(free_basis(L, p, q).size() == binom(L.num_edges(), q) * binom(2 * n, p));
  }
}

TEST_CASE("relation span at n = 2") {
  QuotientAlgebra a(2, RelationSet::e2());
  auto s20 = a.space(2, 0);
  CHECK(s20->free_dim() == 6);
  CHECK(s20->relation_rank() == 2);
  CHECK(s20->dim() == 4);
  // The free (2,1) piece has 6 monomials and all of them die.
  auto s21 = a.space(2, 1);
  CHECK(s21->free_dim() == 6);
  CHECK(s21->relation_rank() == 6);
  CHECK(s21->dim() == 0);
  auto s02 = a.space(0, 2);
  CHECK(s02->free_dim() == 0);
}

TEST_CASE("reduce") {
  QuotientAlgebra a2(2, RelationSet::e2()), a3(3, RelationSet::e2());
  const auto& L2 = a2.layout();
  const auto& L3 = a3.layout();
  CHECK(is_zero(a2.space(1, 1)->reduce(prod(L2, {G::g(1, 2), G::x(1)}) - prod(L2, {G::g(1, 2), G::x(2)}))));
  CHECK(is_zero(a2.space(2, 0)->reduce(prod(L2, {G::x(1), G::y(1)}))));
  // Arnold: g13 g23 = g12 g23 - g12 g13.
  auto s = a3.space(0, 2);
  const GenMask g13g23 = mask(L3, {G::g(1, 3), G::g(2, 3)});
  const GenMask g12g13 = mask(L3, {G::g(1, 2), G::g(1, 3)});
  const GenMask g12g23 = mask(L3, {G::g(1, 2), G::g(2, 3)});
  CHECK(s->dim() == 2);
  CHECK(s->reduce(Element::monomial(g13g23)) == coords(*s, {{g12g23, 1}, {g12g13, -1}}));
  // reduce is idempotent on lifts.
  for (int p = 0; p <= 6; ++p)
    for (int q = 0; q <= 3; ++q) {
      auto sp = a3.space(p, q);
      for (GenMask m : sp->free_basis()) {
        const Vector v = sp->reduce(Element::monomial(m));
        CHECK(sp->reduce(sp->lift(v)) == v);
      }
    }
  CHECK_THROWS_AS(a3.space(0, 2)->reduce(prod(L3, {G::x(1)})), std::invalid_argument);
}

TEST_CASE("differential") {
  const Layout L(3);
  CHECK(differential(L, prod(L, {G::g(1, 2)})) == prod(L, {G::y(1), G::x(2)}) - prod(L, {G::x(1), G::y(2)}));
  QuotientAlgebra a(2, RelationSet::e2());
  const Layout& L2 = a.layout();
  CHECK(is_zero(a.space(3, 0)->reduce(differential(L2, prod(L2, {G::g(1, 2), G::x(1)})))));
  // Leibniz term by term: d(g12 g13) = d(g12) g13 - g12 d(g13).
  const Element d12 = prod(L, {G::y(1), G::x(2)}) - prod(L, {G::x(1), G::y(2)});
  const Element d13 = prod(L, {G::y(1), G::x(3)}) - prod(L, {G::x(1), G::y(3)});
  const Element expected = d12 * prod(L, {G::g(1, 3)}) - prod(L, {G::g(1, 2)}) * d13;
  CHECK(differential(L, prod(L, {G::g(1, 2), G::g(1, 3)})) == expected);
}

TEST_CASE("symmetric group action") {
  const Layout L2(2), L3(3);
  const std::vector<int> swap{2, 1}, cycle{2, 3, 1};
  CHECK(sn_act(L2, swap, prod(L2, {G::g(1, 2)})) == prod(L2, {G::g(1, 2)}));
  CHECK(sn_act(L2, swap, prod(L2, {G::x(1), G::y(2)})) == prod(L2, {G::y(1), G::x(2)}, -1));
  const Element moved = sn_act(L3, cycle, prod(L3, {G::g(1, 2), G::x(3)}));
  CHECK(moved == prod(L3, {G::g(2, 3), G::x(1)}));
  CHECK(moved.terms().begin()->second == 1);
}

TEST_CASE("symmetrize") {
  QuotientAlgebra a2(2, RelationSet::e2()), a4(4, RelationSet::e2());
  const auto& L2 = a2.layout();
  const auto& L4 = a4.layout();
  CHECK(symmetrize(L2, prod(L2, {G::x(1), G::x(2)})).is_zero());
  CHECK(symmetrize(L2, prod(L2, {G::g(1, 2)})) == prod(L2, {G::g(1, 2)}));
  CHECK(is_zero(a4.space(0, 2)->reduce(symmetrize(L4, prod(L4, {G::g(1, 2), G::g(3, 4)})))));
  const Element e = prod(L2, {G::x(1), G::y(2)}) + prod(L2, {G::g(1, 2)});
  CHECK(symmetrize(L2, symmetrize(L2, e)) == symmetrize(L2, e));
}

TEST_CASE("relation span is stable under the symmetric group and under d") {
  for (int n = 2; n <= 4; ++n) {
    CAPTURE(n);
    QuotientAlgebra a(n, RelationSet::e2());
    const auto& L = a.layout();
    for (int p = 0; p <= 2 * n; ++p)
      for (int q = 0; q <= L.num_edges(); ++q) {
        if (n == 4 && p + q > 5) continue;
        for (const auto& row : relation_rows(L, p, q, RelationSet::e2())) {
          for (const auto& g : sn_generators(n)) CHECK(is_zero(a.space(p, q)->reduce(sn_act(L, g, row))));
          if (q >= 1 && p + 2 <= 2 * n) CHECK(is_zero(a.space(p + 2, q - 1)->reduce(differential(L, row))));
        }
      }
  }
}

TEST_CASE("Arnold relation as literally written is not S_n-stable") {
  const Layout L(3);
  const std::vector<int> swap{2, 1, 3};
  const int i = 1, j = 2, k = 3;
  const Element literal = prod(L, {G::g(i, k), G::g(j, k)}) + prod(L, {G::g(i, j), G::g(i, k)}) +
                          prod(L, {G::g(i, j), G::g(j, k)});
  const Element totaro = prod(L, {G::g(i, k), G::g(j, k)}) + prod(L, {G::g(i, j), G::g(i, k)}) +
                         prod(L, {G::g(j, k), G::g(i, j)});
  auto as_vec = [&](const Element& e) {
    const auto basis = free_basis(L, 0, 2);
    Vector v(basis.size());
    for (std::size_t c = 0; c < basis.size(); ++c) v[c] = e.coefficient(basis[c]);
    return v;
  };
  CHECK(rank_of({as_vec(literal), as_vec(sn_act(L, swap, literal))}, 3) == 2);
  CHECK(rank_of({as_vec(totaro), as_vec(sn_act(L, swap, totaro))}, 3) == 1);
}

TEST_CASE("total dimensions of E2 and of the Arnold algebra") {
  for (int n = 0; n <= 5; ++n) {
    CAPTURE(n);
    QuotientAlgebra e2(n, RelationSet::e2()), arnold(n, RelationSet::arnold_only());
    const auto& L = e2.layout();
    std::uint64_t total = 0, arnold_total = 0;
    for (int p = 0; p <= 2 * n; ++p)
      for (int q = 0; q <= L.num_edges(); ++q) total += e2.space(p, q)->dim();
    for (int q = 0; q <= L.num_edges(); ++q) arnold_total += arnold.space(0, q)->dim();
    std::uint64_t fact = 1;
    for (int k = 2; k <= n; ++k) fact *= k;
    CHECK(total == fact * binom(n + 2, 2));
    CHECK(arnold_total == fact);
  }
}

TEST_CASE("quotient dimensions agree with the brute-force oracle") {
  for (int n = 0; n <= 3; ++n) {
    CAPTURE(n);
    const auto oracle = small_oracle::brute_force(n);
    QuotientAlgebra a(n, RelationSet::e2());
    for (const auto& [pq, d] : oracle.quotient_dims) CHECK(a.space(pq.first, pq.second)->dim() == d);
  }
}

TEST_CASE("blocked kernel agrees with the serial dense reference") {
  for (int n = 0; n <= 4; ++n)
    for (const auto& rel : {RelationSet::e2(), RelationSet::w_algebra(), RelationSet::arnold_only()}) {
      const Layout L(n);
      for (int p = 0; p <= 2 * n; ++p)
        for (int q = 0; q <= L.num_edges(); ++q) {
          if (!rel.edge_identifies_classes && p > 0) continue;
          if (free_basis(L, p, q).size() > 300) continue;
          CAPTURE(n);
          CAPTURE(p);
          CAPTURE(q);
          const auto ref = reference_space(L, p, q, rel);
          const auto fast = BidegreeSpace::build(L, p, q, rel);
          REQUIRE(fast.relation_rank() == ref.relation_rank);
          REQUIRE(fast.quotient_basis() == ref.standard);
          for (std::size_t c = 0; c < ref.free_basis.size(); ++c) {
            const Vector v = fast.reduce(Element::monomial(ref.free_basis[c]));
            for (std::size_t k = 0; k < v.size(); ++k) CHECK(v[k] == ref.normal_forms(c, k));
          }
        }
    }
}

TEST_CASE("worker count and modular prescreen do not change results") {
  const Layout L(4);
  for (int p = 0; p <= 8; ++p)
    for (int q = 0; q <= 6; ++q) {
      const auto serial = BidegreeSpace::build(L, p, q, RelationSet::e2());
      const auto parallel = BidegreeSpace::build(L, p, q, RelationSet::e2(), SpaceOptions{4, true, false});
      CHECK(serial.quotient_basis() == parallel.quotient_basis());
      CHECK(serial.relation_rank() == parallel.relation_rank());
      CHECK(parallel.modular_relation_rank() == static_cast<std::int64_t>(parallel.relation_rank()));
    }
}

TEST_CASE("d squared vanishes on quotient coordinates") {
  QuotientAlgebra a(4, RelationSet::e2());
  for (int p = 0; p + 4 <= 8; ++p)
    for (int q = 2; q <= 6; ++q) {
      auto s0 = a.space(p, q), s1 = a.space(p + 2, q - 1), s2 = a.space(p + 4, q - 2);
      for (std::size_t k = 0; k < s0->dim(); ++k) {
        Vector v(s0->dim());
        v[k] = 1;
        CHECK(is_zero(differential_coords(*s1, *s2, differential_coords(*s0, *s1, v))));
      }
    }
}

TEST_CASE("degenerate n") {
  for (int n = 0; n <= 1; ++n) {
    QuotientAlgebra a(n, RelationSet::e2());
    CHECK(a.layout().num_edges() == 0);
    CHECK(a.space(0, 0)->dim() == 1);
    if (n == 1) {
      CHECK(a.space(1, 0)->dim() == 2);
      CHECK(a.space(2, 0)->dim() == 0);
    }
  }
}
