#include "confspace/lemmas.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>

#include "confspace/invariants.hpp"
#include "confspace/oracle.hpp"
#include "confspace/reference.hpp"

namespace confspace {

namespace {

using G = Generator;
using Failure = std::optional<std::string>;

struct Context {
  int n;
  LemmaOptions opts;
  QuotientAlgebra e2;
  std::mt19937_64 rng;

  Context(int n_, const LemmaOptions& o)
      : n(n_), opts(o), e2(n_, RelationSet::e2(), SpaceOptions{o.workers, false, false}), rng(o.seed + n_) {}

  const Layout& layout() const { return e2.layout(); }
  std::shared_ptr<const BidegreeSpace> space(int p, int q) const { return e2.space(p, q); }
  std::shared_ptr<const BidegreeSpace> space_of(GenMask m) const {
    return e2.space(layout().p_of(m), layout().q_of(m));
  }
  GenMask all_bits() const { return (GenMask{1} << layout().num_bits()) - 1; }
};

Element product(const Layout& layout, const std::vector<Generator>& gens) {
  return Element::product(layout, gens);
}

std::string vec_str(const Vector& v) {
  std::ostringstream out;
  out << "(";
  for (std::size_t k = 0; k < v.size(); ++k) out << (k ? "," : "") << v[k].get_str();
  out << ")";
  return out.str();
}

// Homogeneous element: its bidegree piece, or nullptr for zero.
std::shared_ptr<const BidegreeSpace> space_for(const Context& ctx, const Element& e) {
  if (e.is_zero()) return nullptr;
  return ctx.space_of(e.terms().begin()->first);
}

bool reduces_to_zero(const Context& ctx, const Element& e) {
  auto s = space_for(ctx, e);
  return !s || is_zero(s->reduce(e));
}

std::vector<int> random_permutation(std::mt19937_64& rng, int n) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

// Tuples of distinct indices with a kind: bare path (size >= 2), or a path
// capped by x or y at its first index (size >= 1).
enum class TupleKind { Bare, X, Y };
struct Tuple {
  TupleKind kind;
  std::vector<int> idx;
};
using Family = std::vector<Tuple>;

std::vector<Generator> family_generators(const Family& fam) {
  std::vector<Generator> gens;
  for (const auto& t : fam) {
    for (std::size_t k = 0; k + 1 < t.idx.size(); ++k) gens.push_back(G::g(t.idx[k], t.idx[k + 1]));
    if (t.kind == TupleKind::X) gens.push_back(G::x(t.idx.front()));
    if (t.kind == TupleKind::Y) gens.push_back(G::y(t.idx.front()));
  }
  return gens;
}

// Every family of disjoint tuples drawn from `pool` (not all indices need be
// used). A tuple is generated once per ordering, once per kind.
void for_each_family(const std::vector<int>& pool, const std::vector<TupleKind>& kinds,
                     const std::function<void(const Family&)>& f) {
  Family fam;
  std::vector<char> used(pool.size(), 0);
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    std::size_t i = start;
    while (i < pool.size() && used[i]) ++i;
    if (i == pool.size()) {
      f(fam);
      return;
    }
    used[i] = 1;
    rec(i + 1);  // pool[i] unused
    // Tuples whose smallest pool position is i: choose the other members.
    std::vector<std::size_t> rest;
    for (std::size_t k = i + 1; k < pool.size(); ++k)
      if (!used[k]) rest.push_back(k);
    for (std::uint32_t sub = 0; sub < (1u << rest.size()); ++sub) {
      std::vector<int> members{pool[i]};
      for (std::size_t k = 0; k < rest.size(); ++k)
        if (sub >> k & 1) members.push_back(pool[rest[k]]);
      for (std::size_t k = 0; k < rest.size(); ++k)
        if (sub >> k & 1) used[rest[k]] = 1;
      std::sort(members.begin(), members.end());
      do {
        for (auto kind : kinds) {
          if (kind == TupleKind::Bare && members.size() < 2) continue;
          fam.push_back({kind, members});
          rec(i + 1);
          fam.pop_back();
        }
      } while (std::next_permutation(members.begin(), members.end()));
      for (std::size_t k = 0; k < rest.size(); ++k)
        if (sub >> k & 1) used[rest[k]] = 0;
    }
    used[i] = 0;
  };
  rec(0);
}

std::vector<int> all_indices(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  return v;
}

// Canonical invariant spanning shape g^r x_j^s1 y_k^s2 x_J1..x_Jb y_K1..y_Kc.
struct Shape {
  int r, s1, s2, b, c;
  std::string str() const {
    std::ostringstream out;
    out << "(r,s1,s2,b,c)=(" << r << "," << s1 << "," << s2 << "," << b << "," << c << ")";
    return out.str();
  }
};

std::vector<Shape> shapes(int n) {
  std::vector<Shape> out;
  for (int r = 0; r <= 1; ++r)
    for (int s1 = 0; s1 <= 1; ++s1)
      for (int s2 = 0; s2 <= 1; ++s2)
        for (int b = 0; 2 * (r + b) + s1 + s2 <= n; ++b)
          for (int c = 0; 2 * (r + b + c) + s1 + s2 <= n; ++c) out.push_back({r, s1, s2, b, c});
  return out;
}

struct CanonicalParts {
  std::vector<Generator> g_part;  // g_{i1 i2} or empty
  std::vector<Generator> x_part;  // x_j or empty
  std::vector<Generator> y_part;  // y_k or empty
  std::vector<Generator> rest;    // x_J... y_K...
  int i1 = 0, i2 = 0, j = 0, k = 0;
};

CanonicalParts canonical(const Shape& s) {
  CanonicalParts parts;
  int next = 1;
  if (s.r) {
    parts.i1 = next++;
    parts.i2 = next++;
    parts.g_part.push_back(G::g(parts.i1, parts.i2));
  }
  if (s.s1) {
    parts.j = next++;
    parts.x_part.push_back(G::x(parts.j));
  }
  if (s.s2) {
    parts.k = next++;
    parts.y_part.push_back(G::y(parts.k));
  }
  for (int t = 0; t < s.b; ++t, next += 2) {
    parts.rest.push_back(G::g(next, next + 1));
    parts.rest.push_back(G::x(next));
  }
  for (int t = 0; t < s.c; ++t, next += 2) {
    parts.rest.push_back(G::g(next, next + 1));
    parts.rest.push_back(G::y(next));
  }
  return parts;
}

std::vector<Generator> concat(std::initializer_list<const std::vector<Generator>*> parts) {
  std::vector<Generator> out;
  for (const auto* p : parts) out.insert(out.end(), p->begin(), p->end());
  return out;
}

// --- properties -----------------------------------------------------------

Failure d_squared_zero(Context& ctx) {
  const auto& L = ctx.layout();
  for (int q = 0; q <= L.num_edges(); ++q)
    for (int p = 0; p <= 2 * ctx.n; ++p)
      for (GenMask m : free_basis(L, p, q)) {
        const Element dd = differential(L, differential(L, m));
        if (!dd.is_zero()) return "d(d(" + L.format(m) + ")) = " + dd.format(L);
      }
  return std::nullopt;
}

Failure sn_equivariance(Context& ctx) {
  const auto& L = ctx.layout();
  if (ctx.n < 2) return std::nullopt;
  std::uniform_int_distribution<int> coef(-3, 3);
  for (std::size_t s = 0; s < ctx.opts.samples; ++s) {
    const auto perm = random_permutation(ctx.rng, ctx.n);
    Element e;
    for (int t = 0; t < 4; ++t) e.add_term(ctx.rng() & ctx.all_bits(), coef(ctx.rng));
    const Element lhs = sn_act(L, perm, differential(L, e));
    const Element rhs = differential(L, sn_act(L, perm, e));
    if (!(lhs == rhs)) return "sigma d e != d sigma e for e = " + e.format(L);
  }
  // Same check on quotient coordinates.
  for (std::size_t s = 0; s < ctx.opts.samples / 4 + 1; ++s) {
    const int q = static_cast<int>(ctx.rng() % (L.num_edges() + 1));
    const int p = static_cast<int>(ctx.rng() % (2 * ctx.n + 1));
    if (q < 1 || p + 2 > 2 * ctx.n) continue;
    auto src = ctx.space(p, q);
    auto dst = ctx.space(p + 2, q - 1);
    if (src->dim() == 0) continue;
    Vector v(src->dim());
    for (auto& x : v) x = coef(ctx.rng);
    const auto perm = random_permutation(ctx.rng, ctx.n);
    const Vector lhs = act_coords(*dst, perm, differential_coords(*src, *dst, v));
    const Vector rhs = differential_coords(*src, *dst, act_coords(*src, perm, v));
    if (lhs != rhs) {
      std::ostringstream msg;
      msg << "quotient coordinates at (" << p << "," << q << "): " << vec_str(v);
      return msg.str();
    }
  }
  return std::nullopt;
}

// Every relation multiple r*m lies in the relation span, and so do d(r*m) and
// sigma(r*m): the quotient, its differential and its S_n action are well defined.
Failure relation_ideal_stable(Context& ctx) {
  const auto& L = ctx.layout();
  const auto rels = defining_relations(L, RelationSet::e2());
  const auto gens = sn_generators(ctx.n);
  auto check = [&](const Element& r, GenMask m) -> Failure {
    const Element row = r * Element::monomial(m);
    if (row.is_zero()) return std::nullopt;
    if (!reduces_to_zero(ctx, row)) return "relation multiple survives: " + row.format(L);
    const Element drow = differential(L, row);
    if (!reduces_to_zero(ctx, drow)) return "d of relation multiple survives: " + row.format(L);
    for (const auto& g : gens)
      if (!reduces_to_zero(ctx, sn_act(L, g, row)))
        return "permuted relation multiple survives: " + row.format(L);
    return std::nullopt;
  };
  if (ctx.n <= 3) {
    for (const auto& r : rels)
      for (GenMask m = 0; m <= ctx.all_bits(); ++m)
        if (auto bad = check(r, m)) return bad;
    return std::nullopt;
  }
  for (const auto& r : rels)
    for (std::size_t s = 0; s < ctx.opts.samples / 10 + 1; ++s) {
      // Sparse multipliers land in small bidegrees, where relations bite.
      GenMask m = ctx.rng() & ctx.rng() & ctx.all_bits();
      if (auto bad = check(r, m)) return bad;
    }
  return std::nullopt;
}

Failure cycle_vanishing(Context& ctx) {
  const auto& L = ctx.layout();
  for (int r = 2; r <= ctx.n; ++r) {
    std::vector<Generator> gens;
    for (int k = 1; k < r; ++k) gens.push_back(G::g(k, k + 1));
    gens.push_back(G::g(r, 1));
    const Element cyc = product(L, gens);
    if (!reduces_to_zero(ctx, cyc)) return "cycle of length " + std::to_string(r) + " survives";
    for (int t = 0; t < 3; ++t) {
      const auto perm = random_permutation(ctx.rng, ctx.n);
      const Element moved = sn_act(L, perm, cyc);
      if (!reduces_to_zero(ctx, moved)) return "relabelled cycle survives: " + moved.format(L);
    }
  }
  return std::nullopt;
}

bool is_forest(const Layout& L, GenMask m) {
  std::vector<int> parent(L.n() + 1);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int v) { return parent[v] == v ? v : parent[v] = find(parent[v]); };
  for (GenMask r = m & L.g_mask(); r; r &= r - 1) {
    auto [i, j] = L.edge(std::countr_zero(r));
    const int a = find(i), b = find(j);
    if (a == b) return false;
    parent[a] = b;
  }
  return true;
}

Failure tree_to_path(Context& ctx) {
  const auto& L = ctx.layout();
  if (ctx.n >= 4) {
    // g12 g23 g24 = g_{1,2,3,4} - g_{1,2,4,3}
    Element lhs = product(L, {G::g(1, 2), G::g(2, 3), G::g(2, 4)});
    Element rhs = path_monomial(L, {1, 2, 3, 4});
    rhs -= path_monomial(L, {1, 2, 4, 3});
    lhs -= rhs;
    if (!reduces_to_zero(ctx, lhs)) return "g12 g23 g24 - g_{1234} + g_{1243} = " + lhs.format(L);
  }
  // Span of forest monomials equals span of products of disjoint paths.
  for (int q = 1; q < ctx.n; ++q) {
    auto space = ctx.space(0, q);
    std::vector<Vector> forests, paths;
    for (GenMask m : free_basis(L, 0, q))
      if (is_forest(L, m)) forests.push_back(space->reduce(Element::monomial(m)));
    for_each_family(all_indices(ctx.n), {TupleKind::Bare}, [&](const Family& fam) {
      int edges = 0;
      for (const auto& t : fam) edges += static_cast<int>(t.idx.size()) - 1;
      if (edges != q) return;
      paths.push_back(space->reduce(product(L, family_generators(fam))));
    });
    const std::size_t rf = rank_of(forests, space->dim());
    const std::size_t rp = rank_of(paths, space->dim());
    if (rf != rp || !same_span(forests, paths, space->dim())) {
      std::ostringstream msg;
      msg << "degree " << q << ": forest rank " << rf << ", path rank " << rp;
      return msg.str();
    }
  }
  return std::nullopt;
}

Failure symmetrizer_annihilation(Context& ctx) {
  const auto& L = ctx.layout();
  Failure failure;
  for_each_family(all_indices(ctx.n), {TupleKind::Bare, TupleKind::X, TupleKind::Y}, [&](const Family& fam) {
    if (failure) return;
    int single_x = 0, single_y = 0, bare_pairs = 0;
    for (const auto& t : fam) {
      if (t.idx.size() == 1) (t.kind == TupleKind::X ? single_x : single_y)++;
      if (t.kind == TupleKind::Bare && t.idx.size() == 2) ++bare_pairs;
    }
    if (single_x < 2 && single_y < 2 && bare_pairs < 2) return;
    const Element alpha = product(L, family_generators(fam));
    auto s = space_for(ctx, alpha);
    if (s && !is_zero(symmetrized_coords(*s, alpha))) failure = "e(" + alpha.format(L) + ") != 0";
  });
  return failure;
}

Failure path_annihilation(Context& ctx) {
  const auto& L = ctx.layout();
  Failure failure;
  for_each_family(all_indices(ctx.n), {TupleKind::Bare, TupleKind::X, TupleKind::Y}, [&](const Family& fam) {
    if (failure) return;
    bool long_bare = false;
    for (const auto& t : fam)
      if (t.kind == TupleKind::Bare && t.idx.size() >= 3) long_bare = true;
    if (!long_bare) return;
    const Element alpha = product(L, family_generators(fam));
    auto s = space_for(ctx, alpha);
    if (s && !is_zero(symmetrized_coords(*s, alpha))) failure = "e(" + alpha.format(L) + ") != 0";
  });
  return failure;
}

Failure canonical_spanning(Context& ctx) {
  const auto& L = ctx.layout();
  std::map<std::pair<int, int>, std::vector<Vector>> by_bidegree;
  for (const auto& s : shapes(ctx.n)) {
    const auto parts = canonical(s);
    const Element alpha = product(L, concat({&parts.g_part, &parts.x_part, &parts.y_part, &parts.rest}));
    const int p = s.s1 + s.s2 + s.b + s.c, q = s.r + s.b + s.c;
    auto space = ctx.space(p, q);
    by_bidegree[{p, q}].push_back(symmetrized_coords(*space, alpha));
  }
  for (int q = 0; q <= L.num_edges(); ++q)
    for (int p = 0; p <= 2 * ctx.n; ++p) {
      auto space = ctx.space(p, q);
      if (space->dim() == 0) continue;
      const std::size_t inv = invariant_basis(*space).dim();
      const std::size_t spanned = by_bidegree.count({p, q}) ? rank_of(by_bidegree[{p, q}], space->dim()) : 0;
      if (inv != spanned) {
        std::ostringstream msg;
        msg << "(" << p << "," << q << "): invariants " << inv << ", canonical span " << spanned;
        return msg.str();
      }
    }
  return std::nullopt;
}

Failure symmetrizer_matches_fixed_space(Context& ctx) {
  const auto& L = ctx.layout();
  if (ctx.n > 4) return std::nullopt;
  for (int q = 0; q <= L.num_edges(); ++q)
    for (int p = 0; p <= 2 * ctx.n; ++p) {
      auto space = ctx.space(p, q);
      if (space->dim() == 0) continue;
      const auto fixed = invariant_basis(*space);
      const auto image = symmetrizer_image(*space);
      if (!same_span(fixed.basis, image.basis, space->dim())) {
        std::ostringstream msg;
        msg << "(" << p << "," << q << "): fixed space " << fixed.dim() << ", symmetrizer image " << image.dim();
        return msg.str();
      }
    }
  // Orbit-sum shortcut against the literal average over S_n.
  if (ctx.n <= 3)
    for (GenMask m = 0; m <= ctx.all_bits(); ++m) {
      auto space = ctx.space_of(m);
      const Vector fast = symmetrized_coords(*space, m);
      const Vector slow = space->reduce(symmetrize(L, Element::monomial(m)));
      if (fast != slow) return "orbit sum differs from average for " + L.format(m);
    }
  return std::nullopt;
}

Failure left_inverse(Context& ctx) { return check_left_inverse(ctx.n); }

Failure psi_kills_relations(Context& ctx) {
  return check_psi_annihilates_relations(ctx.n, ctx.n <= 3 ? 0 : ctx.opts.samples, ctx.opts.seed);
}

Failure phi_injective(Context& ctx) { return check_phi_injective_on_w(ctx.n); }

// x_j y_k x_J1..x_Jb y_K1..y_Kc over all index choices, lexicographic pair order.
void for_each_disjoint_pair_element(int n, int b, int c, const std::function<void(const std::vector<Generator>&)>& f) {
  std::vector<std::pair<int, int>> pairs;
  std::function<void(std::uint32_t, int, int, int)> choose_pairs = [&](std::uint32_t used, int remaining,
                                                                       int j, int k) {
    if (remaining == 0) {
      // Lexicographic order of x pairs and y pairs separately; even degree, so
      // the order does not affect the element.
      std::vector<Generator> gens{G::x(j), G::y(k)};
      for (int t = 0; t < b + c; ++t) {
        gens.push_back(G::g(pairs[t].first, pairs[t].second));
        gens.push_back(t < b ? G::x(pairs[t].first) : G::y(pairs[t].first));
      }
      f(gens);
      return;
    }
    const std::size_t t = pairs.size();
    for (int a = 1; a <= n; ++a)
      for (int d = a + 1; d <= n; ++d) {
        const std::uint32_t bits = (1u << a) | (1u << d);
        if (used & bits) continue;
        // Increasing within the x block and within the y block.
        if (t > 0 && t != static_cast<std::size_t>(b) && std::make_pair(a, d) <= pairs[t - 1]) continue;
        pairs.emplace_back(a, d);
        choose_pairs(used | bits, remaining - 1, j, k);
        pairs.pop_back();
      }
  };
  for (int j = 1; j <= n; ++j)
    for (int k = 1; k <= n; ++k)
      if (j != k) choose_pairs((1u << j) | (1u << k), b + c, j, k);
}

Failure disjoint_pair_independence(Context& ctx) {
  const auto& L = ctx.layout();
  for (int b = 0; 2 + 2 * b <= ctx.n; ++b)
    for (int c = 0; 2 + 2 * (b + c) <= ctx.n; ++c) {
      auto space = ctx.space(2 + b + c, b + c);
      std::vector<Vector> vecs;
      for_each_disjoint_pair_element(ctx.n, b, c, [&](const std::vector<Generator>& gens) {
        vecs.push_back(space->reduce(product(L, gens)));
      });
      const std::size_t r = rank_of(vecs, space->dim());
      if (r != vecs.size()) {
        std::ostringstream msg;
        msg << "b=" << b << " c=" << c << ": rank " << r << " of " << vecs.size();
        return msg.str();
      }
    }
  return std::nullopt;
}

Failure disjoint_pair_nonvanishing(Context& ctx) {
  const auto& L = ctx.layout();
  for (int b = 0; 2 + 2 * b <= ctx.n; ++b)
    for (int c = 0; 2 + 2 * (b + c) <= ctx.n; ++c) {
      Failure failure;
      auto space = ctx.space(2 + b + c, b + c);
      for_each_disjoint_pair_element(ctx.n, b, c, [&](const std::vector<Generator>& gens) {
        if (failure) return;
        const Element alpha = product(L, gens);
        if (is_zero(symmetrized_coords(*space, alpha))) failure = "e(" + alpha.format(L) + ") = 0";
      });
      if (failure) return failure;
    }
  return std::nullopt;
}

Failure kernel_boundary_dichotomy(Context& ctx) {
  const auto& L = ctx.layout();
  for (const auto& s : shapes(ctx.n)) {
    const auto parts = canonical(s);
    const Element alpha = product(L, concat({&parts.g_part, &parts.x_part, &parts.y_part, &parts.rest}));
    const int p = s.s1 + s.s2 + s.b + s.c, q = s.r + s.b + s.c;
    auto src = ctx.space(p, q);
    const Vector v = symmetrized_coords(*src, alpha);
    Vector dv;
    if (q >= 1 && p + 2 <= 2 * ctx.n) dv = differential_coords(*src, *ctx.space(p + 2, q - 1), v);
    const bool d_zero = dv.empty() || is_zero(dv);
    const bool generator_class = s.r == 1 && s.s1 == 0 && s.s2 == 0;
    if (!generator_class && !d_zero) return "d(e(alpha)) != 0 for " + s.str();
    if (generator_class) {
      // d(e(g_{i1 i2} R)) = -2 e(x_{i1} y_{i2} R), and it is nonzero.
      auto dst = ctx.space(p + 2, q - 1);
      std::vector<Generator> xy{G::x(parts.i1), G::y(parts.i2)};
      Element target = product(L, concat({&xy, &parts.rest}));
      target *= Rational(-2);
      const Vector expected = symmetrized_coords(*dst, target);
      if (dv != expected) return "d(e(g R)) != -2 e(x y R) for " + s.str();
      if (d_zero) return "d(e(g R)) = 0 for " + s.str();
    }
    if (s.r == 0 && s.s1 == 1 && s.s2 == 1) {
      // e(x_j y_k R) = d(e(-1/2 g_jk R)).
      std::vector<Generator> g{G::g(parts.j, parts.k)};
      Element pre = product(L, concat({&g, &parts.rest}));
      pre *= Rational(-1, 2);
      auto pre_space = ctx.space(p - 2, q + 1);
      const Vector image = differential_coords(*pre_space, *src, symmetrized_coords(*pre_space, pre));
      if (image != v) return "e(x y R) != d(e(-g R / 2)) for " + s.str();
    }
  }
  return std::nullopt;
}

using Property = Failure (*)(Context&);

const std::vector<std::pair<std::string, Property>>& properties() {
  static const std::vector<std::pair<std::string, Property>> list = {
      {"d_squared_zero", d_squared_zero},
      {"sn_equivariance", sn_equivariance},
      {"relation_ideal_stable", relation_ideal_stable},
      {"cycle_vanishing", cycle_vanishing},
      {"tree_to_path", tree_to_path},
      {"symmetrizer_annihilation", symmetrizer_annihilation},
      {"path_annihilation", path_annihilation},
      {"canonical_spanning", canonical_spanning},
      {"symmetrizer_matches_fixed_space", symmetrizer_matches_fixed_space},
      {"psi_phi_identity", left_inverse},
      {"psi_kills_relations", psi_kills_relations},
      {"phi_injective_on_w", phi_injective},
      {"disjoint_pair_independence", disjoint_pair_independence},
      {"disjoint_pair_nonvanishing", disjoint_pair_nonvanishing},
      {"kernel_boundary_dichotomy", kernel_boundary_dichotomy},
  };
  return list;
}

}  // namespace

Element path_monomial(const Layout& layout, const std::vector<int>& tuple) {
  std::vector<Generator> gens;
  for (std::size_t k = 0; k + 1 < tuple.size(); ++k) gens.push_back(G::g(tuple[k], tuple[k + 1]));
  return Element::product(layout, gens);
}

const std::vector<std::string>& lemma_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : properties()) out.push_back(name);
    return out;
  }();
  return names;
}

std::vector<LemmaResult> run_lemmas(int n, const LemmaOptions& opts) {
  Context ctx(n, opts);
  std::vector<LemmaResult> results;
  for (const auto& [name, fn] : properties()) {
    const auto start = std::chrono::steady_clock::now();
    LemmaResult r;
    r.name = name;
    r.n = n;
    try {
      if (auto bad = fn(ctx)) {
        r.pass = false;
        r.counterexample = *bad;
      }
    } catch (const std::exception& e) {
      r.pass = false;
      r.counterexample = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    results.push_back(std::move(r));
  }
  return results;
}

std::vector<LemmaResult> run_lemma_suite(int n_min, int n_max, const LemmaOptions& opts) {
  std::vector<LemmaResult> all;
  for (int n = n_min; n <= n_max; ++n) {
    auto part = run_lemmas(n, opts);
    all.insert(all.end(), part.begin(), part.end());
  }
  return all;
}

}  // namespace confspace
