#include "confspace/oracle.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <sstream>

#include "confspace/invariants.hpp"

namespace confspace {

std::vector<std::int64_t> arnold_conf_betti(int n, int workers) {
  SpaceOptions opts;
  opts.workers = workers;
  QuotientAlgebra algebra(n, RelationSet::arnold_only(), opts);
  const int top = algebra.layout().num_edges();
  std::vector<std::int64_t> betti(top + 1, 0);
  for (int q = 0; q <= top; ++q) {
    auto space = algebra.space(0, q);
    if (space->dim() == 0) continue;
    betti[q] = static_cast<std::int64_t>(symmetrizer_image(*space).dim());
  }
  return betti;
}

bool VMonomial::disjoint() const {
  std::uint32_t used = xs;
  if (used & ys) return false;
  used |= ys;
  for (const auto* list : {&xpairs, &ypairs})
    for (const auto& [i, j] : *list) {
      const std::uint32_t bits = (1u << (i - 1)) | (1u << (j - 1));
      if (i == j || (used & bits)) return false;
      used |= bits;
    }
  return true;
}

int VMonomial::degree() const {
  return std::popcount(xs) + std::popcount(ys) + 2 * static_cast<int>(xpairs.size() + ypairs.size());
}

std::string VMonomial::format() const {
  std::vector<std::string> parts;
  for (std::uint32_t s = xs; s; s &= s - 1) parts.push_back("x" + std::to_string(std::countr_zero(s) + 1));
  for (std::uint32_t s = ys; s; s &= s - 1) parts.push_back("y" + std::to_string(std::countr_zero(s) + 1));
  for (const auto& [i, j] : xpairs) parts.push_back("x" + std::to_string(i) + std::to_string(j));
  for (const auto& [i, j] : ypairs) parts.push_back("y" + std::to_string(i) + std::to_string(j));
  if (parts.empty()) return "1";
  std::string out = parts[0];
  for (std::size_t k = 1; k < parts.size(); ++k) out += "." + parts[k];
  return out;
}

std::string format(const VElement& v) {
  if (v.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : v) {
    if (!first) out << (c < 0 ? " - " : " + ");
    else if (c < 0) out << "-";
    first = false;
    const Rational mag = abs(c);
    if (mag != 1) out << mag.get_str() << " ";
    out << m.format();
  }
  return out.str();
}

namespace {

void v_basis_rec(int n, int i, std::uint32_t used, VMonomial& cur, std::vector<VMonomial>& out) {
  while (i <= n && (used & (1u << (i - 1)))) ++i;
  if (i > n) {
    out.push_back(cur);
    return;
  }
  const std::uint32_t bit = 1u << (i - 1);
  v_basis_rec(n, i + 1, used | bit, cur, out);
  cur.xs |= bit;
  v_basis_rec(n, i + 1, used | bit, cur, out);
  cur.xs &= ~bit;
  cur.ys |= bit;
  v_basis_rec(n, i + 1, used | bit, cur, out);
  cur.ys &= ~bit;
  for (int j = i + 1; j <= n; ++j) {
    const std::uint32_t jbit = 1u << (j - 1);
    if (used & jbit) continue;
    for (auto* list : {&cur.xpairs, &cur.ypairs}) {
      list->emplace_back(i, j);
      v_basis_rec(n, i + 1, used | bit | jbit, cur, out);
      list->pop_back();
    }
  }
}

}  // namespace

std::vector<VMonomial> v_basis(int n) {
  std::vector<VMonomial> out;
  VMonomial cur;
  v_basis_rec(n, 1, 0, cur, out);
  for (auto& v : out) {
    std::sort(v.xpairs.begin(), v.xpairs.end());
    std::sort(v.ypairs.begin(), v.ypairs.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

Element phi(const Layout& layout, const VMonomial& v) {
  std::vector<Generator> gens;
  for (std::uint32_t s = v.xs; s; s &= s - 1) gens.push_back(Generator::x(std::countr_zero(s) + 1));
  for (std::uint32_t s = v.ys; s; s &= s - 1) gens.push_back(Generator::y(std::countr_zero(s) + 1));
  for (const auto& [i, j] : v.xpairs) {
    gens.push_back(Generator::g(i, j));
    gens.push_back(Generator::x(i));
  }
  for (const auto& [i, j] : v.ypairs) {
    gens.push_back(Generator::g(i, j));
    gens.push_back(Generator::y(i));
  }
  return Element::product(layout, gens);
}

PsiClass classify(const Layout& layout, GenMask m) {
  PsiClass result;
  const int n = layout.n();
  if (layout.has_xy_pair(m)) return result;
  int edge_at[Layout::kMaxN + 1];
  std::fill(edge_at, edge_at + n + 1, -1);
  for (GenMask r = m & layout.g_mask(); r; r &= r - 1) {
    const int e = std::countr_zero(r);
    auto [i, j] = layout.edge(e);
    if (edge_at[i] >= 0 || edge_at[j] >= 0) return result;  // g_ij g_jk
    edge_at[i] = edge_at[j] = e;
  }
  auto has = [&](int bit) { return (m >> bit) & 1; };
  // Per edge: which endpoint classes are present.
  std::vector<Generator> bare, x_single, y_single, x_attached, y_attached;
  VMonomial image;
  for (GenMask r = m & layout.g_mask(); r; r &= r - 1) {
    const int e = std::countr_zero(r);
    auto [i, j] = layout.edge(e);
    const int count = has(layout.x_bit(i)) + has(layout.x_bit(j)) + has(layout.y_bit(i)) + has(layout.y_bit(j));
    if (count >= 2) return result;  // g_ij x_i x_j, g_ij y_i y_j, g_ij x_i y_j
    if (count == 0) {
      bare.push_back(Generator::g(i, j));
      continue;
    }
    const bool is_x = has(layout.x_bit(i)) || has(layout.x_bit(j));
    const int l = (has(layout.x_bit(i)) || has(layout.y_bit(i))) ? i : j;
    auto& list = is_x ? x_attached : y_attached;
    list.push_back(Generator::g(i, j));
    list.push_back(is_x ? Generator::x(l) : Generator::y(l));
    (is_x ? image.xpairs : image.ypairs).emplace_back(i, j);
  }
  for (int i = 1; i <= n; ++i) {
    if (edge_at[i] >= 0) continue;
    if (has(layout.x_bit(i))) {
      x_single.push_back(Generator::x(i));
      image.xs |= 1u << (i - 1);
    }
    if (has(layout.y_bit(i))) {
      y_single.push_back(Generator::y(i));
      image.ys |= 1u << (i - 1);
    }
  }
  std::vector<Generator> seq;
  for (const auto* part : {&bare, &x_single, &y_single, &x_attached, &y_attached})
    seq.insert(seq.end(), part->begin(), part->end());
  auto normal = normalize(layout, seq);
  if (!normal || normal->mask != m) throw std::logic_error("classify: reordering lost the monomial");
  result.sign = normal->sign;  // product in (gen) order = sign * m, so m = sign * (gen)
  if (!bare.empty()) {
    result.type = PsiType::B;
    return result;
  }
  result.type = PsiType::C;
  result.image = std::move(image);
  return result;
}

VElement psi(const Layout& layout, GenMask m) {
  VElement out;
  auto c = classify(layout, m);
  if (c.type == PsiType::C) out[c.image] = c.sign;
  return out;
}

VElement psi(const Layout& layout, const Element& e) {
  VElement out;
  for (const auto& [m, c] : e.terms()) {
    auto cls = classify(layout, m);
    if (cls.type != PsiType::C) continue;
    auto [it, inserted] = out.try_emplace(cls.image, 0);
    it->second += c * cls.sign;
    if (it->second == 0) out.erase(it);
  }
  return out;
}

std::optional<std::string> check_left_inverse(int n) {
  const Layout layout(n);
  for (const auto& v : v_basis(n)) {
    const VElement back = psi(layout, phi(layout, v));
    const VElement expected{{v, Rational(1)}};
    if (back != expected) return v.format() + " -> " + format(back);
  }
  return std::nullopt;
}

namespace {

std::vector<Element> w_relation_generators(const Layout& layout) {
  const int n = layout.n();
  std::vector<Element> rels;
  using G = Generator;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (i == j) continue;
      for (int k = 1; k <= n; ++k) {
        if (k == i || k == j) continue;
        std::vector<G> gens{G::g(i, j), G::g(j, k)};
        rels.push_back(Element::product(layout, gens));
      }
      std::vector<G> xi{G::g(i, j), G::x(i)}, xj{G::g(i, j), G::x(j)};
      std::vector<G> yi{G::g(i, j), G::y(i)}, yj{G::g(i, j), G::y(j)};
      Element bx = Element::product(layout, xi);
      bx -= Element::product(layout, xj);
      rels.push_back(bx);
      Element by = Element::product(layout, yi);
      by -= Element::product(layout, yj);
      rels.push_back(by);
    }
  for (int i = 1; i <= n; ++i) {
    std::vector<G> gens{G::x(i), G::y(i)};
    rels.push_back(Element::product(layout, gens));
  }
  return rels;
}

}  // namespace

std::optional<std::string> check_psi_annihilates_relations(int n, std::size_t samples,
                                                           std::uint64_t seed) {
  const Layout layout(n);
  const auto rels = w_relation_generators(layout);
  const GenMask all = layout.num_bits() == 64 ? ~GenMask{0} : (GenMask{1} << layout.num_bits()) - 1;
  auto test = [&](const Element& r, GenMask m) -> std::optional<std::string> {
    const Element prod = r * Element::monomial(m);
    const VElement image = psi(layout, prod);
    if (!image.empty())
      return "psi(" + r.format(layout) + " * " + layout.format(m) + ") = " + format(image);
    return std::nullopt;
  };
  if (samples == 0) {
    for (const auto& r : rels)
      for (GenMask m = 0;; ++m) {
        if (auto bad = test(r, m)) return bad;
        if (m == all) break;
      }
    return std::nullopt;
  }
  std::mt19937_64 rng(seed);
  for (const auto& r : rels)
    for (std::size_t s = 0; s < samples; ++s)
      if (auto bad = test(r, rng() & all)) return bad;
  return std::nullopt;
}

std::optional<std::string> check_phi_injective_on_w(int n) {
  QuotientAlgebra w(n, RelationSet::w_algebra());
  std::map<std::pair<int, int>, std::vector<VMonomial>> by_bidegree;
  for (const auto& v : v_basis(n)) {
    const int pairs = static_cast<int>(v.xpairs.size() + v.ypairs.size());
    const int singles = std::popcount(v.xs) + std::popcount(v.ys);
    by_bidegree[{singles + pairs, pairs}].push_back(v);
  }
  for (const auto& [pq, list] : by_bidegree) {
    auto space = w.space(pq.first, pq.second);
    std::vector<Vector> vecs;
    for (const auto& v : list) vecs.push_back(space->reduce(phi(w.layout(), v)));
    const std::size_t r = rank_of(vecs, space->dim());
    if (r != list.size()) {
      std::ostringstream msg;
      msg << "bidegree (" << pq.first << "," << pq.second << "): rank " << r << " of " << list.size()
          << " phi images in W(" << n << ")";
      return msg.str();
    }
  }
  return std::nullopt;
}

}  // namespace confspace
