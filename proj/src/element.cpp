#include "confspace/element.hpp"

#include <algorithm>
#include <numeric>

namespace confspace {

Element Element::monomial(GenMask m, const Rational& c) {
  Element e;
  e.add_term(m, c);
  return e;
}

Element Element::product(const Layout& layout, std::span<const Generator> gens,
                         const Rational& c) {
  auto nf = normalize(layout, gens);
  if (!nf) return {};
  return monomial(nf->mask, nf->sign * c);
}

Rational Element::coefficient(GenMask m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Element::add_term(GenMask m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Element& Element::operator+=(const Element& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Element& Element::operator-=(const Element& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Element& Element::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

Element operator*(const Element& a, const Element& b) {
  Element r;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_)
      if (auto p = multiply(ma, mb)) r.add_term(p->mask, p->sign * ca * cb);
  return r;
}

std::string Element::format(const Layout& layout) const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [m, c] : terms_) {
    bool neg = c < 0;
    Rational mag = abs(c);
    if (s.empty()) s += neg ? "-" : "";
    else s += neg ? " - " : " + ";
    if (mag != 1) s += mag.get_str() + "*";
    s += layout.format(m);
  }
  return s;
}

Element differential(const Layout& layout, GenMask m) {
  Element out;
  GenMask gpart = m & layout.g_mask();
  int position = 0;  // g-generators come first, so this is the Leibniz position
  for (GenMask r = gpart; r; r &= r - 1, ++position) {
    int b = std::countr_zero(r);
    auto [i, j] = layout.edge(b);
    GenMask rest = m & ~(GenMask{1} << b);
    int leibniz = (position & 1) ? -1 : 1;
    // d(g_ij) = y_i x_j - x_i y_j = -(x_j y_i) - (x_i y_j) in normal order.
    const GenMask terms[2] = {
        (GenMask{1} << layout.x_bit(j)) | (GenMask{1} << layout.y_bit(i)),
        (GenMask{1} << layout.x_bit(i)) | (GenMask{1} << layout.y_bit(j))};
    for (GenMask t : terms)
      if (auto p = multiply(t, rest)) out.add_term(p->mask, Rational(-leibniz * p->sign));
  }
  return out;
}

Element differential(const Layout& layout, const Element& e) {
  Element out;
  for (const auto& [m, c] : e.terms()) {
    Element dm = differential(layout, m);
    dm *= c;
    out += dm;
  }
  return out;
}

Element sn_act(const Layout& layout, std::span<const int> perm, const Element& e) {
  if (static_cast<int>(perm.size()) != layout.n())
    throw std::invalid_argument("permutation size does not match n");
  Element out;
  for (const auto& [m, c] : e.terms()) {
    auto [img, sign] = layout.permute(m, perm);
    out.add_term(img, sign * c);
  }
  return out;
}

std::vector<std::vector<int>> all_permutations(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 1);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

Element symmetrize(const Layout& layout, const Element& e) {
  auto perms = all_permutations(layout.n());
  Element out;
  for (const auto& p : perms) out += sn_act(layout, p, e);
  out *= Rational(1, static_cast<long>(perms.size()));
  return out;
}

}  // namespace confspace
