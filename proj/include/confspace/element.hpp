#ifndef CONFSPACE_ELEMENT_HPP
#define CONFSPACE_ELEMENT_HPP

#include <map>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "confspace/monomial.hpp"

namespace confspace {

using Rational = mpq_class;

/// Exact linear combination of normal-form monomials in the free
/// graded-commutative algebra on the generators of a Layout.
class Element {
 public:
  using Terms = std::map<GenMask, Rational>;

  Element() = default;
  static Element unit() { return monomial(0); }
  static Element monomial(GenMask m, const Rational& c = 1);
  /// Ordered product of generators, normalized (zero on repeats).
  static Element product(const Layout& layout, std::span<const Generator> gens,
                         const Rational& c = 1);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Rational coefficient(GenMask m) const;

  void add_term(GenMask m, const Rational& c);

  Element& operator+=(const Element& o);
  Element& operator-=(const Element& o);
  Element& operator*=(const Rational& c);
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(const Rational& c, Element a) { return a *= c; }
  /// Graded-commutative product.
  friend Element operator*(const Element& a, const Element& b);
  friend bool operator==(const Element&, const Element&) = default;

  std::string format(const Layout& layout) const;

 private:
  Terms terms_;
};

/// d(g_ij) = y_i x_j - x_i y_j, d(x_i) = d(y_i) = 0, extended as a derivation
/// with d(ab) = d(a) b + (-1)^{deg a} a d(b). Bidegree (p,q) -> (p+2, q-1).
Element differential(const Layout& layout, GenMask m);
Element differential(const Layout& layout, const Element& e);

/// sigma acting by relabelling indices; perm[k-1] = sigma(k).
Element sn_act(const Layout& layout, std::span<const int> perm, const Element& e);

/// (1/n!) sum over all of S_n.
Element symmetrize(const Layout& layout, const Element& e);

/// All permutations of {1..n} in lexicographic order.
std::vector<std::vector<int>> all_permutations(int n);

}  // namespace confspace

#endif  // CONFSPACE_ELEMENT_HPP
