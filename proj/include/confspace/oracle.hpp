#ifndef CONFSPACE_ORACLE_HPP
#define CONFSPACE_ORACLE_HPP

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "confspace/gcalg.hpp"

namespace confspace {

/// h^r of the unordered configuration space of the affine line, from the
/// S_n-invariants of the algebra on g_ij with the Arnold relation only.
/// Entries cover degrees 0 .. n(n-1)/2.
std::vector<std::int64_t> arnold_conf_betti(int n, int workers = 1);

/// Monomial of V(n): x_i, y_i in degree 1 and x_ij, y_ij in degree 2.
/// Singles are kept as index bitmasks (bit i-1), pairs as sorted (i, j), i < j.
/// The canonical product order is x singles, y singles, x pairs, y pairs.
struct VMonomial {
  std::uint32_t xs = 0;
  std::uint32_t ys = 0;
  std::vector<std::pair<int, int>> xpairs;
  std::vector<std::pair<int, int>> ypairs;

  /// No index occurs twice.
  bool disjoint() const;
  int degree() const;
  std::string format() const;

  friend auto operator<=>(const VMonomial&, const VMonomial&) = default;
  friend bool operator==(const VMonomial&, const VMonomial&) = default;
};

using VElement = std::map<VMonomial, Rational>;

/// Index-disjoint monomials of V(n), a basis.
std::vector<VMonomial> v_basis(int n);

/// Algebra map V(n) -> free algebra: x_ij -> g_ij x_i, y_ij -> g_ij y_i.
Element phi(const Layout& layout, const VMonomial& v);

enum class PsiType { A, B, C };

struct PsiClass {
  PsiType type = PsiType::A;
  int sign = 0;      // m = sign * (form with bare g's, singles, g-x pairs, g-y pairs)
  VMonomial image;   // meaningful for type C only
};

/// Classify a free monomial in normal order by the rules A, then B, then C.
PsiClass classify(const Layout& layout, GenMask m);

VElement psi(const Layout& layout, GenMask m);
VElement psi(const Layout& layout, const Element& e);

std::string format(const VElement& v);

/// psi(phi(v)) = v for every basis monomial of V(n); returns the first
/// counterexample on failure.
std::optional<std::string> check_left_inverse(int n);

/// psi kills g_ij g_jk M, g_ij (x_i - x_j) M, g_ij (y_i - y_j) M and x_i y_i M.
/// Exhaustive over M when `samples` is 0, otherwise `samples` random M per
/// relation. Returns the first counterexample.
std::optional<std::string> check_psi_annihilates_relations(int n, std::size_t samples = 0,
                                                           std::uint64_t seed = 1);

/// phi images of the V(n) basis are independent in W(n), bidegree by bidegree.
std::optional<std::string> check_phi_injective_on_w(int n);

}  // namespace confspace

#endif  // CONFSPACE_ORACLE_HPP
