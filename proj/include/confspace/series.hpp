#ifndef CONFSPACE_SERIES_HPP
#define CONFSPACE_SERIES_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include <gmpxx.h>

namespace confspace {

using Rational = mpq_class;
using Integer = mpz_class;

/// Exponent vector over the fixed variable set {x, y, u, t}.
struct Exponents {
  int x = 0;
  int y = 0;
  int u = 0;
  int t = 0;

  friend bool operator==(const Exponents&, const Exponents&) = default;
};

/// Lexicographic by (u, x, y, t); this is also the serialization order.
struct ExponentLess {
  bool operator()(const Exponents& a, const Exponents& b) const {
    return std::tie(a.u, a.x, a.y, a.t) < std::tie(b.u, b.x, b.y, b.t);
  }
};

/// Sparse polynomial in x, y, u, t with exact rational coefficients.
/// Zero coefficients are never stored.
class MultiPoly {
 public:
  using Terms = std::map<Exponents, Rational, ExponentLess>;

  MultiPoly() = default;
  static MultiPoly constant(const Rational& c);
  static MultiPoly monomial(const Rational& c, Exponents e);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Coefficient of x^e (zero if absent).
  Rational coefficient(const Exponents& e) const;
  void add_term(const Exponents& e, const Rational& c);

  /// Largest t-exponent, or -1 for the zero polynomial.
  int t_degree() const;
  /// Drop all terms of t-degree > order.
  MultiPoly truncated(int order) const;
  /// Collect the coefficient of t^k as a polynomial in x, y, u.
  MultiPoly t_coefficient(int k) const;
  /// Substitute x = y = 1.
  MultiPoly at_xy_one() const;
  /// Substitute u = 1.
  MultiPoly at_u_one() const;

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const Rational& c);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.terms_ == b.terms_;
  }

  std::string to_string() const;

 private:
  Terms terms_;
};

MultiPoly power(const MultiPoly& base, int k);

/// Truncated power series in t. Entry k is the coefficient of t^k, a
/// polynomial in x, y, u only.
using Series = std::vector<MultiPoly>;

/// One denominator factor (1 - m)^multiplicity, m a single term with t-degree >= 1.
struct DenominatorFactor {
  MultiPoly m;
  int multiplicity = 1;
};

struct FactoredRatFun {
  MultiPoly numerator;
  std::vector<DenominatorFactor> denominator;

  /// Throws std::invalid_argument if some factor is not a unit power series.
  void validate() const;
};

/// Coefficients of t^0 .. t^order of f.
Series expand(const FactoredRatFun& f, int order);

/// Multiply two truncated series, keeping terms through `order`.
Series multiply(const Series& a, const Series& b, int order);

/// Z(X,u,t) = prod_i (1 - u^i t)^{(-1)^{i+1} h^i_c}.
Series macdonald_zeta(const std::vector<std::pair<int, std::int64_t>>& compact_betti, int order);

/// One compact-support mixed Hodge number h^{a,b}(H^i_c(X)).
struct HodgeEntry {
  int degree = 0;  // i
  int a = 0;
  int b = 0;
  std::int64_t dim = 0;
};
using HodgeInput = std::vector<HodgeEntry>;

/// Four-variable zeta prod (1 - x^a y^b u^i t)^{(-1)^{i+1} h^{a,b}(H^i_c)}.
Series cheah_zeta(const HodgeInput& h, int order);

/// K(t) = Z(t) / Z(t^2), truncated at `order`.
Series vakil_wood_conf(const Series& z, int order);

/// Substitute x = y = 1 in every coefficient.
Series at_xy_one(const Series& s);

/// The punctured-torus weight function w and its partial inverse.
struct WeightFn {
  static std::int64_t w(std::int64_t i);
  static std::optional<std::int64_t> inverse(std::int64_t v);
};

/// Weight 2i, the genus-zero analogue.
struct GenusZeroWeight {
  static std::int64_t w(std::int64_t i) { return 2 * i; }
  static std::optional<std::int64_t> inverse(std::int64_t v) {
    if (v < 0 || v % 2 != 0) return std::nullopt;
    return v / 2;
  }
};

/// Raised when a coefficient cannot be a signed Betti/Hodge generating term.
class DecodeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct HodgeKey {
  int i = 0;
  int a = 0;
  int b = 0;
  friend auto operator<=>(const HodgeKey&, const HodgeKey&) = default;
};
using HodgeTable = std::map<HodgeKey, std::int64_t>;

namespace detail {
std::vector<std::int64_t> decode_betti_impl(const MultiPoly& coeff, int n,
                                            std::optional<std::int64_t> (*inverse)(std::int64_t));
}  // namespace detail

/// Betti numbers h^0..h^max from the t^n coefficient of a signed weight series.
template <class Weight = WeightFn>
std::vector<std::int64_t> decode_betti(const MultiPoly& coeff, int n) {
  return detail::decode_betti_impl(coeff, n, &Weight::inverse);
}

/// Mixed Hodge numbers from the t^n coefficient of the four-variable series.
HodgeTable decode_hodge(const MultiPoly& coeff, int n);

/// The closed forms for the punctured torus.
FactoredRatFun punctured_torus_conf_closed_form();
FactoredRatFun punctured_torus_conf_hodge_closed_form();
FactoredRatFun genus_zero_conf_closed_form();

std::vector<std::pair<int, std::int64_t>> punctured_torus_compact_betti();
HodgeInput punctured_torus_compact_hodge();

}  // namespace confspace

#endif  // CONFSPACE_SERIES_HPP
