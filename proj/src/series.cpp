#include "confspace/series.hpp"

#include <sstream>

namespace confspace {

MultiPoly MultiPoly::constant(const Rational& c) {
  return monomial(c, Exponents{});
}

MultiPoly MultiPoly::monomial(const Rational& c, Exponents e) {
  if (e.x < 0 || e.y < 0 || e.u < 0 || e.t < 0)
    throw std::invalid_argument("negative exponent");
  MultiPoly p;
  p.add_term(e, c);
  return p;
}

Rational MultiPoly::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void MultiPoly::add_term(const Exponents& e, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

int MultiPoly::t_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e.t);
  return d;
}

MultiPoly MultiPoly::truncated(int order) const {
  MultiPoly r;
  for (const auto& [e, c] : terms_)
    if (e.t <= order) r.terms_.emplace(e, c);
  return r;
}

MultiPoly MultiPoly::t_coefficient(int k) const {
  MultiPoly r;
  for (const auto& [e, c] : terms_) {
    if (e.t != k) continue;
    Exponents f = e;
    f.t = 0;
    r.terms_.emplace(f, c);
  }
  return r;
}

MultiPoly MultiPoly::at_xy_one() const {
  MultiPoly r;
  for (const auto& [e, c] : terms_) r.add_term({0, 0, e.u, e.t}, c);
  return r;
}

MultiPoly MultiPoly::at_u_one() const {
  MultiPoly r;
  for (const auto& [e, c] : terms_) r.add_term({e.x, e.y, 0, e.t}, c);
  return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly r;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_)
      r.add_term({ea.x + eb.x, ea.y + eb.y, ea.u + eb.u, ea.t + eb.t}, ca * cb);
  return r;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rational mag = abs(c);
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    bool bare = e.x == 0 && e.y == 0 && e.u == 0 && e.t == 0;
    if (mag != 1 || bare) os << mag.get_str();
    auto var = [&](const char* name, int k) {
      if (k == 0) return;
      os << name;
      if (k > 1) os << "^" << k;
    };
    var("x", e.x);
    var("y", e.y);
    var("u", e.u);
    var("t", e.t);
  }
  return os.str();
}

MultiPoly power(const MultiPoly& base, int k) {
  if (k < 0) throw std::invalid_argument("negative power");
  MultiPoly r = MultiPoly::constant(1);
  for (int i = 0; i < k; ++i) r = r * base;
  return r;
}

void FactoredRatFun::validate() const {
  for (const auto& f : denominator) {
    if (f.multiplicity <= 0)
      throw std::invalid_argument("denominator multiplicity must be positive");
    if (f.m.size() != 1)
      throw std::invalid_argument("denominator factor must be 1 - (single term)");
    const auto& e = f.m.terms().begin()->first;
    if (e.t < 1)
      throw std::invalid_argument("denominator factor " + f.m.to_string() +
                                  " has constant term != 1 as a series in t");
  }
}

Series expand(const FactoredRatFun& f, int order) {
  if (order < 0) throw std::invalid_argument("negative t-order");
  f.validate();
  Series s(order + 1);
  for (const auto& [e, c] : f.numerator.terms()) {
    if (e.t > order) continue;
    s[e.t].add_term({e.x, e.y, e.u, 0}, c);
  }
  // Multiplying by 1/(1 - m) with m = c x^e t^d is the recurrence
  // s'_k = s_k + m s'_{k-d}, run upward in k.
  for (const auto& factor : f.denominator) {
    const auto& [e, c] = *factor.m.terms().begin();
    MultiPoly m = MultiPoly::monomial(c, {e.x, e.y, e.u, 0});
    for (int rep = 0; rep < factor.multiplicity; ++rep)
      for (int k = e.t; k <= order; ++k)
        if (!s[k - e.t].is_zero()) s[k] += m * s[k - e.t];
  }
  return s;
}

Series multiply(const Series& a, const Series& b, int order) {
  Series r(order + 1);
  for (int i = 0; i <= order && i < static_cast<int>(a.size()); ++i)
    for (int j = 0; i + j <= order && j < static_cast<int>(b.size()); ++j)
      if (!a[i].is_zero() && !b[j].is_zero()) r[i + j] += a[i] * b[j];
  return r;
}

namespace {

// Adds (1 - m)^exponent to f; positive exponents go to the numerator.
void add_zeta_factor(FactoredRatFun& f, const MultiPoly& m, std::int64_t exponent) {
  if (exponent > 0) {
    f.numerator = f.numerator * power(MultiPoly::constant(1) - m, static_cast<int>(exponent));
  } else if (exponent < 0) {
    f.denominator.push_back({m, static_cast<int>(-exponent)});
  }
}

}  // namespace

Series macdonald_zeta(const std::vector<std::pair<int, std::int64_t>>& compact_betti, int order) {
  FactoredRatFun f{MultiPoly::constant(1), {}};
  for (const auto& [i, h] : compact_betti) {
    if (i < 0 || h < 0) throw std::invalid_argument("invalid compact Betti entry");
    std::int64_t sign = (i % 2 == 0) ? -1 : 1;
    add_zeta_factor(f, MultiPoly::monomial(1, {0, 0, i, 1}), sign * h);
  }
  return expand(f, order);
}

Series cheah_zeta(const HodgeInput& h, int order) {
  FactoredRatFun f{MultiPoly::constant(1), {}};
  for (const auto& entry : h) {
    if (entry.degree < 0 || entry.a < 0 || entry.b < 0 || entry.dim < 0)
      throw std::invalid_argument("invalid Hodge entry");
    std::int64_t sign = (entry.degree % 2 == 0) ? -1 : 1;
    add_zeta_factor(f, MultiPoly::monomial(1, {entry.a, entry.b, entry.degree, 1}),
                    sign * entry.dim);
  }
  return expand(f, order);
}

Series vakil_wood_conf(const Series& z, int order) {
  if (order < 0) throw std::invalid_argument("negative t-order");
  if (static_cast<int>(z.size()) <= order)
    throw std::invalid_argument("zeta series shorter than requested order");
  if (!(z[0] == MultiPoly::constant(1)))
    throw std::invalid_argument("zeta series must have constant term 1");
  // Z(t^2)
  Series w(order + 1);
  for (int k = 0; 2 * k <= order; ++k) w[2 * k] = z[k];
  Series k_series(order + 1);
  for (int k = 0; k <= order; ++k) {
    MultiPoly c = z[k];
    for (int j = 2; j <= k; j += 2)
      if (!w[j].is_zero() && !k_series[k - j].is_zero()) c -= w[j] * k_series[k - j];
    k_series[k] = std::move(c);
  }
  return k_series;
}

Series at_xy_one(const Series& s) {
  Series r;
  r.reserve(s.size());
  for (const auto& c : s) r.push_back(c.at_xy_one());
  return r;
}

std::int64_t WeightFn::w(std::int64_t i) {
  if (i < 0) throw std::invalid_argument("w: negative degree");
  return i % 2 == 0 ? 3 * i / 2 : (3 * i - 1) / 2;
}

std::optional<std::int64_t> WeightFn::inverse(std::int64_t v) {
  if (v < 0) return std::nullopt;
  switch (v % 3) {
    case 0: return 2 * v / 3;
    case 1: return (2 * v + 1) / 3;
    default: return std::nullopt;
  }
}

namespace {

std::int64_t to_count(const Rational& c, const char* what) {
  if (c.get_den() != 1) throw DecodeError(std::string(what) + ": non-integer coefficient");
  if (!c.get_num().fits_slong_p()) throw DecodeError(std::string(what) + ": coefficient overflow");
  return c.get_num().get_si();
}

std::int64_t decode_i(int n, int u_exp, std::optional<std::int64_t> (*inverse)(std::int64_t)) {
  std::int64_t v = 2 * static_cast<std::int64_t>(n) - u_exp;
  auto i = inverse(v);
  if (!i)
    throw DecodeError("u-exponent " + std::to_string(u_exp) + " at n=" + std::to_string(n) +
                      " is not of the form 2n - w(i)");
  return *i;
}

}  // namespace

namespace detail {

std::vector<std::int64_t> decode_betti_impl(const MultiPoly& coeff, int n,
                                            std::optional<std::int64_t> (*inverse)(std::int64_t)) {
  std::map<std::int64_t, std::int64_t> by_degree;
  for (const auto& [e, c] : coeff.terms()) {
    if (e.x != 0 || e.y != 0 || e.t != 0)
      throw std::invalid_argument("decode_betti expects a polynomial in u only");
    std::int64_t i = decode_i(n, e.u, inverse);
    std::int64_t h = to_count(c, "decode_betti");
    if (i % 2 != 0) h = -h;
    if (h < 0)
      throw DecodeError("negative Betti number decoded at n=" + std::to_string(n) +
                        ", i=" + std::to_string(i));
    by_degree[i] += h;
  }
  if (by_degree.empty()) return {};
  std::vector<std::int64_t> betti(by_degree.rbegin()->first + 1, 0);
  for (const auto& [i, h] : by_degree) betti[i] = h;
  return betti;
}

}  // namespace detail

HodgeTable decode_hodge(const MultiPoly& coeff, int n) {
  HodgeTable table;
  for (const auto& [e, c] : coeff.terms()) {
    if (e.t != 0) throw std::invalid_argument("decode_hodge expects a polynomial in x, y, u");
    std::int64_t i = decode_i(n, e.u, &WeightFn::inverse);
    int a = n - e.x;
    int b = n - e.y;
    if (a < 0 || b < 0)
      throw DecodeError("x/y exponent exceeds n in decode_hodge at n=" + std::to_string(n));
    if (a + b != WeightFn::w(i))
      throw DecodeError("Hodge type (" + std::to_string(a) + "," + std::to_string(b) +
                        ") of H^" + std::to_string(i) + " is not of weight w(i)");
    std::int64_t h = to_count(c, "decode_hodge");
    if (i % 2 != 0) h = -h;
    if (h < 0) throw DecodeError("negative Hodge number decoded at n=" + std::to_string(n));
    table[{static_cast<int>(i), a, b}] += h;
  }
  return table;
}

namespace {

MultiPoly one_minus(const Rational& c, Exponents e) {
  return MultiPoly::constant(1) - MultiPoly::monomial(c, e);
}

}  // namespace

FactoredRatFun punctured_torus_conf_closed_form() {
  // (1-ut)^2 (1-u^2t^2) / ((1-u^2t)(1-ut^2)^2)
  FactoredRatFun f;
  f.numerator = power(one_minus(1, {0, 0, 1, 1}), 2) * one_minus(1, {0, 0, 2, 2});
  f.denominator = {{MultiPoly::monomial(1, {0, 0, 2, 1}), 1},
                   {MultiPoly::monomial(1, {0, 0, 1, 2}), 2}};
  return f;
}

FactoredRatFun punctured_torus_conf_hodge_closed_form() {
  // (1-xut)(1-yut)(1-xyu^2t^2) / ((1-xyu^2t)(1-xut^2)(1-yut^2))
  FactoredRatFun f;
  f.numerator = one_minus(1, {1, 0, 1, 1}) * one_minus(1, {0, 1, 1, 1}) *
                one_minus(1, {1, 1, 2, 2});
  f.denominator = {{MultiPoly::monomial(1, {1, 1, 2, 1}), 1},
                   {MultiPoly::monomial(1, {1, 0, 1, 2}), 1},
                   {MultiPoly::monomial(1, {0, 1, 1, 2}), 1}};
  return f;
}

FactoredRatFun genus_zero_conf_closed_form() {
  // (1-u^2t^2) / (1-u^2t)
  FactoredRatFun f;
  f.numerator = one_minus(1, {0, 0, 2, 2});
  f.denominator = {{MultiPoly::monomial(1, {0, 0, 2, 1}), 1}};
  return f;
}

std::vector<std::pair<int, std::int64_t>> punctured_torus_compact_betti() {
  return {{1, 2}, {2, 1}};
}

HodgeInput punctured_torus_compact_hodge() {
  // H_c(E^x, x, y, u) = -(x + y) u + x y u^2
  return {{1, 1, 0, 1}, {1, 0, 1, 1}, {2, 1, 1, 1}};
}

}  // namespace confspace
