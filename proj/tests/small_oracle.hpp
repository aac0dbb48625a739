// Brute-force reference computations used only by the tests. Nothing here
// calls into the library's algebra or elimination code.
#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <tuple>
#include <vector>

#include <gmpxx.h>

namespace small_oracle {

using Q = mpq_class;

// --- power series by long division ------------------------------------------

using Exp = std::array<int, 3>;  // x, y, u
using Poly = std::map<Exp, Q>;   // coefficient of one power of t
using TPoly = std::map<int, Poly>;

struct Term {
  Q c;
  int x = 0, y = 0, u = 0, t = 0;
};

TPoly tpoly(const std::vector<Term>& terms);
TPoly tmul(const TPoly& a, const TPoly& b);
TPoly tpow(const TPoly& a, int k);

// Coefficients t^0..t^order of num / den, den(t = 0) = 1.
std::vector<Poly> divide(const TPoly& num, const TPoly& den, int order);

// --- E2 of the punctured torus, invariants, E3 ------------------------------

struct E3Result {
  std::map<std::pair<int, int>, std::size_t> quotient_dims;  // (p, q) -> dim E2
  std::map<std::pair<int, int>, std::size_t> invariant_dims;
  std::map<std::pair<int, int>, std::size_t> e3;
  std::map<std::tuple<int, int, int>, std::size_t> hodge;  // (i, a, b)
  std::vector<std::int64_t> betti;
};

// Every piece by dense brute force; invariants by averaging over all of S_n.
E3Result brute_force(int n);

// Invariant dimension per degree of the algebra on g_ij with the Arnold relation only.
std::vector<std::size_t> arnold_invariants(int n);

}  // namespace small_oracle
