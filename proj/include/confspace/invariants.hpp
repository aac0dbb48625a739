#ifndef CONFSPACE_INVARIANTS_HPP
#define CONFSPACE_INVARIANTS_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "confspace/gcalg.hpp"

namespace confspace {

/// S_n-invariants of one bidegree piece, as quotient-coordinate vectors.
struct InvariantSpace {
  int n = 0;
  int p = 0;
  int q = 0;
  std::vector<Vector> basis;
  /// Hodge type (a, b) of each basis vector.
  std::vector<std::pair<int, int>> hodge;

  std::size_t dim() const { return basis.size(); }
};

/// The transposition (1 2) and the cycle (1 2 ... n); together they generate S_n.
std::vector<std::vector<int>> sn_generators(int n);

/// Fixed space of the generators, computed one Hodge type at a time.
InvariantSpace invariant_basis(const BidegreeSpace& space);

/// Image of the symmetrizer: span of e(m) over the free monomials m.
/// Computed from signed orbits of monomials rather than from n! group
/// elements, so it stays cheap when orbits are few.
InvariantSpace symmetrizer_image(const BidegreeSpace& space);

/// Signed orbit of a free monomial under S_n; nullopt when m and -m share an
/// orbit (then e(m) = 0).
std::optional<std::vector<std::pair<GenMask, int>>> signed_orbit(const Layout& layout, GenMask m);

/// Quotient coordinates of e(sign * m) = (1/n!) sum_sigma sigma(sign * m).
Vector symmetrized_coords(const BidegreeSpace& space, GenMask m, int sign = 1);

/// Coordinates of e(x) for an arbitrary element of the space's bidegree.
Vector symmetrized_coords(const BidegreeSpace& space, const Element& e);

/// Matrix of a permutation on the quotient coordinates restricted to one
/// Hodge type; columns are images of the basis vectors listed in `indices`.
Matrix action_matrix(const BidegreeSpace& space, std::span<const int> perm,
                     const std::vector<std::size_t>& indices);

}  // namespace confspace

#endif  // CONFSPACE_INVARIANTS_HPP
