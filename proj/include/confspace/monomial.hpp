#ifndef CONFSPACE_MONOMIAL_HPP
#define CONFSPACE_MONOMIAL_HPP

#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace confspace {

/// Set of odd generators, one bit each. Bit order is the normal-form order:
/// all g_ij (lex by (i,j)), then x_1..x_n, then y_1..y_n.
using GenMask = std::uint64_t;

enum class GenKind : std::uint8_t { G, X, Y };

/// x_i, y_i or g_ij (1-based, i < j for G).
struct Generator {
  GenKind kind = GenKind::X;
  int i = 1;
  int j = 0;

  static Generator x(int i) { return {GenKind::X, i, 0}; }
  static Generator y(int i) { return {GenKind::Y, i, 0}; }
  /// g_ij = g_ji; stored with i < j.
  static Generator g(int i, int j);

  friend bool operator==(const Generator&, const Generator&) = default;
};

/// Bit positions of the generators of E2(X, n).
class Layout {
 public:
  static constexpr int kMaxN = 7;

  explicit Layout(int n);

  int n() const { return n_; }
  int num_edges() const { return num_edges_; }
  int num_bits() const { return num_edges_ + 2 * n_; }

  int edge_bit(int i, int j) const;
  int x_bit(int i) const { return num_edges_ + i - 1; }
  int y_bit(int i) const { return num_edges_ + n_ + i - 1; }
  int bit(const Generator& g) const;
  Generator generator(int bit) const;
  /// Endpoints (1-based) of an edge bit.
  std::pair<int, int> edge(int bit) const { return edges_[bit]; }

  GenMask g_mask() const { return g_mask_; }
  GenMask x_mask() const { return x_mask_; }
  GenMask y_mask() const { return y_mask_; }
  GenMask xy_mask() const { return x_mask_ | y_mask_; }

  /// Cohomological bidegree (p, q) = (#X + #Y, #G).
  int p_of(GenMask m) const { return std::popcount(m & xy_mask()); }
  int q_of(GenMask m) const { return std::popcount(m & g_mask_); }
  /// Hodge bidegree (a, b) = (#X + #G, #Y + #G).
  int hodge_a(GenMask m) const { return std::popcount(m & (x_mask_ | g_mask_)); }
  int hodge_b(GenMask m) const { return std::popcount(m & (y_mask_ | g_mask_)); }

  /// Contains x_i y_i for some i.
  bool has_xy_pair(GenMask m) const {
    return ((m & x_mask_) >> num_edges_ & (m & y_mask_) >> (num_edges_ + n_)) != 0;
  }

  /// Image of a mask under a relabelling of indices; sign is the Koszul sign.
  /// perm[k-1] = sigma(k).
  std::pair<GenMask, int> permute(GenMask m, std::span<const int> perm) const;

  /// Canonical connected-component key of the g-part (vertex -> component minimum).
  std::uint64_t component_key(GenMask m) const;

  /// Human-readable form such as "g12.x1.y3"; "1" for the empty mask.
  std::string format(GenMask m) const;

 private:
  int n_;
  int num_edges_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<int> edge_index_;  // (i-1)*n + (j-1) -> bit
  GenMask g_mask_ = 0;
  GenMask x_mask_ = 0;
  GenMask y_mask_ = 0;
};

/// Koszul sign of concatenating a then b (both in normal order): (-1)^{#{(s in a, t in b) : s > t}}.
inline int concat_sign(GenMask a, GenMask b) {
  int inversions = 0;
  while (b) {
    int t = std::countr_zero(b);
    b &= b - 1;
    inversions += std::popcount(a >> t >> 1);
  }
  return (inversions & 1) ? -1 : 1;
}

/// Product of normal-form monomials a * b; nullopt when they share a generator.
struct SignedMonomial {
  GenMask mask = 0;
  int sign = 1;
  friend bool operator==(const SignedMonomial&, const SignedMonomial&) = default;
};

inline std::optional<SignedMonomial> multiply(GenMask a, GenMask b) {
  if (a & b) return std::nullopt;
  return SignedMonomial{a | b, concat_sign(a, b)};
}

/// Normal form of an ordered product of generators (times `sign`).
std::optional<SignedMonomial> normalize(const Layout& layout, std::span<const Generator> gens,
                                        int sign = 1);

/// Generators of a mask in normal order.
std::vector<Generator> generators_of(const Layout& layout, GenMask m);

/// All masks with q edge bits and p x/y bits (the free basis of bidegree (p, q)),
/// in increasing column order.
std::vector<GenMask> free_basis(const Layout& layout, int p, int q);

/// Subsets of size k of the bits in `pool`, in colex order.
std::vector<GenMask> subsets_of(GenMask pool, int k);

}  // namespace confspace

#endif  // CONFSPACE_MONOMIAL_HPP
