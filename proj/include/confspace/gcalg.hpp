#ifndef CONFSPACE_GCALG_HPP
#define CONFSPACE_GCALG_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <vector>

#include "confspace/dense.hpp"
#include "confspace/element.hpp"
#include "confspace/elimination.hpp"
#include "confspace/monomial.hpp"

namespace confspace {

/// Which defining relations of the quotient are imposed.
struct RelationSet {
  /// g_ik g_jk + g_ij g_ik + g_jk g_ij = 0 (g_ij = g_ji, all distinct i, j, k).
  bool arnold = true;
  /// g_ij g_jk = 0 for distinct i, j, k.
  bool adjacent_edges_vanish = false;
  /// g_ij x_i = g_ij x_j and g_ij y_i = g_ij y_j.
  bool edge_identifies_classes = true;
  /// x_i y_i = 0.
  bool xy_vanish = true;

  /// E2(X, n) of the punctured torus.
  static RelationSet e2() { return {}; }
  /// W(n) = E2(X, n) / (g_ij g_jk).
  static RelationSet w_algebra() { return {false, true, true, true}; }
  /// Cohomology of the ordered configuration space of the plane (g only).
  static RelationSet arnold_only() { return {true, false, false, false}; }
};

struct SpaceOptions {
  int workers = 1;
  bool modular_prescreen = false;
  /// Keep the echelon basis of the relation span (memory heavy for n >= 5).
  bool keep_relations = false;
};

/// One bigraded piece (p, q) of a quotient of the free graded-commutative
/// algebra. Immutable once built.
class BidegreeSpace {
 public:
  static BidegreeSpace build(const Layout& layout, int p, int q, const RelationSet& relations,
                             const SpaceOptions& opts = {});

  const Layout& layout() const { return layout_; }
  int n() const { return layout_.n(); }
  int p() const { return p_; }
  int q() const { return q_; }

  const std::vector<GenMask>& free_basis() const { return free_; }
  std::size_t free_dim() const { return free_.size(); }
  std::size_t relation_rank() const { return relation_rank_; }
  std::size_t dim() const { return standard_.size(); }
  /// Rank modulo the prescreen prime, or -1 when the prescreen was off.
  std::int64_t modular_relation_rank() const { return modular_rank_; }

  /// Standard monomials: the chosen coset representatives, in column order.
  const std::vector<GenMask>& quotient_basis() const { return standard_; }
  /// Hodge type (a, b) of each quotient basis vector.
  std::pair<int, int> hodge_of(std::size_t k) const;

  std::optional<std::size_t> column_of(GenMask m) const;
  /// Normal form of a free monomial of this bidegree in quotient coordinates.
  std::span<const NormalFormEntry> normal_form(GenMask m) const;
  /// Coordinates of an element of this bidegree; throws std::invalid_argument
  /// on a bidegree mismatch.
  Vector reduce(const Element& e) const;
  /// Lift quotient coordinates back to a combination of standard monomials.
  Element lift(const Vector& v) const;

  /// Echelon basis of the relation span (rows over global free columns);
  /// empty unless built with keep_relations. Monomial relations x_i y_i m and
  /// adjacent-edge kills appear as unit rows.
  const std::vector<EchelonRow>& relation_echelon() const { return echelon_; }

  std::size_t num_blocks() const { return num_blocks_; }

 private:
  BidegreeSpace(const Layout& layout, int p, int q) : layout_(layout), p_(p), q_(q) {}

  Layout layout_;
  int p_;
  int q_;
  std::vector<GenMask> free_;
  std::vector<GenMask> standard_;
  std::size_t relation_rank_ = 0;
  std::int64_t modular_rank_ = -1;
  std::size_t num_blocks_ = 0;
  std::uint64_t xy_count_ = 0;  // C(2n, p)
  std::vector<std::uint32_t> nf_offsets_;
  std::vector<NormalFormEntry> nf_entries_;
  std::vector<EchelonRow> echelon_;
};

/// Generating set of the relation subspace inside the free (p, q) piece:
/// r * m for every defining relation r and complementary monomial m
/// (redundant multiples dropped by normal form). Each row is an Element.
std::vector<Element> relation_rows(const Layout& layout, int p, int q, const RelationSet& relations);

/// All bidegree pieces of one quotient algebra, built on demand and cached.
class QuotientAlgebra {
 public:
  QuotientAlgebra(int n, RelationSet relations, SpaceOptions opts = {});

  const Layout& layout() const { return layout_; }
  int n() const { return layout_.n(); }
  const RelationSet& relations() const { return relations_; }

  /// Nonempty free pieces satisfy 0 <= p <= 2n, 0 <= q <= n(n-1)/2.
  bool in_range(int p, int q) const;
  /// Thread-safe; builds outside the lock so distinct pieces build concurrently.
  std::shared_ptr<const BidegreeSpace> space(int p, int q) const;

 private:
  Layout layout_;
  RelationSet relations_;
  SpaceOptions opts_;
  mutable std::mutex mutex_;
  mutable std::map<std::pair<int, int>, std::shared_ptr<const BidegreeSpace>> cache_;
};

/// Reduce d(e) for e in `src` into coordinates of the (p+2, q-1) piece `dst`.
Vector differential_coords(const BidegreeSpace& src, const BidegreeSpace& dst, const Vector& v);

/// Coordinates of sigma(v) for v in quotient coordinates of `space`.
Vector act_coords(const BidegreeSpace& space, std::span<const int> perm, const Vector& v);

}  // namespace confspace

#endif  // CONFSPACE_GCALG_HPP
