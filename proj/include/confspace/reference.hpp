#ifndef CONFSPACE_REFERENCE_HPP
#define CONFSPACE_REFERENCE_HPP

#include <vector>

#include "confspace/dense.hpp"
#include "confspace/gcalg.hpp"

namespace confspace {

/// Serial dense computation of one bidegree quotient: every relation times
/// every complementary monomial, no blocking, no de-duplication. Slow; kept
/// to check the blocked kernel on small pieces.
struct ReferenceSpace {
  std::vector<GenMask> free_basis;
  std::vector<GenMask> standard;
  std::size_t relation_rank = 0;
  /// Row k: normal form of free_basis[k] in the standard basis.
  Matrix normal_forms;
};

/// The defining relations themselves, for every ordered choice of indices.
std::vector<Element> defining_relations(const Layout& layout, const RelationSet& relations);

/// All generating rows r * m of the relation subspace, as dense vectors over
/// the free basis.
std::vector<Vector> reference_relation_rows(const Layout& layout, int p, int q,
                                            const RelationSet& relations);

ReferenceSpace reference_space(const Layout& layout, int p, int q, const RelationSet& relations);

}  // namespace confspace

#endif  // CONFSPACE_REFERENCE_HPP
