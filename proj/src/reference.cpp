#include "confspace/reference.hpp"

#include <unordered_map>

namespace confspace {

std::vector<Element> defining_relations(const Layout& layout, const RelationSet& rel) {
  using G = Generator;
  const int n = layout.n();
  std::vector<Element> out;
  auto prod = [&](std::initializer_list<G> gens) {
    std::vector<G> v(gens);
    return Element::product(layout, v);
  };
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k) {
        if (i == j || j == k || i == k) continue;
        if (rel.arnold) {
          Element r = prod({G::g(i, k), G::g(j, k)});
          r += prod({G::g(i, j), G::g(i, k)});
          r += prod({G::g(j, k), G::g(i, j)});
          out.push_back(std::move(r));
        }
        if (rel.adjacent_edges_vanish) out.push_back(prod({G::g(i, j), G::g(j, k)}));
      }
  if (rel.edge_identifies_classes)
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        if (i == j) continue;
        Element rx = prod({G::g(i, j), G::x(i)});
        rx -= prod({G::g(i, j), G::x(j)});
        out.push_back(std::move(rx));
        Element ry = prod({G::g(i, j), G::y(i)});
        ry -= prod({G::g(i, j), G::y(j)});
        out.push_back(std::move(ry));
      }
  if (rel.xy_vanish)
    for (int i = 1; i <= n; ++i) out.push_back(prod({G::x(i), G::y(i)}));
  return out;
}

std::vector<Vector> reference_relation_rows(const Layout& layout, int p, int q,
                                            const RelationSet& relations) {
  const auto basis = free_basis(layout, p, q);
  std::unordered_map<GenMask, std::size_t> column;
  for (std::size_t c = 0; c < basis.size(); ++c) column[basis[c]] = c;
  std::vector<Vector> rows;
  for (const auto& r : defining_relations(layout, relations)) {
    const GenMask lead = r.terms().begin()->first;
    const int dp = layout.p_of(lead), dq = layout.q_of(lead);
    if (dp > p || dq > q) continue;
    for (GenMask m : free_basis(layout, p - dp, q - dq)) {
      const Element prod = r * Element::monomial(m);
      if (prod.is_zero()) continue;
      Vector v(basis.size());
      for (const auto& [mask, c] : prod.terms()) v[column.at(mask)] = c;
      rows.push_back(std::move(v));
    }
  }
  return rows;
}

ReferenceSpace reference_space(const Layout& layout, int p, int q, const RelationSet& relations) {
  ReferenceSpace out;
  out.free_basis = free_basis(layout, p, q);
  const std::size_t N = out.free_basis.size();
  auto rows = reference_relation_rows(layout, p, q, relations);
  Matrix m = Matrix::from_rows(rows, N);
  const auto pivots = m.rref();
  out.relation_rank = pivots.size();
  std::vector<std::int64_t> pivot_row(N, -1);
  for (std::size_t r = 0; r < pivots.size(); ++r) pivot_row[pivots[r]] = static_cast<std::int64_t>(r);
  std::vector<std::size_t> std_index(N, 0);
  for (std::size_t c = 0; c < N; ++c)
    if (pivot_row[c] < 0) {
      std_index[c] = out.standard.size();
      out.standard.push_back(out.free_basis[c]);
    }
  out.normal_forms = Matrix(N, out.standard.size());
  for (std::size_t c = 0; c < N; ++c) {
    if (pivot_row[c] < 0) {
      out.normal_forms(c, std_index[c]) = 1;
      continue;
    }
    for (std::size_t s = 0; s < N; ++s)
      if (pivot_row[s] < 0 && m(pivot_row[c], s) != 0)
        out.normal_forms(c, std_index[s]) = -m(pivot_row[c], s);
  }
  return out;
}

}  // namespace confspace
