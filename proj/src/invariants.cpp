#include "confspace/invariants.hpp"

#include <map>
#include <stdexcept>
#include <unordered_map>

namespace confspace {

std::vector<std::vector<int>> sn_generators(int n) {
  if (n < 2) return {};
  std::vector<int> swap(n), cycle(n);
  for (int k = 1; k <= n; ++k) {
    swap[k - 1] = k;
    cycle[k - 1] = k % n + 1;
  }
  std::swap(swap[0], swap[1]);
  if (n == 2) return {swap};
  return {swap, cycle};
}

Matrix action_matrix(const BidegreeSpace& space, std::span<const int> perm,
                     const std::vector<std::size_t>& indices) {
  std::unordered_map<std::size_t, std::size_t> position;
  for (std::size_t t = 0; t < indices.size(); ++t) position[indices[t]] = t;
  Matrix m(indices.size(), indices.size());
  for (std::size_t t = 0; t < indices.size(); ++t) {
    auto [img, sign] = space.layout().permute(space.quotient_basis()[indices[t]], perm);
    for (const auto& entry : space.normal_form(img)) {
      auto it = position.find(entry.index);
      if (it == position.end()) throw std::logic_error("permutation moved a vector across Hodge types");
      m(it->second, t) += sign * entry.value;
    }
  }
  return m;
}

namespace {

std::map<int, std::vector<std::size_t>> indices_by_hodge(const BidegreeSpace& space) {
  std::map<int, std::vector<std::size_t>> groups;
  for (std::size_t k = 0; k < space.dim(); ++k) groups[space.hodge_of(k).first].push_back(k);
  return groups;
}

std::pair<int, int> hodge_pair(const BidegreeSpace& space, int a) {
  return {a, space.p() + 2 * space.q() - a};
}

}  // namespace

InvariantSpace invariant_basis(const BidegreeSpace& space) {
  InvariantSpace inv{space.n(), space.p(), space.q(), {}, {}};
  const auto gens = sn_generators(space.n());
  for (const auto& [a, indices] : indices_by_hodge(space)) {
    const std::size_t m = indices.size();
    std::vector<Vector> local;
    if (gens.empty()) {
      for (std::size_t t = 0; t < m; ++t) {
        Vector v(m);
        v[t] = 1;
        local.push_back(std::move(v));
      }
    } else {
      Matrix stacked(gens.size() * m, m);
      for (std::size_t g = 0; g < gens.size(); ++g) {
        Matrix act = action_matrix(space, gens[g], indices);
        for (std::size_t r = 0; r < m; ++r)
          for (std::size_t c = 0; c < m; ++c) stacked(g * m + r, c) = act(r, c) - (r == c ? 1 : 0);
      }
      local = nullspace(std::move(stacked));
    }
    for (auto& v : local) {
      Vector full(space.dim());
      for (std::size_t t = 0; t < m; ++t) full[indices[t]] = v[t];
      inv.basis.push_back(std::move(full));
      inv.hodge.push_back(hodge_pair(space, a));
    }
  }
  return inv;
}

std::optional<std::vector<std::pair<GenMask, int>>> signed_orbit(const Layout& layout, GenMask m) {
  const auto gens = sn_generators(layout.n());
  std::vector<std::pair<GenMask, int>> orbit{{m, 1}};
  std::unordered_map<GenMask, int> seen{{m, 1}};
  for (std::size_t head = 0; head < orbit.size(); ++head) {
    const auto [cur, s] = orbit[head];
    for (const auto& g : gens) {
      auto [img, sign] = layout.permute(cur, g);
      const int total = s * sign;
      auto [it, inserted] = seen.try_emplace(img, total);
      if (inserted)
        orbit.emplace_back(img, total);
      else if (it->second != total)
        return std::nullopt;
    }
  }
  return orbit;
}

Vector symmetrized_coords(const BidegreeSpace& space, GenMask m, int sign) {
  Vector v(space.dim());
  auto orbit = signed_orbit(space.layout(), m);
  if (!orbit) return v;
  for (const auto& [img, s] : *orbit)
    for (const auto& entry : space.normal_form(img)) v[entry.index] += s * entry.value;
  const Rational scale(sign, static_cast<long>(orbit->size()));
  for (auto& x : v)
    if (x != 0) x *= scale;
  return v;
}

Vector symmetrized_coords(const BidegreeSpace& space, const Element& e) {
  Vector v(space.dim());
  for (const auto& [m, c] : e.terms()) {
    Vector part = symmetrized_coords(space, m);
    for (std::size_t k = 0; k < v.size(); ++k)
      if (part[k] != 0) v[k] += c * part[k];
  }
  return v;
}

InvariantSpace symmetrizer_image(const BidegreeSpace& space) {
  InvariantSpace inv{space.n(), space.p(), space.q(), {}, {}};
  std::vector<bool> visited(space.free_dim(), false);
  std::map<int, std::vector<Vector>> by_hodge;
  for (std::size_t c = 0; c < space.free_dim(); ++c) {
    if (visited[c]) continue;
    const GenMask m = space.free_basis()[c];
    auto orbit = signed_orbit(space.layout(), m);
    if (!orbit) {
      // Mark the whole (unsigned) orbit; every member symmetrizes to zero.
      std::vector<GenMask> stack{m};
      visited[c] = true;
      while (!stack.empty()) {
        GenMask cur = stack.back();
        stack.pop_back();
        for (const auto& g : sn_generators(space.n())) {
          GenMask img = space.layout().permute(cur, g).first;
          auto col = *space.column_of(img);
          if (!visited[col]) {
            visited[col] = true;
            stack.push_back(img);
          }
        }
      }
      continue;
    }
    bool all_killed = true;
    for (const auto& [img, s] : *orbit) {
      visited[*space.column_of(img)] = true;
      if (!space.normal_form(img).empty()) all_killed = false;
    }
    if (all_killed) continue;
    Vector v = symmetrized_coords(space, m);
    if (is_zero(v)) continue;
    by_hodge[space.layout().hodge_a(m)].push_back(std::move(v));
  }
  for (auto& [a, vectors] : by_hodge) {
    Matrix mat = Matrix::from_rows(vectors, space.dim());
    const auto pivots = mat.rref();
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      Vector row(space.dim());
      for (std::size_t k = 0; k < space.dim(); ++k) row[k] = mat(r, k);
      inv.basis.push_back(std::move(row));
      inv.hodge.push_back(hodge_pair(space, a));
    }
  }
  return inv;
}

}  // namespace confspace
