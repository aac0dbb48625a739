#include "confspace/monomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace confspace {

Generator Generator::g(int i, int j) {
  if (i == j) throw std::invalid_argument("g_ii is not a generator");
  if (i > j) std::swap(i, j);
  return {GenKind::G, i, j};
}

Layout::Layout(int n) : n_(n), num_edges_(n * (n - 1) / 2) {
  if (n < 0 || n > kMaxN) throw std::invalid_argument("Layout: n out of range");
  edge_index_.assign(static_cast<std::size_t>(n * n), -1);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      int b = static_cast<int>(edges_.size());
      edges_.emplace_back(i, j);
      edge_index_[(i - 1) * n + (j - 1)] = b;
      edge_index_[(j - 1) * n + (i - 1)] = b;
      g_mask_ |= GenMask{1} << b;
    }
  for (int i = 1; i <= n; ++i) {
    x_mask_ |= GenMask{1} << x_bit(i);
    y_mask_ |= GenMask{1} << y_bit(i);
  }
}

int Layout::edge_bit(int i, int j) const {
  if (i < 1 || j < 1 || i > n_ || j > n_ || i == j)
    throw std::invalid_argument("edge index out of range");
  return edge_index_[(i - 1) * n_ + (j - 1)];
}

int Layout::bit(const Generator& g) const {
  switch (g.kind) {
    case GenKind::G: return edge_bit(g.i, g.j);
    case GenKind::X:
      if (g.i < 1 || g.i > n_) throw std::invalid_argument("x index out of range");
      return x_bit(g.i);
    case GenKind::Y:
      if (g.i < 1 || g.i > n_) throw std::invalid_argument("y index out of range");
      return y_bit(g.i);
  }
  throw std::logic_error("unreachable");
}

Generator Layout::generator(int b) const {
  if (b < num_edges_) return Generator::g(edges_[b].first, edges_[b].second);
  if (b < num_edges_ + n_) return Generator::x(b - num_edges_ + 1);
  return Generator::y(b - num_edges_ - n_ + 1);
}

std::pair<GenMask, int> Layout::permute(GenMask m, std::span<const int> perm) const {
  // Images in the original order; the sign is the parity of sorting them.
  int images[64];
  int k = 0;
  for (GenMask r = m; r; r &= r - 1) {
    int b = std::countr_zero(r);
    int img;
    if (b < num_edges_) {
      auto [i, j] = edges_[b];
      img = edge_bit(perm[i - 1], perm[j - 1]);
    } else if (b < num_edges_ + n_) {
      img = x_bit(perm[b - num_edges_]);
    } else {
      img = y_bit(perm[b - num_edges_ - n_]);
    }
    images[k++] = img;
  }
  int inversions = 0;
  GenMask out = 0;
  for (int s = 0; s < k; ++s) {
    inversions += std::popcount(out >> images[s] >> 1);
    out |= GenMask{1} << images[s];
  }
  return {out, (inversions & 1) ? -1 : 1};
}

std::uint64_t Layout::component_key(GenMask m) const {
  int parent[kMaxN];
  for (int v = 0; v < n_; ++v) parent[v] = v;
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (GenMask r = m & g_mask_; r; r &= r - 1) {
    auto [i, j] = edges_[std::countr_zero(r)];
    int a = find(i - 1), b = find(j - 1);
    if (a == b) continue;
    if (a < b) parent[b] = a;
    else parent[a] = b;
  }
  std::uint64_t key = 0;
  for (int v = 0; v < n_; ++v) key |= static_cast<std::uint64_t>(find(v)) << (3 * v);
  return key;
}

std::string Layout::format(GenMask m) const {
  if (m == 0) return "1";
  std::string s;
  auto idx = [&](int i) {
    // Indices above 9 never occur for n <= kMaxN.
    return std::to_string(i);
  };
  for (GenMask r = m; r; r &= r - 1) {
    Generator g = generator(std::countr_zero(r));
    if (!s.empty()) s += '.';
    switch (g.kind) {
      case GenKind::G: s += "g" + idx(g.i) + idx(g.j); break;
      case GenKind::X: s += "x" + idx(g.i); break;
      case GenKind::Y: s += "y" + idx(g.i); break;
    }
  }
  return s;
}

std::optional<SignedMonomial> normalize(const Layout& layout, std::span<const Generator> gens,
                                        int sign) {
  GenMask out = 0;
  int inversions = 0;
  for (const auto& g : gens) {
    int b = layout.bit(g);
    GenMask bit = GenMask{1} << b;
    if (out & bit) return std::nullopt;
    inversions += std::popcount(out >> b >> 1);
    out |= bit;
  }
  return SignedMonomial{out, (inversions & 1) ? -sign : sign};
}

std::vector<Generator> generators_of(const Layout& layout, GenMask m) {
  std::vector<Generator> gens;
  for (GenMask r = m; r; r &= r - 1) gens.push_back(layout.generator(std::countr_zero(r)));
  return gens;
}

std::vector<GenMask> subsets_of(GenMask pool, int k) {
  std::vector<int> bits;
  for (GenMask r = pool; r; r &= r - 1) bits.push_back(std::countr_zero(r));
  std::vector<GenMask> out;
  int m = static_cast<int>(bits.size());
  if (k < 0 || k > m) return out;
  // Colex enumeration of k-subsets of {0..m-1}.
  std::vector<int> c(k);
  for (int i = 0; i < k; ++i) c[i] = i;
  while (true) {
    GenMask s = 0;
    for (int i = 0; i < k; ++i) s |= GenMask{1} << bits[c[i]];
    out.push_back(s);
    int i = 0;
    while (i < k && c[i] + 1 == (i + 1 < k ? c[i + 1] : m)) ++i;
    if (i == k) break;
    ++c[i];
    for (int j = 0; j < i; ++j) c[j] = j;
  }
  return out;
}

std::vector<GenMask> free_basis(const Layout& layout, int p, int q) {
  std::vector<GenMask> out;
  auto gs = subsets_of(layout.g_mask(), q);
  auto xys = subsets_of(layout.xy_mask(), p);
  out.reserve(gs.size() * xys.size());
  for (GenMask g : gs)
    for (GenMask xy : xys) out.push_back(g | xy);
  return out;
}

}  // namespace confspace
