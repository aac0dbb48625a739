#include "confspace/gcalg.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <unordered_map>

namespace confspace {

namespace {

struct BinomialTable {
  std::array<std::array<std::uint64_t, 65>, 65> c{};
  BinomialTable() {
    for (int n = 0; n <= 64; ++n) {
      c[n][0] = 1;
      for (int k = 1; k <= n; ++k) c[n][k] = c[n - 1][k - 1] + (k <= n - 1 ? c[n - 1][k] : 0);
    }
  }
};

const BinomialTable& binomials() {
  static const BinomialTable table;
  return table;
}

std::uint64_t choose(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  return binomials().c[n][k];
}

// Colex rank of a subset given by bit positions relative to `offset`.
std::uint64_t colex_rank(GenMask bits, int offset) {
  std::uint64_t r = 0;
  int k = 1;
  for (GenMask s = bits; s; s &= s - 1, ++k) r += choose(std::countr_zero(s) - offset, k);
  return r;
}

bool has_adjacent_edges(const Layout& layout, GenMask m) {
  int degree[Layout::kMaxN] = {};
  for (GenMask r = m & layout.g_mask(); r; r &= r - 1) {
    auto [i, j] = layout.edge(std::countr_zero(r));
    if (++degree[i - 1] > 1 || ++degree[j - 1] > 1) return true;
  }
  return false;
}

bool killed_by_monomial_relation(const Layout& layout, GenMask m, const RelationSet& rel) {
  return (rel.xy_vanish && layout.has_xy_pair(m)) ||
         (rel.adjacent_edges_vanish && has_adjacent_edges(layout, m));
}

using Term = std::pair<GenMask, int>;

// Calls emit(span<Term>) for every multiple r * m of a non-monomial relation
// landing in bidegree (p, q). Multipliers that give the same row up to sign
// are enumerated once, and multipliers whose every term dies by a monomial
// relation are skipped.
template <class Emit>
void for_each_relation(const Layout& L, int p, int q, const RelationSet& rel, Emit&& emit) {
  Term terms[3];
  const GenMask bit1 = 1;

  if (rel.edge_identifies_classes && p >= 1 && q >= 1) {
    const auto gsubs = subsets_of(L.g_mask(), q - 1);
    const auto xysubs = subsets_of(L.xy_mask(), p - 1);
    for (int e = 0; e < L.num_edges(); ++e) {
      const GenMask edge = bit1 << e;
      auto [i, j] = L.edge(e);
      for (int kind = 0; kind < 2; ++kind) {
        const GenMask ki = bit1 << (kind == 0 ? L.x_bit(i) : L.y_bit(i));
        const GenMask kj = bit1 << (kind == 0 ? L.x_bit(j) : L.y_bit(j));
        // g_ij k_i m - g_ij k_j m; multipliers containing k_j repeat those containing k_i.
        for (GenMask g : gsubs) {
          if (g & edge) continue;
          for (GenMask xy : xysubs) {
            if (xy & kj) continue;
            if (rel.xy_vanish && L.has_xy_pair(xy)) continue;
            const GenMask m = g | xy;
            int count = 0;
            if (auto t = multiply(edge | ki, m)) terms[count++] = {t->mask, t->sign};
            if (auto t = multiply(edge | kj, m)) terms[count++] = {t->mask, -t->sign};
            if (count) emit(std::span<Term>(terms, count));
          }
        }
      }
    }
  }

  if (rel.arnold && q >= 2) {
    const auto gsubs = subsets_of(L.g_mask(), q - 2);
    const auto xysubs = subsets_of(L.xy_mask(), p);
    const int n = L.n();
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        for (int k = j + 1; k <= n; ++k) {
          const GenMask eij = bit1 << L.edge_bit(i, j);
          const GenMask eik = bit1 << L.edge_bit(i, k);
          const GenMask ejk = bit1 << L.edge_bit(j, k);
          // g_ik g_jk + g_ij g_ik + g_jk g_ij with symmetric g; the last term
          // is -g_ij g_jk in normal order.
          const GenMask rel_terms[3] = {eik | ejk, eij | eik, eij | ejk};
          const int rel_signs[3] = {1, 1, -1};
          for (GenMask g : gsubs) {
            // A multiplier holding one triangle edge gives the whole triangle up
            // to sign; keep only the g_ij representative.
            if (g & (eik | ejk)) continue;
            for (GenMask xy : xysubs) {
              if (rel.xy_vanish && L.has_xy_pair(xy)) continue;
              const GenMask m = g | xy;
              int count = 0;
              for (int r = 0; r < 3; ++r)
                if (auto t = multiply(rel_terms[r], m)) terms[count++] = {t->mask, rel_signs[r] * t->sign};
              if (count) emit(std::span<Term>(terms, count));
            }
          }
        }
  }
}

}  // namespace

BidegreeSpace BidegreeSpace::build(const Layout& layout, int p, int q, const RelationSet& rel,
                                   const SpaceOptions& opts) {
  BidegreeSpace s(layout, p, q);
  s.xy_count_ = choose(2 * layout.n(), p);
  if (p < 0 || q < 0 || p > 2 * layout.n() || q > layout.num_edges()) return s;
  s.free_ = confspace::free_basis(layout, p, q);
  const std::size_t N = s.free_.size();

  // Columns split into independent blocks: every relation preserves the
  // connected components of the g-part and the number of x's.
  std::vector<std::int32_t> block_of(N, -1);
  std::vector<std::uint32_t> local_of(N, 0);
  std::vector<std::vector<std::uint32_t>> block_cols;
  std::unordered_map<std::uint64_t, std::uint32_t> block_ids;
  std::size_t killed = 0;
  for (std::size_t c = 0; c < N; ++c) {
    const GenMask m = s.free_[c];
    if (killed_by_monomial_relation(layout, m, rel)) {
      ++killed;
      continue;
    }
    const std::uint64_t key = layout.component_key(m) |
                              (static_cast<std::uint64_t>(std::popcount(m & layout.x_mask())) << 32);
    auto [it, inserted] = block_ids.try_emplace(key, static_cast<std::uint32_t>(block_cols.size()));
    if (inserted) block_cols.emplace_back();
    block_of[c] = static_cast<std::int32_t>(it->second);
    local_of[c] = static_cast<std::uint32_t>(block_cols[it->second].size());
    block_cols[it->second].push_back(static_cast<std::uint32_t>(c));
  }
  s.num_blocks_ = block_cols.size();

  std::vector<BlockProblem> problems(block_cols.size());
  for (std::size_t b = 0; b < block_cols.size(); ++b)
    problems[b].num_columns = static_cast<std::uint32_t>(block_cols[b].size());

  std::vector<std::pair<std::uint32_t, std::int32_t>> buffer;
  for_each_relation(layout, p, q, rel, [&](std::span<Term> terms) {
    buffer.clear();
    std::int32_t blk = -1;
    for (const auto& [mask, sign] : terms) {
      auto col = s.column_of(mask);
      if (!col) throw std::logic_error("relation term outside its bidegree");
      if (block_of[*col] < 0) continue;
      if (blk >= 0 && blk != block_of[*col]) throw std::logic_error("relation crosses blocks");
      blk = block_of[*col];
      buffer.emplace_back(local_of[*col], sign);
    }
    if (!buffer.empty()) problems[blk].add_row(buffer);
  });

  EliminationOptions eopts;
  eopts.workers = opts.workers;
  eopts.modular_prescreen = opts.modular_prescreen;
  eopts.keep_echelon = opts.keep_relations;
  auto results = eliminate_blocks(problems, eopts);

  s.relation_rank_ = killed;
  std::int64_t mod_rank = static_cast<std::int64_t>(killed);
  std::vector<std::uint32_t> standard_cols;
  for (std::size_t b = 0; b < results.size(); ++b) {
    s.relation_rank_ += results[b].rank;
    mod_rank += results[b].modular_rank;
    for (auto local : results[b].standard) standard_cols.push_back(block_cols[b][local]);
  }
  if (opts.modular_prescreen) s.modular_rank_ = mod_rank;
  std::sort(standard_cols.begin(), standard_cols.end());
  std::vector<std::uint32_t> qindex_of_col(N, 0);
  for (std::size_t k = 0; k < standard_cols.size(); ++k) {
    qindex_of_col[standard_cols[k]] = static_cast<std::uint32_t>(k);
    s.standard_.push_back(s.free_[standard_cols[k]]);
  }

  s.nf_offsets_.assign(N + 1, 0);
  for (std::size_t c = 0; c < N; ++c) {
    if (block_of[c] >= 0) {
      const auto& r = results[block_of[c]];
      const auto local = local_of[c];
      for (auto k = r.nf_offsets[local]; k < r.nf_offsets[local + 1]; ++k) {
        const auto& entry = r.nf_entries[k];
        const auto global_col = block_cols[block_of[c]][r.standard[entry.index]];
        s.nf_entries_.push_back({qindex_of_col[global_col], entry.value});
      }
    }
    s.nf_offsets_[c + 1] = static_cast<std::uint32_t>(s.nf_entries_.size());
  }
  // Standard columns within a block are already ascending, so entries stay sorted.

  if (opts.keep_relations) {
    for (std::size_t c = 0; c < N; ++c)
      if (block_of[c] < 0) s.echelon_.push_back({{static_cast<std::uint32_t>(c)}, {mpz_class(1)}});
    for (std::size_t b = 0; b < results.size(); ++b)
      for (auto& row : results[b].echelon) {
        for (auto& c : row.cols) c = block_cols[b][c];
        s.echelon_.push_back(std::move(row));
      }
    std::sort(s.echelon_.begin(), s.echelon_.end(),
              [](const EchelonRow& a, const EchelonRow& b) { return a.cols.front() < b.cols.front(); });
  }
  return s;
}

std::pair<int, int> BidegreeSpace::hodge_of(std::size_t k) const {
  const GenMask m = standard_.at(k);
  return {layout_.hodge_a(m), layout_.hodge_b(m)};
}

std::optional<std::size_t> BidegreeSpace::column_of(GenMask m) const {
  if (layout_.p_of(m) != p_ || layout_.q_of(m) != q_) return std::nullopt;
  if (m >> layout_.num_bits()) return std::nullopt;
  const std::uint64_t rg = colex_rank(m & layout_.g_mask(), 0);
  const std::uint64_t rxy = colex_rank(m & layout_.xy_mask(), layout_.num_edges());
  return static_cast<std::size_t>(rg * xy_count_ + rxy);
}

std::span<const NormalFormEntry> BidegreeSpace::normal_form(GenMask m) const {
  auto col = column_of(m);
  if (!col || *col >= free_.size())
    throw std::invalid_argument("monomial " + layout_.format(m) + " is not in bidegree (" +
                                std::to_string(p_) + "," + std::to_string(q_) + ")");
  return {nf_entries_.data() + nf_offsets_[*col], nf_entries_.data() + nf_offsets_[*col + 1]};
}

Vector BidegreeSpace::reduce(const Element& e) const {
  Vector v(dim());
  for (const auto& [m, c] : e.terms())
    for (const auto& entry : normal_form(m)) v[entry.index] += c * entry.value;
  return v;
}

Element BidegreeSpace::lift(const Vector& v) const {
  if (v.size() != dim()) throw std::invalid_argument("coordinate vector has wrong length");
  Element e;
  for (std::size_t k = 0; k < v.size(); ++k) e.add_term(standard_[k], v[k]);
  return e;
}

std::vector<Element> relation_rows(const Layout& layout, int p, int q, const RelationSet& rel) {
  std::vector<Element> rows;
  if (p < 0 || q < 0 || p > 2 * layout.n() || q > layout.num_edges()) return rows;
  for (GenMask m : free_basis(layout, p, q))
    if (killed_by_monomial_relation(layout, m, rel)) rows.push_back(Element::monomial(m));
  for_each_relation(layout, p, q, rel, [&](std::span<Term> terms) {
    Element e;
    for (const auto& [mask, sign] : terms) e.add_term(mask, sign);
    if (!e.is_zero()) rows.push_back(std::move(e));
  });
  return rows;
}

QuotientAlgebra::QuotientAlgebra(int n, RelationSet relations, SpaceOptions opts)
    : layout_(n), relations_(relations), opts_(opts) {}

bool QuotientAlgebra::in_range(int p, int q) const {
  return p >= 0 && q >= 0 && p <= 2 * layout_.n() && q <= layout_.num_edges();
}

std::shared_ptr<const BidegreeSpace> QuotientAlgebra::space(int p, int q) const {
  {
    std::lock_guard lock(mutex_);
    auto it = cache_.find({p, q});
    if (it != cache_.end()) return it->second;
  }
  auto built = std::make_shared<const BidegreeSpace>(
      BidegreeSpace::build(layout_, p, q, relations_, opts_));
  std::lock_guard lock(mutex_);
  auto [it, inserted] = cache_.try_emplace({p, q}, std::move(built));
  return it->second;
}

Vector differential_coords(const BidegreeSpace& src, const BidegreeSpace& dst, const Vector& v) {
  if (dst.p() != src.p() + 2 || dst.q() != src.q() - 1)
    throw std::invalid_argument("differential target has the wrong bidegree");
  if (v.size() != src.dim()) throw std::invalid_argument("coordinate vector has wrong length");
  Vector out(dst.dim());
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k] == 0) continue;
    const Element dk = differential(src.layout(), src.quotient_basis()[k]);
    for (const auto& [m, c] : dk.terms())
      for (const auto& entry : dst.normal_form(m)) out[entry.index] += v[k] * c * entry.value;
  }
  return out;
}

Vector act_coords(const BidegreeSpace& space, std::span<const int> perm, const Vector& v) {
  if (v.size() != space.dim()) throw std::invalid_argument("coordinate vector has wrong length");
  Vector out(space.dim());
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k] == 0) continue;
    auto [img, sign] = space.layout().permute(space.quotient_basis()[k], perm);
    for (const auto& entry : space.normal_form(img)) out[entry.index] += sign * v[k] * entry.value;
  }
  return out;
}

}  // namespace confspace
