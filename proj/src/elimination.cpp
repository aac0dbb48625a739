#include "confspace/elimination.hpp"

#include <algorithm>
#include <exception>
#include <limits>
#include <numeric>
#include <stdexcept>

#include <omp.h>

namespace confspace {

void BlockProblem::add_row(std::span<std::pair<std::uint32_t, std::int32_t>> terms) {
  std::sort(terms.begin(), terms.end());
  std::size_t start = cols.size();
  for (const auto& [c, v] : terms) {
    if (c >= num_columns) throw std::out_of_range("BlockProblem: column out of range");
    if (cols.size() > start && cols.back() == c) {
      coefs.back() += v;
      if (coefs.back() == 0) {
        cols.pop_back();
        coefs.pop_back();
      }
    } else {
      cols.push_back(c);
      coefs.push_back(v);
    }
  }
  if (cols.size() > start) offsets.push_back(static_cast<std::uint32_t>(cols.size()));
}

namespace {

struct Overflow {};

// Checked 64-bit integers; any overflow aborts the block and it is redone with GMP.
struct SmallInt {
  using Scalar = std::int64_t;
  static Scalar from(std::int32_t v) { return v; }
  static bool is_zero(Scalar v) { return v == 0; }
  static bool is_one(Scalar v) { return v == 1; }
  static Scalar mul(Scalar a, Scalar b) {
    Scalar r;
    if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
    return r;
  }
  static Scalar sub(Scalar a, Scalar b) {
    Scalar r;
    if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
    return r;
  }
  static Scalar neg(Scalar a) {
    if (a == std::numeric_limits<Scalar>::min()) throw Overflow{};
    return -a;
  }
  static void cancel(Scalar& a, Scalar& b) {
    if (a == std::numeric_limits<Scalar>::min() || b == std::numeric_limits<Scalar>::min())
      throw Overflow{};
    Scalar g = std::gcd(a, b);
    a /= g;
    b /= g;
    if (a < 0) {
      a = -a;
      b = -b;
    }
  }
  static void make_primitive(std::vector<Scalar>& vals) {
    Scalar g = 0;
    for (auto v : vals) {
      if (v == std::numeric_limits<Scalar>::min()) throw Overflow{};
      g = std::gcd(g, v);
      if (g == 1) break;
    }
    if (vals.front() < 0) g = -g;
    if (g != 1)
      for (auto& v : vals) v /= g;
  }
  static Rational to_rational(Scalar v) { return Rational(static_cast<long>(v)); }
};

struct BigInt {
  using Scalar = mpz_class;
  static Scalar from(std::int32_t v) { return Scalar(v); }
  static bool is_zero(const Scalar& v) { return sgn(v) == 0; }
  static bool is_one(const Scalar& v) { return v == 1; }
  static Scalar mul(const Scalar& a, const Scalar& b) { return a * b; }
  static Scalar sub(const Scalar& a, const Scalar& b) { return a - b; }
  static Scalar neg(const Scalar& a) { return -a; }
  static void cancel(Scalar& a, Scalar& b) {
    Scalar g = gcd(a, b);
    a /= g;
    b /= g;
    if (sgn(a) < 0) {
      a = -a;
      b = -b;
    }
  }
  static void make_primitive(std::vector<Scalar>& vals) {
    Scalar g = 0;
    for (const auto& v : vals) {
      g = gcd(g, v);
      if (g == 1) break;
    }
    if (sgn(vals.front()) < 0) g = -g;
    if (g != 1)
      for (auto& v : vals) v /= g;
  }
  static Rational to_rational(const Scalar& v) { return Rational(v); }
};

struct ModPrime {
  using Scalar = std::uint32_t;
  static constexpr std::uint64_t P = kPrescreenPrime;
  static Scalar from(std::int32_t v) {
    std::int64_t r = v % static_cast<std::int64_t>(P);
    return static_cast<Scalar>(r < 0 ? r + P : r);
  }
  static bool is_zero(Scalar v) { return v == 0; }
  static bool is_one(Scalar v) { return v == 1; }
  static Scalar mul(Scalar a, Scalar b) { return static_cast<Scalar>(std::uint64_t{a} * b % P); }
  static Scalar sub(Scalar a, Scalar b) { return a >= b ? a - b : static_cast<Scalar>(a + P - b); }
  static Scalar neg(Scalar a) { return a == 0 ? 0 : static_cast<Scalar>(P - a); }
  static Scalar inverse(Scalar a) {
    std::uint64_t result = 1, base = a, e = P - 2;
    while (e) {
      if (e & 1) result = result * base % P;
      base = base * base % P;
      e >>= 1;
    }
    return static_cast<Scalar>(result);
  }
  // Pivots are monic, so a == 1 already.
  static void cancel(Scalar&, Scalar&) {}
  static void make_primitive(std::vector<Scalar>& vals) {
    Scalar inv = inverse(vals.front());
    for (auto& v : vals) v = mul(v, inv);
  }
};

template <class T>
struct Row {
  std::vector<std::uint32_t> cols;
  std::vector<typename T::Scalar> vals;
  bool empty() const { return cols.empty(); }
  void clear() {
    cols.clear();
    vals.clear();
  }
};

template <class T>
class Echelon {
 public:
  explicit Echelon(std::uint32_t num_columns) : pivot_of_(num_columns, -1) {}

  std::uint32_t rank() const { return static_cast<std::uint32_t>(rows_.size()); }
  const std::vector<Row<T>>& rows() const { return rows_; }
  std::int32_t pivot_of(std::uint32_t c) const { return pivot_of_[c]; }

  /// Returns true when the row enlarged the span.
  bool insert(Row<T>& row) {
    reduce(row);
    if (row.empty()) return false;
    T::make_primitive(row.vals);
    pivot_of_[row.cols.front()] = static_cast<std::int32_t>(rows_.size());
    rows_.push_back(std::move(row));
    return true;
  }

 private:
  void reduce(Row<T>& w) {
    while (!w.empty()) {
      std::int32_t pi = pivot_of_[w.cols.front()];
      if (pi < 0) return;
      combine(w, rows_[pi]);
    }
  }

  // w <- a w - b P, with a, b chosen to cancel the shared leading column.
  void combine(Row<T>& w, const Row<T>& pivot) {
    using S = typename T::Scalar;
    S a = pivot.vals.front();
    S b = w.vals.front();
    T::cancel(a, b);
    const bool a_one = T::is_one(a);
    scratch_.clear();
    std::size_t i = 1, j = 1;
    const std::size_t wn = w.cols.size(), pn = pivot.cols.size();
    while (i < wn || j < pn) {
      if (j == pn || (i < wn && w.cols[i] < pivot.cols[j])) {
        scratch_.cols.push_back(w.cols[i]);
        scratch_.vals.push_back(a_one ? w.vals[i] : T::mul(a, w.vals[i]));
        ++i;
      } else if (i == wn || pivot.cols[j] < w.cols[i]) {
        scratch_.cols.push_back(pivot.cols[j]);
        scratch_.vals.push_back(T::neg(T::mul(b, pivot.vals[j])));
        ++j;
      } else {
        S v = T::sub(a_one ? w.vals[i] : T::mul(a, w.vals[i]), T::mul(b, pivot.vals[j]));
        if (!T::is_zero(v)) {
          scratch_.cols.push_back(w.cols[i]);
          scratch_.vals.push_back(std::move(v));
        }
        ++i;
        ++j;
      }
    }
    std::swap(w, scratch_);
    if (!a_one && !w.empty()) T::make_primitive(w.vals);
  }

  std::vector<std::int32_t> pivot_of_;
  std::vector<Row<T>> rows_;
  Row<T> scratch_;
};

template <class T>
Row<T> load_row(const BlockProblem& b, std::size_t r) {
  Row<T> row;
  for (std::uint32_t k = b.offsets[r]; k < b.offsets[r + 1]; ++k) {
    row.cols.push_back(b.cols[k]);
    row.vals.push_back(T::from(b.coefs[k]));
  }
  return row;
}

template <class T>
Echelon<T> run_echelon(const BlockProblem& b, const std::vector<std::size_t>& order,
                       std::uint32_t max_rank, std::vector<std::size_t>* independent = nullptr) {
  Echelon<T> e(b.num_columns);
  for (std::size_t r : order) {
    if (e.rank() == max_rank) break;
    Row<T> row = load_row<T>(b, r);
    if (e.insert(row) && independent) independent->push_back(r);
  }
  return e;
}

template <class T>
BlockResult finish(const BlockProblem& b, const Echelon<T>& e, const std::vector<char>& killed,
                   bool keep_echelon) {
  BlockResult out;
  const std::uint32_t m = b.num_columns;
  out.rank = e.rank() + static_cast<std::uint32_t>(std::count(killed.begin(), killed.end(), 1));
  std::vector<std::int32_t> std_index(m, -1);
  for (std::uint32_t c = 0; c < m; ++c)
    if (e.pivot_of(c) < 0 && !killed[c]) {
      std_index[c] = static_cast<std::int32_t>(out.standard.size());
      out.standard.push_back(c);
    }

  if (keep_echelon) {
    for (std::uint32_t c = 0; c < m; ++c)
      if (killed[c]) out.echelon.push_back({{c}, {mpz_class(1)}});
    for (const auto& row : e.rows()) {
      EchelonRow er;
      er.cols = row.cols;
      for (const auto& v : row.vals) er.vals.emplace_back(T::to_rational(v).get_num());
      out.echelon.push_back(std::move(er));
    }
    std::sort(out.echelon.begin(), out.echelon.end(),
              [](const EchelonRow& x, const EchelonRow& y) { return x.cols.front() < y.cols.front(); });
  }

  out.nf_offsets.assign(m + 1, 0);
  if (out.standard.empty()) return out;

  // Back-substitution from the last pivot column: every non-leading entry of
  // a pivot row sits in a later column, whose normal form is already known.
  std::vector<std::vector<NormalFormEntry>> nf(m);
  std::vector<Rational> acc(out.standard.size());
  std::vector<char> touched_flag(out.standard.size(), 0);
  std::vector<std::uint32_t> touched;
  for (std::uint32_t c = 0; c < m; ++c)
    if (std_index[c] >= 0) nf[c].push_back({static_cast<std::uint32_t>(std_index[c]), 1});
  Rational coef;
  for (std::int64_t c = static_cast<std::int64_t>(m) - 1; c >= 0; --c) {
    std::int32_t pi = e.pivot_of(static_cast<std::uint32_t>(c));
    if (pi < 0) continue;
    const auto& row = e.rows()[pi];
    for (std::size_t k = 1; k < row.cols.size(); ++k) {
      const auto& sub = nf[row.cols[k]];
      if (sub.empty()) continue;
      coef = T::to_rational(row.vals[k]);
      for (const auto& entry : sub) {
        if (!touched_flag[entry.index]) {
          touched_flag[entry.index] = 1;
          touched.push_back(entry.index);
          acc[entry.index] = 0;
        }
        acc[entry.index] += coef * entry.value;
      }
    }
    if (touched.empty()) continue;
    std::sort(touched.begin(), touched.end());
    Rational scale = -1 / T::to_rational(row.vals.front());
    auto& dest = nf[static_cast<std::size_t>(c)];
    for (auto idx : touched) {
      if (acc[idx] != 0) dest.push_back({idx, acc[idx] * scale});
      touched_flag[idx] = 0;
    }
    touched.clear();
  }
  for (std::uint32_t c = 0; c < m; ++c)
    out.nf_offsets[c + 1] = out.nf_offsets[c] + static_cast<std::uint32_t>(nf[c].size());
  out.nf_entries.reserve(out.nf_offsets[m]);
  for (auto& list : nf)
    for (auto& entry : list) out.nf_entries.push_back(std::move(entry));
  return out;
}

// Rows with a single live entry kill their column outright; removing that
// column can leave further rows with one live entry. The survivors, restricted
// to live columns, span the rest of the row space modulo the killed unit vectors.
BlockProblem peel_singletons(const BlockProblem& b, std::vector<char>& killed) {
  const std::uint32_t m = b.num_columns;
  const std::size_t rows = b.num_rows();
  killed.assign(m, 0);
  std::vector<std::uint32_t> col_start(m + 1, 0);
  for (auto c : b.cols) ++col_start[c + 1];
  for (std::uint32_t c = 0; c < m; ++c) col_start[c + 1] += col_start[c];
  std::vector<std::uint32_t> col_rows(b.cols.size());
  {
    std::vector<std::uint32_t> fill(col_start.begin(), col_start.end() - 1);
    for (std::size_t r = 0; r < rows; ++r)
      for (auto k = b.offsets[r]; k < b.offsets[r + 1]; ++k) col_rows[fill[b.cols[k]]++] = static_cast<std::uint32_t>(r);
  }
  std::vector<std::uint32_t> live(rows);
  std::vector<std::uint32_t> queue;
  for (std::size_t r = 0; r < rows; ++r) {
    live[r] = b.offsets[r + 1] - b.offsets[r];
    if (live[r] == 1) queue.push_back(static_cast<std::uint32_t>(r));
  }
  while (!queue.empty()) {
    const auto r = queue.back();
    queue.pop_back();
    if (live[r] != 1) continue;
    std::uint32_t c = m;
    for (auto k = b.offsets[r]; k < b.offsets[r + 1]; ++k)
      if (!killed[b.cols[k]]) c = b.cols[k];
    if (c == m) continue;
    killed[c] = 1;
    for (auto k = col_start[c]; k < col_start[c + 1]; ++k)
      if (--live[col_rows[k]] == 1) queue.push_back(col_rows[k]);
  }
  BlockProblem reduced;
  reduced.num_columns = m;
  for (std::size_t r = 0; r < rows; ++r) {
    if (live[r] < 2) continue;
    for (auto k = b.offsets[r]; k < b.offsets[r + 1]; ++k)
      if (!killed[b.cols[k]]) {
        reduced.cols.push_back(b.cols[k]);
        reduced.coefs.push_back(b.coefs[k]);
      }
    reduced.offsets.push_back(static_cast<std::uint32_t>(reduced.cols.size()));
  }
  return reduced;
}

std::vector<std::size_t> natural_order(const BlockProblem& b) {
  std::vector<std::size_t> order(b.num_rows());
  std::iota(order.begin(), order.end(), 0);
  return order;
}

}  // namespace

std::uint32_t modular_rank(const BlockProblem& block) {
  return run_echelon<ModPrime>(block, natural_order(block), block.num_columns).rank();
}

BlockResult eliminate_block(const BlockProblem& input, const EliminationOptions& opts) {
  std::vector<char> killed;
  const BlockProblem block = peel_singletons(input, killed);
  const auto num_killed = static_cast<std::uint32_t>(std::count(killed.begin(), killed.end(), 1));
  const std::uint32_t max_rank = block.num_columns - num_killed;
  std::vector<std::size_t> order = natural_order(block);
  std::int64_t mod_rank = -1;
  if (opts.modular_prescreen) {
    // Rows independent mod p are independent over Q; feeding them first gives
    // the exact pass its pivots early. The exact pass still sees every row.
    std::vector<std::size_t> independent;
    mod_rank = num_killed + run_echelon<ModPrime>(block, order, max_rank, &independent).rank();
    std::vector<char> seen(block.num_rows(), 0);
    for (auto r : independent) seen[r] = 1;
    std::vector<std::size_t> reordered = independent;
    for (auto r : order)
      if (!seen[r]) reordered.push_back(r);
    order = std::move(reordered);
  }
  BlockResult result;
  try {
    result = finish(block, run_echelon<SmallInt>(block, order, max_rank), killed, opts.keep_echelon);
  } catch (const Overflow&) {
    result = finish(block, run_echelon<BigInt>(block, order, max_rank), killed, opts.keep_echelon);
  }
  result.modular_rank = mod_rank;
  return result;
}

std::vector<BlockResult> eliminate_blocks(const std::vector<BlockProblem>& blocks,
                                          const EliminationOptions& opts) {
  std::vector<BlockResult> results(blocks.size());
  std::exception_ptr failure;
  const int threads = std::max(1, opts.workers);
  const auto count = static_cast<std::int64_t>(blocks.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
  for (std::int64_t i = 0; i < count; ++i) {
    try {
      results[i] = eliminate_block(blocks[i], opts);
    } catch (...) {
#pragma omp critical(confspace_elim_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return results;
}

}  // namespace confspace
