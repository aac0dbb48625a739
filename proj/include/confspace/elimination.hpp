#ifndef CONFSPACE_ELIMINATION_HPP
#define CONFSPACE_ELIMINATION_HPP

#include <cstdint>
#include <span>
#include <vector>

#include <gmpxx.h>

namespace confspace {

using Rational = mpq_class;

/// Sparse rows with small integer coefficients over a block of columns.
/// Row r occupies [offsets[r], offsets[r+1]) of cols/coefs; columns sorted.
struct BlockProblem {
  std::uint32_t num_columns = 0;
  std::vector<std::uint32_t> offsets{0};
  std::vector<std::uint32_t> cols;
  std::vector<std::int32_t> coefs;

  std::size_t num_rows() const { return offsets.size() - 1; }
  /// Append a row given unsorted (column, coefficient) terms; duplicates are summed.
  void add_row(std::span<std::pair<std::uint32_t, std::int32_t>> terms);
};

/// Integer echelon row: leading entry first.
struct EchelonRow {
  std::vector<std::uint32_t> cols;
  std::vector<mpz_class> vals;
};

struct NormalFormEntry {
  std::uint32_t index;  // position among the block's standard columns
  Rational value;
};

struct BlockResult {
  std::uint32_t rank = 0;
  /// Rank modulo the prescreen prime, when requested (else -1).
  std::int64_t modular_rank = -1;
  /// Columns without a pivot, ascending. These index the quotient.
  std::vector<std::uint32_t> standard;
  /// Normal form of column c is nf_entries[nf_offsets[c] .. nf_offsets[c+1]).
  std::vector<std::uint32_t> nf_offsets;
  std::vector<NormalFormEntry> nf_entries;
  /// Echelon basis of the row span (only when requested).
  std::vector<EchelonRow> echelon;
};

struct EliminationOptions {
  int workers = 1;
  bool modular_prescreen = false;
  bool keep_echelon = false;
};

/// Exact rank, standard columns and normal forms of one block.
/// Uses checked 64-bit arithmetic and falls back to GMP on overflow.
BlockResult eliminate_block(const BlockProblem& block, const EliminationOptions& opts);

/// Blocks are independent; they are processed in parallel (OpenMP), at most
/// opts.workers threads.
std::vector<BlockResult> eliminate_blocks(const std::vector<BlockProblem>& blocks,
                                          const EliminationOptions& opts);

/// Rank of the block modulo a word-size prime.
std::uint32_t modular_rank(const BlockProblem& block);

inline constexpr std::uint32_t kPrescreenPrime = 2147483647u;  // 2^31 - 1

}  // namespace confspace

#endif  // CONFSPACE_ELIMINATION_HPP
