#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace gbt {

/// Column-major sparse integer matrix; each column is sorted by row index
/// and holds no zeros.
struct SparseMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::vector<std::pair<std::uint32_t, int>>> columns;

  std::size_t nonzeros() const;
};

struct RankResult {
  std::size_t rank = 0;
  /// True when 64-bit arithmetic overflowed and the elimination was redone
  /// with arbitrary-precision integers.
  bool arbitrary_precision = false;
};

/// Rank over the rationals by fraction-free sparse elimination: pivots are
/// chosen on the sparsest live row, preferring unit entries, and combined
/// vectors are divided by their content. Exact.
RankResult exact_rank(const SparseMatrix& m);

/// Same elimination with arbitrary-precision integers from the start.
std::size_t exact_rank_bigint(const SparseMatrix& m);

/// Rank over Z/p. Never exceeds the rational rank; equality is typical but
/// not guaranteed, so this is only a preview.
std::size_t rank_mod_p(const SparseMatrix& m, std::uint32_t p = 2147483647u);

/// A * B for matching inner dimension, dropping zeros.
SparseMatrix multiply(const SparseMatrix& a, const SparseMatrix& b);

}  // namespace gbt
