#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "fvlat/error.hpp"
#include "fvlat/rational.hpp"

namespace fvlat {

/// Rank of a small rational matrix, by exact row reduction.
inline std::size_t matrix_rank(std::vector<std::vector<Rational>> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  for (const auto& row : rows)
    if (row.size() != cols) throw DomainError("ragged matrix");

  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][col] == 0) continue;
      const Rational factor = rows[r][col] / rows[rank][col];
      for (std::size_t c = col; c < cols; ++c)
        rows[r][c] -= factor * rows[rank][c];
    }
    ++rank;
  }
  return rank;
}

/// Solves sum_j x_j * columns[j] = rhs exactly. Returns one solution with
/// free variables at zero, or nullopt when the system is inconsistent.
inline std::optional<std::vector<Rational>> solve_columns(
    const std::vector<std::vector<Rational>>& columns,
    const std::vector<Rational>& rhs) {
  const std::size_t k = columns.size();
  const std::size_t m = rhs.size();
  for (const auto& col : columns)
    if (col.size() != m) throw DomainError("column length mismatch");

  // Augmented matrix [A | rhs], A laid out m x k.
  std::vector<std::vector<Rational>> rows(m, std::vector<Rational>(k + 1, 0));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < k; ++j) rows[i][j] = columns[j][i];
    rows[i][k] = rhs[i];
  }

  std::vector<std::size_t> pivot_col;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < k && rank < m; ++col) {
    std::size_t pivot = rank;
    while (pivot < m && rows[pivot][col] == 0) ++pivot;
    if (pivot == m) continue;
    std::swap(rows[rank], rows[pivot]);
    const Rational lead = rows[rank][col];
    for (std::size_t c = col; c <= k; ++c) rows[rank][c] /= lead;
    for (std::size_t r = 0; r < m; ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      const Rational factor = rows[r][col];
      for (std::size_t c = col; c <= k; ++c)
        rows[r][c] -= factor * rows[rank][c];
    }
    pivot_col.push_back(col);
    ++rank;
  }

  for (std::size_t r = rank; r < m; ++r)
    if (rows[r][k] != 0) return std::nullopt;

  std::vector<Rational> solution(k, 0);
  for (std::size_t r = 0; r < rank; ++r) solution[pivot_col[r]] = rows[r][k];
  return solution;
}

}  // namespace fvlat
