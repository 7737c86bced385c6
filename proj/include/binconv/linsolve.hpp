#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace binconv {

template <class Field>
struct LinearSolution {
  /// One solution (free variables set to zero), or empty when inconsistent.
  std::optional<std::vector<Field>> values;
  std::size_t rank = 0;
};

/// Solves a * v = b over an exact field by Gauss-Jordan elimination.
/// `Field` needs value-initialisation to zero, + - * /, and an `is_zero`
/// overload found by ADL.
template <class Field>
LinearSolution<Field> solve_linear(std::vector<std::vector<Field>> a, std::vector<Field> b) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a.front().size();
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && is_zero(a[p][c])) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    std::swap(b[p], b[r]);
    const Field inv_pivot = Field(1) / a[r][c];
    for (std::size_t j = c; j < cols; ++j) a[r][j] = a[r][j] * inv_pivot;
    b[r] = b[r] * inv_pivot;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || is_zero(a[i][c])) continue;
      const Field f = a[i][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] = a[i][j] - f * a[r][j];
      b[i] = b[i] - f * b[r];
    }
    pivot_cols.push_back(c);
    ++r;
  }
  LinearSolution<Field> out;
  out.rank = r;
  for (std::size_t i = r; i < rows; ++i) {
    if (!is_zero(b[i])) return out;
  }
  std::vector<Field> v(cols);
  for (std::size_t i = 0; i < r; ++i) v[pivot_cols[i]] = b[i];
  out.values = std::move(v);
  return out;
}

}  // namespace binconv
