#include "chern/linalg.hpp"

#include <algorithm>

namespace chern {

std::optional<std::vector<Rat>> solve_linear_system(std::vector<std::vector<Rat>> rows,
                                                    std::vector<Rat> rhs,
                                                    Pivoting pivoting) {
  const size_t n_rows = rows.size();
  const size_t n_cols = n_rows == 0 ? 0 : rows[0].size();

  std::vector<size_t> col_order(n_cols);
  for (size_t j = 0; j < n_cols; ++j)
    col_order[j] = pivoting == Pivoting::FirstFeasible ? j : n_cols - 1 - j;

  std::vector<size_t> pivot_col_of_row;
  size_t r = 0;
  for (size_t oj = 0; oj < n_cols && r < n_rows; ++oj) {
    const size_t j = col_order[oj];
    size_t p = r;
    while (p < n_rows && rows[p][j] == 0) ++p;
    if (p == n_rows) continue;
    std::swap(rows[p], rows[r]);
    std::swap(rhs[p], rhs[r]);
    const Rat inv = 1 / rows[r][j];
    for (size_t c = 0; c < n_cols; ++c) rows[r][c] *= inv;
    rhs[r] *= inv;
    for (size_t i = 0; i < n_rows; ++i) {
      if (i == r || rows[i][j] == 0) continue;
      const Rat factor = rows[i][j];
      for (size_t c = 0; c < n_cols; ++c) rows[i][c] -= factor * rows[r][c];
      rhs[i] -= factor * rhs[r];
    }
    pivot_col_of_row.push_back(j);
    ++r;
  }
  for (size_t i = r; i < n_rows; ++i)
    if (rhs[i] != 0) return std::nullopt;

  std::vector<Rat> x(n_cols, Rat(0));
  for (size_t i = 0; i < r; ++i) x[pivot_col_of_row[i]] = rhs[i];
  return x;
}

std::optional<std::vector<Rat>> express_in_span(const std::vector<std::vector<Rat>>& vectors,
                                                const std::vector<Rat>& target) {
  const size_t dim = target.size();
  std::vector<std::vector<Rat>> rows(dim, std::vector<Rat>(vectors.size(), Rat(0)));
  for (size_t j = 0; j < vectors.size(); ++j)
    for (size_t i = 0; i < dim; ++i) rows[i][j] = vectors[j][i];
  return solve_linear_system(std::move(rows), target);
}

}  // namespace chern
