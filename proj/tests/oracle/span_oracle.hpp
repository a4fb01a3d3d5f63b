#pragma once

// Brute-force ideal dimensions: the span of every composite v o u of basis morphisms
// i -> t -> j through a member indecomposable t, read straight off the composition table.

#include <gmpxx.h>

#include <vector>

#include "nang/category.hpp"

namespace oracle {

inline int rank_of(std::vector<std::vector<mpq_class>> rows) {
  int rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
    std::size_t piv = static_cast<std::size_t>(rank);
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[static_cast<std::size_t>(rank)]);
    auto& pr = rows[static_cast<std::size_t>(rank)];
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == static_cast<std::size_t>(rank) || rows[r][c] == 0) continue;
      mpq_class f = rows[r][c] / pr[c];
      for (std::size_t k = c; k < cols; ++k) rows[r][k] -= f * pr[k];
    }
    ++rank;
  }
  return rank;
}

inline int ideal_dim(const nang::CategoryPresentation& c, const std::vector<int>& members, int i, int j) {
  const int d = c.dim(i, j);
  std::vector<std::vector<mpq_class>> rows;
  for (int t : members)
    for (int a = 0; a < c.dim(i, t); ++a)
      for (int b = 0; b < c.dim(t, j); ++b) {
        std::vector<mpq_class> v(static_cast<std::size_t>(d), 0);
        for (const auto& e : c.comp(i, t, j))
          if (e.a == a && e.b == b) v[static_cast<std::size_t>(e.c)] += e.coef;
        rows.push_back(v);
      }
  return rank_of(rows);
}

}  // namespace oracle
