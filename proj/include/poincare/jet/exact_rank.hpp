#pragma once

#include <utility>
#include <vector>

#include "poincare/rational.hpp"

namespace poincare::jet {

/// Rank over Q. Rows are scaled to integers, then reduced by fraction-free
/// (Bareiss) elimination, so every intermediate entry stays an exact minor.
inline int exact_rank(const std::vector<std::vector<Rational>>& rows) {
  if (rows.empty()) return 0;
  const std::size_t ncols = rows.front().size();
  std::vector<std::vector<Integer>> a;
  a.reserve(rows.size());
  for (const auto& r : rows) {
    if (r.size() != ncols) throw Error(Errc::unsupported_argument, "ragged matrix");
    Integer l = 1;
    for (const auto& v : r) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
    std::vector<Integer> ir;
    ir.reserve(ncols);
    bool nonzero = false;
    for (const auto& v : r) {
      ir.emplace_back(v.get_num() * (l / v.get_den()));
      nonzero = nonzero || ir.back() != 0;
    }
    if (nonzero) a.push_back(std::move(ir));
  }
  const std::size_t m = a.size();
  Integer prev = 1;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < ncols && rank < m; ++col) {
    std::size_t piv = rank;
    while (piv < m && a[piv][col] == 0) ++piv;
    if (piv == m) continue;
    std::swap(a[piv], a[rank]);
    for (std::size_t i = rank + 1; i < m; ++i) {
      for (std::size_t j = col + 1; j < ncols; ++j) {
        Integer t = a[rank][col] * a[i][j] - a[i][col] * a[rank][j];
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        a[i][j] = std::move(t);
      }
      a[i][col] = 0;
    }
    prev = a[rank][col];
    ++rank;
  }
  return static_cast<int>(rank);
}

}  // namespace poincare::jet
