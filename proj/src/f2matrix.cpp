#include "inv/f2matrix.hpp"

namespace inv {

int rank(BitMatrix m) {
  const std::size_t r = m.rows();
  int rk = 0;
  std::size_t next = 0;
  // Eliminate in column order; within a column pick the first remaining row.
  for (std::size_t col = 0; col < m.cols() && next < r; ++col) {
    std::size_t piv = next;
    while (piv < r && !m.at(piv, col)) ++piv;
    if (piv == r) continue;
    std::swap(m.row(piv), m.row(next));
    for (std::size_t i = 0; i < r; ++i)
      if (i != next && m.at(i, col)) m.row(i) ^= m.row(next);
    ++next;
    ++rk;
  }
  return rk;
}

int rank(const SymMatrixF2& m) { return rank(m.to_matrix()); }

std::vector<int> leading_nullities(const SymMatrixF2& m) {
  const std::size_t n = m.n();
  std::vector<int> out(n);
  for (std::size_t i = 1; i <= n; ++i) {
    BitMatrix lead(i, i);
    for (std::size_t a = 0; a < i; ++a)
      for (std::size_t b = 0; b < i; ++b)
        if (m.at(a, b)) lead.set(a, b);
    out[i - 1] = static_cast<int>(i) - rank(std::move(lead));
  }
  return out;
}

}  // namespace inv
