#pragma once

#include <cstddef>
#include <vector>

#include "inv/bitvec.hpp"

namespace inv {

// Dense row-major bit matrix over F_2.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, BitVec(cols)) {}

  static BitMatrix identity(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
    return m;
  }

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  BitVec& row(std::size_t i) { return rows_[i]; }
  const BitVec& row(std::size_t i) const { return rows_[i]; }
  bool at(std::size_t i, std::size_t j) const { return rows_[i].test(j); }
  void set(std::size_t i, std::size_t j, bool b = true) { rows_[i].set(j, b); }

  bool operator==(const BitMatrix&) const = default;

 private:
  std::size_t cols_ = 0;
  std::vector<BitVec> rows_;
};

// Row rank over F_2 by word-parallel Gaussian elimination; pivots on the
// lowest set bit of each remaining row.
int rank(BitMatrix m);

class SymMatrixBuilder;

// Symmetric n-by-n matrix over F_2. Stores the upper triangle plus diagonal,
// so symmetry holds by construction. Immutable once sealed.
class SymMatrixF2 {
 public:
  SymMatrixF2() = default;

  std::size_t n() const { return n_; }

  bool at(std::size_t i, std::size_t j) const {
    if (j < i) std::swap(i, j);
    return bits_.test(tri_index(i, j));
  }

  BitMatrix to_matrix() const {
    BitMatrix m(n_, n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = i; j < n_; ++j)
        if (at(i, j)) {
          m.set(i, j);
          m.set(j, i);
        }
    return m;
  }

  bool operator==(const SymMatrixF2&) const = default;

 private:
  friend class SymMatrixBuilder;
  SymMatrixF2(std::size_t n, BitVec bits) : n_(n), bits_(std::move(bits)) {}

  // row-major over i <= j
  std::size_t tri_index(std::size_t i, std::size_t j) const {
    return i * n_ - i * (i + 1) / 2 + j;
  }

  std::size_t n_ = 0;
  BitVec bits_;
};

// Single-owner builder; seal() produces the immutable matrix.
class SymMatrixBuilder {
 public:
  explicit SymMatrixBuilder(std::size_t n) : n_(n), bits_(n * (n + 1) / 2) {}

  void set(std::size_t i, std::size_t j, bool b = true) {
    if (j < i) std::swap(i, j);
    bits_.set(i * n_ - i * (i + 1) / 2 + j, b);
  }
  bool at(std::size_t i, std::size_t j) const {
    if (j < i) std::swap(i, j);
    return bits_.test(i * n_ - i * (i + 1) / 2 + j);
  }
  std::size_t n() const { return n_; }

  SymMatrixF2 seal() && { return SymMatrixF2(n_, std::move(bits_)); }

 private:
  std::size_t n_;
  BitVec bits_;
};

int rank(const SymMatrixF2& m);

// Nullities of the leading principal i-by-i submatrices, i = 1..n.
std::vector<int> leading_nullities(const SymMatrixF2& m);

}  // namespace inv
