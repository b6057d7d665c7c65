#pragma once

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <vector>

#include "kirby4/integer.hpp"

namespace kirby4 {

using IntVector = std::vector<Integer>;

// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<std::vector<long>>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  IntMatrix transposed() const;
  IntVector column(std::size_t j) const;
  IntVector row(std::size_t i) const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  // row[dst] += factor * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor);
  void add_col_multiple(std::size_t dst, std::size_t src, const Integer& factor);

  IntMatrix operator-() const;
  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntVector operator*(const IntMatrix& a, const IntVector& x);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b);
  friend bool operator!=(const IntMatrix& a, const IntMatrix& b) { return !(a == b); }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

// Exact determinant by fraction-free (Bareiss) elimination.
Integer determinant(const IntMatrix& m);

// Inverse of a matrix with determinant +-1; throws NotUnimodular otherwise.
IntMatrix unimodular_inverse(const IntMatrix& m);

// Integral symmetric square matrix. The class invariant is checked on
// construction, so every SymIntMatrix in the program is symmetric.
class SymIntMatrix {
 public:
  SymIntMatrix() = default;
  explicit SymIntMatrix(IntMatrix m);
  SymIntMatrix(std::initializer_list<std::initializer_list<long>> rows)
      : SymIntMatrix(IntMatrix(rows)) {}

  static SymIntMatrix identity(std::size_t n) { return SymIntMatrix(IntMatrix::identity(n)); }
  static SymIntMatrix diagonal(const std::vector<long>& d);

  std::size_t size() const noexcept { return m_.rows(); }
  const Integer& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
  const IntMatrix& matrix() const noexcept { return m_; }

  SymIntMatrix operator-() const { return SymIntMatrix(-m_); }
  friend bool operator==(const SymIntMatrix& a, const SymIntMatrix& b) { return a.m_ == b.m_; }
  friend bool operator!=(const SymIntMatrix& a, const SymIntMatrix& b) { return !(a == b); }

  // x^T V y
  Integer bilinear(const IntVector& x, const IntVector& y) const;
  // A^T V A
  SymIntMatrix congruent_by(const IntMatrix& a) const;

 private:
  IntMatrix m_;
};

inline std::ostream& operator<<(std::ostream& os, const SymIntMatrix& m) {
  return os << m.matrix();
}

SymIntMatrix direct_sum(const SymIntMatrix& a, const SymIntMatrix& b);

// The E8 lattice as the Cartan matrix of the E8 Dynkin diagram: chain
// 0-1-2-3-4-5-6 with node 7 attached to node 4, +2 on the diagonal.
SymIntMatrix e8_form();

}  // namespace kirby4
