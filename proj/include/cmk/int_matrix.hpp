#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "cmk/errors.hpp"

namespace cmk {

using Int = boost::multiprecision::cpp_int;

// Dense integer matrix with arbitrary-precision entries. Empty matrices
// are rejected: every operation below assumes rows >= 1 and cols >= 1.
class IntMatrix {
 public:
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);
  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Int& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  IntMatrix operator*(const IntMatrix& o) const;
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

  void swap_rows(std::size_t i, std::size_t j);
  void swap_cols(std::size_t i, std::size_t j);
  void add_row_multiple(std::size_t dst, std::size_t src, const Int& factor);
  void add_col_multiple(std::size_t dst, std::size_t src, const Int& factor);
  void negate_row(std::size_t i);

  // Rows joined by '\n', entries space separated and right-aligned to the
  // widest entry of the matrix.
  std::string to_string() const;

 private:
  std::size_t rows_, cols_;
  std::vector<Int> a_;
};

// u * m * v = d with u, v unimodular and d diagonal, nonnegative,
// d(0,0) | d(1,1) | ...
struct SmithDecomposition {
  IntMatrix u, d, v;
};

// A finitely generated abelian group in invariant-factor form:
// Z^free_rank + Z/d1 + ... + Z/ds with d1 | d2 | ... and every di >= 2.
struct AbelianGroup {
  std::size_t free_rank = 0;
  std::vector<Int> torsion;

  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;
  std::string to_string() const;
};

// Smallest-|pivot| Smith normal form with deterministic lowest-(row,col)
// tie-break, so outputs are reproducible.
SmithDecomposition smith_normal_form(const IntMatrix& m);

// Z^rows / im(m), with m read as a map Z^cols -> Z^rows.
AbelianGroup cokernel(const IntMatrix& m);

// True iff rank(m) == cols.
bool is_injective(const IntMatrix& m);

std::size_t rank(const IntMatrix& m);

}  // namespace cmk
