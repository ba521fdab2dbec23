#include "cmk/int_matrix.hpp"

#include <algorithm>
#include <sstream>

namespace cmk {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), a_(rows * cols) {
  if (rows == 0 || cols == 0)
    throw input_error("empty matrices are rejected (got " +
                      std::to_string(rows) + "x" + std::to_string(cols) + ")");
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : IntMatrix(rows.size(), rows.size() ? rows.begin()->size() : 0) {
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != cols_) throw input_error("ragged matrix initializer");
    std::size_t j = 0;
    for (long v : row) at(i, j++) = v;
    ++i;
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  if (cols_ != o.rows_) throw input_error("matrix product shape mismatch");
  IntMatrix r(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Int& aik = at(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, j) += aik * o.at(k, j);
    }
  return r;
}

void IntMatrix::swap_rows(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t k = 0; k < cols_; ++k) std::swap(at(i, k), at(j, k));
}

void IntMatrix::swap_cols(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t k = 0; k < rows_; ++k) std::swap(at(k, i), at(k, j));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src,
                                 const Int& factor) {
  for (std::size_t k = 0; k < cols_; ++k) at(dst, k) += factor * at(src, k);
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src,
                                 const Int& factor) {
  for (std::size_t k = 0; k < rows_; ++k) at(k, dst) += factor * at(k, src);
}

void IntMatrix::negate_row(std::size_t i) {
  for (std::size_t k = 0; k < cols_; ++k) at(i, k) = -at(i, k);
}

std::string IntMatrix::to_string() const {
  std::size_t width = 1;
  for (const Int& v : a_) width = std::max(width, v.str().size());
  std::ostringstream out;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      std::string s = at(i, j).str();
      if (j) out << ' ';
      out << std::string(width - s.size(), ' ') << s;
    }
    if (i + 1 < rows_) out << '\n';
  }
  return out.str();
}

std::string AbelianGroup::to_string() const {
  if (free_rank == 0 && torsion.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  if (free_rank > 0) {
    out << (free_rank == 1 ? "Z" : "Z^" + std::to_string(free_rank));
    first = false;
  }
  for (const Int& d : torsion) {
    if (!first) out << " + ";
    out << "Z/" << d.str();
    first = false;
  }
  return out.str();
}

namespace {

// Locate the smallest nonzero |entry| in the trailing submatrix starting at
// (k, k); ties break at the lowest (row, col) in row-major order. Returns
// false when the submatrix is zero.
bool find_pivot(const IntMatrix& d, std::size_t k, std::size_t& pi,
                std::size_t& pj) {
  bool found = false;
  Int best;
  for (std::size_t i = k; i < d.rows(); ++i)
    for (std::size_t j = k; j < d.cols(); ++j) {
      const Int& v = d.at(i, j);
      if (v == 0) continue;
      Int a = abs(v);
      if (!found || a < best) {
        found = true;
        best = a;
        pi = i;
        pj = j;
      }
    }
  return found;
}

bool cleared_cross(const IntMatrix& d, std::size_t k) {
  for (std::size_t i = k + 1; i < d.rows(); ++i)
    if (d.at(i, k) != 0) return false;
  for (std::size_t j = k + 1; j < d.cols(); ++j)
    if (d.at(k, j) != 0) return false;
  return true;
}

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  SmithDecomposition s{IntMatrix::identity(rows), m, IntMatrix::identity(cols)};
  IntMatrix& d = s.d;
  const std::size_t steps = std::min(rows, cols);

  for (std::size_t k = 0; k < steps; ++k) {
    for (;;) {
      std::size_t pi = k, pj = k;
      if (!find_pivot(d, k, pi, pj)) break;
      d.swap_rows(k, pi);
      s.u.swap_rows(k, pi);
      d.swap_cols(k, pj);
      s.v.swap_cols(k, pj);

      for (std::size_t i = k + 1; i < rows; ++i) {
        if (d.at(i, k) == 0) continue;
        Int q = d.at(i, k) / d.at(k, k);
        d.add_row_multiple(i, k, -q);
        s.u.add_row_multiple(i, k, -q);
      }
      for (std::size_t j = k + 1; j < cols; ++j) {
        if (d.at(k, j) == 0) continue;
        Int q = d.at(k, j) / d.at(k, k);
        d.add_col_multiple(j, k, -q);
        s.v.add_col_multiple(j, k, -q);
      }
      if (!cleared_cross(d, k)) continue;

      // Invariant-factor condition: the pivot must divide every entry of
      // the trailing block. Fold an offending row in and keep reducing.
      bool divides = true;
      for (std::size_t i = k + 1; i < rows && divides; ++i)
        for (std::size_t j = k + 1; j < cols; ++j)
          if (d.at(i, j) % d.at(k, k) != 0) {
            d.add_row_multiple(k, i, 1);
            s.u.add_row_multiple(k, i, 1);
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (d.at(k, k) < 0) {
      d.negate_row(k);
      s.u.negate_row(k);
    }
  }
  return s;
}

std::size_t rank(const IntMatrix& m) {
  const IntMatrix d = smith_normal_form(m).d;
  std::size_t r = 0;
  for (std::size_t k = 0; k < std::min(d.rows(), d.cols()); ++k)
    if (d.at(k, k) != 0) ++r;
  return r;
}

bool is_injective(const IntMatrix& m) { return rank(m) == m.cols(); }

AbelianGroup cokernel(const IntMatrix& m) {
  const IntMatrix d = smith_normal_form(m).d;
  AbelianGroup g;
  std::size_t r = 0;
  for (std::size_t k = 0; k < std::min(d.rows(), d.cols()); ++k) {
    const Int& v = d.at(k, k);
    if (v == 0) continue;
    ++r;
    if (v > 1) g.torsion.push_back(v);
  }
  g.free_rank = m.rows() - r;
  return g;
}

}  // namespace cmk
