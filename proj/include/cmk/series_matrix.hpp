#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "cmk/series.hpp"

namespace cmk {

// The two worked ring families. Every module in sight is a direct sum of
// copies of the ring R and its maximal ideal m, and every homomorphism
// between summands is multiplication by a truncated series.
enum class Family : unsigned char { dual, cusp };

std::string family_name(Family f);
Family parse_family(const std::string& name);

// Direct summand kinds: the free module R or the maximal ideal m.
enum class Part : unsigned char { free_module, ideal };

// Declared support of Hom(src, dst) in the multiplier encoding.
//   cusp:  Hom(R,R) = R (semigroup), Hom(m,R) = Hom(m,m) = k[[T]] (full),
//          Hom(R,m) = m (ideal).
//   dual:  Hom(R,R) = R (full at N=2), Hom(R,m) = (X) (linear),
//          Hom(m,R) = Hom(m,m) = k (constants; the X coefficient of a
//          multiplier annihilates m).
SupportTag hom_support(Family fam, Part src, Part dst);

// Series precision a family works at; the dual numbers are pinned to N = 2.
void check_family_precision(Family fam, int precision);

// A matrix of series multipliers between labeled sums of R/m summands.
// Square instances with row_parts == col_parts are the endomorphism
// matrices (entries in End of the sum); rectangular instances carry the
// maps of the almost-split sequences. Entries are kept canonical: for the
// dual family a switched-on X coefficient in a source-m corner is dropped,
// since it acts as zero.
class SeriesMatrix {
 public:
  SeriesMatrix(Family fam, Field field, int precision,
               std::vector<Part> row_parts, std::vector<Part> col_parts);

  static SeriesMatrix identity(Family fam, Field field, int precision,
                               const std::vector<Part>& parts);

  Family family() const { return family_; }
  Field field() const { return field_; }
  int precision() const { return precision_; }
  const std::vector<Part>& row_parts() const { return row_parts_; }
  const std::vector<Part>& col_parts() const { return col_parts_; }
  std::size_t rows() const { return row_parts_.size(); }
  std::size_t cols() const { return col_parts_.size(); }
  bool is_square() const { return row_parts_ == col_parts_; }

  const Series& at(std::size_t i, std::size_t j) const {
    return e_[i * cols() + j];
  }
  // Validates the entry against the corner constraint and stores it
  // retagged; throws input_error on violation.
  void set(std::size_t i, std::size_t j, const Series& s);
  SupportTag corner(std::size_t i, std::size_t j) const {
    return hom_support(family_, col_parts_[j], row_parts_[i]);
  }

  SeriesMatrix operator*(const SeriesMatrix& o) const;
  bool is_identity() const;

  friend bool operator==(const SeriesMatrix& a, const SeriesMatrix& b) {
    return a.family_ == b.family_ && a.row_parts_ == b.row_parts_ &&
           a.col_parts_ == b.col_parts_ && a.e_ == b.e_;
  }

  std::string to_string(char var = 'T') const;

 private:
  void check_compatible(const SeriesMatrix& o) const;
  Series canonical(const Series& s, std::size_t i, std::size_t j,
                   bool internal) const;
  Family family_;
  Field field_;
  int precision_;
  std::vector<Part> row_parts_, col_parts_;
  std::vector<Series> e_;
};

// One row-operation automorphism: d_i(value) has value at (i, i) on an
// otherwise identity diagonal; e_ij(value) is the identity plus value in
// off-diagonal position (i, j). Indices are 0-based.
struct ElementaryFactor {
  enum class Kind { diagonal, shear } kind;
  std::size_t i = 0, j = 0;
  Series value;
};

SeriesMatrix diagonal_factor(Family fam, Field field, int precision,
                             const std::vector<Part>& parts, std::size_t i,
                             const Series& phi);
SeriesMatrix shear_factor(Family fam, Field field, int precision,
                          const std::vector<Part>& parts, std::size_t i,
                          std::size_t j, const Series& mu);

SeriesMatrix factor_matrix(Family fam, Field field, int precision,
                           const std::vector<Part>& parts,
                           const ElementaryFactor& f);
SeriesMatrix product_of_factors(Family fam, Field field, int precision,
                                const std::vector<Part>& parts,
                                const std::vector<ElementaryFactor>& word);

// Gaussian-elimination factorization into d_i / e_ij factors: multiplying
// the word back in order reproduces the input exactly. Requires every
// pivot to be a unit after elimination; otherwise not_invertible_error.
std::vector<ElementaryFactor> elementary_factorization(const SeriesMatrix& a);

// Two-sided inverse through the factorization; corner constraints are
// re-verified on the result.
SeriesMatrix endo_matrix_inverse(const SeriesMatrix& a);

bool is_invertible(const SeriesMatrix& a);

}  // namespace cmk
