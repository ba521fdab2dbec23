#include "cmk/series_matrix.hpp"

#include <sstream>

namespace cmk {

std::string family_name(Family f) {
  return f == Family::dual ? "dual" : "cusp";
}

Family parse_family(const std::string& name) {
  if (name == "dual") return Family::dual;
  if (name == "cusp") return Family::cusp;
  throw input_error("unsupported family '" + name + "' (expect dual or cusp)");
}

SupportTag hom_support(Family fam, Part src, Part dst) {
  const bool from_ideal = src == Part::ideal;
  const bool to_ideal = dst == Part::ideal;
  if (fam == Family::cusp) {
    if (from_ideal) return SupportTag::full();
    return to_ideal ? SupportTag::ideal() : SupportTag::semigroup();
  }
  // dual numbers at N = 2
  if (from_ideal) return SupportTag::semigroup();  // constants
  return to_ideal ? SupportTag::linear() : SupportTag::full();
}

void check_family_precision(Family fam, int precision) {
  if (precision < 2) throw input_error("precision must be >= 2");
  if (fam == Family::dual && precision != 2)
    throw input_error("the dual-numbers family works at precision 2");
}

SeriesMatrix::SeriesMatrix(Family fam, Field field, int precision,
                           std::vector<Part> row_parts,
                           std::vector<Part> col_parts)
    : family_(fam),
      field_(field),
      precision_(precision),
      row_parts_(std::move(row_parts)),
      col_parts_(std::move(col_parts)) {
  check_family_precision(fam, precision);
  if (row_parts_.empty() || col_parts_.empty())
    throw input_error("empty summand list");
  e_.reserve(rows() * cols());
  for (std::size_t i = 0; i < rows(); ++i)
    for (std::size_t j = 0; j < cols(); ++j)
      e_.emplace_back(field, precision, corner(i, j));
}

SeriesMatrix SeriesMatrix::identity(Family fam, Field field, int precision,
                                    const std::vector<Part>& parts) {
  SeriesMatrix m(fam, field, precision, parts, parts);
  for (std::size_t i = 0; i < parts.size(); ++i)
    m.set(i, i, Series::one(field, precision));
  return m;
}

Series SeriesMatrix::canonical(const Series& s, std::size_t i, std::size_t j,
                               bool internal) const {
  Series v = s;
  if (family_ == Family::dual && col_parts_[j] == Part::ideal)
    v = v.drop_linear_coeff();
  try {
    return v.retagged(corner(i, j));
  } catch (const input_error& e) {
    if (internal)
      throw internal_error(std::string("corner constraint broken by "
                                       "arithmetic: ") + e.what());
    throw;
  }
}

void SeriesMatrix::set(std::size_t i, std::size_t j, const Series& s) {
  if (i >= rows() || j >= cols()) throw input_error("entry index range");
  e_[i * cols() + j] = canonical(s, i, j, /*internal=*/false);
}

void SeriesMatrix::check_compatible(const SeriesMatrix& o) const {
  if (family_ != o.family_ || !(field_ == o.field_) ||
      precision_ != o.precision_)
    throw input_error("matrix family/field/precision mismatch");
}

SeriesMatrix SeriesMatrix::operator*(const SeriesMatrix& o) const {
  check_compatible(o);
  if (col_parts_ != o.row_parts_)
    throw input_error("matrix product summand mismatch");
  SeriesMatrix r(family_, field_, precision_, row_parts_, o.col_parts_);
  for (std::size_t i = 0; i < rows(); ++i)
    for (std::size_t j = 0; j < o.cols(); ++j) {
      Series acc(field_, precision_);
      for (std::size_t k = 0; k < cols(); ++k)
        acc = acc + at(i, k) * o.at(k, j);
      r.e_[i * r.cols() + j] = r.canonical(acc, i, j, /*internal=*/true);
    }
  return r;
}

bool SeriesMatrix::is_identity() const {
  if (!is_square()) return false;
  const Series one = Series::one(field_, precision_);
  const Series zero(field_, precision_);
  for (std::size_t i = 0; i < rows(); ++i)
    for (std::size_t j = 0; j < cols(); ++j)
      if (!(at(i, j) == (i == j ? one : zero))) return false;
  return true;
}

std::string SeriesMatrix::to_string(char var) const {
  std::ostringstream out;
  for (std::size_t i = 0; i < rows(); ++i) {
    out << '[';
    for (std::size_t j = 0; j < cols(); ++j) {
      if (j) out << ", ";
      out << at(i, j).to_string(var);
    }
    out << ']';
    if (i + 1 < rows()) out << '\n';
  }
  return out.str();
}

SeriesMatrix diagonal_factor(Family fam, Field field, int precision,
                             const std::vector<Part>& parts, std::size_t i,
                             const Series& phi) {
  if (!phi.is_unit())
    throw not_a_unit_error("diagonal factor needs a unit");
  SeriesMatrix m = SeriesMatrix::identity(fam, field, precision, parts);
  m.set(i, i, phi);
  return m;
}

SeriesMatrix shear_factor(Family fam, Field field, int precision,
                          const std::vector<Part>& parts, std::size_t i,
                          std::size_t j, const Series& mu) {
  if (i == j) throw input_error("shear needs i != j");
  SeriesMatrix m = SeriesMatrix::identity(fam, field, precision, parts);
  m.set(i, j, mu);
  return m;
}

SeriesMatrix factor_matrix(Family fam, Field field, int precision,
                           const std::vector<Part>& parts,
                           const ElementaryFactor& f) {
  if (f.kind == ElementaryFactor::Kind::diagonal)
    return diagonal_factor(fam, field, precision, parts, f.i, f.value);
  return shear_factor(fam, field, precision, parts, f.i, f.j, f.value);
}

SeriesMatrix product_of_factors(Family fam, Field field, int precision,
                                const std::vector<Part>& parts,
                                const std::vector<ElementaryFactor>& word) {
  SeriesMatrix acc = SeriesMatrix::identity(fam, field, precision, parts);
  for (const ElementaryFactor& f : word)
    acc = acc * factor_matrix(fam, field, precision, parts, f);
  return acc;
}

std::vector<ElementaryFactor> elementary_factorization(const SeriesMatrix& a) {
  if (!a.is_square())
    throw input_error("factorization needs an endomorphism matrix");
  const auto& parts = a.row_parts();
  const std::size_t s = parts.size();
  const Field field = a.field();
  const int prec = a.precision();
  const Series one = Series::one(field, prec);

  std::vector<ElementaryFactor> word;
  std::vector<std::vector<ElementaryFactor>> pending_right(s);
  SeriesMatrix b = a;

  for (std::size_t k = 0; k < s; ++k) {
    if (!b.at(k, k).is_unit()) {
      // Between repeated summands a swap is itself a word in e/d factors:
      // swap = e_kr(1) e_rk(-1) e_kr(1) d_k(-1). Summands of different
      // kinds admit no identity hom, so only same-kind rows qualify.
      std::size_t r = k;
      for (std::size_t i = k + 1; i < s && r == k; ++i)
        if (parts[i] == parts[k] && b.at(i, k).is_unit()) r = i;
      if (r == k)
        throw not_invertible_error(
            "diagonal entry " + std::to_string(k) +
            " is not a unit after elimination");
      const Series one_hom = Series::one(field, prec);
      const std::vector<ElementaryFactor> swap = {
          {ElementaryFactor::Kind::shear, k, r, one_hom},
          {ElementaryFactor::Kind::shear, r, k, -one_hom},
          {ElementaryFactor::Kind::shear, k, r, one_hom},
          {ElementaryFactor::Kind::diagonal, k, k, -one_hom}};
      for (const ElementaryFactor& f : swap) {
        word.push_back(f);
        ElementaryFactor inv = f;
        if (inv.kind == ElementaryFactor::Kind::diagonal)
          inv.value = inv.value.inverse();
        else
          inv.value = -inv.value;
        b = factor_matrix(a.family(), field, prec, parts, inv) * b;
      }
    }
    const Series pivot = b.at(k, k);
    if (!pivot.is_unit())
      throw not_invertible_error(
          "diagonal entry " + std::to_string(k) +
          " is not a unit after elimination");
    if (!(pivot == one)) {
      word.push_back({ElementaryFactor::Kind::diagonal, k, k, pivot});
      b = diagonal_factor(a.family(), field, prec, parts, k,
                          pivot.inverse()) * b;
    }
    for (std::size_t i = k + 1; i < s; ++i) {
      const Series c = b.at(i, k);
      if (c.is_zero()) continue;
      word.push_back({ElementaryFactor::Kind::shear, i, k, c});
      b = shear_factor(a.family(), field, prec, parts, i, k, -c) * b;
    }
    for (std::size_t j = k + 1; j < s; ++j) {
      const Series c = b.at(k, j);
      if (c.is_zero()) continue;
      pending_right[k].push_back({ElementaryFactor::Kind::shear, k, j, c});
      b = b * shear_factor(a.family(), field, prec, parts, k, j, -c);
    }
  }
  if (!b.is_identity())
    throw internal_error("elimination did not reach the identity");
  for (std::size_t k = s; k-- > 0;)
    word.insert(word.end(), pending_right[k].begin(), pending_right[k].end());
  return word;
}

SeriesMatrix endo_matrix_inverse(const SeriesMatrix& a) {
  const std::vector<ElementaryFactor> word = elementary_factorization(a);
  SeriesMatrix inv =
      SeriesMatrix::identity(a.family(), a.field(), a.precision(),
                             a.row_parts());
  for (std::size_t k = word.size(); k-- > 0;) {
    ElementaryFactor f = word[k];
    if (f.kind == ElementaryFactor::Kind::diagonal)
      f.value = f.value.inverse();
    else
      f.value = -f.value;
    inv = inv * factor_matrix(a.family(), a.field(), a.precision(),
                              a.row_parts(), f);
  }
  return inv;
}

bool is_invertible(const SeriesMatrix& a) {
  if (!a.is_square()) return false;
  try {
    elementary_factorization(a);
    return true;
  } catch (const not_invertible_error&) {
    return false;
  } catch (const not_a_unit_error&) {
    return false;
  }
}

}  // namespace cmk
