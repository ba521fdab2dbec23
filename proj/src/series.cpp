#include "cmk/series.hpp"

#include <sstream>

namespace cmk {

std::string SupportTag::name() const {
  if (c0_zero && c1_zero) return "ideal";
  if (c0_zero) return "linear";
  if (c1_zero) return "semigroup";
  return "full";
}

Series::Series(Field f, int precision, SupportTag support)
    : field_(f), precision_(precision), support_(support) {
  if (precision < 2) throw input_error("series precision must be >= 2");
  c_.assign(static_cast<std::size_t>(precision), FieldElem::zero(f));
}

Series Series::constant(Field f, int precision, const FieldElem& c) {
  Series s(f, precision, SupportTag::semigroup());
  s.c_[0] = c;
  return s;
}

Series Series::constant(Field f, int precision, std::int64_t c) {
  return constant(f, precision, FieldElem(f, c));
}

Series Series::one(Field f, int precision) { return constant(f, precision, 1); }

Series Series::monomial(Field f, int precision, int k, std::int64_t coeff) {
  SupportTag tag{k > 0, k != 1};
  Series s(f, precision, tag);
  if (k < 0 || k >= precision)
    throw input_error("monomial degree out of range");
  s.c_[static_cast<std::size_t>(k)] = FieldElem(f, coeff);
  return s;
}

Series Series::from_coeffs(Field f, int precision,
                           const std::vector<std::int64_t>& coeffs,
                           SupportTag support) {
  if (coeffs.size() > static_cast<std::size_t>(precision))
    throw input_error("more coefficients than the precision admits");
  Series s(f, precision, support);
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    s.set_coeff(static_cast<int>(i), FieldElem(f, coeffs[i]));
  return s;
}

void Series::set_coeff(int i, const FieldElem& v) {
  if (i < 0 || i >= precision_) throw input_error("coefficient index range");
  if (!(v.field() == field_)) throw input_error("coefficient field mismatch");
  if (!v.is_zero() && ((i == 0 && support_.c0_zero) ||
                       (i == 1 && support_.c1_zero)))
    throw input_error("coefficient violates declared " + support_.name() +
                      " support");
  c_[static_cast<std::size_t>(i)] = v;
}

bool Series::is_zero() const {
  for (const FieldElem& v : c_)
    if (!v.is_zero()) return false;
  return true;
}

void Series::check_compatible(const Series& o) const {
  if (precision_ != o.precision_)
    throw input_error("series precision mismatch: " +
                      std::to_string(precision_) + " vs " +
                      std::to_string(o.precision_));
  if (!(field_ == o.field_))
    throw input_error("series field mismatch: " + field_.name() + " vs " +
                      o.field_.name());
}

Series Series::operator+(const Series& o) const {
  check_compatible(o);
  Series r(field_, precision_, support_.add(o.support_));
  for (int i = 0; i < precision_; ++i)
    r.c_[static_cast<std::size_t>(i)] =
        c_[static_cast<std::size_t>(i)] + o.c_[static_cast<std::size_t>(i)];
  return r;
}

Series Series::operator-(const Series& o) const { return *this + (-o); }

Series Series::operator-() const {
  Series r(field_, precision_, support_);
  for (int i = 0; i < precision_; ++i)
    r.c_[static_cast<std::size_t>(i)] = -c_[static_cast<std::size_t>(i)];
  return r;
}

Series Series::operator*(const Series& o) const {
  check_compatible(o);
  Series r(field_, precision_, support_.mul(o.support_));
  for (int i = 0; i < precision_; ++i) {
    if (c_[static_cast<std::size_t>(i)].is_zero()) continue;
    for (int j = 0; i + j < precision_; ++j)
      r.c_[static_cast<std::size_t>(i + j)] +=
          c_[static_cast<std::size_t>(i)] * o.c_[static_cast<std::size_t>(j)];
  }
  return r;
}

Series Series::inverse() const {
  if (!is_unit())
    throw not_a_unit_error("series with zero constant term has no inverse");
  // Inverting preserves a vanishing T^1 coefficient, so keep the c1
  // constraint; a unit never has c0 = 0.
  Series r(field_, precision_, SupportTag{false, support_.c1_zero});
  const FieldElem inv0 = c_[0].inverse();
  r.c_[0] = inv0;
  for (int n = 1; n < precision_; ++n) {
    FieldElem acc = FieldElem::zero(field_);
    for (int i = 1; i <= n; ++i)
      acc += c_[static_cast<std::size_t>(i)] *
             r.c_[static_cast<std::size_t>(n - i)];
    r.c_[static_cast<std::size_t>(n)] = -(inv0 * acc);
  }
  return r;
}

Series Series::retagged(SupportTag support) const {
  Series r(field_, precision_, support);
  for (int i = 0; i < precision_; ++i)
    r.set_coeff(i, c_[static_cast<std::size_t>(i)]);
  return r;
}

Series Series::drop_linear_coeff() const {
  Series r(field_, precision_,
           SupportTag{support_.c0_zero, true});
  for (int i = 0; i < precision_; ++i)
    if (i != 1) r.set_coeff(i, c_[static_cast<std::size_t>(i)]);
  return r;
}

std::string Series::to_string(char var) const {
  std::ostringstream out;
  bool first = true;
  for (int i = 0; i < precision_; ++i) {
    const FieldElem& v = c_[static_cast<std::size_t>(i)];
    if (v.is_zero()) continue;
    std::string t = v.to_string();
    if (i >= 1) t += var;
    if (i >= 2) t += "^" + std::to_string(i);
    if (!first && t[0] != '-') out << '+';
    out << t;
    first = false;
  }
  return first ? "0" : out.str();
}

bool cusp_ring_member(const Series& a) { return a.coeff(1).is_zero(); }

Series chi_apply(const Series& h, const Series& x) {
  if (!SupportTag::ideal().contains(x.support()))
    throw input_error("chi acts on ideal-support series");
  return h * x;
}

bool chi_is_automorphism(const Series& h) { return h.is_unit(); }

}  // namespace cmk
