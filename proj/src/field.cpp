#include "cmk/field.hpp"

namespace cmk {

namespace {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::int64_t mod_reduce(std::int64_t n, std::int64_t p) {
  std::int64_t r = n % p;
  return r < 0 ? r + p : r;
}

std::int64_t mod_mul(std::int64_t a, std::int64_t b, std::int64_t p) {
  return static_cast<std::int64_t>(
      static_cast<__int128>(a) * b % p);
}

// Fermat inverse; p prime, a != 0 mod p.
std::int64_t mod_inv(std::int64_t a, std::int64_t p) {
  std::int64_t result = 1, base = a, e = p - 2;
  while (e > 0) {
    if (e & 1) result = mod_mul(result, base, p);
    base = mod_mul(base, base, p);
    e >>= 1;
  }
  return result;
}

}  // namespace

Field Field::fp(std::int64_t p) {
  if (p == 2) throw input_error("field characteristic 2 is not supported");
  if (!is_prime(p) || p < 3)
    throw input_error("field order must be an odd prime >= 3, got " +
                      std::to_string(p));
  return Field(p);
}

Field Field::parse(const std::string& spec) {
  if (spec == "Q" || spec == "q") return rationals();
  try {
    return fp(std::stoll(spec));
  } catch (const std::logic_error&) {
    throw input_error("bad field spec '" + spec + "' (expect a prime or Q)");
  }
}

std::string Field::name() const {
  return p_ == 0 ? "Q" : "F" + std::to_string(p_);
}

FieldElem::FieldElem(Field f, std::int64_t n) : field_(f) {
  if (f.is_rational())
    q_ = n;
  else
    n_ = mod_reduce(n, f.characteristic());
}

FieldElem::FieldElem(Field f, const Rational& q) : field_(f) {
  if (!f.is_rational())
    throw input_error("rational value supplied for a prime field element");
  q_ = q;
}

bool FieldElem::is_zero() const {
  return field_.is_rational() ? q_ == 0 : n_ == 0;
}

std::int64_t FieldElem::residue() const {
  if (field_.is_rational())
    throw input_error("residue() called on a rational field element");
  return n_;
}

const Rational& FieldElem::rational() const {
  if (!field_.is_rational())
    throw input_error("rational() called on a prime-field element");
  return q_;
}

void FieldElem::check_compatible(const FieldElem& o) const {
  if (!(field_ == o.field_))
    throw input_error("field mismatch: " + field_.name() + " vs " +
                      o.field_.name());
}

FieldElem FieldElem::operator+(const FieldElem& o) const {
  check_compatible(o);
  if (field_.is_rational()) return FieldElem(field_, Rational(q_ + o.q_));
  return FieldElem(field_, n_ + o.n_);
}

FieldElem FieldElem::operator-(const FieldElem& o) const {
  check_compatible(o);
  if (field_.is_rational()) return FieldElem(field_, Rational(q_ - o.q_));
  return FieldElem(field_, n_ - o.n_);
}

FieldElem FieldElem::operator*(const FieldElem& o) const {
  check_compatible(o);
  if (field_.is_rational()) return FieldElem(field_, Rational(q_ * o.q_));
  return FieldElem(field_, mod_mul(n_, o.n_, field_.characteristic()));
}

FieldElem FieldElem::operator-() const {
  if (field_.is_rational()) return FieldElem(field_, Rational(-q_));
  return FieldElem(field_, -n_);
}

FieldElem FieldElem::inverse() const {
  if (is_zero()) throw not_a_unit_error("inverse of zero field element");
  if (field_.is_rational()) return FieldElem(field_, Rational(1 / q_));
  return FieldElem(field_, mod_inv(n_, field_.characteristic()));
}

std::string FieldElem::to_string() const {
  if (field_.is_rational()) {
    return q_.str();
  }
  return std::to_string(n_);
}

}  // namespace cmk
