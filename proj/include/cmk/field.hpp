#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "cmk/errors.hpp"

namespace cmk {

using Rational = boost::multiprecision::cpp_rational;

// An exact coefficient field: F_p for an odd prime p >= 3, or Q.
// Characteristic 2 is rejected at construction; several identities
// downstream divide by 2.
class Field {
 public:
  static Field fp(std::int64_t p);
  static Field rationals() { return Field(0); }
  static Field parse(const std::string& spec);  // "5" or "Q"

  std::int64_t characteristic() const { return p_; }
  bool is_rational() const { return p_ == 0; }
  std::string name() const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  explicit Field(std::int64_t p) : p_(p) {}
  std::int64_t p_;
};

// A field element, stored reduced to [0, p) for F_p and as an exact
// rational for Q. All arithmetic is exact; division by zero throws.
class FieldElem {
 public:
  FieldElem() : field_(Field::rationals()) {}
  FieldElem(Field f, std::int64_t n);
  FieldElem(Field f, const Rational& q);

  static FieldElem zero(Field f) { return FieldElem(f, 0); }
  static FieldElem one(Field f) { return FieldElem(f, 1); }

  Field field() const { return field_; }
  bool is_zero() const;

  // Residue in [0, p); only valid over F_p.
  std::int64_t residue() const;
  const Rational& rational() const;

  FieldElem operator+(const FieldElem& o) const;
  FieldElem operator-(const FieldElem& o) const;
  FieldElem operator*(const FieldElem& o) const;
  FieldElem operator-() const;
  FieldElem inverse() const;

  FieldElem& operator+=(const FieldElem& o) { return *this = *this + o; }
  FieldElem& operator-=(const FieldElem& o) { return *this = *this - o; }
  FieldElem& operator*=(const FieldElem& o) { return *this = *this * o; }

  friend bool operator==(const FieldElem&, const FieldElem&) = default;

  std::string to_string() const;

 private:
  void check_compatible(const FieldElem& o) const;
  Field field_;
  std::int64_t n_ = 0;  // residue when p > 0
  Rational q_;          // value when over Q
};

}  // namespace cmk
