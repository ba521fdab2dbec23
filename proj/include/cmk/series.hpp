#pragma once

#include <string>
#include <vector>

#include "cmk/field.hpp"

namespace cmk {

// Declared coefficient support of a truncated series, as vanishing
// constraints on the low-order coefficients. The four Hom spaces of
// End(R + m) over the worked ring families are all cut out this way:
//   full                 {false, false}   k[[T]], or k[X]/(X^2)
//   semigroup            {false, true}    no T^1 term: the cusp subring
//   ideal                {true,  true}    c0 = c1 = 0: the cusp maximal ideal
//   linear               {true,  false}   c0 = 0: the dual-numbers ideal (X)
struct SupportTag {
  bool c0_zero = false;
  bool c1_zero = false;

  friend bool operator==(const SupportTag&, const SupportTag&) = default;

  static constexpr SupportTag full() { return {false, false}; }
  static constexpr SupportTag semigroup() { return {false, true}; }
  static constexpr SupportTag ideal() { return {true, true}; }
  static constexpr SupportTag linear() { return {true, false}; }

  // Support of a sum / product of series carrying these tags.
  SupportTag add(SupportTag o) const {
    return {c0_zero && o.c0_zero, c1_zero && o.c1_zero};
  }
  SupportTag mul(SupportTag o) const {
    // (fg)_0 = f0 g0 and (fg)_1 = f0 g1 + f1 g0.
    return {c0_zero || o.c0_zero,
            (c0_zero || o.c1_zero) && (c1_zero || o.c0_zero)};
  }
  bool contains(SupportTag o) const {
    return (!c0_zero || o.c0_zero) && (!c1_zero || o.c1_zero);
  }
  std::string name() const;
};

// A truncated power series: coefficients c0..c_{N-1} over an exact field,
// with a declared support constraint. Arithmetic requires equal precision
// and field; everything is exact modulo T^N.
class Series {
 public:
  Series(Field f, int precision, SupportTag support = SupportTag::full());

  static Series constant(Field f, int precision, const FieldElem& c);
  static Series constant(Field f, int precision, std::int64_t c);
  static Series one(Field f, int precision);
  // coeff * T^k, tagged with the tightest support containing it.
  static Series monomial(Field f, int precision, int k, std::int64_t coeff = 1);
  static Series from_coeffs(Field f, int precision,
                            const std::vector<std::int64_t>& coeffs,
                            SupportTag support = SupportTag::full());

  Field field() const { return field_; }
  int precision() const { return precision_; }
  SupportTag support() const { return support_; }

  const FieldElem& coeff(int i) const { return c_[static_cast<std::size_t>(i)]; }
  void set_coeff(int i, const FieldElem& v);
  const FieldElem& constant_term() const { return c_[0]; }

  bool is_zero() const;
  bool is_unit() const { return !c_[0].is_zero(); }

  Series operator+(const Series& o) const;
  Series operator-(const Series& o) const;
  Series operator*(const Series& o) const;
  Series operator-() const;

  // Exact multiplicative inverse mod T^N; throws not_a_unit_error if c0 = 0.
  Series inverse() const;

  // Same coefficients under a different (compatible) declared support.
  Series retagged(SupportTag support) const;
  // Zero out the T^1 coefficient; the dual-numbers corestriction to End(m),
  // where the X coefficient of a multiplier annihilates m.
  Series drop_linear_coeff() const;

  // Exact coefficient equality at equal field and precision; the declared
  // support is metadata and does not participate.
  friend bool operator==(const Series& a, const Series& b) {
    return a.field_ == b.field_ && a.precision_ == b.precision_ && a.c_ == b.c_;
  }

  std::string to_string(char var = 'T') const;

 private:
  void check_compatible(const Series& o) const;
  Field field_;
  int precision_;
  SupportTag support_;
  std::vector<FieldElem> c_;
};

// Membership in the cusp subring: no T^1 coefficient.
bool cusp_ring_member(const Series& a);

// The multiplier action h |-> (x -> h*x) on the cusp maximal ideal; h has
// full support, x must have ideal support. chi is injective and h is a unit
// iff the action is an automorphism.
Series chi_apply(const Series& h, const Series& x);
bool chi_is_automorphism(const Series& h);

}  // namespace cmk
