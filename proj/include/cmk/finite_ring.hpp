#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "cmk/errors.hpp"

namespace cmk {

// An explicit finite ring: a matrix ring M_n(F_p) with n <= 3 and
// p in {2, 3, 5}, or a pairwise direct product of two such factors.
// Elements are canonical enumeration indices (mixed-radix digit packs),
// which keeps set membership and iteration order deterministic.
class FiniteRing {
 public:
  struct Factor {
    int n;
    int p;
  };
  using Elem = std::uint32_t;

  static FiniteRing matrix_ring(int n, int p) { return FiniteRing({{n, p}}); }
  explicit FiniteRing(std::vector<Factor> factors);

  // "M2F2", "F5", "F2xF2", "M2F3xF3", ...
  static FiniteRing parse_name(const std::string& name);

  const std::vector<Factor>& factors() const { return factors_; }
  std::size_t size() const { return size_; }
  std::string name() const;

  Elem zero() const { return 0; }
  Elem one() const { return one_; }
  Elem add(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const;
  // Two-sided inverse via per-factor Gaussian elimination; false on
  // non-units.
  bool try_inverse(Elem a, Elem& inv) const;

  std::string elem_to_string(Elem a) const;

 private:
  static constexpr std::size_t kMaxDigits = 18;  // two factors of 3x3
  using Digits = std::array<std::uint8_t, kMaxDigits>;
  void decode(Elem a, Digits& d) const;
  Elem encode(const Digits& d) const;
  void spot_check_axioms() const;

  std::vector<Factor> factors_;
  std::vector<std::size_t> digit_offset_;  // per factor, into the digit pack
  std::size_t digit_count_ = 0;
  std::size_t size_ = 1;
  Elem one_ = 0;
};

// An explicitly enumerated group of ring units: sorted canonical element
// codes plus the ambient ring for the operation. Closure, identity and
// inverses are verified on construction (closure exhaustively for small
// groups, by a seeded sample above 1000 elements).
class FiniteGroup {
 public:
  FiniteGroup(const FiniteRing& ring, std::vector<FiniteRing::Elem> elements);

  const FiniteRing& ring() const { return ring_; }
  const std::vector<FiniteRing::Elem>& elements() const { return elements_; }
  std::size_t order() const { return elements_.size(); }
  bool contains(FiniteRing::Elem e) const;

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) {
    return a.elements_ == b.elements_;
  }

 private:
  FiniteRing ring_;
  std::vector<FiniteRing::Elem> elements_;  // sorted
};

}  // namespace cmk
