#pragma once

#include <cstdint>
#include <random>

#include "cmk/series_matrix.hpp"

namespace cmk {

// Seeded deterministic sampling. All draws go through next()/below() so
// reports and property suites are reproducible bit-for-bit for a fixed
// seed, independent of the standard library's distribution internals.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next() { return gen_(); }
  std::int64_t below(std::int64_t n) {
    return static_cast<std::int64_t>(next() % static_cast<std::uint64_t>(n));
  }

  FieldElem field_elem(Field f);
  FieldElem nonzero_field_elem(Field f);
  Series series(Field f, int precision, SupportTag support);
  Series unit_series(Field f, int precision, SupportTag support);
  // A unit of the family's ring R inside the series encoding.
  Series ring_unit(Family fam, Field f, int precision);
  // A unit of 1 + m (constant term one).
  Series one_plus_max_ideal_unit(Family fam, Field f, int precision);
  // A random constraint-respecting automorphism of R + m (unit diagonals).
  SeriesMatrix automorphism(Family fam, Field f, int precision);
  // Same over an arbitrary summand list.
  SeriesMatrix automorphism_on(Family fam, Field f, int precision,
                               const std::vector<Part>& parts);

 private:
  std::mt19937_64 gen_;
};

// Stable per-index derivation, so sample i of a batch is the same whatever
// order or thread evaluates it.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index);

}  // namespace cmk
