#include "cmk/sampling.hpp"

namespace cmk {

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
  // splitmix64 step over seed + index
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

FieldElem Sampler::field_elem(Field f) {
  if (f.is_rational()) {
    std::int64_t num = below(19) - 9;        // -9..9
    std::int64_t den = below(9) + 1;         // 1..9
    return FieldElem(f, Rational(num) / den);
  }
  return FieldElem(f, below(f.characteristic()));
}

FieldElem Sampler::nonzero_field_elem(Field f) {
  for (;;) {
    FieldElem v = field_elem(f);
    if (!v.is_zero()) return v;
  }
}

Series Sampler::series(Field f, int precision, SupportTag support) {
  Series s(f, precision, support);
  for (int i = 0; i < precision; ++i) {
    if ((i == 0 && support.c0_zero) || (i == 1 && support.c1_zero)) continue;
    s.set_coeff(i, field_elem(f));
  }
  return s;
}

Series Sampler::unit_series(Field f, int precision, SupportTag support) {
  if (support.c0_zero) throw input_error("units need a free constant term");
  Series s = series(f, precision, support);
  s.set_coeff(0, nonzero_field_elem(f));
  return s;
}

Series Sampler::ring_unit(Family fam, Field f, int precision) {
  return unit_series(f, precision,
                     fam == Family::cusp ? SupportTag::semigroup()
                                         : SupportTag::full());
}

Series Sampler::one_plus_max_ideal_unit(Family fam, Field f, int precision) {
  Series s = ring_unit(fam, f, precision);
  s.set_coeff(0, FieldElem::one(f));
  return s;
}

SeriesMatrix Sampler::automorphism(Family fam, Field f, int precision) {
  return automorphism_on(fam, f, precision, {Part::free_module, Part::ideal});
}

SeriesMatrix Sampler::automorphism_on(Family fam, Field f, int precision,
                                      const std::vector<Part>& parts) {
  // Between non-isomorphic summands a unit diagonal suffices; repeated
  // summands can still produce a singular draw, so reject and retry.
  for (int attempt = 0; attempt < 100; ++attempt) {
    SeriesMatrix a(fam, f, precision, parts, parts);
    for (std::size_t i = 0; i < parts.size(); ++i)
      for (std::size_t j = 0; j < parts.size(); ++j) {
        SupportTag tag = a.corner(i, j);
        a.set(i, j, i == j ? unit_series(f, precision, tag)
                           : series(f, precision, tag));
      }
    if (is_invertible(a)) return a;
  }
  throw internal_error("automorphism sampling kept drawing singular maps");
}

}  // namespace cmk
