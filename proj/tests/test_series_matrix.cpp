#include <doctest.h>

#include "cmk/sampling.hpp"
#include "cmk/series_matrix.hpp"

using namespace cmk;

namespace {

const Field f5 = Field::fp(5);
const std::vector<Part> rm{Part::free_module, Part::ideal};

// The lifted middle automorphism of the cusp family for h = f + gT.
SeriesMatrix cusp_beta(const Series& f, const Series& g) {
  const Series t = Series::monomial(f.field(), f.precision(), 1);
  SeriesMatrix beta(Family::cusp, f.field(), f.precision(), rm, rm);
  beta.set(0, 0, f);
  beta.set(0, 1, g);
  beta.set(1, 0, g * t * t);
  beta.set(1, 1, f);
  return beta;
}

}  // namespace

TEST_CASE("identity times identity") {
  const SeriesMatrix id = SeriesMatrix::identity(Family::cusp, f5, 8, rm);
  CHECK(id * id == id);
  CHECK(id.is_identity());
}

TEST_CASE("the printed inverse of beta really inverts it") {
  Sampler s(17);
  const Series t = Series::monomial(f5, 8, 1);
  for (int trial = 0; trial < 25; ++trial) {
    const Series f = s.unit_series(f5, 8, SupportTag::semigroup());
    const Series g = s.series(f5, 8, SupportTag::semigroup());
    const SeriesMatrix beta = cusp_beta(f, g);
    // (f^2 - g^2 T^2)^{-1} [[f, -g], [-g T^2, f]]
    const Series scale = (f * f - g * g * t * t).inverse();
    SeriesMatrix printed(Family::cusp, f5, 8, rm, rm);
    printed.set(0, 0, scale * f);
    printed.set(0, 1, scale * -g);
    printed.set(1, 0, scale * -(g * t * t));
    printed.set(1, 1, scale * f);
    CHECK((beta * printed).is_identity());
    CHECK((printed * beta).is_identity());
    CHECK(endo_matrix_inverse(beta) == printed);
  }
}

TEST_CASE("products of constraint-respecting automorphisms respect corners") {
  Sampler s(19);
  for (const auto& [fam, prec] : std::vector<std::pair<Family, int>>{
           {Family::dual, 2}, {Family::cusp, 8}}) {
    for (int trial = 0; trial < 25; ++trial) {
      const SeriesMatrix a = s.automorphism(fam, f5, prec);
      const SeriesMatrix b = s.automorphism(fam, f5, prec);
      const SeriesMatrix p = a * b;
      // direct entry computation oracle: coefficientwise convolution
      for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) {
          Series expected(f5, prec);
          for (std::size_t k = 0; k < 2; ++k)
            expected = expected + a.at(i, k) * b.at(k, j);
          if (fam == Family::dual && p.col_parts()[j] == Part::ideal)
            expected = expected.drop_linear_coeff();
          CHECK(p.at(i, j) == expected);
          const SupportTag corner = p.corner(i, j);
          if (corner.c0_zero) CHECK(p.at(i, j).coeff(0).is_zero());
          if (corner.c1_zero) CHECK(p.at(i, j).coeff(1).is_zero());
        }
      CHECK(is_invertible(p));
    }
  }
}

TEST_CASE("corner constraints reject invalid entries") {
  SeriesMatrix a = SeriesMatrix::identity(Family::cusp, f5, 8, rm);
  // Hom(R, m) has ideal support; a unit does not belong there.
  CHECK_THROWS_AS(a.set(1, 0, Series::one(f5, 8)), input_error);
  // Hom(R, R) over the cusp excludes a T coefficient.
  CHECK_THROWS_AS(a.set(0, 0, Series::monomial(f5, 8, 1)), input_error);
}

TEST_CASE("dual source-ideal corners drop the X coefficient") {
  // e_12(1) * e_21(bX) lands 1 + bX in the (m -> m) slot, which acts on m
  // as the constant 1.
  const SeriesMatrix e12 =
      shear_factor(Family::dual, f5, 2, rm, 0, 1, Series::one(f5, 2));
  const SeriesMatrix e21 = shear_factor(Family::dual, f5, 2, rm, 1, 0,
                                        Series::monomial(f5, 2, 1, 3));
  const SeriesMatrix p = e21 * e12;
  CHECK(p.at(1, 1) == Series::one(f5, 2));
  CHECK(p.at(1, 1).coeff(1).is_zero());
}

TEST_CASE("elementary factorization") {
  SUBCASE("identity gives the empty word") {
    const SeriesMatrix id = SeriesMatrix::identity(Family::cusp, f5, 6, rm);
    CHECK(elementary_factorization(id).empty());
  }
  SUBCASE("a word already in normal form is recovered") {
    const Series phi = Series::from_coeffs(f5, 6, {2, 0, 1},
                                           SupportTag::semigroup());
    const Series mu = Series::monomial(f5, 6, 2, 3);
    const SeriesMatrix a = diagonal_factor(Family::cusp, f5, 6, rm, 0, phi) *
                           shear_factor(Family::cusp, f5, 6, rm, 1, 0, mu);
    const auto word = elementary_factorization(a);
    REQUIRE(word.size() == 2);
    CHECK(word[0].kind == ElementaryFactor::Kind::diagonal);
    CHECK(word[0].i == 0);
    CHECK(word[0].value == phi);
    CHECK(word[1].kind == ElementaryFactor::Kind::shear);
    CHECK(word[1].i == 1);
    CHECK(word[1].j == 0);
    CHECK(word[1].value == mu);
  }
  SUBCASE("random automorphisms at N = 6 re-multiply exactly") {
    Sampler s(23);
    for (int trial = 0; trial < 40; ++trial) {
      const SeriesMatrix a = s.automorphism(Family::cusp, f5, 6);
      CHECK(product_of_factors(Family::cusp, f5, 6, rm,
                               elementary_factorization(a)) == a);
    }
  }
  SUBCASE("non-invertible matrices are refused") {
    SeriesMatrix a = SeriesMatrix::identity(Family::cusp, f5, 6, rm);
    a.set(0, 0, Series::monomial(f5, 6, 2));  // kills the diagonal unit
    CHECK_THROWS_AS(elementary_factorization(a), not_invertible_error);
    CHECK_FALSE(is_invertible(a));
  }
}

TEST_CASE("inverse is two-sided and respects corners") {
  Sampler s(29);
  for (const auto& [fam, prec] : std::vector<std::pair<Family, int>>{
           {Family::dual, 2}, {Family::cusp, 8}}) {
    for (int trial = 0; trial < 25; ++trial) {
      const SeriesMatrix a = s.automorphism(fam, f5, prec);
      const SeriesMatrix inv = endo_matrix_inverse(a);
      CHECK((a * inv).is_identity());
      CHECK((inv * a).is_identity());
    }
  }
}

TEST_CASE("larger shapes invert too") {
  Sampler s(31);
  const std::vector<Part> shape{Part::free_module, Part::ideal,
                                Part::free_module, Part::ideal};
  const SeriesMatrix a = s.automorphism_on(Family::cusp, f5, 6, shape);
  const SeriesMatrix inv = endo_matrix_inverse(a);
  CHECK((a * inv).is_identity());
  CHECK((inv * a).is_identity());
}

TEST_CASE("family precision coupling") {
  CHECK_THROWS_AS(SeriesMatrix::identity(Family::dual, f5, 8, rm),
                  input_error);
}
