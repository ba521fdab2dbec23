#include <doctest.h>

#include "cmk/int_matrix.hpp"
#include "cmk/sampling.hpp"
#include "cmk/verify.hpp"

using namespace cmk;

namespace {

IntMatrix random_small(Sampler& s) {
  const std::size_t r = static_cast<std::size_t>(s.below(4) + 1);
  const std::size_t c = static_cast<std::size_t>(s.below(4) + 1);
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = s.below(11) - 5;
  return m;
}

std::vector<Int> snf_diagonal(const IntMatrix& m) {
  const IntMatrix d = smith_normal_form(m).d;
  std::vector<Int> out;
  for (std::size_t k = 0; k < std::min(d.rows(), d.cols()); ++k)
    if (d.at(k, k) != 0) out.push_back(d.at(k, k));
  return out;
}

}  // namespace

TEST_CASE("smith normal form of the identity") {
  const IntMatrix id = IntMatrix::identity(2);
  const SmithDecomposition s = smith_normal_form(id);
  CHECK(s.d == id);
  CHECK(s.u == id);
  CHECK(s.v == id);
}

TEST_CASE("smith normal form of the column (-1, 2)^t") {
  const IntMatrix m{{-1}, {2}};
  // naive gcd-reduction oracle gives diagonal (1), and indeed
  CHECK(check::naive_invariant_factors(m) == std::vector<Int>{1});
  const SmithDecomposition s = smith_normal_form(m);
  CHECK(s.d.at(0, 0) == 1);
  CHECK(s.d.at(1, 0) == 0);
  CHECK(s.u * m * s.v == s.d);
}

TEST_CASE("smith normal form of the 7x6 example matrix") {
  const IntMatrix m = check::e6_singularity_upsilon();
  const SmithDecomposition s = smith_normal_form(m);
  CHECK(s.u * m * s.v == s.d);
  std::size_t nonzero = 0;
  for (std::size_t k = 0; k < 6; ++k)
    if (s.d.at(k, k) != 0) ++nonzero;
  CHECK(nonzero == 6);  // the map is injective
}

TEST_CASE("cokernel examples") {
  SUBCASE("zero map on one generator") {
    const AbelianGroup g = cokernel(IntMatrix{{0}});
    CHECK(g.free_rank == 1);
    CHECK(g.torsion.empty());
  }
  SUBCASE("column (-1, 2)^t") {
    const AbelianGroup g = cokernel(IntMatrix{{-1}, {2}});
    CHECK(g.free_rank == 1);
    CHECK(g.torsion.empty());
  }
  SUBCASE("7x6 example matrix against the oracles") {
    const IntMatrix m = check::e6_singularity_upsilon();
    const AbelianGroup g = cokernel(m);
    const std::vector<Int> naive = check::naive_invariant_factors(m);
    const std::vector<Int> minors = check::minor_gcd_invariant_factors(m);
    CHECK(snf_diagonal(m) == naive);
    CHECK(naive == minors);
    CHECK(g.free_rank == 7 - naive.size());
    std::vector<Int> torsion;
    for (const Int& d : naive)
      if (d > 1) torsion.push_back(d);
    CHECK(g.torsion == torsion);
  }
}

TEST_CASE("injectivity") {
  CHECK(is_injective(IntMatrix::identity(3)));
  CHECK(is_injective(IntMatrix{{-1}, {2}}));
  CHECK_FALSE(is_injective(IntMatrix{{1, 0}, {2, 0}}));  // zero column
}

TEST_CASE("empty matrices are rejected") {
  CHECK_THROWS_AS(IntMatrix(0, 3), input_error);
  CHECK_THROWS_AS(IntMatrix(2, 0), input_error);
}

TEST_CASE("reconstruction and unimodularity on random matrices") {
  Sampler s(7);
  for (int trial = 0; trial < 120; ++trial) {
    const IntMatrix m = random_small(s);
    const SmithDecomposition snf = smith_normal_form(m);
    CHECK(snf.u * m * snf.v == snf.d);
    const Int du = check::cofactor_determinant(snf.u);
    const Int dv = check::cofactor_determinant(snf.v);
    CHECK((du == 1 || du == -1));
    CHECK((dv == 1 || dv == -1));
    Int prev = 0;
    for (std::size_t k = 0; k < std::min(m.rows(), m.cols()); ++k) {
      const Int& v = snf.d.at(k, k);
      CHECK(v >= 0);
      if (prev > 0 && v != 0) CHECK(v % prev == 0);
      prev = v;
    }
  }
}

TEST_CASE("cokernel matches both oracles on random matrices") {
  Sampler s(11);
  for (int trial = 0; trial < 120; ++trial) {
    const IntMatrix m = random_small(s);
    const std::vector<Int> mine = snf_diagonal(m);
    CHECK(mine == check::naive_invariant_factors(m));
    CHECK(mine == check::minor_gcd_invariant_factors(m));
  }
}

TEST_CASE("cokernel invariant under permutations and sign flips") {
  Sampler s(13);
  for (int trial = 0; trial < 60; ++trial) {
    const IntMatrix m = random_small(s);
    IntMatrix p = m;
    p.swap_rows(0, p.rows() - 1);
    p.swap_cols(0, p.cols() - 1);
    p.negate_row(static_cast<std::size_t>(s.below(p.rows())));
    CHECK(cokernel(p) == cokernel(m));
  }
}

TEST_CASE("matrix printing is aligned and stable") {
  const IntMatrix m{{0, -1}, {2, 0}};
  CHECK(m.to_string() == " 0 -1\n 2  0");
}
