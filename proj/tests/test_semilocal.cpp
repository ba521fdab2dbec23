#include <doctest.h>

#include "cmk/semilocal.hpp"

using namespace cmk;

TEST_CASE("ring parsing and element arithmetic") {
  const FiniteRing r = FiniteRing::parse_name("M2F3");
  CHECK(r.size() == 81);
  CHECK(r.name() == "M2(F3)");
  CHECK(r.mul(r.one(), r.one()) == r.one());
  CHECK(r.add(r.one(), r.neg(r.one())) == r.zero());

  const FiniteRing prod = FiniteRing::parse_name("F2xF2");
  CHECK(prod.size() == 4);
  CHECK(prod.name() == "F2 x F2");

  CHECK_THROWS_AS(FiniteRing::parse_name("M4F2"), input_error);
  CHECK_THROWS_AS(FiniteRing::parse_name("M2F7"), input_error);
  CHECK_THROWS_AS(FiniteRing::parse_name("bogus"), parse_error);
  // M3(F5) has 5^9 elements, past the enumeration bound
  CHECK_THROWS_AS(FiniteRing::matrix_ring(3, 5), input_error);
}

TEST_CASE("unit groups") {
  SUBCASE("F5 units form the cyclic group of order 4") {
    const FiniteRing r = FiniteRing::parse_name("F5");
    const FiniteGroup g = unit_group(r);
    CHECK(g.order() == 4);
    // 2 generates: 2, 4, 3, 1
    FiniteRing::Elem x = 2;
    std::size_t order = 1;
    while (x != r.one()) {
      x = r.mul(x, 2);
      ++order;
    }
    CHECK(order == 4);
  }
  SUBCASE("GL2(F2) has order (4-1)(4-2) = 6") {
    CHECK(unit_group(FiniteRing::parse_name("M2F2")).order() == 6);
  }
  SUBCASE("GL2(F3) has order (9-1)(9-3) = 48") {
    CHECK(unit_group(FiniteRing::parse_name("M2F3")).order() == 48);
  }
  SUBCASE("GL3(F2) has order (8-1)(8-2)(8-4) = 168") {
    CHECK(unit_group(FiniteRing::parse_name("M3F2")).order() == 168);
  }
}

TEST_CASE("commutator subgroups") {
  SUBCASE("abelian unit groups have trivial commutator subgroup") {
    const FiniteRing r = FiniteRing::parse_name("F5");
    CHECK(commutator_subgroup(r, unit_group(r)).order() == 1);
  }
  SUBCASE("GL2(F2) commutators generate the 3-element subgroup") {
    const FiniteRing r = FiniteRing::parse_name("M2F2");
    CHECK(commutator_subgroup(r, unit_group(r)).order() == 3);
  }
  SUBCASE("GL2(F3) commutators generate SL2(F3) of order 24") {
    const FiniteRing r = FiniteRing::parse_name("M2F3");
    CHECK(commutator_subgroup(r, unit_group(r)).order() == 24);
  }
}

TEST_CASE("the Vaserstein kernel") {
  SUBCASE("commutative rings give the trivial kernel") {
    CHECK(ker_theta(FiniteRing::parse_name("F5")).order() == 1);
    CHECK(ker_theta(FiniteRing::parse_name("F2xF2")).order() == 1);
  }
  SUBCASE("M2(F2): the kernel is the whole unit group") {
    CHECK(ker_theta(FiniteRing::parse_name("M2F2")).order() == 6);
  }
  SUBCASE("M2(F3): the kernel equals the commutator subgroup") {
    const FiniteRing r = FiniteRing::parse_name("M2F3");
    CHECK(ker_theta(r) == commutator_subgroup(r, unit_group(r)));
  }
}

TEST_CASE("vaserstein_check verdicts") {
  SUBCASE("M2(F2) is the strict example") {
    const VasersteinResult r =
        vaserstein_check(FiniteRing::parse_name("M2F2"));
    CHECK(r.verdict == VasersteinVerdict::strict);
    CHECK(r.ker_theta_order == 6);
    CHECK(r.commutator_order == 3);
    CHECK(r.unit_count == 6);
  }
  SUBCASE("M2(F3) is equal") {
    CHECK(vaserstein_check(FiniteRing::parse_name("M2F3")).verdict ==
          VasersteinVerdict::equal);
  }
  SUBCASE("F5 is equal with both subgroups trivial") {
    const VasersteinResult r = vaserstein_check(FiniteRing::parse_name("F5"));
    CHECK(r.verdict == VasersteinVerdict::equal);
    CHECK(r.ker_theta_order == 1);
    CHECK(r.commutator_order == 1);
  }
}

TEST_CASE("generator scans are enumeration-order independent") {
  const FiniteRing r = FiniteRing::parse_name("M2F3");
  CHECK(theta_generators_serial(r, false) == theta_generators_serial(r, true));
  const FiniteGroup units = unit_group(r);
  CHECK(commutator_generators_serial(r, units, false) ==
        commutator_generators_serial(r, units, true));
}

TEST_CASE("group size bound on the commutator scan") {
  // GL3(F3) has 11232 > 10^4 elements.
  const FiniteRing r = FiniteRing::matrix_ring(3, 3);
  const FiniteGroup units = unit_group(r);
  CHECK(units.order() == 11232);
  CHECK_THROWS_AS(commutator_generators_serial(r, units), input_error);
}
