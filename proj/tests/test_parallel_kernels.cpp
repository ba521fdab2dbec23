#include <doctest.h>

#include "cmk/k1_engine.hpp"
#include "cmk/semilocal.hpp"
#include "cmk/text_io.hpp"

using namespace cmk;

TEST_CASE("theta generator kernels: OpenMP matches the serial reference") {
  for (const char* name : {"M2F2", "M2F3", "M3F2"}) {
    CAPTURE(name);
    const FiniteRing ring = FiniteRing::parse_name(name);
    CHECK(theta_generators_serial(ring) == theta_generators_parallel(ring));
    CHECK(theta_generators_serial(ring, true) ==
          theta_generators_parallel(ring, true));
  }
}

TEST_CASE("commutator generator kernels: OpenMP matches the serial reference") {
  for (const char* name : {"M2F2", "M2F3"}) {
    CAPTURE(name);
    const FiniteRing ring = FiniteRing::parse_name(name);
    const FiniteGroup units = unit_group(ring);
    CHECK(commutator_generators_serial(ring, units) ==
          commutator_generators_parallel(ring, units));
  }
}

TEST_CASE("vaserstein results agree between modes") {
  for (const char* name : {"M2F2", "M2F3"}) {
    const FiniteRing ring = FiniteRing::parse_name(name);
    const VasersteinResult serial = vaserstein_check(ring, false);
    const VasersteinResult parallel = vaserstein_check(ring, true);
    CHECK(serial.verdict == parallel.verdict);
    CHECK(serial.ker_theta_order == parallel.ker_theta_order);
    CHECK(serial.commutator_order == parallel.commutator_order);
  }
}

TEST_CASE("k1 batches give identical reports in both modes") {
  const Field f5 = Field::fp(5);
  for (Family fam : {Family::dual, Family::cusp}) {
    const std::string serial = format_k1_report(
        k1_compute(fam, f5, 8, 48, 3, /*parallel=*/false), ReportFormat::text);
    const std::string parallel = format_k1_report(
        k1_compute(fam, f5, 8, 48, 3, /*parallel=*/true), ReportFormat::text);
    CHECK(serial == parallel);
  }
}
