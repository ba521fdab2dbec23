// Benchmark of the OpenMP kernels against their serial references:
// the Vaserstein generator pair-scan, the commutator pair-scan, and the
// K1 sample batch. Results must match bit for bit; only the wall time
// differs.

#include <chrono>
#include <iomanip>
#include <iostream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "cmk/finite_ring.hpp"
#include "cmk/k1_engine.hpp"
#include "cmk/semilocal.hpp"
#include "cmk/text_io.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start)
      .count();
}

void report(const std::string& name, double serial_ms, double parallel_ms,
            bool match) {
  std::cout << std::left << std::setw(34) << name << std::right << std::fixed
            << std::setprecision(1) << std::setw(9) << serial_ms << " ms "
            << std::setw(9) << parallel_ms << " ms   x" << std::setprecision(2)
            << (parallel_ms > 0 ? serial_ms / parallel_ms : 0.0)
            << (match ? "" : "   RESULTS DIFFER") << "\n";
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::cout << "OpenMP threads: " << omp_get_max_threads() << "\n";
#else
  std::cout << "built without OpenMP; both columns run serially\n";
#endif
  std::cout << std::left << std::setw(34) << "kernel" << std::right
            << std::setw(12) << "serial" << std::setw(13) << "parallel"
            << "   speedup\n";

  for (const char* name : {"M2F3", "M3F2", "M2F5"}) {
    const cmk::FiniteRing ring = cmk::FiniteRing::parse_name(name);
    auto t0 = Clock::now();
    const auto serial = cmk::theta_generators_serial(ring);
    const double serial_ms = ms_since(t0);
    t0 = Clock::now();
    const auto parallel = cmk::theta_generators_parallel(ring);
    const double parallel_ms = ms_since(t0);
    report(std::string("theta generators ") + name, serial_ms, parallel_ms,
           serial == parallel);
  }

  {
    const cmk::FiniteRing ring = cmk::FiniteRing::parse_name("M2F5");
    const cmk::FiniteGroup units = cmk::unit_group(ring);
    auto t0 = Clock::now();
    const auto serial = cmk::commutator_generators_serial(ring, units);
    const double serial_ms = ms_since(t0);
    t0 = Clock::now();
    const auto parallel = cmk::commutator_generators_parallel(ring, units);
    const double parallel_ms = ms_since(t0);
    report("commutator generators M2F5", serial_ms, parallel_ms,
           serial == parallel);
  }

  {
    const cmk::Field f5 = cmk::Field::fp(5);
    auto t0 = Clock::now();
    const cmk::K1Report serial =
        cmk::k1_compute(cmk::Family::cusp, f5, 8, 400, 0, /*parallel=*/false);
    const double serial_ms = ms_since(t0);
    t0 = Clock::now();
    const cmk::K1Report parallel =
        cmk::k1_compute(cmk::Family::cusp, f5, 8, 400, 0, /*parallel=*/true);
    const double parallel_ms = ms_since(t0);
    const bool match =
        cmk::format_k1_report(serial, cmk::ReportFormat::structured) ==
        cmk::format_k1_report(parallel, cmk::ReportFormat::structured);
    report("k1 cusp batch (400 samples)", serial_ms, parallel_ms, match);
  }
  return 0;
}
