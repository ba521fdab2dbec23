#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cmk/ar_quiver.hpp"
#include "cmk/int_matrix.hpp"
#include "cmk/text_io.hpp"

namespace cmk {

struct PropertyResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

// Runs the documented invariant suite of every module; seeded and
// deterministic. Never throws for property failures (they come back as
// results); only truly malformed state escapes.
std::vector<PropertyResult> run_verification_suite(std::uint64_t seed,
                                                   bool parallel = true);

bool all_passed(const std::vector<PropertyResult>& results);
std::string format_verification_report(
    const std::vector<PropertyResult>& results, ReportFormat fmt);

// Independent cross-check oracles. These deliberately avoid the production
// code paths: the naive reduction tracks no transforms and picks the first
// nonzero pivot, and the minor route computes determinantal divisors by
// cofactor expansion alone.
namespace check {

std::vector<Int> naive_invariant_factors(IntMatrix m);
std::vector<Int> minor_gcd_invariant_factors(const IntMatrix& m);
Int cofactor_determinant(const IntMatrix& m);

// Structural test that a candidate block is the Cartan matrix of the named
// Dynkin graph: symmetric, 2s on the diagonal, off-diagonals in {0,-1},
// connected, and the edge graph has the right shape (path / fork with the
// right arm lengths). Label-free, so any vertex numbering passes.
bool matches_standard_cartan(const IntMatrix& block, DynkinType type,
                             std::string* why = nullptr);

// The Auslander-Reiten data of the (X^3+Y^4+Z^2) singularity: six
// sequences over modules M0..M6, and the 7x6 matrix they must produce.
ArPresentation e6_singularity_presentation();
IntMatrix e6_singularity_upsilon();

}  // namespace check

}  // namespace cmk
