#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cmk/finite_ring.hpp"

namespace cmk {

// All two-sided units of the ring, by exhaustive enumeration.
FiniteGroup unit_group(const FiniteRing& ring);

// Generator scans. Both kernels return the sorted duplicate-free generator
// set; the OpenMP variant merges per-thread buffers, so the result is
// independent of scheduling. `reversed` walks the index space backwards
// (results must not depend on enumeration order).
std::vector<FiniteRing::Elem> commutator_generators_serial(
    const FiniteRing& ring, const FiniteGroup& units, bool reversed = false);
std::vector<FiniteRing::Elem> commutator_generators_parallel(
    const FiniteRing& ring, const FiniteGroup& units, bool reversed = false);

// Vaserstein generators (1+ab)(1+ba)^{-1} over all ring pairs (a, b) with
// 1+ab a unit.
std::vector<FiniteRing::Elem> theta_generators_serial(const FiniteRing& ring,
                                                      bool reversed = false);
std::vector<FiniteRing::Elem> theta_generators_parallel(const FiniteRing& ring,
                                                        bool reversed = false);

// Breadth-first subgroup closure of a generator set inside the unit group.
FiniteGroup subgroup_closure(const FiniteRing& ring,
                             const std::vector<FiniteRing::Elem>& generators);

// [A*, A*]: closure of all commutators x y x^{-1} y^{-1}.
FiniteGroup commutator_subgroup(const FiniteRing& ring,
                                const FiniteGroup& units,
                                bool parallel = true);

// Ker of the Whitehead determinant, by its internal generator description.
FiniteGroup ker_theta(const FiniteRing& ring, bool parallel = true);

enum class VasersteinVerdict { equal, strict };

struct VasersteinResult {
  VasersteinVerdict verdict;
  std::size_t ring_size = 0;
  std::size_t unit_count = 0;
  std::size_t ker_theta_order = 0;
  std::size_t commutator_order = 0;
};

// Compares [A*, A*] with Ker theta as element sets. The containment
// [A*, A*] <= Ker theta is asserted; a violation is an internal error.
VasersteinResult vaserstein_check(const FiniteRing& ring,
                                  bool parallel = true);

}  // namespace cmk
