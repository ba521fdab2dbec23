#include "cmk/semilocal.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace cmk {

namespace {

void sort_unique(std::vector<FiniteRing::Elem>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

FiniteGroup unit_group(const FiniteRing& ring) {
  std::vector<FiniteRing::Elem> units;
  for (std::size_t i = 0; i < ring.size(); ++i) {
    FiniteRing::Elem inv;
    if (ring.try_inverse(static_cast<FiniteRing::Elem>(i), inv))
      units.push_back(static_cast<FiniteRing::Elem>(i));
  }
  return FiniteGroup(ring, std::move(units));
}

std::vector<FiniteRing::Elem> commutator_generators_serial(
    const FiniteRing& ring, const FiniteGroup& units, bool reversed) {
  if (units.order() > 10000)
    throw input_error("group size bound exceeded (|G| <= 10^4)");
  const auto& g = units.elements();
  const std::size_t n = g.size();
  std::vector<FiniteRing::Elem> gens;
  for (std::size_t idx = 0; idx < n * n; ++idx) {
    const std::size_t k = reversed ? n * n - 1 - idx : idx;
    const FiniteRing::Elem x = g[k / n], y = g[k % n];
    FiniteRing::Elem xi, yi;
    ring.try_inverse(x, xi);
    ring.try_inverse(y, yi);
    gens.push_back(ring.mul(ring.mul(x, y), ring.mul(xi, yi)));
  }
  sort_unique(gens);
  return gens;
}

std::vector<FiniteRing::Elem> commutator_generators_parallel(
    const FiniteRing& ring, const FiniteGroup& units, bool reversed) {
  if (units.order() > 10000)
    throw input_error("group size bound exceeded (|G| <= 10^4)");
  const auto& g = units.elements();
  const std::size_t n = g.size();
  std::vector<FiniteRing::Elem> gens;
#ifdef _OPENMP
#pragma omp parallel
  {
    std::vector<FiniteRing::Elem> local;
#pragma omp for schedule(static) nowait
    for (long long idx = 0; idx < static_cast<long long>(n * n); ++idx) {
      const std::size_t k =
          reversed ? n * n - 1 - static_cast<std::size_t>(idx)
                   : static_cast<std::size_t>(idx);
      const FiniteRing::Elem x = g[k / n], y = g[k % n];
      FiniteRing::Elem xi, yi;
      ring.try_inverse(x, xi);
      ring.try_inverse(y, yi);
      local.push_back(ring.mul(ring.mul(x, y), ring.mul(xi, yi)));
    }
#pragma omp critical
    gens.insert(gens.end(), local.begin(), local.end());
  }
#else
  return commutator_generators_serial(ring, units, reversed);
#endif
  sort_unique(gens);
  return gens;
}

std::vector<FiniteRing::Elem> theta_generators_serial(const FiniteRing& ring,
                                                      bool reversed) {
  const std::size_t n = ring.size();
  std::vector<FiniteRing::Elem> gens;
  for (std::size_t idx = 0; idx < n * n; ++idx) {
    const std::size_t k = reversed ? n * n - 1 - idx : idx;
    const FiniteRing::Elem a = static_cast<FiniteRing::Elem>(k / n);
    const FiniteRing::Elem b = static_cast<FiniteRing::Elem>(k % n);
    const FiniteRing::Elem ab1 = ring.add(ring.one(), ring.mul(a, b));
    FiniteRing::Elem unused;
    if (!ring.try_inverse(ab1, unused)) continue;
    const FiniteRing::Elem ba1 = ring.add(ring.one(), ring.mul(b, a));
    FiniteRing::Elem ba1_inv;
    if (!ring.try_inverse(ba1, ba1_inv))
      throw internal_error("1+ab a unit but 1+ba not");
    gens.push_back(ring.mul(ab1, ba1_inv));
  }
  sort_unique(gens);
  return gens;
}

std::vector<FiniteRing::Elem> theta_generators_parallel(const FiniteRing& ring,
                                                        bool reversed) {
  const std::size_t n = ring.size();
  std::vector<FiniteRing::Elem> gens;
#ifdef _OPENMP
  bool consistency_failed = false;
#pragma omp parallel
  {
    std::vector<FiniteRing::Elem> local;
#pragma omp for schedule(static) nowait
    for (long long idx = 0; idx < static_cast<long long>(n * n); ++idx) {
      const std::size_t k =
          reversed ? n * n - 1 - static_cast<std::size_t>(idx)
                   : static_cast<std::size_t>(idx);
      const FiniteRing::Elem a = static_cast<FiniteRing::Elem>(k / n);
      const FiniteRing::Elem b = static_cast<FiniteRing::Elem>(k % n);
      const FiniteRing::Elem ab1 = ring.add(ring.one(), ring.mul(a, b));
      FiniteRing::Elem unused;
      if (!ring.try_inverse(ab1, unused)) continue;
      const FiniteRing::Elem ba1 = ring.add(ring.one(), ring.mul(b, a));
      FiniteRing::Elem ba1_inv;
      if (!ring.try_inverse(ba1, ba1_inv)) {
#pragma omp atomic write
        consistency_failed = true;
        continue;
      }
      local.push_back(ring.mul(ab1, ba1_inv));
    }
#pragma omp critical
    gens.insert(gens.end(), local.begin(), local.end());
  }
  if (consistency_failed)
    throw internal_error("1+ab a unit but 1+ba not");
#else
  return theta_generators_serial(ring, reversed);
#endif
  sort_unique(gens);
  return gens;
}

FiniteGroup subgroup_closure(const FiniteRing& ring,
                             const std::vector<FiniteRing::Elem>& generators) {
  // Breadth-first orbit of the identity under right multiplication by the
  // generators; in a finite group the generated submonoid is the subgroup.
  std::unordered_set<FiniteRing::Elem> seen{ring.one()};
  std::deque<FiniteRing::Elem> frontier{ring.one()};
  while (!frontier.empty()) {
    const FiniteRing::Elem x = frontier.front();
    frontier.pop_front();
    for (FiniteRing::Elem g : generators) {
      const FiniteRing::Elem y = ring.mul(x, g);
      if (seen.insert(y).second) frontier.push_back(y);
    }
  }
  return FiniteGroup(ring,
                     std::vector<FiniteRing::Elem>(seen.begin(), seen.end()));
}

FiniteGroup commutator_subgroup(const FiniteRing& ring,
                                const FiniteGroup& units, bool parallel) {
  const auto gens = parallel
                        ? commutator_generators_parallel(ring, units)
                        : commutator_generators_serial(ring, units);
  return subgroup_closure(ring, gens);
}

FiniteGroup ker_theta(const FiniteRing& ring, bool parallel) {
  const auto gens = parallel ? theta_generators_parallel(ring)
                             : theta_generators_serial(ring);
  return subgroup_closure(ring, gens);
}

VasersteinResult vaserstein_check(const FiniteRing& ring, bool parallel) {
  const FiniteGroup units = unit_group(ring);
  const FiniteGroup commutators = commutator_subgroup(ring, units, parallel);
  const FiniteGroup kernel = ker_theta(ring, parallel);

  for (FiniteRing::Elem e : commutators.elements())
    if (!kernel.contains(e))
      throw internal_error(
          "commutator subgroup escapes Ker theta; this must not happen");

  VasersteinResult r;
  r.ring_size = ring.size();
  r.unit_count = units.order();
  r.ker_theta_order = kernel.order();
  r.commutator_order = commutators.order();
  r.verdict = kernel.order() == commutators.order()
                  ? VasersteinVerdict::equal
                  : VasersteinVerdict::strict;
  return r;
}

}  // namespace cmk
