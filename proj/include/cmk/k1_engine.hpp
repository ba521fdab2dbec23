#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cmk/series_matrix.hpp"

namespace cmk {

// Summand list of the representation generator M = R + m.
std::vector<Part> generator_parts();

// X = sum of M_i^{n_i} against the generator M = sum of M_i^{g_i}; the
// generator multiplicities are all >= 1 and index 0 is the free module.
struct Decomposition {
  std::vector<long> part_counts;       // n_i, not all zero
  std::vector<long> generator_counts;  // g_i >= 1

  static Decomposition against_generator(std::vector<long> counts) {
    const std::size_t size = counts.size();
    return {std::move(counts), std::vector<long>(size, 1)};
  }
};

// Pure index bookkeeping of the embedding X + Y -> M^q: q is minimal with
// q*g_i >= n_i, Y absorbs the leftover multiplicities, and within module
// index i the n_i slots of X followed by the v_i slots of Y fill the q
// copies of M_i^{g_i} in order.
struct TildePlan {
  long q = 0;
  std::vector<long> leftover;                  // v_i = q*g_i - n_i
  std::vector<std::size_t> source_to_target;   // X+Y slot -> M^q slot
  std::size_t x_slots = 0;                     // leading slots carrying X
};

TildePlan tilde_plan(const Decomposition& x);

struct TildeResult {
  long q;
  SeriesMatrix matrix;  // on q copies of the generator parts
};

// The tilde construction: embeds an automorphism of X (modules over the
// two-index families, parts ordered free-then-ideal) as an automorphism
// of M^q. Throws not_invertible_error when alpha fails the diagonal-units
// criterion.
TildeResult tilde(const Decomposition& x, const SeriesMatrix& alpha);

// The almost-split sequence 0 -> m -> X_1 -> m -> 0 of a family:
//   dual: 0 -> m --inc--> R --X--> m -> 0
//   cusp: 0 -> m --(1,-T)^t--> R+m --(T^2, T)--> m -> 0
SeriesMatrix ar_left_map(Family fam, Field field, int precision);
SeriesMatrix ar_right_map(Family fam, Field field, int precision);
std::vector<Part> ar_middle_parts(Family fam);

// Closed-form lifts (beta, gamma) of an automorphism alpha of m through the
// family's almost-split sequence; both squares of the lifted diagram are
// re-verified by exact multiplication before returning.
struct ArLift {
  SeriesMatrix beta;  // automorphism of the middle term
  Series gamma;       // automorphism of the translate m
};
ArLift ar_lift(Family fam, const Series& alpha);

// One generator of Xi: the class of tilde(alpha) * tilde(beta)^{-1}
// * tilde(gamma), returned as its 2x2 representative on M = R + m.
SeriesMatrix xi_generator(Family fam, const Series& alpha);

// The determinant isomorphism on Aut(R + m)_ab: the residue of the (1,1)
// entry at the maximal ideal, paired with the 2x2 determinant computed in
// the commutative ring End(m) after corestricting every entry.
struct DeltaImage {
  FieldElem residue;
  Series det;  // End(m) multiplier in canonical form

  friend bool operator==(const DeltaImage&, const DeltaImage&) = default;
  std::string to_string(Family fam) const;
};
DeltaImage delta(const SeriesMatrix& a);

// delta followed by the identification End(m) = k (dual) or k[[T]] (cusp);
// with the multiplier encoding this is delta itself.
using OmegaImage = DeltaImage;
OmegaImage omega(const SeriesMatrix& a);

// Corestriction of an entry of End(R + m) to an End(m) multiplier.
Series corestrict_to_m(Family fam, const Series& s);

// diag(r * 1_R, 1_m), the representative of lambda(r).
SeriesMatrix lambda_matrix(Family fam, const Series& r);

// The induced map R* -> K1(mod R) through the explicit isomorphisms:
// for the dual numbers a+bX -> a^2 in k*; for the cusp the inclusion
// R* -> k[[T]]*. Always computed through the delta/omega pipeline and
// re-verified against the closed form.
FieldElem mu_image_dual(const Series& r);
Series mu_image_cusp(const Series& r);

// The four shear factors whose product is diag(r * 1_R, r^{-1} * 1_m),
// for r in 1 + m.
std::vector<ElementaryFactor> whitehead_factorization(Family fam,
                                                      const Series& r);

// e_ij(mu) == [e_ij(mu/2), d_j(-1)] on M = R + m, by exact multiplication.
bool commutator_identity_check(Family fam, std::size_t i, std::size_t j,
                               const Series& mu);

struct K1XiRow {
  std::string alpha;
  std::string omega;
};
struct K1LambdaRow {
  std::string unit;
  std::string image;
};

struct K1Report {
  Family family;
  std::string field_name;
  int precision = 0;
  std::uint64_t seed = 0;
  std::string sampling;  // "exhaustive (20 units)" or "seeded (100 samples)"
  std::string group;     // concrete description of K1(mod R)
  std::vector<K1XiRow> omega_of_xi;
  std::vector<K1LambdaRow> lambda_table;
};

// Computes the K1 report for a family: images of the Xi generators under
// omega and the lambda table of sample units, every row re-verified against
// its closed form before emission. Exhaustive over F_p when the unit count
// is <= 10^4, otherwise `samples` seeded pseudorandom draws. Sample batches
// evaluate in parallel unless switched off; rows are assembled by sample
// index, so reports are identical either way.
K1Report k1_compute(Family fam, Field field, int precision, long samples,
                    std::uint64_t seed, bool parallel = true);

}  // namespace cmk
