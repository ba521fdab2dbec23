#include "cmk/k1_engine.hpp"

#include <numeric>
#include <sstream>

#include "cmk/parallel.hpp"
#include "cmk/sampling.hpp"

namespace cmk {

std::vector<Part> generator_parts() {
  return {Part::free_module, Part::ideal};
}

TildePlan tilde_plan(const Decomposition& x) {
  const std::size_t t1 = x.part_counts.size();
  if (t1 == 0 || x.generator_counts.size() != t1)
    throw input_error("decomposition and generator index ranges differ");
  long total = 0;
  for (std::size_t i = 0; i < t1; ++i) {
    if (x.part_counts[i] < 0) throw input_error("negative multiplicity");
    if (x.generator_counts[i] < 1)
      throw input_error("generator multiplicities must be >= 1");
    total += x.part_counts[i];
  }
  if (total == 0) throw input_error("tilde needs a nonzero module");

  TildePlan plan;
  // Minimality by direct scan from q = 1; total since every g_i >= 1.
  for (plan.q = 1;; ++plan.q) {
    bool fits = true;
    for (std::size_t i = 0; i < t1; ++i)
      if (plan.q * x.generator_counts[i] < x.part_counts[i]) fits = false;
    if (fits) break;
  }
  plan.leftover.resize(t1);
  for (std::size_t i = 0; i < t1; ++i)
    plan.leftover[i] = plan.q * x.generator_counts[i] - x.part_counts[i];

  const long gen_total =
      std::accumulate(x.generator_counts.begin(), x.generator_counts.end(), 0L);
  std::vector<long> gen_prefix(t1, 0);
  for (std::size_t i = 1; i < t1; ++i)
    gen_prefix[i] = gen_prefix[i - 1] + x.generator_counts[i - 1];

  // Source slots: X blocks by module index, then Y blocks by module index.
  // Target slot of the s'th combined copy of module i is fixed by
  // (copy, offset) = (s / g_i, s mod g_i).
  plan.x_slots = static_cast<std::size_t>(total);
  const long leftover_total =
      std::accumulate(plan.leftover.begin(), plan.leftover.end(), 0L);
  plan.source_to_target.resize(
      static_cast<std::size_t>(total + leftover_total));

  long x_base = 0, y_base = total;
  std::vector<long> y_prefix(t1, 0);
  for (std::size_t i = 1; i < t1; ++i)
    y_prefix[i] = y_prefix[i - 1] + plan.leftover[i - 1];
  std::vector<long> x_prefix(t1, 0);
  for (std::size_t i = 1; i < t1; ++i)
    x_prefix[i] = x_prefix[i - 1] + x.part_counts[i - 1];

  for (std::size_t i = 0; i < t1; ++i) {
    const long g = x.generator_counts[i];
    for (long s = 0; s < plan.q * g; ++s) {
      const long source = s < x.part_counts[i]
                              ? x_base + x_prefix[i] + s
                              : y_base + y_prefix[i] + (s - x.part_counts[i]);
      const long target = (s / g) * gen_total + gen_prefix[i] + (s % g);
      plan.source_to_target[static_cast<std::size_t>(source)] =
          static_cast<std::size_t>(target);
    }
  }
  return plan;
}

namespace {

std::vector<Part> family_part_list(const Decomposition& x) {
  if (x.part_counts.size() != 2)
    throw input_error("series tilde works over the two-index families");
  std::vector<Part> parts;
  for (long c = 0; c < x.part_counts[0]; ++c) parts.push_back(Part::free_module);
  for (long c = 0; c < x.part_counts[1]; ++c) parts.push_back(Part::ideal);
  return parts;
}

}  // namespace

TildeResult tilde(const Decomposition& x, const SeriesMatrix& alpha) {
  const std::vector<Part> x_parts = family_part_list(x);
  if (alpha.row_parts() != x_parts || alpha.col_parts() != x_parts)
    throw input_error("alpha is not an endomorphism of the stated module");
  if (!is_invertible(alpha))
    throw not_invertible_error("tilde needs an automorphism");

  const TildePlan plan = tilde_plan(x);
  std::vector<Part> target_parts;
  for (long c = 0; c < plan.q; ++c) {
    for (long i = 0; i < x.generator_counts[0]; ++i)
      target_parts.push_back(Part::free_module);
    for (long i = 0; i < x.generator_counts[1]; ++i)
      target_parts.push_back(Part::ideal);
  }

  const std::size_t n = plan.source_to_target.size();
  SeriesMatrix result(alpha.family(), alpha.field(), alpha.precision(),
                      target_parts, target_parts);
  const Series one = Series::one(alpha.field(), alpha.precision());
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const std::size_t ta = plan.source_to_target[a];
      const std::size_t tb = plan.source_to_target[b];
      if (a < plan.x_slots && b < plan.x_slots)
        result.set(ta, tb, alpha.at(a, b));
      else if (a == b)
        result.set(ta, tb, one);
    }
  return {plan.q, result};
}

std::vector<Part> ar_middle_parts(Family fam) {
  if (fam == Family::dual) return {Part::free_module};
  return {Part::free_module, Part::ideal};
}

SeriesMatrix ar_left_map(Family fam, Field field, int precision) {
  SeriesMatrix m(fam, field, precision, ar_middle_parts(fam), {Part::ideal});
  m.set(0, 0, Series::one(field, precision));  // the inclusion m -> R
  if (fam == Family::cusp)
    m.set(1, 0, -Series::monomial(field, precision, 1));
  return m;
}

SeriesMatrix ar_right_map(Family fam, Field field, int precision) {
  SeriesMatrix m(fam, field, precision, {Part::ideal}, ar_middle_parts(fam));
  if (fam == Family::dual) {
    m.set(0, 0, Series::monomial(field, precision, 1));  // multiply by X
  } else {
    m.set(0, 0, Series::monomial(field, precision, 2));
    m.set(0, 1, Series::monomial(field, precision, 1));
  }
  return m;
}

namespace {

SeriesMatrix one_by_one_on_ideal(Family fam, const Series& value) {
  SeriesMatrix m(fam, value.field(), value.precision(), {Part::ideal},
                 {Part::ideal});
  m.set(0, 0, value);
  return m;
}

void check_end_of_m_unit(Family fam, const Series& alpha) {
  check_family_precision(fam, alpha.precision());
  if (!alpha.is_unit())
    throw not_a_unit_error("automorphism of m required");
  if (fam == Family::dual && !alpha.coeff(1).is_zero())
    throw input_error("End(m) over the dual numbers is the constants");
}

}  // namespace

ArLift ar_lift(Family fam, const Series& alpha) {
  check_end_of_m_unit(fam, alpha);
  const Field field = alpha.field();
  const int prec = alpha.precision();

  ArLift lift{SeriesMatrix::identity(fam, field, prec, ar_middle_parts(fam)),
              alpha};
  if (fam == Family::dual) {
    // alpha = a 1_m lifts to beta = a 1_R, gamma = a 1_m.
    lift.beta.set(0, 0, Series::constant(field, prec, alpha.constant_term()));
  } else {
    // Write h = f + gT with f in R* and g in R constant.
    const Series f = alpha.drop_linear_coeff();
    const Series g = Series::constant(field, prec, alpha.coeff(1));
    const Series t = Series::monomial(field, prec, 1);
    lift.beta.set(0, 0, f);
    lift.beta.set(0, 1, g);
    lift.beta.set(1, 0, (g * t) * t);
    lift.beta.set(1, 1, f);
    lift.gamma = f - g * t;
  }

  // Both squares of the lifted diagram must commute exactly.
  const SeriesMatrix left = ar_left_map(fam, field, prec);
  const SeriesMatrix right = ar_right_map(fam, field, prec);
  const SeriesMatrix gamma_m = one_by_one_on_ideal(fam, lift.gamma);
  const SeriesMatrix alpha_m = one_by_one_on_ideal(fam, alpha);
  if (!(left * gamma_m == lift.beta * left))
    throw internal_error("left lift square does not commute");
  if (!(alpha_m * right == right * lift.beta))
    throw internal_error("right lift square does not commute");
  return lift;
}

SeriesMatrix xi_generator(Family fam, const Series& alpha) {
  check_end_of_m_unit(fam, alpha);
  const ArLift lift = ar_lift(fam, alpha);

  const Decomposition end_module = Decomposition::against_generator({0, 1});
  const Decomposition middle =
      fam == Family::dual ? Decomposition::against_generator({1, 0})
                          : Decomposition::against_generator({1, 1});

  const SeriesMatrix alpha_tilde =
      tilde(end_module, one_by_one_on_ideal(fam, alpha)).matrix;
  const SeriesMatrix beta_tilde = tilde(middle, lift.beta).matrix;
  const SeriesMatrix gamma_tilde =
      tilde(end_module, one_by_one_on_ideal(fam, lift.gamma)).matrix;

  return alpha_tilde * endo_matrix_inverse(beta_tilde) * gamma_tilde;
}

Series corestrict_to_m(Family fam, const Series& s) {
  return fam == Family::dual ? s.drop_linear_coeff() : s;
}

DeltaImage delta(const SeriesMatrix& a) {
  if (a.row_parts() != generator_parts() ||
      a.col_parts() != generator_parts())
    throw input_error("delta is defined on endomorphisms of R + m");
  if (!is_invertible(a))
    throw not_invertible_error("delta needs an automorphism");
  const Family fam = a.family();
  const Series d00 = corestrict_to_m(fam, a.at(0, 0));
  const Series d01 = corestrict_to_m(fam, a.at(0, 1));
  const Series d10 = corestrict_to_m(fam, a.at(1, 0));
  const Series d11 = corestrict_to_m(fam, a.at(1, 1));
  return {a.at(0, 0).constant_term(), d00 * d11 - d10 * d01};
}

OmegaImage omega(const SeriesMatrix& a) { return delta(a); }

std::string DeltaImage::to_string(Family fam) const {
  std::string second = fam == Family::dual
                           ? det.constant_term().to_string()
                           : det.to_string('T');
  return "(" + residue.to_string() + ", " + second + ")";
}

SeriesMatrix lambda_matrix(Family fam, const Series& r) {
  check_family_precision(fam, r.precision());
  if (!r.is_unit()) throw not_a_unit_error("lambda needs a unit of R");
  if (fam == Family::cusp && !cusp_ring_member(r))
    throw input_error("unit does not lie in the cusp subring");
  SeriesMatrix m = SeriesMatrix::identity(fam, r.field(), r.precision(),
                                          generator_parts());
  m.set(0, 0, r);
  return m;
}

FieldElem mu_image_dual(const Series& r) {
  const OmegaImage om = omega(lambda_matrix(Family::dual, r));
  // chi collapses (b, a) to b*a.
  const FieldElem image = om.residue * om.det.constant_term();
  const FieldElem a = r.constant_term();
  if (!(image == a * a))
    throw internal_error("dual mu image disagrees with the closed form a^2");
  return image;
}

Series mu_image_cusp(const Series& r) {
  const OmegaImage om = omega(lambda_matrix(Family::cusp, r));
  // The quotient by omega(Xi) = k* x {1} keeps the second component.
  if (!(om.residue == r.constant_term()))
    throw internal_error("cusp lambda residue disagrees with r(0)");
  if (!(om.det == r))
    throw internal_error("cusp mu image disagrees with the inclusion");
  return om.det;
}

std::vector<ElementaryFactor> whitehead_factorization(Family fam,
                                                      const Series& r) {
  check_family_precision(fam, r.precision());
  const Field field = r.field();
  const int prec = r.precision();
  if (!(r.constant_term() == FieldElem::one(field)) ||
      (fam == Family::cusp && !cusp_ring_member(r)))
    throw input_error("whitehead factorization needs r in 1 + m");

  const Series one = Series::one(field, prec);
  const Series r_inv = r.inverse();
  using EF = ElementaryFactor;
  return {
      EF{EF::Kind::shear, 1, 0, r_inv - one},
      EF{EF::Kind::shear, 0, 1, one},         // the inclusion m -> R
      EF{EF::Kind::shear, 1, 0, r - one},
      EF{EF::Kind::shear, 0, 1, -r_inv},
  };
}

bool commutator_identity_check(Family fam, std::size_t i, std::size_t j,
                               const Series& mu) {
  const Field field = mu.field();
  const int prec = mu.precision();
  const std::vector<Part> parts = generator_parts();
  const FieldElem half = FieldElem(field, 2).inverse();
  Series half_mu = mu;
  for (int k = 0; k < prec; ++k) half_mu.set_coeff(k, mu.coeff(k) * half);

  const Series minus_one = -Series::one(field, prec);
  const SeriesMatrix e_half =
      shear_factor(fam, field, prec, parts, i, j, half_mu);
  const SeriesMatrix d_minus =
      diagonal_factor(fam, field, prec, parts, j, minus_one);
  const SeriesMatrix e_half_inv =
      shear_factor(fam, field, prec, parts, i, j, -half_mu);
  const SeriesMatrix commutator = e_half * d_minus * e_half_inv * d_minus;
  return commutator == shear_factor(fam, field, prec, parts, i, j, mu);
}

namespace {

std::string unit_to_string(Family fam, const Series& s) {
  return s.to_string(fam == Family::dual ? 'X' : 'T');
}

}  // namespace

K1Report k1_compute(Family fam, Field field, int precision, long samples,
                    std::uint64_t seed, bool parallel) {
  if (fam == Family::dual) precision = 2;
  check_family_precision(fam, precision);
  if (samples < 1) throw input_error("sample budget must be >= 1");

  K1Report report;
  report.family = fam;
  report.field_name = field.name();
  report.precision = precision;
  report.seed = seed;
  if (fam == Family::dual) {
    report.group = "k*  (k = " + field.name() + ")";
  } else {
    report.group = "k[[T]]* truncated at T^" + std::to_string(precision) +
                   "  (k = " + field.name() + ")";
  }

  // Exhaustive enumeration whenever the F_p unit count stays small.
  const bool exhaustive = fam == Family::dual && !field.is_rational() &&
                          field.characteristic() *
                                  (field.characteristic() - 1) <=
                              10000;

  std::vector<Series> xi_alphas;
  std::vector<Series> lambda_units;
  if (exhaustive) {
    const std::int64_t p = field.characteristic();
    for (std::int64_t a = 1; a < p; ++a)
      xi_alphas.push_back(Series::constant(field, precision, a));
    for (std::int64_t a = 1; a < p; ++a)
      for (std::int64_t b = 0; b < p; ++b)
        lambda_units.push_back(
            Series::from_coeffs(field, precision, {a, b}));
    report.sampling = "exhaustive (" + std::to_string(lambda_units.size()) +
                      " units)";
  } else {
    for (long i = 0; i < samples; ++i) {
      Sampler s(mix_seed(seed, static_cast<std::uint64_t>(i)));
      if (fam == Family::dual) {
        xi_alphas.push_back(
            Series::constant(field, precision, s.nonzero_field_elem(field)));
        lambda_units.push_back(
            s.unit_series(field, precision, SupportTag::full()));
      } else {
        xi_alphas.push_back(
            s.unit_series(field, precision, SupportTag::full()));
        lambda_units.push_back(s.ring_unit(fam, field, precision));
      }
    }
    report.sampling = "seeded (" + std::to_string(samples) + " samples)";
  }

  report.omega_of_xi.resize(xi_alphas.size());
  indexed_for(xi_alphas.size(), parallel, [&](std::size_t i) {
    const Series& alpha = xi_alphas[i];
    const SeriesMatrix xi = xi_generator(fam, alpha);
    const OmegaImage om = omega(xi);
    OmegaImage expected{alpha.constant_term().inverse(),
                        Series::constant(field, precision, 1)};
    if (fam == Family::dual)
      expected.det = Series::constant(field, precision, alpha.constant_term());
    if (!(om == expected))
      throw internal_error("omega(xi) disagrees with the closed form at "
                           "generator " + unit_to_string(fam, alpha));
    report.omega_of_xi[i] = {unit_to_string(fam, alpha), om.to_string(fam)};
  });

  report.lambda_table.resize(lambda_units.size());
  indexed_for(lambda_units.size(), parallel, [&](std::size_t i) {
    const Series& unit = lambda_units[i];
    std::string image = fam == Family::dual
                            ? mu_image_dual(unit).to_string()
                            : mu_image_cusp(unit).to_string('T');
    report.lambda_table[i] = {unit_to_string(fam, unit), image};
  });
  return report;
}

}  // namespace cmk
