#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "cmk/ar_quiver.hpp"
#include "cmk/k1_engine.hpp"
#include "cmk/semilocal.hpp"
#include "cmk/text_io.hpp"
#include "cmk/verify.hpp"

namespace {

// 0 = all requested checks pass, 2 = parse error, 3 = hypothesis failure,
// 4 = internal-consistency error, 1 = anything else.
enum ExitCode { kOk = 0, kOther = 1, kParse = 2, kHypothesis = 3, kInternal = 4 };

struct Options {
  std::string format = "text";
  std::string field = "5";
  int precision = 8;
  long samples = 100;
  std::uint64_t seed = 0;
};

int run_k0(const std::string& path, const Options& opt) {
  const cmk::ArPresentation p = cmk::load_presentation(path);
  const cmk::IntMatrix upsilon = cmk::build_upsilon(p);
  const bool injective = cmk::is_injective(upsilon);
  const cmk::AbelianGroup k0 = cmk::cokernel(upsilon);
  std::cout << cmk::format_k0_report(upsilon, injective, k0,
                                     cmk::parse_report_format(opt.format));
  return injective ? kOk : kHypothesis;
}

int run_dynkin(const std::string& type_name, const Options& opt) {
  const cmk::DynkinType type = cmk::DynkinType::parse(type_name);
  const cmk::IntMatrix upsilon = cmk::dynkin_upsilon(type);
  const bool injective = cmk::is_injective(upsilon);
  const cmk::AbelianGroup k0 = cmk::cokernel(upsilon);
  std::cout << cmk::format_dynkin_report(type, upsilon, injective, k0,
                                         cmk::parse_report_format(opt.format));
  return injective ? kOk : kHypothesis;
}

int run_k1(const std::string& family_name, const Options& opt) {
  const cmk::Family family = cmk::parse_family(family_name);
  const cmk::Field field = cmk::Field::parse(opt.field);
  const cmk::K1Report report =
      cmk::k1_compute(family, field, opt.precision, opt.samples, opt.seed);
  std::cout << cmk::format_k1_report(report,
                                     cmk::parse_report_format(opt.format));
  return kOk;
}

int run_semilocal(const std::string& ring_name, const std::string& path,
                  const Options& opt) {
  if (ring_name.empty() == path.empty())
    throw cmk::input_error("pass exactly one of --ring or an input file");
  const cmk::FiniteRing ring = ring_name.empty()
                                   ? cmk::load_ring_spec(path)
                                   : cmk::FiniteRing::parse_name(ring_name);
  const cmk::VasersteinResult result = cmk::vaserstein_check(ring);
  std::cout << cmk::format_semilocal_report(
      ring, result, cmk::parse_report_format(opt.format));
  return kOk;
}

int run_verify(const Options& opt, bool serial) {
  const auto results = cmk::run_verification_suite(opt.seed, !serial);
  std::cout << cmk::format_verification_report(
      results, cmk::parse_report_format(opt.format));
  return cmk::all_passed(results) ? kOk : kHypothesis;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact computations around the K-theory of maximal Cohen-Macaulay "
      "module categories: AR matrices and K0, the K1 engine for the "
      "dual-numbers and cusp families, and the finite-ring determinant lab"};
  app.require_subcommand(1);

  Options opt;
  app.add_option("--format", opt.format, "Report format: text | structured")
      ->capture_default_str();

  std::string k0_path;
  auto* k0 = app.add_subcommand(
      "k0", "Upsilon, injectivity and Coker Upsilon of a presentation file");
  k0->add_option("file", k0_path, "AR presentation file")->required();

  std::string dynkin_type;
  auto* dynkin = app.add_subcommand(
      "dynkin", "Upsilon of a rational double point (A_n, D_n, E6, E7, E8)");
  dynkin->add_option("type", dynkin_type, "Dynkin type, e.g. A3 or E6")
      ->required();

  std::string family;
  std::int64_t p_shortcut = 0;
  auto* k1 = app.add_subcommand("k1", "K1(mod R) report for a ring family");
  k1->add_option("--family", family, "dual | cusp")->required();
  k1->add_option("--field", opt.field, "Field: odd prime or Q")
      ->capture_default_str();
  k1->add_option("--p", p_shortcut, "Shorthand for --field <prime>");
  k1->add_option("--precision", opt.precision, "Series precision N >= 2")
      ->capture_default_str();
  k1->add_option("--samples", opt.samples, "Sample budget when not exhaustive")
      ->capture_default_str();
  k1->add_option("--seed", opt.seed, "Seed for sampled suites")
      ->capture_default_str();

  std::string ring_name, ring_path;
  auto* semilocal = app.add_subcommand(
      "semilocal", "Vaserstein kernel vs commutator subgroup on a finite ring");
  semilocal->add_option("--ring", ring_name, "Ring name such as M2F2 or F2xF2");
  semilocal->add_option("file", ring_path, "Ring spec file");

  bool serial = false;
  auto* verify = app.add_subcommand(
      "verify", "Run the full invariant suite of every module");
  verify->add_option("--seed", opt.seed, "Seed for randomized properties")
      ->capture_default_str();
  verify->add_flag("--serial", serial, "Disable the OpenMP kernels");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kParse;
  }

  try {
    if (p_shortcut != 0) opt.field = std::to_string(p_shortcut);
    if (k0->parsed()) return run_k0(k0_path, opt);
    if (dynkin->parsed()) return run_dynkin(dynkin_type, opt);
    if (k1->parsed()) return run_k1(family, opt);
    if (semilocal->parsed()) return run_semilocal(ring_name, ring_path, opt);
    if (verify->parsed()) return run_verify(opt, serial);
    return kOther;
  } catch (const cmk::parse_error& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const cmk::internal_error& e) {
    std::cerr << "internal consistency error: " << e.what() << "\n";
    return kInternal;
  } catch (const cmk::hypothesis_error& e) {
    std::cerr << "hypothesis failure: " << e.what() << "\n";
    return kHypothesis;
  } catch (const cmk::input_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kParse;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kOther;
  }
}
