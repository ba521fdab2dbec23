#pragma once

#include <iosfwd>
#include <string>

#include "cmk/ar_quiver.hpp"
#include "cmk/finite_ring.hpp"
#include "cmk/k1_engine.hpp"
#include "cmk/semilocal.hpp"

namespace cmk {

// Line-oriented input formats. '#' starts a comment, blank lines are
// skipped. An AR presentation is
//     modules: <t+1>
//     seq end=<j> tau=<i> middle=<n0,n1,...,nt>     (one line per j)
// and a ring spec is
//     ring kind=matrix n=<n> p=<p>
//     factor kind=matrix n=<n> p=<p>                (optional, repeatable)
// Parse failures throw parse_error with a 1-based line number.
ArPresentation parse_presentation(std::istream& in);
ArPresentation load_presentation(const std::string& path);
FiniteRing parse_ring_spec(std::istream& in);
FiniteRing load_ring_spec(const std::string& path);

enum class ReportFormat { text, structured };
ReportFormat parse_report_format(const std::string& name);

// Deterministic report renderers; identical inputs yield identical bytes.
std::string format_k0_report(const IntMatrix& upsilon, bool injective,
                             const AbelianGroup& k0, ReportFormat fmt);
std::string format_dynkin_report(DynkinType type, const IntMatrix& upsilon,
                                 bool injective, const AbelianGroup& k0,
                                 ReportFormat fmt);
std::string format_k1_report(const K1Report& report, ReportFormat fmt);
std::string format_semilocal_report(const FiniteRing& ring,
                                    const VasersteinResult& result,
                                    ReportFormat fmt);

}  // namespace cmk
