#include "cmk/text_io.hpp"

#include <fstream>
#include <sstream>

namespace cmk {

namespace {

std::string strip(const std::string& line) {
  std::string s = line;
  if (auto hash = s.find('#'); hash != std::string::npos) s.erase(hash);
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

// "key=value" -> value, or throw.
std::string kv(const std::string& tok, const std::string& key, long line) {
  const std::string prefix = key + "=";
  if (tok.rfind(prefix, 0) != 0)
    throw parse_error("expected " + key + "=..., got '" + tok + "'", line);
  return tok.substr(prefix.size());
}

long parse_long(const std::string& s, long line) {
  try {
    std::size_t used = 0;
    long v = std::stol(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::logic_error&) {
    throw parse_error("bad integer '" + s + "'", line);
  }
}

std::vector<long> parse_long_list(const std::string& s, long line) {
  std::vector<long> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, ',')) out.push_back(parse_long(item, line));
  return out;
}

}  // namespace

ArPresentation parse_presentation(std::istream& in) {
  ArPresentation p;
  long module_count = -1;
  std::string raw;
  long line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = strip(raw);
    if (line.empty()) continue;
    const std::vector<std::string> toks = split_ws(line);
    if (toks[0] == "modules:") {
      if (module_count >= 0)
        throw parse_error("duplicate modules: line", line_no);
      if (toks.size() != 2) throw parse_error("modules: wants a count", line_no);
      module_count = parse_long(toks[1], line_no);
      if (module_count < 2)
        throw parse_error("need at least two modules (R and one more)",
                          line_no);
    } else if (toks[0] == "seq") {
      if (module_count < 0)
        throw parse_error("seq before the modules: line", line_no);
      if (toks.size() != 4)
        throw parse_error("seq wants end=, tau=, middle=", line_no);
      ArSequence s;
      s.end = static_cast<std::size_t>(parse_long(kv(toks[1], "end", line_no),
                                                  line_no));
      s.translate = static_cast<std::size_t>(
          parse_long(kv(toks[2], "tau", line_no), line_no));
      s.middle = parse_long_list(kv(toks[3], "middle", line_no), line_no);
      p.sequences.push_back(std::move(s));
    } else {
      throw parse_error("unrecognized directive '" + toks[0] + "'", line_no);
    }
  }
  if (module_count < 0) throw parse_error("missing modules: line", line_no);
  p.labels = ArPresentation::default_labels(static_cast<std::size_t>(module_count));
  try {
    validate(p);
  } catch (const input_error& e) {
    throw parse_error(e.what(), line_no);
  }
  return p;
}

ArPresentation load_presentation(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open '" + path + "'");
  return parse_presentation(in);
}

FiniteRing parse_ring_spec(std::istream& in) {
  std::vector<FiniteRing::Factor> factors;
  std::string raw;
  long line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = strip(raw);
    if (line.empty()) continue;
    const std::vector<std::string> toks = split_ws(line);
    const bool head = toks[0] == "ring";
    if (!head && toks[0] != "factor")
      throw parse_error("unrecognized directive '" + toks[0] + "'", line_no);
    if (head != factors.empty())
      throw parse_error(head ? "duplicate ring line" : "factor before ring",
                        line_no);
    if (toks.size() != 4)
      throw parse_error("ring/factor wants kind=, n=, p=", line_no);
    if (kv(toks[1], "kind", line_no) != "matrix")
      throw parse_error("only kind=matrix is supported", line_no);
    FiniteRing::Factor f;
    f.n = static_cast<int>(parse_long(kv(toks[2], "n", line_no), line_no));
    f.p = static_cast<int>(parse_long(kv(toks[3], "p", line_no), line_no));
    factors.push_back(f);
  }
  if (factors.empty()) throw parse_error("missing ring line", line_no);
  try {
    return FiniteRing(factors);
  } catch (const input_error& e) {
    throw parse_error(e.what(), line_no);
  }
}

FiniteRing load_ring_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open '" + path + "'");
  return parse_ring_spec(in);
}

ReportFormat parse_report_format(const std::string& name) {
  if (name == "text") return ReportFormat::text;
  if (name == "structured") return ReportFormat::structured;
  throw input_error("unknown format '" + name + "' (text or structured)");
}

namespace {

std::string matrix_row_csv(const IntMatrix& m, std::size_t i) {
  std::string out;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    if (j) out += ',';
    out += m.at(i, j).str();
  }
  return out;
}

std::string torsion_csv(const AbelianGroup& g) {
  if (g.torsion.empty()) return "none";
  std::string out;
  for (std::size_t i = 0; i < g.torsion.size(); ++i) {
    if (i) out += ',';
    out += g.torsion[i].str();
  }
  return out;
}

void emit_upsilon(std::ostringstream& out, const IntMatrix& upsilon,
                  bool injective, const AbelianGroup& k0, ReportFormat fmt) {
  if (fmt == ReportFormat::text) {
    out << "upsilon (" << upsilon.rows() << " x " << upsilon.cols() << "):\n"
        << upsilon.to_string() << "\n"
        << "injective: " << (injective ? "true" : "false") << "\n"
        << "K0(mod R) = " << k0.to_string() << "\n";
  } else {
    out << "upsilon.rows = " << upsilon.rows() << "\n"
        << "upsilon.cols = " << upsilon.cols() << "\n";
    for (std::size_t i = 0; i < upsilon.rows(); ++i)
      out << "upsilon.row." << i << " = " << matrix_row_csv(upsilon, i) << "\n";
    out << "injective = " << (injective ? "true" : "false") << "\n"
        << "k0.free_rank = " << k0.free_rank << "\n"
        << "k0.torsion = " << torsion_csv(k0) << "\n"
        << "k0.group = " << k0.to_string() << "\n";
  }
}

}  // namespace

std::string format_k0_report(const IntMatrix& upsilon, bool injective,
                             const AbelianGroup& k0, ReportFormat fmt) {
  std::ostringstream out;
  if (fmt == ReportFormat::structured) out << "command = k0\n";
  emit_upsilon(out, upsilon, injective, k0, fmt);
  return out.str();
}

std::string format_dynkin_report(DynkinType type, const IntMatrix& upsilon,
                                 bool injective, const AbelianGroup& k0,
                                 ReportFormat fmt) {
  std::ostringstream out;
  if (fmt == ReportFormat::text)
    out << "type: " << type.name() << "\n";
  else
    out << "command = dynkin\ntype = " << type.name() << "\n";
  emit_upsilon(out, upsilon, injective, k0, fmt);
  return out.str();
}

std::string format_k1_report(const K1Report& r, ReportFormat fmt) {
  std::ostringstream out;
  if (fmt == ReportFormat::text) {
    out << "family: " << family_name(r.family) << "\n"
        << "field: " << r.field_name << "\n"
        << "precision: " << r.precision
        << "  # truncation is the only approximation; equalities exact mod "
        << (r.family == Family::dual ? 'X' : 'T') << "^" << r.precision
        << "\n"
        << "seed: " << r.seed << "\n"
        << "sampling: " << r.sampling << "\n"
        << "K1(mod R) = " << r.group << "\n"
        << "omega(Xi) generators:\n";
    for (const K1XiRow& row : r.omega_of_xi)
      out << "xi(" << row.alpha << ") ↦ " << row.omega << "\n";
    out << "lambda table (unit ↦ image):\n";
    for (const K1LambdaRow& row : r.lambda_table)
      out << row.unit << " ↦ " << row.image << "\n";
  } else {
    out << "command = k1\n"
        << "family = " << family_name(r.family) << "\n"
        << "field = " << r.field_name << "\n"
        << "precision = " << r.precision << "\n"
        << "seed = " << r.seed << "\n"
        << "sampling = " << r.sampling << "\n"
        << "group = " << r.group << "\n"
        << "xi.count = " << r.omega_of_xi.size() << "\n";
    for (std::size_t i = 0; i < r.omega_of_xi.size(); ++i)
      out << "xi." << i << ".alpha = " << r.omega_of_xi[i].alpha << "\n"
          << "xi." << i << ".omega = " << r.omega_of_xi[i].omega << "\n";
    out << "lambda.count = " << r.lambda_table.size() << "\n";
    for (std::size_t i = 0; i < r.lambda_table.size(); ++i)
      out << "lambda." << i << ".unit = " << r.lambda_table[i].unit << "\n"
          << "lambda." << i << ".image = " << r.lambda_table[i].image << "\n";
  }
  return out.str();
}

std::string format_semilocal_report(const FiniteRing& ring,
                                    const VasersteinResult& result,
                                    ReportFormat fmt) {
  const char* verdict =
      result.verdict == VasersteinVerdict::strict ? "strict" : "equal";
  std::ostringstream out;
  if (fmt == ReportFormat::text) {
    out << "ring: " << ring.name() << "\n"
        << "|A| = " << result.ring_size << "\n"
        << "|A*| = " << result.unit_count << "\n"
        << verdict << "; |Ker θ| = " << result.ker_theta_order
        << "; |[A*,A*]| = " << result.commutator_order << "\n";
  } else {
    out << "command = semilocal\n"
        << "ring = " << ring.name() << "\n"
        << "size = " << result.ring_size << "\n"
        << "units = " << result.unit_count << "\n"
        << "ker_theta = " << result.ker_theta_order << "\n"
        << "commutator = " << result.commutator_order << "\n"
        << "verdict = " << verdict << "\n";
  }
  return out.str();
}

}  // namespace cmk
