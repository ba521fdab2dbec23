#include "cmk/ar_quiver.hpp"

#include <algorithm>
#include <set>

namespace cmk {

std::vector<std::string> ArPresentation::default_labels(std::size_t count) {
  std::vector<std::string> labels(count);
  labels[0] = "R";
  for (std::size_t i = 1; i < count; ++i) labels[i] = "M" + std::to_string(i);
  return labels;
}

void validate(const ArPresentation& p) {
  const std::size_t count = p.module_count();
  if (count < 2)
    throw input_error("presentation needs at least one non-free module");
  const std::size_t t = count - 1;
  if (p.sequences.size() != t)
    throw input_error("expected " + std::to_string(t) + " sequences, got " +
                      std::to_string(p.sequences.size()));
  std::set<std::string> seen_labels(p.labels.begin(), p.labels.end());
  if (seen_labels.size() != count)
    throw input_error("module labels must be distinct");

  std::vector<bool> has_sequence(count, false);
  for (const ArSequence& s : p.sequences) {
    if (s.end < 1 || s.end > t)
      throw input_error("sequence end index " + std::to_string(s.end) +
                        " out of range 1.." + std::to_string(t));
    if (s.translate < 1 || s.translate > t)
      throw input_error("translate index " + std::to_string(s.translate) +
                        " out of range 1.." + std::to_string(t));
    if (has_sequence[s.end])
      throw input_error("duplicate sequence ending at index " +
                        std::to_string(s.end));
    has_sequence[s.end] = true;
    if (s.middle.size() != count)
      throw input_error("middle multiplicities must list all " +
                        std::to_string(count) + " modules");
    for (long n : s.middle)
      if (n < 0) throw input_error("negative middle multiplicity");
  }
  for (std::size_t j = 1; j <= t; ++j)
    if (!has_sequence[j])
      throw input_error("missing sequence ending at index " +
                        std::to_string(j));
}

IntMatrix build_upsilon(const ArPresentation& p) {
  validate(p);
  const std::size_t t = p.module_count() - 1;
  IntMatrix upsilon(t + 1, t);
  for (const ArSequence& s : p.sequences) {
    const std::size_t j = s.end;
    for (std::size_t i = 0; i <= t; ++i) {
      Int y = -Int(s.middle[i]);
      if (i == s.translate) y += 1;
      if (i == s.end) y += 1;
      upsilon.at(i, j - 1) = y;
    }
  }
  return upsilon;
}

AbelianGroup k0_group(const ArPresentation& p) {
  return cokernel(build_upsilon(p));
}

DynkinType DynkinType::parse(const std::string& name) {
  if (name.size() < 2)
    throw input_error("bad Dynkin type '" + name + "'");
  DynkinSeries series;
  switch (name[0]) {
    case 'A': case 'a': series = DynkinSeries::A; break;
    case 'D': case 'd': series = DynkinSeries::D; break;
    case 'E': case 'e': series = DynkinSeries::E; break;
    default:
      throw input_error("bad Dynkin type '" + name + "' (expect A/D/E)");
  }
  std::size_t rank = 0;
  try {
    rank = std::stoul(name.substr(1));
  } catch (const std::logic_error&) {
    throw input_error("bad Dynkin rank in '" + name + "'");
  }
  DynkinType t{series, rank};
  dynkin_edges(t);  // validates the rank
  return t;
}

std::string DynkinType::name() const {
  const char* s = series == DynkinSeries::A   ? "A"
                  : series == DynkinSeries::D ? "D"
                                              : "E";
  return s + std::to_string(rank);
}

// Vertex labeling: A_n is the path 1-2-...-n. D_n is the path
// 1-2-...-(n-2) with both n-1 and n attached to n-2. E_n is the path
// 1-2-...-(n-2) with vertex n attached to the trivalent node, placed so the
// arm lengths come out (1, 2, n-4) as required.
std::vector<std::pair<std::size_t, std::size_t>> dynkin_edges(DynkinType t) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  switch (t.series) {
    case DynkinSeries::A:
      if (t.rank < 1) throw input_error("A_n needs n >= 1");
      for (std::size_t i = 1; i < t.rank; ++i) edges.emplace_back(i, i + 1);
      return edges;
    case DynkinSeries::D:
      if (t.rank < 4) throw input_error("D_n needs n >= 4");
      for (std::size_t i = 1; i + 1 < t.rank - 1; ++i)
        edges.emplace_back(i, i + 1);
      edges.emplace_back(t.rank - 2, t.rank - 1);
      edges.emplace_back(t.rank - 2, t.rank);
      return edges;
    case DynkinSeries::E: {
      if (t.rank < 6 || t.rank > 8) throw input_error("E_n needs n in 6..8");
      for (std::size_t i = 1; i + 1 <= t.rank - 1; ++i)
        edges.emplace_back(i, i + 1);
      // Trivalent node with arm lengths (rank-4, 2, 1).
      edges.emplace_back(t.rank - 3, t.rank);
      return edges;
    }
  }
  throw input_error("unreachable Dynkin series");
}

std::vector<std::size_t> dynkin_affine_neighbors(DynkinType t) {
  switch (t.series) {
    case DynkinSeries::A:
      // The extended cycle closes the path; for rank 1 the extending vertex
      // attaches to the single vertex.
      if (t.rank == 1) return {1};
      return {1, t.rank};
    case DynkinSeries::D:
      // The extending vertex forks off the second path vertex.
      return {2};
    case DynkinSeries::E:
      // Extends the arm that brings the arm profile to the affine one:
      // E6 -> short arm tip, E7/E8 -> the appropriate path end.
      if (t.rank == 6) return {t.rank};      // arm profile (2,2,1) -> (2,2,2)
      if (t.rank == 7) return {t.rank - 1};  // (3,2,1) -> (3,3,1)
      return {1};                            // E8: (4,2,1) -> (5,2,1)
  }
  throw input_error("unreachable Dynkin series");
}

IntMatrix dynkin_upsilon(DynkinType t) {
  IntMatrix upsilon(t.rank + 1, t.rank);
  for (std::size_t j = 1; j <= t.rank; ++j) upsilon.at(j, j - 1) = 2;
  for (auto [a, b] : dynkin_edges(t)) {
    upsilon.at(a, b - 1) = -1;
    upsilon.at(b, a - 1) = -1;
  }
  for (std::size_t v : dynkin_affine_neighbors(t)) upsilon.at(0, v - 1) = -1;
  return upsilon;
}

}  // namespace cmk
