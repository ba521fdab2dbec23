#pragma once

#include <string>
#include <vector>

#include "cmk/int_matrix.hpp"

namespace cmk {

// One almost-split sequence 0 -> translate -> (middle) -> end -> 0, with the
// middle term recorded as multiplicities over the module indices 0..t
// (index 0 is the free module and never ends a sequence).
struct ArSequence {
  std::size_t end = 0;        // in 1..t
  std::size_t translate = 0;  // in 1..t
  std::vector<long> middle;   // size t+1, entries >= 0
};

// Labeled indecomposables M0..Mt (M0 reserved for the free module) plus one
// sequence per non-free index. Input is trusted ring-theoretically: only the
// combinatorial invariants below are validated.
struct ArPresentation {
  std::vector<std::string> labels;     // size t+1
  std::vector<ArSequence> sequences;   // size t

  std::size_t module_count() const { return labels.size(); }
  static std::vector<std::string> default_labels(std::size_t count);
};

// Throws input_error if the presentation violates its invariants
// (one sequence per index 1..t, indices in range, sizes consistent).
void validate(const ArPresentation& p);

// The (t+1) x t matrix whose column j has entries
// y_ij = [i == translate(j)] + [i == end(j)] - middle_ij;
// the two bracket contributions add up when translate(j) == end(j).
IntMatrix build_upsilon(const ArPresentation& p);

AbelianGroup k0_group(const ArPresentation& p);

enum class DynkinSeries { A, D, E };

struct DynkinType {
  DynkinSeries series;
  std::size_t rank;

  static DynkinType parse(const std::string& name);  // "A3", "D4", "E8"
  std::string name() const;
};

// Undirected edges of the Dynkin graph, vertices 1..rank.
std::vector<std::pair<std::size_t, std::size_t>> dynkin_edges(DynkinType t);

// Vertices of the Dynkin graph adjacent to the extending vertex of the
// extended diagram (the slot the free module occupies).
std::vector<std::size_t> dynkin_affine_neighbors(DynkinType t);

// Upsilon for the corresponding rational double point: rows 1..t form the
// Cartan matrix (2 on the diagonal, -1 on edges), row 0 has -1 at each
// neighbor of the extending vertex. Uses translate = end at every vertex.
IntMatrix dynkin_upsilon(DynkinType t);

}  // namespace cmk
