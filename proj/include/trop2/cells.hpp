#pragma once

// Label-closure enumeration shared by support sets and covectors.
//
// A cell is described by a finite label (a set of atom indices). Each label
// maps to an inequality system; when an inequality turns out to be an implicit
// equality on the cell, the atoms attached to it join the label. Starting from
// seed labels, every feasible candidate is closed to its maximal label and
// extended by one atom at a time, which reaches every face.

#include "trop2/polyhedron.hpp"

#include <functional>
#include <vector>

namespace trop2 {

using Label = std::vector<std::size_t>;  // sorted, unique atom indices

struct LabelledSystem {
  Polyhedron cell;
  /// joins[k]: atoms added to the label when inequality k is implicit.
  std::vector<std::vector<std::size_t>> joins;
};

struct LabelledCell {
  Label label;
  Polyhedron cell;
};

struct CellEnumerator {
  std::size_t atom_count = 0;
  std::function<LabelledSystem(const Label&)> build;
  /// Atoms that may be added to a maximal label (defaults to all others).
  std::function<bool(const Label&, std::size_t)> may_extend;
};

/// All maximal labels with nonempty cells, sorted by (size, lex).
std::vector<LabelledCell> enumerate_cells(const CellEnumerator& e, const std::vector<Label>& seeds);

bool label_less(const Label& a, const Label& b);
bool label_subset(const Label& small, const Label& big);

}  // namespace trop2
