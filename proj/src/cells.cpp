#include "trop2/cells.hpp"

#include "trop2/parallel.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>

namespace trop2 {

bool label_less(const Label& a, const Label& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

bool label_subset(const Label& small, const Label& big) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

namespace {

std::optional<Label> close_label(const CellEnumerator& e, const Label& candidate) {
  LabelledSystem sys = e.build(candidate);
  if (!sys.cell.is_feasible()) return std::nullopt;
  std::set<std::size_t> closed(candidate.begin(), candidate.end());
  const auto& imp = sys.cell.implicit_equalities();
  for (std::size_t k = 0; k < imp.size(); ++k)
    if (imp[k]) closed.insert(sys.joins[k].begin(), sys.joins[k].end());
  return Label(closed.begin(), closed.end());
}

}  // namespace

std::vector<LabelledCell> enumerate_cells(const CellEnumerator& e, const std::vector<Label>& seeds) {
  std::set<Label> tried;
  std::set<Label> found;
  std::vector<Label> frontier;
  for (const auto& s : seeds)
    if (tried.insert(s).second) frontier.push_back(s);

  while (!frontier.empty()) {
    std::vector<std::optional<Label>> closed(frontier.size());
    parallel_for(frontier.size(), [&](std::size_t i) { closed[i] = close_label(e, frontier[i]); });
    std::vector<Label> next;
    for (const auto& c : closed) {
      if (!c || !found.insert(*c).second) continue;
      for (std::size_t a = 0; a < e.atom_count; ++a) {
        if (std::binary_search(c->begin(), c->end(), a)) continue;
        if (e.may_extend && !e.may_extend(*c, a)) continue;
        Label ext = *c;
        ext.insert(std::upper_bound(ext.begin(), ext.end(), a), a);
        if (tried.insert(ext).second) next.push_back(std::move(ext));
      }
    }
    frontier = std::move(next);
  }

  std::vector<Label> labels(found.begin(), found.end());
  std::sort(labels.begin(), labels.end(), label_less);
  std::vector<LabelledCell> out(labels.size(), LabelledCell{{}, Polyhedron()});
  parallel_for(labels.size(), [&](std::size_t i) { out[i] = {labels[i], e.build(labels[i]).cell}; });
  return out;
}

}  // namespace trop2
