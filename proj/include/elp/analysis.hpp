#pragma once

#include <optional>
#include <utility>

#include "elp/core.hpp"

// Epistemic dependence, stratification, and tightness with witness layers.

namespace elp {

struct DependenceGraph {
  // dep(a,b): a occurs in head/objective body, b in some subjective literal
  // of the same rule; plus_edges restricts b to unnegated subjective literals.
  std::vector<std::pair<int, int>> edges;
  std::vector<std::pair<int, int>> plus_edges;
  // Per rule: Atoms(r) minus subjective-literal atoms; must share a layer.
  std::vector<Interp> coatom_groups;
};

DependenceGraph dep_pairs(const Program& p);

// Atom index -> layer. Satisfies: equal layers inside every coatom group,
// and strictly decreasing layers along every (plus_)edge.
using LayerAssignment = std::vector<int>;

std::optional<LayerAssignment> stratify(const Program& p);
std::optional<LayerAssignment> tight_stratify(const Program& p);

}  // namespace elp
