#pragma once

#include <algorithm>
#include <vector>

#include "elp/ht.hpp"

// Belief-view carriers. A total view is a non-empty set of interpretations;
// the general form is a non-empty set of HT pairs. Both are kept sorted and
// duplicate-free so set equality is vector equality.

namespace elp {

using TotalView = std::vector<Interp>;

struct BeliefView {
  std::vector<HTPair> pairs;

  bool total() const {
    return std::all_of(pairs.begin(), pairs.end(),
                       [](const HTPair& p) { return p.total(); });
  }
  auto operator<=>(const BeliefView&) const = default;
};

// View plus a distinguished real world, possibly outside the view.
struct BeliefInterpretation {
  BeliefView view;
  HTPair real;

  bool total() const { return real.total() && view.total(); }
  bool belief_total() const { return view.total(); }
};

inline TotalView canonical(TotalView v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

inline BeliefView canonical(BeliefView v) {
  std::sort(v.pairs.begin(), v.pairs.end());
  v.pairs.erase(std::unique(v.pairs.begin(), v.pairs.end()), v.pairs.end());
  return v;
}

inline BeliefView as_belief_view(const TotalView& w) {
  BeliefView v;
  v.pairs.reserve(w.size());
  for (Interp t : w) v.pairs.push_back({t, t});
  return v;
}

// The there-projection W^t.
inline TotalView there_view(const BeliefView& w) {
  TotalView t;
  t.reserve(w.pairs.size());
  for (const auto& p : w.pairs) t.push_back(p.there);
  return canonical(std::move(t));
}

std::vector<TotalView> sorted_views(std::vector<TotalView> views);

}  // namespace elp
