#pragma once

#include <utility>

#include "elp/eel.hpp"
#include "elp/faeel.hpp"

// Epistemic splitting sets, bottom/top partition, the E_U reduct,
// restriction/composition of views, and splitting-based solving.

namespace elp {

enum class Semantics { G91, Feel, Faeel, Eel, EelG91 };

// World views of a theory/program under the selected semantics.
std::vector<TotalView> world_views(const Theory& g, Semantics s,
                                   int cap = kDefaultEpistemicCap);
std::vector<TotalView> world_views(const Program& p, Semantics s,
                                   int cap = kDefaultEpistemicCap);

bool is_world_view(const Theory& g, Semantics s, const TotalView& w);

enum class RuleClass { BottomOnly, TopOnly, Either, Neither };
enum class PlacementPolicy { BottomFirst, TopFirst };

struct NotASplittingSet : std::runtime_error {
  std::vector<Rule> offending;
  NotASplittingSet(const std::string& what, std::vector<Rule> offending)
      : std::runtime_error(what), offending(std::move(offending)) {}
};

struct SplitResult {
  Program bottom;  // B_U
  Program top;     // T_U
  std::vector<Rule> either_rules;  // rules satisfying both conditions
  PlacementPolicy policy;
};

// (i) Atoms(r) subset of U -> bottom; (ii) Atoms(Head + Body_obj) disjoint
// from U -> top; both -> Either; none -> Neither.
RuleClass classify_rule(const Rule& r, Interp u_mask);

bool is_splitting_set(Interp u_mask, const Program& p);

SplitResult split(const Program& p, Interp u_mask,
                  PlacementPolicy policy = PlacementPolicy::BottomFirst);

// E_U(p, wb): subjective reduct of the top program w.r.t. wb over U.
Program eu_reduct(const Program& p, Interp u_mask, const TotalView& wb,
                  PlacementPolicy policy = PlacementPolicy::BottomFirst);

TotalView restrict_view(const TotalView& w, Interp u_mask);
BeliefView restrict_view(const BeliefView& w, Interp u_mask);

// Pairwise unions; atom sets must be disjoint.
TotalView compose(const TotalView& wb, const TotalView& wt);

// All (wb, wt) with wb a world view of the bottom and wt of E_U(p, wb).
std::vector<std::pair<TotalView, TotalView>> solutions(
    const Program& p, Interp u_mask, Semantics s,
    int cap = kDefaultEpistemicCap,
    PlacementPolicy policy = PlacementPolicy::BottomFirst);

std::vector<TotalView> world_views_via_splitting(
    const Program& p, Interp u_mask, Semantics s,
    int cap = kDefaultEpistemicCap,
    PlacementPolicy policy = PlacementPolicy::BottomFirst);

}  // namespace elp
