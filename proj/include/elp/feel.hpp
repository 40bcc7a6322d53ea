#pragma once

#include "elp/g91.hpp"

// HT x S5 satisfaction over belief views, the view order, and FEEL
// world-view enumeration.

namespace elp {

// Six-clause evaluation at a belief interpretation; implication checks the
// here-level condition and the there-level condition at <T|W^t>; K
// quantifies over all pairs of the view.
bool bi_sat(const BeliefInterpretation& i, const FormulaPtr& f);
bool bi_sat(const BeliefInterpretation& i, const Theory& g);

// Negation shortcut: <H,T|W> |= -phi iff <T|W^t> |/= phi.
bool bi_neg_sat_check(const BeliefInterpretation& i, const FormulaPtr& f);

// Every pair of the view, taken as real world, satisfies every formula.
bool feel_epistemic_model(const BeliefView& w, const Theory& g);

// View order: same there-sets, here-sets dominated in both directions.
bool view_leq(const BeliefView& w1, const BeliefView& w2);
bool view_lt(const BeliefView& w1, const BeliefView& w2);

// Total epistemic models with no strictly smaller epistemic model. The
// counterexample search only visits views sharing the candidate's there-sets
// (forced by the order).
std::vector<TotalView> feel_world_views(const Theory& g,
                                        int cap = kDefaultEpistemicCap);

// Membership test for a single total view (canonical, atoms within sig).
bool is_feel_world_view(const Theory& g, const TotalView& w);

}  // namespace elp
