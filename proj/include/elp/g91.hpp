#pragma once

#include "elp/views.hpp"

// Classical modal satisfaction over total belief views (S5 when the real
// world belongs to the view, KD45 otherwise), the subjective reduct, and
// G91 world-view enumeration.

namespace elp {

constexpr int kDefaultEpistemicCap = 5;

bool s5_sat(Interp real, const TotalView& view, const FormulaPtr& f);
bool s5_sat(Interp real, const TotalView& view, const Theory& g);

// True iff every member of the view satisfies every formula at itself.
bool epistemic_model_s5(const TotalView& view, const Theory& g);

// Replaces each maximal subformula K phi with Atoms(phi) inside u_mask by
// top/bot according to the view; K subformulas over other atoms are kept.
Theory subjective_reduct(const Theory& g, const TotalView& view, Interp u_mask);
Program subjective_reduct(const Program& p, const TotalView& view, Interp u_mask);

// All non-empty W over the signature with W = SM[reduct(g, W)].
std::vector<TotalView> g91_world_views(const Theory& g,
                                       int cap = kDefaultEpistemicCap);

// Membership test: w == SM[reduct(g, w)]. w must be canonical.
bool is_g91_world_view(const Theory& g, const TotalView& w);

}  // namespace elp
