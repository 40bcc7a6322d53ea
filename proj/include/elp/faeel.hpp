#pragma once

#include "elp/feel.hpp"

// Belief models, the belief-interpretation order, equilibrium and weak
// equilibrium belief models, FAEEL and weak autoepistemic world views, the
// negatively subjective reduct, and Moore-extension emulation.

namespace elp {

// Every pair of view + the real pair satisfies every formula.
bool belief_model(const BeliefInterpretation& i, const Theory& g);

// Interpretation order: same real there-set with shrinking real here-set,
// and the two view-domination conditions.
bool bint_leq(const BeliefInterpretation& i1, const BeliefInterpretation& i2);
bool bint_lt(const BeliefInterpretation& i1, const BeliefInterpretation& i2);

// <t|w> is a belief model with no strictly smaller belief model. The search
// only visits interpretations sharing the there-sets (forced by the order).
bool is_equilibrium_belief_model(Interp t, const TotalView& w, const Theory& g);

// As above, but counterexamples range over belief-total interpretations.
bool is_weak_equilibrium_belief_model(Interp t, const TotalView& w,
                                      const Theory& g);

// Fixpoint enumeration: W = { T : <T|W> is an equilibrium belief model }.
std::vector<TotalView> faeel_world_views_direct(const Theory& g,
                                                int cap = kDefaultEpistemicCap);

// Characterization engine: FEEL world views that are also G91 world views.
// Must agree with faeel_world_views_direct.
std::vector<TotalView> faeel_world_views(const Theory& g,
                                         int cap = kDefaultEpistemicCap);

// Membership test via the characterization: FEEL member and G91 member.
bool is_faeel_world_view(const Theory& g, const TotalView& w);

// Fixpoint over weak equilibrium belief models; provably equals the G91
// world views.
std::vector<TotalView> weak_autoepistemic_world_views(
    const Theory& g, int cap = kDefaultEpistemicCap);

// Replaces each maximal subformula -K phi by top if W |/= K phi, else bot.
Theory negatively_subjective_reduct(const Theory& g, const TotalView& w);

// FAEEL world views of g extended with excluded middle for every atom.
std::vector<TotalView> moore_extensions(const Theory& g,
                                        int cap = kDefaultEpistemicCap);

}  // namespace elp
