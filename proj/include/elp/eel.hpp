#pragma once

#include "elp/feel.hpp"

// Simple belief views and EEL world-view enumeration, plus the EEL+G91
// combination.

namespace elp {

// Simple: any two pairs sharing a there-set share the here-set.
bool is_simple(const BeliefView& w);

// Total epistemic models with no strictly smaller *simple* epistemic model.
std::vector<TotalView> eel_world_views(const Theory& g,
                                       int cap = kDefaultEpistemicCap);

// Same set computed from the original formulation: W is kept unless some
// simple epistemic model W' has (W')^t = W and a proper here-set somewhere.
// Exhaustive over per-there-set here choices; differential oracle only.
std::vector<TotalView> eel_world_views_definitional(
    const Theory& g, int cap = kDefaultEpistemicCap);

std::vector<TotalView> eel_g91_world_views(const Theory& g,
                                           int cap = kDefaultEpistemicCap);

bool is_eel_world_view(const Theory& g, const TotalView& w);

}  // namespace elp
