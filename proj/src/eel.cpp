#include "elp/eel.hpp"

#include <algorithm>
#include <bit>

#include "engine.hpp"

namespace elp {

bool is_simple(const BeliefView& w) {
  for (const auto& p : w.pairs)
    for (const auto& q : w.pairs)
      if (p.there == q.there && p.here != q.here) return false;
  return true;
}

bool is_eel_world_view(const Theory& g, const TotalView& w) {
  if (w.empty()) return false;
  const detail::Arena ar = detail::Arena::build(g);
  std::uint32_t wm = 0;
  for (Interp t : w) wm |= 1u << t;
  detail::ViewEval ve(ar, wm);
  return ve.epistemic_model() && !detail::has_smaller_simple_model(ve);
}

std::vector<TotalView> eel_world_views(const Theory& g, int cap) {
  const int n = g.sig.size();
  if (n > cap)
    throw CapExceeded("eel_world_views: signature of " + std::to_string(n) +
                      " atoms exceeds cap " + std::to_string(cap));
  const detail::Arena ar = detail::Arena::build(g);
  std::vector<TotalView> out;
  const std::uint64_t end = std::uint64_t(1) << ar.m();
  for (std::uint64_t wm = 1; wm < end; ++wm) {
    detail::ViewEval ve(ar, static_cast<std::uint32_t>(wm));
    if (!ve.epistemic_model()) continue;
    if (!detail::has_smaller_simple_model(ve)) out.push_back(ve.wlist);
  }
  return sorted_views(std::move(out));
}

namespace {

// All simple views over the given there-sets, one here-subset per there-set.
bool exists_smaller_simple(const TotalView& w, const Theory& g) {
  const std::size_t k = w.size();
  std::uint64_t combos = 1;
  for (Interp t : w) {
    combos *= std::uint64_t(1) << std::popcount(t);
    if (combos > 1u << 20)
      throw CapExceeded("eel_world_views_definitional: candidate space too large");
  }
  std::vector<Interp> here(w.begin(), w.end());
  for (std::uint64_t it = 0; it + 1 < combos; ++it) {
    // Odometer over proper/full subsets, skipping the all-full assignment.
    std::size_t i = 0;
    while (true) {
      here[i] = here[i] == 0 ? w[i] : (here[i] - 1) & w[i];
      if (here[i] != w[i] || ++i >= k) break;
    }
    BeliefView cand;
    for (std::size_t j = 0; j < k; ++j) cand.pairs.push_back({here[j], w[j]});
    cand = canonical(std::move(cand));
    if (feel_epistemic_model(cand, g)) return true;
  }
  return false;
}

}  // namespace

std::vector<TotalView> eel_world_views_definitional(const Theory& g, int cap) {
  const int n = g.sig.size();
  if (n > cap)
    throw CapExceeded("eel_world_views_definitional: signature of " +
                      std::to_string(n) + " atoms exceeds cap " +
                      std::to_string(cap));
  const Interp full = g.sig.full_mask();
  std::vector<TotalView> out;
  const std::uint64_t end = std::uint64_t(1) << ((std::uint64_t(1) << n));
  for (std::uint64_t wm = 1; wm < end; ++wm) {
    TotalView w;
    for (Interp t = 0; t <= full; ++t)
      if (wm >> t & 1) w.push_back(t);
    if (!feel_epistemic_model(as_belief_view(w), g)) continue;
    if (!exists_smaller_simple(w, g)) out.push_back(w);
  }
  return sorted_views(std::move(out));
}

std::vector<TotalView> eel_g91_world_views(const Theory& g, int cap) {
  const std::vector<TotalView> eel = eel_world_views(g, cap);
  const std::vector<TotalView> g91 = g91_world_views(g, cap);
  std::vector<TotalView> out;
  std::set_intersection(eel.begin(), eel.end(), g91.begin(), g91.end(),
                        std::back_inserter(out));
  return out;
}

}  // namespace elp
