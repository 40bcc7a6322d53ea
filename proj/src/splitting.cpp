#include "elp/splitting.hpp"

#include <algorithm>

namespace elp {

std::vector<TotalView> world_views(const Theory& g, Semantics s, int cap) {
  switch (s) {
    case Semantics::G91: return g91_world_views(g, cap);
    case Semantics::Feel: return feel_world_views(g, cap);
    case Semantics::Faeel: return faeel_world_views(g, cap);
    case Semantics::Eel: return eel_world_views(g, cap);
    case Semantics::EelG91: return eel_g91_world_views(g, cap);
  }
  throw std::logic_error("unknown semantics");
}

std::vector<TotalView> world_views(const Program& p, Semantics s, int cap) {
  return world_views(theory_of(p), s, cap);
}

bool is_world_view(const Theory& g, Semantics s, const TotalView& w) {
  switch (s) {
    case Semantics::G91: return is_g91_world_view(g, w);
    case Semantics::Feel: return is_feel_world_view(g, w);
    case Semantics::Faeel: return is_faeel_world_view(g, w);
    case Semantics::Eel: return is_eel_world_view(g, w);
    case Semantics::EelG91:
      return is_eel_world_view(g, w) && is_g91_world_view(g, w);
  }
  throw std::logic_error("unknown semantics");
}

RuleClass classify_rule(const Rule& r, Interp u_mask) {
  const bool bottom_ok = (atoms_of(r) & ~u_mask) == 0;
  Interp generative = r.head;
  for (const auto& l : r.body)
    if (!l.subjective) generative |= atoms_of(l);
  const bool top_ok = (generative & u_mask) == 0;
  if (bottom_ok && top_ok) return RuleClass::Either;
  if (bottom_ok) return RuleClass::BottomOnly;
  if (top_ok) return RuleClass::TopOnly;
  return RuleClass::Neither;
}

bool is_splitting_set(Interp u_mask, const Program& p) {
  return std::all_of(p.rules.begin(), p.rules.end(), [&](const Rule& r) {
    return classify_rule(r, u_mask) != RuleClass::Neither;
  });
}

SplitResult split(const Program& p, Interp u_mask, PlacementPolicy policy) {
  SplitResult res;
  res.bottom.sig = res.top.sig = p.sig;
  res.policy = policy;
  std::vector<Rule> offending;
  for (const auto& r : p.rules) {
    switch (classify_rule(r, u_mask)) {
      case RuleClass::BottomOnly: res.bottom.rules.push_back(r); break;
      case RuleClass::TopOnly: res.top.rules.push_back(r); break;
      case RuleClass::Either:
        res.either_rules.push_back(r);
        (policy == PlacementPolicy::BottomFirst ? res.bottom : res.top)
            .rules.push_back(r);
        break;
      case RuleClass::Neither: offending.push_back(r); break;
    }
  }
  if (!offending.empty()) {
    std::string what = "not an epistemic splitting set; offending rules:";
    for (const auto& r : offending) what += " {" + print_rule(r, p.sig) + "}";
    throw NotASplittingSet(what, std::move(offending));
  }
  return res;
}

Program eu_reduct(const Program& p, Interp u_mask, const TotalView& wb,
                  PlacementPolicy policy) {
  return subjective_reduct(split(p, u_mask, policy).top, wb, u_mask);
}

TotalView restrict_view(const TotalView& w, Interp u_mask) {
  TotalView out;
  out.reserve(w.size());
  for (Interp i : w) out.push_back(i & u_mask);
  return canonical(std::move(out));
}

BeliefView restrict_view(const BeliefView& w, Interp u_mask) {
  BeliefView out;
  out.pairs.reserve(w.pairs.size());
  for (const auto& p : w.pairs)
    out.pairs.push_back({p.here & u_mask, p.there & u_mask});
  return canonical(std::move(out));
}

TotalView compose(const TotalView& wb, const TotalView& wt) {
  Interp ab = 0, at = 0;
  for (Interp i : wb) ab |= i;
  for (Interp i : wt) at |= i;
  if (ab & at)
    throw std::invalid_argument("compose: views share atoms");
  TotalView out;
  out.reserve(wb.size() * wt.size());
  for (Interp b : wb)
    for (Interp t : wt) out.push_back(b | t);
  return canonical(std::move(out));
}

std::vector<std::pair<TotalView, TotalView>> solutions(
    const Program& p, Interp u_mask, Semantics s, int cap,
    PlacementPolicy policy) {
  const SplitResult parts = split(p, u_mask, policy);
  std::vector<std::pair<TotalView, TotalView>> out;
  for (const TotalView& wb : world_views(parts.bottom, s, cap)) {
    const Program eu = subjective_reduct(parts.top, wb, u_mask);
    for (TotalView& wt : world_views(eu, s, cap))
      out.emplace_back(wb, std::move(wt));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<TotalView> world_views_via_splitting(const Program& p,
                                                 Interp u_mask, Semantics s,
                                                 int cap,
                                                 PlacementPolicy policy) {
  std::vector<TotalView> out;
  for (const auto& [wb, wt] : solutions(p, u_mask, s, cap, policy))
    out.push_back(compose(wb, wt));
  return sorted_views(std::move(out));
}

}  // namespace elp
