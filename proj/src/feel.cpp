#include "elp/feel.hpp"

#include "engine.hpp"

namespace elp {

namespace {

bool bi_sat_rec(const HTPair& real, const BeliefView& w, const TotalView& wt,
                const FormulaPtr& f) {
  switch (f->kind) {
    case Formula::Kind::Bot: return false;
    case Formula::Kind::Atom: return real.here >> f->atom & 1;
    case Formula::Kind::And:
      return bi_sat_rec(real, w, wt, f->lhs) && bi_sat_rec(real, w, wt, f->rhs);
    case Formula::Kind::Or:
      return bi_sat_rec(real, w, wt, f->lhs) || bi_sat_rec(real, w, wt, f->rhs);
    case Formula::Kind::Implies:
      return (!bi_sat_rec(real, w, wt, f->lhs) ||
              bi_sat_rec(real, w, wt, f->rhs)) &&
             (!s5_sat(real.there, wt, f->lhs) || s5_sat(real.there, wt, f->rhs));
    case Formula::Kind::K:
      for (const auto& p : w.pairs)
        if (!bi_sat_rec(p, w, wt, f->lhs)) return false;
      return true;
  }
  return false;
}

}  // namespace

bool bi_sat(const BeliefInterpretation& i, const FormulaPtr& f) {
  return bi_sat_rec(i.real, i.view, there_view(i.view), f);
}

bool bi_sat(const BeliefInterpretation& i, const Theory& g) {
  const TotalView wt = there_view(i.view);
  for (const auto& f : g.formulas)
    if (!bi_sat_rec(i.real, i.view, wt, f)) return false;
  return true;
}

bool bi_neg_sat_check(const BeliefInterpretation& i, const FormulaPtr& f) {
  return !s5_sat(i.real.there, there_view(i.view), f);
}

bool feel_epistemic_model(const BeliefView& w, const Theory& g) {
  const TotalView wt = there_view(w);
  for (const auto& p : w.pairs)
    for (const auto& f : g.formulas)
      if (!bi_sat_rec(p, w, wt, f)) return false;
  return true;
}

bool view_leq(const BeliefView& w1, const BeliefView& w2) {
  for (const auto& p2 : w2.pairs) {
    bool dominated = false;
    for (const auto& p1 : w1.pairs)
      if (p1.there == p2.there && (p1.here & ~p2.here) == 0) {
        dominated = true;
        break;
      }
    if (!dominated) return false;
  }
  for (const auto& p1 : w1.pairs) {
    bool dominates = false;
    for (const auto& p2 : w2.pairs)
      if (p1.there == p2.there && (p1.here & ~p2.here) == 0) {
        dominates = true;
        break;
      }
    if (!dominates) return false;
  }
  return true;
}

bool view_lt(const BeliefView& w1, const BeliefView& w2) {
  return view_leq(w1, w2) && canonical(w1) != canonical(w2);
}

bool is_feel_world_view(const Theory& g, const TotalView& w) {
  if (w.empty()) return false;
  const detail::Arena ar = detail::Arena::build(g);
  std::uint32_t wm = 0;
  for (Interp t : w) wm |= 1u << t;
  detail::ViewEval ve(ar, wm);
  return ve.epistemic_model() && !detail::has_smaller_epistemic_model(ve);
}

std::vector<TotalView> feel_world_views(const Theory& g, int cap) {
  const int n = g.sig.size();
  if (n > cap)
    throw CapExceeded("feel_world_views: signature of " + std::to_string(n) +
                      " atoms exceeds cap " + std::to_string(cap));
  const detail::Arena ar = detail::Arena::build(g);
  std::vector<TotalView> out;
  const std::uint64_t end = std::uint64_t(1) << ar.m();
  for (std::uint64_t wm = 1; wm < end; ++wm) {
    detail::ViewEval ve(ar, static_cast<std::uint32_t>(wm));
    if (!ve.epistemic_model()) continue;
    if (!detail::has_smaller_epistemic_model(ve)) out.push_back(ve.wlist);
  }
  return sorted_views(std::move(out));
}

}  // namespace elp
