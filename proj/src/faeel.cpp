#include "elp/faeel.hpp"

#include <algorithm>

#include "engine.hpp"

namespace elp {

bool belief_model(const BeliefInterpretation& i, const Theory& g) {
  if (!feel_epistemic_model(i.view, g)) return false;
  return bi_sat(i, g);
}

bool bint_leq(const BeliefInterpretation& i1, const BeliefInterpretation& i2) {
  return i1.real.there == i2.real.there &&
         (i1.real.here & ~i2.real.here) == 0 && view_leq(i1.view, i2.view);
}

bool bint_lt(const BeliefInterpretation& i1, const BeliefInterpretation& i2) {
  if (!bint_leq(i1, i2)) return false;
  return i1.real != i2.real || canonical(i1.view) != canonical(i2.view);
}

bool is_equilibrium_belief_model(Interp t, const TotalView& w, const Theory& g) {
  const detail::Arena ar = detail::Arena::build(g);
  std::uint32_t wm = 0;
  for (Interp j : w) wm |= 1u << j;
  detail::ViewEval ve(ar, wm);
  if (!ve.epistemic_model()) return false;
  return detail::equilibrium_at(ve, detail::valid_guesses(ve), t);
}

bool is_weak_equilibrium_belief_model(Interp t, const TotalView& w,
                                      const Theory& g) {
  const detail::Arena ar = detail::Arena::build(g);
  std::uint32_t wm = 0;
  for (Interp j : w) wm |= 1u << j;
  detail::ViewEval ve(ar, wm);
  if (!ve.epistemic_model()) return false;
  return detail::weak_equilibrium_at(ve, t);
}

namespace {

template <typename EqAt>
std::vector<TotalView> fixpoint_views(const Theory& g, int cap,
                                      const char* who, EqAt&& eq_at) {
  const int n = g.sig.size();
  if (n > cap)
    throw CapExceeded(std::string(who) + ": signature of " + std::to_string(n) +
                      " atoms exceeds cap " + std::to_string(cap));
  const detail::Arena ar = detail::Arena::build(g);
  std::vector<TotalView> out;
  const std::uint64_t end = std::uint64_t(1) << ar.m();
  for (std::uint64_t wm = 1; wm < end; ++wm) {
    detail::ViewEval ve(ar, static_cast<std::uint32_t>(wm));
    if (!ve.epistemic_model()) continue;
    std::uint32_t rhs = 0;
    for (Interp t = 0; t < ar.m(); ++t)
      if (eq_at(ve, t)) rhs |= 1u << t;
    if (rhs == ve.wmask) out.push_back(ve.wlist);
  }
  return sorted_views(std::move(out));
}

}  // namespace

std::vector<TotalView> faeel_world_views_direct(const Theory& g, int cap) {
  return fixpoint_views(
      g, cap, "faeel_world_views_direct",
      [guesses = std::vector<detail::GuessInfo>{},
       last = std::uint32_t(0)](const detail::ViewEval& ve, Interp t) mutable {
        if (ve.wmask != last || guesses.empty()) {
          guesses = detail::valid_guesses(ve);
          last = ve.wmask;
        }
        return detail::equilibrium_at(ve, guesses, t);
      });
}

std::vector<TotalView> faeel_world_views(const Theory& g, int cap) {
  const std::vector<TotalView> feel = feel_world_views(g, cap);
  const std::vector<TotalView> g91 = g91_world_views(g, cap);
  std::vector<TotalView> out;
  std::set_intersection(feel.begin(), feel.end(), g91.begin(), g91.end(),
                        std::back_inserter(out));
  return out;
}

bool is_faeel_world_view(const Theory& g, const TotalView& w) {
  return is_feel_world_view(g, w) && is_g91_world_view(g, w);
}

std::vector<TotalView> weak_autoepistemic_world_views(const Theory& g, int cap) {
  return fixpoint_views(g, cap, "weak_autoepistemic_world_views",
                        [](const detail::ViewEval& ve, Interp t) {
                          return detail::weak_equilibrium_at(ve, t);
                        });
}

namespace {

bool is_neg_k(const FormulaPtr& f) {
  return f->kind == Formula::Kind::Implies &&
         f->lhs->kind == Formula::Kind::K &&
         f->rhs->kind == Formula::Kind::Bot;
}

bool is_const_formula(const FormulaPtr& f) {
  if (f->kind == Formula::Kind::Bot) return true;
  return f->kind == Formula::Kind::Implies &&
         f->lhs->kind == Formula::Kind::Bot &&
         f->rhs->kind == Formula::Kind::Bot;
}

std::pair<FormulaPtr, bool> neg_reduct_rec(const FormulaPtr& f,
                                           const TotalView& w) {
  if (is_neg_k(f)) {
    bool k_true = true;
    for (Interp j : w)
      if (!s5_sat(j, w, f->lhs->lhs)) {
        k_true = false;
        break;
      }
    return {k_true ? mk_bot() : mk_top(), true};
  }
  if (!f->lhs) return {f, false};
  if (f->kind == Formula::Kind::K) {
    auto [inner, changed] = neg_reduct_rec(f->lhs, w);
    return {changed ? mk_k(inner) : f, changed};
  }
  auto [l, cl] = neg_reduct_rec(f->lhs, w);
  auto [r, cr] = neg_reduct_rec(f->rhs, w);
  if (!cl && !cr) return {f, false};
  if (f->kind == Formula::Kind::Implies && r->kind == Formula::Kind::Bot &&
      is_const_formula(l))
    return {l->kind == Formula::Kind::Bot ? mk_top() : mk_bot(), true};
  FormulaPtr out = f->kind == Formula::Kind::And  ? mk_and(l, r)
                   : f->kind == Formula::Kind::Or ? mk_or(l, r)
                                                  : mk_implies(l, r);
  return {out, true};
}

}  // namespace

Theory negatively_subjective_reduct(const Theory& g, const TotalView& w) {
  Theory out;
  out.sig = g.sig;
  for (const auto& f : g.formulas)
    out.formulas.push_back(neg_reduct_rec(f, w).first);
  return out;
}

std::vector<TotalView> moore_extensions(const Theory& g, int cap) {
  Theory extended = g;
  for (int a = 0; a < g.sig.size(); ++a) {
    FormulaPtr p = mk_atom(a);
    extended.formulas.push_back(mk_or(p, mk_not(p)));
  }
  return faeel_world_views(extended, cap);
}

}  // namespace elp
