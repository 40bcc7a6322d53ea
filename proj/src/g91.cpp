#include "elp/g91.hpp"

#include <utility>

namespace elp {

bool s5_sat(Interp real, const TotalView& view, const FormulaPtr& f) {
  switch (f->kind) {
    case Formula::Kind::Bot: return false;
    case Formula::Kind::Atom: return real >> f->atom & 1;
    case Formula::Kind::And:
      return s5_sat(real, view, f->lhs) && s5_sat(real, view, f->rhs);
    case Formula::Kind::Or:
      return s5_sat(real, view, f->lhs) || s5_sat(real, view, f->rhs);
    case Formula::Kind::Implies:
      return !s5_sat(real, view, f->lhs) || s5_sat(real, view, f->rhs);
    case Formula::Kind::K:
      for (Interp j : view)
        if (!s5_sat(j, view, f->lhs)) return false;
      return true;
  }
  return false;
}

bool s5_sat(Interp real, const TotalView& view, const Theory& g) {
  for (const auto& f : g.formulas)
    if (!s5_sat(real, view, f)) return false;
  return true;
}

bool epistemic_model_s5(const TotalView& view, const Theory& g) {
  for (Interp j : view)
    if (!s5_sat(j, view, g)) return false;
  return true;
}

namespace {

bool k_value(const TotalView& view, const FormulaPtr& arg) {
  for (Interp j : view)
    if (!s5_sat(j, view, arg)) return false;
  return true;
}

bool is_const(const FormulaPtr& f) {
  if (f->kind == Formula::Kind::Bot) return true;
  return f->kind == Formula::Kind::Implies &&
         f->lhs->kind == Formula::Kind::Bot && f->rhs->kind == Formula::Kind::Bot;
}

bool const_value(const FormulaPtr& f) { return f->kind != Formula::Kind::Bot; }

// Substitutes qualifying maximal K subformulas; folds a negation whose body
// became a constant so program-shaped theories keep their shape.
std::pair<FormulaPtr, bool> reduct_rec(const FormulaPtr& f, const TotalView& view,
                                       Interp u_mask) {
  switch (f->kind) {
    case Formula::Kind::Bot:
    case Formula::Kind::Atom:
      return {f, false};
    case Formula::Kind::K:
      if ((atoms_of(f->lhs) & ~u_mask) == 0)
        return {k_value(view, f->lhs) ? mk_top() : mk_bot(), true};
      else {
        auto [inner, changed] = reduct_rec(f->lhs, view, u_mask);
        return {changed ? mk_k(inner) : f, changed};
      }
    default: {
      auto [l, cl] = reduct_rec(f->lhs, view, u_mask);
      auto [r, cr] = reduct_rec(f->rhs, view, u_mask);
      if (!cl && !cr) return {f, false};
      if (f->kind == Formula::Kind::Implies && r->kind == Formula::Kind::Bot &&
          is_const(l))
        return {const_value(l) ? mk_bot() : mk_top(), true};
      FormulaPtr out = f->kind == Formula::Kind::And   ? mk_and(l, r)
                       : f->kind == Formula::Kind::Or  ? mk_or(l, r)
                                                       : mk_implies(l, r);
      return {out, true};
    }
  }
}

}  // namespace

Theory subjective_reduct(const Theory& g, const TotalView& view, Interp u_mask) {
  Theory out;
  out.sig = g.sig;
  for (const auto& f : g.formulas)
    out.formulas.push_back(reduct_rec(f, view, u_mask).first);
  return out;
}

Program subjective_reduct(const Program& p, const TotalView& view, Interp u_mask) {
  Program out;
  out.sig = p.sig;
  for (const auto& r : p.rules) {
    Rule nr = r;
    for (auto& lit : nr.body) {
      if (!lit.subjective || (atoms_of(lit) & ~u_mask) != 0) continue;
      Literal obj{false, lit.inner_negs, 0, lit.base};
      bool value = k_value(view, literal_to_formula(obj));
      lit = Literal{false, lit.negs, 0, value ? Literal::kTop : Literal::kBot};
    }
    out.rules.push_back(std::move(nr));
  }
  return out;
}

namespace {

void collect_outermost_k(const FormulaPtr& f, std::vector<FormulaPtr>& out) {
  if (f->kind == Formula::Kind::K) {
    for (const auto& g : out)
      if (formula_equal(g, f)) return;
    out.push_back(f);
    return;
  }
  if (f->lhs) collect_outermost_k(f->lhs, out);
  if (f->rhs) collect_outermost_k(f->rhs, out);
}

FormulaPtr substitute_k(const FormulaPtr& f, const std::vector<FormulaPtr>& ks,
                        unsigned guess) {
  if (f->kind == Formula::Kind::K) {
    for (std::size_t j = 0; j < ks.size(); ++j)
      if (formula_equal(ks[j], f)) return guess >> j & 1 ? mk_top() : mk_bot();
    throw std::logic_error("unregistered K subformula");
  }
  if (!f->lhs) return f;
  return f->kind == Formula::Kind::And
             ? mk_and(substitute_k(f->lhs, ks, guess), substitute_k(f->rhs, ks, guess))
         : f->kind == Formula::Kind::Or
             ? mk_or(substitute_k(f->lhs, ks, guess), substitute_k(f->rhs, ks, guess))
         : f->kind == Formula::Kind::Implies
             ? mk_implies(substitute_k(f->lhs, ks, guess),
                          substitute_k(f->rhs, ks, guess))
             : f;
}

}  // namespace

bool is_g91_world_view(const Theory& g, const TotalView& w) {
  if (w.empty()) return false;
  return stable_models(subjective_reduct(g, w, g.sig.full_mask())) == w;
}

std::vector<TotalView> g91_world_views(const Theory& g, int cap) {
  const int n = g.sig.size();
  if (n > cap)
    throw CapExceeded("g91_world_views: signature of " + std::to_string(n) +
                      " atoms exceeds cap " + std::to_string(cap));

  std::vector<FormulaPtr> ks;
  for (const auto& f : g.formulas) collect_outermost_k(f, ks);
  if (ks.size() > 20)
    throw CapExceeded("g91_world_views: too many distinct subjective subformulas");

  // The reduct depends on the view only through the truth of its maximal
  // subjective subformulas, so guessing those values visits every fixpoint.
  std::vector<TotalView> out;
  for (unsigned guess = 0; guess < (1u << ks.size()); ++guess) {
    Theory reduct;
    reduct.sig = g.sig;
    for (const auto& f : g.formulas)
      reduct.formulas.push_back(substitute_k(f, ks, guess));
    TotalView w = stable_models(reduct);
    if (w.empty()) continue;
    bool consistent = true;
    for (std::size_t j = 0; j < ks.size() && consistent; ++j)
      consistent = k_value(w, ks[j]->lhs) == bool(guess >> j & 1);
    if (consistent) out.push_back(std::move(w));
  }
  return sorted_views(std::move(out));
}

}  // namespace elp
