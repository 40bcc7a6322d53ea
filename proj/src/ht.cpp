#include "elp/ht.hpp"

#include <stdexcept>

namespace elp {

bool classical_sat(Interp t, const FormulaPtr& f) {
  switch (f->kind) {
    case Formula::Kind::Bot: return false;
    case Formula::Kind::Atom: return t >> f->atom & 1;
    case Formula::Kind::And: return classical_sat(t, f->lhs) && classical_sat(t, f->rhs);
    case Formula::Kind::Or: return classical_sat(t, f->lhs) || classical_sat(t, f->rhs);
    case Formula::Kind::Implies:
      return !classical_sat(t, f->lhs) || classical_sat(t, f->rhs);
    case Formula::Kind::K:
      throw std::invalid_argument("classical_sat: formula contains K");
  }
  return false;
}

bool classical_sat(Interp t, const Theory& g) {
  for (const auto& f : g.formulas)
    if (!classical_sat(t, f)) return false;
  return true;
}

bool ht_sat(HTPair p, const FormulaPtr& f) {
  switch (f->kind) {
    case Formula::Kind::Bot: return false;
    case Formula::Kind::Atom: return p.here >> f->atom & 1;
    case Formula::Kind::And: return ht_sat(p, f->lhs) && ht_sat(p, f->rhs);
    case Formula::Kind::Or: return ht_sat(p, f->lhs) || ht_sat(p, f->rhs);
    case Formula::Kind::Implies:
      return (!classical_sat(p.there, f->lhs) || classical_sat(p.there, f->rhs)) &&
             (!ht_sat(p, f->lhs) || ht_sat(p, f->rhs));
    case Formula::Kind::K:
      throw std::invalid_argument("ht_sat: formula contains K");
  }
  return false;
}

bool ht_sat(HTPair p, const Theory& g) {
  for (const auto& f : g.formulas)
    if (!ht_sat(p, f)) return false;
  return true;
}

std::vector<Interp> stable_models(const Theory& g, int cap) {
  const int n = g.sig.size();
  if (n > cap)
    throw CapExceeded("stable_models: signature of " + std::to_string(n) +
                      " atoms exceeds cap " + std::to_string(cap));
  for (const auto& f : g.formulas)
    if (!is_objective(f))
      throw std::invalid_argument("stable_models: theory contains K");

  std::vector<Interp> out;
  const Interp limit = n == 0 ? 1 : Interp(1) << n;
  for (Interp t = 0; t < limit; ++t) {
    if (!classical_sat(t, g)) continue;
    bool minimal = true;
    if (t != 0) {
      // proper subsets of t, descending mask order
      for (Interp h = (t - 1) & t; minimal; h = (h - 1) & t) {
        if (ht_sat({h, t}, g)) minimal = false;
        if (h == 0) break;
      }
    }
    if (minimal) out.push_back(t);
  }
  return out;
}

}  // namespace elp
