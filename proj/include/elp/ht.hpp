#pragma once

#include "elp/core.hpp"

// Here-and-there satisfaction and brute-force stable-model enumeration for
// objective theories. Deliberately exhaustive: this module doubles as the
// trusted oracle underneath every epistemic engine.

namespace elp {

struct HTPair {
  Interp here = 0, there = 0;  // here subset of there

  bool total() const { return here == there; }
  auto operator<=>(const HTPair&) const = default;
};

bool classical_sat(Interp t, const FormulaPtr& f);
bool classical_sat(Interp t, const Theory& g);

// Throws std::invalid_argument if f contains K.
bool ht_sat(HTPair p, const FormulaPtr& f);
bool ht_sat(HTPair p, const Theory& g);

constexpr int kDefaultObjectiveCap = 16;

// All T over the theory's signature with T |= g and no H strictly below T
// such that <H,T> |= g. Output sorted by mask value.
std::vector<Interp> stable_models(const Theory& g, int cap = kDefaultObjectiveCap);

}  // namespace elp
