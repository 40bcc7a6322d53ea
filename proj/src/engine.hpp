#pragma once

#include <cstdint>
#include <vector>

#include "elp/views.hpp"

// Internal machinery for the HT x modal equilibrium searches.
//
// All searches for a model strictly below a total view W share one fact: a
// comparable view has the same there-set as W, so a candidate is a choice of
// here-sets per member of W. Satisfaction at a pair <H,T | W'> depends on W'
// only through the here-values of the K subformulas, so those values are
// guessed up front (bounded by the s5 values at W, by persistence) and each
// pair can then be judged independently. A guess is kept when it is
// self-consistent: every K guessed true holds at all admitted pairs and every
// K guessed false has an admitted falsifying pair.

namespace elp::detail {

struct Arena {
  struct Node {
    Formula::Kind kind;
    int atom = -1;
    int a = -1, b = -1;  // child node ids (children precede parents)
    int kidx = -1;       // index into karg for K nodes
  };
  std::vector<Node> nodes;
  std::vector<int> roots;  // one per theory formula
  std::vector<int> karg;   // K index -> argument node id
  int n = 0;               // signature size, at most 5

  int k() const { return static_cast<int>(karg.size()); }
  std::uint32_t m() const { return 1u << n; }

  static Arena build(const Theory& g);
};

// Evaluation state for one candidate total view W.
struct ViewEval {
  const Arena* ar;
  std::uint32_t wmask;        // W as bits over the 2^n interpretations
  std::vector<Interp> wlist;  // W as a sorted list
  std::vector<std::uint32_t> s5;  // per node: set of T with <T|W> |= node
  unsigned tmask = 0;             // s5 value of each K node at W

  ViewEval(const Arena& a, std::uint32_t wm);

  bool epistemic_model() const;

  // Here-level values of every node at the pair <h,t>, with K nodes pinned
  // to the guess v. Vector indexed by node id.
  void here_vals(Interp h, Interp t, unsigned v, std::vector<std::uint8_t>& out) const;
  bool good(Interp h, Interp t, unsigned v) const;
};

struct GuessInfo {
  unsigned v;
  bool family_neq_w;  // maximal admitted family differs from W itself
  std::vector<std::vector<Interp>> gsets;  // per W member: admitted here-sets
};

// Self-consistent guesses (with their maximal admitted families) for searches
// below W. Assumes W is an epistemic model.
std::vector<GuessInfo> valid_guesses(const ViewEval& ve);

// Is there an epistemic model strictly below W (Def. of the view order)?
bool has_smaller_epistemic_model(const ViewEval& ve);

// Is there a *simple* belief model strictly below W?
bool has_smaller_simple_model(const ViewEval& ve);

// Is <t0 | W> an equilibrium belief model? `guesses` from valid_guesses(ve).
bool equilibrium_at(const ViewEval& ve, const std::vector<GuessInfo>& guesses,
                    Interp t0);

// As above but minimizing only over belief-total interpretations, which with
// a fixed there-set collapses to shrinking the real world inside W itself.
bool weak_equilibrium_at(const ViewEval& ve, Interp t0);

}  // namespace elp::detail
