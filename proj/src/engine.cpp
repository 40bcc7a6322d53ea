#include "engine.hpp"

#include <cstdint>
#include <map>
#include <stdexcept>
#include <tuple>
#include <unordered_set>

namespace elp::detail {

namespace {

int flatten(const FormulaPtr& f, Arena& ar,
            std::map<std::tuple<int, int, int, int>, int>& memo) {
  int a = f->lhs ? flatten(f->lhs, ar, memo) : -1;
  int b = f->rhs ? flatten(f->rhs, ar, memo) : -1;
  auto key = std::make_tuple(static_cast<int>(f->kind), f->atom, a, b);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  Arena::Node node{f->kind, f->atom, a, b, -1};
  if (f->kind == Formula::Kind::K) {
    node.kidx = ar.k();
    ar.karg.push_back(a);
  }
  int id = static_cast<int>(ar.nodes.size());
  ar.nodes.push_back(node);
  memo.emplace(key, id);
  return id;
}

// All subsets of `mask`, largest first, ending with 0.
template <typename F>
void for_subsets(std::uint32_t mask, F&& fn) {
  std::uint32_t s = mask;
  while (true) {
    fn(s);
    if (s == 0) break;
    s = (s - 1) & mask;
  }
}

}  // namespace

Arena Arena::build(const Theory& g) {
  Arena ar;
  ar.n = g.sig.size();
  if (ar.n > 5)
    throw CapExceeded("equilibrium search: signature of " +
                      std::to_string(ar.n) + " atoms exceeds the hard cap 5");
  std::map<std::tuple<int, int, int, int>, int> memo;
  for (const auto& f : g.formulas) ar.roots.push_back(flatten(f, ar, memo));
  if (ar.k() > 20)
    throw CapExceeded("equilibrium search: too many distinct K subformulas");
  return ar;
}

ViewEval::ViewEval(const Arena& a, std::uint32_t wm) : ar(&a), wmask(wm) {
  const std::uint32_t m = a.m();
  for (Interp t = 0; t < m; ++t)
    if (wm >> t & 1) wlist.push_back(t);
  s5.resize(a.nodes.size());
  const std::uint32_t all = m == 32 ? 0xffffffffu : (1u << m) - 1;
  for (std::size_t i = 0; i < a.nodes.size(); ++i) {
    const auto& nd = a.nodes[i];
    switch (nd.kind) {
      case Formula::Kind::Bot: s5[i] = 0; break;
      case Formula::Kind::Atom: {
        std::uint32_t bits = 0;
        for (Interp t = 0; t < m; ++t)
          if (t >> nd.atom & 1) bits |= 1u << t;
        s5[i] = bits;
        break;
      }
      case Formula::Kind::And: s5[i] = s5[nd.a] & s5[nd.b]; break;
      case Formula::Kind::Or: s5[i] = s5[nd.a] | s5[nd.b]; break;
      case Formula::Kind::Implies: s5[i] = (~s5[nd.a] | s5[nd.b]) & all; break;
      case Formula::Kind::K:
        s5[i] = (s5[nd.a] & wmask) == wmask ? all : 0;
        if (s5[i]) tmask |= 1u << nd.kidx;
        break;
    }
  }
}

bool ViewEval::epistemic_model() const {
  for (int r : ar->roots)
    if ((s5[r] & wmask) != wmask) return false;
  return true;
}

void ViewEval::here_vals(Interp h, Interp t, unsigned v,
                         std::vector<std::uint8_t>& out) const {
  out.resize(ar->nodes.size());
  for (std::size_t i = 0; i < ar->nodes.size(); ++i) {
    const auto& nd = ar->nodes[i];
    switch (nd.kind) {
      case Formula::Kind::Bot: out[i] = 0; break;
      case Formula::Kind::Atom: out[i] = h >> nd.atom & 1; break;
      case Formula::Kind::And: out[i] = out[nd.a] && out[nd.b]; break;
      case Formula::Kind::Or: out[i] = out[nd.a] || out[nd.b]; break;
      case Formula::Kind::Implies:
        out[i] = (!out[nd.a] || out[nd.b]) && (s5[i] >> t & 1);
        break;
      case Formula::Kind::K: out[i] = v >> nd.kidx & 1; break;
    }
  }
}

bool ViewEval::good(Interp h, Interp t, unsigned v) const {
  std::vector<std::uint8_t> vals;
  here_vals(h, t, v, vals);
  for (int r : ar->roots)
    if (!vals[r]) return false;
  return true;
}

std::vector<GuessInfo> valid_guesses(const ViewEval& ve) {
  const Arena& ar = *ve.ar;
  const unsigned kall = ar.k() ? (1u << ar.k()) - 1 : 0;
  std::vector<GuessInfo> res;
  std::vector<std::uint8_t> vals;
  for_subsets(ve.tmask, [&](unsigned v) {
    GuessInfo gi{v, false, {}};
    gi.gsets.resize(ve.wlist.size());
    unsigned witnessed = v;
    bool ok = true;
    for (std::size_t i = 0; i < ve.wlist.size() && ok; ++i) {
      const Interp t = ve.wlist[i];
      for_subsets(t, [&](Interp h) {
        ve.here_vals(h, t, v, vals);
        for (int r : ar.roots)
          if (!vals[r]) return;
        for (int j = 0; j < ar.k(); ++j)
          if (v >> j & 1 && !vals[ar.karg[j]]) return;
        gi.gsets[i].push_back(h);
        for (int j = 0; j < ar.k(); ++j)
          if (!vals[ar.karg[j]]) witnessed |= 1u << j;
      });
      if (gi.gsets[i].empty()) ok = false;
      else if (gi.gsets[i].size() != 1 || gi.gsets[i][0] != t)
        gi.family_neq_w = true;
    }
    if (ok && witnessed == kall) res.push_back(std::move(gi));
  });
  return res;
}

bool has_smaller_epistemic_model(const ViewEval& ve) {
  // A view comparable with total W shares its there-sets, so candidates are
  // families of here-sets per member of W; the maximal admitted family of a
  // self-consistent guess is itself an epistemic model and dominates all
  // others realizing that guess.
  for (const auto& g : valid_guesses(ve))
    if (g.family_neq_w) return true;
  return false;
}

bool equilibrium_at(const ViewEval& ve, const std::vector<GuessInfo>& guesses,
                    Interp t0) {
  const Arena& ar = *ve.ar;
  for (int r : ar.roots)
    if (!(ve.s5[r] >> t0 & 1)) return false;  // <t0|W> not a belief model
  // A smaller belief interpretation pairs a real world <h,t0> with a view
  // realizing some guess; the real pair only needs the formulas themselves
  // (it neither constrains nor witnesses K values). With the maximal family
  // as the view, strictness needs h != t0 unless the family already differs
  // from W.
  std::vector<std::uint8_t> vals;
  for (const auto& g : guesses) {
    bool found = false;
    for_subsets(t0, [&](Interp h) {
      if (found || (!g.family_neq_w && h == t0)) return;
      ve.here_vals(h, t0, g.v, vals);
      for (int r : ar.roots)
        if (!vals[r]) return;
      found = true;
    });
    if (found) return false;
  }
  return true;
}

bool weak_equilibrium_at(const ViewEval& ve, Interp t0) {
  const Arena& ar = *ve.ar;
  for (int r : ar.roots)
    if (!(ve.s5[r] >> t0 & 1)) return false;
  // Belief-total counterexamples keep the view equal to W, so only the real
  // world's here-set can shrink; K values are then the values at W.
  bool found = false;
  for_subsets(t0, [&](Interp h) {
    if (found || h == t0) return;
    if (ve.good(h, t0, ve.tmask)) found = true;
  });
  return !found;
}

bool has_smaller_simple_model(const ViewEval& ve) {
  const Arena& ar = *ve.ar;
  const int kk = ar.k();
  const unsigned strict_bit = 1u << kk;
  std::vector<std::uint8_t> vals;
  for (const auto& g : valid_guesses(ve)) {
    // One here-set per member of W; a choice must witness every K guessed
    // false and differ from W somewhere. Each option is summarized by the
    // set of obligations it discharges.
    std::vector<std::vector<unsigned>> labels(ve.wlist.size());
    std::vector<unsigned> suffix(ve.wlist.size() + 1, 0);
    for (std::size_t i = 0; i < ve.wlist.size(); ++i) {
      for (Interp h : g.gsets[i]) {
        ve.here_vals(h, ve.wlist[i], g.v, vals);
        unsigned l = h == ve.wlist[i] ? 0 : strict_bit;
        for (int j = 0; j < kk; ++j)
          if (!(g.v >> j & 1) && !vals[ar.karg[j]]) l |= 1u << j;
        labels[i].push_back(l);
      }
    }
    for (std::size_t i = ve.wlist.size(); i-- > 0;) {
      suffix[i] = suffix[i + 1];
      for (unsigned l : labels[i]) suffix[i] |= l;
    }
    unsigned need = (~g.v & (kk ? (1u << kk) - 1 : 0)) | strict_bit;
    std::unordered_set<std::uint64_t> fail;
    auto dfs = [&](auto&& self, std::size_t i, unsigned rem) -> bool {
      if (rem == 0) return true;
      if (i == ve.wlist.size() || (rem & ~suffix[i])) return false;
      std::uint64_t key = static_cast<std::uint64_t>(i) << 32 | rem;
      if (fail.count(key)) return false;
      for (unsigned l : labels[i])
        if (self(self, i + 1, rem & ~l)) return true;
      fail.insert(key);
      return false;
    };
    if (dfs(dfs, 0, need)) return true;
  }
  return false;
}

}  // namespace elp::detail
