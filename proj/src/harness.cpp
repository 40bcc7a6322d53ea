#include "elp/harness.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <random>
#include <sstream>

#include <json.hpp>

namespace elp {

namespace {

std::vector<std::string> atom_names(int n) {
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back(std::string(1, char('a' + i)));
  return names;
}

Literal random_literal(std::mt19937_64& rng, const GenConfig& cfg, int n) {
  std::uniform_int_distribution<int> atom(0, n - 1);
  std::discrete_distribution<int> negs(cfg.neg_weights.begin(),
                                       cfg.neg_weights.end());
  std::bernoulli_distribution subj(cfg.subjective_prob);
  std::bernoulli_distribution inner(0.25);
  Literal l;
  l.base = atom(rng);
  if (subj(rng)) {
    l.subjective = true;
    l.negs = negs(rng);
    l.inner_negs = inner(rng) ? 1 : 0;
  } else {
    l.negs = negs(rng);
  }
  return l;
}

Interp random_subset(std::mt19937_64& rng, Interp pool, int want) {
  std::vector<int> atoms;
  for (int a = 0; a < kMaxAtoms; ++a)
    if (pool >> a & 1) atoms.push_back(a);
  std::shuffle(atoms.begin(), atoms.end(), rng);
  Interp out = 0;
  for (int i = 0; i < want && i < static_cast<int>(atoms.size()); ++i)
    out |= Interp(1) << atoms[i];
  return out;
}

}  // namespace

Program random_program(const GenConfig& cfg, std::uint64_t seed) {
  if (!cfg.valid()) throw std::invalid_argument("random_program: bad config");
  std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + 1);
  Program p;
  p.sig = Signature(atom_names(cfg.atom_count));
  std::uniform_int_distribution<int> nrules(cfg.rule_count_min,
                                            cfg.rule_count_max);
  std::uniform_int_distribution<int> hsize(std::max(1, cfg.head_size_min),
                                           std::max(1, cfg.head_size_max));
  std::uniform_int_distribution<int> bsize(cfg.body_size_min,
                                           cfg.body_size_max);
  std::bernoulli_distribution constraint(cfg.constraint_prob);
  const int count = nrules(rng);
  for (int i = 0; i < count; ++i) {
    Rule r;
    if (!constraint(rng))
      r.head = random_subset(rng, p.sig.full_mask(), hsize(rng));
    const int bs = bsize(rng);
    for (int j = 0; j < bs; ++j)
      r.body.push_back(random_literal(rng, cfg, cfg.atom_count));
    if (r.head == 0 && r.body.empty()) continue;  // skip degenerate "<- ."
    p.rules.push_back(std::move(r));
  }
  return p;
}

namespace {

// Shared generator for the layered variants. Head and objective body atoms
// come from a single layer; subjective atoms come from strictly lower layers,
// except that `loose_negs` additionally allows negated subjective literals
// over any atom (tightness only constrains unnegated ones).
Program random_layered(const GenConfig& cfg, std::uint64_t seed,
                       bool loose_negs) {
  if (!cfg.valid()) throw std::invalid_argument("random_program: bad config");
  std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + 2);
  const int n = cfg.atom_count;
  Program p;
  p.sig = Signature(atom_names(n));
  std::uniform_int_distribution<int> layer_of(0, std::min(2, n - 1));
  std::vector<int> lambda(n);
  std::vector<Interp> layer_atoms(3, 0), lower(3, 0);
  for (int a = 0; a < n; ++a) {
    lambda[a] = layer_of(rng);
    layer_atoms[lambda[a]] |= Interp(1) << a;
  }
  for (int l = 1; l < 3; ++l)
    lower[l] = lower[l - 1] | layer_atoms[l - 1];

  std::uniform_int_distribution<int> nrules(cfg.rule_count_min,
                                            cfg.rule_count_max);
  std::uniform_int_distribution<int> hsize(std::max(1, cfg.head_size_min),
                                           std::max(1, cfg.head_size_max));
  std::uniform_int_distribution<int> bsize(cfg.body_size_min,
                                           cfg.body_size_max);
  std::bernoulli_distribution constraint(cfg.constraint_prob);
  std::bernoulli_distribution subj(cfg.subjective_prob);
  std::bernoulli_distribution inner(0.25);
  std::discrete_distribution<int> negs(cfg.neg_weights.begin(),
                                       cfg.neg_weights.end());
  std::uniform_int_distribution<int> pick_layer(0, 2);

  const int count = nrules(rng);
  for (int i = 0; i < count; ++i) {
    int lay = pick_layer(rng);
    while (layer_atoms[lay] == 0) lay = (lay + 1) % 3;
    const Interp group = layer_atoms[lay];
    Rule r;
    if (!constraint(rng)) r.head = random_subset(rng, group, hsize(rng));
    const int bs = bsize(rng);
    for (int j = 0; j < bs; ++j) {
      Literal l;
      l.negs = negs(rng);
      if (subj(rng)) {
        const bool negated = l.negs > 0;
        const Interp pool =
            (loose_negs && negated) ? p.sig.full_mask() : lower[lay];
        if (pool == 0) {  // no admissible atom below: fall back to objective
          l.base = std::countr_zero(random_subset(rng, group, 1));
          r.body.push_back(l);
          continue;
        }
        l.subjective = true;
        l.inner_negs = inner(rng) ? 1 : 0;
        l.base = std::countr_zero(random_subset(rng, pool, 1));
      } else {
        l.base = std::countr_zero(random_subset(rng, group, 1));
      }
      r.body.push_back(l);
    }
    if (r.head == 0 && r.body.empty()) continue;
    p.rules.push_back(std::move(r));
  }
  return p;
}

}  // namespace

Program random_stratified_program(const GenConfig& cfg, std::uint64_t seed) {
  return random_layered(cfg, seed, false);
}

Program random_tight_program(const GenConfig& cfg, std::uint64_t seed) {
  return random_layered(cfg, seed, true);
}

namespace {

std::string view_str(const TotalView& w, const Signature& sig) {
  std::string s = "[";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ",";
    s += "{";
    auto names = interp_names(w[i], sig);
    for (std::size_t j = 0; j < names.size(); ++j) {
      if (j) s += ",";
      s += names[j];
    }
    s += "}";
  }
  return s + "]";
}

std::string views_str(const std::vector<TotalView>& vs, const Signature& sig) {
  std::string s = "{";
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) s += " ";
    s += view_str(vs[i], sig);
  }
  return s + "}";
}

bool view_sat_rule(const TotalView& w, const Rule& r, const FormulaPtr& f) {
  (void)r;
  for (Interp i : w)
    if (!s5_sat(i, w, f)) return false;
  return true;
}

bool subset_of(const std::vector<TotalView>& a, const std::vector<TotalView>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

// Small deterministic pool of belief views over the signature: all single-
// pair views and a slice of the two-pair views.
std::vector<BeliefView> sample_views(const Signature& sig) {
  std::vector<HTPair> pairs;
  const Interp full = sig.full_mask();
  for (Interp t = 0; t <= full; ++t)
    for (Interp h = t;; h = (h - 1) & t) {
      pairs.push_back({h, t});
      if (h == 0) break;
    }
  std::vector<BeliefView> out;
  for (const auto& p : pairs) out.push_back(BeliefView{{p}});
  for (std::size_t i = 0; i < pairs.size(); ++i)
    for (std::size_t j = i + 1; j < pairs.size(); j += 3)
      out.push_back(canonical(BeliefView{{pairs[i], pairs[j]}}));
  return out;
}

std::vector<TotalView> all_total_views(const Signature& sig, int max_size) {
  if (sig.size() > 4)
    throw CapExceeded("all_total_views: more than 4 atoms");
  const Interp full = sig.full_mask();
  std::vector<TotalView> out;
  const std::uint64_t end = std::uint64_t(1) << (std::uint64_t(1) << sig.size());
  for (std::uint64_t wm = 1; wm < end; ++wm) {
    TotalView w;
    for (Interp t = 0; t <= full; ++t)
      if (wm >> t & 1) w.push_back(t);
    if (max_size <= 0 || static_cast<int>(w.size()) <= max_size)
      out.push_back(std::move(w));
  }
  return out;
}

using Checker = std::function<bool(const Program&, const PropertyParams&,
                                   std::string*)>;

void fail(std::string* detail, const std::string& msg) {
  if (detail) *detail = msg;
}

bool prop_supra_asp(const Program& p, const PropertyParams& pp,
                    std::string* detail) {
  for (const auto& r : p.rules)
    for (const auto& l : r.body)
      if (l.subjective) return true;  // vacuous: property is about objective programs
  const Theory g = theory_of(p);
  const TotalView sm = stable_models(g);
  std::vector<TotalView> expected;
  if (!sm.empty()) expected.push_back(sm);
  const auto got = world_views(g, pp.semantics, pp.cap);
  if (got == expected) return true;
  fail(detail, "expected " + views_str(expected, p.sig) + " got " +
                   views_str(got, p.sig));
  return false;
}

bool prop_supra_s5(const Program& p, const PropertyParams& pp,
                   std::string* detail) {
  const Theory g = theory_of(p);
  std::vector<std::pair<std::string, std::vector<TotalView>>> all = {
      {"g91", g91_world_views(g, pp.cap)},
      {"feel", feel_world_views(g, pp.cap)},
      {"faeel", faeel_world_views(g, pp.cap)},
      {"eel", eel_world_views(g, pp.cap)},
      {"eel_g91", eel_g91_world_views(g, pp.cap)},
      {"weak", weak_autoepistemic_world_views(g, pp.cap)}};
  for (const auto& [name, views] : all)
    for (const auto& w : views)
      if (!epistemic_model_s5(w, g)) {
        fail(detail, name + " view " + view_str(w, p.sig) +
                         " is not an epistemic model");
        return false;
      }
  return true;
}

bool prop_constraint_monotonicity(const Program& p, const PropertyParams& pp,
                                  std::string* detail) {
  const Theory g = theory_of(p);
  const auto base = world_views(g, pp.semantics, pp.cap);
  for (int a = 0; a < p.sig.size(); ++a) {
    for (auto [negs, inner] : {std::pair{0, 0}, {1, 0}, {0, 1}}) {
      Rule r;
      r.body.push_back(Literal{true, negs, inner, a});
      Program ext = p;
      ext.rules.push_back(r);
      const FormulaPtr rf = rule_to_formula(r);
      std::vector<TotalView> expected;
      for (const auto& w : base)
        if (view_sat_rule(w, r, rf)) expected.push_back(w);
      const auto got = world_views(theory_of(ext), pp.semantics, pp.cap);
      if (got != expected) {
        fail(detail, "constraint {" + print_rule(r, p.sig) + "} expected " +
                         views_str(expected, p.sig) + " got " +
                         views_str(got, p.sig));
        return false;
      }
    }
  }
  return true;
}

bool prop_splitting(const Program& p, const PropertyParams& pp,
                    std::string* detail) {
  const Theory g = theory_of(p);
  const auto direct = world_views(g, pp.semantics, pp.cap);
  const Interp full = p.sig.full_mask();
  for (Interp u = 0; u <= full; ++u) {
    if (pp.u_mask >= 0 && u != static_cast<Interp>(pp.u_mask)) continue;
    if (!is_splitting_set(u, p)) continue;
    for (auto policy :
         {PlacementPolicy::BottomFirst, PlacementPolicy::TopFirst}) {
      const auto via =
          world_views_via_splitting(p, u, pp.semantics, pp.cap, policy);
      if (via != direct) {
        fail(detail, "U mask " + std::to_string(u) + ": direct " +
                         views_str(direct, p.sig) + " vs split " +
                         views_str(via, p.sig));
        return false;
      }
    }
    const auto sols = solutions(p, u, pp.semantics, pp.cap);
    for (const auto& w : direct) {
      const TotalView wb = restrict_view(w, u);
      const TotalView wt = restrict_view(w, full & ~u);
      if (std::find(sols.begin(), sols.end(), std::make_pair(wb, wt)) ==
          sols.end()) {
        fail(detail, "U mask " + std::to_string(u) + ": decomposition of " +
                         view_str(w, p.sig) + " is not a solution");
        return false;
      }
      if (compose(wb, wt) != w) {
        fail(detail, "restrict/compose round-trip failed for " +
                         view_str(w, p.sig));
        return false;
      }
    }
  }
  return true;
}

bool prop_faeel_characterization(const Program& p, const PropertyParams& pp,
                                 std::string* detail) {
  const Theory g = theory_of(p);
  const auto chr = faeel_world_views(g, pp.cap);
  const auto direct = faeel_world_views_direct(g, pp.cap);
  if (chr == direct) return true;
  fail(detail, "characterization " + views_str(chr, p.sig) + " vs direct " +
                   views_str(direct, p.sig));
  return false;
}

bool prop_weak_equals_g91(const Program& p, const PropertyParams& pp,
                          std::string* detail) {
  const Theory g = theory_of(p);
  const auto weak = weak_autoepistemic_world_views(g, pp.cap);
  const auto g91 = g91_world_views(g, pp.cap);
  if (weak == g91) return true;
  fail(detail,
       "weak " + views_str(weak, p.sig) + " vs g91 " + views_str(g91, p.sig));
  return false;
}

bool prop_persistence(const Program& p, const PropertyParams& pp,
                      std::string* detail) {
  (void)pp;
  const Theory g = theory_of(p);
  for (const auto& w : sample_views(p.sig)) {
    if (!feel_epistemic_model(w, g)) continue;
    if (!epistemic_model_s5(there_view(w), g)) {
      fail(detail, "there-projection of an epistemic model is not a model");
      return false;
    }
  }
  return true;
}

bool prop_faeel_subset_feel(const Program& p, const PropertyParams& pp,
                            std::string* detail) {
  const Theory g = theory_of(p);
  if (subset_of(faeel_world_views(g, pp.cap), feel_world_views(g, pp.cap)))
    return true;
  fail(detail, "a faeel view is missing from feel");
  return false;
}

bool prop_feel_subset_eel(const Program& p, const PropertyParams& pp,
                          std::string* detail) {
  const Theory g = theory_of(p);
  if (subset_of(feel_world_views(g, pp.cap), eel_world_views(g, pp.cap)))
    return true;
  fail(detail, "a feel view is missing from eel");
  return false;
}

bool prop_tight_coincidence(const Program& p, const PropertyParams& pp,
                            std::string* detail) {
  if (!tight_stratify(p)) return true;
  const Theory g = theory_of(p);
  const auto a = g91_world_views(g, pp.cap);
  const auto b = faeel_world_views(g, pp.cap);
  if (a == b) return true;
  fail(detail,
       "g91 " + views_str(a, p.sig) + " vs faeel " + views_str(b, p.sig));
  return false;
}

bool prop_stratified_unique(const Program& p, const PropertyParams& pp,
                            std::string* detail) {
  if (!stratify(p)) return true;
  const Theory g = theory_of(p);
  const auto a = g91_world_views(g, pp.cap);
  const auto b = faeel_world_views(g, pp.cap);
  if (a != b) {
    fail(detail,
         "g91 " + views_str(a, p.sig) + " vs faeel " + views_str(b, p.sig));
    return false;
  }
  if (a.size() > 1) {
    fail(detail, "stratified program with " + std::to_string(a.size()) +
                     " world views: " + views_str(a, p.sig));
    return false;
  }
  if (moore_extensions(g, pp.cap).size() > 1) {
    fail(detail, "more than one Moore extension");
    return false;
  }
  return true;
}

bool prop_neg_reduct_invariance(const Program& p, const PropertyParams& pp,
                                std::string* detail) {
  (void)pp;
  const Theory g = theory_of(p);
  std::vector<TotalView> candidates;
  if (p.sig.size() <= 3) candidates = all_total_views(p.sig, 0);
  else {
    candidates = all_total_views(p.sig, 2);
    for (auto& w : faeel_world_views(g)) candidates.push_back(std::move(w));
  }
  for (const auto& w : candidates) {
    const Theory red = negatively_subjective_reduct(g, w);
    if (is_faeel_world_view(g, w) != is_faeel_world_view(red, w)) {
      fail(detail, "membership differs under the reduct for " +
                       view_str(w, p.sig));
      return false;
    }
  }
  return true;
}

bool prop_free_atom_invariance(const Program& p, const PropertyParams& pp,
                               std::string* detail) {
  (void)pp;
  const Theory g = theory_of(p);
  // A fresh atom outside every formula must not affect satisfaction.
  for (const auto& w : all_total_views(p.sig, 2)) {
    const bool base = epistemic_model_s5(w, g);
    const Interp z = Interp(1) << p.sig.size();
    TotalView w_all, w_one = w;
    for (Interp i : w) w_all.push_back(i | z);
    w_one[0] |= z;
    for (const TotalView* v : {&w_all, &w_one}) {
      if (epistemic_model_s5(canonical(*v), g) != base) {
        fail(detail, "free atom changed the verdict for " + view_str(w, p.sig));
        return false;
      }
    }
  }
  return true;
}

bool prop_neg_shortcut(const Program& p, const PropertyParams& pp,
                       std::string* detail) {
  (void)pp;
  const Theory g = theory_of(p);
  const auto views = sample_views(p.sig);
  for (const auto& f : g.formulas) {
    const FormulaPtr nf = mk_not(f);
    for (std::size_t vi = 0; vi < views.size(); vi += 5) {
      const auto& w = views[vi];
      for (Interp t = 0; t <= p.sig.full_mask(); ++t)
        for (Interp h = t;; h = (h - 1) & t) {
          BeliefInterpretation i{w, {h, t}};
          if (bi_neg_sat_check(i, f) != bi_sat(i, nf)) {
            fail(detail, "negation shortcut disagrees with bi_sat");
            return false;
          }
          if (h == 0) break;
        }
    }
  }
  return true;
}

bool prop_eel_definitional(const Program& p, const PropertyParams& pp,
                           std::string* detail) {
  if (p.sig.size() > 3) return true;  // oracle form is exponential in 3^n
  const Theory g = theory_of(p);
  const auto fast = eel_world_views(g, pp.cap);
  const auto slow = eel_world_views_definitional(g, pp.cap);
  if (fast == slow) return true;
  fail(detail, "order-based " + views_str(fast, p.sig) + " vs definitional " +
                   views_str(slow, p.sig));
  return false;
}

const std::map<std::string, Checker>& checkers() {
  static const std::map<std::string, Checker> m = {
      {"supra_asp", prop_supra_asp},
      {"supra_s5", prop_supra_s5},
      {"constraint_monotonicity", prop_constraint_monotonicity},
      {"splitting", prop_splitting},
      {"faeel_characterization", prop_faeel_characterization},
      {"weak_equals_g91", prop_weak_equals_g91},
      {"persistence", prop_persistence},
      {"faeel_subset_feel", prop_faeel_subset_feel},
      {"feel_subset_eel", prop_feel_subset_eel},
      {"tight_coincidence", prop_tight_coincidence},
      {"stratified_unique", prop_stratified_unique},
      {"neg_reduct_invariance", prop_neg_reduct_invariance},
      {"free_atom_invariance", prop_free_atom_invariance},
      {"neg_shortcut", prop_neg_shortcut},
      {"eel_definitional", prop_eel_definitional},
  };
  return m;
}

}  // namespace

const std::vector<std::string>& property_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [k, v] : checkers()) out.push_back(k);
    return out;
  }();
  return names;
}

bool check_property_once(const std::string& name, const Program& p,
                         const PropertyParams& params, std::string* detail) {
  auto it = checkers().find(name);
  if (it == checkers().end())
    throw std::invalid_argument("unknown property: " + name);
  return it->second(p, params, detail);
}

namespace {

Program generate_for(const std::string& name, const GenConfig& cfg,
                     std::uint64_t seed) {
  if (name == "stratified_unique") return random_stratified_program(cfg, seed);
  if (name == "tight_coincidence") return random_tight_program(cfg, seed);
  if (name == "supra_asp") {
    GenConfig objective = cfg;
    objective.subjective_prob = 0;
    return random_program(objective, seed);
  }
  return random_program(cfg, seed);
}

Program minimize(const std::string& name, Program p,
                 const PropertyParams& params) {
  bool shrunk = true;
  while (shrunk) {
    shrunk = false;
    for (std::size_t i = 0; i < p.rules.size(); ++i) {
      Program q = p;
      q.rules.erase(q.rules.begin() + i);
      if (!check_property_once(name, q, params)) {
        p = std::move(q);
        shrunk = true;
        break;
      }
    }
    if (shrunk) continue;
    for (std::size_t i = 0; i < p.rules.size() && !shrunk; ++i)
      for (std::size_t j = 0; j < p.rules[i].body.size(); ++j) {
        Program q = p;
        q.rules[i].body.erase(q.rules[i].body.begin() + j);
        if (!check_property_once(name, q, params)) {
          p = std::move(q);
          shrunk = true;
          break;
        }
      }
  }
  return p;
}

}  // namespace

PropertyReport check_property(const std::string& name, const GenConfig& cfg,
                              std::uint64_t seed0, int count,
                              const PropertyParams& params) {
  PropertyReport report;
  report.name = name;
  for (int i = 0; i < count; ++i) {
    const std::uint64_t seed = seed0 + i;
    Program p = generate_for(name, cfg, seed);
    ++report.trials;
    std::string detail;
    if (check_property_once(name, p, params, &detail)) continue;
    Program small = minimize(name, std::move(p), params);
    std::string small_detail;
    check_property_once(name, small, params, &small_detail);
    report.failures.push_back(
        PropertyFailure{seed, print_program(small), small_detail});
  }
  return report;
}

std::string report_text(const PropertyReport& r) {
  std::ostringstream os;
  os << "property " << r.name << ": trials=" << r.trials
     << " failures=" << r.failures.size()
     << (r.passed() ? " PASS" : " FAIL") << "\n";
  for (const auto& f : r.failures) {
    os << "  seed " << f.seed << ": " << f.detail << "\n";
    std::istringstream prog(f.program);
    std::string line;
    while (std::getline(prog, line)) os << "    " << line << "\n";
  }
  return os.str();
}

std::string report_json(const PropertyReport& r) {
  nlohmann::json j;
  j["name"] = r.name;
  j["trials"] = r.trials;
  j["failures"] = nlohmann::json::array();
  for (const auto& f : r.failures)
    j["failures"].push_back(
        {{"seed", f.seed}, {"program", f.program}, {"detail", f.detail}});
  return j.dump(2);
}

}  // namespace elp
