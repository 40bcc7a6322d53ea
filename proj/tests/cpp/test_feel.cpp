#include <doctest.h>

#include "elp/feel.hpp"

using namespace elp;

namespace {

std::vector<TotalView> feel(const char* src) {
  return feel_world_views(theory_of(parse_program(src)));
}

BeliefView bv(std::initializer_list<HTPair> ps) {
  BeliefView v;
  v.pairs = ps;
  return canonical(std::move(v));
}

// All non-empty belief views over n atoms, as pair bitmasks over the list of
// legal pairs (here subset of there).
std::vector<BeliefView> all_belief_views(int n) {
  std::vector<HTPair> pairs;
  const Interp full = (Interp(1) << n) - 1;
  for (Interp t = 0; t <= full; ++t)
    for (Interp h = t;; h = (h - 1) & t) {
      pairs.push_back({h, t});
      if (h == 0) break;
    }
  std::vector<BeliefView> out;
  for (std::uint64_t m = 1; m < (std::uint64_t(1) << pairs.size()); ++m) {
    BeliefView v;
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if (m >> i & 1) v.pairs.push_back(pairs[i]);
    out.push_back(canonical(std::move(v)));
  }
  return out;
}

}  // namespace

TEST_CASE("bi_sat on the self-supporting rule") {
  Theory g = parse_theory("K a -> a");
  FormulaPtr ka = parse_formula("K a", g.sig);
  // the total interpretation <{a}|[{a}]> is a model and satisfies K a
  BeliefInterpretation i1{bv({{1, 1}}), {1, 1}};
  CHECK(bi_sat(i1, g));
  CHECK(bi_sat(i1, ka));
  // making the view pair non-total refutes K a, so the rule holds vacuously
  BeliefInterpretation i2{bv({{0, 1}}), {1, 1}};
  CHECK(bi_sat(i2, g));
  CHECK(!bi_sat(i2, ka));
  // a real pair <0,{a}> against the view [0] satisfies the rule
  BeliefInterpretation i3{bv({{0, 0}}), {0, 1}};
  CHECK(bi_sat(i3, g));
  // but the real pair <{a},{a}> against [0] still does: K a is false
  BeliefInterpretation i4{bv({{0, 0}}), {1, 1}};
  CHECK(bi_sat(i4, g));
}

TEST_CASE("bi_sat implication uses the there projection") {
  Signature sig({"a", "b"});
  FormulaPtr f = parse_formula("a -> b", sig);
  // here-level holds (a false here) but there-level fails at <T|W^t>
  BeliefInterpretation i{bv({{0, 1}}), {0, 1}};
  CHECK(!bi_sat(i, f));
  BeliefInterpretation j{bv({{0, 3}}), {0, 3}};
  CHECK(bi_sat(j, f));
}

TEST_CASE("negation shortcut matches bi_sat of the negation") {
  Signature sig({"a", "b"});
  for (const char* s : {"a", "K a", "a -> b", "K a & -b", "-K (a | b)"}) {
    FormulaPtr f = parse_formula(s, sig);
    FormulaPtr nf = mk_implies(f, mk_bot());
    for (const BeliefView& w : all_belief_views(2)) {
      if (w.pairs.size() > 2) continue;
      for (Interp t = 0; t < 4; ++t)
        for (Interp h = t;; h = (h - 1) & t) {
          BeliefInterpretation i{w, {h, t}};
          CHECK(bi_neg_sat_check(i, f) == bi_sat(i, nf));
          if (h == 0) break;
        }
    }
  }
}

TEST_CASE("view order: domination in both directions") {
  BeliefView w1 = bv({{3, 3}});
  BeliefView w2 = bv({{1, 3}, {2, 3}});
  CHECK(view_leq(w2, w1));
  CHECK(view_lt(w2, w1));
  CHECK(!view_leq(w1, w2));
  // different there projections are incomparable
  CHECK(!view_leq(bv({{1, 1}}), w1));
  // reflexive, not strict
  CHECK(view_leq(w1, w1));
  CHECK(!view_lt(w1, w1));
  // every pair of w2 must be dominated: {<0,3>} <= {<1,3>,<2,3>} holds,
  // but {<1,3>,<2,3>} <= {<1,3>} fails the first direction
  CHECK(view_leq(bv({{0, 3}}), w2));
  CHECK(!view_leq(w2, bv({{1, 3}})));
}

TEST_CASE("feel epistemic models") {
  Theory g = parse_theory("K a -> a");
  CHECK(feel_epistemic_model(bv({{0, 0}}), g));
  CHECK(feel_epistemic_model(bv({{1, 1}}), g));
  CHECK(feel_epistemic_model(bv({{0, 1}}), g));  // the witness against [{a}]
  Theory d = theory_of(parse_program("a | b."));
  CHECK(!feel_epistemic_model(bv({{0, 3}}), d));
  CHECK(feel_epistemic_model(bv({{1, 3}, {2, 3}}), d));
}

TEST_CASE("feel world views on the running examples") {
  // disjunction: the two extra self-supported views appear
  CHECK(feel("a | b.") == std::vector<TotalView>{{1}, {1, 2}, {2}});
  // self-supporting rule: only the empty belief survives
  CHECK(feel("a :- K a.") == std::vector<TotalView>{{0}});
  // the unfounded program keeps only the two-world view
  CHECK(feel("a | b.\na :- K b.\nb :- K a.") ==
        std::vector<TotalView>{{1, 2}});
  // adding the subjective constraint wipes out all world views
  CHECK(feel("a | b.\na :- K b.\nb :- K a.\n:- not K a.") ==
        std::vector<TotalView>{});
  CHECK(feel("a :- not K b.\nb :- not K a.") ==
        std::vector<TotalView>{{1}, {2}});
}

TEST_CASE("feel against the raw definition, exhaustively") {
  for (const char* src :
       {"a | b.", "a :- K a.", "a | b.\na :- K b.\nb :- K a.",
        "a :- not K b.\nb :- not K a.", "a :- M b.\n:- K a."}) {
    Theory g = theory_of(parse_program(src, {"a", "b"}));
    REQUIRE(g.sig.size() == 2);
    std::vector<BeliefView> views = all_belief_views(2);
    std::vector<TotalView> expected;
    for (const BeliefView& w : views) {
      if (!w.total() || !feel_epistemic_model(w, g)) continue;
      bool minimal = true;
      for (const BeliefView& w2 : views)
        if (view_lt(w2, w) && feel_epistemic_model(w2, g)) {
          minimal = false;
          break;
        }
      if (minimal) expected.push_back(there_view(w));
    }
    CHECK(feel_world_views(g) == sorted_views(std::move(expected)));
  }
}

TEST_CASE("is_feel_world_view agrees with enumeration") {
  Theory g = theory_of(parse_program("a | b.\na :- K b.\nb :- K a."));
  CHECK(is_feel_world_view(g, {1, 2}));
  CHECK(!is_feel_world_view(g, {3}));
  CHECK(!is_feel_world_view(g, {1}));
}
