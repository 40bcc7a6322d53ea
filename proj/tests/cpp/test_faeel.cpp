#include <doctest.h>

#include "elp/faeel.hpp"

using namespace elp;

namespace {

std::vector<TotalView> faeel(const char* src) {
  return faeel_world_views(theory_of(parse_program(src)));
}

BeliefView bv(std::initializer_list<HTPair> ps) {
  BeliefView v;
  v.pairs = ps;
  return canonical(std::move(v));
}

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

TEST_CASE("belief models of the self-supporting rule") {
  Theory g = parse_theory("K a -> a");
  BeliefInterpretation i1{bv({{1, 1}}), {1, 1}};
  CHECK(belief_model(i1, g));
  // the smaller witness from the definition walk-through
  BeliefInterpretation i2{bv({{0, 1}}), {1, 1}};
  CHECK(belief_model(i2, g));
  CHECK(!bi_sat(i2, parse_formula("K a", g.sig)));
  // real pair <0,{a}> against view [0]
  BeliefInterpretation i3{bv({{0, 0}}), {0, 1}};
  CHECK(belief_model(i3, g));
  // a view pair violating the formula kills the belief model
  Theory d = theory_of(parse_program("a | b."));
  BeliefInterpretation i4{bv({{0, 3}}), {3, 3}};
  CHECK(!belief_model(i4, d));
}

TEST_CASE("interpretation order") {
  BeliefInterpretation big{bv({{1, 1}}), {1, 1}};
  BeliefInterpretation small{bv({{0, 1}}), {1, 1}};
  CHECK(bint_leq(small, big));
  CHECK(bint_lt(small, big));
  CHECK(!bint_leq(big, small));
  // shrinking the real here-set alone also counts
  BeliefInterpretation small2{bv({{1, 1}}), {0, 1}};
  CHECK(bint_lt(small2, big));
  // different real there-sets are incomparable
  BeliefInterpretation other{bv({{1, 1}}), {0, 0}};
  CHECK(!bint_leq(other, big));
  CHECK(!bint_lt(big, big));
}

TEST_CASE("equilibrium belief models of the self-supporting rule") {
  Theory g = parse_theory("K a -> a");
  CHECK(is_equilibrium_belief_model(0, {0}, g));
  CHECK(!is_equilibrium_belief_model(1, {1}, g));  // <{a}|[<0,{a}>]> is smaller
  CHECK(!is_equilibrium_belief_model(1, {0}, g));  // <<0,{a}>|[0]> is smaller
  // the weak variant only admits belief-total counterexamples
  CHECK(is_weak_equilibrium_belief_model(1, {1}, g));
  CHECK(is_weak_equilibrium_belief_model(0, {0}, g));
  CHECK(!is_weak_equilibrium_belief_model(1, {0}, g));
}

TEST_CASE("faeel world views on the running examples") {
  CHECK(faeel("a | b.") == std::vector<TotalView>{{1, 2}});
  CHECK(faeel("a :- K a.") == std::vector<TotalView>{{0}});
  CHECK(faeel("a | b.\na :- K b.\nb :- K a.") ==
        std::vector<TotalView>{{1, 2}});
  CHECK(faeel("a :- not K b.\nb :- not K a.") ==
        std::vector<TotalView>{{1}, {2}});
  CHECK(faeel("a | b.\na :- K b.\nb :- K a.\n:- not K a.") ==
        std::vector<TotalView>{});
}

TEST_CASE("direct fixpoint engine agrees with the characterization") {
  for (const char* src :
       {"a | b.", "a :- K a.", "a | b.\na :- K b.\nb :- K a.",
        "a :- not K b.\nb :- not K a.", "a :- M b.\nb :- not a.",
        "a | b.\n:- K a.", "a :- not K b.\nb :- not K a.\nc :- K a."}) {
    Theory g = theory_of(parse_program(src));
    CHECK(faeel_world_views_direct(g) == faeel_world_views(g));
  }
}

TEST_CASE("faeel fixpoint against the raw definition, exhaustively") {
  for (const char* src :
       {"a :- K a.", "a | b.", "a | b.\na :- K b.\nb :- K a.",
        "a :- not K b.\nb :- not K a."}) {
    Theory g = theory_of(parse_program(src, {"a", "b"}));
    REQUIRE(g.sig.size() == 2);
    std::vector<BeliefView> views = all_belief_views(2);
    auto eqb = [&](Interp t, const TotalView& w) {
      BeliefInterpretation i{as_belief_view(w), {t, t}};
      if (!belief_model(i, g)) return false;
      for (const BeliefView& v : views)
        for (Interp h = t;; h = (h - 1) & t) {
          BeliefInterpretation j{v, {h, t}};
          if (bint_lt(j, i) && belief_model(j, g)) return false;
          if (h == 0) break;
        }
      return true;
    };
    std::vector<TotalView> expected;
    for (std::uint64_t wm = 1; wm < 16; ++wm) {
      TotalView w;
      for (Interp t = 0; t < 4; ++t)
        if (wm >> t & 1) w.push_back(t);
      TotalView rhs;
      for (Interp t = 0; t < 4; ++t)
        if (eqb(t, w)) rhs.push_back(t);
      if (rhs == w) expected.push_back(w);
    }
    CHECK(faeel_world_views_direct(g) == sorted_views(std::move(expected)));
  }
}

TEST_CASE("weak autoepistemic world views coincide with g91") {
  for (const char* src :
       {"a :- K a.", "a | b.", "a | b.\na :- K b.\nb :- K a.",
        "a :- not K b.\nb :- not K a.\nc :- K a.", "a :- M b.\n:- K a."}) {
    Theory g = theory_of(parse_program(src));
    CHECK(weak_autoepistemic_world_views(g) == g91_world_views(g));
  }
}

TEST_CASE("negatively subjective reduct") {
  Theory g = parse_theory("-K b -> a");
  CHECK(print_theory(negatively_subjective_reduct(g, {1})) == "top -> a\n");
  CHECK(print_theory(negatively_subjective_reduct(g, {2})) == "bot -> a\n");
  // positive K subformulas stay untouched
  Theory h = parse_theory("K a -> a");
  CHECK(print_theory(negatively_subjective_reduct(h, {1})) == "K a -> a\n");
  // only the maximal negated subjective formula is replaced; W |= K a makes
  // -K a false everywhere, so W |/= K -K a and the whole -K -K a becomes top
  Theory m = parse_theory("-K -K a -> b");
  CHECK(print_theory(negatively_subjective_reduct(m, {1})) == "top -> b\n");
}

TEST_CASE("reduct preserves world-view membership") {
  for (const char* src :
       {"a :- not K b.\nb :- not K a.", "a :- K a.",
        "a | b.\na :- K b.\nb :- K a."}) {
    Theory g = theory_of(parse_program(src));
    for (const TotalView& w : faeel_world_views(g)) {
      Theory r = negatively_subjective_reduct(g, w);
      CHECK(is_faeel_world_view(r, w));
    }
  }
}

TEST_CASE("moore extensions of the self-supporting rule") {
  Theory g = parse_theory("K a -> a");
  // two expansions: one believing a, one believing nothing
  CHECK(moore_extensions(g) == std::vector<TotalView>{{0, 1}, {1}});
}

TEST_CASE("membership test matches enumeration") {
  Theory g = theory_of(parse_program("a | b.\na :- K b.\nb :- K a."));
  CHECK(is_faeel_world_view(g, {1, 2}));
  CHECK(!is_faeel_world_view(g, {3}));   // g91 yes, feel no
  CHECK(!is_faeel_world_view(g, {1}));
}
