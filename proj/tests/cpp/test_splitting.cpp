#include <doctest.h>

#include "elp/splitting.hpp"

using namespace elp;

namespace {

const char* kThreeRule = "a :- not K b.\nb :- not K a.\nc :- K a.";

Interp mask_of(const Program& p, std::initializer_list<const char*> names) {
  Interp m = 0;
  for (const char* n : names) m |= Interp(1) << p.sig.index_of(n);
  return m;
}

}  // namespace

TEST_CASE("rule classification") {
  Program p = parse_program(kThreeRule);
  Interp u = mask_of(p, {"a", "b"});
  CHECK(classify_rule(p.rules[0], u) == RuleClass::BottomOnly);
  CHECK(classify_rule(p.rules[1], u) == RuleClass::BottomOnly);
  // head c outside U, subjective body over U: top rule
  CHECK(classify_rule(p.rules[2], u) == RuleClass::TopOnly);
  // a fact over U is bottom-only; a purely subjective constraint over U
  // fits both sides
  Program q = parse_program("a.\n:- K a.");
  Interp ua = mask_of(q, {"a"});
  CHECK(classify_rule(q.rules[0], ua) == RuleClass::BottomOnly);
  CHECK(classify_rule(q.rules[1], ua) == RuleClass::Either);
  // objective body over U with head outside: neither side
  Program r = parse_program("b :- a.");
  CHECK(classify_rule(r.rules[0], mask_of(r, {"a"})) == RuleClass::Neither);
}

TEST_CASE("splitting set recognition and split") {
  Program p = parse_program(kThreeRule);
  Interp u = mask_of(p, {"a", "b"});
  CHECK(is_splitting_set(u, p));
  CHECK(!is_splitting_set(mask_of(p, {"a"}), p));
  SplitResult s = split(p, u);
  CHECK(print_program(s.bottom) == "a :- not K b.\nb :- not K a.\n");
  CHECK(print_program(s.top) == "c :- K a.\n");
  CHECK(s.either_rules.empty());
  CHECK_THROWS_AS(split(p, mask_of(p, {"a"})), NotASplittingSet);
  try {
    split(p, mask_of(p, {"a"}));
  } catch (const NotASplittingSet& e) {
    // only the first rule straddles {a}; the second is generative outside U
    CHECK(e.offending.size() == 1);
  }
}

TEST_CASE("placement policy moves the either rules") {
  Program q = parse_program("a.\n:- K a.");
  Interp u = mask_of(q, {"a"});
  SplitResult bf = split(q, u, PlacementPolicy::BottomFirst);
  CHECK(bf.bottom.rules.size() == 2);
  CHECK(bf.top.rules.empty());
  SplitResult tf = split(q, u, PlacementPolicy::TopFirst);
  CHECK(tf.bottom.rules.size() == 1);
  CHECK(tf.top.rules.size() == 1);
  REQUIRE(bf.either_rules.size() == 1);
  // both placements solve to the same world views
  for (Semantics s : {Semantics::G91, Semantics::Faeel})
    CHECK(world_views_via_splitting(q, u, s, kDefaultEpistemicCap,
                                    PlacementPolicy::BottomFirst) ==
          world_views_via_splitting(q, u, s, kDefaultEpistemicCap,
                                    PlacementPolicy::TopFirst));
}

TEST_CASE("eu reduct plugs the bottom view into the top") {
  Program p = parse_program(kThreeRule);
  Interp u = mask_of(p, {"a", "b"});
  Interp a = mask_of(p, {"a"});
  Interp b = mask_of(p, {"b"});
  CHECK(print_program(eu_reduct(p, u, {a})) == "c :- top.\n");
  CHECK(print_program(eu_reduct(p, u, {b})) == "c :- bot.\n");
}

TEST_CASE("view restriction and composition") {
  CHECK(restrict_view(TotalView{1, 3, 5}, 1) == TotalView{1});
  CHECK(restrict_view(TotalView{2, 4}, 1) == TotalView{0});
  BeliefView v;
  v.pairs = {{1, 3}, {2, 6}};
  BeliefView r = restrict_view(v, 3);
  CHECK(r.pairs == std::vector<HTPair>{{1, 3}, {2, 2}});
  CHECK(compose({1}, {4}) == TotalView{5});
  CHECK(compose({1, 2}, {4, 8}) == TotalView{5, 6, 9, 10});
  CHECK(compose({0}, {4}) == TotalView{4});
  CHECK_THROWS_AS(compose({1}, {1}), std::invalid_argument);
}

TEST_CASE("solutions of the three-rule program") {
  Program p = parse_program(kThreeRule);
  Interp u = mask_of(p, {"a", "b"});
  for (Semantics s : {Semantics::G91, Semantics::Faeel}) {
    auto sols = solutions(p, u, s);
    REQUIRE(sols.size() == 2);
    CHECK(sols[0] == std::pair<TotalView, TotalView>{{1}, {4}});
    CHECK(sols[1] == std::pair<TotalView, TotalView>{{2}, {0}});
  }
}

TEST_CASE("splitting-based solving matches the direct engines") {
  struct Case { const char* src; std::initializer_list<const char*> u; };
  const Case cases[] = {
      {kThreeRule, {"a", "b"}},
      {"a | b.\nc :- K a.", {"a", "b"}},
      {"a :- not K b.\nb :- not K a.\nc | d :- K a.\n:- c, K b.", {"a", "b"}},
      {"a.\n:- K a.", {"a"}},
  };
  for (const auto& c : cases) {
    Program p = parse_program(c.src);
    Interp u = mask_of(p, c.u);
    for (Semantics s : {Semantics::G91, Semantics::Feel, Semantics::Faeel,
                        Semantics::Eel, Semantics::EelG91})
      CHECK(world_views_via_splitting(p, u, s) == world_views(p, s));
  }
}

TEST_CASE("trivial splitting sets reproduce the direct solve") {
  Program p = parse_program(kThreeRule);
  CHECK(world_views_via_splitting(p, 0, Semantics::G91) ==
        world_views(p, Semantics::G91));
  CHECK(world_views_via_splitting(p, p.sig.full_mask(), Semantics::G91) ==
        world_views(p, Semantics::G91));
}

TEST_CASE("decomposition of a world view is a solution") {
  Program p = parse_program(kThreeRule);
  Interp u = mask_of(p, {"a", "b"});
  auto sols = solutions(p, u, Semantics::Faeel);
  for (const TotalView& w : world_views(p, Semantics::Faeel)) {
    std::pair<TotalView, TotalView> dec{restrict_view(w, u),
                                        restrict_view(w, ~u & p.sig.full_mask())};
    CHECK(std::find(sols.begin(), sols.end(), dec) != sols.end());
    CHECK(compose(dec.first, dec.second) == w);
  }
}
