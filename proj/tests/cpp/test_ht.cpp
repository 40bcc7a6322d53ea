#include <doctest.h>

#include "elp/views.hpp"

using namespace elp;

namespace {

TotalView sm(const char* src) { return stable_models(theory_of(parse_program(src))); }

}  // namespace

TEST_CASE("classical satisfaction") {
  Signature sig({"a", "b"});
  FormulaPtr f = parse_formula("a | -b", sig);
  CHECK(classical_sat(0, f));
  CHECK(classical_sat(1, f));
  CHECK(!classical_sat(2, f));
  CHECK(classical_sat(3, f));
  CHECK(classical_sat(0, parse_formula("top", sig)));
  CHECK(!classical_sat(3, parse_formula("bot", sig)));
}

TEST_CASE("ht satisfaction basics") {
  Signature sig({"a", "b"});
  FormulaPtr neg_a = parse_formula("-a", sig);
  // <0,{a}> |= -a fails: the there level refutes it
  CHECK(!ht_sat({0, 1}, neg_a));
  CHECK(ht_sat({0, 0}, neg_a));
  // implication checks both levels
  FormulaPtr ab = parse_formula("a -> b", sig);
  CHECK(ht_sat({0, 3}, ab));     // a false here, holds there
  CHECK(!ht_sat({1, 3}, ab));    // a here but b only there
  CHECK(ht_sat({3, 3}, ab));
  // excluded middle fails on non-total pairs
  FormulaPtr em = parse_formula("a | -a", sig);
  CHECK(!ht_sat({0, 1}, em));
  CHECK(ht_sat({1, 1}, em));
}

TEST_CASE("ht persistence: here implies there") {
  Signature sig({"a", "b"});
  for (const char* s : {"a", "-a", "a -> b", "a | b & -a", "(a -> b) -> b"}) {
    FormulaPtr f = parse_formula(s, sig);
    for (Interp t = 0; t < 4; ++t)
      for (Interp h = t;; h = (h - 1) & t) {
        if (ht_sat({h, t}, f)) CHECK(classical_sat(t, f));
        if (h == 0) break;
      }
  }
}

TEST_CASE("ht_sat rejects subjective formulas") {
  Signature sig({"a"});
  CHECK_THROWS_AS(ht_sat({0, 0}, parse_formula("K a", sig)),
                  std::invalid_argument);
}

TEST_CASE("stable models of standard programs") {
  CHECK(sm("a.") == TotalView{1});
  CHECK(sm("a | b.") == TotalView{1, 2});
  CHECK(sm("a :- not b.\nb :- not a.") == TotalView{1, 2});
  CHECK(sm("a :- a.") == TotalView{0});
  CHECK(sm("a :- not a.") == TotalView{});
  CHECK(sm("a :- b.\nb :- a.") == TotalView{0});
  CHECK(sm(":- not a.") == TotalView{});
  CHECK(sm("a.\nb :- a.") == TotalView{3});
  CHECK(sm("a :- not not a.") == TotalView{0, 1});  // HT, not classical minimality
}

TEST_CASE("excluded middle makes the logic classical") {
  Theory t = parse_theory("a | -a");
  CHECK(stable_models(t) == TotalView{0, 1});
}

TEST_CASE("stable models against the raw definition") {
  for (const char* src :
       {"a | b :- not c.", "a :- not b.\nb :- not c.", "a | b.\n:- a.",
        "a :- not not b.\nb :- a."}) {
    Theory g = theory_of(parse_program(src));
    TotalView expected;
    const Interp full = g.sig.full_mask();
    for (Interp t = 0; t <= full; ++t) {
      if (!ht_sat({t, t}, g)) continue;
      bool minimal = true;
      for (Interp h = (t - 1) & t; t != 0; h = (h - 1) & t) {
        if (ht_sat({h, t}, g)) { minimal = false; break; }
        if (h == 0) break;
      }
      if (minimal) expected.push_back(t);
    }
    CHECK(stable_models(g) == expected);
  }
}

TEST_CASE("objective cap") {
  std::string src;
  for (char c = 'a'; c <= 'q'; ++c) src += std::string(1, c) + ".\n";
  CHECK_THROWS_AS(stable_models(theory_of(parse_program(src))), CapExceeded);
}
