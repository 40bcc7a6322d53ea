#include <doctest.h>

#include "elp/core.hpp"

using namespace elp;

TEST_CASE("signature is sorted and searchable") {
  Signature sig({"c", "a", "b"});
  CHECK(sig.size() == 3);
  CHECK(sig.name(0) == "a");
  CHECK(sig.name(2) == "c");
  CHECK(sig.index_of("b") == 1);
  CHECK(sig.index_of("z") == -1);
  CHECK(sig.full_mask() == 7);
}

TEST_CASE("program parsing: heads, bodies, literals") {
  Program p = parse_program("a | b :- c, not K d, not not e.\n:- K not a.\nf.");
  CHECK(p.sig.size() == 6);
  REQUIRE(p.rules.size() == 3);

  const Rule& r0 = p.rules[0];
  CHECK(r0.head == ((Interp(1) << p.sig.index_of("a")) |
                    (Interp(1) << p.sig.index_of("b"))));
  REQUIRE(r0.body.size() == 3);
  CHECK(r0.body[0] == Literal{false, 0, 0, p.sig.index_of("c")});
  CHECK(r0.body[1] == Literal{true, 1, 0, p.sig.index_of("d")});
  CHECK(r0.body[2] == Literal{false, 2, 0, p.sig.index_of("e")});

  CHECK(p.rules[1].is_constraint());
  CHECK(p.rules[1].body[0] == Literal{true, 0, 1, p.sig.index_of("a")});
  CHECK(p.rules[2].is_fact());
  CHECK(p.rules[2].body.empty());
}

TEST_CASE("M desugars to negated K of the complement") {
  Program p = parse_program("a :- M b, not M not c.");
  // M b = not K not b ; not M not c = not not K not not c -> collapses inside
  CHECK(p.rules[0].body[0] == Literal{true, 1, 1, p.sig.index_of("b")});
  CHECK(p.rules[0].body[1] == Literal{true, 2, 2, p.sig.index_of("c")});
}

TEST_CASE("program printing round-trips") {
  const char* src = "a | b :- c, not K d.\n:- K a.\nb :- not not a.\nc.\n";
  Program p = parse_program(src);
  Program q = parse_program(print_program(p));
  CHECK(p.sig == q.sig);
  REQUIRE(p.rules.size() == q.rules.size());
  for (std::size_t i = 0; i < p.rules.size(); ++i) {
    CHECK(p.rules[i].head == q.rules[i].head);
    CHECK(p.rules[i].body == q.rules[i].body);
  }
}

TEST_CASE("parse errors carry positions") {
  CHECK_THROWS_AS(parse_program("a :- not not not b."), ParseError);
  CHECK_THROWS_AS(parse_program("a ;- b."), ParseError);
  CHECK_THROWS_AS(parse_program("| a."), ParseError);
  try {
    parse_program("a :-\n  @b.");
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
  }
}

TEST_CASE("theory parsing: precedence and abbreviations") {
  Theory t = parse_theory("K a -> a.\n-(a & b) | c\nM a -> bot.\ntop -> a | b & c.");
  REQUIRE(t.formulas.size() == 4);
  CHECK(print_formula(t.formulas[0], t.sig) == "K a -> a");
  CHECK(print_formula(t.formulas[1], t.sig) == "-(a & b) | c");
  // M a = -K-a; the implication to bot prints as negation
  CHECK(print_formula(t.formulas[2], t.sig) == "--K -a");
  CHECK(print_formula(t.formulas[3], t.sig) == "top -> a | b & c");
}

TEST_CASE("theory printing round-trips structurally") {
  const char* src = "K (a -> b) -> (c | K a) & -b.\na -> b -> c.";
  Theory t = parse_theory(src);
  Theory u = parse_theory(print_theory(t));
  REQUIRE(t.formulas.size() == u.formulas.size());
  for (std::size_t i = 0; i < t.formulas.size(); ++i)
    CHECK(formula_equal(t.formulas[i], u.formulas[i]));
}

TEST_CASE("parse_formula respects the signature") {
  Signature sig({"a", "b"});
  FormulaPtr f = parse_formula("K a -> b", sig);
  CHECK(atoms_of(f) == 3);
  CHECK_THROWS_AS(parse_formula("c", sig), ParseError);
}

TEST_CASE("extra atoms widen the signature") {
  Program p = parse_program("a.", {"z", "b"});
  CHECK(p.sig.size() == 3);
  CHECK(p.sig.index_of("z") == 2);
}

TEST_CASE("accessors and body partitions") {
  Program p = parse_program("a :- b, not c, K d, not K e.");
  const Rule& r = p.rules[0];
  CHECK(atoms_of(r) == p.sig.full_mask());
  CHECK(body_obj(r).size() == 2);
  CHECK(body_sub(r).size() == 2);
  CHECK(body_pos(r).size() == 2);
  CHECK(body_neg(r).size() == 2);
  CHECK(body_part(r, true, true).size() == 1);
  CHECK(r.is_objective() == false);
  CHECK(parse_program("a :- b, not c.").rules[0].is_objective());
}

TEST_CASE("rule_to_formula builds the implication form") {
  Program p = parse_program("a | b :- c, not K d.");
  CHECK(print_formula(rule_to_formula(p.rules[0]), p.sig) ==
        "c & -K d -> a | b");
  Program q = parse_program(":- K a.");
  CHECK(print_formula(rule_to_formula(q.rules[0]), q.sig) == "-K a");
  Program f = parse_program("a.");
  CHECK(print_formula(rule_to_formula(f.rules[0]), f.sig) == "top -> a");
}

TEST_CASE("objectivity predicate") {
  Signature sig({"a"});
  CHECK(is_objective(parse_formula("a -> -a", sig)));
  CHECK(!is_objective(parse_formula("-K a", sig)));
}
