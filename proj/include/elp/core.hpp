#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

// Domain types for epistemic logic programs: signatures, formulas with the
// modal belief operator K, and the restricted rule syntax (disjunctive head,
// literal-conjunction body).

namespace elp {

// A propositional interpretation over a Signature, one bit per atom.
using Interp = std::uint32_t;

constexpr int kMaxAtoms = 30;

struct ParseError : std::runtime_error {
  int line, column;
  ParseError(int line, int column, const std::string& what)
      : std::runtime_error("parse error at " + std::to_string(line) + ":" +
                           std::to_string(column) + ": " + what),
        line(line), column(column) {}
};

struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Ordered atom universe. Atom identity is the index into `names`, which is
// kept sorted lexicographically so that all set-valued outputs are
// deterministic.
class Signature {
 public:
  Signature() = default;
  explicit Signature(std::vector<std::string> names);

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(int i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }
  // -1 when absent.
  int index_of(const std::string& name) const;
  bool contains(const std::string& name) const { return index_of(name) >= 0; }

  Interp full_mask() const { return size() == 0 ? 0 : (Interp(1) << size()) - 1; }

  bool operator==(const Signature&) const = default;

 private:
  std::vector<std::string> names_;
};

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

// Formula AST. Derived forms are stored desugared: -x as x -> bot,
// top as bot -> bot, M x as -K-x.
struct Formula {
  enum class Kind { Bot, Atom, And, Or, Implies, K };
  Kind kind;
  int atom = -1;      // Kind::Atom only
  FormulaPtr lhs, rhs;  // K uses lhs only
};

FormulaPtr mk_bot();
FormulaPtr mk_top();
FormulaPtr mk_atom(int atom);
FormulaPtr mk_and(FormulaPtr a, FormulaPtr b);
FormulaPtr mk_or(FormulaPtr a, FormulaPtr b);
FormulaPtr mk_implies(FormulaPtr a, FormulaPtr b);
FormulaPtr mk_not(FormulaPtr a);
FormulaPtr mk_k(FormulaPtr a);
FormulaPtr mk_m(FormulaPtr a);

bool formula_equal(const FormulaPtr& a, const FormulaPtr& b);
bool is_objective(const FormulaPtr& f);

// Body literal of a rule: an objective literal (atom or truth constant under
// 0-2 default negations) or a subjective literal (K applied to an objective
// literal, under 0-2 outer default negations).
struct Literal {
  static constexpr int kTop = -1;
  static constexpr int kBot = -2;

  bool subjective = false;
  int negs = 0;        // default negations outside K (or on the objective literal)
  int inner_negs = 0;  // default negations inside K; 0 for objective literals
  int base = kTop;     // atom index, kTop or kBot

  bool operator==(const Literal&) const = default;
};

struct Rule {
  Interp head = 0;  // empty head = constraint
  std::vector<Literal> body;

  bool is_constraint() const { return head == 0; }
  bool is_fact() const { return body.empty(); }
  bool is_objective() const;
};

struct Program {
  Signature sig;
  std::vector<Rule> rules;
};

struct Theory {
  Signature sig;
  std::vector<FormulaPtr> formulas;
};

// Parsing. The signature is inferred from the text and canonicalized;
// `extra_atoms` widens it (the semantics are signature-sensitive).
Program parse_program(const std::string& text,
                      const std::vector<std::string>& extra_atoms = {});
Theory parse_theory(const std::string& text,
                    const std::vector<std::string>& extra_atoms = {});
// Single formula over an explicit signature.
FormulaPtr parse_formula(const std::string& text, const Signature& sig);

// Structural accessors.
Interp atoms_of(const FormulaPtr& f);
Interp atoms_of(const Literal& l);
Interp atoms_of(const Rule& r);
Interp atoms_of(const Program& p);
Interp atoms_of(const Theory& t);

// Body partitions. Body+ / Body- split on leading default negation;
// obj / sub split on the presence of K.
std::vector<Literal> body_pos(const Rule& r);
std::vector<Literal> body_neg(const Rule& r);
std::vector<Literal> body_obj(const Rule& r);
std::vector<Literal> body_sub(const Rule& r);
std::vector<Literal> body_part(const Rule& r, bool positive, bool subjective);

FormulaPtr literal_to_formula(const Literal& l);
FormulaPtr rule_to_formula(const Rule& r);
Theory theory_of(const Program& p);

// Printing; print_program(parse_program(s)) reparses to an identical Program.
std::string print_literal(const Literal& l, const Signature& sig);
std::string print_rule(const Rule& r, const Signature& sig);
std::string print_program(const Program& p);
std::string print_formula(const FormulaPtr& f, const Signature& sig);
std::string print_theory(const Theory& t);

std::vector<std::string> interp_names(Interp i, const Signature& sig);

}  // namespace elp
