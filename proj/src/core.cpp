#include "elp/core.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <map>
#include <sstream>

namespace elp {

Signature::Signature(std::vector<std::string> names) : names_(std::move(names)) {
  std::sort(names_.begin(), names_.end());
  names_.erase(std::unique(names_.begin(), names_.end()), names_.end());
  if (size() > kMaxAtoms)
    throw CapExceeded("signature exceeds " + std::to_string(kMaxAtoms) + " atoms");
}

int Signature::index_of(const std::string& name) const {
  auto it = std::lower_bound(names_.begin(), names_.end(), name);
  if (it == names_.end() || *it != name) return -1;
  return static_cast<int>(it - names_.begin());
}

FormulaPtr mk_bot() {
  static const FormulaPtr bot = std::make_shared<Formula>(Formula{Formula::Kind::Bot, -1, {}, {}});
  return bot;
}
FormulaPtr mk_atom(int atom) {
  return std::make_shared<Formula>(Formula{Formula::Kind::Atom, atom, {}, {}});
}
FormulaPtr mk_and(FormulaPtr a, FormulaPtr b) {
  return std::make_shared<Formula>(
      Formula{Formula::Kind::And, -1, std::move(a), std::move(b)});
}
FormulaPtr mk_or(FormulaPtr a, FormulaPtr b) {
  return std::make_shared<Formula>(
      Formula{Formula::Kind::Or, -1, std::move(a), std::move(b)});
}
FormulaPtr mk_implies(FormulaPtr a, FormulaPtr b) {
  return std::make_shared<Formula>(
      Formula{Formula::Kind::Implies, -1, std::move(a), std::move(b)});
}
FormulaPtr mk_not(FormulaPtr a) { return mk_implies(std::move(a), mk_bot()); }
FormulaPtr mk_top() {
  static const FormulaPtr top = mk_not(mk_bot());
  return top;
}
FormulaPtr mk_k(FormulaPtr a) {
  return std::make_shared<Formula>(Formula{Formula::Kind::K, -1, std::move(a), {}});
}
FormulaPtr mk_m(FormulaPtr a) { return mk_not(mk_k(mk_not(std::move(a)))); }

bool formula_equal(const FormulaPtr& a, const FormulaPtr& b) {
  if (a == b) return true;
  if (a->kind != b->kind || a->atom != b->atom) return false;
  if (a->lhs && !formula_equal(a->lhs, b->lhs)) return false;
  if (a->rhs && !formula_equal(a->rhs, b->rhs)) return false;
  return (a->lhs == nullptr) == (b->lhs == nullptr) &&
         (a->rhs == nullptr) == (b->rhs == nullptr);
}

bool is_objective(const FormulaPtr& f) {
  if (f->kind == Formula::Kind::K) return false;
  if (f->lhs && !is_objective(f->lhs)) return false;
  if (f->rhs && !is_objective(f->rhs)) return false;
  return true;
}

bool Rule::is_objective() const {
  return std::none_of(body.begin(), body.end(),
                      [](const Literal& l) { return l.subjective; });
}

// ---------------------------------------------------------------------------
// Lexer shared by the program and theory parsers.

namespace {

struct Token {
  enum class Kind {
    Ident, Not, K, M, Top, Bot,
    Pipe, Comma, If, Dot, Amp, Arrow, Dash, LParen, RParen,
    Newline, End
  };
  Kind kind;
  std::string text;
  int line, col;
};

class Lexer {
 public:
  explicit Lexer(const std::string& text) : text_(text) {}

  Token next() {
    skip_space_and_comments();
    int line = line_, col = col_;
    if (pos_ >= text_.size()) return {Token::Kind::End, "", line, col};
    char c = text_[pos_];
    if (c == '\n') { advance(); return {Token::Kind::Newline, "\n", line, col}; }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string word;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
              text_[pos_] == '_' || text_[pos_] == '\'')) {
        word += text_[pos_];
        advance();
      }
      if (word == "not") return {Token::Kind::Not, word, line, col};
      if (word == "K") return {Token::Kind::K, word, line, col};
      if (word == "M") return {Token::Kind::M, word, line, col};
      if (word == "top") return {Token::Kind::Top, word, line, col};
      if (word == "bot") return {Token::Kind::Bot, word, line, col};
      return {Token::Kind::Ident, word, line, col};
    }
    switch (c) {
      case '|': advance(); return {Token::Kind::Pipe, "|", line, col};
      case ',': advance(); return {Token::Kind::Comma, ",", line, col};
      case '.': advance(); return {Token::Kind::Dot, ".", line, col};
      case '&': advance(); return {Token::Kind::Amp, "&", line, col};
      case '(': advance(); return {Token::Kind::LParen, "(", line, col};
      case ')': advance(); return {Token::Kind::RParen, ")", line, col};
      case ':':
        if (pos_ + 1 < text_.size() && text_[pos_ + 1] == '-') {
          advance(); advance();
          return {Token::Kind::If, ":-", line, col};
        }
        break;
      case '-':
        if (pos_ + 1 < text_.size() && text_[pos_ + 1] == '>') {
          advance(); advance();
          return {Token::Kind::Arrow, "->", line, col};
        }
        advance();
        return {Token::Kind::Dash, "-", line, col};
      default: break;
    }
    throw ParseError(line, col, std::string("unexpected character '") + c + "'");
  }

 private:
  void advance() {
    if (text_[pos_] == '\n') { ++line_; col_ = 1; } else { ++col_; }
    ++pos_;
  }
  void skip_space_and_comments() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '%') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (c == ' ' || c == '\t' || c == '\r') {
        advance();
      } else {
        break;
      }
    }
  }

  const std::string& text_;
  std::size_t pos_ = 0;
  int line_ = 1, col_ = 1;
};

class TokenStream {
 public:
  explicit TokenStream(const std::string& text) : lexer_(text) { tok_ = lexer_.next(); }
  const Token& peek() const { return tok_; }
  Token take() {
    Token t = tok_;
    tok_ = lexer_.next();
    return t;
  }
  Token expect(Token::Kind kind, const std::string& what) {
    if (tok_.kind != kind)
      throw ParseError(tok_.line, tok_.col, "expected " + what);
    return take();
  }

 private:
  Lexer lexer_;
  Token tok_;
};

[[noreturn]] void fail(const Token& t, const std::string& msg) {
  throw ParseError(t.line, t.col, msg);
}

// Atom names are resolved against a temporary first-occurrence table and
// remapped once the final (lexicographic) signature is known.
struct AtomTable {
  std::vector<std::string> names;
  std::map<std::string, int> index;

  int intern(const std::string& name) {
    auto [it, fresh] = index.try_emplace(name, static_cast<int>(names.size()));
    if (fresh) names.push_back(name);
    return it->second;
  }
};

// Objective literal part: [not [not]] (atom | top | bot).
Literal parse_objective_part(TokenStream& ts, AtomTable& atoms) {
  Literal lit;
  while (ts.peek().kind == Token::Kind::Not) {
    Token t = ts.take();
    if (++lit.negs > 2) fail(t, "more than two default negations");
  }
  Token t = ts.take();
  switch (t.kind) {
    case Token::Kind::Ident: lit.base = atoms.intern(t.text); break;
    case Token::Kind::Top: lit.base = Literal::kTop; break;
    case Token::Kind::Bot: lit.base = Literal::kBot; break;
    default: fail(t, "expected atom or truth constant");
  }
  return lit;
}

// `M l` abbreviates `not K <complement of l>`; a triple negation produced by
// the complement collapses to a single one (HT-equivalent).
Literal desugar_m(const Token& m_tok, int outer_negs, Literal inner) {
  Literal lit;
  lit.subjective = true;
  lit.negs = outer_negs + 1;
  if (lit.negs > 2) fail(m_tok, "more than two default negations");
  lit.inner_negs = inner.negs + 1;
  if (lit.inner_negs > 2) lit.inner_negs -= 2;
  lit.base = inner.base;
  return lit;
}

Literal parse_body_literal(TokenStream& ts, AtomTable& atoms) {
  int negs = 0;
  while (ts.peek().kind == Token::Kind::Not) {
    Token t = ts.take();
    if (++negs > 2) fail(t, "more than two default negations");
  }
  if (ts.peek().kind == Token::Kind::K) {
    ts.take();
    Literal inner = parse_objective_part(ts, atoms);
    Literal lit;
    lit.subjective = true;
    lit.negs = negs;
    lit.inner_negs = inner.negs;
    lit.base = inner.base;
    return lit;
  }
  if (ts.peek().kind == Token::Kind::M) {
    Token m_tok = ts.take();
    Literal inner = parse_objective_part(ts, atoms);
    return desugar_m(m_tok, negs, inner);
  }
  Literal lit = parse_objective_part(ts, atoms);
  if (negs + lit.negs > 2)
    fail(ts.peek(), "more than two default negations");
  lit.negs += negs;
  return lit;
}

Rule parse_rule(TokenStream& ts, AtomTable& atoms, std::vector<int>& head_tmp) {
  Rule rule;
  head_tmp.clear();
  if (ts.peek().kind != Token::Kind::If) {
    head_tmp.push_back(atoms.intern(ts.expect(Token::Kind::Ident, "head atom").text));
    while (ts.peek().kind == Token::Kind::Pipe) {
      ts.take();
      head_tmp.push_back(atoms.intern(ts.expect(Token::Kind::Ident, "head atom").text));
    }
  }
  if (ts.peek().kind == Token::Kind::If) {
    ts.take();
    if (ts.peek().kind != Token::Kind::Dot && ts.peek().kind != Token::Kind::Newline &&
        ts.peek().kind != Token::Kind::End) {
      rule.body.push_back(parse_body_literal(ts, atoms));
      while (ts.peek().kind == Token::Kind::Comma) {
        ts.take();
        rule.body.push_back(parse_body_literal(ts, atoms));
      }
    }
  } else if (head_tmp.empty()) {
    fail(ts.peek(), "expected rule");
  }
  if (ts.peek().kind == Token::Kind::Dot) ts.take();
  return rule;
}

int remap_base(int base, const std::vector<int>& remap) {
  return base >= 0 ? remap[base] : base;
}

}  // namespace

Program parse_program(const std::string& text,
                      const std::vector<std::string>& extra_atoms) {
  TokenStream ts(text);
  AtomTable atoms;
  for (const auto& a : extra_atoms) atoms.intern(a);

  std::vector<std::pair<std::vector<int>, Rule>> raw;  // (head atoms, rule)
  std::vector<int> head_tmp;
  while (true) {
    while (ts.peek().kind == Token::Kind::Newline) ts.take();
    if (ts.peek().kind == Token::Kind::End) break;
    Rule r = parse_rule(ts, atoms, head_tmp);
    raw.emplace_back(head_tmp, std::move(r));
    if (ts.peek().kind != Token::Kind::Newline && ts.peek().kind != Token::Kind::End)
      fail(ts.peek(), "expected end of rule");
  }

  Program prog;
  prog.sig = Signature(atoms.names);
  std::vector<int> remap(atoms.names.size());
  for (std::size_t i = 0; i < atoms.names.size(); ++i)
    remap[i] = prog.sig.index_of(atoms.names[i]);

  for (auto& [head, rule] : raw) {
    for (int a : head) rule.head |= Interp(1) << remap[a];
    for (auto& lit : rule.body) lit.base = remap_base(lit.base, remap);
    prog.rules.push_back(std::move(rule));
  }
  return prog;
}

// ---------------------------------------------------------------------------
// Theory-mode formulas: implication (right-assoc, lowest) > | > & > unary.

namespace {

FormulaPtr parse_implication(TokenStream& ts, AtomTable& atoms);

FormulaPtr parse_unary(TokenStream& ts, AtomTable& atoms) {
  Token t = ts.peek();
  switch (t.kind) {
    case Token::Kind::Dash: ts.take(); return mk_not(parse_unary(ts, atoms));
    case Token::Kind::K: ts.take(); return mk_k(parse_unary(ts, atoms));
    case Token::Kind::M: ts.take(); return mk_m(parse_unary(ts, atoms));
    case Token::Kind::Top: ts.take(); return mk_top();
    case Token::Kind::Bot: ts.take(); return mk_bot();
    case Token::Kind::Ident: ts.take(); return mk_atom(atoms.intern(t.text));
    case Token::Kind::LParen: {
      ts.take();
      FormulaPtr f = parse_implication(ts, atoms);
      ts.expect(Token::Kind::RParen, "')'");
      return f;
    }
    default: fail(t, "expected formula");
  }
}

FormulaPtr parse_conjunction(TokenStream& ts, AtomTable& atoms) {
  FormulaPtr f = parse_unary(ts, atoms);
  while (ts.peek().kind == Token::Kind::Amp) {
    ts.take();
    f = mk_and(f, parse_unary(ts, atoms));
  }
  return f;
}

FormulaPtr parse_disjunction(TokenStream& ts, AtomTable& atoms) {
  FormulaPtr f = parse_conjunction(ts, atoms);
  while (ts.peek().kind == Token::Kind::Pipe) {
    ts.take();
    f = mk_or(f, parse_conjunction(ts, atoms));
  }
  return f;
}

FormulaPtr parse_implication(TokenStream& ts, AtomTable& atoms) {
  FormulaPtr f = parse_disjunction(ts, atoms);
  if (ts.peek().kind == Token::Kind::Arrow) {
    ts.take();
    return mk_implies(f, parse_implication(ts, atoms));
  }
  return f;
}

FormulaPtr remap_formula(const FormulaPtr& f, const std::vector<int>& remap) {
  switch (f->kind) {
    case Formula::Kind::Bot: return f;
    case Formula::Kind::Atom: return mk_atom(remap[f->atom]);
    case Formula::Kind::K: return mk_k(remap_formula(f->lhs, remap));
    case Formula::Kind::And:
      return mk_and(remap_formula(f->lhs, remap), remap_formula(f->rhs, remap));
    case Formula::Kind::Or:
      return mk_or(remap_formula(f->lhs, remap), remap_formula(f->rhs, remap));
    case Formula::Kind::Implies:
      return mk_implies(remap_formula(f->lhs, remap), remap_formula(f->rhs, remap));
  }
  throw std::logic_error("bad formula kind");
}

}  // namespace

Theory parse_theory(const std::string& text,
                    const std::vector<std::string>& extra_atoms) {
  TokenStream ts(text);
  AtomTable atoms;
  for (const auto& a : extra_atoms) atoms.intern(a);

  std::vector<FormulaPtr> raw;
  while (true) {
    while (ts.peek().kind == Token::Kind::Newline) ts.take();
    if (ts.peek().kind == Token::Kind::End) break;
    raw.push_back(parse_implication(ts, atoms));
    if (ts.peek().kind == Token::Kind::Dot) ts.take();
    if (ts.peek().kind != Token::Kind::Newline && ts.peek().kind != Token::Kind::End)
      fail(ts.peek(), "expected end of formula");
  }

  Theory th;
  th.sig = Signature(atoms.names);
  std::vector<int> remap(atoms.names.size());
  for (std::size_t i = 0; i < atoms.names.size(); ++i)
    remap[i] = th.sig.index_of(atoms.names[i]);
  for (const auto& f : raw) th.formulas.push_back(remap_formula(f, remap));
  return th;
}

FormulaPtr parse_formula(const std::string& text, const Signature& sig) {
  TokenStream ts(text);
  AtomTable atoms;
  for (const auto& name : sig.names()) atoms.intern(name);
  FormulaPtr f = parse_implication(ts, atoms);
  if (ts.peek().kind == Token::Kind::Dot) ts.take();
  while (ts.peek().kind == Token::Kind::Newline) ts.take();
  if (ts.peek().kind != Token::Kind::End) fail(ts.peek(), "trailing input");
  if (static_cast<int>(atoms.names.size()) > sig.size())
    throw ParseError(1, 1, "formula mentions atoms outside the signature");
  std::vector<int> remap(atoms.names.size());
  for (std::size_t i = 0; i < atoms.names.size(); ++i)
    remap[i] = sig.index_of(atoms.names[i]);
  return remap_formula(f, remap);
}

// ---------------------------------------------------------------------------
// Accessors.

Interp atoms_of(const FormulaPtr& f) {
  switch (f->kind) {
    case Formula::Kind::Bot: return 0;
    case Formula::Kind::Atom: return Interp(1) << f->atom;
    case Formula::Kind::K: return atoms_of(f->lhs);
    default: return atoms_of(f->lhs) | atoms_of(f->rhs);
  }
}

Interp atoms_of(const Literal& l) {
  return l.base >= 0 ? Interp(1) << l.base : 0;
}

Interp atoms_of(const Rule& r) {
  Interp m = r.head;
  for (const auto& l : r.body) m |= atoms_of(l);
  return m;
}

Interp atoms_of(const Program& p) {
  Interp m = 0;
  for (const auto& r : p.rules) m |= atoms_of(r);
  return m;
}

Interp atoms_of(const Theory& t) {
  Interp m = 0;
  for (const auto& f : t.formulas) m |= atoms_of(f);
  return m;
}

std::vector<Literal> body_part(const Rule& r, bool positive, bool subjective) {
  std::vector<Literal> out;
  for (const auto& l : r.body)
    if ((l.negs == 0) == positive && l.subjective == subjective) out.push_back(l);
  return out;
}

std::vector<Literal> body_pos(const Rule& r) {
  std::vector<Literal> out;
  for (const auto& l : r.body)
    if (l.negs == 0) out.push_back(l);
  return out;
}

std::vector<Literal> body_neg(const Rule& r) {
  std::vector<Literal> out;
  for (const auto& l : r.body)
    if (l.negs > 0) out.push_back(l);
  return out;
}

std::vector<Literal> body_obj(const Rule& r) {
  std::vector<Literal> out;
  for (const auto& l : r.body)
    if (!l.subjective) out.push_back(l);
  return out;
}

std::vector<Literal> body_sub(const Rule& r) {
  std::vector<Literal> out;
  for (const auto& l : r.body)
    if (l.subjective) out.push_back(l);
  return out;
}

FormulaPtr literal_to_formula(const Literal& l) {
  FormulaPtr f;
  if (l.base == Literal::kTop) f = mk_top();
  else if (l.base == Literal::kBot) f = mk_bot();
  else f = mk_atom(l.base);
  if (l.subjective) {
    for (int i = 0; i < l.inner_negs; ++i) f = mk_not(f);
    f = mk_k(f);
  }
  for (int i = 0; i < l.negs; ++i) f = mk_not(f);
  return f;
}

FormulaPtr rule_to_formula(const Rule& r) {
  FormulaPtr body;
  for (const auto& l : r.body) {
    FormulaPtr lf = literal_to_formula(l);
    body = body ? mk_and(body, lf) : lf;
  }
  if (!body) body = mk_top();

  FormulaPtr head;
  for (int a = 0; a < kMaxAtoms; ++a) {
    if (!(r.head >> a & 1)) continue;
    FormulaPtr af = mk_atom(a);
    head = head ? mk_or(head, af) : af;
  }
  if (!head) head = mk_bot();
  return mk_implies(body, head);
}

Theory theory_of(const Program& p) {
  Theory th;
  th.sig = p.sig;
  for (const auto& r : p.rules) th.formulas.push_back(rule_to_formula(r));
  return th;
}

// ---------------------------------------------------------------------------
// Printing.

std::string print_literal(const Literal& l, const Signature& sig) {
  std::string s;
  for (int i = 0; i < l.negs; ++i) s += "not ";
  if (l.subjective) {
    s += "K ";
    for (int i = 0; i < l.inner_negs; ++i) s += "not ";
  }
  if (l.base == Literal::kTop) s += "top";
  else if (l.base == Literal::kBot) s += "bot";
  else s += sig.name(l.base);
  return s;
}

std::string print_rule(const Rule& r, const Signature& sig) {
  std::string s;
  bool first = true;
  for (int a = 0; a < sig.size(); ++a) {
    if (!(r.head >> a & 1)) continue;
    if (!first) s += " | ";
    s += sig.name(a);
    first = false;
  }
  if (!r.body.empty() || r.head == 0) {
    if (!first) s += " ";
    s += ":-";
    for (std::size_t i = 0; i < r.body.size(); ++i)
      s += (i ? ", " : " ") + print_literal(r.body[i], sig);
  }
  return s + ".";
}

std::string print_program(const Program& p) {
  std::string s;
  for (const auto& r : p.rules) s += print_rule(r, p.sig) + "\n";
  return s;
}

namespace {

bool is_not(const FormulaPtr& f) {
  return f->kind == Formula::Kind::Implies && f->rhs->kind == Formula::Kind::Bot;
}

void print_rec(const FormulaPtr& f, const Signature& sig, int parent_prec,
               std::string& out) {
  // precedence: -> 0, | 1, & 2, unary 3
  if (f->kind == Formula::Kind::Bot) { out += "bot"; return; }
  if (f->kind == Formula::Kind::Atom) { out += sig.name(f->atom); return; }
  if (f->kind == Formula::Kind::K) {
    out += "K ";
    print_rec(f->lhs, sig, 3, out);
    return;
  }
  if (is_not(f)) {
    if (f->lhs->kind == Formula::Kind::Bot) { out += "top"; return; }
    out += "-";
    print_rec(f->lhs, sig, 3, out);
    return;
  }
  int prec;
  const char* op;
  switch (f->kind) {
    case Formula::Kind::Implies: prec = 0; op = " -> "; break;
    case Formula::Kind::Or: prec = 1; op = " | "; break;
    default: prec = 2; op = " & "; break;
  }
  bool parens = prec < parent_prec;
  if (parens) out += "(";
  // -> is right-associative; | and & left-associative
  print_rec(f->lhs, sig, f->kind == Formula::Kind::Implies ? prec + 1 : prec, out);
  out += op;
  print_rec(f->rhs, sig, f->kind == Formula::Kind::Implies ? prec : prec + 1, out);
  if (parens) out += ")";
}

}  // namespace

std::string print_formula(const FormulaPtr& f, const Signature& sig) {
  std::string out;
  print_rec(f, sig, 0, out);
  return out;
}

std::string print_theory(const Theory& t) {
  std::string s;
  for (const auto& f : t.formulas) s += print_formula(f, t.sig) + "\n";
  return s;
}

std::vector<std::string> interp_names(Interp i, const Signature& sig) {
  std::vector<std::string> out;
  for (int a = 0; a < sig.size(); ++a)
    if (i >> a & 1) out.push_back(sig.name(a));
  return out;
}

}  // namespace elp
