#include "seff/logic.hpp"

#include <cctype>
#include <set>
#include <sstream>

namespace seff {

// ---- AST constructors -------------------------------------------------------

FormulaPtr Formula::top() {
  auto f = std::make_shared<Formula>();
  f->kind = Kind::Top;
  return f;
}

FormulaPtr Formula::make_atom(std::string name) {
  auto f = std::make_shared<Formula>();
  f->kind = Kind::Atom;
  f->atom = std::move(name);
  return f;
}

FormulaPtr Formula::make_and(FormulaPtr l, FormulaPtr r) {
  auto f = std::make_shared<Formula>();
  f->kind = Kind::And;
  f->lhs = std::move(l);
  f->rhs = std::move(r);
  return f;
}

FormulaPtr Formula::dia(Rational q, FormulaPtr inner) {
  if (!in_unit_interval(q))
    throw Error("threshold " + to_string(q) + " outside [0,1]");
  auto f = std::make_shared<Formula>();
  f->kind = Kind::Dia;
  f->threshold = std::move(q);
  f->lhs = std::move(inner);
  return f;
}

bool formulas_equal(const FormulaPtr& a, const FormulaPtr& b) {
  if (!a || !b) return a == b;
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case Formula::Kind::Top: return true;
    case Formula::Kind::Atom: return a->atom == b->atom;
    case Formula::Kind::And:
      return formulas_equal(a->lhs, b->lhs) && formulas_equal(a->rhs, b->rhs);
    case Formula::Kind::Dia:
      return a->threshold == b->threshold && formulas_equal(a->lhs, b->lhs);
  }
  return false;
}

GameTermPtr GameTerm::make_prim(std::string name) {
  auto g = std::make_shared<GameTerm>();
  g->kind = Kind::Prim;
  g->prim = std::move(name);
  return g;
}

GameTermPtr GameTerm::make_union(GameTermPtr l, GameTermPtr r) {
  auto g = std::make_shared<GameTerm>();
  g->kind = Kind::Union;
  g->lhs = std::move(l);
  g->rhs = std::move(r);
  return g;
}

GameTermPtr GameTerm::make_seq(GameTermPtr l, GameTermPtr r) {
  auto g = std::make_shared<GameTerm>();
  g->kind = Kind::Seq;
  g->lhs = std::move(l);
  g->rhs = std::move(r);
  return g;
}

GameTermPtr GameTerm::make_star(GameTermPtr inner) {
  auto g = std::make_shared<GameTerm>();
  g->kind = Kind::Star;
  g->lhs = std::move(inner);
  return g;
}

GameTermPtr GameTerm::make_dual(GameTermPtr inner) {
  auto g = std::make_shared<GameTerm>();
  g->kind = Kind::Dual;
  g->lhs = std::move(inner);
  return g;
}

bool games_equal(const GameTermPtr& a, const GameTermPtr& b) {
  if (!a || !b) return a == b;
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case GameTerm::Kind::Prim: return a->prim == b->prim;
    case GameTerm::Kind::Union:
    case GameTerm::Kind::Seq:
      return games_equal(a->lhs, b->lhs) && games_equal(a->rhs, b->rhs);
    case GameTerm::Kind::Star:
    case GameTerm::Kind::Dual:
      return games_equal(a->lhs, b->lhs);
  }
  return false;
}

// ---- lexer / parser ---------------------------------------------------------

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : Error("parse error at " + std::to_string(line) + ":" + std::to_string(column) +
            ": " + message),
      line_(line),
      column_(column) {}

namespace {

struct Lexer {
  const std::string& text;
  std::size_t pos = 0;
  std::size_t line = 1;
  std::size_t col = 1;

  explicit Lexer(const std::string& t) : text(t) {}

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(line, col, message);
  }

  void advance() {
    if (text[pos] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    ++pos;
  }

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      advance();
  }

  bool done() {
    skip_ws();
    return pos >= text.size();
  }

  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }

  bool try_consume(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      advance();
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!try_consume(c)) fail(std::string("expected '") + c + "'");
  }

  static bool ident_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
  }
  static bool ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  }

  std::string identifier() {
    skip_ws();
    if (pos >= text.size() || !ident_start(text[pos])) fail("expected an identifier");
    std::string out;
    while (pos < text.size() && ident_char(text[pos])) {
      out.push_back(text[pos]);
      advance();
    }
    return out;
  }

  // Rational literal p/q or bare integer; decimals are rejected to keep
  // everything exact.
  Rational rational() {
    skip_ws();
    std::string digits;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      digits.push_back(text[pos]);
      advance();
    }
    if (digits.empty()) fail("expected a rational literal p/q");
    if (pos < text.size() && text[pos] == '.') fail("decimal literals are not allowed");
    if (pos < text.size() && text[pos] == '/') {
      advance();
      std::string denom;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        denom.push_back(text[pos]);
        advance();
      }
      if (denom.empty()) fail("expected a denominator");
      if (Integer(denom) == 0) fail("zero denominator");
      return Rational(Integer(digits), Integer(denom));
    }
    return Rational(Integer(digits));
  }
};

struct FormulaParser {
  Lexer lex;

  explicit FormulaParser(const std::string& text) : lex(text) {}

  FormulaPtr parse() {
    FormulaPtr f = conjunction();
    if (!lex.done()) lex.fail("unexpected trailing input");
    return f;
  }

  FormulaPtr conjunction() {
    FormulaPtr f = unary();
    while (lex.try_consume('&')) f = Formula::make_and(f, unary());
    return f;
  }

  FormulaPtr unary() {
    lex.skip_ws();
    const std::size_t mark = lex.pos;
    if (Lexer::ident_start(lex.peek())) {
      const std::size_t line = lex.line, col = lex.col;
      std::string word = lex.identifier();
      if (word == "dia") {
        lex.expect('[');
        Rational q = lex.rational();
        if (!in_unit_interval(q))
          throw ParseError(line, col, "threshold " + to_string(q) + " outside [0,1]");
        lex.expect(']');
        return Formula::dia(std::move(q), unary());
      }
      if (word == "top") return Formula::top();
      (void)mark;
      return Formula::make_atom(std::move(word));
    }
    return primary();
  }

  FormulaPtr primary() {
    if (lex.try_consume('(')) {
      FormulaPtr f = conjunction();
      lex.expect(')');
      return f;
    }
    lex.fail("expected a formula");
  }
};

struct GameParser {
  Lexer lex;

  explicit GameParser(const std::string& text) : lex(text) {}

  GameTermPtr parse() {
    GameTermPtr g = union_term();
    if (!lex.done()) lex.fail("unexpected trailing input");
    return g;
  }

  GameTermPtr union_term() {
    GameTermPtr g = seq_term();
    while (lex.try_consume('|')) g = GameTerm::make_union(g, seq_term());
    return g;
  }

  GameTermPtr seq_term() {
    GameTermPtr g = prefix_term();
    while (lex.try_consume(';')) g = GameTerm::make_seq(g, prefix_term());
    return g;
  }

  GameTermPtr prefix_term() {
    lex.skip_ws();
    if (Lexer::ident_start(lex.peek())) {
      std::string word = lex.identifier();
      if (word == "dual") return GameTerm::make_dual(prefix_term());
      return postfix_rest(GameTerm::make_prim(std::move(word)));
    }
    return postfix_term();
  }

  GameTermPtr postfix_term() {
    GameTermPtr g = primary();
    return postfix_rest(std::move(g));
  }

  GameTermPtr postfix_rest(GameTermPtr g) {
    while (lex.try_consume('*')) g = GameTerm::make_star(g);
    return g;
  }

  GameTermPtr primary() {
    if (lex.try_consume('(')) {
      GameTermPtr g = union_term();
      lex.expect(')');
      return g;
    }
    lex.fail("expected a game term");
  }
};

}  // namespace

FormulaPtr parse_formula(const std::string& text) { return FormulaParser(text).parse(); }
GameTermPtr parse_game(const std::string& text) { return GameParser(text).parse(); }

// ---- printers ---------------------------------------------------------------

namespace {

void print_formula(std::ostream& os, const FormulaPtr& f, bool parenthesize_and) {
  switch (f->kind) {
    case Formula::Kind::Top:
      os << "top";
      return;
    case Formula::Kind::Atom:
      os << f->atom;
      return;
    case Formula::Kind::And:
      if (parenthesize_and) os << '(';
      print_formula(os, f->lhs, false);
      os << " & ";
      print_formula(os, f->rhs, true);  // right-nested And needs parens
      if (parenthesize_and) os << ')';
      return;
    case Formula::Kind::Dia:
      os << "dia[" << to_string(f->threshold) << "] ";
      print_formula(os, f->lhs, true);
      return;
  }
}

enum class GameCtx { Union, Seq, Tight };

void print_game(std::ostream& os, const GameTermPtr& g, GameCtx ctx) {
  switch (g->kind) {
    case GameTerm::Kind::Prim:
      os << g->prim;
      return;
    case GameTerm::Kind::Union: {
      const bool parens = ctx != GameCtx::Union;
      if (parens) os << '(';
      print_game(os, g->lhs, GameCtx::Union);
      os << " | ";
      print_game(os, g->rhs, GameCtx::Seq);  // keep left association
      if (parens) os << ')';
      return;
    }
    case GameTerm::Kind::Seq: {
      const bool parens = ctx == GameCtx::Tight;
      if (parens) os << '(';
      print_game(os, g->lhs, GameCtx::Seq);
      os << " ; ";
      print_game(os, g->rhs, GameCtx::Tight);
      if (parens) os << ')';
      return;
    }
    case GameTerm::Kind::Dual:
      os << "dual ";
      print_game(os, g->lhs, GameCtx::Tight);
      return;
    case GameTerm::Kind::Star: {
      // The star binds tightest; its operand needs parens unless atomic or
      // another star.
      const bool parens = g->lhs->kind != GameTerm::Kind::Prim &&
                          g->lhs->kind != GameTerm::Kind::Star;
      if (parens) {
        os << '(';
        print_game(os, g->lhs, GameCtx::Union);
        os << ')';
      } else {
        print_game(os, g->lhs, GameCtx::Tight);
      }
      os << '*';
      return;
    }
  }
}

}  // namespace

std::string pretty(const FormulaPtr& f) {
  std::ostringstream os;
  print_formula(os, f, false);
  return os.str();
}

std::string pretty(const GameTermPtr& g) {
  std::ostringstream os;
  print_game(os, g, GameCtx::Union);
  return os.str();
}

// ---- models and evaluation --------------------------------------------------

NeighborhoodModel::NeighborhoodModel(
    SpacePtr space, std::map<std::string, std::vector<std::vector<Subset>>> primitives)
    : space_(std::move(space)), primitives_(std::move(primitives)) {
  for (const auto& [name, per_state] : primitives_) {
    if (per_state.size() != space_->size())
      throw Error("primitive '" + name + "' needs one generator list per state");
    for (const auto& gens : per_state)
      for (const auto& g : gens)
        require_same_space(g.space(), space_, "neighborhood generator");
  }
}

const std::vector<std::vector<Subset>>& NeighborhoodModel::primitive(
    const std::string& name) const {
  const auto it = primitives_.find(name);
  if (it == primitives_.end()) throw Error("unbound primitive game '" + name + "'");
  return it->second;
}

Subset eval_game(const NeighborhoodModel& m, const GameTermPtr& g, const Subset& target) {
  require_same_space(m.space(), target.space(), "eval_game");
  switch (g->kind) {
    case GameTerm::Kind::Prim: {
      const auto& per_state = m.primitive(g->prim);
      std::uint64_t bits = 0;
      for (std::size_t s = 0; s < m.space()->size(); ++s) {
        for (const auto& gen : per_state[s]) {
          if (gen.subset_of(target)) {
            bits |= 1ull << s;
            break;
          }
        }
      }
      return Subset(m.space(), bits);
    }
    case GameTerm::Kind::Union:
      return eval_game(m, g->lhs, target).unite(eval_game(m, g->rhs, target));
    case GameTerm::Kind::Seq:
      return eval_game(m, g->lhs, eval_game(m, g->rhs, target));
    case GameTerm::Kind::Star: {
      // Union of the orbit of the set map, starting from the target itself
      // (the zero-fold iteration). The powerset is finite, so the orbit
      // revisits a set after at most 2^n steps.
      std::set<std::uint64_t> seen;
      Subset current = target;
      std::uint64_t acc = 0;
      while (seen.insert(current.bits()).second) {
        acc |= current.bits();
        current = eval_game(m, g->lhs, current);
      }
      return Subset(m.space(), acc);
    }
    case GameTerm::Kind::Dual:
      return eval_game(m, g->lhs, target.complement()).complement();
  }
  throw Error("eval_game: unreachable");
}

StochModel::StochModel(EffFn p, std::map<std::string, Subset> valuation)
    : p_(std::move(p)), valuation_(std::move(valuation)) {
  require_same_space(p_.dom(), p_.cod(), "stochastic model space");
  for (const auto& [atom, set] : valuation_)
    require_same_space(set.space(), p_.dom(), "valuation event");
}

const Subset& StochModel::value_of(const std::string& atom) const {
  const auto it = valuation_.find(atom);
  if (it == valuation_.end()) throw Error("unbound atom '" + atom + "'");
  return it->second;
}

Subset eval_formula(const StochModel& m, const FormulaPtr& phi) {
  switch (phi->kind) {
    case Formula::Kind::Top:
      return Subset::full(m.space());
    case Formula::Kind::Atom:
      return m.value_of(phi->atom);
    case Formula::Kind::And:
      return eval_formula(m, phi->lhs).intersect(eval_formula(m, phi->rhs));
    case Formula::Kind::Dia: {
      const Subset inner = eval_formula(m, phi->lhs);
      const ThresholdQuery q(inner, Rel::Greater, phi->threshold);
      std::uint64_t bits = 0;
      for (std::size_t s = 0; s < m.space()->size(); ++s)
        if (member(m.eff(), s, q)) bits |= 1ull << s;
      return Subset(m.space(), bits);
    }
  }
  throw Error("eval_formula: unreachable");
}

}  // namespace seff
