#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "seff/effectivity.hpp"

namespace seff {

// ---- formulas: top | atom | phi & psi | dia[q] phi -------------------------

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

struct Formula {
  enum class Kind { Top, Atom, And, Dia };
  Kind kind;
  std::string atom;    // Atom
  Rational threshold;  // Dia, in [0,1]
  FormulaPtr lhs, rhs;  // And: both; Dia: lhs only

  static FormulaPtr top();
  static FormulaPtr make_atom(std::string name);
  static FormulaPtr make_and(FormulaPtr l, FormulaPtr r);
  static FormulaPtr dia(Rational q, FormulaPtr inner);
};

bool formulas_equal(const FormulaPtr& a, const FormulaPtr& b);

// ---- game terms: prim | g|g | g;g | g* | dual g ----------------------------

struct GameTerm;
using GameTermPtr = std::shared_ptr<const GameTerm>;

struct GameTerm {
  enum class Kind { Prim, Union, Seq, Star, Dual };
  Kind kind;
  std::string prim;
  GameTermPtr lhs, rhs;  // Union/Seq: both; Star/Dual: lhs only

  static GameTermPtr make_prim(std::string name);
  static GameTermPtr make_union(GameTermPtr l, GameTermPtr r);
  static GameTermPtr make_seq(GameTermPtr l, GameTermPtr r);
  static GameTermPtr make_star(GameTermPtr g);
  static GameTermPtr make_dual(GameTermPtr g);
};

bool games_equal(const GameTermPtr& a, const GameTermPtr& b);

class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// Concrete syntax (whitespace insensitive, rational literals p/q only):
//   formula := conj                     game := union
//   conj    := unary ('&' unary)*       union := seq ('|' seq)*
//   unary   := 'dia' '[' rat ']' unary  seq   := pre (';' pre)*
//            | primary                  pre   := 'dual' pre | post
//   primary := 'top' | ident | '(...)'  post  := prim ('*')*
//                                       prim  := ident | '(...)'
FormulaPtr parse_formula(const std::string& text);
GameTermPtr parse_game(const std::string& text);

// Fixed-format printers; parse(pretty(x)) == x.
std::string pretty(const FormulaPtr& f);
std::string pretty(const GameTermPtr& g);

// Neighborhood model for classical game logic: per primitive game and state
// an antichain of subsets generating the upward-closed family N_g(s).
class NeighborhoodModel {
 public:
  NeighborhoodModel(SpacePtr space,
                    std::map<std::string, std::vector<std::vector<Subset>>> primitives);

  const SpacePtr& space() const { return space_; }
  const std::vector<std::vector<Subset>>& primitive(const std::string& name) const;
  const std::map<std::string, std::vector<std::vector<Subset>>>& primitives() const {
    return primitives_;
  }

 private:
  SpacePtr space_;
  // name -> per-state list of generator subsets
  std::map<std::string, std::vector<std::vector<Subset>>> primitives_;
};

// N-breve of the game term applied to the target set. Union and Seq follow
// the recursive clauses; Star unions the orbit of the set map (with the
// zero-fold term equal to the target itself); Dual is the determinacy
// complement A -> S minus N(S minus A).
Subset eval_game(const NeighborhoodModel& m, const GameTermPtr& g, const Subset& target);

// Stochastic model: an effectivity function on one space plus a valuation of
// atomic propositions.
class StochModel {
 public:
  StochModel(EffFn p, std::map<std::string, Subset> valuation);

  const SpacePtr& space() const { return p_.dom(); }
  const EffFn& eff() const { return p_; }
  const std::map<std::string, Subset>& valuation() const { return valuation_; }
  const Subset& value_of(const std::string& atom) const;

 private:
  EffFn p_;
  std::map<std::string, Subset> valuation_;
};

// Validity set; dia[q] phi holds where beta([[phi]], > q) is in the portfolio.
Subset eval_formula(const StochModel& m, const FormulaPtr& phi);

}  // namespace seff
