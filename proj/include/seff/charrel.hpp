#pragma once

#include <optional>
#include <string>
#include <vector>

#include "seff/effectivity.hpp"

namespace seff {

// Down-set of thresholds in [0,1]: the empty set, [0, c), or [0, c].
// [0, 0) is normalized to the empty set on construction.
class DownSet {
 public:
  static DownSet empty_set();
  static DownSet up_to(Rational bound, bool closed);

  bool is_empty() const { return empty_; }
  const Rational& bound() const { return bound_; }  // meaningful when nonempty
  bool closed() const { return closed_; }

  bool contains(const Rational& r) const;
  // Contains r shifted by an infinitesimal of the given sign (-1, 0, +1).
  bool contains_sym(const Rational& r, int eps) const;

  bool operator==(const DownSet& other) const;
  std::string to_string() const;

 private:
  DownSet() = default;
  bool empty_ = true;
  Rational bound_;
  bool closed_ = false;
};

// Characteristic relation R over a finite space: one threshold down-set per
// event (2^n sections, indexed by event bitmask).
class CharRel {
 public:
  CharRel(SpacePtr space, std::vector<DownSet> sections);

  const SpacePtr& space() const { return space_; }
  const DownSet& section(const Subset& event) const;
  const DownSet& section(std::uint64_t mask) const { return sections_.at(mask); }
  const std::vector<DownSet>& sections() const { return sections_; }

 private:
  SpacePtr space_;
  std::vector<DownSet> sections_;
};

// The canonical relation of a measure: sections [0, mu(B)] closed.
CharRel canonical_charrel(const SubProb& mu);

struct RuleViolation {
  std::string rule;     // short identifier, e.g. "event-monotone"
  std::string witness;  // human-readable witness
};

// Checks the deduction rules. Down-closure in the threshold holds by
// representation, and the decreasing-chain rule is automatic on finite
// spaces (chains stabilize), so neither can report a violation; the
// remaining rules are discharged at the section bounds with symbolic
// just-below/just-above side flags, which is complete because every rule
// predicate is monotone in each threshold away from those bounds.
std::vector<RuleViolation> check_rules(const CharRel& r);

struct ExtractResult {
  bool valid = false;
  std::optional<SubProb> measure;  // present iff valid
  std::vector<Rational> bounds;    // sup per event mask, always present
  std::string detail;              // witness when invalid
};

// mu_R(B) := sup of the section at B (0 for the empty section); valid iff
// B -> mu_R(B) is additive with mu_R(empty) = 0 and total mass <= 1.
ExtractResult extract_measure(const CharRel& r);

// Q satisfies R iff <q, A> in R exactly when beta(A, >= q) is in Q, for all
// events and thresholds; with finitely generated Q this reduces to the
// section at A matching the closed profile interval [0, m(A)] (empty filter:
// empty section).
bool satisfies(const Filter& q, const CharRel& r);

enum class ImplementsReading {
  // mu(A) >= q  iff  beta(A, >= q) in Q. Default; makes satisfies/implements
  // coincide on canonical relations.
  AtLeast,
  // mu(A) >= q  iff  beta(A, > q) in Q, taken literally; unsatisfiable at
  // q = mu(A), kept for comparison.
  Strict,
};

bool implements(const Filter& q, const SubProb& mu,
                ImplementsReading reading = ImplementsReading::AtLeast);

}  // namespace seff
