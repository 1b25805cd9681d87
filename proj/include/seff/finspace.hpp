#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "seff/rational.hpp"

namespace seff {

// Finite measurable space. The sigma-algebra is always the full power set, so
// it is never materialized; subsets are bitmasks over the state order.
class FinSpace {
 public:
  explicit FinSpace(std::vector<std::string> states);

  std::size_t size() const { return states_.size(); }
  const std::vector<std::string>& states() const { return states_; }
  const std::string& name(std::size_t i) const { return states_.at(i); }
  std::size_t index_of(const std::string& name) const;
  bool has_state(const std::string& name) const;

  bool operator==(const FinSpace& other) const { return states_ == other.states_; }

 private:
  std::vector<std::string> states_;
};

using SpacePtr = std::shared_ptr<const FinSpace>;

SpacePtr make_space(std::vector<std::string> states);

// Structural identity of spaces; two independently loaded copies agree.
bool same_space(const SpacePtr& a, const SpacePtr& b);
void require_same_space(const SpacePtr& a, const SpacePtr& b, const char* where);

// Measurable subset, represented by a bitmask in state order.
class Subset {
 public:
  Subset(SpacePtr space, std::uint64_t bits);
  Subset(SpacePtr space, const std::vector<std::string>& members);

  static Subset empty(SpacePtr space) { return Subset(std::move(space), 0); }
  static Subset full(SpacePtr space);

  const SpacePtr& space() const { return space_; }
  std::uint64_t bits() const { return bits_; }
  bool contains(std::size_t i) const { return (bits_ >> i) & 1u; }
  bool contains(const std::string& name) const;
  std::size_t count() const;
  bool is_empty() const { return bits_ == 0; }
  std::vector<std::string> members() const;

  Subset complement() const;
  Subset unite(const Subset& other) const;
  Subset intersect(const Subset& other) const;
  bool subset_of(const Subset& other) const;
  bool operator==(const Subset& other) const;

  // Formats as "{a, b}" in state order.
  std::string to_string() const;

 private:
  SpacePtr space_;
  std::uint64_t bits_;
};

// All 2^n subsets in mask order (deterministic).
std::vector<Subset> all_subsets(const SpacePtr& space);

// Partition into disjoint nonempty blocks covering the space. Blocks are kept
// sorted by their smallest member index.
class Partition {
 public:
  Partition(SpacePtr space, std::vector<Subset> blocks);
  Partition(SpacePtr space, const std::vector<std::vector<std::string>>& blocks);

  static Partition discrete(const SpacePtr& space);
  static Partition indiscrete(const SpacePtr& space);

  const SpacePtr& space() const { return space_; }
  const std::vector<Subset>& blocks() const { return blocks_; }
  std::size_t block_of(std::size_t state_index) const;

  bool operator==(const Partition& other) const;

  // The quotient space; each block is named after its smallest member.
  SpacePtr factor_space() const;

  std::string to_string() const;  // "a,b|c" style

 private:
  SpacePtr space_;
  std::vector<Subset> blocks_;
  std::vector<std::size_t> block_index_;  // per state
};

// Total map between finite spaces; always measurable here.
class MeasMap {
 public:
  MeasMap(SpacePtr dom, SpacePtr cod, std::vector<std::size_t> assignment);
  MeasMap(SpacePtr dom, SpacePtr cod,
          const std::vector<std::pair<std::string, std::string>>& assignment);

  static MeasMap identity(const SpacePtr& space);

  const SpacePtr& dom() const { return dom_; }
  const SpacePtr& cod() const { return cod_; }
  std::size_t apply(std::size_t i) const { return map_.at(i); }
  const std::string& apply_name(const std::string& s) const;

  bool is_surjective() const;
  bool is_bijective() const;
  MeasMap inverse() const;  // requires bijectivity

  Subset preimage(const Subset& b) const;
  Subset image(const Subset& a) const;

  bool operator==(const MeasMap& other) const;

 private:
  SpacePtr dom_;
  SpacePtr cod_;
  std::vector<std::size_t> map_;
};

MeasMap compose(const MeasMap& g, const MeasMap& f);  // g after f

// Factor map onto the quotient space of a partition.
MeasMap factor_map(const Partition& p);

// Subprobability vector: weights >= 0 summing to at most 1.
class SubProb {
 public:
  SubProb(SpacePtr space, std::vector<Rational> weights);

  static SubProb zero(SpacePtr space);
  static SubProb unit(SpacePtr space, std::size_t state_index);

  const SpacePtr& space() const { return space_; }
  const std::vector<Rational>& weights() const { return w_; }
  const Rational& weight(std::size_t i) const { return w_.at(i); }
  Rational total_mass() const;

  bool operator==(const SubProb& other) const;

  std::string to_string() const;  // "(1/2, 1/4)"

 private:
  SpacePtr space_;
  std::vector<Rational> w_;
};

enum class Rel { Less, Leq, Greater, Geq };

const char* rel_symbol(Rel r);
Rel parse_rel(const std::string& s);
bool compare(const Rational& lhs, Rel rel, const Rational& rhs);

// Threshold query beta(event, rel bound): the distributions whose measure of
// `event` stands in `rel` to `bound`.
struct ThresholdQuery {
  Subset event;
  Rel rel;
  Rational bound;

  ThresholdQuery(Subset event, Rel rel, Rational bound);
};

Rational measure_of(const SubProb& mu, const Subset& a);
bool query_holds(const ThresholdQuery& q, const SubProb& mu);
SubProb pushforward(const MeasMap& f, const SubProb& mu);

// Area form of the integral of a nonnegative simple function: the finite sum
// over sorted distinct values of width times mass of the strict super-level
// set. Equals the direct weighted sum exactly.
Rational choquet_area(const std::vector<Rational>& f_vals, const SubProb& mu);

// All unions of blocks (the finite Boolean algebra of invariant sets). Grows
// as 2^blocks; indices enumerate block masks in ascending order.
std::vector<Subset> invariant_sets(const Partition& part);

// Partition of f's domain into nonempty fibers.
Partition kernel_of_map(const MeasMap& f);

}  // namespace seff
