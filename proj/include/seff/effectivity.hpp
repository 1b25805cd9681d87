#pragma once

#include <optional>
#include <vector>

#include "seff/geometry.hpp"
#include "seff/kernels.hpp"

namespace seff {

// Finitely generated filter of measurable sets of distributions over `space`:
// the family of all measurable supersets of at least one generator. An empty
// generator list denotes the empty family.
class Filter {
 public:
  Filter(SpacePtr space, std::vector<Generator> generators);

  const SpacePtr& space() const { return space_; }
  const std::vector<Generator>& generators() const { return gens_; }
  bool is_empty() const { return gens_.empty(); }

 private:
  SpacePtr space_;
  std::vector<Generator> gens_;
};

// Stochastic effectivity function on finite spaces: a filter of distribution
// sets over the codomain per domain state.
class EffFn {
 public:
  EffFn(SpacePtr dom, SpacePtr cod, std::vector<Filter> portfolio);

  const SpacePtr& dom() const { return dom_; }
  const SpacePtr& cod() const { return cod_; }
  const Filter& at(std::size_t state_index) const { return portfolio_.at(state_index); }
  const Filter& at(const std::string& state) const;
  const std::vector<Filter>& portfolio() const { return portfolio_; }

 private:
  SpacePtr dom_;
  SpacePtr cod_;
  std::vector<Filter> portfolio_;
};

// True iff some generator of P(s) lies inside the query's threshold set,
// i.e. every point of the generator passes the query. Decided via extrema.
bool member(const EffFn& p, std::size_t state_index, const ThresholdQuery& q);
bool member(const EffFn& p, const std::string& state, const ThresholdQuery& q);

// Internal form working on a bare filter.
bool filter_member(const Filter& f, const ThresholdQuery& q);

struct ProfileEntry {
  bool empty = false;   // no generator at all: the section is empty
  Rational critical;    // max over generators of min over the generator
};

// The t-measurability section for one event: per state the critical value
// m_s with {q | beta(event, rel q) in P(s)} = [0, m_s) for ">" and [0, m_s]
// for ">=" (empty when flagged).
struct Profile {
  Subset event;
  Rel rel;  // Greater or Geq
  std::vector<ProfileEntry> entries;

  // Whether q lies in the interval described by entry `i`.
  bool interval_contains(std::size_t i, const Rational& q) const;
};

Profile profile(const EffFn& p, const Subset& event, Rel rel);

// Lift of a kernel: the principal ultrafilter at K(s) per state.
EffFn lift_kernel(const Kernel& k);

// Weak inverse: one singleton generator per kernel in the family.
EffFn lift_family_exists(const std::vector<Kernel>& ks, SpacePtr dom, SpacePtr cod);
EffFn lift_family_exists(const std::vector<Kernel>& ks);

// Strong inverse: one generator holding every kernel's row.
EffFn lift_family_forall(const std::vector<Kernel>& ks);

// Finite truncation of the rational convex combinations of the given kernels:
// all sum alpha_j * K_j with alpha_j = a_j / denom_bound, a_j >= 0 integers,
// sum a_j <= denom_bound. Enumerated in lexicographic order of the numerator
// tuples; always contains the zero weight vector.
std::vector<Kernel> lift_convex_family(const std::vector<Kernel>& ks,
                                       unsigned denom_bound);

// Transition-system lift: P(s) is generated by the hull of the zero vector
// and the unit vectors of the successors (the subprobability simplex over
// the successor set).
EffFn lift_transition_system(const SpacePtr& space,
                             const std::vector<std::pair<std::string, std::string>>& edges);

// NLMP-style lift: the principal filter of supersets of kappa(s).
EffFn lift_nlmp(SpacePtr dom, std::vector<Generator> kappa);

// Inverse of lift_kernel on its image: the kernel K with P = lift_kernel(K)
// iff every portfolio is generated by generators all denoting one common
// point; nullopt otherwise.
std::optional<Kernel> detect_pointed(const EffFn& p);

}  // namespace seff
