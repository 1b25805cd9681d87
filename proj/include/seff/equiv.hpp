#pragma once

#include <optional>
#include <string>

#include "seff/effectivity.hpp"

namespace seff {

// Pair of maps relating two effectivity functions: f on the domain side,
// g on the codomain side.
struct EffMorphism {
  MeasMap f;
  MeasMap g;
};

// Pair of partitions (state side, outcome side).
struct Congruence {
  Partition alpha;
  Partition beta;
};

// Direct image of a filter along g: generated by the images of the
// generators. Exact by the adjunction G inside (Sg)^-1[W] iff Sg[G] inside W.
Filter apply_vau(const MeasMap& g, const Filter& f);

// Equality of the generated families, decided by mutual domination:
// filter(G) is contained in filter(H) iff each G-generator contains some
// H-generator.
bool filters_equal(const Filter& f1, const Filter& f2);

// Morphism condition: Q(f(s)) equals the image of P(s) under g, per state.
bool is_morphism(const EffFn& p, const EffFn& q, const EffMorphism& m);

// Strong morphism. On finite power-set spaces a map is final iff surjective,
// and surjectivity of f also makes f x id_[0,1] final (product-measurable
// sets over a finite factor split into finitely many slices), so both
// finality hypotheses reduce to double surjectivity.
bool is_strong(const EffMorphism& m);

// A congruence holds iff states identified by alpha have portfolios with the
// same image along the beta factor map. Returns a violating state pair, or
// nullopt when the congruence holds.
std::optional<std::pair<std::string, std::string>> congruence_violation(
    const EffFn& p, const Congruence& c);
bool is_congruence(const EffFn& p, const Congruence& c);

// Factors P through the congruence; throws unless is_congruence(p, c).
EffFn quotient(const EffFn& p, const Congruence& c);

// Kernel pair of a strong morphism; throws unless the morphism is strong and
// actually a morphism. The result always passes is_congruence.
Congruence kernel_congruence(const EffFn& p, const EffFn& q, const EffMorphism& m);

struct Cospan {
  EffFn mediator;
  EffMorphism from_p;
  EffMorphism from_q;
};

// Builds the behavioral-equivalence co-span out of a logical-equivalence
// witness (congruences with an isomorphism between the quotients).
Cospan cospan_from_logical(const EffFn& p, const EffFn& q, const Congruence& cp,
                           const Congruence& cq, const EffMorphism& iso);

struct LogicalWitness {
  Congruence cp;
  Congruence cq;
  EffMorphism iso;  // between quotient(p, cp) and quotient(q, cq)
};

// Recovers congruences and a quotient isomorphism from a behavioral
// co-span with strong morphism legs: the congruences are the kernel pairs,
// and the isomorphism matches fibers with equal images.
LogicalWitness logical_from_behavioral(const EffFn& p, const EffFn& q,
                                       const EffFn& mediator, const EffMorphism& mp,
                                       const EffMorphism& mq);

enum class SearchStatus { Found, NoWitness, BoundExceeded };

struct SearchResult {
  SearchStatus status;
  std::optional<LogicalWitness> witness;
};

// Bounded search for a logical-equivalence witness. Deterministic order:
// partition pairs finest-first (more blocks first, then lexicographic
// restricted-growth strings), then bijections in lexicographic order with
// the identity first. Each congruence check and each bijection-pair check
// costs one unit of max_search; running out is reported distinctly from an
// exhausted search.
SearchResult logically_equivalent(const EffFn& p, const EffFn& q,
                                  std::uint64_t max_search);

// All partitions of the space, finest-first (used by the search; exposed for
// tests).
std::vector<Partition> all_partitions_finest_first(const SpacePtr& space);

}  // namespace seff
