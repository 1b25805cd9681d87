#pragma once

#include <vector>

#include "seff/finspace.hpp"

namespace seff {

// Sub-Markov kernel: one subprobability row over the codomain per domain
// state. Dense; desk-scale spaces make sparsity pointless.
class Kernel {
 public:
  Kernel(SpacePtr dom, SpacePtr cod, std::vector<SubProb> rows);

  static Kernel identity(const SpacePtr& space);
  static Kernel zero(SpacePtr dom, SpacePtr cod);

  const SpacePtr& dom() const { return dom_; }
  const SpacePtr& cod() const { return cod_; }
  const SubProb& row(std::size_t i) const { return rows_.at(i); }
  const std::vector<SubProb>& rows() const { return rows_; }

  bool operator==(const Kernel& other) const;

 private:
  SpacePtr dom_;
  SpacePtr cod_;
  std::vector<SubProb> rows_;
};

// Kleisli product (K*L)(s)(V) = sum_t L(t)(V) * K(s)({t}); a matrix product
// in the finite case.
Kernel kleisli(const Kernel& k, const Kernel& l);

// Morphism of stochastic relations: L(f(s)) = pushforward(g, K(s)) for all s,
// checked by exact vector equality.
bool is_kernel_morphism(const MeasMap& f, const MeasMap& g, const Kernel& k,
                        const Kernel& l);

}  // namespace seff
