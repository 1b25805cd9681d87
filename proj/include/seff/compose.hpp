#pragma once

#include "seff/effectivity.hpp"

namespace seff {

// m_t(E): the Lebesgue measure of {r in [0,1] | t in Q^(E, r)}. The ">"
// profile makes that set the interval [0, m_t), so the value is just the
// critical value (0 for an empty portfolio). One entry per Q.dom state.
std::vector<Rational> averaging_threshold(const EffFn& q, const Subset& event);

// The linear predicate nu -> [sum_t nu({t}) * weight_t > bound] describing
// G_Q(E, q); weights come from averaging_threshold.
struct WeightedThreshold {
  SpacePtr space;
  std::vector<Rational> weights;
  Rational bound;

  bool holds(const SubProb& nu) const;
};

WeightedThreshold g_set(const EffFn& q, const Subset& event, const Rational& bound);

// Convolution (P^ * Q^)(E, q): the domain states s for which G_Q(E, q) is in
// the portfolio of P(s), i.e. some generator stays strictly above q under the
// averaged weights.
Subset convolve(const EffFn& p, const EffFn& q, const Subset& event,
                const Rational& bound);

// Exact check that lifting is compatible with convolution: for every event E
// over L's codomain and every breakpoint-adjacent q (the values (K*L)(s)(E),
// midpoints of consecutive sorted values, 0 and 1), the convolution of the
// lifted kernels equals {s | (K*L)(s)(E) > q}.
bool check_conv_ok(const Kernel& k, const Kernel& l);

}  // namespace seff
