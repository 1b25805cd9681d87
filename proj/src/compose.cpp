#include "seff/compose.hpp"

#include <algorithm>

namespace seff {

std::vector<Rational> averaging_threshold(const EffFn& q, const Subset& event) {
  // {r | t in Q^(E, r)} is the interval [0, m_t) by the ">" profile, so its
  // Lebesgue measure is the critical value itself. This is the finite-space
  // closed form of the averaging integral; no quadrature.
  const Profile prof = profile(q, event, Rel::Greater);
  std::vector<Rational> out;
  out.reserve(prof.entries.size());
  for (const auto& e : prof.entries) out.push_back(e.empty ? Rational(0) : e.critical);
  return out;
}

bool WeightedThreshold::holds(const SubProb& nu) const {
  require_same_space(nu.space(), space, "weighted threshold");
  Rational sum = 0;
  for (std::size_t t = 0; t < weights.size(); ++t) sum += nu.weight(t) * weights[t];
  return sum > bound;
}

WeightedThreshold g_set(const EffFn& q, const Subset& event, const Rational& bound) {
  require_same_space(q.cod(), event.space(), "g_set");
  if (!in_unit_interval(bound)) throw Error("g_set: threshold outside [0,1]");
  return WeightedThreshold{q.dom(), averaging_threshold(q, event), bound};
}

namespace {

// member extended to weighted linear functionals; plumbing local to this
// module.
bool filter_member_weighted(const Filter& f, const WeightedThreshold& w) {
  for (const auto& g : f.generators())
    if (weighted_extrema(g, w.weights).first > w.bound) return true;
  return false;
}

}  // namespace

Subset convolve(const EffFn& p, const EffFn& q, const Subset& event,
                const Rational& bound) {
  require_same_space(p.cod(), q.dom(), "convolve: P.cod must equal Q.dom");
  const WeightedThreshold predicate = g_set(q, event, bound);
  std::uint64_t bits = 0;
  for (std::size_t s = 0; s < p.dom()->size(); ++s)
    if (filter_member_weighted(p.at(s), predicate)) bits |= 1ull << s;
  return Subset(p.dom(), bits);
}

bool check_conv_ok(const Kernel& k, const Kernel& l) {
  require_same_space(k.cod(), l.dom(), "check_conv_ok");
  const EffFn pk = lift_kernel(k);
  const EffFn pl = lift_kernel(l);
  const Kernel composed = kleisli(k, l);

  for (const auto& event : all_subsets(l.cod())) {
    std::vector<Rational> values;
    values.reserve(k.dom()->size());
    for (std::size_t s = 0; s < k.dom()->size(); ++s)
      values.push_back(measure_of(composed.row(s), event));
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());

    std::vector<Rational> thresholds{Rational(0), Rational(1)};
    for (std::size_t i = 0; i < values.size(); ++i) {
      thresholds.push_back(values[i]);
      if (i + 1 < values.size()) thresholds.push_back((values[i] + values[i + 1]) / 2);
    }
    std::sort(thresholds.begin(), thresholds.end());
    thresholds.erase(std::unique(thresholds.begin(), thresholds.end()), thresholds.end());

    for (const auto& q : thresholds) {
      if (q < 0 || q > 1) continue;
      std::uint64_t direct = 0;
      for (std::size_t s = 0; s < k.dom()->size(); ++s)
        if (measure_of(composed.row(s), event) > q) direct |= 1ull << s;
      if (convolve(pk, pl, event, q).bits() != direct) return false;
    }
  }
  return true;
}

}  // namespace seff
