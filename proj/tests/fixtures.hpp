#pragma once

// Constructive fixtures for morphism/congruence/equivalence tests: strong
// morphisms are built so the defining equation holds by construction, with
// per-fiber variation that still pushes to the same image.

#include "gen.hpp"
#include "seff/equiv.hpp"

namespace seff::testgen {

// Splits nu({y}) across the g-fiber of y with exact random proportions, so
// the lift pushes forward to exactly nu.
inline SubProb lift_point(Rng& rng, const MeasMap& g, const SubProb& nu,
                          unsigned split_denom = 4) {
  std::vector<Rational> w(g.dom()->size(), Rational(0));
  for (std::size_t y = 0; y < g.cod()->size(); ++y) {
    if (nu.weight(y) == 0) continue;
    std::vector<std::size_t> fiber;
    for (std::size_t t = 0; t < g.dom()->size(); ++t)
      if (g.apply(t) == y) fiber.push_back(t);
    // Random composition of split_denom into |fiber| parts.
    std::vector<unsigned> parts(fiber.size(), 0);
    for (unsigned u = 0; u < split_denom; ++u) ++parts[rng.index(fiber.size())];
    for (std::size_t i = 0; i < fiber.size(); ++i)
      w[fiber[i]] = nu.weight(y) * Rational(parts[i], split_denom);
  }
  return SubProb(g.dom(), std::move(w));
}

inline Generator lift_generator(Rng& rng, const MeasMap& g, const Generator& gen) {
  std::vector<SubProb> pts;
  pts.reserve(gen.point_list().size());
  for (const auto& nu : gen.point_list()) pts.push_back(lift_point(rng, g, nu));
  return Generator(gen.kind(), std::move(pts));
}

struct MorphismFixture {
  EffFn p;
  EffFn mediator;
  EffMorphism leg;
};

// Random mediator M on (X, Y) plus surjections f, g; P is assembled by
// lifting each mediator generator along g, fiber by fiber, so (f, g): P -> M
// holds by construction and both maps are onto.
inline MorphismFixture strong_morphism_fixture(Rng& rng, const SpacePtr& s,
                                               const SpacePtr& t, const SpacePtr& x,
                                               const SpacePtr& y, unsigned denom_bound = 6,
                                               std::size_t max_generators = 2,
                                               std::size_t max_points = 2) {
  const MeasMap f = rng.surjection(s, x);
  const MeasMap g = rng.surjection(t, y);
  const EffFn mediator = rng.eff_fn(x, y, denom_bound, max_generators, max_points);

  std::vector<Filter> portfolio;
  portfolio.reserve(s->size());
  for (std::size_t si = 0; si < s->size(); ++si) {
    const Filter& target = mediator.at(f.apply(si));
    std::vector<Generator> gens;
    gens.reserve(target.generators().size());
    for (const auto& gen : target.generators()) gens.push_back(lift_generator(rng, g, gen));
    portfolio.emplace_back(t, std::move(gens));
  }
  return MorphismFixture{EffFn(s, t, std::move(portfolio)), mediator,
                         EffMorphism{f, g}};
}

struct KernelMorphismFixture {
  Kernel k;
  Kernel l;
  MeasMap f;
  MeasMap g;
};

// L is drawn first; K splits each row of L(f(s)) across the g-fibers, making
// (f, g): K -> L a kernel morphism by construction.
inline KernelMorphismFixture kernel_morphism_fixture(Rng& rng, const SpacePtr& s,
                                                     const SpacePtr& t, const SpacePtr& x,
                                                     const SpacePtr& y,
                                                     unsigned denom_bound = 6) {
  const MeasMap f = rng.surjection(s, x);
  const MeasMap g = rng.surjection(t, y);
  const Kernel l = rng.kernel(x, y, denom_bound);
  std::vector<SubProb> rows;
  rows.reserve(s->size());
  for (std::size_t si = 0; si < s->size(); ++si)
    rows.push_back(lift_point(rng, g, l.row(f.apply(si))));
  return KernelMorphismFixture{Kernel(s, t, std::move(rows)), l, f, g};
}

// Renames every state; the result is isomorphic to the input by the renaming
// maps.
struct RenamedCopy {
  EffFn q;
  MeasMap on_dom;  // original dom -> renamed dom
  MeasMap on_cod;
};

inline RenamedCopy renamed_copy(const EffFn& p, const std::string& prefix) {
  std::vector<std::string> dom_names, cod_names;
  for (const auto& n : p.dom()->states()) dom_names.push_back(prefix + n);
  for (const auto& n : p.cod()->states()) cod_names.push_back(prefix + n);
  const SpacePtr dom2 = make_space(dom_names);
  const SpacePtr cod2 = make_space(cod_names);

  std::vector<std::size_t> id_dom(p.dom()->size()), id_cod(p.cod()->size());
  for (std::size_t i = 0; i < id_dom.size(); ++i) id_dom[i] = i;
  for (std::size_t i = 0; i < id_cod.size(); ++i) id_cod[i] = i;
  const MeasMap on_dom(p.dom(), dom2, id_dom);
  const MeasMap on_cod(p.cod(), cod2, id_cod);

  std::vector<Filter> portfolio;
  portfolio.reserve(p.dom()->size());
  for (std::size_t s = 0; s < p.dom()->size(); ++s)
    portfolio.push_back(apply_vau(on_cod, p.at(s)));
  return RenamedCopy{EffFn(dom2, cod2, std::move(portfolio)), on_dom, on_cod};
}

}  // namespace seff::testgen
