#include "seff/kernels.hpp"

namespace seff {

Kernel::Kernel(SpacePtr dom, SpacePtr cod, std::vector<SubProb> rows)
    : dom_(std::move(dom)), cod_(std::move(cod)), rows_(std::move(rows)) {
  if (rows_.size() != dom_->size()) throw Error("kernel needs one row per domain state");
  for (const auto& r : rows_) require_same_space(r.space(), cod_, "kernel row");
}

Kernel Kernel::identity(const SpacePtr& space) {
  std::vector<SubProb> rows;
  rows.reserve(space->size());
  for (std::size_t i = 0; i < space->size(); ++i) rows.push_back(SubProb::unit(space, i));
  return Kernel(space, space, std::move(rows));
}

Kernel Kernel::zero(SpacePtr dom, SpacePtr cod) {
  std::vector<SubProb> rows(dom->size(), SubProb::zero(cod));
  return Kernel(std::move(dom), std::move(cod), std::move(rows));
}

bool Kernel::operator==(const Kernel& other) const {
  if (!same_space(dom_, other.dom_) || !same_space(cod_, other.cod_)) return false;
  for (std::size_t i = 0; i < rows_.size(); ++i)
    if (!(rows_[i] == other.rows_[i])) return false;
  return true;
}

Kernel kleisli(const Kernel& k, const Kernel& l) {
  require_same_space(k.cod(), l.dom(), "kleisli");
  std::vector<SubProb> rows;
  rows.reserve(k.dom()->size());
  for (std::size_t s = 0; s < k.dom()->size(); ++s) {
    std::vector<Rational> w(l.cod()->size(), Rational(0));
    for (std::size_t t = 0; t < k.cod()->size(); ++t) {
      const Rational& weight = k.row(s).weight(t);
      if (weight == 0) continue;
      for (std::size_t v = 0; v < l.cod()->size(); ++v)
        w[v] += weight * l.row(t).weight(v);
    }
    rows.emplace_back(l.cod(), std::move(w));
  }
  return Kernel(k.dom(), l.cod(), std::move(rows));
}

bool is_kernel_morphism(const MeasMap& f, const MeasMap& g, const Kernel& k,
                        const Kernel& l) {
  require_same_space(f.dom(), k.dom(), "kernel morphism: f domain");
  require_same_space(f.cod(), l.dom(), "kernel morphism: f codomain");
  require_same_space(g.dom(), k.cod(), "kernel morphism: g domain");
  require_same_space(g.cod(), l.cod(), "kernel morphism: g codomain");
  for (std::size_t s = 0; s < k.dom()->size(); ++s)
    if (!(l.row(f.apply(s)) == pushforward(g, k.row(s)))) return false;
  return true;
}

}  // namespace seff
