#include "seff/effectivity.hpp"

#include <algorithm>

namespace seff {

Filter::Filter(SpacePtr space, std::vector<Generator> generators)
    : space_(std::move(space)), gens_(std::move(generators)) {
  for (const auto& g : gens_) require_same_space(space_, g.space(), "filter generator");
}

EffFn::EffFn(SpacePtr dom, SpacePtr cod, std::vector<Filter> portfolio)
    : dom_(std::move(dom)), cod_(std::move(cod)), portfolio_(std::move(portfolio)) {
  if (portfolio_.size() != dom_->size())
    throw Error("effectivity function needs one filter per domain state");
  for (const auto& f : portfolio_) require_same_space(f.space(), cod_, "portfolio filter");
}

const Filter& EffFn::at(const std::string& state) const {
  return portfolio_.at(dom_->index_of(state));
}

bool filter_member(const Filter& f, const ThresholdQuery& q) {
  require_same_space(f.space(), q.event.space(), "member");
  for (const auto& g : f.generators()) {
    const auto [lo, hi] = linear_extrema(g, q.event);
    bool inside = false;
    switch (q.rel) {
      case Rel::Greater: inside = lo > q.bound; break;
      case Rel::Geq: inside = lo >= q.bound; break;
      case Rel::Less: inside = hi < q.bound; break;
      case Rel::Leq: inside = hi <= q.bound; break;
    }
    if (inside) return true;
  }
  return false;
}

bool member(const EffFn& p, std::size_t state_index, const ThresholdQuery& q) {
  if (state_index >= p.dom()->size()) throw Error("member: state index out of range");
  return filter_member(p.at(state_index), q);
}

bool member(const EffFn& p, const std::string& state, const ThresholdQuery& q) {
  return member(p, p.dom()->index_of(state), q);
}

bool Profile::interval_contains(std::size_t i, const Rational& q) const {
  const auto& e = entries.at(i);
  if (e.empty) return false;
  return rel == Rel::Greater ? q < e.critical : q <= e.critical;
}

Profile profile(const EffFn& p, const Subset& event, Rel rel) {
  require_same_space(p.cod(), event.space(), "profile");
  if (rel != Rel::Greater && rel != Rel::Geq)
    throw Error("profile: relation must be > or >=");
  Profile out{event, rel, {}};
  out.entries.reserve(p.dom()->size());
  for (const auto& filter : p.portfolio()) {
    ProfileEntry e;
    if (filter.is_empty()) {
      e.empty = true;
      e.critical = 0;
    } else {
      bool first = true;
      for (const auto& g : filter.generators()) {
        const Rational lo = linear_extrema(g, event).first;
        if (first || lo > e.critical) e.critical = lo;
        first = false;
      }
    }
    out.entries.push_back(std::move(e));
  }
  return out;
}

EffFn lift_kernel(const Kernel& k) {
  std::vector<Filter> portfolio;
  portfolio.reserve(k.dom()->size());
  for (std::size_t s = 0; s < k.dom()->size(); ++s)
    portfolio.emplace_back(k.cod(), std::vector<Generator>{Generator::points({k.row(s)})});
  return EffFn(k.dom(), k.cod(), std::move(portfolio));
}

namespace {

void require_family_spaces(const std::vector<Kernel>& ks) {
  for (const auto& k : ks) {
    require_same_space(k.dom(), ks.front().dom(), "kernel family");
    require_same_space(k.cod(), ks.front().cod(), "kernel family");
  }
}

}  // namespace

EffFn lift_family_exists(const std::vector<Kernel>& ks, SpacePtr dom, SpacePtr cod) {
  require_family_spaces(ks);
  if (!ks.empty()) {
    require_same_space(ks.front().dom(), dom, "lift_family_exists");
    require_same_space(ks.front().cod(), cod, "lift_family_exists");
  }
  std::vector<Filter> portfolio;
  portfolio.reserve(dom->size());
  for (std::size_t s = 0; s < dom->size(); ++s) {
    std::vector<Generator> gens;
    gens.reserve(ks.size());
    for (const auto& k : ks) gens.push_back(Generator::points({k.row(s)}));
    portfolio.emplace_back(cod, std::move(gens));
  }
  return EffFn(std::move(dom), std::move(cod), std::move(portfolio));
}

EffFn lift_family_exists(const std::vector<Kernel>& ks) {
  if (ks.empty()) throw Error("lift_family_exists without spaces needs a nonempty family");
  return lift_family_exists(ks, ks.front().dom(), ks.front().cod());
}

EffFn lift_family_forall(const std::vector<Kernel>& ks) {
  if (ks.empty()) throw Error("lift_family_forall needs a nonempty family");
  require_family_spaces(ks);
  const auto& dom = ks.front().dom();
  const auto& cod = ks.front().cod();
  std::vector<Filter> portfolio;
  portfolio.reserve(dom->size());
  for (std::size_t s = 0; s < dom->size(); ++s) {
    std::vector<SubProb> pts;
    pts.reserve(ks.size());
    for (const auto& k : ks) pts.push_back(k.row(s));
    portfolio.emplace_back(cod, std::vector<Generator>{Generator::points(std::move(pts))});
  }
  return EffFn(dom, cod, std::move(portfolio));
}

std::vector<Kernel> lift_convex_family(const std::vector<Kernel>& ks,
                                       unsigned denom_bound) {
  if (ks.empty()) throw Error("lift_convex_family needs a nonempty kernel list");
  if (denom_bound == 0) throw Error("lift_convex_family needs denom_bound >= 1");
  require_family_spaces(ks);
  const auto& dom = ks.front().dom();
  const auto& cod = ks.front().cod();

  // Lexicographic odometer over numerator tuples with sum <= denom_bound.
  const auto next_tuple = [&](std::vector<unsigned>& num) {
    std::size_t pos = num.size();
    while (pos > 0) {
      --pos;
      ++num[pos];
      unsigned total = 0;
      for (auto v : num) total += v;
      if (total <= denom_bound) return true;
      num[pos] = 0;
    }
    return false;
  };

  std::vector<Kernel> out;
  std::vector<unsigned> numerators(ks.size(), 0);
  do {
    std::vector<SubProb> rows;
    rows.reserve(dom->size());
    for (std::size_t s = 0; s < dom->size(); ++s) {
      std::vector<Rational> w(cod->size(), Rational(0));
      for (std::size_t j = 0; j < ks.size(); ++j) {
        if (numerators[j] == 0) continue;
        const Rational alpha(numerators[j], denom_bound);
        for (std::size_t v = 0; v < cod->size(); ++v)
          w[v] += alpha * ks[j].row(s).weight(v);
      }
      rows.emplace_back(cod, std::move(w));
    }
    out.emplace_back(dom, cod, std::move(rows));
  } while (next_tuple(numerators));
  return out;
}

EffFn lift_transition_system(
    const SpacePtr& space,
    const std::vector<std::pair<std::string, std::string>>& edges) {
  std::vector<std::uint64_t> succ(space->size(), 0);
  for (const auto& [from, to] : edges)
    succ[space->index_of(from)] |= 1ull << space->index_of(to);

  std::vector<Filter> portfolio;
  portfolio.reserve(space->size());
  for (std::size_t s = 0; s < space->size(); ++s) {
    std::vector<SubProb> pts{SubProb::zero(space)};
    for (std::size_t t = 0; t < space->size(); ++t)
      if ((succ[s] >> t) & 1u) pts.push_back(SubProb::unit(space, t));
    portfolio.emplace_back(space, std::vector<Generator>{Generator::hull(std::move(pts))});
  }
  return EffFn(space, space, std::move(portfolio));
}

EffFn lift_nlmp(SpacePtr dom, std::vector<Generator> kappa) {
  if (kappa.size() != dom->size()) throw Error("lift_nlmp needs one generator per state");
  const SpacePtr cod = kappa.front().space();
  std::vector<Filter> portfolio;
  portfolio.reserve(kappa.size());
  for (auto& g : kappa) {
    require_same_space(g.space(), cod, "lift_nlmp");
    portfolio.emplace_back(cod, std::vector<Generator>{std::move(g)});
  }
  return EffFn(std::move(dom), cod, std::move(portfolio));
}

std::optional<Kernel> detect_pointed(const EffFn& p) {
  std::vector<SubProb> rows;
  rows.reserve(p.dom()->size());
  for (const auto& filter : p.portfolio()) {
    if (filter.is_empty()) return std::nullopt;
    const SubProb* common = nullptr;
    for (const auto& g : filter.generators()) {
      for (const auto& pt : g.point_list()) {
        if (!common) common = &pt;
        else if (!(*common == pt)) return std::nullopt;
      }
    }
    rows.push_back(*common);
  }
  return Kernel(p.dom(), p.cod(), std::move(rows));
}

}  // namespace seff
