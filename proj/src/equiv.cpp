#include "seff/equiv.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace seff {

Filter apply_vau(const MeasMap& g, const Filter& f) {
  require_same_space(f.space(), g.dom(), "apply_vau");
  std::vector<Generator> gens;
  gens.reserve(f.generators().size());
  for (const auto& gen : f.generators()) gens.push_back(map_generator(g, gen));
  return Filter(g.cod(), std::move(gens));
}

namespace {

// filter(gens1) contained in filter(gens2): every generator of gens1 must
// contain some generator of gens2.
bool filter_dominated(const Filter& f1, const Filter& f2) {
  for (const auto& g : f1.generators()) {
    bool covered = false;
    for (const auto& h : f2.generators()) {
      if (generator_subset(h, g)) {
        covered = true;
        break;
      }
    }
    if (!covered) return false;
  }
  return true;
}

}  // namespace

bool filters_equal(const Filter& f1, const Filter& f2) {
  require_same_space(f1.space(), f2.space(), "filters_equal");
  return filter_dominated(f1, f2) && filter_dominated(f2, f1);
}

bool is_morphism(const EffFn& p, const EffFn& q, const EffMorphism& m) {
  require_same_space(m.f.dom(), p.dom(), "morphism: f domain");
  require_same_space(m.f.cod(), q.dom(), "morphism: f codomain");
  require_same_space(m.g.dom(), p.cod(), "morphism: g domain");
  require_same_space(m.g.cod(), q.cod(), "morphism: g codomain");
  for (std::size_t s = 0; s < p.dom()->size(); ++s)
    if (!filters_equal(q.at(m.f.apply(s)), apply_vau(m.g, p.at(s)))) return false;
  return true;
}

bool is_strong(const EffMorphism& m) {
  return m.f.is_surjective() && m.g.is_surjective();
}

std::optional<std::pair<std::string, std::string>> congruence_violation(
    const EffFn& p, const Congruence& c) {
  require_same_space(c.alpha.space(), p.dom(), "congruence alpha");
  require_same_space(c.beta.space(), p.cod(), "congruence beta");
  const MeasMap fb = factor_map(c.beta);
  for (const auto& block : c.alpha.blocks()) {
    std::optional<std::size_t> first;
    std::optional<Filter> reference;
    for (std::size_t s = 0; s < p.dom()->size(); ++s) {
      if (!block.contains(s)) continue;
      Filter pushed = apply_vau(fb, p.at(s));
      if (!reference) {
        first = s;
        reference = std::move(pushed);
      } else if (!filters_equal(*reference, pushed)) {
        return std::make_pair(p.dom()->name(*first), p.dom()->name(s));
      }
    }
  }
  return std::nullopt;
}

bool is_congruence(const EffFn& p, const Congruence& c) {
  return !congruence_violation(p, c).has_value();
}

EffFn quotient(const EffFn& p, const Congruence& c) {
  if (const auto witness = congruence_violation(p, c)) {
    throw Error("not a congruence: states '" + witness->first + "' and '" +
                witness->second + "' push to different portfolios");
  }
  const MeasMap fb = factor_map(c.beta);
  const SpacePtr dom2 = c.alpha.factor_space();
  const SpacePtr cod2 = c.beta.factor_space();
  std::vector<Filter> portfolio;
  portfolio.reserve(c.alpha.blocks().size());
  for (const auto& block : c.alpha.blocks()) {
    const auto rep = static_cast<std::size_t>(std::countr_zero(block.bits()));
    portfolio.push_back(apply_vau(fb, p.at(rep)));
  }
  return EffFn(dom2, cod2, std::move(portfolio));
}

Congruence kernel_congruence(const EffFn& p, const EffFn& q, const EffMorphism& m) {
  if (!is_strong(m)) throw Error("kernel_congruence: morphism is not strong");
  if (!is_morphism(p, q, m)) throw Error("kernel_congruence: not a morphism");
  return Congruence{kernel_of_map(m.f), kernel_of_map(m.g)};
}

namespace {

void require_iso(const EffFn& qp, const EffFn& qq, const EffMorphism& iso) {
  require_same_space(iso.f.dom(), qp.dom(), "iso: f domain");
  require_same_space(iso.f.cod(), qq.dom(), "iso: f codomain");
  require_same_space(iso.g.dom(), qp.cod(), "iso: g domain");
  require_same_space(iso.g.cod(), qq.cod(), "iso: g codomain");
  if (!iso.f.is_bijective() || !iso.g.is_bijective())
    throw Error("invalid iso: both maps must be bijections");
  if (!is_morphism(qp, qq, iso))
    throw Error("invalid iso: not a morphism between the quotients");
  const EffMorphism back{iso.f.inverse(), iso.g.inverse()};
  if (!is_morphism(qq, qp, back))
    throw Error("invalid iso: inverse is not a morphism");
}

}  // namespace

Cospan cospan_from_logical(const EffFn& p, const EffFn& q, const Congruence& cp,
                           const Congruence& cq, const EffMorphism& iso) {
  EffFn qp = quotient(p, cp);
  EffFn qq = quotient(q, cq);
  require_iso(qp, qq, iso);
  EffMorphism from_p{compose(iso.f, factor_map(cp.alpha)),
                     compose(iso.g, factor_map(cp.beta))};
  EffMorphism from_q{factor_map(cq.alpha), factor_map(cq.beta)};
  return Cospan{std::move(qq), std::move(from_p), std::move(from_q)};
}

namespace {

// Matches fibers through the mediator: the block of s in Kern(f) goes to the
// block of any u with k(u) = f(s); surjectivity provides u, and fibers make
// the choice irrelevant.
MeasMap match_fibers(const MeasMap& f, const MeasMap& k) {
  const Partition pf = kernel_of_map(f);
  const Partition pk = kernel_of_map(k);
  std::vector<std::size_t> assignment;
  assignment.reserve(pf.blocks().size());
  for (const auto& block : pf.blocks()) {
    const auto rep = static_cast<std::size_t>(std::countr_zero(block.bits()));
    const std::size_t target = f.apply(rep);
    std::optional<std::size_t> u;
    for (std::size_t i = 0; i < k.dom()->size(); ++i) {
      if (k.apply(i) == target) {
        u = i;
        break;
      }
    }
    if (!u) throw Error("match_fibers: map is not surjective onto the mediator");
    assignment.push_back(pk.block_of(*u));
  }
  return MeasMap(pf.factor_space(), pk.factor_space(), std::move(assignment));
}

}  // namespace

LogicalWitness logical_from_behavioral(const EffFn& p, const EffFn& q,
                                       const EffFn& mediator, const EffMorphism& mp,
                                       const EffMorphism& mq) {
  if (!is_strong(mp) || !is_strong(mq))
    throw Error("logical_from_behavioral: both legs must be strong (surjective)");
  if (!is_morphism(p, mediator, mp) || !is_morphism(q, mediator, mq))
    throw Error("logical_from_behavioral: both legs must be morphisms");
  Congruence cp{kernel_of_map(mp.f), kernel_of_map(mp.g)};
  Congruence cq{kernel_of_map(mq.f), kernel_of_map(mq.g)};
  EffMorphism iso{match_fibers(mp.f, mq.f), match_fibers(mp.g, mq.g)};
  return LogicalWitness{std::move(cp), std::move(cq), std::move(iso)};
}

std::vector<Partition> all_partitions_finest_first(const SpacePtr& space) {
  const std::size_t n = space->size();
  std::vector<std::vector<std::size_t>> rgs_list;
  std::vector<std::size_t> rgs(n, 0);
  // Lexicographic enumeration of restricted growth strings.
  const auto emit = [&](auto&& self, std::size_t i, std::size_t max_used) -> void {
    if (i == n) {
      rgs_list.push_back(rgs);
      return;
    }
    for (std::size_t v = 0; v <= max_used + 1 && v < n; ++v) {
      rgs[i] = v;
      self(self, i + 1, std::max(max_used, v));
    }
  };
  if (n == 1) {
    rgs_list.push_back(std::vector<std::size_t>{0});
  } else {
    rgs[0] = 0;
    emit(emit, 1, 0);
  }

  std::stable_sort(rgs_list.begin(), rgs_list.end(),
                   [](const auto& a, const auto& b) {
                     const auto blocks = [](const auto& r) {
                       return *std::max_element(r.begin(), r.end()) + 1;
                     };
                     return blocks(a) > blocks(b);
                   });

  std::vector<Partition> out;
  out.reserve(rgs_list.size());
  for (const auto& labels : rgs_list) {
    const std::size_t block_count = *std::max_element(labels.begin(), labels.end()) + 1;
    std::vector<std::uint64_t> masks(block_count, 0);
    for (std::size_t i = 0; i < n; ++i) masks[labels[i]] |= 1ull << i;
    std::vector<Subset> blocks;
    blocks.reserve(block_count);
    for (auto m : masks) blocks.emplace_back(space, m);
    out.emplace_back(space, std::move(blocks));
  }
  return out;
}

namespace {

struct CongruenceCandidate {
  Congruence congruence;
  EffFn quotiented;
};

std::optional<std::vector<CongruenceCandidate>> collect_congruences(
    const EffFn& p, std::int64_t& budget) {
  std::vector<CongruenceCandidate> out;
  for (const auto& alpha : all_partitions_finest_first(p.dom())) {
    for (const auto& beta : all_partitions_finest_first(p.cod())) {
      if (--budget < 0) return std::nullopt;
      Congruence c{alpha, beta};
      if (is_congruence(p, c)) out.push_back({c, quotient(p, c)});
    }
  }
  return out;
}

std::vector<MeasMap> all_bijections(const SpacePtr& from, const SpacePtr& to) {
  std::vector<MeasMap> out;
  if (from->size() != to->size()) return out;
  std::vector<std::size_t> perm(from->size());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    out.emplace_back(from, to, perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace

SearchResult logically_equivalent(const EffFn& p, const EffFn& q,
                                  std::uint64_t max_search) {
  std::int64_t budget = static_cast<std::int64_t>(max_search);
  const auto cps = collect_congruences(p, budget);
  if (!cps) return {SearchStatus::BoundExceeded, std::nullopt};
  const auto cqs = collect_congruences(q, budget);
  if (!cqs) return {SearchStatus::BoundExceeded, std::nullopt};

  for (const auto& cp : *cps) {
    for (const auto& cq : *cqs) {
      if (cp.quotiented.dom()->size() != cq.quotiented.dom()->size()) continue;
      if (cp.quotiented.cod()->size() != cq.quotiented.cod()->size()) continue;
      for (const auto& gamma : all_bijections(cp.quotiented.dom(), cq.quotiented.dom())) {
        for (const auto& delta : all_bijections(cp.quotiented.cod(), cq.quotiented.cod())) {
          if (--budget < 0) return {SearchStatus::BoundExceeded, std::nullopt};
          const EffMorphism iso{gamma, delta};
          if (!is_morphism(cp.quotiented, cq.quotiented, iso)) continue;
          const EffMorphism back{gamma.inverse(), delta.inverse()};
          if (!is_morphism(cq.quotiented, cp.quotiented, back)) continue;
          return {SearchStatus::Found,
                  LogicalWitness{cp.congruence, cq.congruence, iso}};
        }
      }
    }
  }
  return {SearchStatus::NoWitness, std::nullopt};
}

}  // namespace seff
