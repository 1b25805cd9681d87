#include "seff/finspace.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <sstream>

namespace seff {

FinSpace::FinSpace(std::vector<std::string> states) : states_(std::move(states)) {
  if (states_.empty()) throw Error("a finite space needs at least one state");
  std::set<std::string> seen;
  for (const auto& s : states_) {
    if (s.empty()) throw Error("state names must be nonempty");
    if (!seen.insert(s).second) throw Error("duplicate state name '" + s + "'");
  }
  if (states_.size() > 63) throw Error("state spaces beyond 63 states are unsupported");
}

std::size_t FinSpace::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < states_.size(); ++i)
    if (states_[i] == name) return i;
  throw Error("unknown state '" + name + "'");
}

bool FinSpace::has_state(const std::string& name) const {
  return std::find(states_.begin(), states_.end(), name) != states_.end();
}

SpacePtr make_space(std::vector<std::string> states) {
  return std::make_shared<const FinSpace>(std::move(states));
}

bool same_space(const SpacePtr& a, const SpacePtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

void require_same_space(const SpacePtr& a, const SpacePtr& b, const char* where) {
  if (!same_space(a, b)) throw Error(std::string(where) + ": space mismatch");
}

// ---- Subset ----------------------------------------------------------------

Subset::Subset(SpacePtr space, std::uint64_t bits) : space_(std::move(space)), bits_(bits) {
  if (!space_) throw Error("subset without a space");
  const std::uint64_t full = (space_->size() == 64) ? ~0ull : ((1ull << space_->size()) - 1);
  if (bits_ & ~full) throw Error("subset mask has bits outside the space");
}

Subset::Subset(SpacePtr space, const std::vector<std::string>& members)
    : space_(std::move(space)), bits_(0) {
  if (!space_) throw Error("subset without a space");
  for (const auto& m : members) bits_ |= 1ull << space_->index_of(m);
}

Subset Subset::full(SpacePtr space) {
  const std::uint64_t bits = (1ull << space->size()) - 1;
  return Subset(std::move(space), bits);
}

bool Subset::contains(const std::string& name) const {
  return contains(space_->index_of(name));
}

std::size_t Subset::count() const { return static_cast<std::size_t>(std::popcount(bits_)); }

std::vector<std::string> Subset::members() const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < space_->size(); ++i)
    if (contains(i)) out.push_back(space_->name(i));
  return out;
}

Subset Subset::complement() const {
  return Subset(space_, ~bits_ & ((1ull << space_->size()) - 1));
}

Subset Subset::unite(const Subset& other) const {
  require_same_space(space_, other.space_, "subset union");
  return Subset(space_, bits_ | other.bits_);
}

Subset Subset::intersect(const Subset& other) const {
  require_same_space(space_, other.space_, "subset intersection");
  return Subset(space_, bits_ & other.bits_);
}

bool Subset::subset_of(const Subset& other) const {
  require_same_space(space_, other.space_, "subset inclusion");
  return (bits_ & ~other.bits_) == 0;
}

bool Subset::operator==(const Subset& other) const {
  return same_space(space_, other.space_) && bits_ == other.bits_;
}

std::string Subset::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (std::size_t i = 0; i < space_->size(); ++i) {
    if (!contains(i)) continue;
    if (!first) os << ", ";
    os << space_->name(i);
    first = false;
  }
  os << '}';
  return os.str();
}

std::vector<Subset> all_subsets(const SpacePtr& space) {
  std::vector<Subset> out;
  const std::uint64_t n = 1ull << space->size();
  out.reserve(n);
  for (std::uint64_t mask = 0; mask < n; ++mask) out.emplace_back(space, mask);
  return out;
}

// ---- Partition -------------------------------------------------------------

namespace {

std::vector<Subset> sort_blocks(std::vector<Subset> blocks) {
  std::sort(blocks.begin(), blocks.end(), [](const Subset& a, const Subset& b) {
    return std::countr_zero(a.bits()) < std::countr_zero(b.bits());
  });
  return blocks;
}

}  // namespace

Partition::Partition(SpacePtr space, std::vector<Subset> blocks)
    : space_(std::move(space)), blocks_(sort_blocks(std::move(blocks))) {
  std::uint64_t seen = 0;
  for (const auto& b : blocks_) {
    require_same_space(space_, b.space(), "partition block");
    if (b.is_empty()) throw Error("partition blocks must be nonempty");
    if (seen & b.bits()) throw Error("partition blocks must be disjoint");
    seen |= b.bits();
  }
  if (seen != ((1ull << space_->size()) - 1))
    throw Error("partition blocks must cover the space");
  block_index_.assign(space_->size(), 0);
  for (std::size_t bi = 0; bi < blocks_.size(); ++bi)
    for (std::size_t i = 0; i < space_->size(); ++i)
      if (blocks_[bi].contains(i)) block_index_[i] = bi;
}

Partition::Partition(SpacePtr space, const std::vector<std::vector<std::string>>& blocks)
    : Partition(space, [&] {
        std::vector<Subset> subsets;
        subsets.reserve(blocks.size());
        for (const auto& names : blocks) subsets.emplace_back(space, names);
        return subsets;
      }()) {}

Partition Partition::discrete(const SpacePtr& space) {
  std::vector<Subset> blocks;
  for (std::size_t i = 0; i < space->size(); ++i) blocks.emplace_back(space, 1ull << i);
  return Partition(space, std::move(blocks));
}

Partition Partition::indiscrete(const SpacePtr& space) {
  return Partition(space, std::vector<Subset>{Subset::full(space)});
}

std::size_t Partition::block_of(std::size_t state_index) const {
  return block_index_.at(state_index);
}

bool Partition::operator==(const Partition& other) const {
  if (!same_space(space_, other.space_)) return false;
  if (blocks_.size() != other.blocks_.size()) return false;
  for (std::size_t i = 0; i < blocks_.size(); ++i)
    if (blocks_[i].bits() != other.blocks_[i].bits()) return false;
  return true;
}

SpacePtr Partition::factor_space() const {
  std::vector<std::string> names;
  names.reserve(blocks_.size());
  for (const auto& b : blocks_)
    names.push_back(space_->name(static_cast<std::size_t>(std::countr_zero(b.bits()))));
  return make_space(std::move(names));
}

std::string Partition::to_string() const {
  std::ostringstream os;
  for (std::size_t bi = 0; bi < blocks_.size(); ++bi) {
    if (bi) os << '|';
    bool first = true;
    for (std::size_t i = 0; i < space_->size(); ++i) {
      if (!blocks_[bi].contains(i)) continue;
      if (!first) os << ',';
      os << space_->name(i);
      first = false;
    }
  }
  return os.str();
}

// ---- MeasMap ---------------------------------------------------------------

MeasMap::MeasMap(SpacePtr dom, SpacePtr cod, std::vector<std::size_t> assignment)
    : dom_(std::move(dom)), cod_(std::move(cod)), map_(std::move(assignment)) {
  if (map_.size() != dom_->size()) throw Error("map must assign every domain state");
  for (auto t : map_)
    if (t >= cod_->size()) throw Error("map image outside the codomain");
}

MeasMap::MeasMap(SpacePtr dom, SpacePtr cod,
                 const std::vector<std::pair<std::string, std::string>>& assignment)
    : dom_(std::move(dom)), cod_(std::move(cod)) {
  map_.assign(dom_->size(), dom_->size());
  std::vector<bool> set(dom_->size(), false);
  for (const auto& [from, to] : assignment) {
    const auto i = dom_->index_of(from);
    if (set[i]) throw Error("map assigns state '" + from + "' twice");
    set[i] = true;
    map_[i] = cod_->index_of(to);
  }
  for (std::size_t i = 0; i < dom_->size(); ++i)
    if (!set[i]) throw Error("map misses state '" + dom_->name(i) + "'");
}

MeasMap MeasMap::identity(const SpacePtr& space) {
  std::vector<std::size_t> id(space->size());
  for (std::size_t i = 0; i < id.size(); ++i) id[i] = i;
  return MeasMap(space, space, std::move(id));
}

const std::string& MeasMap::apply_name(const std::string& s) const {
  return cod_->name(map_.at(dom_->index_of(s)));
}

bool MeasMap::is_surjective() const {
  std::vector<bool> hit(cod_->size(), false);
  for (auto t : map_) hit[t] = true;
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

bool MeasMap::is_bijective() const { return dom_->size() == cod_->size() && is_surjective(); }

MeasMap MeasMap::inverse() const {
  if (!is_bijective()) throw Error("inverse of a non-bijective map");
  std::vector<std::size_t> inv(cod_->size());
  for (std::size_t i = 0; i < map_.size(); ++i) inv[map_[i]] = i;
  return MeasMap(cod_, dom_, std::move(inv));
}

Subset MeasMap::preimage(const Subset& b) const {
  require_same_space(cod_, b.space(), "preimage");
  std::uint64_t bits = 0;
  for (std::size_t i = 0; i < dom_->size(); ++i)
    if (b.contains(map_[i])) bits |= 1ull << i;
  return Subset(dom_, bits);
}

Subset MeasMap::image(const Subset& a) const {
  require_same_space(dom_, a.space(), "image");
  std::uint64_t bits = 0;
  for (std::size_t i = 0; i < dom_->size(); ++i)
    if (a.contains(i)) bits |= 1ull << map_[i];
  return Subset(cod_, bits);
}

bool MeasMap::operator==(const MeasMap& other) const {
  return same_space(dom_, other.dom_) && same_space(cod_, other.cod_) && map_ == other.map_;
}

MeasMap compose(const MeasMap& g, const MeasMap& f) {
  require_same_space(f.cod(), g.dom(), "map composition");
  std::vector<std::size_t> m(f.dom()->size());
  for (std::size_t i = 0; i < m.size(); ++i) m[i] = g.apply(f.apply(i));
  return MeasMap(f.dom(), g.cod(), std::move(m));
}

MeasMap factor_map(const Partition& p) {
  std::vector<std::size_t> m(p.space()->size());
  for (std::size_t i = 0; i < m.size(); ++i) m[i] = p.block_of(i);
  return MeasMap(p.space(), p.factor_space(), std::move(m));
}

// ---- SubProb ---------------------------------------------------------------

SubProb::SubProb(SpacePtr space, std::vector<Rational> weights)
    : space_(std::move(space)), w_(std::move(weights)) {
  if (w_.size() != space_->size()) throw Error("weight vector length mismatch");
  Rational sum = 0;
  for (std::size_t i = 0; i < w_.size(); ++i) {
    if (w_[i] < 0)
      throw Error("negative weight at state '" + space_->name(i) + "'");
    sum += w_[i];
  }
  if (sum > 1)
    throw Error("weights sum to " + seff::to_string(sum) + " which exceeds 1");
}

SubProb SubProb::zero(SpacePtr space) {
  std::vector<Rational> w(space->size(), Rational(0));
  return SubProb(std::move(space), std::move(w));
}

SubProb SubProb::unit(SpacePtr space, std::size_t state_index) {
  std::vector<Rational> w(space->size(), Rational(0));
  w.at(state_index) = 1;
  return SubProb(std::move(space), std::move(w));
}

Rational SubProb::total_mass() const {
  Rational sum = 0;
  for (const auto& x : w_) sum += x;
  return sum;
}

bool SubProb::operator==(const SubProb& other) const {
  return same_space(space_, other.space_) && w_ == other.w_;
}

std::string SubProb::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < w_.size(); ++i) {
    if (i) os << ", ";
    os << seff::to_string(w_[i]);
  }
  os << ')';
  return os.str();
}

// ---- queries and operations -------------------------------------------------

const char* rel_symbol(Rel r) {
  switch (r) {
    case Rel::Less: return "<";
    case Rel::Leq: return "<=";
    case Rel::Greater: return ">";
    case Rel::Geq: return ">=";
  }
  return "?";
}

Rel parse_rel(const std::string& s) {
  if (s == "<") return Rel::Less;
  if (s == "<=") return Rel::Leq;
  if (s == ">") return Rel::Greater;
  if (s == ">=") return Rel::Geq;
  throw Error("unknown relation '" + s + "' (expected <, <=, >, >=)");
}

bool compare(const Rational& lhs, Rel rel, const Rational& rhs) {
  switch (rel) {
    case Rel::Less: return lhs < rhs;
    case Rel::Leq: return lhs <= rhs;
    case Rel::Greater: return lhs > rhs;
    case Rel::Geq: return lhs >= rhs;
  }
  return false;
}

ThresholdQuery::ThresholdQuery(Subset event_, Rel rel_, Rational bound_)
    : event(std::move(event_)), rel(rel_), bound(std::move(bound_)) {
  if (!in_unit_interval(bound))
    throw Error("threshold bound " + seff::to_string(bound) + " outside [0,1]");
}

Rational measure_of(const SubProb& mu, const Subset& a) {
  require_same_space(mu.space(), a.space(), "measure_of");
  Rational sum = 0;
  for (std::size_t i = 0; i < mu.space()->size(); ++i)
    if (a.contains(i)) sum += mu.weight(i);
  return sum;
}

bool query_holds(const ThresholdQuery& q, const SubProb& mu) {
  require_same_space(q.event.space(), mu.space(), "query_holds");
  return compare(measure_of(mu, q.event), q.rel, q.bound);
}

SubProb pushforward(const MeasMap& f, const SubProb& mu) {
  require_same_space(mu.space(), f.dom(), "pushforward");
  std::vector<Rational> w(f.cod()->size(), Rational(0));
  for (std::size_t i = 0; i < f.dom()->size(); ++i) w[f.apply(i)] += mu.weight(i);
  return SubProb(f.cod(), std::move(w));
}

Rational choquet_area(const std::vector<Rational>& f_vals, const SubProb& mu) {
  if (f_vals.size() != mu.space()->size())
    throw Error("choquet_area: value vector length mismatch");
  for (const auto& v : f_vals)
    if (v < 0) throw Error("choquet_area: negative function value");

  std::vector<Rational> values = f_vals;
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());

  Rational area = 0;
  Rational prev = 0;
  for (const auto& v : values) {
    if (v == 0) continue;
    // On (prev, v] the strict super-level set {f > t} equals {f > prev}.
    Rational mass = 0;
    for (std::size_t i = 0; i < f_vals.size(); ++i)
      if (f_vals[i] > prev) mass += mu.weight(i);
    area += (v - prev) * mass;
    prev = v;
  }
  return area;
}

std::vector<Subset> invariant_sets(const Partition& part) {
  const auto& blocks = part.blocks();
  if (blocks.size() > 20) throw Error("invariant_sets: too many blocks to materialize");
  std::vector<Subset> out;
  out.reserve(1ull << blocks.size());
  for (std::uint64_t mask = 0; mask < (1ull << blocks.size()); ++mask) {
    std::uint64_t bits = 0;
    for (std::size_t bi = 0; bi < blocks.size(); ++bi)
      if ((mask >> bi) & 1u) bits |= blocks[bi].bits();
    out.emplace_back(part.space(), bits);
  }
  return out;
}

Partition kernel_of_map(const MeasMap& f) {
  std::map<std::size_t, std::uint64_t> fibers;  // cod index -> dom mask
  for (std::size_t i = 0; i < f.dom()->size(); ++i) fibers[f.apply(i)] |= 1ull << i;
  std::vector<Subset> blocks;
  blocks.reserve(fibers.size());
  for (const auto& [_, bits] : fibers) blocks.emplace_back(f.dom(), bits);
  return Partition(f.dom(), std::move(blocks));
}

}  // namespace seff
