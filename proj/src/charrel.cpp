#include "seff/charrel.hpp"

#include <set>
#include <sstream>

namespace seff {

DownSet DownSet::empty_set() { return DownSet(); }

DownSet DownSet::up_to(Rational bound, bool closed) {
  if (!in_unit_interval(bound))
    throw Error("down-set bound " + seff::to_string(bound) + " outside [0,1]");
  if (bound == 0 && !closed) return DownSet();  // [0,0) is empty
  DownSet d;
  d.empty_ = false;
  d.bound_ = std::move(bound);
  d.closed_ = closed;
  return d;
}

bool DownSet::contains(const Rational& r) const { return contains_sym(r, 0); }

bool DownSet::contains_sym(const Rational& r, int eps) const {
  if (empty_) return false;
  if (r < bound_) return true;
  if (r > bound_) return false;
  // r == bound: the closed set keeps the boundary and anything just below.
  return closed_ ? eps <= 0 : eps < 0;
}

bool DownSet::operator==(const DownSet& other) const {
  if (empty_ != other.empty_) return false;
  if (empty_) return true;
  return bound_ == other.bound_ && closed_ == other.closed_;
}

std::string DownSet::to_string() const {
  if (empty_) return "empty";
  return std::string("[0, ") + seff::to_string(bound_) + (closed_ ? "]" : ")");
}

CharRel::CharRel(SpacePtr space, std::vector<DownSet> sections)
    : space_(std::move(space)), sections_(std::move(sections)) {
  if (sections_.size() != (1ull << space_->size()))
    throw Error("characteristic relation needs one section per event");
}

const DownSet& CharRel::section(const Subset& event) const {
  require_same_space(space_, event.space(), "charrel section");
  return sections_.at(event.bits());
}

CharRel canonical_charrel(const SubProb& mu) {
  const auto space = mu.space();
  std::vector<DownSet> sections;
  sections.reserve(1ull << space->size());
  for (const auto& event : all_subsets(space))
    sections.push_back(DownSet::up_to(measure_of(mu, event), true));
  return CharRel(space, std::move(sections));
}

namespace {

// Symbolic threshold c + eps*delta for an infinitesimal delta.
struct Sym {
  Rational value;
  int eps;  // -1, 0, +1
};

std::string sym_str(const Sym& s) {
  std::string out = to_string(s.value);
  if (s.eps > 0) out += "+d";
  if (s.eps < 0) out += "-d";
  return out;
}

// Smallest threshold outside the down-set (within [0,1] it always exists for
// the sections we admit, except for the full interval [0,1]).
std::optional<Sym> least_excluded(const DownSet& d) {
  if (d.is_empty()) return Sym{Rational(0), 0};
  if (d.bound() == 1 && d.closed()) return std::nullopt;
  return d.closed() ? Sym{d.bound(), +1} : Sym{d.bound(), 0};
}

// Largest threshold inside the down-set, if any.
std::optional<Sym> greatest_included(const DownSet& d) {
  if (d.is_empty()) return std::nullopt;
  return d.closed() ? Sym{d.bound(), 0} : Sym{d.bound(), -1};
}

Sym sym_add(const Sym& a, const Sym& b) {
  int eps = a.eps + b.eps;
  if (eps > 1) eps = 1;
  if (eps < -1) eps = -1;
  return Sym{a.value + b.value, eps};
}

bool sym_le_one(const Sym& s) {
  return s.value < 1 || (s.value == 1 && s.eps <= 0);
}

bool sym_gt_one(const Sym& s) { return !sym_le_one(s); }

bool mem(const DownSet& d, const Sym& s) { return d.contains_sym(s.value, s.eps); }

// Largest sum r + s achievable with r inside d1, s inside d2, capped at 1.
std::optional<Sym> max_sum_capped(const DownSet& d1, const DownSet& d2) {
  const auto r = greatest_included(d1);
  const auto s = greatest_included(d2);
  if (!r || !s) return std::nullopt;
  Sym sum = sym_add(*r, *s);
  if (sym_le_one(sum)) return sum;
  // Clip to the cap: achievable because the summands can move freely
  // downward inside their down-sets.
  if (sum.value > 1) return Sym{Rational(1), 0};
  return Sym{Rational(1), -1};  // value == 1 with eps > 0, i.e. one side open
}

}  // namespace

std::vector<RuleViolation> check_rules(const CharRel& r) {
  std::vector<RuleViolation> raw;
  const auto space = r.space();
  const auto events = all_subsets(space);
  const std::uint64_t full = (1ull << space->size()) - 1;
  auto& out = raw;

  // Monotonicity in the event: A inside B forces the section inclusion.
  // Witness: a threshold in the difference of the down-sets.
  for (const auto& a : events) {
    for (const auto& b : events) {
      if (!a.subset_of(b) || a.bits() == b.bits()) continue;
      const DownSet& da = r.section(a);
      const DownSet& db = r.section(b);
      if (da.is_empty()) continue;
      const auto wit = greatest_included(da);
      if (!mem(db, *wit)) {
        out.push_back({"event-monotone",
                       "<" + sym_str(*wit) + ", " + a.to_string() + "> in R but <" +
                           sym_str(*wit) + ", " + b.to_string() + "> not in R"});
      }
    }
  }

  // Subadditivity: r outside R_A and s outside R_B with r+s <= 1 keeps r+s
  // outside R_{A u B}. The least excluded corner decides: any violating pair
  // dominates it and down-sets are monotone.
  for (const auto& a : events) {
    for (const auto& b : events) {
      const auto ra = least_excluded(r.section(a));
      const auto rb = least_excluded(r.section(b));
      if (!ra || !rb) continue;
      const Sym sum = sym_add(*ra, *rb);
      if (!sym_le_one(sum)) continue;
      const Subset ab = a.unite(b);
      if (mem(r.section(ab), sum)) {
        out.push_back({"union-bound",
                       "<" + sym_str(*ra) + ", " + a.to_string() + "> and <" + sym_str(*rb) +
                           ", " + b.to_string() + "> outside R, yet <" + sym_str(sum) + ", " +
                           ab.to_string() + "> in R"});
      }
    }
  }

  // Additivity from below: r in R_{A n B}, s in R_{A \ B}, r+s <= 1 forces
  // r+s in R_A. The greatest achievable sum decides.
  for (const auto& a : events) {
    for (const auto& b : events) {
      const Subset inter = a.intersect(b);
      const Subset diff = a.intersect(b.complement());
      const auto sum = max_sum_capped(r.section(inter), r.section(diff));
      if (!sum) continue;
      if (!mem(r.section(a), *sum)) {
        out.push_back({"split-additivity",
                       "sections at " + inter.to_string() + " and " + diff.to_string() +
                           " reach " + sym_str(*sum) + " which is outside the section at " +
                           a.to_string()});
      }
    }
  }

  // Complement exclusion: r in R_A and r+s > 1 forbids s in R_{S \ A}.
  for (const auto& a : events) {
    const auto ra = greatest_included(r.section(a));
    const auto rc = greatest_included(r.section(Subset(space, full & ~a.bits())));
    if (!ra || !rc) continue;
    if (sym_gt_one(sym_add(*ra, *rc))) {
      out.push_back({"complement-exclusion",
                     "<" + sym_str(*ra) + ", " + a.to_string() + "> and <" + sym_str(*rc) +
                         ", " + a.complement().to_string() + "> are both in R but sum above 1"});
    }
  }

  // The empty event only admits threshold 0.
  {
    const DownSet& de = r.section(Subset::empty(space));
    const bool ok = de.is_empty() || (de.bound() == 0 && de.closed());
    if (!ok) {
      out.push_back({"empty-event",
                     "section at {} is " + de.to_string() + " but only 0 is admissible"});
    }
  }

  // Down-closure in the threshold holds by representation, and decreasing
  // chains of events stabilize on a finite space, so their rule cannot fail.

  // Symmetric event pairs produce identical witnesses; report each once.
  std::vector<RuleViolation> unique;
  std::set<std::string> seen;
  for (auto& v : raw)
    if (seen.insert(v.rule + "|" + v.witness).second) unique.push_back(std::move(v));
  return unique;
}

ExtractResult extract_measure(const CharRel& r) {
  ExtractResult res;
  const auto space = r.space();
  const auto events = all_subsets(space);
  res.bounds.reserve(events.size());
  for (const auto& e : events) {
    const DownSet& d = r.section(e);
    res.bounds.push_back(d.is_empty() ? Rational(0) : d.bound());
  }

  if (res.bounds[0] != 0) {
    res.detail = "sup at the empty event is " + to_string(res.bounds[0]) + ", expected 0/1";
    return res;
  }
  for (const auto& a : events) {
    for (const auto& b : events) {
      if (a.bits() >= b.bits() || (a.bits() & b.bits())) continue;
      const Rational sum = res.bounds[a.bits()] + res.bounds[b.bits()];
      if (res.bounds[a.bits() | b.bits()] != sum) {
        res.detail = "not additive at disjoint " + a.to_string() + " and " + b.to_string() +
                     ": sup(" + a.unite(b).to_string() + ") = " +
                     to_string(res.bounds[a.bits() | b.bits()]) + " but parts sum to " +
                     to_string(sum);
        return res;
      }
    }
  }
  const Rational total = res.bounds.back();
  if (total > 1) {
    res.detail = "total mass " + to_string(total) + " exceeds 1";
    return res;
  }

  std::vector<Rational> weights;
  weights.reserve(space->size());
  for (std::size_t i = 0; i < space->size(); ++i)
    weights.push_back(res.bounds[1ull << i]);
  res.valid = true;
  res.measure = SubProb(space, std::move(weights));
  return res;
}

bool satisfies(const Filter& q, const CharRel& r) {
  require_same_space(q.space(), r.space(), "satisfies");
  if (q.is_empty()) {
    for (const auto& d : r.sections())
      if (!d.is_empty()) return false;
    return true;
  }
  // Nonempty filter: {q | beta(A, >= q) in Q} is the closed interval up to
  // the ">=" critical value, so the sections must match it exactly.
  for (const auto& event : all_subsets(r.space())) {
    Rational m;
    bool first = true;
    for (const auto& g : q.generators()) {
      const Rational lo = linear_extrema(g, event).first;
      if (first || lo > m) m = lo;
      first = false;
    }
    if (!(r.section(event) == DownSet::up_to(m, true))) return false;
  }
  return true;
}

bool implements(const Filter& q, const SubProb& mu, ImplementsReading reading) {
  require_same_space(q.space(), mu.space(), "implements");
  for (const auto& event : all_subsets(mu.space())) {
    const Rational target = measure_of(mu, event);  // {q | mu(A) >= q} = [0, target]
    if (q.is_empty()) return false;                 // 0 is always on the left side
    Rational m;
    bool first = true;
    for (const auto& g : q.generators()) {
      const Rational lo = linear_extrema(g, event).first;
      if (first || lo > m) m = lo;
      first = false;
    }
    if (reading == ImplementsReading::AtLeast) {
      // Right side {q | beta(A, >= q) in Q} = [0, m].
      if (m != target) return false;
    } else {
      // Literal reading: right side is the half-open [0, m), which can never
      // equal the closed [0, target].
      (void)m;
      return false;
    }
  }
  return true;
}

}  // namespace seff
