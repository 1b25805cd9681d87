#include "seff/geometry.hpp"

#include <algorithm>

namespace seff {

Generator::Generator(GenKind kind, std::vector<SubProb> points)
    : kind_(kind), points_(std::move(points)) {
  if (points_.empty()) throw Error("generator needs at least one point");
  for (const auto& p : points_)
    require_same_space(points_.front().space(), p.space(), "generator points");
}

bool Generator::operator==(const Generator& other) const {
  if (kind_ != other.kind_ || points_.size() != other.points_.size()) return false;
  for (std::size_t i = 0; i < points_.size(); ++i)
    if (!(points_[i] == other.points_[i])) return false;
  return true;
}

namespace {

// Exact phase-1 pivoting for A x = b, x >= 0 where every entry of b is
// nonnegative. Starts from an all-artificial basis and drives the sum of
// artificials to zero; Bland's rule prevents cycling, and artificial columns
// are retired for good once they leave the basis. Returns the structural
// solution or nullopt when the optimum stays positive.
std::optional<std::vector<Rational>> solve_feasibility(
    std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a.front().size() : 0;

  // Tableau columns: structural 0..cols-1, artificial cols..cols+rows-1.
  std::vector<std::vector<Rational>> t(rows, std::vector<Rational>(cols + rows, Rational(0)));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) t[i][j] = a[i][j];
    t[i][cols + i] = 1;
  }
  std::vector<Rational> rhs = b;
  std::vector<std::size_t> basis(rows);
  for (std::size_t i = 0; i < rows; ++i) basis[i] = cols + i;

  // Reduced costs for minimizing the artificial sum: obj[j] = sum_i t[i][j].
  std::vector<Rational> obj(cols, Rational(0));
  Rational obj_value = 0;
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) obj[j] += t[i][j];
    obj_value += rhs[i];
  }

  while (true) {
    // Bland: smallest structural column with positive reduced cost.
    std::size_t enter = cols;
    for (std::size_t j = 0; j < cols; ++j) {
      if (obj[j] > 0) {
        enter = j;
        break;
      }
    }
    if (enter == cols) break;

    // Ratio test; ties resolved by the smallest basis id (Bland).
    std::size_t leave = rows;
    Rational best;
    for (std::size_t i = 0; i < rows; ++i) {
      if (t[i][enter] <= 0) continue;
      Rational ratio = rhs[i] / t[i][enter];
      if (leave == rows || ratio < best ||
          (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == rows) break;  // unbounded cannot happen for phase 1

    // Pivot on (leave, enter).
    const Rational pivot = t[leave][enter];
    for (auto& x : t[leave]) x /= pivot;
    rhs[leave] /= pivot;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == leave || t[i][enter] == 0) continue;
      const Rational factor = t[i][enter];
      for (std::size_t j = 0; j < cols + rows; ++j) t[i][j] -= factor * t[leave][j];
      rhs[i] -= factor * rhs[leave];
    }
    const Rational ofactor = obj[enter];
    for (std::size_t j = 0; j < cols; ++j) obj[j] -= ofactor * t[leave][j];
    obj_value -= ofactor * rhs[leave];

    // Retire the leaving artificial column.
    if (basis[leave] >= cols) {
      const std::size_t art = basis[leave];
      for (std::size_t i = 0; i < rows; ++i) t[i][art] = 0;
    }
    basis[leave] = enter;
  }

  if (obj_value != 0) return std::nullopt;
  std::vector<Rational> x(cols, Rational(0));
  for (std::size_t i = 0; i < rows; ++i)
    if (basis[i] < cols) x[basis[i]] = rhs[i];
  return x;
}

Rational evaluate(const SubProb& p, const std::vector<Rational>& weights) {
  Rational sum = 0;
  for (std::size_t i = 0; i < weights.size(); ++i) sum += weights[i] * p.weight(i);
  return sum;
}

std::vector<Rational> indicator_weights(const Subset& a) {
  std::vector<Rational> w(a.space()->size(), Rational(0));
  for (std::size_t i = 0; i < w.size(); ++i)
    if (a.contains(i)) w[i] = 1;
  return w;
}

}  // namespace

std::optional<std::vector<Rational>> convex_combination(
    const std::vector<SubProb>& points, const SubProb& target) {
  if (points.empty()) return std::nullopt;
  for (const auto& p : points)
    require_same_space(p.space(), target.space(), "convex_combination");
  const std::size_t n = target.space()->size();
  const std::size_t k = points.size();

  std::vector<std::vector<Rational>> a(n + 1, std::vector<Rational>(k, Rational(0)));
  std::vector<Rational> b(n + 1, Rational(0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k; ++j) a[i][j] = points[j].weight(i);
    b[i] = target.weight(i);
  }
  for (std::size_t j = 0; j < k; ++j) a[n][j] = 1;
  b[n] = 1;

  auto solution = solve_feasibility(std::move(a), std::move(b));
  if (!solution) return std::nullopt;

  // Re-verify the witness by substitution before trusting it.
  Rational sum = 0;
  for (const auto& lam : *solution) {
    if (lam < 0) throw Error("internal: negative convex coefficient");
    sum += lam;
  }
  if (sum != 1) throw Error("internal: convex coefficients do not sum to 1");
  for (std::size_t i = 0; i < n; ++i) {
    Rational coord = 0;
    for (std::size_t j = 0; j < k; ++j) coord += (*solution)[j] * points[j].weight(i);
    if (coord != target.weight(i)) throw Error("internal: convex witness fails re-substitution");
  }
  return solution;
}

std::pair<Rational, Rational> weighted_extrema(const Generator& g,
                                               const std::vector<Rational>& weights) {
  if (weights.size() != g.space()->size())
    throw Error("weighted_extrema: weight vector length mismatch");
  Rational lo = evaluate(g.point_list().front(), weights);
  Rational hi = lo;
  for (std::size_t i = 1; i < g.point_list().size(); ++i) {
    Rational v = evaluate(g.point_list()[i], weights);
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  return {lo, hi};
}

std::pair<Rational, Rational> linear_extrema(const Generator& g, const Subset& a) {
  require_same_space(g.space(), a.space(), "linear_extrema");
  return weighted_extrema(g, indicator_weights(a));
}

bool point_in_generator(const SubProb& mu, const Generator& g) {
  require_same_space(mu.space(), g.space(), "point_in_generator");
  if (g.kind() == GenKind::Points) {
    return std::any_of(g.point_list().begin(), g.point_list().end(),
                       [&](const SubProb& p) { return p == mu; });
  }
  return convex_combination(g.point_list(), mu).has_value();
}

bool generator_subset(const Generator& h, const Generator& g) {
  require_same_space(h.space(), g.space(), "generator_subset");
  const auto& hp = h.point_list();
  if (h.kind() == GenKind::Points || g.kind() == GenKind::Hull) {
    // Points-in-anything and hull-in-hull both reduce to listed points of h
    // lying in g (a hull is convex, so vertices inside imply the hull is).
    return std::all_of(hp.begin(), hp.end(),
                       [&](const SubProb& p) { return point_in_generator(p, g); });
  }
  // Hull inside a finite point set: only a degenerate single-point hull fits.
  const bool degenerate = std::all_of(hp.begin(), hp.end(),
                                      [&](const SubProb& p) { return p == hp.front(); });
  return degenerate && point_in_generator(hp.front(), g);
}

Generator map_generator(const MeasMap& f, const Generator& g) {
  require_same_space(g.space(), f.dom(), "map_generator");
  std::vector<SubProb> mapped;
  mapped.reserve(g.point_list().size());
  for (const auto& p : g.point_list()) mapped.push_back(pushforward(f, p));
  return Generator(g.kind(), std::move(mapped));
}

}  // namespace seff
