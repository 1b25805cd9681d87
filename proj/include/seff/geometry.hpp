#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "seff/finspace.hpp"

namespace seff {

enum class GenKind { Points, Hull };

// Generator of a filter element: either the finite point set itself, or the
// closed convex hull of the listed points.
class Generator {
 public:
  Generator(GenKind kind, std::vector<SubProb> points);

  static Generator points(std::vector<SubProb> pts) {
    return Generator(GenKind::Points, std::move(pts));
  }
  static Generator hull(std::vector<SubProb> pts) {
    return Generator(GenKind::Hull, std::move(pts));
  }

  GenKind kind() const { return kind_; }
  const std::vector<SubProb>& point_list() const { return points_; }
  const SpacePtr& space() const { return points_.front().space(); }

  bool operator==(const Generator& other) const;

 private:
  GenKind kind_;
  std::vector<SubProb> points_;
};

// Exact convex-combination witness: coefficients lambda >= 0 with sum 1 and
// sum lambda_i * points_i = target, or nullopt if no such coefficients exist.
// Decided by exact rational phase-1 pivoting; the result is re-verified by
// substitution before being returned.
std::optional<std::vector<Rational>> convex_combination(
    const std::vector<SubProb>& points, const SubProb& target);

// Extrema of mu -> mu(A) over the generator. Linear functionals attain their
// extrema at listed points, so this is exact for both kinds.
std::pair<Rational, Rational> linear_extrema(const Generator& g, const Subset& a);

// Same for a general per-state weight vector mu -> sum_t w_t * mu({t}).
std::pair<Rational, Rational> weighted_extrema(const Generator& g,
                                               const std::vector<Rational>& weights);

bool point_in_generator(const SubProb& mu, const Generator& g);

// Containment of the denoted sets. Hull-in-Points holds only when the hull
// degenerates to a single point occurring in the list.
bool generator_subset(const Generator& h, const Generator& g);

// Image under the pushforward of f, kind preserved; exact because linear
// images of hulls are hulls of images.
Generator map_generator(const MeasMap& f, const Generator& g);

}  // namespace seff
