#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "convextest/interval.hpp"
#include "convextest/rational.hpp"

namespace convextest {

using Index = std::uint32_t;

// A point in R^d with exact rational coordinates.
struct Point {
  std::vector<Rational> x;

  int dim() const { return static_cast<int>(x.size()); }
  bool operator==(const Point& other) const { return x == other.x; }
};

// Immutable set of n distinct points in R^d, addressed by index 0..n-1.
// Caches a guaranteed double enclosure of every coordinate so geometric
// predicates can run a float filter before touching the rationals.
class PointSet {
 public:
  PointSet(int dim, std::vector<Point> points);

  int dim() const { return dim_; }
  Index size() const { return static_cast<Index>(points_.size()); }

  const Point& point(Index i) const { return points_[i]; }
  const Rational& coord(Index i, int j) const { return points_[i].x[j]; }
  Interval coord_interval(Index i, int j) const {
    const std::size_t at = static_cast<std::size_t>(i) * dim_ + j;
    return {lo_[at], hi_[at]};
  }
  // Midpoint of the cached enclosure; good enough for heuristics.
  double coord_double(Index i, int j) const {
    const std::size_t at = static_cast<std::size_t>(i) * dim_ + j;
    return mid_[at];
  }

  // New set holding points_[ids[0]], points_[ids[1]], ... in that order.
  PointSet subset(std::span<const Index> ids) const;

 private:
  int dim_;
  std::vector<Point> points_;
  std::vector<double> lo_, hi_, mid_;
};

}  // namespace convextest
