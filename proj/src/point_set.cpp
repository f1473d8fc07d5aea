#include "convextest/point_set.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace convextest {

PointSet::PointSet(int dim, std::vector<Point> points)
    : dim_(dim), points_(std::move(points)) {
  if (dim_ < 1) throw std::invalid_argument("dimension must be >= 1");
  if (points_.empty()) throw std::invalid_argument("point set must be nonempty");
  for (const Point& p : points_)
    if (p.dim() != dim_)
      throw std::invalid_argument("point dimension mismatch");

  const std::size_t n = points_.size();
  lo_.resize(n * dim_);
  hi_.resize(n * dim_);
  mid_.resize(n * dim_);
  for (std::size_t i = 0; i < n; ++i)
    for (int j = 0; j < dim_; ++j) {
      const std::size_t at = i * dim_ + j;
      rational_to_interval(points_[i].x[j], lo_[at], hi_[at]);
      mid_[at] = 0.5 * (lo_[at] + hi_[at]);
    }

  // Duplicate detection: sort ids lexicographically (double prefilter,
  // exact tie-break) and compare neighbors.
  std::vector<Index> order(n);
  std::iota(order.begin(), order.end(), Index{0});
  std::sort(order.begin(), order.end(), [&](Index a, Index b) {
    for (int j = 0; j < dim_; ++j) {
      const std::size_t aj = static_cast<std::size_t>(a) * dim_ + j;
      const std::size_t bj = static_cast<std::size_t>(b) * dim_ + j;
      if (hi_[aj] < lo_[bj]) return true;
      if (hi_[bj] < lo_[aj]) return false;
      const Rational &qa = points_[a].x[j], &qb = points_[b].x[j];
      if (qa != qb) return qa < qb;
    }
    return false;
  });
  for (std::size_t i = 1; i < n; ++i)
    if (points_[order[i - 1]] == points_[order[i]])
      throw std::invalid_argument("duplicate point at indices " +
                                  std::to_string(order[i - 1]) + " and " +
                                  std::to_string(order[i]));
}

PointSet PointSet::subset(std::span<const Index> ids) const {
  std::vector<Point> pts;
  pts.reserve(ids.size());
  for (Index id : ids) pts.push_back(points_[id]);
  return PointSet(dim_, std::move(pts));
}

}  // namespace convextest
