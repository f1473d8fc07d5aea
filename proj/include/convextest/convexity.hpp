#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "convextest/point_set.hpp"

namespace convextest {

// Convex combination expressing one point of the set through others:
// point(target) == sum coeff_i * point(id_i), coeff_i >= 0, sum coeff_i = 1.
// The support has at most d+1 entries (basic feasible solution).
struct HullCombination {
  std::vector<std::pair<Index, Rational>> support;
};

// Exact feasibility: is point `target` inside conv{candidates}? Solved as a
// phase-1 simplex over the d+1 equality constraints (coordinates plus the
// affine row); exact rational state, float-screened pricing, Bland's rule as
// the anti-cycling fallback. Returns the combination when feasible.
std::optional<HullCombination> point_in_hull(const PointSet& ps, Index target,
                                             std::span<const Index> candidates);

// A (d+2)-point refutation of convex position: `interior_id` lies in the
// convex hull of the other d+1 ids. Coefficients correspond to `ids` minus
// the interior point, sum to 1, and are all nonnegative (strictly positive
// under general position). Degenerate sets with n < d+2 yield all n ids.
struct NegativeWitness {
  std::vector<Index> ids;  // min(n, d+2) ids, ascending
  Index interior_id = 0;
  std::vector<std::pair<Index, Rational>> coefficients;
};

struct ConvexityResult {
  bool in_convex_position = false;
  std::optional<NegativeWitness> witness;
};

// Decides convex position exactly by running one hull-membership LP per
// point, scanning indices in ascending order, so the reported interior point
// is always the lowest-index one. O(n) LPs by design; certificates are the
// product, not just the bit.
ConvexityResult convex_position_test(const PointSet& ps);

// Exact re-check of a witness against the point set it was issued for:
// ids sorted/sized d+2, coefficients nonnegative, sum 1, combination equals
// the interior point.
bool verify_witness(const PointSet& ps, const NegativeWitness& w);

}  // namespace convextest
