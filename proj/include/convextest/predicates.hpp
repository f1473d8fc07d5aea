#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "convextest/point_set.hpp"

namespace convextest {

// Sign of the orientation determinant of d+1 points in R^d: the determinant
// of the d x d matrix whose rows are p_i - p_0 (i = 1..d). +1 / -1 / 0.
// For d <= 3 a float filter resolves almost every call; the exact rational
// determinant decides the rest (and all higher dimensions use it directly).
int orientation(const PointSet& ps, std::span<const Index> simplex);

// Convenience overload for free-standing points (always exact).
int orientation(std::span<const Point> simplex);

// Exact sign of det of a dense rational matrix (Gaussian elimination with
// exact pivoting). Exposed for the oracle-side verifiers.
int determinant_sign(std::vector<std::vector<Rational>> m);

// True iff every d+1 of the points are affinely independent (no d+1 on a
// common hyperplane). Enumerates all C(n, d+1) simplices; if that count
// exceeds `budget` the check refuses rather than silently truncating.
struct GeneralPositionReport {
  bool checked = false;     // false => budget exceeded, nothing asserted
  bool in_general_position = false;
  std::vector<Index> degenerate_simplex;  // witness when !in_general_position
};
GeneralPositionReport general_position_check(const PointSet& ps,
                                             std::uint64_t budget = 1000000000ull);

}  // namespace convextest
