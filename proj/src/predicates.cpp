#include "convextest/predicates.hpp"

#include <stdexcept>

#include "convextest/interval.hpp"

namespace convextest {

namespace {

int sign_of(const Rational& q) {
  if (q > 0) return 1;
  if (q < 0) return -1;
  return 0;
}

// Filtered 2x2 cross of (b - a) x (c - a).
int orient2_filtered(const PointSet& ps, Index a, Index b, Index c) {
  const Interval ax = ps.coord_interval(a, 0), ay = ps.coord_interval(a, 1);
  const Interval det = (ps.coord_interval(b, 0) - ax) * (ps.coord_interval(c, 1) - ay) -
                       (ps.coord_interval(b, 1) - ay) * (ps.coord_interval(c, 0) - ax);
  bool certain = false;
  const int s = interval_sign(det, certain);
  if (certain) return s;

  const Rational ux = ps.coord(b, 0) - ps.coord(a, 0);
  const Rational uy = ps.coord(b, 1) - ps.coord(a, 1);
  const Rational vx = ps.coord(c, 0) - ps.coord(a, 0);
  const Rational vy = ps.coord(c, 1) - ps.coord(a, 1);
  return sign_of(ux * vy - uy * vx);
}

int orient3_filtered(const PointSet& ps, Index a, Index b, Index c, Index d) {
  Interval m[3][3];
  for (int r = 0; r < 3; ++r) {
    const Index p = (r == 0) ? b : (r == 1) ? c : d;
    for (int j = 0; j < 3; ++j)
      m[r][j] = ps.coord_interval(p, j) - ps.coord_interval(a, j);
  }
  const Interval det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                       m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                       m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
  bool certain = false;
  const int s = interval_sign(det, certain);
  if (certain) return s;

  Rational e[3][3];
  for (int r = 0; r < 3; ++r) {
    const Index p = (r == 0) ? b : (r == 1) ? c : d;
    for (int j = 0; j < 3; ++j) e[r][j] = ps.coord(p, j) - ps.coord(a, j);
  }
  return sign_of(e[0][0] * (e[1][1] * e[2][2] - e[1][2] * e[2][1]) -
                 e[0][1] * (e[1][0] * e[2][2] - e[1][2] * e[2][0]) +
                 e[0][2] * (e[1][0] * e[2][1] - e[1][1] * e[2][0]));
}

}  // namespace

int determinant_sign(std::vector<std::vector<Rational>> m) {
  const std::size_t n = m.size();
  int sign = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      sign = -sign;
    }
    if (m[col][col] < 0) sign = -sign;
    for (std::size_t row = col + 1; row < n; ++row) {
      if (m[row][col] == 0) continue;
      const Rational factor = m[row][col] / m[col][col];
      m[row][col] = 0;
      for (std::size_t j = col + 1; j < n; ++j)
        m[row][j] -= factor * m[col][j];
    }
  }
  return sign;
}

int orientation(const PointSet& ps, std::span<const Index> simplex) {
  const int d = ps.dim();
  if (static_cast<int>(simplex.size()) != d + 1)
    throw std::invalid_argument("orientation needs exactly d+1 points");
  if (d == 2) return orient2_filtered(ps, simplex[0], simplex[1], simplex[2]);
  if (d == 3)
    return orient3_filtered(ps, simplex[0], simplex[1], simplex[2], simplex[3]);

  std::vector<std::vector<Rational>> m(d, std::vector<Rational>(d));
  for (int r = 0; r < d; ++r)
    for (int j = 0; j < d; ++j)
      m[r][j] = ps.coord(simplex[r + 1], j) - ps.coord(simplex[0], j);
  return determinant_sign(std::move(m));
}

int orientation(std::span<const Point> simplex) {
  if (simplex.empty()) throw std::invalid_argument("empty simplex");
  const int d = simplex[0].dim();
  if (static_cast<int>(simplex.size()) != d + 1)
    throw std::invalid_argument("orientation needs exactly d+1 points");
  std::vector<std::vector<Rational>> m(d, std::vector<Rational>(d));
  for (int r = 0; r < d; ++r)
    for (int j = 0; j < d; ++j) m[r][j] = simplex[r + 1].x[j] - simplex[0].x[j];
  return determinant_sign(std::move(m));
}

GeneralPositionReport general_position_check(const PointSet& ps,
                                             std::uint64_t budget) {
  GeneralPositionReport report;
  const Index n = ps.size();
  const int d = ps.dim();
  if (n < static_cast<Index>(d + 1)) {
    // Fewer than d+1 points cannot be affinely dependent as a full simplex.
    report.checked = true;
    report.in_general_position = true;
    return report;
  }

  BigInt count(1);
  for (int i = 0; i < d + 1; ++i) count = count * (n - i) / (i + 1);
  if (count > BigInt(budget)) return report;  // checked = false

  std::vector<Index> c(d + 1);
  for (int i = 0; i <= d; ++i) c[i] = static_cast<Index>(i);
  while (true) {
    if (orientation(ps, c) == 0) {
      report.checked = true;
      report.in_general_position = false;
      report.degenerate_simplex = c;
      return report;
    }
    // Next (d+1)-combination of {0..n-1} in lexicographic order.
    int i = d;
    while (i >= 0 && c[i] == n - static_cast<Index>(d + 1 - i)) --i;
    if (i < 0) break;
    ++c[i];
    for (int j = i + 1; j <= d; ++j) c[j] = c[j - 1] + 1;
  }
  report.checked = true;
  report.in_general_position = true;
  return report;
}

}  // namespace convextest
