#include "convextest/generators.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "convextest/convexity.hpp"
#include "convextest/interval.hpp"
#include "convextest/params.hpp"
#include "convextest/predicates.hpp"

namespace convextest {

namespace {

// Exact test-at-generation threshold: at or below this size the claimed
// property is certified by the exact tester, above it the construction
// proof carries the tag.
constexpr std::uint64_t kCertifyLimit = 512;

void certify_convex(const PointSet& ps) {
  if (!convex_position_test(ps).in_convex_position)
    throw std::logic_error("generator produced a non-convex instance");
}

// True iff every (d+1)-subset through `cand` stays affinely independent:
// no collinear triple for d = 2, no coplanar quadruple for d = 3. Interval
// screen first, exact rationals on the close calls.
bool keeps_general_position(const std::vector<Point>& pts, const Point& cand,
                            int d) {
  const std::size_t n = pts.size();
  std::vector<Interval> iv(n * d);
  for (std::size_t i = 0; i < n; ++i)
    for (int j = 0; j < d; ++j)
      rational_to_interval(pts[i].x[j], iv[i * d + j].lo, iv[i * d + j].hi);
  std::vector<Interval> cv(d);
  for (int j = 0; j < d; ++j) rational_to_interval(cand.x[j], cv[j].lo, cv[j].hi);

  const auto dependent2 = [&](std::size_t a, std::size_t b) {
    const Interval det = (iv[a * 2] - cv[0]) * (iv[b * 2 + 1] - cv[1]) -
                         (iv[a * 2 + 1] - cv[1]) * (iv[b * 2] - cv[0]);
    bool certain = false;
    if (interval_sign(det, certain) != 0 && certain) return false;
    const Rational exact = (pts[a].x[0] - cand.x[0]) * (pts[b].x[1] - cand.x[1]) -
                           (pts[a].x[1] - cand.x[1]) * (pts[b].x[0] - cand.x[0]);
    return exact == 0;
  };
  const auto dependent3 = [&](std::size_t a, std::size_t b, std::size_t c) {
    Interval m[3][3];
    const std::size_t rows[3] = {a, b, c};
    for (int r = 0; r < 3; ++r)
      for (int j = 0; j < 3; ++j) m[r][j] = iv[rows[r] * 3 + j] - cv[j];
    const Interval det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    bool certain = false;
    if (interval_sign(det, certain) != 0 && certain) return false;
    Rational e[3][3];
    for (int r = 0; r < 3; ++r)
      for (int j = 0; j < 3; ++j) e[r][j] = pts[rows[r]].x[j] - cand.x[j];
    const Rational exact = e[0][0] * (e[1][1] * e[2][2] - e[1][2] * e[2][1]) -
                           e[0][1] * (e[1][0] * e[2][2] - e[1][2] * e[2][0]) +
                           e[0][2] * (e[1][0] * e[2][1] - e[1][1] * e[2][0]);
    return exact == 0;
  };

  if (d == 2) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b)
        if (dependent2(a, b)) return false;
    return true;
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = b + 1; c < n; ++c)
        if (dependent3(a, b, c)) return false;
  return true;
}

// Distinct random rationals num/den with |num| <= range, 1 <= den <= range.
std::vector<Rational> distinct_rationals(std::uint64_t count, std::uint64_t range,
                                         Rng& rng) {
  std::set<Rational> seen;
  while (seen.size() < count) {
    const auto num = static_cast<std::int64_t>(rng.below(2 * range + 1)) -
                     static_cast<std::int64_t>(range);
    const auto den = static_cast<std::int64_t>(rng.below(range)) + 1;
    seen.insert(Rational(BigInt(num), BigInt(den)));
  }
  return {seen.begin(), seen.end()};  // ascending
}

// Rational point on the unit circle at parameter t (angle 2 atan t):
// ((1-t^2)/(1+t^2), 2t/(1+t^2)). Injective in t, and no line meets a circle
// three times, so distinct parameters give convex, general position.
Point circle_point(const Rational& t) {
  const Rational t2 = t * t;
  const Rational den = 1 + t2;
  Point p;
  p.x = {(1 - t2) / den, 2 * t / den};
  return p;
}

}  // namespace

GeneratedInstance gen_convex(std::uint64_t n, int d, Seed seed) {
  if (d < 2) throw ConstraintError("d >= 2", "d = " + std::to_string(d));
  if (n < static_cast<std::uint64_t>(d) + 1)
    throw ConstraintError("n >= d+1", "n = " + std::to_string(n));

  Rng rng(seed);
  std::vector<Point> pts;
  pts.reserve(n);
  if (d == 2) {
    for (const Rational& t : distinct_rationals(n, 1 << 16, rng))
      pts.push_back(circle_point(t));
  } else {
    // Moment curve (t, t^2, ..., t^d): every point is a vertex of the cyclic
    // polytope and every d+1 parameters have a Vandermonde determinant, so
    // convex and general position hold for any distinct t.
    for (const Rational& t : distinct_rationals(n, 1 << 10, rng)) {
      Point p;
      Rational power = t;
      for (int j = 0; j < d; ++j) {
        p.x.push_back(power);
        power *= t;
      }
      pts.push_back(std::move(p));
    }
  }

  GeneratedInstance out{PointSet(d, std::move(pts)), "convex", {}, {}};
  if (n <= kCertifyLimit) certify_convex(out.points);
  return out;
}

GeneratedInstance gen_sawtooth(std::uint64_t n, Seed seed) {
  if (n % 4 != 0)
    throw ConstraintError("n divisible by 4", "n = " + std::to_string(n));
  if (n < 8) throw ConstraintError("n >= 8", "n = " + std::to_string(n));

  const std::uint64_t m = n / 2;
  Rng rng(seed);

  // Near-regular m-gon: tangents of half-angles rounded to a fixed binary
  // grid, plus a seed-dependent jitter of a few grid steps. The half-step
  // angular offset keeps every tangent finite.
  constexpr std::int64_t kGrid = 1 << 24;
  std::vector<Rational> tangents;
  tangents.reserve(m);
  for (std::uint64_t j = 0; j < m; ++j) {
    const double theta =
        -M_PI + (2.0 * M_PI) * (static_cast<double>(j) + 0.5) / static_cast<double>(m);
    const double ideal = std::tan(theta / 2.0);
    const auto base = static_cast<std::int64_t>(std::llround(ideal * kGrid));
    const auto jitter = static_cast<std::int64_t>(rng.below(17)) - 8;
    tangents.push_back(Rational(BigInt(base + jitter), BigInt(kGrid)));
  }
  for (std::uint64_t j = 1; j < m; ++j)
    if (!(tangents[j - 1] < tangents[j]))
      throw std::logic_error("sawtooth tangents collided");

  std::vector<Point> pts;
  pts.reserve(n);
  for (const Rational& t : tangents) pts.push_back(circle_point(t));

  // Tooth i sits on side (v_i, v_{i+1}): the chord midpoint pulled toward
  // the circumcenter (the origin) by the factor 1 - 1/n^2, i.e. just inside
  // the polygon.
  const Rational shrink =
      Rational(BigInt(n) * BigInt(n) - 1, BigInt(n) * BigInt(n));
  for (std::uint64_t i = 0; i < m; ++i) {
    const Point& a = pts[i];
    const Point& b = pts[(i + 1) % m];
    Point tooth;
    tooth.x = {(a.x[0] + b.x[0]) / 2 * shrink, (a.x[1] + b.x[1]) / 2 * shrink};
    pts.push_back(std::move(tooth));
  }

  PointSet ps(2, std::move(pts));

  // Structural certification (any n): the gon turns strictly left all the
  // way around and the origin is strictly inside every directed side.
  for (std::uint64_t i = 0; i < m; ++i) {
    const Index tri[3] = {static_cast<Index>(i), static_cast<Index>((i + 1) % m),
                          static_cast<Index>((i + 2) % m)};
    if (orientation(ps, tri) <= 0)
      throw std::logic_error("sawtooth gon lost strict convexity");
    const Point origin{{Rational(0), Rational(0)}};
    const Point side[3] = {ps.point(static_cast<Index>(i)),
                           ps.point(static_cast<Index>((i + 1) % m)), origin};
    if (orientation(std::span<const Point>(side, 3)) <= 0)
      throw std::logic_error("sawtooth circumcenter left the gon");
  }

  if (n <= kCertifyLimit) {
    // Conflict certification: every tooth lies strictly inside the triangle
    // of its side endpoints and any other point of the set.
    for (std::uint64_t i = 0; i < m; ++i) {
      const auto tooth = static_cast<Index>(m + i);
      const auto vi = static_cast<Index>(i);
      const auto vj = static_cast<Index>((i + 1) % m);
      for (Index x = 0; x < ps.size(); ++x) {
        if (x == tooth || x == vi || x == vj) continue;
        const Index t1[3] = {vi, vj, x};
        const int side_sign = orientation(ps, t1);
        const Index t2[3] = {vi, vj, tooth};
        const Index t3[3] = {vj, x, tooth};
        const Index t4[3] = {x, vi, tooth};
        if (orientation(ps, t2) != side_sign || orientation(ps, t3) != side_sign ||
            orientation(ps, t4) != side_sign)
          throw std::logic_error("sawtooth conflict property failed");
      }
    }
    // The extremal witness: all teeth plus every second gon vertex is in
    // convex position, pinning OPT = 3n/4 together with the conflicts.
    std::vector<Index> witness;
    for (std::uint64_t i = 0; i < m; i += 2) witness.push_back(static_cast<Index>(i));
    for (std::uint64_t i = 0; i < m; ++i) witness.push_back(static_cast<Index>(m + i));
    certify_convex(ps.subset(witness));
  }

  return {std::move(ps), "far(<1/4)", {}, {}};
}

GeneratedInstance gen_close(std::uint64_t n, int d, const Rational& epsilon,
                            Seed seed, const Rational& delta) {
  (void)derive_close_params(n, d, epsilon, delta);  // validates (n, eps, delta)
  if (d > 3)
    throw ConstraintError("d <= 3",
                          "exact general-position maintenance implemented for "
                          "d in {2, 3}");
  const std::uint64_t displaced =
      floor_rational(epsilon * BigInt(n)).convert_to<std::uint64_t>();
  const std::uint64_t hull_n = n - displaced;

  GeneratedInstance convex = gen_convex(hull_n, d, split_seed(seed, 0));
  std::vector<Point> pts;
  pts.reserve(n);
  for (Index i = 0; i < hull_n; ++i) pts.push_back(convex.points.point(i));

  // Each displaced point: a random positive combination of d+1 hull points,
  // resampled until it keeps general position (no affinely dependent d+1
  // subset through the new point) and duplicates nothing.
  for (std::uint64_t i = 0; i < displaced; ++i) {
    for (std::uint64_t attempt = 0;; ++attempt) {
      if (attempt > 200)
        throw std::logic_error("gen_close could not keep general position");
      Rng rng(split_seed(seed, 1 + i * 211 + attempt));
      const SampleRecord simplex = random_subset(
          static_cast<Index>(hull_n), static_cast<std::uint32_t>(d + 1),
          split_seed(seed, 1000003 + i * 211 + attempt));
      Rational total(0);
      std::vector<Rational> weights;
      for (int j = 0; j <= d; ++j) {
        weights.push_back(Rational(BigInt(rng.below(1 << 16) + 1)));
        total += weights.back();
      }
      Point cand;
      cand.x.assign(d, Rational(0));
      for (int j = 0; j <= d; ++j)
        for (int c = 0; c < d; ++c)
          cand.x[c] += weights[j] * convex.points.coord(simplex.indices[j], c) / total;

      bool ok = true;
      for (const Point& existing : pts)
        if (existing == cand) {
          ok = false;
          break;
        }
      if (ok && !keeps_general_position(pts, cand, d)) ok = false;
      if (ok) {
        pts.push_back(std::move(cand));
        break;
      }
    }
  }

  GeneratedInstance out{PointSet(d, std::move(pts)),
                        "close(" + rational_to_string(epsilon) + ")",
                        {},
                        {}};
  for (Index i = 0; i < hull_n; ++i) out.convex_part.push_back(i);
  for (std::uint64_t i = 0; i < displaced; ++i)
    out.displaced.push_back(static_cast<Index>(hull_n + i));
  return out;
}

GeneratedInstance gen_triangle_centroid() {
  std::vector<Point> pts(4);
  pts[0].x = {Rational(0), Rational(0)};
  pts[1].x = {Rational(6), Rational(0)};
  pts[2].x = {Rational(0), Rational(6)};
  pts[3].x = {Rational(2), Rational(2)};
  return {PointSet(2, std::move(pts)), "non-convex(fixture)", {}, {}};
}

GeneratedInstance generate(const GenSpec& spec) {
  switch (spec.kind) {
    case GenKind::kConvex:
      return gen_convex(spec.n, spec.d, spec.seed);
    case GenKind::kSawtooth:
      return gen_sawtooth(spec.n, spec.seed);
    case GenKind::kClose:
      return gen_close(spec.n, spec.d, spec.epsilon, spec.seed, spec.delta);
    case GenKind::kTriangleCentroid:
      return gen_triangle_centroid();
  }
  throw std::logic_error("unknown generator kind");
}

}  // namespace convextest
