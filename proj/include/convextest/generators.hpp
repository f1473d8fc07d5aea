#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "convextest/point_set.hpp"
#include "convextest/rational.hpp"
#include "convextest/sampler.hpp"

namespace convextest {

// Every generator is a pure function of its arguments: same spec, same
// bytes. Outputs carry a by-construction tag; for n <= 512 the claimed
// property is additionally certified by the exact test at generation time.

enum class GenKind { kConvex, kSawtooth, kClose, kTriangleCentroid };

struct GenSpec {
  GenKind kind = GenKind::kConvex;
  std::uint64_t n = 0;
  int d = 2;
  Rational epsilon;  // kClose only
  Rational delta = Rational(1, 10);
  Seed seed;
};

struct GeneratedInstance {
  PointSet points;
  std::string tag;                  // "convex", "far(1/4)", "close(eps)", ...
  std::vector<Index> convex_part;   // kClose: ids of C
  std::vector<Index> displaced;     // kClose: ids of D
};

// n points in convex position, general position by construction:
// d = 2 -> rational points on the unit circle (tan-half-angle), d >= 3 ->
// moment curve (t, t^2, ..., t^d) at distinct rationals. Requires d >= 2,
// n >= d+1.
GeneratedInstance gen_convex(std::uint64_t n, int d, Seed seed);

// The hard far instance in the plane: an m = n/2 gon plus one tooth per
// second side, each tooth just inside its side's midpoint (scaled toward
// the circumcenter by 1 - 1/n^2). Requires d = 2, n divisible by 4, n >= 8.
// Exactly 1/4-far: min_removal = n/4 (teeth n/2, but half may be kept).
GeneratedInstance gen_sawtooth(std::uint64_t n, Seed seed);

// epsilon-close instance: n - floor(eps n) points in convex position plus
// floor(eps n) points placed strictly inside the hull (random positive
// combinations of d+1 hull points; degenerate placements are resampled).
GeneratedInstance gen_close(std::uint64_t n, int d, const Rational& epsilon,
                            Seed seed, const Rational& delta = Rational(1, 10));

// Fixed 4-point fixture: {(0,0), (6,0), (0,6), (2,2)}; (2,2) is the centroid
// of the triangle, witness coefficients (1/3, 1/3, 1/3).
GeneratedInstance gen_triangle_centroid();

GeneratedInstance generate(const GenSpec& spec);

}  // namespace convextest
