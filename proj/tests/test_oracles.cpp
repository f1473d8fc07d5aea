#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "convextest/convexity.hpp"
#include "convextest/generators.hpp"
#include "convextest/oracles.hpp"
#include "convextest/params.hpp"
#include "convextest/predicates.hpp"
#include "convextest/sampler.hpp"

using namespace convextest;

namespace {

PointSet from_rows(int d, const std::vector<std::vector<Rational>>& rows) {
  std::vector<Point> pts(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) pts[i].x = rows[i];
  return PointSet(d, std::move(pts));
}

PointSet remove_ids(const PointSet& ps, const std::vector<Index>& removed) {
  std::vector<Index> keep;
  for (Index i = 0; i < ps.size(); ++i)
    if (std::find(removed.begin(), removed.end(), i) == removed.end())
      keep.push_back(i);
  return ps.subset(keep);
}

}  // namespace

TEST_CASE("sawtooth min-removal: 3 of 12 and 2 of 8") {
  const PointSet saw12 = gen_sawtooth(12, Seed{0}).points;
  const FarnessCertificate c12 = min_removal_to_convex(saw12);
  CHECK(c12.min_removal == 3);
  CHECK(c12.removed_ids.size() == 3);
  CHECK(convex_position_test(remove_ids(saw12, c12.removed_ids))
            .in_convex_position);

  const PointSet saw8 = gen_sawtooth(8, Seed{0}).points;
  const FarnessCertificate c8 = min_removal_to_convex(saw8);
  CHECK(c8.min_removal == 2);
  CHECK(convex_position_test(remove_ids(saw8, c8.removed_ids))
            .in_convex_position);
}

TEST_CASE("min-removal is 0 on convex input, 1 for the triangle centroid") {
  CHECK(min_removal_to_convex(gen_convex(10, 2, Seed{1}).points).min_removal == 0);

  const FarnessCertificate c =
      min_removal_to_convex(gen_triangle_centroid().points);
  CHECK(c.min_removal == 1);
  // Removing any single point yields a triangle, so the lexicographically
  // least witness is {0}.
  CHECK(c.removed_ids == std::vector<Index>({0}));
}

TEST_CASE("min-removal refuses oversized inputs by name") {
  const PointSet big = gen_convex(30, 2, Seed{2}).points;
  try {
    min_removal_to_convex(big, 24);
    FAIL("expected ConstraintError");
  } catch (const ConstraintError& e) {
    CHECK(e.constraint() == "n <= min_removal budget");
  }
}

TEST_CASE("max convex subset matches n - min_removal on small instances") {
  Rng rng(Seed{31337});
  int checked = 0;
  while (checked < 25) {
    const Index n = static_cast<Index>(8 + rng.below(5));  // 8..12
    std::vector<std::vector<Rational>> rows;
    while (rows.size() < n) {
      std::vector<Rational> row = {
          Rational(static_cast<long long>(rng.below(4001)) - 2000,
                   1 + static_cast<long long>(rng.below(8))),
          Rational(static_cast<long long>(rng.below(4001)) - 2000,
                   1 + static_cast<long long>(rng.below(8)))};
      if (std::find(rows.begin(), rows.end(), row) == rows.end())
        rows.push_back(std::move(row));
    }
    const PointSet ps = from_rows(2, rows);
    if (!general_position_check(ps).in_general_position) continue;

    const MaxConvexSubset best = max_convex_subset_2d(ps);
    const FarnessCertificate cert = min_removal_to_convex(ps);
    CHECK(best.size == n - cert.min_removal);
    // The returned ids must themselves be in convex position.
    CHECK(convex_position_test(ps.subset(best.ids)).in_convex_position);
    ++checked;
  }
}

TEST_CASE("max convex subset on the sawtooth recovers 3n/4") {
  const PointSet saw = gen_sawtooth(16, Seed{0}).points;
  const MaxConvexSubset best = max_convex_subset_2d(saw);
  CHECK(best.size == 12);
  CHECK(convex_position_test(saw.subset(best.ids)).in_convex_position);
}

TEST_CASE("max convex subset demands general position") {
  const PointSet collinear = from_rows(2, {{Rational(0), Rational(0)},
                                           {Rational(1), Rational(0)},
                                           {Rational(2), Rational(0)},
                                           {Rational(0), Rational(5)},
                                           {Rational(3), Rational(7)}});
  CHECK_THROWS_AS(max_convex_subset_2d(collinear), ConstraintError);
}

TEST_CASE("lemma 1: centroid of a triangle captures a heavy cone") {
  const PointSet ps = gen_triangle_centroid().points;
  const Lemma1Result r = lemma1_verify(ps, 3);
  CHECK(r.simplex_w.size() == 3);
  // |U| >= (n-1)/(d+1) = 1 even though only three other points exist.
  CHECK(r.cone_members.size() >= 1);
  for (Index q : r.cone_members) CHECK(q != 3);
}

TEST_CASE("lemma 1 rejects extreme points by name") {
  const PointSet ps = gen_triangle_centroid().points;
  try {
    lemma1_verify(ps, 0);
    FAIL("expected ConstraintError");
  } catch (const ConstraintError& e) {
    CHECK(e.constraint() == "interior point required");
  }
}

TEST_CASE("lemma 1 pigeonhole bound on a crowded square") {
  // 4 corners + 5 strictly interior points in general position: for each
  // interior point the chosen cone captures >= (9-1)/3 points, i.e. >= 3.
  const PointSet ps = from_rows(2, {{Rational(0), Rational(0)},
                                    {Rational(12), Rational(0)},
                                    {Rational(12), Rational(12)},
                                    {Rational(0), Rational(12)},
                                    {Rational(5), Rational(4)},
                                    {Rational(7), Rational(3)},
                                    {Rational(3), Rational(7)},
                                    {Rational(6), Rational(9)},
                                    {Rational(9), Rational(6)}});
  REQUIRE(general_position_check(ps).in_general_position);
  for (Index interior = 4; interior < 9; ++interior) {
    const Lemma1Result r = lemma1_verify(ps, interior);
    CHECK(r.cone_members.size() * 3 >= 8);
  }
}

TEST_CASE("lemma 2 builds k disjoint witnesses with big conflict sets") {
  const PointSet saw = gen_sawtooth(64, Seed{7}).points;
  const Rational eps(1, 4);
  const Lemma2Construction c = lemma2_construct(saw, eps);
  CHECK(c.k == 5);  // floor((1/4) * 64 / 3)
  REQUIRE(c.witness_sets.size() == 5);
  REQUIRE(c.conflict_sets.size() == 5);

  std::set<Index> all_witness_ids;
  for (std::size_t i = 0; i < c.witness_sets.size(); ++i) {
    CHECK(c.witness_sets[i].size() == 3);
    for (Index id : c.witness_sets[i]) {
      CHECK(all_witness_ids.insert(id).second);  // pairwise disjoint
    }
    for (Index q : c.conflict_sets[i]) {
      CHECK(std::find(c.witness_sets[i].begin(), c.witness_sets[i].end(), q) ==
            c.witness_sets[i].end());
      // q conflicts: witness + q is not in convex position.
      std::vector<Index> ids = c.witness_sets[i];
      ids.push_back(q);
      std::sort(ids.begin(), ids.end());
      CHECK(!convex_position_test(saw.subset(ids)).in_convex_position);
    }
    // Global bound: |U_i| >= n/(d+1) - k = 64/3 - 5 = 16.33.
    CHECK(c.conflict_sets[i].size() * 3 >= 64 - 3 * 5);
  }
}

TEST_CASE("lemma 2 refuses inputs that are not far enough") {
  const PointSet convex = gen_convex(64, 2, Seed{1}).points;
  try {
    lemma2_construct(convex, Rational(1, 4));
    FAIL("expected ConstraintError");
  } catch (const ConstraintError& e) {
    CHECK(e.constraint() == "interior point required");
  }
}

TEST_CASE("lemma 3 scenario validation names each violated constraint") {
  auto constraint_of = [](auto f) -> std::string {
    try {
      f();
    } catch (const ConstraintError& e) {
      return e.constraint();
    }
    return "";
  };
  CHECK(constraint_of([] { make_lemma_scenario(512, 10, 3, 200); }) == "n >= 2^10");
  CHECK(constraint_of([] { make_lemma_scenario(1024, 5, 3, 500); }) == "k >= 10");
  CHECK(constraint_of([] { make_lemma_scenario(1024, 10, 2, 500); }) == "3 <= ell");
  CHECK(constraint_of([] { make_lemma_scenario(1024, 10, 64, 500); }) == "ell <= n/32");
  CHECK(constraint_of([] { make_lemma_scenario(1024, 400, 3, 500); }) == "k*ell <= n");
  CHECK(constraint_of([] { make_lemma_scenario(1024, 10, 3, 2000); }) == "s <= n");
  CHECK(constraint_of([] { make_lemma_scenario(1024, 10, 3, 379); }) == "s >= s0");
  CHECK(constraint_of([] { make_lemma_scenario(1024, 10, 3, 380); }).empty());
}

TEST_CASE("lemma 3 factors at the reference point") {
  const LemmaScenario sc = make_lemma_scenario(1024, 10, 3, 380);
  const BoundFactors f = lemma3_factors(sc);
  CHECK(f.factor1 == Rational(10) * pow_rational(Rational(377, 1021), 3));
  CHECK(f.factor1 >= Rational(1, 2));
  CHECK(f.factor2 == Rational(1) - f.factor1 / 2);
  CHECK(f.factor1 * f.factor2 >= Rational(1, 4));

  // One step below the certified s the first factor drops under 1/2.
  LemmaScenario below = sc;
  below.s = 379;
  CHECK(lemma3_factors(below).factor1 < Rational(1, 2));
}

TEST_CASE("lemma 3 Monte Carlo is deterministic and plausibly calibrated") {
  const LemmaScenario sc = make_lemma_scenario(1024, 10, 3, 380);
  const MonteCarloEstimate a = lemma3_monte_carlo(sc, 2000, Seed{6});
  const MonteCarloEstimate b = lemma3_monte_carlo(sc, 2000, Seed{6});
  CHECK(a.hits == b.hits);
  CHECK(a.trials == 2000);
  // True probability is ~0.4; 2000 trials keep the estimate far from the
  // extremes for any seed that ever passed once (deterministic).
  CHECK(a.fraction > 0.2);
  CHECK(a.fraction < 0.65);

  // s = n: the sample is the whole universe, so every witness is hit.
  const LemmaScenario full = make_lemma_scenario(1024, 10, 3, 1024);
  CHECK(lemma3_monte_carlo(full, 50, Seed{1}).fraction == 1.0);
}

TEST_CASE("appendix counterexample: the old bound is infeasible then false") {
  const OldBoundReport rep = old_lemma34_counterexample();
  CHECK(rep.n == 256);
  CHECK(rep.k == 8);
  CHECK(rep.ell == 8);
  CHECK(rep.s_old == 363);
  CHECK(rep.s_old_exceeds_n);
  CHECK(rep.s_fixed == 184);
  CHECK(rep.factor1 ==
        Rational(BigInt("439006988288"), BigInt("852891037441")));
  CHECK(rep.factor1 > Rational(5147, 10000));
  CHECK(rep.factor1 < Rational(5148, 10000));
  CHECK(rep.factor2_old == Rational(1) - rep.factor1);
  CHECK(rep.product_below_quarter);
  CHECK(rep.factor1 * rep.factor2_old < Rational(1, 4));
}

TEST_CASE("brute-force convexity agrees on handmade degenerate sets") {
  // Square plus edge midpoint: not in convex position (midpoint on hull edge).
  const PointSet mid = from_rows(2, {{Rational(0), Rational(0)},
                                     {Rational(4), Rational(0)},
                                     {Rational(4), Rational(4)},
                                     {Rational(0), Rational(4)},
                                     {Rational(2), Rational(0)}});
  CHECK(!brute_force_convex_position(mid));
  CHECK(!convex_position_test(mid).in_convex_position);

  const PointSet square = from_rows(2, {{Rational(0), Rational(0)},
                                        {Rational(4), Rational(0)},
                                        {Rational(4), Rational(4)},
                                        {Rational(0), Rational(4)}});
  CHECK(brute_force_convex_position(square));
  CHECK(convex_position_test(square).in_convex_position);
}
