#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "convextest/params.hpp"
#include "convextest/point_set.hpp"
#include "convextest/sampler.hpp"

namespace convextest {

// ---------------------------------------------------------------------------
// Ground-truth distance oracles (exponential / cubic; for small instances).
// ---------------------------------------------------------------------------

struct FarnessCertificate {
  std::uint32_t min_removal = 0;
  std::vector<Index> removed_ids;  // lexicographically least optimal set
};

// Exhaustive minimum number of points whose removal leaves the rest in
// convex position, with the lexicographically least witness set. Exact;
// refuses instances with n > budget (default 24).
FarnessCertificate min_removal_to_convex(const PointSet& ps, Index budget = 24);

struct MaxConvexSubset {
  std::uint32_t size = 0;
  std::vector<Index> ids;  // one realizing subset, ascending
};

// Largest subset in convex position for d = 2 under general position:
// O(n^3) dynamic program over directed edges sorted once by direction,
// with per-vertex monotone deques (Chvatal/Klincsek style). Exact.
MaxConvexSubset max_convex_subset_2d(const PointSet& ps);

// Definition-chasing reference: for every point, searches all affinely
// independent subsets of the others (size <= d+1) for nonnegative
// barycentric coordinates. Exponential, exact, and entirely independent of
// the LP route; the cross-validation anchor for convex_position_test.
bool brute_force_convex_position(const PointSet& ps);

// ---------------------------------------------------------------------------
// Lemma 1: one interior point yields a heavy cone.
// ---------------------------------------------------------------------------

struct Lemma1Result {
  std::vector<Index> simplex_w;     // d+1 ids whose hull contains p
  int cone_id = 0;                  // index j of the dropped vertex w_j
  std::vector<Index> cone_members;  // U: ids captured by cone C_j, ascending
};

// For interior point p (id `interior_id`): finds a containing simplex W via
// point_in_hull, splits R^d into the d+1 cones spanned by the negated
// vectors of W minus one vertex, selects a cone containing at least
// (n-1)/(d+1) of the remaining points, and exactly re-verifies that every
// member q of that cone makes {W_j, p, q} non-convex (p interior).
// Throws ConstraintError("interior point required") if p is extreme.
Lemma1Result lemma1_verify(const PointSet& ps, Index interior_id);

// ---------------------------------------------------------------------------
// Lemma 2: k disjoint witness simplices with large conflict sets.
// ---------------------------------------------------------------------------

struct Lemma2Construction {
  std::uint64_t k = 0;
  std::vector<std::vector<Index>> witness_sets;   // W_1..W_k, each d+1 ids
  std::vector<std::vector<Index>> conflict_sets;  // U_1..U_k
  std::vector<std::string> warnings;              // boundary-case notes
};

// Iterates Lemma 1 k = floor(eps n / (d+1)) times, removing each W_i before
// the next round, and exactly asserts the five properties: sizes, pairwise
// disjointness, W_i disjoint from U_i, every q in U_i breaks convexity of
// W_i + {q}, and |U_i| >= n/(d+1) - k (together with the epsilon form
// (1-eps) n/(d+1); a boundary miss of the latter is logged, not fatal).
// Throws ConstraintError if a round finds no interior point (input not far
// enough) or k < 1.
Lemma2Construction lemma2_construct(const PointSet& ps, const Rational& epsilon);

// ---------------------------------------------------------------------------
// Lemma 3: probability that some witness lands inside a random sample.
// ---------------------------------------------------------------------------

// Abstract sampling scenario: k disjoint ell-subsets of {0..n-1} plus the
// sample size; no geometry involved.
struct LemmaScenario {
  std::uint64_t n = 0;
  std::uint64_t k = 0;
  std::uint64_t ell = 0;
  std::uint64_t s = 0;
  std::vector<std::vector<Index>> witness_sets;
};

// Canonical scenario: witness sets are the consecutive blocks
// {0..ell-1}, {ell..2ell-1}, ... (the hit distribution is exchangeable, so
// the block choice is irrelevant). Validates the lemma-3 constraints:
// "n >= 2^10", "k >= 10", "3 <= ell", "ell <= n/32", "k*ell <= n",
// "s >= s0" (exact), "s <= n".
LemmaScenario make_lemma_scenario(std::uint64_t n, std::uint64_t k,
                                  std::uint64_t ell, std::uint64_t s);

struct BoundFactors {
  Rational factor1;  // k ((s-ell)/(n-ell))^ell, exact
  Rational factor2;  // 1 - factor1/2, exact
};

// Exact Boole-Bonferroni factors; the lemma's bound is
// Prob(some W_i inside sample) >= factor1 * factor2 >= 1/4.
BoundFactors lemma3_factors(const LemmaScenario& scenario);

struct MonteCarloEstimate {
  std::uint64_t trials = 0;
  std::uint64_t hits = 0;
  double fraction = 0.0;
};

// Empirical Prob(exists i: W_i subset of uniform s-sample) over `trials`
// independent samples with per-trial split seeds.
MonteCarloEstimate lemma3_monte_carlo(const LemmaScenario& scenario,
                                      std::uint64_t trials, Seed seed);

// ---------------------------------------------------------------------------
// Appendix: why the earlier sample bound failed at (n, k, ell) = (256, 8, 8).
// ---------------------------------------------------------------------------

struct OldBoundReport {
  std::uint64_t n = 0, k = 0, ell = 0;
  std::uint64_t s_old = 0;       // ceil(2n / (2k)^(1/ell)): 363 > n
  bool s_old_exceeds_n = false;
  std::uint64_t s_fixed = 0;     // ceil of the corrected threshold: 184
  Rational factor1;              // exact: 8 * (176/248)^8
  Rational factor2_old;          // the flawed 1 - factor1 pairing
  bool product_below_quarter = false;  // factor1 * factor2_old < 1/4, exact
};

OldBoundReport old_lemma34_counterexample();

}  // namespace convextest
