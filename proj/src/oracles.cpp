#include "convextest/oracles.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "convextest/convexity.hpp"
#include "convextest/predicates.hpp"

namespace convextest {

namespace {

// --- exact linear algebra helpers (small dense systems) --------------------

// Solves sum_i mu_i * col_i = rhs for an (rows x m) exact system by Gaussian
// elimination. Returns the unique solution if the columns are linearly
// independent and the system is consistent; nullopt otherwise.
std::optional<std::vector<Rational>> solve_exact(
    std::vector<std::vector<Rational>> a, std::vector<Rational> rhs) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  std::vector<std::size_t> pivot_row(cols);
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) return std::nullopt;  // dependent columns: not unique
    std::swap(a[p], a[rank]);
    std::swap(rhs[p], rhs[rank]);
    const Rational inv = Rational(1) / a[rank][c];
    for (std::size_t j = c; j < cols; ++j) a[rank][j] *= inv;
    rhs[rank] *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || a[r][c] == 0) continue;
      const Rational f = a[r][c];
      for (std::size_t j = c; j < cols; ++j) a[r][j] -= f * a[rank][j];
      rhs[r] -= f * rhs[rank];
    }
    pivot_row[c] = rank;
    ++rank;
  }
  for (std::size_t r = rank; r < rows; ++r)
    if (rhs[r] != 0) return std::nullopt;  // inconsistent
  std::vector<Rational> mu(cols);
  for (std::size_t c = 0; c < cols; ++c) mu[c] = rhs[pivot_row[c]];
  return mu;
}

// Barycentric coordinates of `target` with respect to `subset` (any size up
// to d+1): the unique mu with sum mu_i q_i = p, sum mu_i = 1, if the subset
// is affinely independent and p lies in its affine span.
std::optional<std::vector<Rational>> affine_barycentric(
    const PointSet& ps, Index target, std::span<const Index> subset) {
  const int d = ps.dim();
  const std::size_t m = subset.size();
  std::vector<std::vector<Rational>> a(d + 1, std::vector<Rational>(m));
  std::vector<Rational> rhs(d + 1);
  for (int j = 0; j < d; ++j) {
    for (std::size_t i = 0; i < m; ++i) a[j][i] = ps.coord(subset[i], j);
    rhs[j] = ps.coord(target, j);
  }
  for (std::size_t i = 0; i < m; ++i) a[d][i] = 1;
  rhs[d] = 1;
  return solve_exact(std::move(a), std::move(rhs));
}

// Definition-chasing hull membership: p in conv(S) iff some affinely
// independent subset of size <= d+1 contains it with nonnegative
// barycentric coordinates (Caratheodory). Exponential; reference only.
bool brute_point_in_hull(const PointSet& ps, Index target,
                         const std::vector<Index>& others) {
  const int d = ps.dim();
  const std::size_t n = others.size();
  for (std::size_t m = 1; m <= static_cast<std::size_t>(d) + 1 && m <= n; ++m) {
    std::vector<std::size_t> c(m);
    std::iota(c.begin(), c.end(), std::size_t{0});
    while (true) {
      std::vector<Index> subset(m);
      for (std::size_t i = 0; i < m; ++i) subset[i] = others[c[i]];
      if (auto mu = affine_barycentric(ps, target, subset)) {
        bool nonneg = true;
        for (const Rational& v : *mu)
          if (v < 0) {
            nonneg = false;
            break;
          }
        if (nonneg) return true;
      }
      std::size_t i = m;
      while (i-- > 0 && c[i] == n - m + i) {
      }
      if (i == static_cast<std::size_t>(-1)) break;
      ++c[i];
      for (std::size_t j = i + 1; j < m; ++j) c[j] = c[j - 1] + 1;
    }
  }
  return false;
}

// --- exact 2d convexity via a monotone-chain walk --------------------------

// ids must be in exact lexicographic (x, y) order. True iff every point is
// a strict extreme point (equivalently: both chains keep strict turns and
// nothing gets popped).
bool convex_by_hull_walk(const PointSet& ps, const std::vector<Index>& sorted_ids) {
  const std::size_t m = sorted_ids.size();
  if (m <= 2) return true;
  std::vector<Index> chain;
  chain.reserve(m + 1);
  std::size_t hull_vertices = 0;

  const auto run = [&](bool reverse) {
    chain.clear();
    for (std::size_t step = 0; step < m; ++step) {
      const Index p = sorted_ids[reverse ? m - 1 - step : step];
      while (chain.size() >= 2) {
        const Index simplex[3] = {chain[chain.size() - 2], chain.back(), p};
        if (orientation(ps, simplex) <= 0)
          chain.pop_back();
        else
          break;
      }
      chain.push_back(p);
    }
    hull_vertices += chain.size() - 1;  // endpoints shared between chains
  };
  run(false);
  run(true);
  return hull_vertices == m;
}

std::vector<Index> lex_sorted_ids(const PointSet& ps) {
  std::vector<Index> order(ps.size());
  std::iota(order.begin(), order.end(), Index{0});
  std::sort(order.begin(), order.end(), [&](Index a, Index b) {
    for (int j = 0; j < ps.dim(); ++j) {
      const Rational &qa = ps.coord(a, j), &qb = ps.coord(b, j);
      if (qa != qb) return qa < qb;
    }
    return a < b;
  });
  return order;
}

}  // namespace

bool brute_force_convex_position(const PointSet& ps) {
  const Index n = ps.size();
  std::vector<Index> others(n > 0 ? n - 1 : 0);
  for (Index target = 0; target < n; ++target) {
    std::size_t at = 0;
    for (Index i = 0; i < n; ++i)
      if (i != target) others[at++] = i;
    if (brute_point_in_hull(ps, target, others)) return false;
  }
  return true;
}

FarnessCertificate min_removal_to_convex(const PointSet& ps, Index budget) {
  const Index n = ps.size();
  if (n > budget)
    throw ConstraintError("n <= min_removal budget",
                          "n = " + std::to_string(n) +
                              ", budget = " + std::to_string(budget));
  const int d = ps.dim();
  const std::vector<Index> order = lex_sorted_ids(ps);

  std::vector<char> removed(n, 0);
  std::vector<Index> keep;
  keep.reserve(n);
  const auto remaining_convex = [&]() {
    keep.clear();
    for (Index id : order)
      if (!removed[id]) keep.push_back(id);
    if (d == 2) return convex_by_hull_walk(ps, keep);
    return convex_position_test(ps.subset(keep)).in_convex_position;
  };

  for (Index r = 0; r < n; ++r) {
    // All r-subsets of {0..n-1} in lexicographic order; the first success
    // is the lexicographically least optimal removal set.
    std::vector<Index> c(r);
    std::iota(c.begin(), c.end(), Index{0});
    while (true) {
      std::fill(removed.begin(), removed.end(), 0);
      for (Index id : c) removed[id] = 1;
      if (remaining_convex()) {
        FarnessCertificate cert;
        cert.min_removal = r;
        cert.removed_ids = c;
        return cert;
      }
      if (r == 0) break;
      std::size_t i = r;
      while (i-- > 0 && c[i] == n - r + i) {
      }
      if (i == static_cast<std::size_t>(-1)) break;
      ++c[i];
      for (std::size_t j = i + 1; j < r; ++j) c[j] = c[j - 1] + 1;
    }
  }
  throw std::logic_error("min_removal search exhausted");  // unreachable
}

// --- Lemma 1 ---------------------------------------------------------------

namespace {

struct ConeBasis {
  // Inverse of the d x d matrix whose columns are -(w_i - p), i != j.
  std::vector<std::vector<Rational>> inverse;
  std::vector<Index> generators;  // the W ids kept (all but w_j)
};

std::optional<std::vector<std::vector<Rational>>> invert_exact(
    std::vector<std::vector<Rational>> a) {
  const std::size_t n = a.size();
  std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return std::nullopt;
    std::swap(a[p], a[c]);
    std::swap(inv[p], inv[c]);
    const Rational scale = Rational(1) / a[c][c];
    for (std::size_t j = 0; j < n; ++j) {
      a[c][j] *= scale;
      inv[c][j] *= scale;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      const Rational f = a[r][c];
      for (std::size_t j = 0; j < n; ++j) {
        a[r][j] -= f * a[c][j];
        inv[r][j] -= f * inv[c][j];
      }
    }
  }
  return inv;
}

Lemma1Result lemma1_within(const PointSet& ps, const std::vector<Index>& live,
                           Index interior_id) {
  const int d = ps.dim();
  std::vector<Index> others;
  others.reserve(live.size() - 1);
  for (Index id : live)
    if (id != interior_id) others.push_back(id);

  const auto combo = point_in_hull(ps, interior_id, others);
  if (!combo)
    throw ConstraintError("interior point required",
                          "id " + std::to_string(interior_id) + " is extreme");
  if (combo->support.size() != static_cast<std::size_t>(d) + 1)
    throw ConstraintError("general position required",
                          "containing simplex degenerated to " +
                              std::to_string(combo->support.size()) + " points");

  std::vector<Index> w_ids;
  for (const auto& [id, coeff] : combo->support) w_ids.push_back(id);
  std::sort(w_ids.begin(), w_ids.end());

  // Cone C_j is spanned by the negated simplex directions with w_j dropped.
  std::vector<ConeBasis> cones(d + 1);
  for (int j = 0; j <= d; ++j) {
    std::vector<std::vector<Rational>> m(d, std::vector<Rational>(d));
    ConeBasis& cone = cones[j];
    int col = 0;
    for (int i = 0; i <= d; ++i) {
      if (i == j) continue;
      cone.generators.push_back(w_ids[i]);
      for (int row = 0; row < d; ++row)
        m[row][col] = ps.coord(interior_id, row) - ps.coord(w_ids[i], row);
      ++col;
    }
    auto inv = invert_exact(std::move(m));
    if (!inv)
      throw ConstraintError("general position required",
                            "degenerate cone basis in lemma 1");
    cone.inverse = std::move(*inv);
  }

  // Assign every remaining point to the first cone whose coefficients are
  // all nonnegative; w_j itself always belongs to C_j.
  std::vector<std::vector<Index>> members(d + 1);
  for (int j = 0; j <= d; ++j) members[j].push_back(w_ids[j]);
  std::vector<Rational> v(d), mu(d);
  for (Index q : live) {
    if (q == interior_id) continue;
    if (std::find(w_ids.begin(), w_ids.end(), q) != w_ids.end()) continue;
    for (int row = 0; row < d; ++row)
      v[row] = ps.coord(q, row) - ps.coord(interior_id, row);
    bool assigned = false;
    for (int j = 0; j <= d && !assigned; ++j) {
      bool nonneg = true;
      for (int r = 0; r < d && nonneg; ++r) {
        Rational acc(0);
        for (int c2 = 0; c2 < d; ++c2) acc += cones[j].inverse[r][c2] * v[c2];
        mu[r] = acc;
        if (acc < 0) nonneg = false;
      }
      if (nonneg) {
        members[j].push_back(q);
        assigned = true;
      }
    }
    if (!assigned)
      throw std::logic_error("cones failed to cover a point in lemma 1");
  }

  int best = 0;
  for (int j = 1; j <= d; ++j)
    if (members[j].size() > members[best].size()) best = j;

  // Pigeonhole floor: the d+1 cones absorb all n_live - 1 other points.
  const std::size_t n_live = live.size();
  if (Rational(BigInt(members[best].size())) <
      Rational(BigInt(n_live) - 1, BigInt(d + 1)))
    throw std::logic_error("lemma 1 cone bound violated");

  // Exact non-convexity re-check: p must lie in conv(generators(C_j), q)
  // for every member q of the chosen cone.
  for (Index q : members[best]) {
    std::vector<Index> simplex = cones[best].generators;
    simplex.push_back(q);
    const auto bary = affine_barycentric(ps, interior_id, simplex);
    if (!bary)
      throw std::logic_error("lemma 1 member lost containment (span)");
    for (const Rational& c2 : *bary)
      if (c2 < 0)
        throw std::logic_error("lemma 1 member lost containment (sign)");
  }

  Lemma1Result result;
  result.simplex_w = w_ids;
  result.cone_id = best;
  result.cone_members = members[best];
  std::sort(result.cone_members.begin(), result.cone_members.end());
  return result;
}

}  // namespace

namespace {

// The Lemma-2 witness simplex: the chosen cone's d generators plus the
// interior point itself (every conflict point q puts p inside
// conv(generators + {q}), so witness + {q} is never in convex position).
std::vector<Index> cone_witness(const Lemma1Result& lemma1, Index interior_id) {
  std::vector<Index> witness;
  for (std::size_t i = 0; i < lemma1.simplex_w.size(); ++i)
    if (static_cast<int>(i) != lemma1.cone_id)
      witness.push_back(lemma1.simplex_w[i]);
  witness.push_back(interior_id);
  std::sort(witness.begin(), witness.end());
  return witness;
}

}  // namespace

Lemma1Result lemma1_verify(const PointSet& ps, Index interior_id) {
  std::vector<Index> live(ps.size());
  std::iota(live.begin(), live.end(), Index{0});
  return lemma1_within(ps, live, interior_id);
}

Lemma2Construction lemma2_construct(const PointSet& ps, const Rational& epsilon) {
  const Index n = ps.size();
  const int d = ps.dim();
  const std::uint64_t k =
      floor_rational(epsilon * BigInt(n) / BigInt(d + 1)).convert_to<std::uint64_t>();
  if (k < 1)
    throw ConstraintError("k >= 1", "epsilon n/(d+1) < 1");

  Lemma2Construction out;
  out.k = k;
  std::vector<Index> live(n);
  std::iota(live.begin(), live.end(), Index{0});
  std::vector<char> used(n, 0);

  for (std::uint64_t round = 0; round < k; ++round) {
    // Lowest-index interior point of the surviving set.
    std::optional<Index> interior;
    std::vector<Index> others(live.size() - 1);
    for (Index candidate : live) {
      std::size_t at = 0;
      for (Index id : live)
        if (id != candidate) others[at++] = id;
      if (point_in_hull(ps, candidate, others)) {
        interior = candidate;
        break;
      }
    }
    if (!interior)
      throw ConstraintError(
          "interior point required",
          "survivors became convex after " + std::to_string(round) +
              " of " + std::to_string(k) + " rounds; input not epsilon-far");

    const Lemma1Result lemma1 = lemma1_within(ps, live, *interior);

    std::vector<Index> witness = cone_witness(lemma1, *interior);
    std::vector<Index> conflict = lemma1.cone_members;

    // Property checks (exact):
    if (witness.size() != static_cast<std::size_t>(d) + 1)
      throw std::logic_error("lemma 2 witness size");
    for (Index id : witness) {
      if (used[id]) throw std::logic_error("lemma 2 witnesses overlap");
      used[id] = 1;
    }
    for (Index q : conflict)
      if (std::find(witness.begin(), witness.end(), q) != witness.end())
        throw std::logic_error("lemma 2 conflict set touches witness");

    const Rational floor_bound =
        Rational(BigInt(live.size()) - 1, BigInt(d + 1));
    const Rational global_bound =
        Rational(BigInt(n), BigInt(d + 1)) - Rational(BigInt(k));
    const Rational eps_bound =
        (Rational(1) - epsilon) * Rational(BigInt(n), BigInt(d + 1));
    const Rational usize(BigInt(conflict.size()));
    if (usize < floor_bound)
      throw std::logic_error("lemma 2 per-round bound violated");
    if (usize < global_bound)
      throw std::logic_error("lemma 2 global bound violated");
    if (usize < eps_bound) {
      if (usize >= ceil_rational(eps_bound) - 1)
        out.warnings.push_back("round " + std::to_string(round) +
                               ": |U| sits on the (1-eps)n/(d+1) boundary");
      else
        throw std::logic_error("lemma 2 epsilon bound violated");
    }

    out.witness_sets.push_back(std::move(witness));
    out.conflict_sets.push_back(std::move(conflict));

    std::vector<Index> next;
    next.reserve(live.size() - (d + 1));
    for (Index id : live)
      if (!used[id]) next.push_back(id);
    live = std::move(next);
  }
  return out;
}

// --- Lemma 3 ---------------------------------------------------------------

LemmaScenario make_lemma_scenario(std::uint64_t n, std::uint64_t k,
                                  std::uint64_t ell, std::uint64_t s) {
  if (n < 1024) throw ConstraintError("n >= 2^10", "n = " + std::to_string(n));
  if (k < 10) throw ConstraintError("k >= 10", "k = " + std::to_string(k));
  if (ell < 3) throw ConstraintError("3 <= ell", "ell = " + std::to_string(ell));
  if (ell * 32 > n)
    throw ConstraintError("ell <= n/32", "ell = " + std::to_string(ell));
  if (k * ell > n)
    throw ConstraintError("k*ell <= n", std::to_string(k) + "*" + std::to_string(ell));
  if (s > n) throw ConstraintError("s <= n", "s = " + std::to_string(s));
  if (s < minimal_far_sample_size(n, k, ell))
    throw ConstraintError("s >= s0",
                          "s = " + std::to_string(s) + " < ceil(s0) = " +
                              std::to_string(minimal_far_sample_size(n, k, ell)));

  LemmaScenario scenario;
  scenario.n = n;
  scenario.k = k;
  scenario.ell = ell;
  scenario.s = s;
  for (std::uint64_t i = 0; i < k; ++i) {
    std::vector<Index> w(ell);
    std::iota(w.begin(), w.end(), static_cast<Index>(i * ell));
    scenario.witness_sets.push_back(std::move(w));
  }
  return scenario;
}

BoundFactors lemma3_factors(const LemmaScenario& scenario) {
  BoundFactors f;
  const Rational ratio(BigInt(scenario.s) - BigInt(scenario.ell),
                       BigInt(scenario.n) - BigInt(scenario.ell));
  f.factor1 = Rational(BigInt(scenario.k)) *
              pow_rational(ratio, static_cast<unsigned long>(scenario.ell));
  f.factor2 = Rational(1) - f.factor1 / 2;
  return f;
}

MonteCarloEstimate lemma3_monte_carlo(const LemmaScenario& scenario,
                                      std::uint64_t trials, Seed seed) {
  MonteCarloEstimate est;
  est.trials = trials;
  std::vector<std::uint32_t> stamp(scenario.n, 0);
  std::uint32_t generation = 0;
  for (std::uint64_t t = 0; t < trials; ++t) {
    const SampleRecord sample = random_subset(
        static_cast<Index>(scenario.n), static_cast<std::uint32_t>(scenario.s),
        split_seed(seed, t));
    ++generation;
    for (Index id : sample.indices) stamp[id] = generation;
    for (const auto& witness : scenario.witness_sets) {
      bool inside = true;
      for (Index id : witness)
        if (stamp[id] != generation) {
          inside = false;
          break;
        }
      if (inside) {
        ++est.hits;
        break;
      }
    }
  }
  est.fraction = trials == 0 ? 0.0
                             : static_cast<double>(est.hits) /
                                   static_cast<double>(trials);
  return est;
}

OldBoundReport old_lemma34_counterexample() {
  OldBoundReport report;
  report.n = 256;
  report.k = 8;
  report.ell = 8;

  // Old bound: s_old = ceil(2n / (2k)^(1/ell)), i.e. the least t with
  // t^ell * 2k >= (2n)^ell.
  std::uint64_t t = 1;
  const BigInt target = pow_bigint(BigInt(2 * report.n), report.ell);
  while (pow_bigint(BigInt(t), report.ell) * 2 * report.k < target) ++t;
  report.s_old = t;
  report.s_old_exceeds_n = report.s_old > report.n;

  report.s_fixed = minimal_far_sample_size(report.n, report.k, report.ell);

  LemmaScenario scenario;
  scenario.n = report.n;
  scenario.k = report.k;
  scenario.ell = report.ell;
  scenario.s = report.s_fixed;
  report.factor1 = lemma3_factors(scenario).factor1;
  report.factor2_old = Rational(1) - report.factor1;
  report.product_below_quarter =
      report.factor1 * report.factor2_old < Rational(1, 4);
  return report;
}

}  // namespace convextest
