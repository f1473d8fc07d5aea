#include "convextest/convexity.hpp"

#include <algorithm>
#include <stdexcept>

#include "convextest/interval.hpp"

namespace convextest {

namespace {

// Phase-1 revised simplex deciding p in conv{candidates} over exact
// rationals. Equality rows: one per coordinate plus the affine (all-ones)
// row; artificial variables give the starting basis. Pricing is screened
// with cached doubles and certified with intervals / exact dots, so every
// pivot decision equals the one a fully exact implementation would make.
// Bland's rule (lowest-index entering, lowest-variable leaving) takes over
// after a degeneracy stall and guarantees termination.
class HullFeasibility {
 public:
  HullFeasibility(const PointSet& ps, Index target,
                  std::span<const Index> candidates)
      : ps_(ps), cand_(candidates), d_(ps.dim()), rows_(ps.dim() + 1),
        m_(candidates.size()) {
    sigma_.assign(rows_, 1);
    rhs_.resize(rows_);
    for (int j = 0; j < d_; ++j) {
      rhs_[j] = ps_.coord(target, j);
      if (rhs_[j] < 0) {
        sigma_[j] = -1;
        rhs_[j] = -rhs_[j];
      }
    }
    rhs_[d_] = 1;

    binv_.assign(static_cast<std::size_t>(rows_) * rows_, Rational(0));
    for (int r = 0; r < rows_; ++r) binv(r, r) = 1;
    xb_ = rhs_;
    basis_.resize(rows_);
    for (int r = 0; r < rows_; ++r) basis_[r] = m_ + r;  // artificials
    in_basis_.assign(m_, false);
    y_.resize(rows_);
    ydbl_.resize(rows_);
    yint_.resize(rows_);
    w_.resize(rows_);
  }

  std::optional<HullCombination> solve() {
    if (m_ == 0) return std::nullopt;
    std::size_t degenerate_streak = 0;
    std::size_t iterations = 0;
    const std::size_t iteration_cap = 10000 + 50 * static_cast<std::size_t>(m_);

    while (true) {
      if (objective_is_zero()) return extract();
      compute_pricing_vector();

      const std::ptrdiff_t enter = bland_ ? pick_entering_bland()
                                          : pick_entering_screened();
      if (enter < 0) {
        // Both pricing modes end with the rigorous ascending scan (interval
        // rejection is certified, the rest exactly confirmed), so this is an
        // exact optimality proof: the artificial objective is positive at
        // its minimum and p lies outside the hull.
        return std::nullopt;
      }

      const bool degenerate = pivot(static_cast<std::size_t>(enter));
      degenerate_streak = degenerate ? degenerate_streak + 1 : 0;
      if (degenerate_streak > 30) bland_ = true;
      if (++iterations > iteration_cap)
        throw std::logic_error("simplex iteration cap exceeded");
    }
  }

 private:
  Rational& binv(int r, int c) { return binv_[static_cast<std::size_t>(r) * rows_ + c]; }

  bool is_artificial(int row) const {
    return basis_[row] >= static_cast<std::ptrdiff_t>(m_);
  }

  bool objective_is_zero() const {
    for (int r = 0; r < rows_; ++r)
      if (is_artificial(r) && xb_[r] != 0) return false;
    return true;
  }

  // y = c_B^T B^-1 with the row signs folded in, plus double / interval
  // shadows of it. Structural column i prices as
  //   reduced_cost(i) = -(sum_j y[j] sigma_j q_i[j] + y[d]),
  // so "improving" means the folded dot is positive.
  void compute_pricing_vector() {
    for (int j = 0; j < rows_; ++j) {
      Rational acc(0);
      for (int r = 0; r < rows_; ++r)
        if (is_artificial(r)) acc += binv(r, j);
      y_[j] = (sigma_[j] < 0) ? Rational(-acc) : acc;
      ydbl_[j] = rational_to_double(y_[j]);
      double lo, hi;
      rational_to_interval(y_[j], lo, hi);
      yint_[j] = {lo, hi};
    }
  }

  double score(std::size_t i) const {
    const Index id = cand_[i];
    double acc = ydbl_[d_];
    for (int j = 0; j < d_; ++j) acc += ydbl_[j] * ps_.coord_double(id, j);
    return acc;
  }

  Interval interval_dot(std::size_t i) const {
    const Index id = cand_[i];
    Interval acc = yint_[d_];
    for (int j = 0; j < d_; ++j) acc = acc + yint_[j] * ps_.coord_interval(id, j);
    return acc;
  }

  bool exact_improving(std::size_t i) const {
    const Index id = cand_[i];
    Rational acc = y_[d_];
    for (int j = 0; j < d_; ++j) acc += y_[j] * ps_.coord(id, j);
    return acc > 0;
  }

  // Heuristic: verify the best few double scores; if none survives, fall
  // back to the rigorous ascending scan (which doubles as the exact
  // optimality proof and as Bland's entering rule).
  std::ptrdiff_t pick_entering_screened() {
    constexpr int kTop = 3;
    std::ptrdiff_t top[kTop] = {-1, -1, -1};
    double top_score[kTop] = {0.0, 0.0, 0.0};
    for (std::size_t i = 0; i < m_; ++i) {
      if (in_basis_[i]) continue;
      const double s = score(i);
      if (s <= 0.0) continue;
      for (int t = 0; t < kTop; ++t) {
        if (top[t] < 0 || s > top_score[t]) {
          for (int u = kTop - 1; u > t; --u) {
            top[u] = top[u - 1];
            top_score[u] = top_score[u - 1];
          }
          top[t] = static_cast<std::ptrdiff_t>(i);
          top_score[t] = s;
          break;
        }
      }
    }
    for (int t = 0; t < kTop; ++t)
      if (top[t] >= 0 && exact_improving(static_cast<std::size_t>(top[t])))
        return top[t];
    return pick_entering_bland();
  }

  std::ptrdiff_t pick_entering_bland() const {
    for (std::size_t i = 0; i < m_; ++i) {
      if (in_basis_[i]) continue;
      const Interval v = interval_dot(i);
      if (v.hi <= 0.0) continue;  // certified non-improving
      if (exact_improving(i)) return static_cast<std::ptrdiff_t>(i);
    }
    return -1;
  }

  // Pivots column `enter` into the basis; returns whether the step was
  // degenerate (theta == 0).
  bool pivot(std::size_t enter) {
    const Index id = cand_[enter];
    for (int r = 0; r < rows_; ++r) {
      Rational acc = binv(r, d_);  // affine-row coefficient is always +1
      for (int j = 0; j < d_; ++j) {
        Rational c = ps_.coord(id, j);
        if (sigma_[j] < 0) c = -c;
        acc += binv(r, j) * c;
      }
      w_[r] = acc;
    }

    int leave = -1;
    for (int r = 0; r < rows_; ++r) {
      if (w_[r] <= 0) continue;
      if (leave < 0) {
        leave = r;
        continue;
      }
      // Compare xb[r]/w[r] with xb[leave]/w[leave] by cross-multiplication.
      const Rational lhs = xb_[r] * w_[leave];
      const Rational rhs = xb_[leave] * w_[r];
      if (lhs < rhs || (lhs == rhs && basis_[r] < basis_[leave])) leave = r;
    }
    if (leave < 0)
      throw std::logic_error("phase-1 simplex cannot be unbounded");

    const Rational theta = xb_[leave] / w_[leave];
    const bool degenerate = (theta == 0);

    const Rational pivot_value = w_[leave];
    for (int c = 0; c < rows_; ++c) binv(leave, c) /= pivot_value;
    xb_[leave] = theta;
    for (int r = 0; r < rows_; ++r) {
      if (r == leave || w_[r] == 0) continue;
      const Rational factor = w_[r];
      for (int c = 0; c < rows_; ++c) binv(r, c) -= factor * binv(leave, c);
      xb_[r] -= factor * theta;
    }

    if (!is_artificial(leave))
      in_basis_[static_cast<std::size_t>(basis_[leave])] = false;
    basis_[leave] = static_cast<std::ptrdiff_t>(enter);
    in_basis_[enter] = true;
    return degenerate;
  }

  std::optional<HullCombination> extract() const {
    HullCombination combo;
    for (int r = 0; r < rows_; ++r)
      if (!is_artificial(r) && xb_[r] > 0)
        combo.support.emplace_back(cand_[static_cast<std::size_t>(basis_[r])],
                                   xb_[r]);
    std::sort(combo.support.begin(), combo.support.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return combo;
  }

  const PointSet& ps_;
  std::span<const Index> cand_;
  int d_, rows_;
  std::size_t m_;
  std::vector<int> sigma_;
  std::vector<Rational> rhs_, xb_, y_, w_;
  std::vector<Rational> binv_;
  std::vector<std::ptrdiff_t> basis_;  // structural i in [0,m), artificial m+r
  std::vector<bool> in_basis_;
  std::vector<double> ydbl_;
  std::vector<Interval> yint_;
  bool bland_ = false;
};

}  // namespace

std::optional<HullCombination> point_in_hull(const PointSet& ps, Index target,
                                             std::span<const Index> candidates) {
  for (Index c : candidates)
    if (c == target)
      throw std::invalid_argument("target cannot be its own hull candidate");

  auto combo = HullFeasibility(ps, target, candidates).solve();
  if (!combo) return std::nullopt;

  // Exact sanity re-check of the certificate before handing it out.
  Rational total(0);
  std::vector<Rational> acc(ps.dim(), Rational(0));
  for (const auto& [id, coeff] : combo->support) {
    if (coeff < 0) throw std::logic_error("negative simplex coefficient");
    total += coeff;
    for (int j = 0; j < ps.dim(); ++j) acc[j] += coeff * ps.coord(id, j);
  }
  if (total != 1) throw std::logic_error("hull combination does not sum to 1");
  for (int j = 0; j < ps.dim(); ++j)
    if (acc[j] != ps.coord(target, j))
      throw std::logic_error("hull combination misses the target");
  return combo;
}

ConvexityResult convex_position_test(const PointSet& ps) {
  const Index n = ps.size();
  const int d = ps.dim();
  ConvexityResult result;

  std::vector<Index> others(n > 0 ? n - 1 : 0);
  for (Index target = 0; target < n; ++target) {
    std::size_t at = 0;
    for (Index i = 0; i < n; ++i)
      if (i != target) others[at++] = i;

    auto combo = point_in_hull(ps, target, others);
    if (!combo) continue;

    NegativeWitness w;
    w.interior_id = target;
    w.coefficients = combo->support;
    w.ids.push_back(target);
    for (const auto& [id, coeff] : combo->support) w.ids.push_back(id);
    // Degenerate inputs can yield a support smaller than d+1; pad with the
    // lowest unused ids (zero coefficient) so the witness names d+2 points
    // whenever that many exist (all of them otherwise).
    const std::size_t want = std::min<std::size_t>(n, static_cast<std::size_t>(d) + 2);
    for (Index filler = 0; w.ids.size() < want && filler < n; ++filler) {
      if (std::find(w.ids.begin(), w.ids.end(), filler) != w.ids.end()) continue;
      w.ids.push_back(filler);
      w.coefficients.emplace_back(filler, Rational(0));
    }
    std::sort(w.ids.begin(), w.ids.end());
    std::sort(w.coefficients.begin(), w.coefficients.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });

    result.in_convex_position = false;
    result.witness = std::move(w);
    return result;
  }
  result.in_convex_position = true;
  return result;
}

bool verify_witness(const PointSet& ps, const NegativeWitness& w) {
  const int d = ps.dim();
  const std::size_t want =
      std::min<std::size_t>(ps.size(), static_cast<std::size_t>(d) + 2);
  if (w.ids.size() != want) return false;
  for (std::size_t i = 0; i < w.ids.size(); ++i) {
    if (w.ids[i] >= ps.size()) return false;
    if (i > 0 && w.ids[i - 1] >= w.ids[i]) return false;
  }
  if (std::find(w.ids.begin(), w.ids.end(), w.interior_id) == w.ids.end())
    return false;
  if (w.coefficients.size() != w.ids.size() - 1) return false;

  Rational total(0);
  std::vector<Rational> acc(d, Rational(0));
  std::vector<Index> seen;
  for (const auto& [id, coeff] : w.coefficients) {
    if (id == w.interior_id) return false;
    if (std::find(w.ids.begin(), w.ids.end(), id) == w.ids.end()) return false;
    if (std::find(seen.begin(), seen.end(), id) != seen.end()) return false;
    seen.push_back(id);
    if (coeff < 0) return false;
    total += coeff;
    for (int j = 0; j < d; ++j) acc[j] += coeff * ps.coord(id, j);
  }
  if (total != 1) return false;
  for (int j = 0; j < d; ++j)
    if (acc[j] != ps.coord(w.interior_id, j)) return false;
  return true;
}

}  // namespace convextest
