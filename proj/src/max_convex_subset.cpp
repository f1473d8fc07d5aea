#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "convextest/interval.hpp"
#include "convextest/oracles.hpp"
#include "convextest/predicates.hpp"

namespace convextest {

// Largest subset in convex position, d = 2, general position.
//
// Every convex polygon has a unique lexicographically (y, x)-smallest vertex
// b, and traversed counterclockwise from b its directed edges have strictly
// increasing direction angles within [0, 2pi): the first edge leaves b into
// the upper half-plane, the closing edge returns from above, and each strict
// left turn advances the angle by less than pi. Conversely, any closed chain
// built from angle-sorted edges with strict left turns and one wrap is a
// simple convex polygon. So: sort all n(n-1) directed edges by angle once,
// then for every candidate bottom b scan that order, growing chains over
// vertices lex-above b. For each vertex u a monotone deque holds the chains
// arriving at u, keyed by incoming-edge angle; an outgoing edge u->v may
// extend exactly those whose incoming direction lies within a left turn
// (cross > 0), which is a sliding window in arrival order. O(n^2) per
// bottom, O(n^3) total, with doubles screening every sign and exact
// rationals deciding the close calls.

namespace {

struct DirectedEdge {
  std::uint16_t u, v;
};

struct DequeEntry {
  std::int32_t edge;  // index into the sorted edge array
  std::int32_t val;   // vertices on the best chain ending with that edge
};

class MaxConvexSearch {
 public:
  explicit MaxConvexSearch(const PointSet& ps) : ps_(ps), n_(ps.size()) {
    build_ranks();
    build_edges();
  }

  MaxConvexSubset run() {
    MaxConvexSubset best;
    best.size = std::min<std::uint32_t>(n_, 2);
    std::vector<Index> trivial;
    for (Index i = 0; i < best.size; ++i) trivial.push_back(i);
    best.ids = trivial;
    if (n_ < 3) return best;

    deques_.assign(n_, {});
    heads_.assign(n_, 0);

    std::uint32_t best_size = 0;
    Index best_bottom = 0;
    for (Index b = 0; b < n_; ++b) {
      const std::uint32_t found = scan_bottom(b, nullptr, nullptr);
      if (found > best_size) {
        best_size = found;
        best_bottom = b;
      }
    }
    if (best_size < 3) {
      // General position with n >= 3 always admits a triangle.
      throw ConstraintError("general position required",
                            "no convex cycle found");
    }

    std::vector<std::int32_t> pred(edges_.size(), -1);
    std::int32_t closing_pred = -1;
    const std::uint32_t again = scan_bottom(best_bottom, &pred, &closing_pred);
    if (again != best_size || closing_pred < 0)
      throw std::logic_error("max_convex_subset reconstruction mismatch");

    std::vector<Index> ids;
    ids.push_back(best_bottom);
    for (std::int32_t e = closing_pred; e >= 0; e = pred[e])
      ids.push_back(edges_[e].v);
    if (ids.size() != best_size)
      throw std::logic_error("max_convex_subset chain length mismatch");
    std::sort(ids.begin(), ids.end());

    best.size = best_size;
    best.ids = std::move(ids);
    return best;
  }

 private:
  // Lex (y, x) ranks, exact.
  void build_ranks() {
    std::vector<Index> order(n_);
    std::iota(order.begin(), order.end(), Index{0});
    std::sort(order.begin(), order.end(), [&](Index a, Index b) {
      if (ps_.coord(a, 1) != ps_.coord(b, 1)) return ps_.coord(a, 1) < ps_.coord(b, 1);
      if (ps_.coord(a, 0) != ps_.coord(b, 0)) return ps_.coord(a, 0) < ps_.coord(b, 0);
      return a < b;
    });
    rank_.assign(n_, 0);
    for (Index i = 0; i < n_; ++i) rank_[order[i]] = static_cast<std::uint16_t>(i);
  }

  // Exact sign of the y-difference, then x-difference, of edge u->v packed
  // into the half-plane bit: 0 for angles in [0, pi), 1 for [pi, 2pi).
  std::uint8_t edge_half(Index u, Index v) const {
    const Interval dy = ps_.coord_interval(v, 1) - ps_.coord_interval(u, 1);
    bool certain = false;
    int s = interval_sign(dy, certain);
    if (!certain || s == 0) {
      const Rational exact = ps_.coord(v, 1) - ps_.coord(u, 1);
      s = exact > 0 ? 1 : (exact < 0 ? -1 : 0);
    }
    if (s > 0) return 0;
    if (s < 0) return 1;
    // Horizontal edge: direction decided by x (points are distinct).
    return ps_.coord(v, 0) > ps_.coord(u, 0) ? 0 : 1;
  }

  // Sign of cross(vec(a), vec(b)) for directed edges a, b: zero means
  // parallel (same or opposite direction).
  int edge_cross_sign(const DirectedEdge& a, const DirectedEdge& b) const {
    const Interval ax = ps_.coord_interval(a.v, 0) - ps_.coord_interval(a.u, 0);
    const Interval ay = ps_.coord_interval(a.v, 1) - ps_.coord_interval(a.u, 1);
    const Interval bx = ps_.coord_interval(b.v, 0) - ps_.coord_interval(b.u, 0);
    const Interval by = ps_.coord_interval(b.v, 1) - ps_.coord_interval(b.u, 1);
    const Interval cross = ax * by - ay * bx;
    bool certain = false;
    const int s = interval_sign(cross, certain);
    if (certain) return s;
    const Rational ex = (ps_.coord(a.v, 0) - ps_.coord(a.u, 0)) *
                            (ps_.coord(b.v, 1) - ps_.coord(b.u, 1)) -
                        (ps_.coord(a.v, 1) - ps_.coord(a.u, 1)) *
                            (ps_.coord(b.v, 0) - ps_.coord(b.u, 0));
    return ex > 0 ? 1 : (ex < 0 ? -1 : 0);
  }

  void build_edges() {
    edges_.reserve(static_cast<std::size_t>(n_) * (n_ - 1));
    for (Index u = 0; u < n_; ++u)
      for (Index v = 0; v < n_; ++v)
        if (u != v)
          edges_.push_back({static_cast<std::uint16_t>(u),
                            static_cast<std::uint16_t>(v)});

    halves_.resize(edges_.size());
    for (std::size_t i = 0; i < edges_.size(); ++i)
      halves_[i] = edge_half(edges_[i].u, edges_[i].v);

    std::vector<std::uint32_t> idx(edges_.size());
    std::iota(idx.begin(), idx.end(), 0u);
    std::sort(idx.begin(), idx.end(), [&](std::uint32_t a, std::uint32_t b) {
      if (halves_[a] != halves_[b]) return halves_[a] < halves_[b];
      const int s = edge_cross_sign(edges_[a], edges_[b]);
      if (s != 0) return s > 0;  // positive cross: a angularly before b
      // Parallel within the same half-plane: any fixed tie-break works.
      if (edges_[a].u != edges_[b].u) return edges_[a].u < edges_[b].u;
      return edges_[a].v < edges_[b].v;
    });
    std::vector<DirectedEdge> sorted(edges_.size());
    for (std::size_t i = 0; i < idx.size(); ++i) sorted[i] = edges_[idx[i]];
    edges_ = std::move(sorted);
    halves_.clear();
    halves_.shrink_to_fit();
  }

  // Cross sign between a stored incoming edge and the current outgoing edge
  // at their shared vertex. An exact zero with three distinct endpoints is a
  // collinear triple, i.e. a broken precondition.
  int turn_sign(std::int32_t in_edge, const DirectedEdge& out) const {
    const DirectedEdge& in = edges_[in_edge];
    const int s = edge_cross_sign(in, out);
    if (s == 0 && in.u != out.v)
      throw ConstraintError("general position required",
                            "collinear triple " + std::to_string(in.u) + "," +
                                std::to_string(in.v) + "," +
                                std::to_string(out.v));
    return s;
  }

  // One full angular sweep for bottom b. Returns the best polygon size (0 if
  // none closes); optionally records predecessors for reconstruction.
  std::uint32_t scan_bottom(Index b, std::vector<std::int32_t>* pred,
                            std::int32_t* closing_pred) {
    for (Index i = 0; i < n_; ++i) {
      deques_[i].clear();
      heads_[i] = 0;
    }
    const std::uint16_t rb = rank_[b];
    std::uint32_t best = 0;

    const std::int32_t edge_count = static_cast<std::int32_t>(edges_.size());
    for (std::int32_t ie = 0; ie < edge_count; ++ie) {
      const DirectedEdge e = edges_[ie];
      if (rank_[e.u] < rb || rank_[e.v] < rb) continue;

      if (e.u == b) {
        deques_[e.v].push_back({ie, 2});
        trim_after_push(e.v);
        continue;
      }

      auto& dq = deques_[e.u];
      std::size_t& head = heads_[e.u];
      while (head < dq.size() && turn_sign(dq[head].edge, e) <= 0) ++head;
      if (head >= dq.size()) continue;  // no chain can continue through u
      const DequeEntry& in = dq[head];

      if (e.v == b) {
        const auto closed = static_cast<std::uint32_t>(in.val);
        if (closed > best) {
          best = closed;
          if (closing_pred) *closing_pred = in.edge;
        }
        continue;
      }

      const std::int32_t val = in.val + 1;
      if (pred) (*pred)[ie] = in.edge;
      deques_[e.v].push_back({ie, val});
      trim_after_push(e.v);
    }
    return best;
  }

  // Keep deque values strictly decreasing from the active head: a newer
  // entry expires later (its angular window ends later), so older entries
  // with no larger value can never win a future query.
  void trim_after_push(Index v) {
    auto& dq = deques_[v];
    const std::size_t head = heads_[v];
    const DequeEntry last = dq.back();
    std::size_t tail = dq.size() - 1;
    while (tail > head && dq[tail - 1].val <= last.val) --tail;
    dq[tail] = last;
    dq.resize(tail + 1);
  }

  const PointSet& ps_;
  const Index n_;
  std::vector<std::uint16_t> rank_;
  std::vector<DirectedEdge> edges_;
  std::vector<std::uint8_t> halves_;
  std::vector<std::vector<DequeEntry>> deques_;
  std::vector<std::size_t> heads_;
};

}  // namespace

MaxConvexSubset max_convex_subset_2d(const PointSet& ps) {
  if (ps.dim() != 2)
    throw ConstraintError("d == 2", "d = " + std::to_string(ps.dim()));
  if (ps.size() > 65000)
    throw ConstraintError("n <= 65000", "n = " + std::to_string(ps.size()));
  return MaxConvexSearch(ps).run();
}

}  // namespace convextest
