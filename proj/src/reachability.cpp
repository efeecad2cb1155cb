#include "tgames/reachability.hpp"

#include <algorithm>
#include <deque>
#include <string>

namespace tgames {

namespace {

void check_vertex(const TemporalGraph& g, Vertex v) {
  if (!g.contains(v)) {
    throw std::out_of_range("vertex " + std::to_string(v) + " out of range [1," +
                            std::to_string(g.vertex_count()) + "]");
  }
}

}  // namespace

TemporalDistanceRow all_distances(const TemporalGraph& g, Vertex u) {
  check_vertex(g, u);
  const int n = g.vertex_count();
  const int tau = g.lifetime();
  constexpr int kUnreached = -1;
  std::vector<int> arrival(n + 1, kUnreached);
  arrival[u] = 0;

  // A vertex reached in step t may only move on in step t + 1.
  for (int t = 1; t <= tau; ++t) {
    for (const auto& e : g.layer(t)) {
      const bool from_u = arrival[e.u] != kUnreached && arrival[e.u] < t;
      const bool from_v = arrival[e.v] != kUnreached && arrival[e.v] < t;
      if (from_u && arrival[e.v] == kUnreached) arrival[e.v] = t;
      if (from_v && arrival[e.u] == kUnreached) arrival[e.u] = t;
    }
  }

  // Steps after the lifetime repeat the last layer: plain BFS from everything
  // reached so far, all of which can move in step tau + 1.
  Adjacency last(n, g.last_layer());
  std::deque<Vertex> queue;
  for (Vertex v = 1; v <= n; ++v) {
    if (arrival[v] != kUnreached) queue.push_back(v);
  }
  std::vector<int> level(n + 1, tau);
  while (!queue.empty()) {
    const Vertex x = queue.front();
    queue.pop_front();
    for (Vertex w : last.neighbors(x)) {
      if (arrival[w] == kUnreached) {
        arrival[w] = level[x] + 1;
        level[w] = level[x] + 1;
        queue.push_back(w);
      }
    }
  }

  TemporalDistanceRow row;
  row.source = u;
  row.arrival.reserve(n);
  for (Vertex v = 1; v <= n; ++v) {
    row.arrival.push_back(arrival[v] == kUnreached ? Arrival::infinite() : Arrival(arrival[v]));
  }
  return row;
}

Arrival temporal_distance(const TemporalGraph& g, Vertex u, Vertex v) {
  check_vertex(g, v);
  if (u == v) {
    check_vertex(g, u);
    return Arrival(0);
  }
  return all_distances(g, u).at(v);
}

// ForestReach ----------------------------------------------------------------

ForestReach::ForestReach(const TemporalGraph& g) : n_(g.vertex_count()), lifetime_(g.lifetime()) {
  const auto labels = classify(g);
  if (!labels.is_growing || !labels.is_linear_forest() || !labels.is_ordered) {
    throw GraphError("reachable intervals need a monotonically growing linear forest with edges {i,i+1}");
  }
  first_ = first_appearances(g);
}

bool ForestReach::present(Vertex left, int t) const {
  const auto& first = first_[left];
  return first.has_value() && *first <= t;
}

ReachInterval ForestReach::interval(Vertex v, int horizon) const {
  if (v < 1 || v > n_) throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
  if (horizon < 0) throw std::invalid_argument("horizon must be non-negative");
  Vertex lo = v;
  Vertex hi = v;
  for (int t = 1; t <= horizon; ++t) {
    const Vertex next_lo = lo > 1 && present(lo - 1, t) ? lo - 1 : lo;
    const Vertex next_hi = hi < n_ && present(hi, t) ? hi + 1 : hi;
    // Past the lifetime nothing new appears, so a stalled frontier stays stalled.
    if (t >= lifetime_ && next_lo == lo && next_hi == hi) break;
    lo = next_lo;
    hi = next_hi;
  }
  return {lo, hi, horizon};
}

ReachInterval reachable_interval(const TemporalGraph& g, Vertex v, int horizon) {
  return ForestReach(g).interval(v, horizon);
}

// Boundaries -----------------------------------------------------------------

BoundaryInterval BoundaryDecomposition::interval_of(Vertex w) const {
  if (w == vertex) throw std::invalid_argument("J_v(w) is undefined for w = v");
  const auto& intervals = w < vertex ? left_intervals : right_intervals;
  auto it = std::upper_bound(intervals.begin(), intervals.end(), w,
                             [](Vertex x, const BoundaryInterval& iv) { return x < iv.lo; });
  if (it == intervals.begin() || !std::prev(it)->contains(w)) {
    throw std::out_of_range("vertex " + std::to_string(w) + " is outside the decomposition");
  }
  return *std::prev(it);
}

bool BoundaryDecomposition::is_left_boundary(Vertex b) const {
  return std::binary_search(left_boundaries.begin(), left_boundaries.end(), b);
}

bool BoundaryDecomposition::is_right_boundary(Vertex b) const {
  return std::binary_search(right_boundaries.begin(), right_boundaries.end(), b);
}

PathBoundaries::PathBoundaries(const TemporalGraph& g) : n_(g.vertex_count()) {
  const auto labels = classify(g);
  if (!labels.is_growing || !labels.is_path() || !labels.is_ordered) {
    throw GraphError("boundaries need a monotonically growing temporal path with edges {i,i+1}");
  }
  const auto first = first_appearances(g);
  first_.assign(n_ + 1, 0);
  for (Vertex i = 1; i < n_; ++i) first_[i] = *first[i];
}

std::vector<int> PathBoundaries::distances_from(Vertex v) const {
  if (v < 1 || v > n_) throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
  std::vector<int> td(n_, 0);
  for (Vertex x = v; x < n_; ++x) td[x] = std::max(td[x - 1] + 1, first_[x]);
  for (Vertex x = v; x > 1; --x) td[x - 2] = std::max(td[x - 1] + 1, first_[x - 1]);
  return td;
}

BoundaryDecomposition PathBoundaries::decompose(Vertex v) const {
  const auto td = distances_from(v);
  BoundaryDecomposition d;
  d.vertex = v;
  for (Vertex b = 1; b <= v; ++b) {
    // The edge entering b from the left is {b-1, b}; it never exists for b = 1.
    if (b == 1 || first_[b - 1] > td[b - 1]) d.left_boundaries.push_back(b);
  }
  for (Vertex b = v; b <= n_; ++b) {
    if (b == n_ || first_[b] > td[b - 1]) d.right_boundaries.push_back(b);
  }
  for (std::size_t i = 0; i + 1 < d.left_boundaries.size(); ++i) {
    d.left_intervals.push_back({d.left_boundaries[i], d.left_boundaries[i + 1] - 1, Side::left});
  }
  for (std::size_t i = 0; i + 1 < d.right_boundaries.size(); ++i) {
    d.right_intervals.push_back({d.right_boundaries[i] + 1, d.right_boundaries[i + 1], Side::right});
  }
  return d;
}

BoundaryDecomposition boundaries(const TemporalGraph& g, Vertex v) { return PathBoundaries(g).decompose(v); }

}  // namespace tgames
