// Strict foremost temporal walks and the reach/boundary structure they induce
// on monotonically growing paths and linear forests.

#pragma once

#include <compare>
#include <optional>
#include <vector>

#include "tgames/temporal_graph.hpp"

namespace tgames {

/// Arrival time of a strict foremost walk, or infinity. Infinity compares
/// greater than every finite arrival.
class Arrival {
 public:
  static constexpr Arrival infinite() { return Arrival(); }
  constexpr explicit Arrival(int steps) : steps_(steps) {}

  constexpr bool is_finite() const { return steps_.has_value(); }
  /// Throws std::bad_optional_access when infinite.
  constexpr int steps() const { return steps_.value(); }

  friend constexpr bool operator==(const Arrival&, const Arrival&) = default;
  friend constexpr std::strong_ordering operator<=>(const Arrival& a, const Arrival& b) {
    if (a.is_finite() != b.is_finite()) {
      return a.is_finite() ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    if (!a.is_finite()) return std::strong_ordering::equal;
    return *a.steps_ <=> *b.steps_;
  }

 private:
  constexpr Arrival() = default;
  std::optional<int> steps_;
};

struct TemporalDistanceRow {
  Vertex source = 0;
  std::vector<Arrival> arrival;  // arrival[v - 1]

  Arrival at(Vertex v) const { return arrival.at(v - 1); }
};

/// td(u, v). Steps after the lifetime reuse the last layer.
Arrival temporal_distance(const TemporalGraph& g, Vertex u, Vertex v);

/// td(u, .) for every target in one layered sweep followed by a breadth-first
/// search on the last layer.
TemporalDistanceRow all_distances(const TemporalGraph& g, Vertex u);

/// Vertices [lo, hi] reached from a source until step `horizon`.
struct ReachInterval {
  Vertex lo = 0;
  Vertex hi = 0;
  int horizon = 0;

  int size() const { return hi - lo + 1; }
  bool contains(Vertex x) const { return lo <= x && x <= hi; }
  bool contains(const ReachInterval& o) const { return lo <= o.lo && o.hi <= hi; }
  friend bool operator==(const ReachInterval&, const ReachInterval&) = default;
};

/// Reach queries on a monotonically growing linear forest whose edges are all
/// of the form {i, i+1}. Each query costs O(horizon).
class ForestReach {
 public:
  /// Throws GraphError unless g is growing, a linear forest, and ordered.
  explicit ForestReach(const TemporalGraph& g);

  int vertex_count() const { return n_; }
  int lifetime() const { return lifetime_; }

  /// Vertices reached within `horizon` steps; edges present at the lifetime stay present.
  ReachInterval interval(Vertex v, int horizon) const;
  ReachInterval interval(Vertex v) const { return interval(v, lifetime_); }

 private:
  bool present(Vertex left, int t) const;

  int n_;
  int lifetime_;
  std::vector<std::optional<int>> first_;  // first_[i]: first layer with {i, i+1}
};

ReachInterval reachable_interval(const TemporalGraph& g, Vertex v, int horizon);

enum class Side { left, right };

/// A boundary interval [lo, hi] (inclusive). Left intervals are [l, l'[ between
/// consecutive left boundaries, right intervals are ]r, r'].
struct BoundaryInterval {
  Vertex lo = 0;
  Vertex hi = 0;
  Side side = Side::left;

  int size() const { return hi - lo + 1; }
  bool contains(Vertex x) const { return lo <= x && x <= hi; }
  friend bool operator==(const BoundaryInterval&, const BoundaryInterval&) = default;
};

struct BoundaryDecomposition {
  Vertex vertex = 0;
  std::vector<Vertex> left_boundaries;   // ascending, contains 1 and vertex
  std::vector<Vertex> right_boundaries;  // ascending, contains vertex and n
  std::vector<BoundaryInterval> left_intervals;
  std::vector<BoundaryInterval> right_intervals;

  /// J_v(w): the interval containing w. Throws std::invalid_argument for w == vertex.
  BoundaryInterval interval_of(Vertex w) const;
  bool is_left_boundary(Vertex b) const;
  bool is_right_boundary(Vertex b) const;
};

/// Boundary machinery for one monotonically growing, ordered temporal path.
class PathBoundaries {
 public:
  /// Throws GraphError unless g is a growing path with edges {i, i+1}.
  explicit PathBoundaries(const TemporalGraph& g);

  int vertex_count() const { return n_; }
  /// td(v, .) via the closed-form sweep along the path, O(n).
  std::vector<int> distances_from(Vertex v) const;
  BoundaryDecomposition decompose(Vertex v) const;

 private:
  int n_;
  std::vector<int> first_;  // first_[i]: first layer with {i, i+1}, i in [1, n-1]
};

BoundaryDecomposition boundaries(const TemporalGraph& g, Vertex v);

}  // namespace tgames
