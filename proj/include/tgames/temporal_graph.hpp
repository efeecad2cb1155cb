// Temporal graphs: a fixed vertex set [1,n] and a sequence of edge layers.

#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace tgames {

using Vertex = int;

/// Thrown for malformed graphs and for inputs outside an operation's graph class.
class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Undirected edge stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  static Edge make(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

using EdgeList = std::vector<Edge>;

/// Immutable temporal graph. Vertices are 1..n, layers are 1..lifetime().
/// Every layer is kept sorted, so membership is a binary search.
class TemporalGraph {
 public:
  /// Validates and canonicalizes the layers. Throws GraphError on an endpoint
  /// outside [1,n], a self-loop, a duplicate edge inside a layer, or an empty
  /// layer sequence.
  TemporalGraph(int n, std::vector<EdgeList> layers);

  int vertex_count() const { return n_; }
  int lifetime() const { return static_cast<int>(layers_.size()); }

  /// Edge set E_t for t in [1, lifetime()].
  std::span<const Edge> layer(int t) const;
  /// E_min(t, lifetime()): the layer in effect at step t >= 1.
  std::span<const Edge> effective_layer(int t) const;
  std::span<const Edge> last_layer() const { return layers_.back(); }
  const std::vector<EdgeList>& layers() const { return layers_; }

  bool has_edge(int t, Vertex a, Vertex b) const;

  /// Edge set of the underlying graph (union of all layers), sorted.
  EdgeList underlying_edges() const;

  bool contains(Vertex v) const { return v >= 1 && v <= n_; }

  friend bool operator==(const TemporalGraph&, const TemporalGraph&) = default;

 private:
  int n_;
  std::vector<EdgeList> layers_;
};

/// Compressed adjacency of one static edge set, indexed by vertex 1..n.
class Adjacency {
 public:
  Adjacency(int n, std::span<const Edge> edges);

  std::span<const Vertex> neighbors(Vertex v) const {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }
  int degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }

 private:
  std::vector<int> offsets_;
  std::vector<Vertex> targets_;
};

enum class UnderlyingKind { path, cycle, linear_forest, other };

std::string_view to_string(UnderlyingKind kind);

struct ClassLabels {
  UnderlyingKind underlying_kind = UnderlyingKind::other;
  bool is_superset = false;
  bool is_growing = false;
  bool is_shrinking = false;
  bool is_static = false;
  /// Path and forest edges are all {i, i+1}; cycle edges are {i, i+1} or {1, n}.
  bool is_ordered = false;

  bool is_path() const { return underlying_kind == UnderlyingKind::path; }
  bool is_cycle() const { return underlying_kind == UnderlyingKind::cycle; }
  /// Paths are linear forests too.
  bool is_linear_forest() const {
    return underlying_kind == UnderlyingKind::path ||
           underlying_kind == UnderlyingKind::linear_forest;
  }
};

ClassLabels classify(const TemporalGraph& g);

/// Middle vertex (or pair of middle vertices) of the interval [lo, hi].
struct CentralVertices {
  Vertex left = 0;
  Vertex right = 0;

  bool unique() const { return left == right; }
  friend bool operator==(const CentralVertices&, const CentralVertices&) = default;
};

CentralVertices central_vertices(Vertex lo, Vertex hi);

/// The two distances between u < v around a cycle on n vertices.
struct CycleDistances {
  int forward = 0;   // v - u
  int backward = 0;  // u + (n - v)
  friend bool operator==(const CycleDistances&, const CycleDistances&) = default;
};

CycleDistances cycle_distances(Vertex u, Vertex v, int n);

/// A vertex permutation; `forward[x-1]` is the new label of x.
class Relabeling {
 public:
  Relabeling() = default;
  explicit Relabeling(std::vector<Vertex> forward);
  static Relabeling identity(int n);

  Vertex apply(Vertex original) const { return forward_[original - 1]; }
  Vertex invert(Vertex relabeled) const { return inverse_[relabeled - 1]; }
  const std::vector<Vertex>& forward() const { return forward_; }
  bool is_identity() const;

  friend bool operator==(const Relabeling&, const Relabeling&) = default;

 private:
  std::vector<Vertex> forward_;
  std::vector<Vertex> inverse_;
};

TemporalGraph relabel(const TemporalGraph& g, const Relabeling& map);
/// Vertex x becomes n + 1 - x.
Relabeling mirror(int n);

/// Relabeling that lays the components of a linear forest out as consecutive
/// intervals ordered by smallest vertex, each walked from its smaller endpoint.
/// Throws GraphError when the underlying graph is not a linear forest.
Relabeling linear_order(const TemporalGraph& g);

struct NormalizedCycle {
  TemporalGraph graph;
  Relabeling relabeling;
  bool degenerate = false;
};

/// Drops trailing layers equal to their predecessor, then rotates the cycle so
/// that the smallest edge of E_tau \ E_{tau-1} becomes {n, 1}. Labels already
/// in cycle order with {1, n} new in the last layer are kept as they are.
NormalizedCycle normalize_growing_cycle(const TemporalGraph& g);

/// The growing linear forest made of all but the last layer.
TemporalGraph forest_of_cycle(const NormalizedCycle& nc);

/// Edges of a growing path or forest on consecutive labels, as an array
/// indexed by the left endpoint i of {i, i+1}: first layer containing the edge,
/// or nullopt if it never appears.
std::vector<std::optional<int>> first_appearances(const TemporalGraph& g);

// Instance generators.

struct GeneratorParams {
  int n = 0;
  int tau = 0;
  std::uint64_t seed = 0;
};

/// Families: sequential_path, shrinking_path8, shrinking_cycle11,
/// superset_cycle, voronoi_nonex_path, voronoi_nonex_cycle, fig_boundary_path,
/// random_growing_path, random_growing_cycle, random_growing_forest,
/// random_superset_path, random_superset_forest, random_shrinking_forest,
/// random_shrinking_cycle, random. Throws GraphError on an unknown family or
/// parameters outside the family's domain.
TemporalGraph generate(std::string_view family, const GeneratorParams& params);

std::vector<std::string_view> generator_families();

}  // namespace tgames
