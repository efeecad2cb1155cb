#include "tgames/temporal_graph.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <string>

namespace tgames {

namespace {

std::string edge_text(const Edge& e) {
  return "{" + std::to_string(e.u) + "," + std::to_string(e.v) + "}";
}

class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(n + 1) { std::iota(parent_.begin(), parent_.end(), 0); }

  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<int> parent_;
};

}  // namespace

TemporalGraph::TemporalGraph(int n, std::vector<EdgeList> layers) : n_(n), layers_(std::move(layers)) {
  if (n_ < 1) throw GraphError("vertex count must be at least 1");
  if (layers_.empty()) throw GraphError("a temporal graph needs at least one layer");
  for (std::size_t i = 0; i < layers_.size(); ++i) {
    auto& layer = layers_[i];
    for (auto& e : layer) {
      if (e.u < 1 || e.u > n_ || e.v < 1 || e.v > n_) {
        throw GraphError("layer " + std::to_string(i + 1) + ": endpoint of " + edge_text(e) +
                         " out of range [1," + std::to_string(n_) + "]");
      }
      if (e.u == e.v) {
        throw GraphError("layer " + std::to_string(i + 1) + ": self-loop at vertex " + std::to_string(e.u));
      }
      e = Edge::make(e.u, e.v);
    }
    std::sort(layer.begin(), layer.end());
    auto dup = std::adjacent_find(layer.begin(), layer.end());
    if (dup != layer.end()) {
      throw GraphError("layer " + std::to_string(i + 1) + ": duplicate edge " + edge_text(*dup));
    }
  }
}

std::span<const Edge> TemporalGraph::layer(int t) const {
  if (t < 1 || t > lifetime()) throw std::out_of_range("layer index " + std::to_string(t) + " out of range");
  return layers_[t - 1];
}

std::span<const Edge> TemporalGraph::effective_layer(int t) const {
  if (t < 1) throw std::out_of_range("step index must be positive");
  return layers_[std::min(t, lifetime()) - 1];
}

bool TemporalGraph::has_edge(int t, Vertex a, Vertex b) const {
  auto edges = layer(t);
  return std::binary_search(edges.begin(), edges.end(), Edge::make(a, b));
}

EdgeList TemporalGraph::underlying_edges() const {
  EdgeList all;
  for (const auto& layer : layers_) all.insert(all.end(), layer.begin(), layer.end());
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  return all;
}

Adjacency::Adjacency(int n, std::span<const Edge> edges) : offsets_(n + 2, 0), targets_(2 * edges.size()) {
  for (const auto& e : edges) {
    ++offsets_[e.u + 1];
    ++offsets_[e.v + 1];
  }
  std::partial_sum(offsets_.begin(), offsets_.end(), offsets_.begin());
  std::vector<int> fill(offsets_.begin(), offsets_.end() - 1);
  for (const auto& e : edges) {
    targets_[fill[e.u]++] = e.v;
    targets_[fill[e.v]++] = e.u;
  }
}

std::string_view to_string(UnderlyingKind kind) {
  switch (kind) {
    case UnderlyingKind::path: return "path";
    case UnderlyingKind::cycle: return "cycle";
    case UnderlyingKind::linear_forest: return "linear_forest";
    case UnderlyingKind::other: return "other";
  }
  return "other";
}

ClassLabels classify(const TemporalGraph& g) {
  ClassLabels labels;
  const auto& layers = g.layers();
  labels.is_growing = true;
  labels.is_shrinking = true;
  labels.is_static = true;
  for (std::size_t i = 1; i < layers.size(); ++i) {
    const auto& prev = layers[i - 1];
    const auto& next = layers[i];
    if (!std::includes(next.begin(), next.end(), prev.begin(), prev.end())) labels.is_growing = false;
    if (!std::includes(prev.begin(), prev.end(), next.begin(), next.end())) labels.is_shrinking = false;
    if (prev != next) labels.is_static = false;
  }

  // Growing graphs end with their underlying graph; skip the merge.
  const EdgeList underlying = labels.is_growing ? EdgeList(g.last_layer().begin(), g.last_layer().end())
                                                : g.underlying_edges();
  labels.is_superset = std::equal(underlying.begin(), underlying.end(), g.last_layer().begin(),
                                  g.last_layer().end());

  const int n = g.vertex_count();
  const auto m = static_cast<long long>(underlying.size());
  std::vector<int> degree(n + 1, 0);
  DisjointSets sets(n);
  int components = n;
  for (const auto& e : underlying) {
    ++degree[e.u];
    ++degree[e.v];
    if (sets.unite(e.u, e.v)) --components;
  }
  const int max_degree = *std::max_element(degree.begin(), degree.end());
  const bool all_two = std::all_of(degree.begin() + 1, degree.end(), [](int d) { return d == 2; });

  if (max_degree <= 2 && m == n - components) {
    labels.underlying_kind = components == 1 ? UnderlyingKind::path : UnderlyingKind::linear_forest;
    labels.is_ordered = std::all_of(underlying.begin(), underlying.end(),
                                    [](const Edge& e) { return e.v == e.u + 1; });
  } else if (n >= 3 && components == 1 && all_two && m == n) {
    labels.underlying_kind = UnderlyingKind::cycle;
    labels.is_ordered = std::all_of(underlying.begin(), underlying.end(), [n](const Edge& e) {
      return e.v == e.u + 1 || (e.u == 1 && e.v == n);
    });
  } else {
    labels.underlying_kind = UnderlyingKind::other;
  }
  return labels;
}

CentralVertices central_vertices(Vertex lo, Vertex hi) {
  if (lo > hi) throw std::invalid_argument("central_vertices: empty interval");
  const int length = hi - lo + 1;
  if (length % 2 == 1) return {lo + length / 2, lo + length / 2};
  return {lo + length / 2 - 1, lo + length / 2};
}

CycleDistances cycle_distances(Vertex u, Vertex v, int n) {
  if (u >= v) throw std::invalid_argument("cycle_distances: requires u < v");
  if (u < 1 || v > n) throw std::invalid_argument("cycle_distances: vertex out of range");
  return {v - u, u + (n - v)};
}

Relabeling::Relabeling(std::vector<Vertex> forward) : forward_(std::move(forward)), inverse_(forward_.size(), 0) {
  const int n = static_cast<int>(forward_.size());
  for (int x = 1; x <= n; ++x) {
    const Vertex y = forward_[x - 1];
    if (y < 1 || y > n || inverse_[y - 1] != 0) throw std::invalid_argument("relabeling is not a permutation");
    inverse_[y - 1] = x;
  }
}

Relabeling Relabeling::identity(int n) {
  std::vector<Vertex> forward(n);
  std::iota(forward.begin(), forward.end(), 1);
  return Relabeling(std::move(forward));
}

bool Relabeling::is_identity() const {
  for (std::size_t i = 0; i < forward_.size(); ++i) {
    if (forward_[i] != static_cast<Vertex>(i + 1)) return false;
  }
  return true;
}

TemporalGraph relabel(const TemporalGraph& g, const Relabeling& map) {
  if (static_cast<int>(map.forward().size()) != g.vertex_count()) {
    throw std::invalid_argument("relabeling size does not match the graph");
  }
  std::vector<EdgeList> layers;
  layers.reserve(g.lifetime());
  for (const auto& layer : g.layers()) {
    EdgeList out;
    out.reserve(layer.size());
    for (const auto& e : layer) out.push_back(Edge::make(map.apply(e.u), map.apply(e.v)));
    layers.push_back(std::move(out));
  }
  return TemporalGraph(g.vertex_count(), std::move(layers));
}

Relabeling mirror(int n) {
  std::vector<Vertex> forward(n);
  for (int x = 1; x <= n; ++x) forward[x - 1] = n + 1 - x;
  return Relabeling(std::move(forward));
}

Relabeling linear_order(const TemporalGraph& g) {
  const auto labels = classify(g);
  if (!labels.is_linear_forest()) throw GraphError("underlying graph is not a linear forest");
  const int n = g.vertex_count();
  const auto underlying = g.underlying_edges();
  Adjacency adj(n, underlying);
  std::vector<Vertex> forward(n, 0);
  int next_label = 1;
  for (Vertex start = 1; start <= n; ++start) {
    if (forward[start - 1] != 0 || adj.degree(start) == 2) continue;
    // `start` is the smallest unvisited endpoint of its component.
    Vertex prev = 0;
    Vertex cur = start;
    while (cur != 0) {
      forward[cur - 1] = next_label++;
      Vertex step = 0;
      for (Vertex w : adj.neighbors(cur)) {
        if (w != prev) step = w;
      }
      prev = cur;
      cur = step;
    }
  }
  return Relabeling(std::move(forward));
}

NormalizedCycle normalize_growing_cycle(const TemporalGraph& g) {
  const auto labels = classify(g);
  if (!labels.is_growing || !labels.is_cycle()) {
    throw GraphError("normalize_growing_cycle: input is not a monotonically growing temporal cycle");
  }
  std::vector<EdgeList> layers = g.layers();
  while (layers.size() > 1 && layers[layers.size() - 1] == layers[layers.size() - 2]) layers.pop_back();
  const int n = g.vertex_count();
  if (layers.size() == 1) {
    return {TemporalGraph(n, std::move(layers)), Relabeling::identity(n), true};
  }

  // Cycle order of the input: start at 1 and step to its smaller neighbour first.
  Adjacency adj(n, layers.back());
  std::vector<Vertex> order;
  order.reserve(n);
  Vertex prev = 0;
  Vertex cur = 1;
  for (int i = 0; i < n; ++i) {
    order.push_back(cur);
    const auto nb = adj.neighbors(cur);
    Vertex step = prev == 0 ? std::min(nb[0], nb[1]) : (nb[0] == prev ? nb[1] : nb[0]);
    prev = cur;
    cur = step;
  }
  std::vector<int> position(n + 1);
  for (int i = 0; i < n; ++i) position[order[i]] = i;
  auto successor = [&](Vertex x) { return order[(position[x] + 1) % n]; };

  const auto& last = layers[layers.size() - 1];
  const auto& before = layers[layers.size() - 2];
  EdgeList fresh;
  std::set_difference(last.begin(), last.end(), before.begin(), before.end(), std::back_inserter(fresh));
  // Keep canonical labels when {1, n} is already new in the last layer.
  const Edge closing{1, n};
  const bool keep = labels.is_ordered && std::binary_search(fresh.begin(), fresh.end(), closing);
  const Edge chosen = keep ? closing : fresh.front();
  const Vertex start = successor(chosen.u) == chosen.v ? chosen.v : chosen.u;

  std::vector<Vertex> forward(n);
  for (int i = 0; i < n; ++i) forward[order[(position[start] + i) % n] - 1] = i + 1;
  Relabeling map(std::move(forward));
  return {relabel(TemporalGraph(n, std::move(layers)), map), std::move(map), false};
}

TemporalGraph forest_of_cycle(const NormalizedCycle& nc) {
  if (nc.degenerate) throw GraphError("forest_of_cycle: degenerate (static) cycle has no forest");
  std::vector<EdgeList> layers(nc.graph.layers().begin(), nc.graph.layers().end() - 1);
  return TemporalGraph(nc.graph.vertex_count(), std::move(layers));
}

std::vector<std::optional<int>> first_appearances(const TemporalGraph& g) {
  const int n = g.vertex_count();
  std::vector<std::optional<int>> first(n + 1);
  for (int t = 1; t <= g.lifetime(); ++t) {
    for (const auto& e : g.layer(t)) {
      if (e.v != e.u + 1) throw GraphError("first_appearances: edge " + edge_text(e) + " is not of the form {i,i+1}");
      if (!first[e.u]) first[e.u] = t;
    }
  }
  return first;
}

// Generators ----------------------------------------------------------------

namespace {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  // Plain modulo keeps the streams identical across standard libraries.
  int below(int bound) { return static_cast<int>(engine_() % static_cast<std::uint64_t>(bound)); }
  int between(int lo, int hi) { return lo + below(hi - lo + 1); }
  bool chance(int numerator, int denominator) { return below(denominator) < numerator; }

 private:
  std::mt19937_64 engine_;
};

EdgeList path_edges(int n) {
  EdgeList edges;
  for (int i = 1; i < n; ++i) edges.push_back({i, i + 1});
  return edges;
}

EdgeList cycle_edges(int n) {
  EdgeList edges = path_edges(n);
  edges.push_back({1, n});
  return edges;
}

EdgeList without(EdgeList edges, const EdgeList& removed) {
  std::erase_if(edges, [&](const Edge& e) { return std::find(removed.begin(), removed.end(), e) != removed.end(); });
  return edges;
}

// Each edge is present exactly in the layers [from[i], to[i]].
TemporalGraph from_windows(int n, int tau, const EdgeList& edges, const std::vector<int>& from,
                           const std::vector<int>& to) {
  std::vector<EdgeList> layers(tau);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (int t = from[i]; t <= to[i]; ++t) layers[t - 1].push_back(edges[i]);
  }
  return TemporalGraph(n, std::move(layers));
}

void require(bool ok, std::string_view family, std::string_view what) {
  if (!ok) throw GraphError(std::string(family) + ": " + std::string(what));
}

TemporalGraph shrinking_path8() {
  EdgeList full = path_edges(8);
  return TemporalGraph(8, {full, without(full, {{2, 3}})});
}

TemporalGraph shrinking_cycle11() {
  EdgeList full = cycle_edges(11);
  return TemporalGraph(11, {full, without(full, {{1, 2}, {3, 4}, {9, 10}, {10, 11}, {1, 11}})});
}

TemporalGraph voronoi_nonex(EdgeList final_layer) {
  EdgeList full = path_edges(8);
  EdgeList cut = without(full, {{2, 3}});
  std::vector<EdgeList> layers{full};
  for (int i = 0; i < 6; ++i) layers.push_back(cut);
  layers.push_back(std::move(final_layer));
  return TemporalGraph(8, std::move(layers));
}

TemporalGraph fig_boundary_path() {
  const std::vector<std::pair<Edge, int>> appear = {
      {{5, 6}, 1},   {{6, 7}, 1},   {{7, 8}, 1},   {{4, 5}, 3},   {{8, 9}, 3},
      {{9, 10}, 3},  {{1, 2}, 4},   {{2, 3}, 4},   {{3, 4}, 4},   {{10, 11}, 5},
      {{11, 12}, 5}, {{12, 13}, 8}, {{13, 14}, 9}, {{14, 15}, 9}};
  EdgeList edges;
  std::vector<int> from, to;
  for (const auto& [e, t] : appear) {
    edges.push_back(e);
    from.push_back(t);
    to.push_back(10);
  }
  return from_windows(15, 10, edges, from, to);
}

}  // namespace

std::vector<std::string_view> generator_families() {
  return {"sequential_path",       "shrinking_path8",        "shrinking_cycle11",
          "superset_cycle",        "voronoi_nonex_path",     "voronoi_nonex_cycle",
          "fig_boundary_path",     "random_growing_path",    "random_growing_cycle",
          "random_growing_forest", "random_superset_path",   "random_superset_forest",
          "random_shrinking_forest", "random_shrinking_cycle", "random"};
}

TemporalGraph generate(std::string_view family, const GeneratorParams& p) {
  if (family == "sequential_path") {
    require(p.n >= 2, family, "needs n >= 2");
    std::vector<EdgeList> layers;
    for (int t = 1; t < p.n; ++t) layers.push_back({{t, t + 1}});
    return TemporalGraph(p.n, std::move(layers));
  }
  if (family == "shrinking_path8") return shrinking_path8();
  if (family == "shrinking_cycle11") return shrinking_cycle11();
  if (family == "superset_cycle") {
    require(p.n >= 6, family, "needs n >= 6");
    std::vector<EdgeList> layers;
    for (int t = 1; t < p.n; ++t) layers.push_back({{t, t + 1}});
    layers.push_back(cycle_edges(p.n));
    return TemporalGraph(p.n, std::move(layers));
  }
  if (family == "voronoi_nonex_path") return voronoi_nonex(path_edges(8));
  if (family == "voronoi_nonex_cycle") return voronoi_nonex(cycle_edges(8));
  if (family == "fig_boundary_path") return fig_boundary_path();

  require(p.tau >= 1, family, "needs tau >= 1");
  Rng rng(p.seed);
  const int n = p.n;
  const int tau = p.tau;

  if (family == "random_growing_path" || family == "random_growing_cycle" || family == "random_growing_forest") {
    const bool cycle = family == "random_growing_cycle";
    require(n >= (cycle ? 3 : 1), family, cycle ? "needs n >= 3" : "needs n >= 1");
    const EdgeList edges = cycle ? cycle_edges(n) : path_edges(n);
    const bool forest = family == "random_growing_forest";
    EdgeList kept;
    std::vector<int> from, to;
    for (const auto& e : edges) {
      if (forest && rng.chance(1, 4)) continue;
      kept.push_back(e);
      from.push_back(rng.between(1, tau));
      to.push_back(tau);
    }
    return from_windows(n, tau, kept, from, to);
  }
  if (family == "random_superset_path" || family == "random_superset_forest") {
    require(n >= 1, family, "needs n >= 1");
    EdgeList base = path_edges(n);
    if (family == "random_superset_forest") std::erase_if(base, [&](const Edge&) { return rng.chance(1, 4); });
    std::vector<EdgeList> layers(tau);
    for (int t = 1; t < tau; ++t) {
      for (const auto& e : base) {
        if (rng.chance(1, 2)) layers[t - 1].push_back(e);
      }
    }
    layers[tau - 1] = base;
    return TemporalGraph(n, std::move(layers));
  }
  if (family == "random_shrinking_forest" || family == "random_shrinking_cycle") {
    const bool cycle = family == "random_shrinking_cycle";
    require(n >= (cycle ? 3 : 1), family, cycle ? "needs n >= 3" : "needs n >= 1");
    const EdgeList edges = cycle ? cycle_edges(n) : path_edges(n);
    EdgeList kept;
    std::vector<int> from, to;
    for (const auto& e : edges) {
      if (!cycle && rng.chance(1, 4)) continue;
      kept.push_back(e);
      from.push_back(1);
      to.push_back(rng.between(1, tau));
    }
    return from_windows(n, tau, kept, from, to);
  }
  if (family == "random") {
    require(n >= 1, family, "needs n >= 1");
    std::vector<EdgeList> layers(tau);
    for (auto& layer : layers) {
      for (int u = 1; u <= n; ++u) {
        for (int v = u + 1; v <= n; ++v) {
          if (rng.chance(2, std::max(n, 2))) layer.push_back({u, v});
        }
      }
    }
    return TemporalGraph(n, std::move(layers));
  }
  throw GraphError("unknown generator family '" + std::string(family) + "'");
}

}  // namespace tgames
