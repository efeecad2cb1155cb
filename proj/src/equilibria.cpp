#include "tgames/equilibria.hpp"

#include <algorithm>
#include <string>

namespace tgames {

std::string_view to_string(GameKind kind) { return kind == GameKind::voronoi ? "voronoi" : "diffusion"; }

std::optional<GameKind> parse_game_kind(std::string_view text) {
  if (text == "diffusion") return GameKind::diffusion;
  if (text == "voronoi") return GameKind::voronoi;
  return std::nullopt;
}

std::string_view to_string(NashMethod method) {
  switch (method) {
    case NashMethod::brute_force: return "brute_force";
    case NashMethod::algorithm1: return "algorithm1";
    case NashMethod::superset_path: return "superset_path";
    case NashMethod::superset_forest: return "superset_forest";
    case NashMethod::voronoi_iteration: return "voronoi_iteration";
  }
  return "brute_force";
}

namespace {

std::vector<int> payoffs(GameKind kind, const TemporalGraph& g, Vertex p1, Vertex p2) {
  const auto profile = pair_profile(p1, p2);
  return kind == GameKind::voronoi ? voronoi_play(g, profile).payoffs : diffusion_play(g, profile).payoffs;
}

void check_player(int player) {
  if (player != 1 && player != 2) throw std::invalid_argument("player must be 1 or 2");
}

void check_vertex(const TemporalGraph& g, Vertex v) {
  if (!g.contains(v)) throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
}

StrategyProfile map_back(const Relabeling& map, Vertex a, Vertex b) {
  return pair_profile(map.invert(a), map.invert(b));
}

NashReport constructed(StrategyProfile profile, NashMethod method) {
  NashReport report;
  report.profile = std::move(profile);
  report.is_equilibrium = true;
  report.method = method;
  return report;
}

}  // namespace

int payoff(GameKind kind, const TemporalGraph& g, Vertex p1, Vertex p2, int player) {
  check_player(player);
  return payoffs(kind, g, p1, p2)[player - 1];
}

BestResponses best_responses(GameKind kind, const TemporalGraph& g, Vertex opponent, int player) {
  check_player(player);
  check_vertex(g, opponent);
  BestResponses best;
  best.payoff = -1;
  for (Vertex p = 1; p <= g.vertex_count(); ++p) {
    const int u = player == 1 ? payoffs(kind, g, p, opponent)[0] : payoffs(kind, g, opponent, p)[1];
    if (u > best.payoff) {
      best.payoff = u;
      best.vertices.clear();
    }
    if (u == best.payoff) best.vertices.push_back(p);
  }
  return best;
}

NashReport is_nash(GameKind kind, const TemporalGraph& g, const StrategyProfile& profile) {
  if (profile.players() != 2) throw std::invalid_argument("equilibrium checks are two-player only");
  check_vertex(g, profile[1]);
  check_vertex(g, profile[2]);
  NashReport report;
  report.profile = profile;
  report.method = NashMethod::brute_force;
  const auto current = payoffs(kind, g, profile[1], profile[2]);
  for (int player = 1; player <= 2; ++player) {
    const auto best = best_responses(kind, g, profile[player == 1 ? 2 : 1], player);
    if (best.payoff > current[player - 1]) {
      report.witness = Deviation{player, best.vertices.front(), best.payoff - current[player - 1]};
      return report;
    }
  }
  report.is_equilibrium = true;
  return report;
}

std::vector<StrategyProfile> find_all_nash(GameKind kind, const TemporalGraph& g) {
  const int n = g.vertex_count();
  // table[p1][p2] = (u1, u2); index 0 unused.
  std::vector<std::vector<std::pair<int, int>>> table(n + 1, std::vector<std::pair<int, int>>(n + 1));
  for (Vertex a = 1; a <= n; ++a) {
    for (Vertex b = 1; b <= n; ++b) {
      const auto u = payoffs(kind, g, a, b);
      table[a][b] = {u[0], u[1]};
    }
  }
  std::vector<int> best_for_1(n + 1, 0);  // against p2
  std::vector<int> best_for_2(n + 1, 0);  // against p1
  for (Vertex a = 1; a <= n; ++a) {
    for (Vertex b = 1; b <= n; ++b) {
      best_for_1[b] = std::max(best_for_1[b], table[a][b].first);
      best_for_2[a] = std::max(best_for_2[a], table[a][b].second);
    }
  }
  std::vector<StrategyProfile> out;
  for (Vertex a = 1; a <= n; ++a) {
    for (Vertex b = 1; b <= n; ++b) {
      if (table[a][b].first == best_for_1[b] && table[a][b].second == best_for_2[a]) {
        out.push_back(pair_profile(a, b));
      }
    }
  }
  return out;
}

// Nice central vertices and the growing-cycle construction ---------------------

NiceCentralSet nice_central_vertices(const ForestReach& reach, int horizon) {
  const int n = reach.vertex_count();
  std::vector<ReachInterval> omega;
  omega.reserve(n);
  int max_reach = 0;
  for (Vertex v = 1; v <= n; ++v) {
    omega.push_back(reach.interval(v, horizon));
    max_reach = std::max(max_reach, omega.back().size());
  }
  NiceCentralSet set;
  set.max_reach = max_reach;
  for (Vertex v = 1; v <= n; ++v) {
    const auto& iv = omega[v - 1];
    if (iv.size() != max_reach) continue;
    const auto c = central_vertices(iv.lo, iv.hi);
    if (v == c.left || v == c.right) {
      set.vertices.push_back(v);
      set.omegas.push_back(iv);
    }
  }
  return set;
}

NiceCentralSet nice_central_vertices(const TemporalGraph& forest, int horizon) {
  return nice_central_vertices(ForestReach(forest), horizon);
}

NashReport nash_diffusion_growing_cycle(const TemporalGraph& g) {
  const auto nc = normalize_growing_cycle(g);
  if (nc.degenerate) {
    const auto all = find_all_nash(GameKind::diffusion, g);
    NashReport report;
    report.method = NashMethod::brute_force;
    report.degenerate = true;
    if (!all.empty()) {
      report.profile = all.front();
      report.is_equilibrium = true;
    }
    return report;
  }

  const int n = g.vertex_count();
  const auto forest = forest_of_cycle(nc);
  const auto nice = nice_central_vertices(ForestReach(forest), forest.lifetime());
  const auto& v = nice.vertices;

  Vertex a = 0;
  Vertex b = 0;
  if (nice.max_reach % 2 == 0) {
    const auto c = central_vertices(nice.omegas.front().lo, nice.omegas.front().hi);
    a = c.left;
    b = c.right;
  } else if (v.size() >= 2) {
    a = v[0];
    b = v[1];
    // With n odd one of d1, d2 is odd for every pair. With n even d1 and d2
    // share parity, so scanning d1(v_1, v_i) decides every pair.
    if (n % 2 == 0) {
      for (std::size_t i = 1; i < v.size(); ++i) {
        if ((v[i] - v[0]) % 2 == 1) {
          b = v[i];
          break;
        }
      }
    }
  } else {
    a = v[0];
    b = a % n + 1;
  }
  return constructed(map_back(nc.relabeling, a, b), NashMethod::algorithm1);
}

// Superset paths and forests -------------------------------------------------

namespace {

// Canonical interval layout of a linear forest: [start, end] per component.
struct ForestLayout {
  Relabeling map;
  std::vector<std::pair<Vertex, Vertex>> components;
};

ForestLayout forest_layout(const TemporalGraph& g) {
  ForestLayout layout{linear_order(g), {}};
  const auto canonical = relabel(g, layout.map);
  const auto underlying = canonical.underlying_edges();
  std::vector<bool> joined(g.vertex_count() + 1, false);  // joined[i]: edge {i, i+1}
  for (const auto& e : underlying) joined[e.u] = true;
  Vertex start = 1;
  for (Vertex x = 1; x <= g.vertex_count(); ++x) {
    if (x == g.vertex_count() || !joined[x]) {
      layout.components.emplace_back(start, x);
      start = x + 1;
    }
  }
  return layout;
}

void require_superset_path(const TemporalGraph& g) {
  const auto labels = classify(g);
  if (!labels.is_superset || !labels.is_path()) throw GraphError("input is not a superset temporal path");
}

}  // namespace

NashReport nash_diffusion_superset_path(const TemporalGraph& g) {
  require_superset_path(g);
  const int n = g.vertex_count();
  const auto map = linear_order(g);
  if (n == 1) return constructed(pair_profile(1, 1), NashMethod::superset_path);
  return constructed(map_back(map, n / 2, n / 2 + 1), NashMethod::superset_path);
}

std::vector<StrategyProfile> superset_path_equilibria(const TemporalGraph& g) {
  require_superset_path(g);
  const int n = g.vertex_count();
  if (n == 1) return {pair_profile(1, 1)};
  const auto map = linear_order(g);
  std::vector<StrategyProfile> out;
  for (Vertex p : {n / 2, (n + 1) / 2}) {
    if (p + 1 > n) continue;
    out.push_back(map_back(map, p, p + 1));
    out.push_back(map_back(map, p + 1, p));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

NashReport nash_diffusion_superset_forest(const TemporalGraph& g) {
  const auto labels = classify(g);
  if (!labels.is_superset || !labels.is_linear_forest()) {
    throw GraphError("input is not a superset temporal linear forest");
  }
  auto layout = forest_layout(g);
  const auto& map = layout.map;
  // Components as canonical intervals, keyed by their smallest original vertex.
  struct Part {
    Vertex lo, hi, smallest;
    int size() const { return hi - lo + 1; }
  };
  std::vector<Part> parts;
  for (const auto& [lo, hi] : layout.components) {
    Vertex smallest = map.invert(lo);
    for (Vertex x = lo; x <= hi; ++x) smallest = std::min(smallest, map.invert(x));
    parts.push_back({lo, hi, smallest});
  }
  std::sort(parts.begin(), parts.end(), [](const Part& x, const Part& y) {
    return x.size() != y.size() ? x.size() > y.size() : x.smallest < y.smallest;
  });
  const Part& big = parts.front();
  const int n1 = big.size();
  const int n2 = parts.size() > 1 ? parts[1].size() : 0;
  if (n1 == 1) return constructed(pair_profile(big.smallest, big.smallest), NashMethod::superset_forest);

  if (parts.size() == 1) {
    // A single path: the same profile as the superset-path construction.
    return constructed(pair_profile(map.invert(n1 / 2), map.invert(n1 / 2 + 1)), NashMethod::superset_forest);
  }
  const auto c = central_vertices(big.lo, big.hi);
  Vertex p1 = map.invert(c.left);
  Vertex p2 = 0;
  if (n1 / 2 >= n2) {
    if (n1 % 2 == 0) {
      p2 = map.invert(c.right);
      if (p2 < p1) std::swap(p1, p2);
    } else {
      p2 = map.invert(c.left + 1);
    }
  } else {
    if (!c.unique()) p1 = std::min(p1, map.invert(c.right));
    p2 = parts[1].smallest;
  }
  return constructed(pair_profile(p1, p2), NashMethod::superset_forest);
}

// Voronoi on growing paths ---------------------------------------------------

namespace {

Vertex closest_in_largest_interval(const PathBoundaries& pb, Vertex opponent) {
  const auto d = pb.decompose(opponent);
  const BoundaryInterval* best = nullptr;
  for (const auto* list : {&d.left_intervals, &d.right_intervals}) {
    for (const auto& iv : *list) {
      if (best == nullptr || iv.size() > best->size()) best = &iv;
    }
  }
  return best->side == Side::left ? best->hi : best->lo;
}

void require_growing_path(const TemporalGraph& g) {
  const auto labels = classify(g);
  if (!labels.is_growing || !labels.is_path()) throw GraphError("input is not a monotonically growing temporal path");
}

struct Iteration {
  StrategyProfile profile;
  int steps = 0;
};

// Best-response sequence on an ordered growing path where BR(seed) > seed.
Iteration iterate_best_responses(const PathBoundaries& pb, std::vector<Vertex> seq) {
  const int n = pb.vertex_count();
  int steps = 1;
  for (std::size_t i = 0;; ++i) {
    seq.push_back(closest_in_largest_interval(pb, seq[i + 1]));
    ++steps;
    const Vertex a = seq[i];
    const Vertex b = seq[i + 1];
    const Vertex c = seq[i + 2];
    if (c < b) {
      if (c < a) return {pair_profile(b, c), steps};
      return {pair_profile(a, b), steps};  // a < c < b, or c == a
    }
    if (steps > n + 1) throw std::logic_error("best-response iteration failed to turn within n steps");
  }
}

}  // namespace

VoronoiResponse voronoi_best_response_growing_path(const TemporalGraph& g, Vertex opponent) {
  require_growing_path(g);
  check_vertex(g, opponent);
  if (g.vertex_count() == 1) return {opponent, true};
  const auto map = linear_order(g);
  const PathBoundaries pb(relabel(g, map));
  return {map.invert(closest_in_largest_interval(pb, map.apply(opponent))), false};
}

NashReport nash_voronoi_growing_path(const TemporalGraph& g, Vertex seed) {
  require_growing_path(g);
  check_vertex(g, seed);
  const int n = g.vertex_count();
  if (n == 1) return constructed(pair_profile(1, 1), NashMethod::voronoi_iteration);

  const auto order = linear_order(g);
  const auto canonical = relabel(g, order);
  const PathBoundaries forward(canonical);
  const Vertex start = order.apply(seed);
  const Vertex first = closest_in_largest_interval(forward, start);

  Iteration it;
  if (first > start) {
    it = iterate_best_responses(forward, {start, first});
  } else {
    // Reflect the path so the sequence starts upwards, then reflect back.
    const auto flip = mirror(n);
    const PathBoundaries reflected(relabel(canonical, flip));
    it = iterate_best_responses(reflected, {flip.apply(start), flip.apply(first)});
    it.profile = pair_profile(flip.invert(it.profile[1]), flip.invert(it.profile[2]));
  }
  auto report = constructed(map_back(order, it.profile[1], it.profile[2]), NashMethod::voronoi_iteration);
  report.best_response_steps = it.steps;
  return report;
}

std::optional<NashReport> nash_structural(GameKind kind, const TemporalGraph& g) {
  const auto labels = classify(g);
  if (kind == GameKind::diffusion) {
    if (labels.is_superset && labels.is_path()) return nash_diffusion_superset_path(g);
    if (labels.is_superset && labels.is_linear_forest()) return nash_diffusion_superset_forest(g);
    if (labels.is_growing && labels.is_cycle()) return nash_diffusion_growing_cycle(g);
    return std::nullopt;
  }
  if (labels.is_growing && labels.is_path()) return nash_voronoi_growing_path(g);
  return std::nullopt;
}

}  // namespace tgames
