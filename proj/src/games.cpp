#include "tgames/games.hpp"

#include <algorithm>
#include <string>

#include "tgames/reachability.hpp"

namespace tgames {

int Coloring::count(Color color) const {
  return static_cast<int>(std::count(colors_.begin(), colors_.end(), color));
}

std::vector<Vertex> Coloring::vertices_of(Color color) const {
  std::vector<Vertex> out;
  for (std::size_t i = 0; i < colors_.size(); ++i) {
    if (colors_[i] == color) out.push_back(static_cast<Vertex>(i + 1));
  }
  return out;
}

std::string_view to_string(GameVariant variant) {
  switch (variant) {
    case GameVariant::diffusion: return "diffusion";
    case GameVariant::voronoi: return "voronoi";
    case GameVariant::ddiff: return "ddiff";
    case GameVariant::lddiff: return "lddiff";
  }
  return "diffusion";
}

std::optional<GameVariant> parse_game_variant(std::string_view text) {
  for (auto v : {GameVariant::diffusion, GameVariant::voronoi, GameVariant::ddiff, GameVariant::lddiff}) {
    if (to_string(v) == text) return v;
  }
  return std::nullopt;
}

namespace {

void validate(const TemporalGraph& g, const StrategyProfile& profile) {
  if (profile.players() < 1) throw std::invalid_argument("a strategy profile needs at least one player");
  for (Vertex p : profile.positions) {
    if (!g.contains(p)) {
      throw std::out_of_range("position " + std::to_string(p) + " out of range [1," +
                              std::to_string(g.vertex_count()) + "]");
    }
  }
}

void require_two_players(const StrategyProfile& profile) {
  if (profile.players() != 2) throw std::invalid_argument("difference games are defined for two players");
}

// Simultaneous-update propagation. Colors are indexed by vertex, slot 0 unused.
class Diffusion {
 public:
  Diffusion(const TemporalGraph& g, const StrategyProfile& profile)
      : colors_(g.vertex_count() + 1, kUncolored), proposal_(g.vertex_count() + 1, kUncolored) {
    for (int i = 1; i <= profile.players(); ++i) {
      Color& c = colors_[profile[i]];
      c = c == kUncolored ? i : kGray;
    }
  }

  // Step over a whole layer. Newly player-colored vertices go to `fresh`.
  bool step(std::span<const Edge> edges, std::vector<Vertex>& fresh) {
    for (const auto& e : edges) {
      const Color cu = colors_[e.u];
      const Color cv = colors_[e.v];
      if (is_player_color(cu) && cv == kUncolored) propose(e.v, cu);
      if (is_player_color(cv) && cu == kUncolored) propose(e.u, cv);
    }
    return commit(fresh);
  }

  // Step on a fixed layer where only last step's new vertices can spread.
  bool step(const Adjacency& adj, const std::vector<Vertex>& frontier, std::vector<Vertex>& fresh) {
    for (Vertex x : frontier) {
      for (Vertex w : adj.neighbors(x)) {
        if (colors_[w] == kUncolored) propose(w, colors_[x]);
      }
    }
    return commit(fresh);
  }

  Coloring coloring() const { return Coloring(std::vector<Color>(colors_.begin() + 1, colors_.end())); }

 private:
  void propose(Vertex v, Color c) {
    Color& p = proposal_[v];
    if (p == kUncolored) {
      p = c;
      touched_.push_back(v);
    } else if (p != c) {
      p = kGray;
    }
  }

  bool commit(std::vector<Vertex>& fresh) {
    fresh.clear();
    for (Vertex v : touched_) {
      colors_[v] = proposal_[v];
      proposal_[v] = kUncolored;
      if (is_player_color(colors_[v])) fresh.push_back(v);
    }
    const bool changed = !touched_.empty();
    touched_.clear();
    return changed;
  }

  std::vector<Color> colors_;
  std::vector<Color> proposal_;
  std::vector<Vertex> touched_;
};

struct DiffusionRun {
  Coloring coloring;
  std::vector<TraceStep> trace;
  int last_change = 0;
};

// Runs steps 1..limit (unbounded when limit is empty). With `repeat_last`
// false the process stops after the lifetime.
DiffusionRun run_diffusion(const TemporalGraph& g, const StrategyProfile& profile, std::optional<int> limit,
                           bool repeat_last, bool trace) {
  validate(g, profile);
  Diffusion process(g, profile);
  DiffusionRun run;
  auto snapshot = [&](int step) {
    if (trace) run.trace.push_back({step, process.coloring()});
  };
  snapshot(0);

  std::vector<Vertex> fresh;
  const int tau = g.lifetime();
  const int layered_steps = limit ? std::min(*limit, tau) : tau;
  for (int t = 1; t <= layered_steps; ++t) {
    if (process.step(g.layer(t), fresh)) run.last_change = t;
    snapshot(t);
  }

  if (repeat_last && (!limit || *limit > tau)) {
    // After step tau only vertices colored in the previous step can have
    // uncolored neighbours on the last layer.
    Adjacency last(g.vertex_count(), g.last_layer());
    std::vector<Vertex> frontier = std::move(fresh);
    std::vector<Vertex> next;
    for (int t = tau + 1; !limit || t <= *limit; ++t) {
      if (!process.step(last, frontier, next)) break;
      run.last_change = t;
      snapshot(t);
      frontier.swap(next);
    }
  }
  run.coloring = process.coloring();
  return run;
}

std::vector<int> payoffs_of(const Coloring& coloring, int players) {
  std::vector<int> payoffs(players, 0);
  for (Color c : coloring.values()) {
    if (is_player_color(c)) ++payoffs[c - 1];
  }
  return payoffs;
}

GameReport report_from(GameVariant variant, const StrategyProfile& profile, DiffusionRun run, bool trace) {
  GameReport report;
  report.variant = variant;
  report.profile = profile;
  report.payoffs = payoffs_of(run.coloring, profile.players());
  report.coloring = std::move(run.coloring);
  report.steps = run.last_change;
  if (trace) report.trace = std::move(run.trace);
  return report;
}

}  // namespace

GameReport diffusion_play(const TemporalGraph& g, const StrategyProfile& profile, bool trace) {
  return report_from(GameVariant::diffusion, profile, run_diffusion(g, profile, std::nullopt, true, trace), trace);
}

GameReport ddiff_play(const TemporalGraph& g, const StrategyProfile& profile, bool trace) {
  require_two_players(profile);
  auto report = report_from(GameVariant::ddiff, profile, run_diffusion(g, profile, std::nullopt, true, trace), trace);
  report.delta = report.payoffs[0] - report.payoffs[1];
  return report;
}

GameReport lddiff_play(const TemporalGraph& g, const StrategyProfile& profile, bool trace) {
  require_two_players(profile);
  auto report =
      report_from(GameVariant::lddiff, profile, run_diffusion(g, profile, g.lifetime(), false, trace), trace);
  report.delta = report.payoffs[0] - report.payoffs[1];
  return report;
}

GameReport voronoi_play(const TemporalGraph& g, const StrategyProfile& profile) {
  validate(g, profile);
  const int n = g.vertex_count();
  std::vector<TemporalDistanceRow> rows;
  rows.reserve(profile.players());
  for (Vertex p : profile.positions) rows.push_back(all_distances(g, p));

  Coloring coloring(n);
  for (Vertex v = 1; v <= n; ++v) {
    Arrival best = Arrival::infinite();
    int winners = 0;
    Color winner = kUncolored;
    for (int i = 1; i <= profile.players(); ++i) {
      const Arrival a = rows[i - 1].at(v);
      if (a < best) {
        best = a;
        winners = 1;
        winner = i;
      } else if (a == best) {
        ++winners;
      }
    }
    if (best.is_finite()) coloring.set(v, winners == 1 ? winner : kGray);
  }

  GameReport report;
  report.variant = GameVariant::voronoi;
  report.profile = profile;
  report.payoffs = payoffs_of(coloring, profile.players());
  report.coloring = std::move(coloring);
  return report;
}

GameReport play(GameVariant variant, const TemporalGraph& g, const StrategyProfile& profile, bool trace) {
  switch (variant) {
    case GameVariant::diffusion: return diffusion_play(g, profile, trace);
    case GameVariant::voronoi: return voronoi_play(g, profile);
    case GameVariant::ddiff: return ddiff_play(g, profile, trace);
    case GameVariant::lddiff: return lddiff_play(g, profile, trace);
  }
  throw std::invalid_argument("unknown game variant");
}

Coloring diffusion_until(const TemporalGraph& g, const StrategyProfile& profile, int steps) {
  if (steps < 0) throw std::invalid_argument("step index must be non-negative");
  return run_diffusion(g, profile, steps, true, false).coloring;
}

int delta(const TemporalGraph& g, Vertex p1, Vertex p2, DeltaMode mode) {
  const auto profile = pair_profile(p1, p2);
  Coloring coloring;
  switch (mode.kind) {
    case DeltaMode::Kind::full: coloring = run_diffusion(g, profile, std::nullopt, true, false).coloring; break;
    case DeltaMode::Kind::until_step: coloring = diffusion_until(g, profile, mode.step); break;
    case DeltaMode::Kind::lifetime: coloring = run_diffusion(g, profile, g.lifetime(), false, false).coloring; break;
  }
  return coloring.count(1) - coloring.count(2);
}

}  // namespace tgames
