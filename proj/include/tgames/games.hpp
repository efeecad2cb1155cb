// Temporal diffusion and Voronoi games: colorings, payoffs, traces.

#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "tgames/temporal_graph.hpp"

namespace tgames {

/// Per-vertex color: a player index in [1, k], gray, or uncolored.
using Color = int;
inline constexpr Color kGray = 0;
inline constexpr Color kUncolored = -1;

inline bool is_player_color(Color c) { return c >= 1; }

struct StrategyProfile {
  std::vector<Vertex> positions;  // positions[i - 1] is player i's vertex

  int players() const { return static_cast<int>(positions.size()); }
  Vertex operator[](int player) const { return positions.at(player - 1); }
  friend bool operator==(const StrategyProfile&, const StrategyProfile&) = default;
  friend auto operator<=>(const StrategyProfile&, const StrategyProfile&) = default;
};

inline StrategyProfile pair_profile(Vertex p1, Vertex p2) { return {{p1, p2}}; }

class Coloring {
 public:
  Coloring() = default;
  explicit Coloring(int n) : colors_(n, kUncolored) {}
  explicit Coloring(std::vector<Color> colors) : colors_(std::move(colors)) {}

  int vertex_count() const { return static_cast<int>(colors_.size()); }
  Color at(Vertex v) const { return colors_.at(v - 1); }
  void set(Vertex v, Color c) { colors_.at(v - 1) = c; }

  /// Number of vertices carrying `color`.
  int count(Color color) const;
  std::vector<Vertex> vertices_of(Color color) const;
  const std::vector<Color>& values() const { return colors_; }

  friend bool operator==(const Coloring&, const Coloring&) = default;

 private:
  std::vector<Color> colors_;
};

enum class GameVariant { diffusion, voronoi, ddiff, lddiff };

std::string_view to_string(GameVariant variant);
std::optional<GameVariant> parse_game_variant(std::string_view text);

struct TraceStep {
  int step = 0;
  Coloring coloring;
};

struct GameReport {
  GameVariant variant = GameVariant::diffusion;
  StrategyProfile profile;
  Coloring coloring;
  std::vector<int> payoffs;                    // payoffs[i - 1] = u_i
  std::optional<std::vector<TraceStep>> trace;
  std::optional<int> delta;                    // ddiff and lddiff only
  int steps = 0;                               // last step that changed the coloring
};

/// Diffusion to a fixpoint; after the lifetime the process runs on the last
/// layer until a step changes nothing. Updates within a step are simultaneous.
GameReport diffusion_play(const TemporalGraph& g, const StrategyProfile& profile, bool trace = false);

/// Difference diffusion: the full diffusion process with Delta attached (2 players).
GameReport ddiff_play(const TemporalGraph& g, const StrategyProfile& profile, bool trace = false);

/// Lifetime difference diffusion: steps 1..tau only, one step on the last layer.
GameReport lddiff_play(const TemporalGraph& g, const StrategyProfile& profile, bool trace = false);

/// Voronoi coloring from temporal distances. A vertex no player reaches stays uncolored.
GameReport voronoi_play(const TemporalGraph& g, const StrategyProfile& profile);

GameReport play(GameVariant variant, const TemporalGraph& g, const StrategyProfile& profile,
                bool trace = false);

/// Which payoff difference to evaluate.
struct DeltaMode {
  enum class Kind { full, until_step, lifetime };
  Kind kind = Kind::full;
  int step = 0;

  static DeltaMode full() { return {Kind::full, 0}; }
  static DeltaMode until(int t) { return {Kind::until_step, t}; }
  static DeltaMode lifetime() { return {Kind::lifetime, 0}; }
};

/// u_1 - u_2 of the diffusion process evaluated per `mode`.
int delta(const TemporalGraph& g, Vertex p1, Vertex p2, DeltaMode mode);

/// Coloring of the diffusion process after exactly `steps` steps (continuing on
/// the last layer past the lifetime).
Coloring diffusion_until(const TemporalGraph& g, const StrategyProfile& profile, int steps);

}  // namespace tgames
