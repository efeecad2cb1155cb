// Two-player Nash equilibria: exhaustive oracles and the structural
// constructions for superset paths and forests, growing cycles (diffusion)
// and growing paths (Voronoi).

#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "tgames/games.hpp"
#include "tgames/reachability.hpp"
#include "tgames/temporal_graph.hpp"

namespace tgames {

enum class GameKind { diffusion, voronoi };

std::string_view to_string(GameKind kind);
std::optional<GameKind> parse_game_kind(std::string_view text);

/// Payoff u_player of a two-player game.
int payoff(GameKind kind, const TemporalGraph& g, Vertex p1, Vertex p2, int player);

struct BestResponses {
  int payoff = 0;
  std::vector<Vertex> vertices;  // ascending
};

/// Scans all n positions for `player` (1 or 2) against the fixed opponent.
BestResponses best_responses(GameKind kind, const TemporalGraph& g, Vertex opponent, int player);

enum class NashMethod { brute_force, algorithm1, superset_path, superset_forest, voronoi_iteration };

std::string_view to_string(NashMethod method);

struct Deviation {
  int player = 0;
  Vertex vertex = 0;
  int gain = 0;
};

struct NashReport {
  StrategyProfile profile;
  bool is_equilibrium = false;
  std::optional<Deviation> witness;
  NashMethod method = NashMethod::brute_force;
  /// Best-response evaluations spent by the Voronoi iteration.
  int best_response_steps = 0;
  /// Set when a growing cycle was static after trimming and brute force was used.
  bool degenerate = false;
};

/// Brute-force check. The witness is the lowest-indexed player with a
/// profitable deviation, moving to her lowest-numbered best response.
NashReport is_nash(GameKind kind, const TemporalGraph& g, const StrategyProfile& profile);

/// All ordered equilibria (p1, p2), ascending.
std::vector<StrategyProfile> find_all_nash(GameKind kind, const TemporalGraph& g);

struct NiceCentralSet {
  int max_reach = 0;              // R
  std::vector<Vertex> vertices;   // ascending
  std::vector<ReachInterval> omegas;
};

NiceCentralSet nice_central_vertices(const ForestReach& reach, int horizon);
NiceCentralSet nice_central_vertices(const TemporalGraph& forest, int horizon);

/// Diffusion equilibrium on a monotonically growing temporal cycle in O(n * tau).
NashReport nash_diffusion_growing_cycle(const TemporalGraph& g);

/// (floor(n/2), floor(n/2) + 1) on a superset temporal path.
NashReport nash_diffusion_superset_path(const TemporalGraph& g);

/// Every diffusion equilibrium of a superset temporal path, ascending.
std::vector<StrategyProfile> superset_path_equilibria(const TemporalGraph& g);

NashReport nash_diffusion_superset_forest(const TemporalGraph& g);

struct VoronoiResponse {
  Vertex vertex = 0;
  /// n = 1: the opponent's own vertex is the only position left.
  bool forced = false;
};

/// Closest vertex of the leftmost largest boundary interval of `opponent`.
VoronoiResponse voronoi_best_response_growing_path(const TemporalGraph& g, Vertex opponent);

/// Best-response iteration from `seed`; stops at the first descent.
NashReport nash_voronoi_growing_path(const TemporalGraph& g, Vertex seed = 1);

/// The structural method matching classify(g), if any.
std::optional<NashReport> nash_structural(GameKind kind, const TemporalGraph& g);

}  // namespace tgames
