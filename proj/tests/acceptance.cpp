// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "tgames/cli.hpp"
#include "tgames/equilibria.hpp"
#include "tgames/report_json.hpp"

using namespace tgames;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
  bool pass = true;
  std::string detail;
};

int failures = 0;

void report(int id, const std::string& name, const std::function<Outcome()>& body, double budget) {
  const auto start = Clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double took = seconds_since(start);
  if (took > budget) {
    o.pass = false;
    o.detail += "; over the " + std::to_string(budget) + " s budget";
  }
  char timing[32];
  std::snprintf(timing, sizeof timing, "%.2f s", took);
  std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << id << ' ' << name << ": " << o.detail << " (" << timing << ")"
            << std::endl;
  if (!o.pass) ++failures;
}

TemporalGraph gen(const std::string& family, int n, int tau, std::uint64_t seed) {
  return generate(family, {n, tau, seed});
}

int uniform(std::uint64_t seed, int lo, int hi) {
  // Deterministic parameter spread without touching the generators' streams.
  const std::uint64_t x = (seed + 1) * 0x9E3779B97F4A7C15ULL;
  return lo + static_cast<int>((x >> 33) % static_cast<std::uint64_t>(hi - lo + 1));
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// 1 ---------------------------------------------------------------------------
Outcome non_existence() {
  struct Case {
    std::string label;
    GameKind kind;
    TemporalGraph g;
  };
  std::vector<Case> cases;
  cases.push_back({"sequential_path(6)/diffusion", GameKind::diffusion, gen("sequential_path", 6, 0, 0)});
  cases.push_back({"shrinking_path8/diffusion", GameKind::diffusion, gen("shrinking_path8", 0, 0, 0)});
  for (int n = 6; n <= 10; ++n) {
    cases.push_back({"superset_cycle(" + std::to_string(n) + ")/diffusion", GameKind::diffusion,
                     gen("superset_cycle", n, 0, 0)});
  }
  cases.push_back({"shrinking_cycle11/diffusion", GameKind::diffusion, gen("shrinking_cycle11", 0, 0, 0)});
  cases.push_back({"shrinking_path8/voronoi", GameKind::voronoi, gen("shrinking_path8", 0, 0, 0)});
  cases.push_back({"shrinking_cycle11/voronoi", GameKind::voronoi, gen("shrinking_cycle11", 0, 0, 0)});
  cases.push_back({"voronoi_nonex_path/voronoi", GameKind::voronoi, gen("voronoi_nonex_path", 0, 0, 0)});
  cases.push_back({"voronoi_nonex_cycle/voronoi", GameKind::voronoi, gen("voronoi_nonex_cycle", 0, 0, 0)});
  Outcome o;
  int empty = 0;
  for (const auto& c : cases) {
    if (find_all_nash(c.kind, c.g).empty()) {
      ++empty;
    } else {
      o.pass = false;
      o.detail += c.label + " has an equilibrium; ";
    }
  }
  o.detail += std::to_string(empty) + "/" + std::to_string(cases.size()) + " instances without equilibrium";
  return o;
}

// 2 ---------------------------------------------------------------------------
Outcome superset_paths() {
  Outcome o;
  int checked = 0;
  for (int n = 2; n <= 12; ++n) {
    std::vector<std::pair<int, int>> expected;
    for (int p : {n / 2, (n + 1) / 2}) {
      if (p + 1 > n) continue;
      expected.push_back({p, p + 1});
      expected.push_back({p + 1, p});
    }
    std::sort(expected.begin(), expected.end());
    expected.erase(std::unique(expected.begin(), expected.end()), expected.end());
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
      const int tau = uniform(seed * 131 + n, 1, 6);
      // Alternate growing schedules and arbitrary superset schedules.
      const auto g = gen(seed % 2 ? "random_growing_path" : "random_superset_path", n, tau, seed);
      std::vector<std::pair<int, int>> found;
      for (const auto& p : find_all_nash(GameKind::diffusion, g)) found.push_back({p[1], p[2]});
      ++checked;
      if (found != expected && o.pass) {
        o.pass = false;
        o.detail = "mismatch at n=" + std::to_string(n) + " seed=" + std::to_string(seed) + "; ";
      }
    }
  }
  o.detail += std::to_string(checked) + " superset paths (n = 2..12, 200 schedules each)";
  return o;
}

// 3 ---------------------------------------------------------------------------
Outcome algorithm_one() {
  Outcome o;
  int sound = 0;
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    const auto g = gen("random_growing_cycle", uniform(seed, 3, 12), uniform(seed + 7777, 1, 6), seed);
    const auto r = nash_diffusion_growing_cycle(g);
    if (r.is_equilibrium && is_nash(GameKind::diffusion, g, r.profile).is_equilibrium) {
      ++sound;
    } else if (o.pass) {
      o.pass = false;
      o.detail = "unsound at seed " + std::to_string(seed) + "; ";
    }
  }
  o.detail += std::to_string(sound) + "/500 profiles pass brute-force is_nash";
  return o;
}

// 4 ---------------------------------------------------------------------------
Outcome voronoi_iteration() {
  Outcome o;
  int sound = 0;
  int max_excess = 0;
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    const int n = uniform(seed, 2, 14);
    const auto g = gen("random_growing_path", n, uniform(seed + 4242, 1, 8), seed);
    const auto r = nash_voronoi_growing_path(g);
    max_excess = std::max(max_excess, r.best_response_steps - n);
    const bool ok = r.best_response_steps <= n && is_nash(GameKind::voronoi, g, r.profile).is_equilibrium;
    if (ok) {
      ++sound;
    } else if (o.pass) {
      o.pass = false;
      o.detail = "failure at seed " + std::to_string(seed) + "; ";
    }
  }
  o.detail += std::to_string(sound) + "/500 converge within n steps and pass brute-force is_nash (largest steps - n: " +
              std::to_string(max_excess) + ")";
  return o;
}

// 5 ---------------------------------------------------------------------------
Outcome shrinking_equivalence() {
  long long profiles = 0;
  long long mismatches = 0;
  long long colocated_mismatches = 0;
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    const bool cycle = seed % 2 == 1;
    const int n = uniform(seed, cycle ? 3 : 1, 12);
    const auto g = gen(cycle ? "random_shrinking_cycle" : "random_shrinking_forest", n, uniform(seed + 99, 1, 5), seed);
    for (Vertex a = 1; a <= n; ++a) {
      for (Vertex b = 1; b <= n; ++b) {
        ++profiles;
        const auto p = pair_profile(a, b);
        if (diffusion_play(g, p).coloring != voronoi_play(g, p).coloring) {
          ++mismatches;
          if (a == b) ++colocated_mismatches;
        }
      }
    }
  }
  Outcome o;
  o.pass = mismatches == 0;
  o.detail = std::to_string(profiles) + " profiles on 500 instances, " + std::to_string(mismatches) + " mismatches";
  if (mismatches > 0) {
    o.detail += " (" + std::to_string(colocated_mismatches) + " with p1 = p2, " +
                std::to_string(mismatches - colocated_mismatches) +
                " with distinct positions; co-located players gray only their vertex in diffusion but every "
                "reachable vertex in Voronoi)";
  }
  return o;
}

// 6 ---------------------------------------------------------------------------
struct Tally {
  std::string name;
  int instances = 0;
  long long violations = 0;
};

bool right_boundary(const std::vector<std::optional<int>>& first, const std::vector<std::optional<int>>& td, int n,
                    Vertex b) {
  return b == n || *first[b] > *td[b];
}

Outcome lemma_suite() {
  std::vector<Tally> t;
  constexpr int kInstances = 200;

  {  // Equal arrivals iff a right boundary separates.
    Tally x{"boundary-lemma"};
    for (std::uint64_t seed = 0; seed < kInstances; ++seed) {
      const int n = uniform(seed, 3, 14);
      const auto g = gen("random_growing_path", n, uniform(seed + 1, 1, 8), seed);
      const auto first = first_appearances(g);
      std::vector<std::vector<std::optional<int>>> td(n + 1);
      for (Vertex v = 1; v <= n; ++v) td[v] = oracle::distances(g, v);
      for (Vertex v = 1; v <= n; ++v)
        for (Vertex w = v + 1; w <= n; ++w)
          for (Vertex y = w + 1; y <= n; ++y) {
            bool sep = false;
            for (Vertex r = w; r < y; ++r) sep = sep || right_boundary(first, td[v], n, r);
            if ((td[v][y] == td[w][y]) != sep) ++x.violations;
          }
      ++x.instances;
    }
    t.push_back(x);
  }
  {  // Boundary intervals partition [n] \ {v}.
    Tally x{"interval-partition"};
    for (std::uint64_t seed = 0; seed < kInstances; ++seed) {
      const int n = uniform(seed, 1, 14);
      const auto g = gen("random_growing_path", n, uniform(seed + 2, 1, 8), seed);
      const PathBoundaries pb(g);
      for (Vertex v = 1; v <= n; ++v) {
        const auto d = pb.decompose(v);
        std::vector<int> cover(n + 1, 0);
        for (const auto* list : {&d.left_intervals, &d.right_intervals})
          for (const auto& iv : *list)
            for (Vertex y = iv.lo; y <= iv.hi; ++y) ++cover[y];
        for (Vertex y = 1; y <= n; ++y) x.violations += cover[y] != (y == v ? 0 : 1);
      }
      ++x.instances;
    }
    t.push_back(x);
  }
  {  // U_1 within J_{p2}(p1), U_2 within J_{p1}(p2).
    Tally x{"voronoi-set-in-boundary-interval"};
    for (std::uint64_t seed = 0; seed < kInstances; ++seed) {
      const int n = uniform(seed, 2, 14);
      const auto g = gen("random_growing_path", n, uniform(seed + 3, 1, 8), seed);
      const PathBoundaries pb(g);
      for (Vertex a = 1; a <= n; ++a)
        for (Vertex b = 1; b <= n; ++b) {
          if (a == b) continue;
          const auto c = voronoi_play(g, pair_profile(a, b)).coloring;
          const auto j1 = pb.decompose(b).interval_of(a);
          const auto j2 = pb.decompose(a).interval_of(b);
          for (Vertex y : c.vertices_of(1)) x.violations += !j1.contains(y);
          for (Vertex y : c.vertices_of(2)) x.violations += !j2.contains(y);
        }
      ++x.instances;
    }
    t.push_back(x);
  }
  {  // A central vertex of a reach interval reaches all of it.
    Tally x{"central-vertex-reach"};
    for (std::uint64_t seed = 0; seed < kInstances; ++seed) {
      const int n = uniform(seed, 1, 14);
      const auto f = gen("random_growing_forest", n, uniform(seed + 4, 1, 6), seed);
      const ForestReach reach(f);
      for (Vertex v = 1; v <= n; ++v) {
        const auto omega = reach.interval(v);
        const auto c = central_vertices(omega.lo, omega.hi);
        for (Vertex m : {c.left, c.right}) {
          const auto td = oracle::distances(f, m, f.lifetime());
          for (Vertex y = omega.lo; y <= omega.hi; ++y) x.violations += !td[y].has_value();
        }
      }
      ++x.instances;
    }
    t.push_back(x);
  }
  {  // Incomparable reach: lifetime difference equals the reach-size difference.
    Tally x{"delta-incomparable-reach"};
    for (std::uint64_t seed = 0; seed < kInstances; ++seed) {
      const int n = uniform(seed, 2, 12);
      const auto f = gen("random_growing_forest", n, uniform(seed + 5, 1, 6), seed);
      const ForestReach reach(f);
      for (Vertex u = 1; u <= n; ++u)
        for (Vertex v = 1; v <= n; ++v) {
          const auto ou = reach.interval(u);
          const auto ov = reach.interval(v);
          if (u == v || ou.contains(ov) || ov.contains(ou)) continue;
          const auto c = oracle::diffusion(f, {u, v}, true);
          x.violations += oracle::count(c, 1) - oracle::count(c, 2) != ou.size() - ov.size();
        }
      ++x.instances;
    }
    t.push_back(x);
  }
  {  // Omega_v within Omega_u, u < v: player 1 colors [alpha_u, u], player 2 [v, beta_u].
    Tally x{"subset-reach-coloring"};
    for (std::uint64_t seed = 0; seed < kInstances; ++seed) {
      const int n = uniform(seed, 2, 12);
      const auto f = gen("random_growing_forest", n, uniform(seed + 6, 1, 6), seed);
      const ForestReach reach(f);
      for (Vertex u = 1; u <= n; ++u)
        for (Vertex v = u + 1; v <= n; ++v) {
          const auto ou = reach.interval(u);
          if (!ou.contains(reach.interval(v))) continue;
          const auto c = oracle::diffusion(f, {u, v}, true);
          for (Vertex y = ou.lo; y <= u; ++y) x.violations += c[y - 1] != 1;
          for (Vertex y = v; y <= ou.hi; ++y) x.violations += c[y - 1] != 2;
        }
      ++x.instances;
    }
    t.push_back(x);
  }
  {  // Growing cycles: nothing uncolored, at most two gray.
    Tally x{"growing-cycle-coverage"};
    for (std::uint64_t seed = 0; seed < kInstances; ++seed) {
      const int n = uniform(seed, 3, 12);
      const auto g = gen("random_growing_cycle", n, uniform(seed + 7, 1, 6), seed);
      for (Vertex a = 1; a <= n; ++a)
        for (Vertex b = 1; b <= n; ++b) {
          if (a == b) continue;
          const auto c = diffusion_play(g, pair_profile(a, b)).coloring;
          x.violations += c.count(kUncolored) != 0 || c.count(kGray) > 2;
        }
      ++x.instances;
    }
    t.push_back(x);
  }
  {  // Voronoi set of each player within her diffusion set.
    Tally x{"voronoi-within-diffusion"};
    for (std::uint64_t seed = 0; seed < kInstances; ++seed) {
      const int n = uniform(seed, 2, 11);
      const auto g = gen("random", n, uniform(seed + 8, 1, 6), seed);
      for (Vertex a = 1; a <= n; ++a)
        for (Vertex b = 1; b <= n; ++b) {
          const auto d = diffusion_play(g, pair_profile(a, b)).coloring;
          const auto v = voronoi_play(g, pair_profile(a, b)).coloring;
          for (int p = 1; p <= 2; ++p)
            for (Vertex y : v.vertices_of(p)) x.violations += d.at(y) != p;
        }
      ++x.instances;
    }
    t.push_back(x);
  }

  Outcome o;
  for (const auto& x : t) {
    if (x.violations != 0 || x.instances < kInstances) o.pass = false;
    o.detail += x.name + " " + std::to_string(x.violations) + "/" + std::to_string(x.instances) + "; ";
  }
  o.detail += "violations/instances";
  return o;
}

// 7 ---------------------------------------------------------------------------
Outcome golden_figures() {
  const std::string root = TGAMES_TEST_DATA;
  struct Golden {
    std::vector<std::string> args;
    std::string file;
  };
  const std::vector<Golden> goldens = {
      {{"simulate", "--game", "diffusion", "--positions", "2,3", "--in", root + "/data/fig1.tg"}, "fig1_diffusion.json"},
      {{"simulate", "--game", "voronoi", "--positions", "2,3", "--in", root + "/data/fig1.tg"}, "fig1_voronoi.json"},
      {{"simulate", "--game", "voronoi", "--positions", "5,7", "--in", root + "/data/figboundary.tg"},
       "figboundary_voronoi.json"},
  };
  Outcome o;
  int matched = 0;
  for (const auto& gd : goldens) {
    std::istringstream in;
    std::ostringstream out, err;
    const int code = cli::run(gd.args, in, out, err);
    if (code == 0 && out.str() == slurp(root + "/golden/" + gd.file)) {
      ++matched;
    } else {
      o.pass = false;
      o.detail += gd.file + " differs; ";
    }
  }
  // Independent reading of the boundary figure: U_1 = {5}, U_2 = [7,12], payoffs (1,6).
  std::istringstream in;
  std::ostringstream out, err;
  cli::run(goldens[2].args, in, out, err);
  const auto doc = Json::parse(out.str());
  const auto coloring = doc["coloring"].get<std::vector<int>>();
  std::vector<int> u1, u2;
  for (int v = 1; v <= 15; ++v) {
    if (coloring[v - 1] == 1) u1.push_back(v);
    if (coloring[v - 1] == 2) u2.push_back(v);
  }
  const bool sets = doc["payoffs"] == Json::array({1, 6}) && u1 == std::vector<int>{5} &&
                    u2 == std::vector<int>{7, 8, 9, 10, 11, 12};
  if (!sets) {
    o.pass = false;
    o.detail += "boundary figure sets differ; ";
  }
  // Sequential path figure: diffusion (2,3) gives [1,2] vs [3,6]; Voronoi leaves 4..6 gray.
  const auto fig1 = generate("sequential_path", {6, 0, 0});
  const bool fig1_ok = oracle::diffusion(fig1, {2, 3}) == std::vector<int>{1, 1, 2, 2, 2, 2} &&
                       oracle::voronoi(fig1, {2, 3}) == std::vector<int>{1, 1, 2, 0, 0, 0};
  if (!fig1_ok) {
    o.pass = false;
    o.detail += "reference colorings of the sequential path differ; ";
  }
  o.detail += std::to_string(matched) + "/" + std::to_string(goldens.size()) + " reports byte-identical";
  return o;
}

// 8 ---------------------------------------------------------------------------
Outcome performance() {
  const auto g = gen("random_growing_cycle", 100000, 50, 2024);
  auto start = Clock::now();
  const auto r = nash_diffusion_growing_cycle(g);
  const double alg = seconds_since(start);
  start = Clock::now();
  const auto row = all_distances(g, 1);
  const double dist = seconds_since(start);
  Outcome o;
  o.pass = alg < 2.0 && dist < 0.5 && r.method == NashMethod::algorithm1 && row.at(1) == Arrival(0);
  char buf[160];
  std::snprintf(buf, sizeof buf, "n=100000 tau=50: growing-cycle construction %.3f s (< 2 s), distance row %.3f s (< 0.5 s)",
                alg, dist);
  o.detail = buf;
  return o;
}

}  // namespace

int main() {
  report(1, "non-existence regressions", non_existence, 1.0);
  report(2, "superset-path characterization", superset_paths, 10.0);
  report(3, "growing-cycle construction soundness", algorithm_one, 60.0);
  report(4, "Voronoi best-response iteration", voronoi_iteration, 60.0);
  report(5, "shrinking equivalence", shrinking_equivalence, 60.0);
  report(6, "lemma suite", lemma_suite, 600.0);
  report(7, "golden figures", golden_figures, 60.0);
  report(8, "performance smoke", performance, 60.0);
  return failures == 0 ? 0 : 1;
}
