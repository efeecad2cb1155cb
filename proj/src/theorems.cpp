#include "tgames/theorems.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "tgames/instance_io.hpp"

namespace tgames {

std::string_view to_string(Expectation e) {
  switch (e) {
    case Expectation::ne_exists_with_profile: return "ne_exists_with_profile";
    case Expectation::no_ne: return "no_ne";
    case Expectation::set_equals: return "set_equals";
    case Expectation::colorings_equal: return "colorings_equal";
  }
  return "no_ne";
}

std::optional<Expectation> parse_expectation(std::string_view text) {
  for (auto e : {Expectation::ne_exists_with_profile, Expectation::no_ne, Expectation::set_equals,
                 Expectation::colorings_equal}) {
    if (to_string(e) == text) return e;
  }
  return std::nullopt;
}

TemporalGraph InstanceSpec::load() const {
  if (!file.empty()) return read_tg_file(file.string());
  return generate(family, params);
}

std::string InstanceSpec::describe() const {
  if (!file.empty()) return "file=" + file.string();
  std::ostringstream out;
  out << "family=" << family;
  if (params.n != 0) out << " n=" << params.n;
  if (params.tau != 0) out << " tau=" << params.tau;
  if (params.seed != 0) out << " seed=" << params.seed;
  return out.str();
}

namespace {

std::string profile_text(const StrategyProfile& p) {
  std::string s = "(";
  for (int i = 0; i < p.players(); ++i) s += (i ? "," : "") + std::to_string(p.positions[i]);
  return s + ")";
}

std::string profiles_text(const std::vector<StrategyProfile>& ps) {
  std::string s = "{";
  for (std::size_t i = 0; i < ps.size(); ++i) s += (i ? " " : "") + profile_text(ps[i]);
  return s + "}";
}

void check_no_ne(const SuiteEntry& e, const TemporalGraph& g, TheoremCheck& out) {
  const auto all = find_all_nash(e.game, g);
  out.passed = all.empty();
  out.details = all.empty() ? "no equilibrium" : "equilibria " + profiles_text(all);
}

void check_ne_exists(const SuiteEntry& e, const TemporalGraph& g, TheoremCheck& out) {
  std::vector<StrategyProfile> candidates = e.profiles;
  std::string source = "given";
  if (candidates.empty()) {
    if (auto structural = nash_structural(e.game, g)) {
      candidates.push_back(structural->profile);
      source = std::string(to_string(structural->method));
    }
  }
  if (candidates.empty()) {
    const auto all = find_all_nash(e.game, g);
    out.passed = !all.empty();
    out.details = out.passed ? "brute force found " + profile_text(all.front()) : "no equilibrium";
    return;
  }
  for (const auto& p : candidates) {
    const auto report = is_nash(e.game, g, p);
    if (!report.is_equilibrium) {
      const auto& w = *report.witness;
      out.passed = false;
      out.details = source + " profile " + profile_text(p) + " is not an equilibrium: player " +
                    std::to_string(w.player) + " gains " + std::to_string(w.gain) + " at vertex " +
                    std::to_string(w.vertex);
      return;
    }
  }
  out.passed = true;
  out.details = source + " profile " + profiles_text(candidates) + " is an equilibrium";
}

void check_set_equals(const SuiteEntry& e, const TemporalGraph& g, TheoremCheck& out) {
  std::vector<StrategyProfile> expected = e.profiles;
  if (expected.empty()) expected = superset_path_equilibria(g);
  std::sort(expected.begin(), expected.end());
  const auto all = find_all_nash(e.game, g);
  out.passed = all == expected;
  out.details = "found " + profiles_text(all) + ", expected " + profiles_text(expected);
}

void check_colorings_equal(const SuiteEntry& e, const TemporalGraph& g, TheoremCheck& out) {
  // Default: every profile with distinct positions. Co-located players gray
  // only their vertex in diffusion but every reachable vertex in Voronoi.
  std::vector<StrategyProfile> profiles = e.profiles;
  const bool defaulted = profiles.empty();
  if (defaulted) {
    for (Vertex a = 1; a <= g.vertex_count(); ++a) {
      for (Vertex b = 1; b <= g.vertex_count(); ++b) {
        if (a != b) profiles.push_back(pair_profile(a, b));
      }
    }
  }
  for (const auto& p : profiles) {
    if (diffusion_play(g, p).coloring != voronoi_play(g, p).coloring) {
      out.passed = false;
      out.details = "colorings differ at " + profile_text(p);
      return;
    }
  }
  out.passed = true;
  out.details = std::to_string(profiles.size()) + (defaulted ? " distinct-position" : "") + " profiles agree";
}

}  // namespace

TheoremCheck evaluate(const SuiteEntry& entry) {
  TheoremCheck out;
  out.id = entry.id;
  out.instance = entry.instance.describe();
  out.expectation = entry.expectation;
  try {
    const auto g = entry.instance.load();
    switch (entry.expectation) {
      case Expectation::no_ne: check_no_ne(entry, g, out); break;
      case Expectation::ne_exists_with_profile: check_ne_exists(entry, g, out); break;
      case Expectation::set_equals: check_set_equals(entry, g, out); break;
      case Expectation::colorings_equal: check_colorings_equal(entry, g, out); break;
    }
  } catch (const std::exception& ex) {
    out.passed = false;
    out.details = std::string("error: ") + ex.what();
  }
  return out;
}

std::vector<SuiteEntry> bundled_suite() {
  std::vector<SuiteEntry> s;
  auto add = [&](std::string id, Expectation x, GameKind game, std::string family, GeneratorParams p = {}) {
    s.push_back({std::move(id), x, game, {std::move(family), p, {}}, {}});
  };
  const auto D = GameKind::diffusion;
  const auto V = GameKind::voronoi;

  add("sequential-path-no-equilibrium", Expectation::no_ne, D, "sequential_path", {6, 0, 0});
  for (int n = 4; n <= 10; ++n) {
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
      add("superset-path-characterization", Expectation::set_equals, D, "random_superset_path", {n, 4, seed});
    }
  }
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    add("superset-forest-construction", Expectation::ne_exists_with_profile, D, "random_superset_forest",
        {static_cast<int>(6 + seed % 7), 4, seed});
  }
  add("shrinking-path-no-equilibrium", Expectation::no_ne, D, "shrinking_path8");
  for (int n = 6; n <= 10; ++n) add("superset-cycle-no-equilibrium", Expectation::no_ne, D, "superset_cycle", {n, 0, 0});
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    add("growing-cycle-construction", Expectation::ne_exists_with_profile, D, "random_growing_cycle",
        {static_cast<int>(3 + seed % 10), static_cast<int>(1 + seed % 6), seed});
  }
  add("shrinking-cycle-no-equilibrium", Expectation::no_ne, D, "shrinking_cycle11");
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    add("shrinking-equivalence", Expectation::colorings_equal, D, "random_shrinking_forest", {8, 4, seed});
    add("shrinking-equivalence", Expectation::colorings_equal, D, "random_shrinking_cycle", {8, 4, seed});
  }
  add("shrinking-path-voronoi-no-equilibrium", Expectation::no_ne, V, "shrinking_path8");
  add("shrinking-cycle-voronoi-no-equilibrium", Expectation::no_ne, V, "shrinking_cycle11");
  add("voronoi-path-no-equilibrium", Expectation::no_ne, V, "voronoi_nonex_path");
  add("voronoi-cycle-no-equilibrium", Expectation::no_ne, V, "voronoi_nonex_cycle");
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    add("voronoi-growing-path-iteration", Expectation::ne_exists_with_profile, V, "random_growing_path",
        {static_cast<int>(2 + seed % 13), static_cast<int>(1 + seed % 8), seed});
  }
  add("voronoi-growing-path-iteration", Expectation::ne_exists_with_profile, V, "fig_boundary_path");
  return s;
}

std::vector<TheoremCheck> run_suite(const std::vector<SuiteEntry>& entries) {
  std::vector<TheoremCheck> out;
  out.reserve(entries.size());
  for (const auto& e : entries) out.push_back(evaluate(e));
  return out;
}

std::vector<TheoremCheck> verify_theorems() { return run_suite(bundled_suite()); }

namespace {

template <typename T>
T number(std::string_view text, int line, std::string_view key) {
  T value{};
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || end != text.data() + text.size()) {
    throw ParseError(line, "invalid value for " + std::string(key) + ": '" + std::string(text) + "'");
  }
  return value;
}

std::vector<StrategyProfile> parse_profiles(std::string_view text, int line) {
  std::vector<StrategyProfile> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    const std::string_view item = text.substr(pos, comma - pos);
    const std::size_t colon = item.find(':');
    if (colon == std::string_view::npos) throw ParseError(line, "profile '" + std::string(item) + "' is not a:b");
    out.push_back(pair_profile(number<int>(item.substr(0, colon), line, "profiles"),
                               number<int>(item.substr(colon + 1), line, "profiles")));
    pos = comma + 1;
  }
  return out;
}

}  // namespace

std::vector<SuiteEntry> parse_suite(std::string_view text, const std::filesystem::path& base) {
  std::vector<SuiteEntry> out;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    std::istringstream words(raw);
    std::string id;
    if (!(words >> id)) continue;
    if (id.find('=') != std::string::npos) throw ParseError(line, "a check starts with its id");

    SuiteEntry entry;
    entry.id = id;
    bool has_expect = false;
    std::string word;
    while (words >> word) {
      const auto eq = word.find('=');
      if (eq == std::string::npos) throw ParseError(line, "expected key=value, got '" + word + "'");
      const std::string key = word.substr(0, eq);
      const std::string value = word.substr(eq + 1);
      if (key == "expect") {
        const auto x = parse_expectation(value);
        if (!x) throw ParseError(line, "unknown expectation '" + value + "'");
        entry.expectation = *x;
        has_expect = true;
      } else if (key == "game") {
        const auto k = parse_game_kind(value);
        if (!k) throw ParseError(line, "unknown game '" + value + "'");
        entry.game = *k;
      } else if (key == "family") {
        entry.instance.family = value;
      } else if (key == "file") {
        const std::filesystem::path p(value);
        entry.instance.file = p.is_absolute() || base.empty() ? p : base / p;
      } else if (key == "n") {
        entry.instance.params.n = number<int>(value, line, key);
      } else if (key == "tau") {
        entry.instance.params.tau = number<int>(value, line, key);
      } else if (key == "seed") {
        entry.instance.params.seed = number<std::uint64_t>(value, line, key);
      } else if (key == "profiles") {
        entry.profiles = parse_profiles(value, line);
      } else {
        throw ParseError(line, "unknown key '" + key + "'");
      }
    }
    if (!has_expect) throw ParseError(line, "missing expect=");
    if (entry.instance.family.empty() == entry.instance.file.empty()) {
      throw ParseError(line, "exactly one of family= and file= is required");
    }
    out.push_back(std::move(entry));
  }
  return out;
}

Json checks_json(const std::vector<TheoremCheck>& checks) {
  Json list = Json::array();
  int passed = 0;
  for (const auto& c : checks) {
    passed += c.passed ? 1 : 0;
    list.push_back(Json{{"id", c.id},
                        {"instance", c.instance},
                        {"expectation", to_string(c.expectation)},
                        {"result", c.passed ? "pass" : "fail"},
                        {"details", c.details}});
  }
  return Json{{"checks", std::move(list)}, {"passed", passed}, {"total", static_cast<int>(checks.size())}};
}

}  // namespace tgames
