// Existence / non-existence checks re-derived by brute force on explicit
// instances, plus a small line-based format for custom suites:
//
//   <id> expect=<no_ne|ne_exists_with_profile|set_equals|colorings_equal>
//        game=<diffusion|voronoi> (family=<f> [n=..] [tau=..] [seed=..] | file=<path>)
//        [profiles=a:b,c:d]
//
// one check per line, `#` comments.

#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tgames/equilibria.hpp"
#include "tgames/report_json.hpp"
#include "tgames/temporal_graph.hpp"

namespace tgames {

enum class Expectation { ne_exists_with_profile, no_ne, set_equals, colorings_equal };

std::string_view to_string(Expectation e);
std::optional<Expectation> parse_expectation(std::string_view text);

struct InstanceSpec {
  std::string family;  // empty when `file` is used
  GeneratorParams params;
  std::filesystem::path file;

  TemporalGraph load() const;
  std::string describe() const;
};

struct SuiteEntry {
  std::string id;
  Expectation expectation = Expectation::no_ne;
  GameKind game = GameKind::diffusion;
  InstanceSpec instance;
  /// Profiles to check (ne_exists_with_profile), the expected set
  /// (set_equals), or the profiles to compare (colorings_equal). When empty
  /// the expectation falls back to its structural default.
  std::vector<StrategyProfile> profiles;
};

struct TheoremCheck {
  std::string id;
  std::string instance;
  Expectation expectation = Expectation::no_ne;
  bool passed = false;
  std::string details;
};

/// Evaluates one entry. Failures, including unloadable instances, are
/// reported in the result rather than thrown.
TheoremCheck evaluate(const SuiteEntry& entry);

std::vector<SuiteEntry> bundled_suite();
std::vector<TheoremCheck> run_suite(const std::vector<SuiteEntry>& entries);
std::vector<TheoremCheck> verify_theorems();

/// Throws ParseError. Relative `file=` paths resolve against `base`.
std::vector<SuiteEntry> parse_suite(std::string_view text, const std::filesystem::path& base = {});

/// {"checks":[...],"passed":k,"total":m}
Json checks_json(const std::vector<TheoremCheck>& checks);

}  // namespace tgames
