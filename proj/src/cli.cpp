#include "tgames/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "tgames/equilibria.hpp"
#include "tgames/instance_io.hpp"
#include "tgames/report_json.hpp"
#include "tgames/theorems.hpp"

namespace tgames::cli {

namespace {

// Input errors that are the caller's fault but not a flag misuse.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string input;
  bool pretty = false;
  Vertex from = 0;
  std::string game;
  std::string positions;
  bool trace = false;
  std::string method = "brute";
  std::string family;
  GeneratorParams params;
  std::string suite;
};

std::vector<Vertex> parse_positions(const std::string& text) {
  std::vector<Vertex> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw CLI::ValidationError("--positions", "'" + item + "' is not a vertex");
    }
  }
  if (out.empty()) throw CLI::ValidationError("--positions", "at least one position is required");
  return out;
}

TemporalGraph load(const Options& o, std::istream& in) {
  if (o.input.empty() || o.input == "-") {
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_tg(buf.str());
  }
  return read_tg_file(o.input);
}

GameKind game_kind(const std::string& name) {
  auto kind = parse_game_kind(name);
  if (!kind) throw CLI::ValidationError("--game", "equilibria are computed for diffusion or voronoi");
  return *kind;
}

StrategyProfile two_positions(const std::string& text) {
  StrategyProfile p{parse_positions(text)};
  if (p.players() != 2) throw CLI::ValidationError("--positions", "equilibria need exactly two positions");
  return p;
}

Json nash_find(GameKind kind, const TemporalGraph& g, const std::string& method) {
  if (method == "auto") {
    if (auto report = nash_structural(kind, g)) {
      Json doc{{"equilibria", Json::array()}, {"method", to_string(report->method)}};
      if (report->is_equilibrium) doc["equilibria"].push_back(to_json(report->profile));
      if (report->method == NashMethod::voronoi_iteration) doc["best_response_steps"] = report->best_response_steps;
      if (report->degenerate) doc["degenerate"] = true;
      return doc;
    }
  }
  Json list = Json::array();
  for (const auto& p : find_all_nash(kind, g)) list.push_back(to_json(p));
  Json doc{{"equilibria", std::move(list)}};
  if (method == "auto") doc["method"] = to_string(NashMethod::brute_force);
  return doc;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Diffusion and Voronoi games on temporal graphs", "tgames"};
  app.require_subcommand(1);
  app.add_flag("--pretty", o.pretty, "Indent JSON output");

  auto add_input = [&](CLI::App* sub) { sub->add_option("--in", o.input, "Instance file (.tg); '-' for stdin"); };

  auto* classify_cmd = app.add_subcommand("classify", "Report the graph classes of an instance");
  add_input(classify_cmd);

  auto* distances_cmd = app.add_subcommand("distances", "Temporal distances from one vertex");
  distances_cmd->add_option("--from", o.from, "Source vertex")->required();
  add_input(distances_cmd);

  auto* simulate_cmd = app.add_subcommand("simulate", "Play one strategy profile");
  simulate_cmd->add_option("--game", o.game, "diffusion, voronoi, ddiff or lddiff")
      ->required()
      ->check(CLI::IsMember({"diffusion", "voronoi", "ddiff", "lddiff"}));
  simulate_cmd->add_option("--positions", o.positions, "Comma-separated positions, one per player")->required();
  simulate_cmd->add_flag("--trace", o.trace, "Include the coloring after every step");
  add_input(simulate_cmd);

  auto* nash_cmd = app.add_subcommand("nash", "Two-player Nash equilibria");
  nash_cmd->require_subcommand(1);
  auto* find_cmd = nash_cmd->add_subcommand("find", "Find equilibria");
  auto* check_cmd = nash_cmd->add_subcommand("check", "Check one profile");
  for (auto* sub : {find_cmd, check_cmd}) {
    sub->add_option("--game", o.game, "diffusion or voronoi")->required()->check(CLI::IsMember({"diffusion", "voronoi"}));
    sub->add_option("--method", o.method, "brute or auto")->check(CLI::IsMember({"brute", "auto"}));
    add_input(sub);
  }
  check_cmd->add_option("--positions", o.positions, "p1,p2")->required();

  auto* generate_cmd = app.add_subcommand("generate", "Print a generated instance");
  generate_cmd->add_option("--family", o.family, "Generator family")->required();
  generate_cmd->add_option("--n", o.params.n, "Vertex count");
  generate_cmd->add_option("--tau", o.params.tau, "Lifetime");
  generate_cmd->add_option("--seed", o.params.seed, "Random seed");

  auto* verify_cmd = app.add_subcommand("verify-theorems", "Run the bundled (or a custom) check suite");
  verify_cmd->add_option("--suite", o.suite, "Custom suite file");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*classify_cmd) {
      const auto g = load(o, in);
      out << dump(classify_json(g, classify(g)), o.pretty);
    } else if (*distances_cmd) {
      const auto g = load(o, in);
      out << dump(distances_json(all_distances(g, o.from)), o.pretty);
    } else if (*simulate_cmd) {
      const auto profile = StrategyProfile{parse_positions(o.positions)};
      const auto g = load(o, in);
      const auto report = play(*parse_game_variant(o.game), g, profile, o.trace);
      out << dump(game_report_json(g, report), o.pretty);
    } else if (*find_cmd) {
      const auto kind = game_kind(o.game);
      const auto g = load(o, in);
      out << dump(nash_find(kind, g, o.method), o.pretty);
    } else if (*check_cmd) {
      const auto kind = game_kind(o.game);
      const auto profile = two_positions(o.positions);
      const auto g = load(o, in);
      out << dump(nash_report_json(is_nash(kind, g, profile)), o.pretty);
    } else if (*generate_cmd) {
      out << serialize_tg(generate(o.family, o.params));
    } else if (*verify_cmd) {
      std::vector<TheoremCheck> checks;
      if (o.suite.empty()) {
        checks = verify_theorems();
      } else {
        std::ifstream file(o.suite, std::ios::binary);
        if (!file) throw InputError("cannot open " + o.suite);
        std::ostringstream buf;
        buf << file.rdbuf();
        checks = run_suite(parse_suite(buf.str(), std::filesystem::path(o.suite).parent_path()));
      }
      out << dump(checks_json(checks), o.pretty);
      const bool all_pass = std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
      return all_pass ? 0 : 1;
    }
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace tgames::cli
