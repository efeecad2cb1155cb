#include "tgames/instance_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace tgames {

ParseError::ParseError(int line, const std::string& what)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

namespace {

std::vector<std::string_view> tokens(std::string_view line) {
  if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

int integer(std::string_view tok, int line) {
  int value = 0;
  const auto [end, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || end != tok.data() + tok.size()) {
    throw ParseError(line, "expected an integer, got '" + std::string(tok) + "'");
  }
  return value;
}

}  // namespace

TemporalGraph parse_tg(std::string_view text) {
  enum class Expect { magic, header, body } expect = Expect::magic;
  int n = 0;
  int tau = 0;
  std::vector<EdgeList> layers;
  std::vector<std::vector<int>> lines;  // source line of every edge
  int line_no = 0;

  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    const std::string_view line = text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    const auto tok = tokens(line);
    if (tok.empty()) continue;

    switch (expect) {
      case Expect::magic:
        if (tok.size() != 2 || tok[0] != "tg") throw ParseError(line_no, "expected 'tg 1'");
        if (tok[1] != "1") throw ParseError(line_no, "unsupported format version " + std::string(tok[1]));
        expect = Expect::header;
        break;
      case Expect::header:
        if (tok.size() != 4 || tok[0] != "n" || tok[2] != "tau") throw ParseError(line_no, "expected 'n <N> tau <T>'");
        n = integer(tok[1], line_no);
        tau = integer(tok[3], line_no);
        if (n < 1) throw ParseError(line_no, "n must be positive");
        if (tau < 1) throw ParseError(line_no, "tau must be positive");
        expect = Expect::body;
        break;
      case Expect::body:
        if (tok[0] == "layer") {
          if (tok.size() != 2) throw ParseError(line_no, "expected 'layer <k>'");
          const int k = integer(tok[1], line_no);
          const int want = static_cast<int>(layers.size()) + 1;
          if (k != want) {
            throw ParseError(line_no, "layers out of order: expected layer " + std::to_string(want) + ", got " +
                                          std::to_string(k));
          }
          if (k > tau) throw ParseError(line_no, "layer " + std::to_string(k) + " exceeds tau " + std::to_string(tau));
          layers.emplace_back();
          lines.emplace_back();
          break;
        }
        if (tok.size() != 2) throw ParseError(line_no, "expected an edge '<u> <v>' or 'layer <k>'");
        if (layers.empty()) throw ParseError(line_no, "edge before the first layer header");
        {
          const int a = integer(tok[0], line_no);
          const int b = integer(tok[1], line_no);
          if (a < 1 || a > n || b < 1 || b > n) {
            throw ParseError(line_no, "edge endpoint out of range [1," + std::to_string(n) + "]");
          }
          if (a == b) throw ParseError(line_no, "self-loop at vertex " + std::to_string(a));
          layers.back().push_back(Edge::make(a, b));
          lines.back().push_back(line_no);
        }
        break;
    }
  }
  if (expect == Expect::magic) throw ParseError(0, "empty document: expected 'tg 1'");
  if (expect == Expect::header) throw ParseError(0, "missing 'n <N> tau <T>' header");
  if (static_cast<int>(layers.size()) != tau) {
    throw ParseError(0, "header declares tau " + std::to_string(tau) + " but " + std::to_string(layers.size()) +
                            " layers are present");
  }
  for (std::size_t t = 0; t < layers.size(); ++t) {
    std::vector<std::size_t> order(layers[t].size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return layers[t][x] < layers[t][y]; });
    for (std::size_t i = 1; i < order.size(); ++i) {
      if (layers[t][order[i]] == layers[t][order[i - 1]]) {
        throw ParseError(lines[t][order[i]], "duplicate edge in layer " + std::to_string(t + 1));
      }
    }
  }
  try {
    return TemporalGraph(n, std::move(layers));
  } catch (const GraphError& e) {
    throw ParseError(0, e.what());
  }
}

std::string serialize_tg(const TemporalGraph& g) {
  std::ostringstream out;
  out << "tg 1\n" << "n " << g.vertex_count() << " tau " << g.lifetime() << '\n';
  for (int t = 1; t <= g.lifetime(); ++t) {
    out << "layer " << t << '\n';
    for (const auto& e : g.layer(t)) out << e.u << ' ' << e.v << '\n';
  }
  return out.str();
}

TemporalGraph read_tg_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_tg(buf.str());
}

}  // namespace tgames
