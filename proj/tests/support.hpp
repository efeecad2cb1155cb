#pragma once

#include <string>
#include <vector>

#include "tgames/temporal_graph.hpp"

namespace support {

using tgames::EdgeList;
using tgames::TemporalGraph;

inline EdgeList path(int n) {
  EdgeList e;
  for (int i = 1; i < n; ++i) e.push_back({i, i + 1});
  return e;
}

inline EdgeList cycle(int n) {
  EdgeList e = path(n);
  e.push_back({1, n});
  return e;
}

inline TemporalGraph static_graph(int n, const EdgeList& edges, int tau = 1) {
  return TemporalGraph(n, std::vector<EdgeList>(tau, edges));
}

inline TemporalGraph fig1() { return tgames::generate("sequential_path", {6, 0, 0}); }

inline TemporalGraph random(const std::string& family, int n, int tau, std::uint64_t seed) {
  return tgames::generate(family, {n, tau, seed});
}

}  // namespace support
