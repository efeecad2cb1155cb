// The line-oriented `.tg` instance format:
//
//   tg 1
//   n <N> tau <T>
//   layer 1
//   <u> <v>
//   layer 2
//   ...
//
// `#` starts a comment. Layers appear in order 1..T; a layer without edge
// lines is empty.

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "tgames/temporal_graph.hpp"

namespace tgames {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what);
  /// 1-based; 0 when the error is not tied to a line.
  int line() const { return line_; }

 private:
  int line_;
};

/// Throws ParseError on syntax, ordering and count errors; graph validation
/// failures are reported as ParseError too, with the offending line.
TemporalGraph parse_tg(std::string_view text);

/// Canonical document: sorted edges, one layer header per layer.
std::string serialize_tg(const TemporalGraph& g);

TemporalGraph read_tg_file(const std::string& path);

}  // namespace tgames
