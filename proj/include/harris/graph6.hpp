#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "harris/graph.hpp"

namespace harris {

/// Malformed graph6 input. `offset` is the zero-based byte position of the fault.
class Graph6Error : public GraphError {
 public:
  Graph6Error(const std::string& what, std::size_t offset)
      : GraphError(what + " (byte " + std::to_string(offset) + ")"), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

/// Decodes one graph6 record. An optional ">>graph6<<" prefix is accepted; anything
/// after the last data byte, including nonzero padding bits, is rejected.
Graph parse_graph6(std::string_view text);

/// Encodes g; short header for n <= 62, four-byte header above.
std::string emit_graph6(const Graph& g);

}  // namespace harris
