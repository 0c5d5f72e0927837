#ifndef OPTURAN_GRAPH6_HPP
#define OPTURAN_GRAPH6_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "opturan/graph.hpp"

namespace opturan {

/// Malformed graph6 input. `offset` is the byte position of the first
/// offending byte (input length for truncated input).
class Graph6ParseError : public std::runtime_error {
public:
  Graph6ParseError(std::size_t offset, const std::string& what);
  std::size_t offset() const { return offset_; }

private:
  std::size_t offset_;
};

/// Header-free graph6 text encoding (6 bits per byte, bias 63).
std::string graph6_encode(const Graph& g);
Graph graph6_decode(std::string_view text);

}  // namespace opturan

#endif
