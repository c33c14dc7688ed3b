#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "specham/graph.hpp"

namespace specham {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// graph6: 6-bit encoding, short header for n <= 62, '~'-prefixed long
// header for n <= 258047. write o parse is the identity on canonical text.
Graph parse_graph6(const std::string& text);
std::string write_graph6(const Graph& g);

// one "u v" pair per line, 0-based, '#'-comments allowed; vertex count is
// max endpoint + 1 unless a "# vertices: n" comment or n_hint raises it
Graph parse_edge_list(const std::string& text, std::optional<int> n_hint = std::nullopt);
std::string write_edge_list(const Graph& g);

}  // namespace specham
