#ifndef LCYCLE_IO_HPP
#define LCYCLE_IO_HPP

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "lcycle/graph.hpp"

namespace lcycle {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

enum class GraphFormat { edgelist, gml, dimacs };

std::optional<GraphFormat> parse_format(std::string_view name);
const char* to_string(GraphFormat f);
/// Guesses the format from a file extension (.gml, .col/.dimacs, else edge
/// list).
GraphFormat format_from_extension(const std::filesystem::path& path);

/// Whitespace separated pairs of integer ids, one edge per line. Lines
/// starting with '#' or '%' are comments; columns after the second are
/// ignored. Ids are relabelled densely in order of first appearance.
Graph parse_edge_list(std::istream& in);

/// The `graph [ node [ id N ] edge [ source A target B ] ]` subset of GML.
/// Other attributes, including `directed`, are ignored.
Graph parse_gml(std::istream& in);

/// DIMACS edge format: `p edge N M` followed by `e u v` lines (1-based).
Graph parse_dimacs(std::istream& in);

Graph parse_graph(std::istream& in, GraphFormat format);

/// Throws std::runtime_error if the file cannot be opened, ParseError on
/// malformed content.
Graph read_graph(const std::filesystem::path& path, GraphFormat format);

}  // namespace lcycle

#endif  // LCYCLE_IO_HPP
