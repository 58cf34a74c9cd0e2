// Text formats: edge lists with arbitrary vertex name tokens, and chord
// diagrams as whitespace-separated `name.1` / `name.2` endpoint tokens.
#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "circlegraph/chord_word.hpp"
#include "circlegraph/graph.hpp"

namespace cg {

// Input error carrying the 1-based line number it was found on.
struct ParseError : std::runtime_error {
  ParseError(int line_no, const std::string& what)
      : std::runtime_error("line " + std::to_string(line_no) + ": " + what),
        line(line_no) {}
  int line;
};

// Graph plus the external names of its vertices; vertex ids are assigned in
// order of first appearance, so names[v] round-trips.
struct NamedGraph {
  Graph graph{0};
  std::vector<std::string> names;
};

// Parses lines of `u v` vertex-name pairs. Lines whose first non-blank
// character is '#' and blank lines are skipped. Self-loops and lines without
// exactly two tokens throw ParseError; duplicate edges collapse with a note
// to `warnings` when given.
NamedGraph parse_edge_list(std::istream& in, std::ostream* warnings = nullptr);

// Diagram with chord ids assigned by first appearance, so names[c] round-trips.
struct NamedDiagram {
  ChordWord word;
  std::vector<std::string> names;
};

// Parses endpoint tokens `name.1` / `name.2` (split at the last '.'). Every
// nonblank, non-'#' line contributes; a leading `<digits>:` component prefix
// on a line is skipped, so recognizer output parses back directly. Each name
// must occur exactly twice, once per index. Throws ParseError.
NamedDiagram parse_diagram(std::istream& in);

// One-line rendering `names[chord].index ...`; inverse of parse_diagram.
std::string format_diagram(const ChordWord& w,
                           const std::vector<std::string>& names);

}  // namespace cg
