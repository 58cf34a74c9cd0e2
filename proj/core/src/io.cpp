#include "circlegraph/io.hpp"

#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <utility>

namespace cg {

namespace {

std::vector<std::string> tokens_of(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> out;
  std::string t;
  while (ss >> t) out.push_back(t);
  return out;
}

bool is_comment_or_blank(const std::string& line) {
  for (const char c : line) {
    if (c == ' ' || c == '\t' || c == '\r') continue;
    return c == '#';
  }
  return true;
}

}  // namespace

NamedGraph parse_edge_list(std::istream& in, std::ostream* warnings) {
  NamedGraph out;
  std::map<std::string, int> id_of;
  std::vector<std::pair<int, int>> edges;
  std::set<std::pair<int, int>> seen;
  std::string line;
  int line_no = 0;
  const auto intern = [&](const std::string& name) {
    const auto [it, fresh] = id_of.emplace(name, static_cast<int>(out.names.size()));
    if (fresh) out.names.push_back(name);
    return it->second;
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (is_comment_or_blank(line)) continue;
    const std::vector<std::string> toks = tokens_of(line);
    if (toks.size() != 2)
      throw ParseError(line_no, "expected two vertex names, got " +
                                    std::to_string(toks.size()) + " token(s)");
    if (toks[0] == toks[1])
      throw ParseError(line_no, "self-loop at vertex '" + toks[0] + "'");
    int u = intern(toks[0]);
    int v = intern(toks[1]);
    if (u > v) std::swap(u, v);
    if (!seen.emplace(u, v).second) {
      if (warnings)
        *warnings << "note: line " << line_no << ": duplicate edge " << toks[0]
                  << " " << toks[1] << " ignored\n";
      continue;
    }
    edges.emplace_back(u, v);
  }
  out.graph = Graph(static_cast<int>(out.names.size()));
  for (const auto& [u, v] : edges) out.graph.add_edge(u, v);
  return out;
}

NamedDiagram parse_diagram(std::istream& in) {
  NamedDiagram out;
  std::map<std::string, int> id_of;
  std::vector<int> index_mask;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (is_comment_or_blank(line)) continue;
    std::vector<std::string> toks = tokens_of(line);
    std::size_t first = 0;
    if (!toks.empty() && toks[0].size() >= 2 && toks[0].back() == ':') {
      bool digits = true;
      for (std::size_t i = 0; i + 1 < toks[0].size(); ++i)
        digits = digits && toks[0][i] >= '0' && toks[0][i] <= '9';
      if (digits) first = 1;  // component prefix from recognizer output
    }
    for (std::size_t i = first; i < toks.size(); ++i) {
      const std::string& tok = toks[i];
      const std::size_t dot = tok.rfind('.');
      if (dot == std::string::npos || dot == 0 || dot + 1 >= tok.size())
        throw ParseError(line_no, "endpoint token '" + tok +
                                      "' is not of the form name.1 or name.2");
      const std::string suffix = tok.substr(dot + 1);
      if (suffix != "1" && suffix != "2")
        throw ParseError(line_no, "endpoint token '" + tok +
                                      "' must end in .1 or .2");
      const int index = suffix == "1" ? 1 : 2;
      const std::string name = tok.substr(0, dot);
      const auto [it, fresh] =
          id_of.emplace(name, static_cast<int>(out.names.size()));
      if (fresh) {
        out.names.push_back(name);
        index_mask.push_back(0);
      }
      const int chord = it->second;
      const int bit = 1 << (index - 1);
      if (index_mask[static_cast<std::size_t>(chord)] & bit)
        throw ParseError(line_no, "endpoint " + tok + " occurs twice");
      index_mask[static_cast<std::size_t>(chord)] |= bit;
      out.word.push_back({chord, index});
    }
  }
  for (std::size_t c = 0; c < index_mask.size(); ++c)
    if (index_mask[c] != 3)
      throw ParseError(line_no, "chord '" + out.names[c] +
                                    "' is missing an endpoint");
  return out;
}

std::string format_diagram(const ChordWord& w,
                           const std::vector<std::string>& names) {
  std::string out;
  for (const Endpoint& e : w) {
    if (!out.empty()) out += ' ';
    out += names.at(static_cast<std::size_t>(e.chord));
    out += e.index == 1 ? ".1" : ".2";
  }
  return out;
}

}  // namespace cg
