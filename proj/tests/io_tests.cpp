#include <sstream>
#include <string>
#include <vector>

#include "circlegraph/io.hpp"
#include "doctest.h"
#include "test_util.hpp"

using cg::ParseError;

TEST_CASE("edge list parsing") {
  SUBCASE("names are assigned by first appearance") {
    std::istringstream in("b a\n# comment line\n\n  a c\nc b\n");
    const cg::NamedGraph g = cg::parse_edge_list(in);
    REQUIRE(g.names == std::vector<std::string>{"b", "a", "c"});
    REQUIRE(g.graph.vertex_count() == 3);
    CHECK(g.graph.edge_count() == 3);
    CHECK(g.graph.has_edge(0, 1));
    CHECK(g.graph.has_edge(1, 2));
    CHECK(g.graph.has_edge(0, 2));
  }
  SUBCASE("duplicate edges collapse with a warning") {
    std::istringstream in("x y\ny x\n");
    std::ostringstream warn;
    const cg::NamedGraph g = cg::parse_edge_list(in, &warn);
    CHECK(g.graph.edge_count() == 1);
    CHECK(warn.str().find("duplicate") != std::string::npos);
  }
  SUBCASE("self-loops carry their line number") {
    std::istringstream in("a b\n\nc c\n");
    try {
      cg::parse_edge_list(in);
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line == 3);
      CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
  }
  SUBCASE("wrong token counts are refused") {
    std::istringstream one("a\n");
    CHECK_THROWS_AS(cg::parse_edge_list(one), ParseError);
    std::istringstream three("a b c\n");
    CHECK_THROWS_AS(cg::parse_edge_list(three), ParseError);
  }
}

TEST_CASE("diagram parsing") {
  SUBCASE("round trip through format_diagram") {
    std::istringstream in("a.1 b.1 a.2 b.2");
    const cg::NamedDiagram d = cg::parse_diagram(in);
    REQUIRE(d.names == std::vector<std::string>{"a", "b"});
    REQUIRE(d.word.size() == 4);
    CHECK(d.word[0] == cg::Endpoint{0, 1});
    CHECK(d.word[2] == cg::Endpoint{0, 2});
    const std::string text = cg::format_diagram(d.word, d.names);
    std::istringstream again(text);
    const cg::NamedDiagram d2 = cg::parse_diagram(again);
    CHECK(d2.word == d.word);
    CHECK(d2.names == d.names);
  }
  SUBCASE("component prefixes and comments are skipped") {
    std::istringstream in("# diagram\n0: a.1 a.2\n12: b.1 b.2\n");
    const cg::NamedDiagram d = cg::parse_diagram(in);
    CHECK(d.names == std::vector<std::string>{"a", "b"});
    CHECK(d.word.size() == 4);
  }
  SUBCASE("names may themselves contain dots") {
    std::istringstream in("v.0.1 v.1.1 v.0.2 v.1.2");
    const cg::NamedDiagram d = cg::parse_diagram(in);
    CHECK(d.names == std::vector<std::string>{"v.0", "v.1"});
  }
  SUBCASE("fixture word survives a round trip") {
    std::istringstream in(test_util::kFigDiagramWord);
    const cg::NamedDiagram d = cg::parse_diagram(in);
    const auto named = test_util::parse_word(test_util::kFigDiagramWord);
    CHECK(d.word == named.word);
    std::istringstream again(cg::format_diagram(d.word, d.names));
    CHECK(cg::parse_diagram(again).word == d.word);
  }
  SUBCASE("malformed endpoints are refused with line numbers") {
    std::istringstream missing("a.1 b.1 a.2\n");
    CHECK_THROWS_AS(cg::parse_diagram(missing), ParseError);
    std::istringstream bad_index("a.1 a.3\n");
    CHECK_THROWS_AS(cg::parse_diagram(bad_index), ParseError);
    std::istringstream twice("\na.1 a.1\n");
    try {
      cg::parse_diagram(twice);
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line == 2);
    }
    std::istringstream no_dot("a1 a2\n");
    CHECK_THROWS_AS(cg::parse_diagram(no_dot), ParseError);
  }
}
