#include <doctest.h>

#include "conway/io.hpp"
#include "helpers.hpp"

using namespace conway;

TEST_CASE("parses the minimal unknot document") {
  DiagramDocument doc = parse_diagram("diagram U\nloops 1\nend\n");
  CHECK(doc.name == "U");
  CHECK(doc.diagram.free_loops == 1);
  CHECK(doc.diagram.crossings.empty());
}

TEST_CASE("comments and blank lines are ignored") {
  DiagramDocument doc = parse_diagram(
      "# a kink\n\ndiagram k  # inline comment\n"
      "crossing 1 A=1:2 B=2:1 orient=+ over=A\n\nend\n");
  CHECK(doc.name == "k");
  CHECK(doc.diagram.crossings.size() == 1);
}

TEST_CASE("fixture documents round trip byte for byte") {
  for (const auto& f : fixtures()) {
    CAPTURE(f.name);
    DiagramDocument doc = parse_diagram(std::string(f.document));
    CHECK(serialize_diagram(doc) == f.document);
    CHECK(parse_diagram(serialize_diagram(doc)).diagram == doc.diagram);
  }
}

TEST_CASE("order lines round trip") {
  std::string text =
      "diagram h\n"
      "crossing 1 A=1:3 B=2:4 orient=+ over=A\n"
      "crossing 2 A=4:2 B=3:1 orient=+ over=A\n"
      "order 1,2\n"
      "end\n";
  DiagramDocument doc = parse_diagram(text);
  REQUIRE(doc.diagram.component_order.has_value());
  CHECK(*doc.diagram.component_order == std::vector<EdgeId>{1, 2});
  CHECK(serialize_diagram(doc) == text);
}

TEST_CASE("syntax errors carry line numbers") {
  try {
    parse_diagram("diagram x\ncrossing 1 A=1:2 B=2:1 orient=* over=A\nend\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(std::string(e.what()).find("orient") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_diagram(""), ParseError);
  CHECK_THROWS_AS(parse_diagram("diagram x\n"), ParseError);
  CHECK_THROWS_AS(parse_diagram("diagram x\nend\nleftover\n"), ParseError);
  CHECK_THROWS_AS(parse_diagram("diagram x\nwhatever 3\nend\n"), ParseError);
}

TEST_CASE("validation failures point at the offending crossing line") {
  try {
    parse_diagram("diagram x\n\ncrossing 1 A=1:2 B=2:7 orient=+ over=A\nend\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
    CHECK(std::string(e.what()).find("dangling edge") != std::string::npos);
  }
}

TEST_CASE("contour parsing") {
  ContourSet cs = parse_contours(std::string(contour_fixture("triangles")));
  REQUIRE(cs.contours.size() == 2);
  CHECK(cs.contours[0].name == "T1");
  CHECK(cs.contours[1].vertices.size() == 3);

  ContourSet rat = parse_contours("contour c\npoint 1/3 2\npoint 4 0\npoint -2/7 -1\nend\n");
  CHECK(rat.contours[0].vertices[0].x == Rational(1, 3));
  CHECK(rat.contours[0].vertices[0].y == 2);
  CHECK(rat.contours[0].vertices[2].x == Rational(-2, 7));

  CHECK_THROWS_AS(parse_contours("contour c\npoint 0 0\npoint 1 1\nend\n"), ParseError);
  CHECK_THROWS_AS(parse_contours("contour c\npoint 0 0\n"), ParseError);
  CHECK_THROWS_AS(parse_contours("contour c\npoint 1/0 2\npoint 0 0\npoint 1 1\nend\n"),
                  ParseError);
}
