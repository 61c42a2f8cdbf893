#include "doctest.h"
#include "euclid/error.hpp"
#include "euclid/program.hpp"

using namespace euclid;

TEST_CASE("parse every statement form") {
  const ConstructionProgram p = parse_program(
      "# comment\n"
      "point A = (0, -1.5)\n"
      "point B = (2e0, 3)\n"
      "\n"
      "line l = line(A, B)\n"
      "circle c = circle(A, B)\n"
      "circle k = circle(B, r_of(A, B))\n"
      "arc s = arc(A, B, C)\n"
      "points X, Y = intersect(l, c)\n"
      "point Z = intersect(l, c, nearest=B)\n"
      "point W = intersect(l, c, farthest=B)\n"
      "point V = intersect(l, c, second)\n"
      "macro G = golden_section(A, B)\n"
      "macro P = inscribe_regular(2 * 3, c)\n"
      "assert dist(A, B) == sqrt(13) tol 1e-6\n"
      "assert on(X, c)\n"
      "assert parallel(l, l)\n"
      "assert perp(l, l)\n"
      "emit svg \"out.svg\"\n");
  REQUIRE(p.statements.size() == 17);
  CHECK(p.statements[0].line == 2);
  const auto& fp = std::get<FreePoint>(p.statements[0].instruction);
  CHECK(fp.y == -1.5);
  const auto& in = std::get<Intersect>(p.statements[6].instruction);
  CHECK(in.names.size() == 2);
  CHECK(in.selector.kind == Selector::Kind::kBoth);
  CHECK(std::get<Intersect>(p.statements[7].instruction).selector.reference == "B");
  CHECK(std::get<Intersect>(p.statements[8].instruction).selector.kind ==
        Selector::Kind::kFarthest);
  const auto& a = std::get<Assert>(p.statements[12].instruction);
  REQUIRE(a.tolerance);
  CHECK(*a.tolerance == 1e-6);
  CHECK(std::get<Emit>(p.statements[16].instruction).path == "out.svg");
}

TEST_CASE("formatted statements parse back to the same text") {
  const char* lines[] = {
      "point A = (0.1, -2)",
      "line l = line(A, B)",
      "circle c = circle(A, B)",
      "circle k = circle(B, r_of(A, B))",
      "arc s = arc(A, B, C)",
      "points X, Y = intersect(l, c)",
      "point Z = intersect(l, c, nearest=B)",
      "point V = intersect(l, c, first)",
      "macro P = inscribe_regular(6, c)",
      "assert dist(A, B) == 3 tol 1e-06",
      "assert on(X, c)",
      "emit svg \"a b.svg\"",
  };
  for (const char* text : lines) {
    const ConstructionProgram p = parse_program(text);
    REQUIRE(p.statements.size() == 1);
    const std::string once = format_instruction(p.statements[0].instruction);
    const ConstructionProgram q = parse_program(once);
    CHECK(format_instruction(q.statements[0].instruction) == once);
  }
}

TEST_CASE("parse errors carry line and column") {
  try {
    parse_program("point A = (0, 0)\npoint B = (1, 0\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() > 1);
  }
  CHECK_THROWS_AS(parse_program("banana A = 3\n"), ParseError);
  CHECK_THROWS_AS(parse_program("point A = (0, 0) extra\n"), ParseError);
  CHECK_THROWS_AS(parse_program("emit svg \"open\n"), ParseError);
  CHECK_THROWS_AS(parse_program("point A = (1e, 0)\n"), ParseError);
}
