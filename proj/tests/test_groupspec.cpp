#include <catch2/catch.hpp>

#include "ugt/ugt.hpp"

using namespace ugt;

TEST_CASE("spec grammar round-trips") {
  for (const char* text : {
           "G+(X0={0,2}; X1=empty)",
           "G+(X0=*{1}; X1=*{1})",
           "G+(X0=empty; X1=empty)",
           "G+(X0=empty; X1={0,1,3})",
           "Gc*(X0={1}; X1={1})",
           "G(X={1,2})",
           "G*(X={2})",
           "Gc(X={0,1})",
           "Gprime(X={1})",
       }) {
    GroupSpec s = parse_spec(text);
    CHECK(render_spec(s) == text);
    CHECK(parse_spec(render_spec(s)) == s);
  }
}

TEST_CASE("spec grammar accepts the documented examples") {
  GroupSpec a = parse_spec("G+(X0={0,2}; X1=empty)");
  CHECK(a.variant == GroupSpec::Variant::type_preserving);
  CHECK(a.y0 == RadiusSet::plain({0, 2}));
  CHECK(a.y1.empty());

  GroupSpec b = parse_spec("G+(X0=*{1}; X1=*{1})");
  CHECK(b.y0 == RadiusSet::starred({1}));
  CHECK(b.y1 == RadiusSet::starred({1}));

  GroupSpec c = parse_spec("Gc*(X0={1}; X1={1})");
  CHECK(c.variant == GroupSpec::Variant::combined_star);
}

TEST_CASE("spec grammar rejects malformed input with a position") {
  CHECK_THROWS_AS(parse_spec("G+(X0={}; X1=empty)"), std::invalid_argument);
  CHECK_THROWS_AS(parse_spec("G+(X0={2,1}; X1=empty)"), std::invalid_argument);
  CHECK_THROWS_AS(parse_spec("G+(X0={1} X1=empty)"), std::invalid_argument);
  CHECK_THROWS_AS(parse_spec("Gc*(X0=empty; X1={1})"), std::invalid_argument);
  CHECK_THROWS_AS(parse_spec("G(X=*{1})"), std::invalid_argument);
  CHECK_THROWS_AS(parse_spec("G+(X0={1}; X1=empty) trailing"), std::invalid_argument);
  try {
    parse_spec("G+(X0={a}; X1=empty)");
    FAIL("expected a parse error");
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("at ") != std::string::npos);
  }
}

TEST_CASE("anchor types follow the outermost-sphere convention") {
  GroupSpec s = parse_spec("G+(X0={0,2}; X1={1})");
  CHECK(s.anchor_type(0) == 0);  // max X0 = 2
  CHECK(s.anchor_type(1) == 0);  // 1 + max X1 = 2
  GroupSpec t = parse_spec("G+(X0={1}; X1={0,2})");
  CHECK(t.anchor_type(0) == 1);
  CHECK(t.anchor_type(1) == 1);
}

TEST_CASE("regular variants require a regular tree") {
  GroupSpec s = parse_spec("G(X={1})");
  Ball b(TreeShape(4, 3), 0, 2, BallKind::vertex_full);
  CHECK_THROWS_AS(spec_windows(s, b, 2), std::invalid_argument);
}
