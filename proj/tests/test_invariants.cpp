#include <catch2/catch.hpp>

#include <map>
#include <set>

#include "ugt/ugt.hpp"

using namespace ugt;

TEST_CASE("boxplus") {
  CHECK(boxplus(2, 2) == 4);
  CHECK(boxplus(3, 1) == 3);
  CHECK(boxplus(0, 5) == 2);
  CHECK(boxplus(1, 1) == 2);
  CHECK(boxplus(0, 0) == 0);
  CHECK(boxplus(4, 1) == 3);
}

TEST_CASE("compatibility of radius sets") {
  CHECK(compatible({1}, {1}));
  CHECK(compatible({0, 2}, {1}));
  CHECK(compatible({3}, {0, 2}));
  CHECK(compatible({2}, {1, 3}));
  CHECK_FALSE(compatible({1, 2}, {1}));
  CHECK_FALSE(compatible({0, 1}, {0}));  // 0 in X0 reaches max X1 with the wrong parity
}

TEST_CASE("compatible pair counts match the boxplus formula") {
  // independent combinatorial oracle: enumerate all subsets directly
  for (int a = 0; a <= 4; ++a)
    for (int b = 0; b <= 4; ++b) {
      uint64_t count = 0;
      for (int m0 = 0; m0 < (1 << a); ++m0)
        for (int m1 = 0; m1 < (1 << b); ++m1) {
          std::vector<int> x0, x1;
          for (int r = 0; r < a; ++r)
            if (m0 & (1 << r)) x0.push_back(r);
          x0.push_back(a);
          for (int r = 0; r < b; ++r)
            if (m1 & (1 << r)) x1.push_back(r);
          x1.push_back(b);
          if (compatible(x0, x1)) ++count;
        }
      CHECK(count == (uint64_t(1) << boxplus(a, b)));
    }
}

TEST_CASE("alpha values from the worked examples") {
  TreeShape shape(6, 6);
  // Aut(T)+ has alpha = infinity everywhere
  for (int t = 0; t < 2; ++t)
    for (int k = 0; k <= 3; ++k) CHECK(alpha(aut_plus_spec(), shape, t, k) == AlphaSymbol::inf());
  // Alt has alpha = 0 everywhere
  for (int t = 0; t < 2; ++t)
    for (int k = 0; k <= 3; ++k) CHECK(alpha(alt_spec(), shape, t, k) == AlphaSymbol::finite(0));
  // G+(*{1}, empty), t = 0: inf, inf, 1*, 1
  GroupSpec s = parse_spec("G+(X0=*{1}; X1=empty)");
  CHECK(alpha(s, shape, 0, 0) == AlphaSymbol::inf());
  CHECK(alpha(s, shape, 0, 1) == AlphaSymbol::inf());
  CHECK(alpha(s, shape, 0, 2) == AlphaSymbol::finite(1, true));
  CHECK(alpha(s, shape, 0, 3) == AlphaSymbol::finite(1));
  for (int k = 0; k <= 3; ++k) CHECK(alpha(s, shape, 1, k) == AlphaSymbol::inf());
}

TEST_CASE("profiles of the worked examples") {
  TreeShape shape(6, 6);
  auto p1 = invariant_profile(parse_spec("G+(X0={0,2}; X1=empty)"), shape);
  CHECK(p1.c[0] == 1);
  CHECK(p1.c[1] == 0);
  CHECK(p1.Kp[0] == IntOrInf::of(2));
  CHECK(p1.Kp[1].inf);
  REQUIRE(p1.fdesc[0].has_value());
  CHECK(p1.fdesc[0]->A == std::vector<int>{0, 2});  // the even window equals X0

  auto p2 = invariant_profile(parse_spec("G+(X0={0,1}; X1={1})"), shape);
  CHECK(p2.c[0] == 1);
  CHECK(p2.c[1] == 1);
  CHECK(p2.Kp[0] == IntOrInf::of(1));
  CHECK(p2.Kp[1] == IntOrInf::of(1));

  auto p3 = invariant_profile(parse_spec("Gc*(X0={1}; X1={1})"), shape);
  CHECK(p3.c[0] == 2);
  CHECK(p3.c[1] == 2);
  CHECK(p3.Kp[0] == IntOrInf::of(1));
  CHECK(p3.Kp[1] == IntOrInf::of(1));
}

TEST_CASE("extracted f windows reproduce the defining set for one-sided specs") {
  TreeShape shape(6, 6);
  for (const auto& x : all_radius_sets(3)) {
    GroupSpec s = GroupSpec::type_preserving_of(RadiusSet::plain(x), RadiusSet::none());
    InvariantProfile p = invariant_profile(s, shape);
    INFO(render_spec(s));
    REQUIRE(p.fdesc[0].has_value());
    REQUIRE(p.fdesc[0]->A == x);
  }
}

TEST_CASE("Table 1 reproduction for max X <= 2 at (6,6)") {
  TreeShape shape(6, 6);
  for (const auto& s : enumerate_family(2)) {
    NumericProfile want = symbolic_profile(s);
    InvariantProfile got = invariant_profile(s, shape);
    INFO(render_spec(s));
    CHECK(got.c[0] == want.c0);
    CHECK(got.c[1] == want.c1);
    CHECK(got.Kp[0] == want.k0);
    CHECK(got.Kp[1] == want.k1);
  }
}

TEST_CASE("alpha sequences fit exactly one admissible shape") {
  TreeShape shape(6, 6);
  for (const auto& s : enumerate_family(1)) {
    for (int t = 0; t < 2; ++t) {
      auto seq = alpha_sequence(s, shape, t, 4);
      INFO(render_spec(s) << " t=" << t);
      CHECK(non_increasing(seq));
      CHECK(match_shape(seq).has_value());
    }
  }
}

TEST_CASE("family enumeration and counting identities") {
  auto family2 = enumerate_family(2);
  // 1 + 4*7 one-sided + 5*35 two-sided names
  CHECK(family2.size() == 204);
  std::set<std::string> names;
  for (const auto& s : family2) names.insert(render_spec(s));
  CHECK(names.size() == family2.size());

  // count_by_profile matches the family enumeration bucketed by profile
  std::map<std::tuple<int, int, std::string, std::string>, uint64_t> buckets;
  for (const auto& s : enumerate_family(4)) {
    NumericProfile p = symbolic_profile(s);
    buckets[{p.c0, p.c1, p.k0.str(), p.k1.str()}]++;
  }
  for (const auto& [key, count] : buckets) {
    auto [c0, c1, k0s, k1s] = key;
    IntOrInf k0 = k0s == "inf" ? IntOrInf::infinite() : IntOrInf::of(std::stoi(k0s));
    IntOrInf k1 = k1s == "inf" ? IntOrInf::infinite() : IntOrInf::of(std::stoi(k1s));
    INFO(c0 << "," << c1 << "," << k0s << "," << k1s);
    CHECK(count_by_profile(c0, c1, k0, k1) == count);
  }
  // worked examples
  CHECK(count_by_profile(1, 1, IntOrInf::of(1), IntOrInf::of(1)) == 4);
  CHECK(count_by_profile(1, 0, IntOrInf::of(3), IntOrInf::infinite()) == 8);
  CHECK(count_by_profile(1, 3, IntOrInf::of(2), IntOrInf::of(1)) ==
        2 * (uint64_t(1) << boxplus(2, 1)));  // rows 7 and 11 add up
}

TEST_CASE("separating diagrams for distinct specs") {
  TreeShape shape(6, 6);
  GroupSpec a = parse_spec("G+(X0={2}; X1=empty)");
  GroupSpec b = parse_spec("G+(X0={0,2}; X1=empty)");
  auto w = separating_diagram(a, b, shape, 3);
  REQUIRE(w.has_value());
  CHECK(w->depth == 2);
  // the proof's witness: a single o at the root, in the first set only
  CHECK(w->in_first == 1);
  int weight = 0;
  for (uint8_t v : w->labels) weight += v;
  CHECK(weight == 1);
  CHECK(w->labels[0] == 1);

  // a spec never separates from itself
  CHECK_FALSE(separating_diagram(a, a, shape, 3).has_value());

  // plain vs starred: the all-odd-windows diagram lies in the starred set only
  GroupSpec star = parse_spec("G+(X0=*{2}; X1=empty)");
  auto w2 = separating_diagram(a, star, shape, 3);
  REQUIRE(w2.has_value());
  CHECK(w2->in_first == 0);
}

TEST_CASE("pairwise distinctness with verified witnesses, max <= 1") {
  TreeShape shape(6, 6);
  auto family = enumerate_family(1);
  for (std::size_t i = 0; i < family.size(); ++i)
    for (std::size_t j = i + 1; j < family.size(); ++j) {
      auto w = separating_diagram(family[i], family[j], shape, 2);
      INFO(render_spec(family[i]) << " vs " << render_spec(family[j]));
      REQUIRE(w.has_value());
      Ball ball(shape, w->root_type, w->depth, BallKind::vertex_full);
      Diagram d = w->materialize(ball);
      REQUIRE(diagram_in_group(family[i], d) != diagram_in_group(family[j], d));
      REQUIRE(diagram_in_group(w->in_first ? family[i] : family[j], d));
    }
}

TEST_CASE("complete invariants at desk scale, spot checks") {
  TreeShape shape(6, 6);
  GroupSpec a = parse_spec("G+(X0={1}; X1={1})");
  CHECK(complete_invariants_check(a, a, shape, 3));
  // same numeric profile, different f: rows 7 and 11 with the same maxima
  GroupSpec row7 = parse_spec("G+(X0={2}; X1=*{1})");
  GroupSpec row11 = parse_spec("Gc*(X0={2}; X1={1})");
  NumericProfile p7 = symbolic_profile(row7), p11 = symbolic_profile(row11);
  CHECK(p7.c0 == p11.c0);
  CHECK(p7.c1 == p11.c1);
  CHECK(p7.k0 == p11.k0);
  CHECK(p7.k1 == p11.k1);
  CHECK_FALSE(invariant_profile(row7, shape).same_invariants(invariant_profile(row11, shape)));
  CHECK_FALSE(diagram_sets_equal(row7, row11, shape, 3));
  CHECK(complete_invariants_check(row7, row11, shape, 3));
}

TEST_CASE("c=2 relations for combined-star specs") {
  TreeShape shape(6, 6);
  for (const char* text : {"Gc*(X0={1}; X1={1})", "Gc*(X0={2}; X1={2})", "Gc*(X0={0,2}; X1={2})"}) {
    GroupSpec s = parse_spec(text);
    auto rel = check_c2_relations(s, shape);
    INFO(text);
    CHECK(rel.holds);
    CHECK(rel.K == s.y0.max() + 1);
  }
  CHECK_THROWS_AS(check_c2_relations(parse_spec("G+(X0={1}; X1={1})"), shape),
                  std::invalid_argument);
}

TEST_CASE("profile serialization") {
  TreeShape shape(6, 6);
  GroupSpec s = parse_spec("G+(X0={0,2}; X1=empty)");
  std::string text = render_profile(s, shape, invariant_profile(s, shape));
  CHECK(text.find("profile.v1") == 0);
  CHECK(text.find("c0=1 c1=0") != std::string::npos);
  CHECK(text.find("f0.window={0,2}") != std::string::npos);
}
