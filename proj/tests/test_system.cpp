#include <catch2/catch.hpp>

#include "oracles.hpp"
#include "ugt/ugt.hpp"

using namespace ugt;

TEST_CASE("window enumeration on small balls") {
  // Alt windows at (4,4) depth 1: five singletons
  Ball d1(TreeShape(4, 4), 0, 1, BallKind::vertex_full);
  auto alt_windows = spec_windows(alt_spec(), d1, 1);
  CHECK(alt_windows.size() == 5);
  for (const auto& w : alt_windows) {
    CHECK(w.verts.size() == 1);
    CHECK(w.cls == -1);
  }

  // G+({1}, empty) at (4,4) depth 2: four windows {v} u grandchildren
  Ball d2(TreeShape(4, 4), 0, 2, BallKind::vertex_full);
  GroupSpec s = parse_spec("G+(X0={1}; X1=empty)");
  auto windows = spec_windows(s, d2, 2);
  REQUIRE(windows.size() == 4);
  for (const auto& w : windows) {
    CHECK(d2.type_of(w.anchor) == 1);
    REQUIRE(w.verts.size() == 4);
    CHECK(w.verts[0] == 0);  // the root
    for (std::size_t i = 1; i < w.verts.size(); ++i) CHECK(d2.depth_of(w.verts[i]) == 2);
  }

  // starred variant: same windows, one shared class
  GroupSpec star = parse_spec("G+(X0=*{1}; X1=empty)");
  auto sw = spec_windows(star, d2, 2);
  REQUIRE(sw.size() == 4);
  for (const auto& w : sw) CHECK(w.cls == 0);
}

TEST_CASE("solution counts of compiled systems") {
  Ball d1(TreeShape(4, 4), 0, 1, BallKind::vertex_full);
  CHECK(DiagramSet(alt_spec(), d1, 1).dimension() == 0);  // all labels forced e
  CHECK(DiagramSet(aut_plus_spec(), d1, 1).dimension() == 5);  // 2^5 = 32

  Ball d2(TreeShape(4, 4), 0, 2, BallKind::vertex_full);
  GroupSpec plain = parse_spec("G+(X0={1}; X1=empty)");
  GroupSpec star = parse_spec("G+(X0=*{1}; X1=empty)");
  CHECK(DiagramSet(plain, d2, 2).dimension() == 13);  // 2^{17-4}
  CHECK(DiagramSet(star, d2, 2).dimension() == 14);   // 2^{17-3}
}

TEST_CASE("diagram membership examples") {
  Ball d2(TreeShape(6, 6), 0, 2, BallKind::vertex_full);
  Diagram root_o = all_e_diagram(d2, 2);
  root_o.label[0] = 1;
  CHECK_FALSE(diagram_in_group(alt_spec(), root_o));       // singleton window violated
  CHECK(diagram_in_group(parse_spec("G+(X0={2}; X1=empty)"), root_o));
  CHECK(diagram_in_group(aut_plus_spec(), root_o));

  // the all-e diagram belongs to every spec's set
  for (const char* text : {"G+(X0={0}; X1={0})", "G+(X0=*{1}; X1={0,2})", "Gc*(X0={2}; X1={2})",
                           "G(X={1})", "G*(X={1})", "Gc(X={1})", "Gprime(X={1})"}) {
    Diagram e = all_e_diagram(d2, 2);
    CHECK(diagram_in_group(parse_spec(text), e));
  }
}

TEST_CASE("compiled sets equal the definitional brute force at (4,4) and (4,5)") {
  std::vector<const char*> specs = {
      "G+(X0=empty; X1=empty)", "G+(X0={0}; X1={0})",   "G+(X0={1}; X1=empty)",
      "G+(X0=*{1}; X1=empty)",  "G+(X0={0,2}; X1=empty)", "G+(X0={1}; X1={1})",
      "Gc*(X0={1}; X1={1})",
  };
  for (auto shape : {TreeShape(4, 4), TreeShape(4, 5)}) {
    for (int rt = 0; rt < 2; ++rt) {
      for (int depth = 0; depth <= 2; ++depth) {
        oracle::Tree tree = oracle::build_tree(shape.d0, shape.d1, rt, depth);
        Ball ball(shape, rt, depth, BallKind::vertex_full);
        REQUIRE(tree.size() == static_cast<int>(ball.size()));
        for (const char* text : specs) {
          GroupSpec s = parse_spec(text);
          auto windows = oracle::spec_windows(s, tree);
          DiagramSet set(s, ball, depth);
          uint64_t count_oracle = 0, count_compiled = 0;
          for (uint64_t mask = 0; mask < (uint64_t(1) << ball.size()); ++mask) {
            Diagram d = all_e_diagram(ball, depth);
            for (uint32_t v = 0; v < ball.size(); ++v) d.label[v] = (mask >> v) & 1;
            bool by_oracle = oracle::labelling_in_group(windows, mask);
            bool by_system = set.contains(d);
            REQUIRE(by_oracle == by_system);
            count_oracle += by_oracle;
            count_compiled += by_system;
          }
          REQUIRE(count_oracle == (uint64_t(1) << set.dimension()));
        }
      }
    }
  }
}

TEST_CASE("star doubling of solution counts") {
  // With at least one contained window, starring one plain slot doubles the
  // count; with none, the counts agree.
  Ball d2(TreeShape(4, 4), 0, 2, BallKind::vertex_full);
  GroupSpec plain = parse_spec("G+(X0={2}; X1=empty)");
  GroupSpec star = parse_spec("G+(X0=*{2}; X1=empty)");
  CHECK(spec_windows(plain, d2, 2).size() == 1);
  CHECK(DiagramSet(star, d2, 2).dimension() == DiagramSet(plain, d2, 2).dimension() + 1);

  Ball d1(TreeShape(4, 4), 0, 1, BallKind::vertex_full);
  CHECK(spec_windows(plain, d1, 1).empty());
  CHECK(DiagramSet(star, d1, 1).dimension() == DiagramSet(plain, d1, 1).dimension());

  GroupSpec multi = parse_spec("G+(X0={1}; X1=empty)");
  GroupSpec multi_star = parse_spec("G+(X0=*{1}; X1=empty)");
  CHECK(spec_windows(multi, d2, 2).size() == 4);
  CHECK(DiagramSet(multi_star, d2, 2).dimension() == DiagramSet(multi, d2, 2).dimension() + 1);
}

TEST_CASE("extension: projection property and constructive extend") {
  Rng rng(41);
  for (const char* text : {"G+(X0={0}; X1={0})", "G+(X0={1}; X1=empty)", "G+(X0=*{1}; X1=empty)",
                           "G+(X0={0,2}; X1=empty)", "Gc*(X0={1}; X1={1})", "G+(X0={1}; X1={1})",
                           "G(X={1})", "G*(X={1})", "Gc(X={1})", "Gprime(X={1})"}) {
    GroupSpec s = parse_spec(text);
    Ball ball(TreeShape(4, 4), 0, 3, BallKind::vertex_full);
    // every depth-k member extends and restricts back
    for (int k = 0; k < 3; ++k) {
      for (int trial = 0; trial < 10; ++trial) {
        Diagram d = random_diagram(s, ball, k, rng);
        REQUIRE(DiagramSet(s, ball, k).contains(d));
        Diagram up = extend_diagram(s, d);
        REQUIRE(DiagramSet(s, ball, k + 1).contains(up));
        REQUIRE(restrict_diagram(up, k).label == d.label);
      }
    }
    // Alt: all-e extends to all-e
    if (std::string(text) == "G+(X0={0}; X1={0})") {
      Diagram e = all_e_diagram(ball, 1);
      CHECK(extend_diagram(s, e).label == all_e_diagram(ball, 2).label);
    }
    // rejecting an invalid input
    Diagram bad = all_e_diagram(ball, 1);
    if (!DiagramSet(s, ball, 1).contains([&] {
          Diagram b2 = bad;
          b2.label[0] = 1;
          return b2;
        }())) {
      bad.label[0] = 1;
      CHECK_THROWS_AS(extend_diagram(s, bad), std::invalid_argument);
    }
  }
}

TEST_CASE("starred extension: the first window class fixes the shared parity") {
  Ball ball(TreeShape(4, 4), 0, 3, BallKind::vertex_full);
  GroupSpec star = parse_spec("G+(X0=*{1}; X1=empty)");
  // at depth 1 no window is contained yet, so the class parity is still free
  Diagram d1 = all_e_diagram(ball, 1);
  CHECK(spec_windows(star, ball, 1).empty());
  // ask for odd: the first completing windows (depth 2) all come out odd
  Diagram odd = extend_diagram(star, d1, {1, std::nullopt});
  DiagramSet s2(star, ball, 2);
  auto parity = s2.class_parities(odd);
  REQUIRE(parity[0].has_value());
  CHECK(*parity[0] == 1);
  for (const auto& w : s2.windows()) {
    int p = 0;
    for (uint32_t v : w.verts) p ^= odd.label[v];
    CHECK(p == 1);
  }
  // later windows must match: extending once more keeps every window odd
  Diagram odd3 = extend_diagram(star, odd);
  DiagramSet s3(star, ball, 3);
  for (const auto& w : s3.windows()) {
    int p = 0;
    for (uint32_t v : w.verts) p ^= odd3.label[v];
    CHECK(p == 1);
  }
  // the default choice keeps everything even
  Diagram even = extend_diagram(star, d1);
  auto parity_even = s2.class_parities(even);
  REQUIRE(parity_even[0].has_value());
  CHECK(*parity_even[0] == 0);
}

TEST_CASE("projection of the depth-(k+1) set equals the depth-k set, exactly") {
  Ball ball(TreeShape(4, 4), 0, 3, BallKind::vertex_full);
  for (const char* text : {"G+(X0={0}; X1={0})", "G+(X0={1}; X1=empty)", "G+(X0=*{1}; X1=empty)",
                           "Gc*(X0={1}; X1={1})"}) {
    GroupSpec s = parse_spec(text);
    for (int k = 0; k < 3; ++k) {
      BitMatrix up = DiagramSet(s, ball, k + 1).code();
      BitMatrix projected = project_code(up, ball.count_to_depth(k));
      BitMatrix low = DiagramSet(s, ball, k).code();
      REQUIRE(projected == low);
    }
  }
}

TEST_CASE("monotone family: the Alt set sits inside every other spec's set") {
  Ball ball(TreeShape(4, 4), 0, 2, BallKind::vertex_full);
  for (const char* text : {"G+(X0=empty; X1=empty)", "G+(X0={1}; X1=empty)",
                           "G+(X0=*{1}; X1=*{1})", "Gc*(X0={1}; X1={1})", "G(X={1})",
                           "Gprime(X={2})"}) {
    GroupSpec s = parse_spec(text);
    for (int k = 0; k <= 2; ++k) {
      DiagramSet alt(alt_spec(), ball, k), other(s, ball, k);
      BitMatrix basis = alt.code();
      for (std::size_t r = 0; r < basis.rows(); ++r) {
        Diagram d = all_e_diagram(ball, k);
        for (uint32_t v = 0; v < d.label.size(); ++v) d.label[v] = basis.get(r, v);
        REQUIRE(other.contains(d));
      }
    }
  }
}

TEST_CASE("automorphism membership agrees with diagram membership") {
  Ball ball(TreeShape(4, 4), 0, 2, BallKind::vertex_full);
  Coloring i = canonical_coloring(ball);
  auto all = enumerate_automorphisms(ball);
  Rng rng(43);
  std::vector<GroupSpec> specs;
  for (const char* text : {"G+(X0={0}; X1={0})", "G+(X0={1}; X1=empty)", "G+(X0=*{1}; X1=empty)",
                           "G(X={1})", "Gc(X={1})"})
    specs.push_back(parse_spec(text));
  int agree = 0;
  for (int trial = 0; trial < 10'000; ++trial) {
    const GroupSpec& s = specs[rng.below(specs.size())];
    const Automorphism& g = all[rng.below(all.size())];
    Diagram d = diagram_of(i, g, 1);
    REQUIRE(automorphism_in_group(s, i, g) == diagram_in_group(s, d));
    ++agree;
  }
  CHECK(agree == 10'000);
  for (const auto& s : specs) CHECK(automorphism_in_group(s, i, identity(ball)));

  // one odd local action inside a plain window
  Automorphism g = identity(ball);
  std::swap(g.slot[0][0], g.slot[0][1]);
  CHECK_FALSE(automorphism_in_group(alt_spec(), i, g));
}
