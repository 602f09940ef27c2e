#include <catch2/catch.hpp>

#include "ugt/ugt.hpp"

using namespace ugt;

TEST_CASE("half-tree labelling for the Alt spec: all e beyond the seed") {
  GroupSpec s = alt_spec();
  int m = halftree_m(s);
  CHECK(m == 1);
  Ball region(TreeShape(4, 4), 0, 2 * m + 1, BallKind::edge_rooted);
  Rng rng(9);
  Diagram seed = random_seed(s, region, rng);
  auto r = half_tree_labelling(s, seed);
  CHECK(verify_half_tree(s, r));
  // the Alt windows force every label to e, so the relabelled side is all e
  for (uint32_t v = region.level_begin(m); v < region.level_end(region.depth()); ++v)
    if (region.side_of(v) == 1) CHECK(r.labelled.label[v] == 0);
}

TEST_CASE("half-tree labelling reproduces the illustrated pattern for G+({2},{2})") {
  GroupSpec s = parse_spec("G+(X0={2}; X1=empty)");
  GroupSpec both = parse_spec("G+(X0={2}; X1={2})");
  (void)s;
  int m = halftree_m(both);
  CHECK(m == 3);
  Ball region(TreeShape(4, 4), 0, 2 * m, BallKind::edge_rooted);
  // seed: all e except two side-1 depth-2 vertices under different children
  // of w; the only seed-contained window over them (around w) stays even,
  // while four sibling-anchored windows completing at sphere 4 come out odd
  Diagram seed = all_e_diagram(region, region.depth());
  uint32_t w = region.root(1);
  uint32_t o1 = region.child(region.child(w, 1), 1);
  uint32_t o2 = region.child(region.child(w, 2), 1);
  seed.label[o1] = 1;
  seed.label[o2] = 1;
  validate_seed(both, seed, m);
  auto r = half_tree_labelling(both, seed);
  CHECK(verify_half_tree(both, r));
  // every odd window puts its o at the end of the all-1-numbered path from
  // its anchor, two levels up
  int first_wave = 0;
  for (uint32_t v = region.level_begin(m); v < region.level_end(region.depth()); ++v)
    if (region.side_of(v) == 1 && r.labelled.label[v]) {
      uint32_t cur = v;
      for (int up = 0; up < 2; ++up) {
        CHECK(region.slot_of(cur) == 1);
        cur = region.parent(cur);
      }
      if (region.depth_of(v) == 4) ++first_wave;
      CHECK(region.depth_of(v) != 5);  // those windows all close evenly
    }
  // exactly the four sibling-anchored windows of the seed's o's come out odd
  CHECK(first_wave == 4);
}

TEST_CASE("half-tree postconditions hold for random seeds across the small family") {
  TreeShape shape(6, 6);
  Rng rng(77);
  for (const char* text : {"G+(X0={0}; X1={0})", "G+(X0={1}; X1=empty)", "G+(X0={1}; X1={1})",
                           "G+(X0={2}; X1={2})", "G+(X0={0,1}; X1={1})", "G+(X0={2}; X1={0,2})",
                           "G+(X0={0,2}; X1=empty)", "G+(X0=empty; X1={1})"}) {
    GroupSpec s = parse_spec(text);
    int m = halftree_m(s);
    Ball region(shape, 0, 2 * m, BallKind::edge_rooted);
    for (int trial = 0; trial < 6; ++trial) {
      Diagram seed = random_seed(s, region, rng);
      auto r = half_tree_labelling(s, seed);
      INFO(text << " trial " << trial);
      REQUIRE(verify_half_tree(s, r));
      // the construction only rewrites side 1 beyond the seed
      for (uint32_t v = 0; v < region.size(); ++v)
        if (in_seed_region(region, v, m)) REQUIRE(r.labelled.label[v] == seed.label[v]);
    }
  }
}

TEST_CASE("half-tree rejects bad input") {
  GroupSpec s = alt_spec();
  Ball shallow(TreeShape(4, 4), 0, 1, BallKind::edge_rooted);
  Diagram seed = all_e_diagram(shallow, 1);
  CHECK_THROWS_AS(half_tree_labelling(s, seed), std::invalid_argument);

  Ball vertex(TreeShape(4, 4), 0, 3, BallKind::vertex_full);
  Diagram vs = all_e_diagram(vertex, 3);
  CHECK_THROWS_AS(half_tree_labelling(s, vs), std::invalid_argument);

  Ball region(TreeShape(4, 4), 0, 2, BallKind::edge_rooted);
  Diagram bad = all_e_diagram(region, 2);
  bad.label[region.root(0)] = 1;  // violates the Alt singleton window at the root
  CHECK_THROWS_AS(half_tree_labelling(s, bad), std::invalid_argument);

  // starred and combined classes are outside the generation argument
  Ball big(TreeShape(4, 4), 0, 4, BallKind::edge_rooted);
  Diagram e = all_e_diagram(big, 4);
  CHECK_THROWS_AS(half_tree_labelling(parse_spec("G+(X0=*{1}; X1=empty)"), e),
                  std::invalid_argument);
  CHECK_THROWS_AS(half_tree_labelling(parse_spec("Gc*(X0={1}; X1={1})"), e),
                  std::invalid_argument);
}
