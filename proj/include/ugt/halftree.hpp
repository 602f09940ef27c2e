#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "ugt/ball.hpp"
#include "ugt/diagram.hpp"
#include "ugt/groupspec.hpp"
#include "ugt/rng.hpp"
#include "ugt/system.hpp"

namespace ugt {

// Windows of a spec over a fixed region, grouped by completion level; built
// once and shared across many seeds.
struct RegionWindows {
  const Ball* ball;
  GroupSpec spec;
  std::vector<Window> all;
  std::vector<std::vector<Window>> by_level;

  RegionWindows(const GroupSpec& s, const Ball& b)
      : ball(&b), spec(s), all(spec_windows(s, b, b.depth())) {
    by_level.resize(b.depth() + 1);
    for (int level = 0; level <= b.depth(); ++level)
      by_level[level] = completing_windows(s, b, level);
  }
};

// Finite stage of the half-tree generation argument.  The region is an
// edge-rooted ball: side 0 carries the prescribed action, side 1 (rooted at
// w) is relabelled from sphere M on by the deterministic rule: a window that
// must come out odd gets its "o" at the end of the all-1-numbered path from
// its anchor, everything else is labelled e.
struct HalfTreeResult {
  Diagram labelled;       // full region labelling (seed + construction)
  uint32_t s0 = 0;        // start of the all-2-numbered path
  uint32_t s_m = 0;       // its M-th vertex
  int m = 0;              // M = max(max Y0, max Y1) + 1
};

inline int halftree_m(const GroupSpec& s) {
  int m = 0;
  for (const RadiusSet* x : {&s.y0, &s.y1})
    if (!x->empty()) m = std::max(m, x->max());
  return m + 1;
}

// Seed region: all of side 0 plus B(w, M-1) on side 1.
inline bool in_seed_region(const Ball& b, uint32_t x, int m) {
  return b.side_of(x) == 0 || b.depth_of(x) <= m - 1;
}

inline void validate_seed(const RegionWindows& rw, const Diagram& seed, int m) {
  const Ball& b = *rw.ball;
  // every window contained in the seed region must be satisfied; star
  // classes must agree wherever visible
  std::array<std::optional<int>, 2> cls_parity;
  for (const auto& w : rw.all) {
    bool inside = true;
    for (uint32_t v : w.verts)
      if (!in_seed_region(b, v, m)) {
        inside = false;
        break;
      }
    if (!inside) continue;
    int p = 0;
    for (uint32_t v : w.verts) p ^= seed.label[v];
    if (w.cls < 0) {
      if (p) throw std::invalid_argument("seed violates a contained window");
    } else if (!cls_parity[w.cls]) {
      cls_parity[w.cls] = p;
    } else if (*cls_parity[w.cls] != p) {
      throw std::invalid_argument("seed violates a star class");
    }
  }
}

inline void validate_seed(const GroupSpec& s, const Diagram& seed, int m) {
  validate_seed(RegionWindows(s, *seed.ball), seed, m);
}

inline HalfTreeResult half_tree_labelling(const RegionWindows& rw, const Diagram& seed) {
  const Ball& b = *rw.ball;
  const GroupSpec& s = rw.spec;
  if (b.kind() != BallKind::edge_rooted)
    throw std::invalid_argument("half-tree labelling expects an edge-rooted region");
  // The generation argument covers the plain groups G+(Y0,Y1): a starred
  // class whose parity is pinned odd by the seed forces o's next to the
  // 2-numbered path and the all-e ball never appears.
  if (s.variant != GroupSpec::Variant::type_preserving || s.y0.star() || s.y1.star())
    throw std::invalid_argument("half-tree labelling is defined for plain G+ groups");
  validate_spec_shape(s, b.shape());
  int m = halftree_m(s);
  int n = b.depth();
  if (n < 2 * m) throw std::invalid_argument("region depth must be at least 2M");
  validate_seed(rw, seed, m);

  HalfTreeResult out;
  out.m = m;
  out.labelled = seed;
  Diagram& d = out.labelled;

  // relabel side-1 spheres M..N; anchors of windows completing on side 1 at
  // level >= M sit strictly inside side 1
  for (int level = m; level <= n; ++level) {
    for (uint32_t v = b.level_begin(level); v < b.level_end(level); ++v)
      if (b.side_of(v) == 1) d.label[v] = 0;
    for (const auto& w : rw.by_level[level]) {
      if (b.side_of(w.anchor) != 1) continue;  // side-0 windows live in the seed
      int have = 0;
      for (uint32_t v : w.verts) have ^= d.label[v];
      if (have != 0) {
        // all-1-numbered path from the anchor to the new sphere
        uint32_t z = w.anchor;
        for (int step = b.depth_of(w.anchor); step < level; ++step) z = b.child(z, 1);
        d.label[z] ^= 1;
      }
    }
  }

  // the all-2-numbered path: s_0 is the least e-labelled vertex of S(w,M) on
  // side 1, then always the slot-2 child
  out.s0 = UINT32_MAX;
  for (uint32_t v = b.level_begin(m); v < b.level_end(m); ++v)
    if (b.side_of(v) == 1 && d.label[v] == 0) {
      out.s0 = v;
      break;
    }
  if (out.s0 == UINT32_MAX) throw std::logic_error("no e-labelled vertex at sphere M");
  uint32_t cur = out.s0;
  for (int j = 0; j < m; ++j) cur = b.child(cur, 2);
  out.s_m = cur;
  return out;
}

inline HalfTreeResult half_tree_labelling(const GroupSpec& s, const Diagram& seed) {
  return half_tree_labelling(RegionWindows(s, *seed.ball), seed);
}

// Post-conditions, checked against the produced labelling: all contained
// windows hold, B(s_M, M) is entirely e, and so is the half-tree past s_M.
inline bool verify_half_tree(const RegionWindows& rw, const HalfTreeResult& r) {
  const Ball& b = *r.labelled.ball;
  std::array<std::optional<int>, 2> cls_parity;
  for (const auto& w : rw.all) {
    int p = 0;
    for (uint32_t v : w.verts) p ^= r.labelled.label[v];
    if (w.cls < 0) {
      if (p) return false;
    } else if (!cls_parity[w.cls]) {
      cls_parity[w.cls] = p;
    } else if (*cls_parity[w.cls] != p) {
      return false;
    }
  }
  for (int rad = 0; rad <= r.m; ++rad)
    for (uint32_t v : b.sphere(r.s_m, rad))
      if (r.labelled.label[v]) return false;
  for (uint32_t v : b.branch(r.s_m))
    if (r.labelled.label[v]) return false;
  return true;
}

inline bool verify_half_tree(const GroupSpec& s, const HalfTreeResult& r) {
  return verify_half_tree(RegionWindows(s, *r.labelled.ball), r);
}

// Random spec-consistent seed: a full valid labelling of the region built
// level by level, restricted to the seed region.
inline Diagram random_seed(const RegionWindows& rw, Rng& rng) {
  const Ball& b = *rw.ball;
  int m = halftree_m(rw.spec);
  Diagram full;
  full.ball = &b;
  full.depth = b.depth();
  full.label.assign(b.size(), 0);
  std::array<std::optional<int>, 2> cls_parity;
  for (int level = 0; level <= b.depth(); ++level) {
    for (uint32_t v = b.level_begin(level); v < b.level_end(level); ++v)
      full.label[v] = static_cast<uint8_t>(rng() & 1);
    for (const auto& w : rw.by_level[level]) {
      int want;
      if (w.cls < 0)
        want = 0;
      else if (cls_parity[w.cls])
        want = *cls_parity[w.cls];
      else
        cls_parity[w.cls] = want = static_cast<int>(rng() & 1);
      int have = 0;
      uint32_t designated = UINT32_MAX;
      uint32_t lo = b.level_begin(level), hi = b.level_end(level);
      for (uint32_t v : w.verts) {
        have ^= full.label[v];
        if (v >= lo && v < hi && designated == UINT32_MAX) designated = v;
      }
      if (have != want) full.label[designated] ^= 1;
    }
  }
  for (uint32_t x = 0; x < b.size(); ++x)
    if (!in_seed_region(b, x, m)) full.label[x] = 0;
  return full;
}

inline Diagram random_seed(const GroupSpec& s, const Ball& b, Rng& rng) {
  return random_seed(RegionWindows(s, b), rng);
}

}  // namespace ugt
