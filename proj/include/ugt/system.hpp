#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "ugt/ball.hpp"
#include "ugt/bitmatrix.hpp"
#include "ugt/diagram.hpp"
#include "ugt/groupspec.hpp"

namespace ugt {

// One parity window S_X(w): the union of spheres S(w,r), r in X.  cls == -1
// means the window carries its own even-parity constraint; otherwise all
// windows of the same class must have equal parity.
struct Window {
  uint32_t anchor = 0;
  int cls = -1;
  std::vector<uint32_t> verts;  // sorted
};

namespace detail {

struct Slot {
  const RadiusSet* set;
  int anchor_type;  // 0, 1, or -1 for both
  int cls;          // -1 plain
};

inline std::vector<Slot> spec_slots(const GroupSpec& s) {
  using V = GroupSpec::Variant;
  std::vector<Slot> out;
  switch (s.variant) {
    case V::type_preserving:
      if (!s.y0.empty()) out.push_back({&s.y0, s.anchor_type(0), s.y0.star() ? 0 : -1});
      if (!s.y1.empty()) out.push_back({&s.y1, s.anchor_type(1), s.y1.star() ? 1 : -1});
      break;
    case V::combined_star:
      out.push_back({&s.y0, s.anchor_type(0), 0});
      out.push_back({&s.y1, s.anchor_type(1), 0});
      break;
    case V::regular_full:
      out.push_back({&s.y0, -1, -1});
      break;
    case V::regular_full_star:
      out.push_back({&s.y0, 0, 0});
      out.push_back({&s.y0, 1, 1});
      break;
    case V::regular_combined:
    case V::regular_prime:
      out.push_back({&s.y0, -1, 0});
      break;
  }
  return out;
}

}  // namespace detail

inline int class_count(const GroupSpec& s) {
  using V = GroupSpec::Variant;
  switch (s.variant) {
    case V::type_preserving:
      return (s.y0.star() ? 1 : 0) + (s.y1.star() ? 1 : 0);
    case V::combined_star:
    case V::regular_combined:
    case V::regular_prime:
      return 1;
    case V::regular_full:
      return 0;
    case V::regular_full_star:
      return 2;
  }
  return 0;
}

inline void validate_spec_shape(const GroupSpec& s, const TreeShape& shape) {
  if (s.regular_variant() && !shape.regular())
    throw std::invalid_argument("regular-tree group variants require d0 == d1");
}

inline std::vector<uint32_t> window_verts(const Ball& b, uint32_t anchor, const RadiusSet& x) {
  std::vector<uint32_t> out;
  for (int r : x.radii) {
    auto s = b.sphere(anchor, r);
    out.insert(out.end(), s.begin(), s.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

// All windows of the spec fully contained in the depth-k part of the ball.
inline std::vector<Window> spec_windows(const GroupSpec& s, const Ball& b, int depth) {
  validate_spec_shape(s, b.shape());
  std::vector<Window> out;
  for (const auto& slot : detail::spec_slots(s)) {
    int mx = slot.set->max();
    for (int level = 0; level + mx <= depth; ++level) {
      for (uint32_t w = b.level_begin(level); w < b.level_end(level); ++w) {
        if (slot.anchor_type >= 0 && b.type_of(w) != slot.anchor_type) continue;
        Window win;
        win.anchor = w;
        win.cls = slot.cls;
        win.verts = window_verts(b, w, *slot.set);
        out.push_back(std::move(win));
      }
    }
  }
  return out;
}

// Windows whose outermost sphere first becomes contained at the given level.
// Their new parts (verts at that level) are pairwise disjoint.
inline std::vector<Window> completing_windows(const GroupSpec& s, const Ball& b, int level) {
  validate_spec_shape(s, b.shape());
  std::vector<Window> out;
  for (const auto& slot : detail::spec_slots(s)) {
    int mx = slot.set->max();
    int d = level - mx;
    if (d < 0) continue;
    for (uint32_t w = b.level_begin(d); w < b.level_end(d); ++w) {
      if (slot.anchor_type >= 0 && b.type_of(w) != slot.anchor_type) continue;
      Window win;
      win.anchor = w;
      win.cls = slot.cls;
      win.verts = window_verts(b, w, *slot.set);
      out.push_back(std::move(win));
    }
  }
  return out;
}

// The depth-k diagram set of a group spec over a ball: all fully-contained
// windows satisfied, star classes internally equal.  This is a linear code.
class DiagramSet {
public:
  DiagramSet(const GroupSpec& s, const Ball& b, int depth)
      : spec_(s), ball_(&b), depth_(depth), nvars_(b.count_to_depth(depth)),
        windows_(spec_windows(s, b, depth)) {}

  const GroupSpec& spec() const { return spec_; }
  const Ball& ball() const { return *ball_; }
  int depth() const { return depth_; }
  uint32_t nvars() const { return nvars_; }
  const std::vector<Window>& windows() const { return windows_; }

  bool contains(const Diagram& d) const {
    if (d.ball != ball_ || d.depth != depth_)
      throw std::invalid_argument("diagram does not match this set's ball/depth");
    std::array<std::optional<int>, 2> cls_parity;
    for (const auto& w : windows_) {
      int p = 0;
      for (uint32_t v : w.verts) p ^= d.label[v];
      if (w.cls < 0) {
        if (p) return false;
      } else if (!cls_parity[w.cls]) {
        cls_parity[w.cls] = p;
      } else if (*cls_parity[w.cls] != p) {
        return false;
      }
    }
    return true;
  }

  // Membership of the diagram whose only o-labels sit at the given vertices.
  bool contains_sparse(const std::vector<uint32_t>& o_verts) const {
    std::array<std::optional<int>, 2> cls_parity;
    for (const auto& w : windows_) {
      int p = 0;
      for (uint32_t v : o_verts)
        if (std::binary_search(w.verts.begin(), w.verts.end(), v)) p ^= 1;
      if (w.cls < 0) {
        if (p) return false;
      } else if (!cls_parity[w.cls]) {
        cls_parity[w.cls] = p;
      } else if (*cls_parity[w.cls] != p) {
        return false;
      }
    }
    return true;
  }

  std::vector<std::vector<uint32_t>> equations() const {
    std::vector<std::vector<uint32_t>> eqs;
    std::array<const Window*, 2> prev = {nullptr, nullptr};
    for (const auto& w : windows_) {
      if (w.cls < 0) {
        eqs.push_back(w.verts);
      } else if (prev[w.cls]) {
        std::vector<uint32_t> eq = prev[w.cls]->verts;
        eq.insert(eq.end(), w.verts.begin(), w.verts.end());
        eqs.push_back(std::move(eq));  // duplicates cancel over GF(2)
        prev[w.cls] = &w;
      } else {
        prev[w.cls] = &w;
      }
    }
    return eqs;
  }

  // log2 of the number of diagrams in the set.
  uint32_t dimension() const { return nvars_ - static_cast<uint32_t>(f2_rank(equations(), nvars_)); }

  // Canonical RREF basis of the set, usable as an exact fingerprint.
  BitMatrix code() const { return f2_nullspace(equations(), nvars_); }

  // Parity of each star class fixed by the windows of a valid member, if any.
  std::array<std::optional<int>, 2> class_parities(const Diagram& d) const {
    std::array<std::optional<int>, 2> out;
    for (const auto& w : windows_) {
      if (w.cls < 0) continue;
      if (out[w.cls]) continue;
      int p = 0;
      for (uint32_t v : w.verts) p ^= d.label[v];
      out[w.cls] = p;
    }
    return out;
  }

private:
  GroupSpec spec_;
  const Ball* ball_;
  int depth_;
  uint32_t nvars_;
  std::vector<Window> windows_;
};

inline bool diagram_in_group(const GroupSpec& s, const Diagram& d) {
  return DiagramSet(s, *d.ball, d.depth).contains(d);
}

// ---------------------------------------------------------------------------
// Level-by-level construction.  At each new level the completing windows
// partition their new vertices, so any prescribed parities can be realized by
// flipping at most one designated vertex per window (the lexicographically
// least new one; its path from the anchor descends through slot 1 only).

namespace detail {

// Assigns the labels of the given level.  `label` must already hold valid
// labels below it; free labels come from `free_label`, and the first window
// of a not-yet-fixed class gets the parity from `class_choice`.
inline void fill_level(const GroupSpec& s, const Ball& b, int level,
                       std::vector<uint8_t>& label,
                       std::array<std::optional<int>, 2>& cls_parity,
                       const std::function<int()>& free_label,
                       const std::function<int(int)>& class_choice) {
  uint32_t lo = b.level_begin(level), hi = b.level_end(level);
  for (uint32_t v = lo; v < hi; ++v) label[v] = static_cast<uint8_t>(free_label());
  for (const auto& w : completing_windows(s, b, level)) {
    int want;
    if (w.cls < 0) {
      want = 0;
    } else if (cls_parity[w.cls]) {
      want = *cls_parity[w.cls];
    } else {
      want = class_choice(w.cls) & 1;
      cls_parity[w.cls] = want;
    }
    int have = 0;
    uint32_t designated = UINT32_MAX;
    for (uint32_t v : w.verts) {
      have ^= label[v];
      if (v >= lo && v < hi && designated == UINT32_MAX) designated = v;
    }
    if (have != want) label[designated] ^= 1;
  }
}

}  // namespace detail

// Extends a member of the depth-k set to a member of the depth-(k+1) set.
// Deterministic: new labels default to e, newly forced parities are realized
// at the leftmost vertex of each window, and a free star class takes the
// parity given by `class_choice` (default even).
inline Diagram extend_diagram(const GroupSpec& s, const Diagram& d,
                              std::array<std::optional<int>, 2> class_choice = {}) {
  const Ball& b = *d.ball;
  int k = d.depth;
  if (k + 1 > b.depth()) throw std::invalid_argument("host ball too shallow to extend");
  DiagramSet cur(s, b, k);
  if (!cur.contains(d)) throw std::invalid_argument("input diagram is not in the group's set");
  auto cls_parity = cur.class_parities(d);
  for (int c = 0; c < 2; ++c)
    if (!cls_parity[c] && class_choice[c]) cls_parity[c] = *class_choice[c] & 1;

  Diagram out;
  out.ball = &b;
  out.depth = k + 1;
  out.label = d.label;
  out.label.resize(b.count_to_depth(k + 1), 0);
  auto zero = []() { return 0; };
  auto choice = [&](int) { return 0; };
  detail::fill_level(s, b, k + 1, out.label, cls_parity, zero, choice);
  return out;
}

// A member of the depth-k set built level by level with random free labels.
template <class Rng>
Diagram random_diagram(const GroupSpec& s, const Ball& b, int depth, Rng& rng) {
  Diagram out;
  out.ball = &b;
  out.depth = depth;
  out.label.assign(b.count_to_depth(depth), 0);
  std::array<std::optional<int>, 2> cls_parity;
  auto coin = [&]() { return static_cast<int>(rng() & 1); };
  auto choice = [&](int) { return static_cast<int>(rng() & 1); };
  for (int level = 0; level <= depth; ++level)
    detail::fill_level(s, b, level, out.label, cls_parity, coin, choice);
  return out;
}

// ---------------------------------------------------------------------------
// Membership of a ball automorphism: compute its diagram one level below the
// ball's depth and test it; regular_prime additionally couples the common
// window parity to the side swap on edge-rooted balls.

inline bool automorphism_in_group(const GroupSpec& s, const Coloring& i, const Automorphism& g) {
  const Ball& b = *i.ball;
  validate_spec_shape(s, b.shape());
  if (g.swap_sides && !s.regular_variant()) return false;  // G+ groups are type-preserving
  int k = b.depth() - 1;
  if (k < 0) return true;
  auto img = image_table(g);
  Diagram d;
  d.ball = &b;
  d.depth = k;
  d.label.resize(b.count_to_depth(k));
  for (uint32_t x = 0; x < d.label.size(); ++x)
    d.label[x] = sign(local_action(i, g, x, &img)) < 0 ? 1 : 0;

  if (s.variant == GroupSpec::Variant::regular_prime) {
    // The two per-type window parities are independent here and coupled to
    // the side swap: p0 == p1 exactly for type-preserving elements.  Window
    // parities that the ball cannot see stay free (extension freedom).
    GroupSpec star = GroupSpec::regular(GroupSpec::Variant::regular_full_star, s.y0.radii);
    DiagramSet set(star, b, k);
    if (!set.contains(d)) return false;
    auto cp = set.class_parities(d);
    if (cp[0] && cp[1] && ((*cp[0] == *cp[1]) != !g.swap_sides)) return false;
    return true;
  }
  return DiagramSet(s, b, k).contains(d);
}

// ---------------------------------------------------------------------------
// Code helpers shared by distinctness and invariant checks.

inline BitMatrix project_code(const BitMatrix& code, uint32_t prefix_vars) {
  BitMatrix out(code.rows(), prefix_vars);
  for (std::size_t r = 0; r < code.rows(); ++r)
    for (uint32_t c = 0; c < prefix_vars; ++c)
      if (code.get(r, c)) out.set(r, c);
  std::size_t rank = out.rref();
  out.shrink_to_rank(rank);
  return out;
}

inline bool diagram_in_code(const BitMatrix& code, const Diagram& d) {
  std::vector<uint8_t> v(d.label.begin(), d.label.end());
  v.resize(code.cols(), 0);
  return in_row_space(code, std::move(v));
}

}  // namespace ugt
