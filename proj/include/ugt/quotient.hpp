#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ugt/coloring.hpp"
#include "ugt/diagram.hpp"
#include "ugt/groupspec.hpp"
#include "ugt/system.hpp"

namespace ugt {

// Sign pattern of an automorphism over a common window family: the shared
// parity of the slot-0 windows, the one of the slot-1 windows, and whether
// the element swaps the two vertex types.  The full pattern group is D8.
struct SignPattern {
  int p0 = 0;  // 0 even, 1 odd
  int p1 = 0;
  int swap = 0;

  bool operator==(const SignPattern& o) const {
    return p0 == o.p0 && p1 == o.p1 && swap == o.swap;
  }
  bool operator<(const SignPattern& o) const {
    return std::array<int, 3>{p0, p1, swap} < std::array<int, 3>{o.p0, o.p1, o.swap};
  }
};

// Parities of a product via the sign cocycle: h moves the anchors first, so
// g's contribution is read on the side h sends them to.
inline SignPattern pattern_mul(const SignPattern& g, const SignPattern& h) {
  SignPattern out;
  out.p0 = (h.swap ? g.p1 : g.p0) ^ h.p0;
  out.p1 = (h.swap ? g.p0 : g.p1) ^ h.p1;
  out.swap = g.swap ^ h.swap;
  return out;
}

inline SignPattern pattern_inverse(const SignPattern& p) {
  for (int p0 = 0; p0 < 2; ++p0)
    for (int p1 = 0; p1 < 2; ++p1)
      for (int sw = 0; sw < 2; ++sw) {
        SignPattern q{p0, p1, sw};
        if (pattern_mul(q, p) == SignPattern{}) return q;
      }
  throw std::logic_error("pattern has no inverse");
}

// Patterns admitted by a variant's membership condition.  Slots with no
// windows keep their coordinate pinned to even.
inline std::vector<SignPattern> pattern_subgroup(const GroupSpec& s) {
  using V = GroupSpec::Variant;
  std::vector<SignPattern> out;
  for (int p0 = 0; p0 < 2; ++p0)
    for (int p1 = 0; p1 < 2; ++p1)
      for (int sw = 0; sw < 2; ++sw) {
        bool ok = false;
        switch (s.variant) {
          case V::type_preserving:
            ok = sw == 0 && (s.y0.star() || p0 == 0) && (s.y1.star() || p1 == 0);
            break;
          case V::combined_star:
            ok = sw == 0 && p0 == p1;
            break;
          case V::regular_full:
            ok = p0 == 0 && p1 == 0;
            break;
          case V::regular_full_star:
            ok = true;
            break;
          case V::regular_combined:
            ok = p0 == p1;
            break;
          case V::regular_prime:
            ok = (p0 == p1) == (sw == 0);
            break;
        }
        if (ok) out.push_back({p0, p1, sw});
      }
  return out;
}

// Normalizer naming: n+ stars every non-empty slot (s erases the stars).
inline GroupSpec n_plus(const GroupSpec& s) {
  using V = GroupSpec::Variant;
  auto star = [](const RadiusSet& x) {
    return x.empty() ? RadiusSet::none() : RadiusSet::starred(x.radii);
  };
  switch (s.variant) {
    case V::type_preserving:
      return GroupSpec::type_preserving_of(star(s.y0), star(s.y1));
    case V::combined_star:
      return GroupSpec::type_preserving_of(RadiusSet::starred(s.y0.radii),
                                           RadiusSet::starred(s.y1.radii));
    default:
      return GroupSpec::regular(V::regular_full_star, s.y0.radii);
  }
}

// Realizes a sign pattern as an actual ball automorphism and checks it lands
// in the group: the parity part comes from a diagram built with prescribed
// class parities, the swap part from the color-preserving side exchange.
inline void verify_pattern_realized(const GroupSpec& s, TreeShape shape, SignPattern pat) {
  validate_spec_shape(s, shape);
  if (pat.swap && !shape.regular())
    throw std::invalid_argument("swap patterns require d0 == d1");
  int mx = 0;
  for (const RadiusSet* x : {&s.y0, &s.y1})
    if (!x->empty()) mx = std::max(mx, x->max());
  int depth = mx + 2;

  // build the parity-carrying diagram against the fully-starred structure
  GroupSpec star_struct = n_plus(s);
  Ball ball(shape, 0, depth, pat.swap ? BallKind::edge_rooted : BallKind::vertex_full);
  Diagram d;
  d.ball = &ball;
  d.depth = depth - 1;
  d.label.assign(ball.count_to_depth(depth - 1), 0);
  // class ids equal the slot index for starred type-preserving structures and
  // the anchor type for the fully-starred regular structure
  std::array<std::optional<int>, 2> cls_parity;
  std::array<std::optional<int>, 2> want;
  if (star_struct.variant == GroupSpec::Variant::regular_full_star) {
    want[0] = pat.p0;
    want[1] = pat.p1;
  } else {
    if (star_struct.y0.star()) want[0] = pat.p0;
    if (star_struct.y1.star()) want[1] = pat.p1;
  }
  auto zero = []() { return 0; };
  auto choice = [&](int c) { return want[c] ? *want[c] : 0; };
  for (int level = 0; level <= depth - 1; ++level)
    detail::fill_level(star_struct, ball, level, d.label, cls_parity, zero, choice);

  Coloring i = canonical_coloring(ball);
  Automorphism g = realize_diagram(i, d, pat.swap != 0);
  if (!automorphism_in_group(s, i, g))
    throw std::logic_error("pattern " + std::to_string(pat.p0) + std::to_string(pat.p1) +
                           std::to_string(pat.swap) + " not realized in " + render_spec(s));
}

struct QuotientResult {
  std::string iso;  // 1, C2, C2xC2, C4 or D8
  int order = 0;
  std::vector<SignPattern> sup_patterns;
  std::vector<SignPattern> sub_patterns;
};

// Quotient sup/sub realized on sign patterns.  Validates the diagram-set
// inclusion at the given depth, realizes every sup pattern, and classifies
// the coset group.
inline QuotientResult symbolic_quotient(const GroupSpec& sub, const GroupSpec& sup,
                                        TreeShape shape, int validation_depth = -1) {
  validate_spec_shape(sub, shape);
  validate_spec_shape(sup, shape);
  int mx = 0;
  for (const RadiusSet* x : {&sub.y0, &sub.y1, &sup.y0, &sup.y1})
    if (!x->empty()) mx = std::max(mx, x->max());
  if (validation_depth < 0) validation_depth = mx + 2;

  for (int rt = 0; rt < 2; ++rt) {
    Ball ball(shape, rt, validation_depth, BallKind::vertex_full);
    DiagramSet a(sub, ball, validation_depth), b(sup, ball, validation_depth);
    BitMatrix ca = a.code();
    for (std::size_t r = 0; r < ca.rows(); ++r) {
      Diagram d = all_e_diagram(ball, validation_depth);
      for (uint32_t v = 0; v < d.label.size(); ++v) d.label[v] = ca.get(r, v);
      if (!b.contains(d))
        throw std::invalid_argument("sub is not contained in sup at the validation depth");
    }
  }

  QuotientResult out;
  out.sub_patterns = pattern_subgroup(sub);
  out.sup_patterns = pattern_subgroup(sup);
  for (const auto& p : out.sup_patterns) verify_pattern_realized(sup, shape, p);

  auto in_sub = [&](const SignPattern& p) {
    return std::find(out.sub_patterns.begin(), out.sub_patterns.end(), p) !=
           out.sub_patterns.end();
  };
  for (const auto& h : out.sub_patterns) {
    if (std::find(out.sup_patterns.begin(), out.sup_patterns.end(), h) == out.sup_patterns.end())
      throw std::invalid_argument("sub admits sign patterns that sup forbids");
    for (const auto& g : out.sup_patterns)
      if (!in_sub(pattern_mul(pattern_mul(g, h), pattern_inverse(g))))
        throw std::invalid_argument("sub is not normal in sup");
  }

  // cosets and their group structure
  std::vector<std::vector<SignPattern>> cosets;
  std::vector<SignPattern> seen;
  for (const auto& g : out.sup_patterns) {
    if (std::find(seen.begin(), seen.end(), g) != seen.end()) continue;
    std::vector<SignPattern> coset;
    for (const auto& h : out.sub_patterns) {
      coset.push_back(pattern_mul(g, h));
      seen.push_back(coset.back());
    }
    std::sort(coset.begin(), coset.end());
    cosets.push_back(std::move(coset));
  }
  auto coset_of = [&](const SignPattern& p) {
    for (std::size_t k = 0; k < cosets.size(); ++k)
      if (std::binary_search(cosets[k].begin(), cosets[k].end(), p)) return k;
    throw std::logic_error("pattern not covered by cosets");
  };
  out.order = static_cast<int>(cosets.size());
  std::size_t id_coset = coset_of(SignPattern{});
  bool abelian = true;
  int max_order = 1;
  for (const auto& c : cosets) {
    SignPattern a = c.front();
    SignPattern cur = a;
    int n = 1;
    while (coset_of(cur) != id_coset) {
      cur = pattern_mul(cur, a);
      ++n;
    }
    max_order = std::max(max_order, n);
    for (const auto& c2 : cosets)
      if (coset_of(pattern_mul(a, c2.front())) != coset_of(pattern_mul(c2.front(), a)))
        abelian = false;
  }
  switch (out.order) {
    case 1: out.iso = "1"; break;
    case 2: out.iso = "C2"; break;
    case 4: out.iso = max_order == 4 ? "C4" : "C2xC2"; break;
    case 8: out.iso = abelian ? "C2^3" : "D8"; break;
    default: out.iso = "order-" + std::to_string(out.order);
  }
  return out;
}

}  // namespace ugt
