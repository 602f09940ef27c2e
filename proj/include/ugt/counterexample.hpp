#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "ugt/automorphism.hpp"
#include "ugt/ball.hpp"
#include "ugt/coloring.hpp"
#include "ugt/perm.hpp"
#include "ugt/permgroup.hpp"

namespace ugt {

// Nonzero vector of (F_3)^2.
struct F3Vec {
  int x = 0, y = 0;

  bool operator==(const F3Vec& o) const { return x == o.x && y == o.y; }
};

struct F3Matrix {
  int a, b, c, d;  // row-major

  F3Vec apply(F3Vec v) const { return {(a * v.x + b * v.y) % 3, (c * v.x + d * v.y) % 3}; }
  int det() const { return ((a * d - b * c) % 3 + 3) % 3; }
};

inline std::vector<F3Matrix> sl2_f3() {
  std::vector<F3Matrix> out;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c)
        for (int d = 0; d < 3; ++d)
          if (F3Matrix{a, b, c, d}.det() == 1) out.push_back({a, b, c, d});
  return out;
}

inline Ball t432_ball() { return Ball(TreeShape(4, 3), 0, 2, BallKind::vertex_full); }

// Leaves of T_{4,3,2} labelled by the eight nonzero vectors: two leaves share
// a parent exactly when the vectors are proportional.  Lines sit on the root
// slots in the order [x=0], [y=0], [x=y], [x=2y]; vectors are ordered
// lexicographically within a line.
inline std::array<F3Vec, 8> default_psi() {
  return {{{0, 1}, {0, 2}, {1, 0}, {2, 0}, {1, 1}, {2, 2}, {1, 2}, {2, 1}}};
}

inline int psi_index(const std::array<F3Vec, 8>& psi, F3Vec v) {
  for (int j = 0; j < 8; ++j)
    if (psi[j] == v) return j;
  throw std::logic_error("vector not in psi table");
}

inline bool proportional(F3Vec u, F3Vec v) {
  return (u.x * v.y - u.y * v.x) % 3 == 0;
}

inline void validate_psi(const std::array<F3Vec, 8>& psi) {
  for (int j = 0; j < 8; ++j) {
    if (psi[j].x == 0 && psi[j].y == 0) throw std::invalid_argument("psi contains the zero vector");
    for (int k = 0; k < 8; ++k) {
      if (j == k) continue;
      bool same_parent = (j / 2) == (k / 2);
      if (same_parent != proportional(psi[j], psi[k]))
        throw std::invalid_argument("psi does not respect lines");
    }
  }
}

// The image of one SL(2,F_3) matrix as an automorphism of T_{4,3,2}.
inline Automorphism matrix_automorphism(const Ball& t432, const F3Matrix& m,
                                        const std::array<F3Vec, 8>& psi) {
  Automorphism g = identity(t432);
  std::array<int, 8> leaf_img{};
  for (int j = 0; j < 8; ++j) leaf_img[j] = psi_index(psi, m.apply(psi[j]));
  for (int line = 0; line < 4; ++line) {
    int l0 = leaf_img[2 * line] / 2, l1 = leaf_img[2 * line + 1] / 2;
    if (l0 != l1) throw std::logic_error("matrix action does not respect lines");
    g.slot[0][line] = static_cast<uint8_t>(l0);
    uint32_t child = t432.child(0, line + 1);
    for (int s = 0; s < 2; ++s) g.slot[child][s] = static_cast<uint8_t>(leaf_img[2 * line + s] % 2);
  }
  return g;
}

inline Perm automorphism_as_perm(const Automorphism& g) {
  auto img = image_table(g);
  Perm p(static_cast<int>(img.size()));
  for (std::size_t x = 0; x < img.size(); ++x) p.img[x] = static_cast<uint8_t>(img[x]);
  return p;
}

struct G0 {
  std::vector<Automorphism> elements;  // 24 portraits on T_{4,3,2}
  PermGroup group;                     // the same elements on the 13 addresses
};

inline G0 build_g0(const Ball& t432, const std::array<F3Vec, 8>& psi = default_psi()) {
  validate_psi(psi);
  G0 out;
  std::vector<Perm> perms;
  for (const auto& m : sl2_f3()) {
    Automorphism g = matrix_automorphism(t432, m, psi);
    perms.push_back(automorphism_as_perm(g));
    out.elements.push_back(std::move(g));
  }
  out.group = from_elements(static_cast<int>(t432.size()), std::move(perms));
  if (out.group.order() != out.elements.size())
    throw std::logic_error("SL(2,F3) action is not faithful on the ball");
  return out;
}

// Restriction of a 13-point group to the root's four children.
inline PermGroup root_action(const PermGroup& g13) {
  std::vector<Perm> elems;
  for (const auto& p : g13.elements) {
    Perm q(4);
    for (int a = 0; a < 4; ++a) q.img[a] = static_cast<uint8_t>(p.img[a + 1] - 1);
    elems.push_back(q);
  }
  return from_elements(4, std::move(elems));
}

inline uint64_t fixator_order(const PermGroup& g13, int fixed_prefix) {
  uint64_t n = 0;
  for (const auto& p : g13.elements) {
    bool fixes = true;
    for (int x = 0; x < fixed_prefix; ++x)
      if (p.img[x] != x) fixes = false;
    if (fixes) ++n;
  }
  return n;
}

// Alt_(i) of a rooted ball: automorphisms whose local action is even at
// every non-leaf vertex, by definitional filtering of the full group.
inline std::vector<Automorphism> alt_automorphisms(const Coloring& i,
                                                   uint64_t bound = 10'000'000) {
  const Ball& b = *i.ball;
  std::vector<Automorphism> out;
  AutomorphismEnumerator en(b, bound);
  while (auto g = en.next()) {
    auto img = image_table(*g);
    bool even_everywhere = true;
    for (uint32_t x = 0; x < b.size() && even_everywhere; ++x) {
      if (b.is_leaf(x)) continue;
      if (sign(local_action(i, *g, x, &img)) < 0) even_everywhere = false;
    }
    if (even_everywhere) out.push_back(std::move(*g));
  }
  return out;
}

inline PermGroup alt_group_of(const Ball& b, const Coloring& i) {
  std::vector<Perm> perms;
  for (const auto& g : alt_automorphisms(i)) perms.push_back(automorphism_as_perm(g));
  return from_elements(static_cast<int>(b.size()), std::move(perms));
}

namespace detail {

struct AutomorphismHash {
  std::size_t operator()(const Automorphism& g) const {
    return static_cast<std::size_t>(hash_value(g));
  }
};

}  // namespace detail

struct ColoringFailure {
  std::string coloring;  // serialized legal coloring
  std::string witness;   // cycle notation on the 13 addresses
};

struct NoAltReport {
  uint64_t colorings_checked = 0;
  uint64_t containments = 0;  // colorings with Alt <= G0 (expected 0)
  bool all_fail = false;
  std::vector<ColoringFailure> failures;
};

// Sweeps every legal coloring of T_{4,3,2} and checks Alt_(i) is never inside
// the SL(2,F3) image; records one self-verifying witness per coloring.
inline NoAltReport verify_no_alt_coloring(const Ball& t432,
                                          const std::array<F3Vec, 8>& psi = default_psi(),
                                          bool keep_witnesses = true) {
  G0 g0 = build_g0(t432, psi);
  std::unordered_set<Automorphism, detail::AutomorphismHash> g0_set(g0.elements.begin(),
                                                                    g0.elements.end());
  NoAltReport report;
  ColoringEnumerator en(t432);
  while (auto i = en.next()) {
    ++report.colorings_checked;
    auto alt = alt_automorphisms(*i);
    if (alt.size() != 12) throw std::logic_error("Alt of T_{4,3,2} must have 12 elements");
    const Automorphism* witness = nullptr;
    std::size_t inside = 0;
    for (const auto& g : alt) {
      if (g0_set.count(g))
        ++inside;
      else if (!witness)
        witness = &g;
    }
    if (inside >= alt.size()) {
      ++report.containments;
      continue;
    }
    if (!witness || g0_set.count(*witness))
      throw std::logic_error("witness bookkeeping failed");
    if (keep_witnesses)
      report.failures.push_back(
          {serialize_coloring(*i), cycle_notation(automorphism_as_perm(*witness))});
  }
  report.all_fail = report.containments == 0;
  return report;
}

// ---------------------------------------------------------------------------
// The parity collapse f : Aut(T_{4,d1,2}) -> Aut(T_{4,3,2}).

// Color-preserving bijection between the depth-1 balls: requires matching
// root colors and sends the child colored c to the child colored c.
inline std::array<int, 4> color_bijection(const Coloring& j, const Coloring& j0) {
  const Ball& big = *j.ball;
  const Ball& small = *j0.ball;
  if (j.at(big.root()) != j0.at(small.root()))
    throw std::invalid_argument("collapse requires matching root colors");
  std::array<int, 4> slot_for_color{};  // color -> slot in the small ball
  for (int a = 1; a <= 4; ++a) slot_for_color[j0.at(small.child(0, a)) - 1] = a;
  std::array<int, 4> alpha{};  // big slot -> small slot
  for (int a = 1; a <= 4; ++a) alpha[a - 1] = slot_for_color[j.at(big.child(0, a)) - 1];
  return alpha;
}

// f(g): agrees with g on B(v,1) through the color bijection and matches the
// local-action parity at each child.
inline Automorphism collapse(const Automorphism& g, const Coloring& j, const Coloring& j0) {
  const Ball& big = *j.ball;
  const Ball& small = *j0.ball;
  if (big.shape().d0 != 4 || big.depth() != 2 || small.shape().d0 != 4 ||
      small.shape().d1 != 3 || small.depth() != 2)
    throw std::invalid_argument("collapse expects T_{4,d1,2} onto T_{4,3,2}");
  auto alpha = color_bijection(j, j0);
  auto img = image_table(g);

  Automorphism f = identity(small);
  for (int a = 1; a <= 4; ++a) {
    uint32_t x = big.child(0, a);
    uint32_t gx = img[x];
    int sa = alpha[a - 1];
    int s_img = alpha[big.slot_of(gx) - 1];
    f.slot[0][sa - 1] = static_cast<uint8_t>(s_img - 1);
    int parity_big = sign(local_action(j, g, x, &img));
    // two kid maps at the small child; exactly one matches the parity
    uint32_t sx = small.child(0, sa);
    for (int attempt = 0; attempt < 2; ++attempt) {
      f.slot[sx] = attempt == 0 ? std::vector<uint8_t>{0, 1} : std::vector<uint8_t>{1, 0};
      if (sign(local_action(j0, f, sx)) == parity_big) break;
      if (attempt == 1) throw std::logic_error("no kid map matches the parity");
    }
  }
  return f;
}

struct LiftReport {
  uint64_t colorings_checked = 0;
  uint64_t failures = 0;  // colorings where Alt fits inside the lifted group
  bool all_fail = false;
};

// No legal coloring of T_{4,d1,2} puts Alt inside f^{-1}(G0): for every
// coloring, a witness g in Alt_(i) with f(g) outside G0 is exhibited and
// re-verified against that coloring.
inline LiftReport verify_lift(int d1, uint64_t bound = 200'000'000) {
  if (d1 < 4) throw std::invalid_argument("verify_lift expects d1 >= 4");
  Ball small = t432_ball();
  Coloring j0 = canonical_coloring(small);  // root color 3
  Ball big(TreeShape(4, d1), 0, 2, BallKind::vertex_full);
  Coloring j = canonical_coloring(big, j0.at(0));

  G0 g0 = build_g0(small);
  std::unordered_set<Automorphism, detail::AutomorphismHash> g0_set(g0.elements.begin(),
                                                                    g0.elements.end());

  // Sixteen child-parity classes; each needs one lifted witness.  The class
  // of a coloring i is the parity of i o j^{-1} on each child's star.
  struct ClassWitness {
    Automorphism lift;
    std::vector<uint32_t> img;  // image table of the lift
    bool outside = false;       // collapse of the lift avoids G0
  };
  std::vector<ClassWitness> classes;
  for (int eps = 0; eps < 16; ++eps) {
    // induced coloring of the small ball with these transition parities
    Coloring i0 = j0;
    for (int a = 1; a <= 4; ++a) {
      if (!((eps >> (a - 1)) & 1)) continue;
      uint32_t c = small.child(0, a);
      std::swap(i0.color[small.child(c, 1)], i0.color[small.child(c, 2)]);
    }
    if (!is_legal(i0)) throw std::logic_error("induced coloring is not legal");
    auto alt = alt_automorphisms(i0);
    const Automorphism* w = nullptr;
    for (const auto& g : alt)
      if (!g0_set.count(g)) {
        w = &g;
        break;
      }
    if (!w) throw std::logic_error("no witness for an induced coloring");
    // lift w: same root action through alpha (here alpha is slot-identical
    // because both canonical colorings list child colors in slot order), kid
    // maps chosen so that the j-parity matches the j0-parity of w.
    ClassWitness cw{identity(big), {}, false};
    for (int a = 0; a < 4; ++a) cw.lift.slot[0][a] = w->slot[0][a];
    for (int a = 1; a <= 4; ++a) {
      int want = sign(local_action(j0, *w, small.child(0, a)));
      uint32_t x = big.child(0, a);
      if (sign(local_action(j, cw.lift, x)) != want)
        std::swap(cw.lift.slot[x][0], cw.lift.slot[x][1]);
      if (sign(local_action(j, cw.lift, x)) != want)
        throw std::logic_error("kid transposition cannot fix the parity");
    }
    if (!(collapse(cw.lift, j, j0) == *w)) throw std::logic_error("lift does not collapse back");
    cw.img = image_table(cw.lift);
    cw.outside = !g0_set.count(collapse(cw.lift, j, j0));
    classes.push_back(std::move(cw));
  }

  // sign of a permutation given as a small image array, via cycle counting
  auto sign_small = [](const uint8_t* img, int m) {
    uint32_t seen = 0;
    int transpositions = 0;
    for (int s = 0; s < m; ++s) {
      if (seen & (1u << s)) continue;
      int len = 0;
      for (int t2 = s; !(seen & (1u << t2)); t2 = img[t2]) {
        seen |= 1u << t2;
        ++len;
      }
      transpositions += len - 1;
    }
    return (transpositions & 1) ? -1 : 1;
  };

  // hot sweep: stars and the witness image tables are fixed, only the colors
  // change from coloring to coloring
  std::array<std::vector<uint32_t>, 5> stars;  // root then the four children
  stars[0] = big.star(0);
  for (int a = 1; a <= 4; ++a) stars[a] = big.star(big.child(0, a));

  LiftReport report;
  ColoringEnumerator en(big, bound);
  uint8_t sig[16];
  while (const Coloring* i = en.next_view()) {
    ++report.colorings_checked;
    // class of this coloring: parity of i o j^{-1} at each child's star
    int eps = 0;
    for (int a = 1; a <= 4; ++a) {
      for (uint32_t u : stars[a]) sig[j.at(u) - 1] = static_cast<uint8_t>(i->at(u) - 1);
      if (sign_small(sig, d1) < 0) eps |= 1 << (a - 1);
    }
    const ClassWitness& cw = classes[eps];
    // verified witness: inside Alt_(i) of the big ball, outside f^{-1}(G0)
    bool in_alt = true;
    for (uint32_t u : stars[0]) sig[i->at(u) - 1] = static_cast<uint8_t>(i->at(cw.img[u]) - 1);
    in_alt = sign_small(sig, 4) > 0;
    for (int a = 1; a <= 4 && in_alt; ++a) {
      for (uint32_t u : stars[a]) sig[i->at(u) - 1] = static_cast<uint8_t>(i->at(cw.img[u]) - 1);
      in_alt = sign_small(sig, d1) > 0;
    }
    if (in_alt && cw.outside) ++report.failures;
  }
  report.all_fail = report.failures == report.colorings_checked;
  return report;
}

}  // namespace ugt
