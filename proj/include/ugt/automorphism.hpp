#pragma once

#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

#include "ugt/ball.hpp"

namespace ugt {

// Depth-preserving automorphism of a ball, stored as a portrait: one
// permutation of child slots per internal vertex (0-based internally), plus
// a side-swap flag for edge-rooted balls.  g(child(x,a)) = child(g(x), slot_x(a)).
struct Automorphism {
  const Ball* ball = nullptr;
  bool swap_sides = false;
  std::vector<std::vector<uint8_t>> slot;  // indexed by vertex; empty for leaves

  bool operator==(const Automorphism& o) const {
    return swap_sides == o.swap_sides && slot == o.slot;
  }
};

inline Automorphism identity(const Ball& ball) {
  Automorphism g;
  g.ball = &ball;
  g.slot.resize(ball.size());
  for (uint32_t x = 0; x < ball.size(); ++x) {
    g.slot[x].resize(ball.child_count(x));
    std::iota(g.slot[x].begin(), g.slot[x].end(), uint8_t(0));
  }
  return g;
}

inline void require_swappable(const Ball& ball) {
  if (ball.kind() != BallKind::edge_rooted)
    throw std::invalid_argument("side swap requires an edge-rooted ball");
  if (!ball.shape().regular())
    throw std::invalid_argument("side swap requires d0 == d1");
}

// Image of every vertex under g, computed top-down in one pass.
inline std::vector<uint32_t> image_table(const Automorphism& g) {
  const Ball& b = *g.ball;
  std::vector<uint32_t> img(b.size());
  if (b.kind() == BallKind::edge_rooted) {
    img[b.root(0)] = g.swap_sides ? b.root(1) : b.root(0);
    img[b.root(1)] = g.swap_sides ? b.root(0) : b.root(1);
  } else {
    img[0] = 0;
  }
  for (uint32_t x = 0; x < b.size(); ++x) {
    if (b.is_root(x)) continue;
    uint32_t p = b.parent(x);
    img[x] = b.child(img[p], g.slot[p][b.slot_of(x) - 1] + 1);
  }
  return img;
}

inline uint32_t apply(const Automorphism& g, uint32_t x) {
  const Ball& b = *g.ball;
  std::vector<uint8_t> slots;  // 0-based slots along the path root -> x
  uint32_t v = x;
  while (!b.is_root(v)) {
    slots.push_back(static_cast<uint8_t>(b.slot_of(v) - 1));
    v = b.parent(v);
  }
  uint32_t src = v;
  uint32_t cur = (b.kind() == BallKind::edge_rooted && g.swap_sides) ? b.root(1 - b.side_of(src))
                                                                     : src;
  for (auto it = slots.rbegin(); it != slots.rend(); ++it) {
    cur = b.child(cur, g.slot[src][*it] + 1);
    src = b.child(src, *it + 1);
  }
  return cur;
}

inline Automorphism compose(const Automorphism& g, const Automorphism& h) {
  if (g.ball != h.ball) throw std::invalid_argument("compose: ball shapes differ");
  const Ball& b = *g.ball;
  std::vector<uint32_t> himg = image_table(h);
  Automorphism out;
  out.ball = &b;
  out.swap_sides = g.swap_sides ^ h.swap_sides;
  out.slot.resize(b.size());
  for (uint32_t x = 0; x < b.size(); ++x) {
    int c = b.child_count(x);
    out.slot[x].resize(c);
    const auto& gs = g.slot[himg[x]];
    const auto& hs = h.slot[x];
    for (int a = 0; a < c; ++a) out.slot[x][a] = gs[hs[a]];
  }
  return out;
}

inline Automorphism invert(const Automorphism& g) {
  const Ball& b = *g.ball;
  std::vector<uint32_t> img = image_table(g);
  Automorphism out;
  out.ball = &b;
  out.swap_sides = g.swap_sides;
  out.slot.resize(b.size());
  for (uint32_t x = 0; x < b.size(); ++x) {
    int c = b.child_count(x);
    out.slot[img[x]].resize(c);
    for (int a = 0; a < c; ++a) out.slot[img[x]][g.slot[x][a]] = static_cast<uint8_t>(a);
  }
  return out;
}

inline uint64_t hash_value(const Automorphism& g) {
  uint64_t h = g.swap_sides ? 0x9e3779b97f4a7c15ull : 0x2545f4914f6cdd1dull;
  for (const auto& s : g.slot)
    for (uint8_t v : s) h = (h ^ v) * 0x100000001b3ull;
  return h;
}

// Total number of automorphisms: product of per-vertex slot factorials,
// doubled for edge-rooted balls of regular trees (side swap).  Throws when
// the count exceeds the bound.
inline uint64_t automorphism_count(const Ball& ball, uint64_t bound = 10'000'000) {
  auto fact = [](int n) {
    uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<uint64_t>(i);
    return f;
  };
  unsigned __int128 total = 1;
  if (ball.kind() == BallKind::edge_rooted && ball.shape().regular()) total = 2;
  for (uint32_t x = 0; x < ball.size(); ++x) {
    total *= fact(ball.child_count(x));
    if (total > bound) throw std::length_error("automorphism count exceeds bound");
  }
  return static_cast<uint64_t>(total);
}

// Streams every automorphism of the ball exactly once (single consumer).
class AutomorphismEnumerator {
public:
  explicit AutomorphismEnumerator(const Ball& ball, uint64_t bound = 10'000'000)
      : ball_(&ball) {
    automorphism_count(ball, bound);  // enforce the bound up front
    for (uint32_t x = 0; x < ball.size(); ++x)
      if (ball.child_count(x) > 0) internal_.push_back(x);
    cur_ = identity(ball);
    swap_options_ = (ball.kind() == BallKind::edge_rooted && ball.shape().regular()) ? 2 : 1;
  }

  std::optional<Automorphism> next() {
    if (done_) return std::nullopt;
    Automorphism out = cur_;
    out.swap_sides = (swap_state_ == 1);
    advance();
    return out;
  }

private:
  void advance() {
    for (std::size_t i = 0; i < internal_.size(); ++i) {
      uint32_t x = internal_[i];
      if (std::next_permutation(cur_.slot[x].begin(), cur_.slot[x].end())) return;
      // wrapped around to identity at x; carry to the next vertex
    }
    if (++swap_state_ < swap_options_) return;
    done_ = true;
  }

  const Ball* ball_;
  std::vector<uint32_t> internal_;
  Automorphism cur_;
  int swap_options_ = 1;
  int swap_state_ = 0;
  bool done_ = false;
};

inline std::vector<Automorphism> enumerate_automorphisms(const Ball& ball,
                                                         uint64_t bound = 10'000'000) {
  std::vector<Automorphism> out;
  AutomorphismEnumerator en(ball, bound);
  while (auto g = en.next()) out.push_back(*g);
  return out;
}

}  // namespace ugt
