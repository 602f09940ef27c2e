#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "ugt/automorphism.hpp"
#include "ugt/ball.hpp"
#include "ugt/coloring.hpp"

namespace ugt {

// e/o labelling of B(v,k); label[x] = 1 means "o".  The labels of an
// automorphism of B(v,k+1) record the parities of its local actions on the
// smaller ball B(v,k).
struct Diagram {
  const Ball* ball = nullptr;
  int depth = 0;
  std::vector<uint8_t> label;  // size = ball->count_to_depth(depth)

  bool operator==(const Diagram& o) const { return depth == o.depth && label == o.label; }
};

inline Diagram all_e_diagram(const Ball& b, int depth) {
  Diagram d;
  d.ball = &b;
  d.depth = depth;
  d.label.assign(b.count_to_depth(depth), 0);
  return d;
}

inline bool is_e_diagram(const Diagram& d) {
  if (d.depth == 0) return true;
  uint32_t inner = d.ball->count_to_depth(d.depth - 1);
  for (uint32_t x = 0; x < inner; ++x)
    if (d.label[x]) return false;
  return true;
}

// D(g): parity labels of g on the sub-ball of the given depth.  Requires the
// host ball to be strictly deeper so that every labelled star is complete.
inline Diagram diagram_of(const Coloring& i, const Automorphism& g, int depth) {
  const Ball& b = *i.ball;
  if (depth >= b.depth() && b.depth() > 0)
    throw std::invalid_argument("diagram depth must be below the ball depth");
  auto img = image_table(g);
  Diagram d;
  d.ball = &b;
  d.depth = depth;
  uint32_t n = b.count_to_depth(depth);
  d.label.resize(n);
  for (uint32_t x = 0; x < n; ++x)
    d.label[x] = sign(local_action(i, g, x, &img)) < 0 ? 1 : 0;
  return d;
}

inline Diagram restrict_diagram(const Diagram& d, int depth) {
  if (depth > d.depth) throw std::invalid_argument("cannot restrict to a larger depth");
  Diagram out;
  out.ball = d.ball;
  out.depth = depth;
  out.label.assign(d.label.begin(), d.label.begin() + d.ball->count_to_depth(depth));
  return out;
}

// Builds an automorphism whose diagram is exactly d: walk the ball top-down
// and, at each labelled vertex, flip two child slots whenever the identity
// portrait gives the wrong local-action parity.
inline Automorphism realize_diagram(const Coloring& i, const Diagram& d, bool swap_sides = false) {
  const Ball& b = *i.ball;
  if (d.depth >= b.depth() && b.depth() > 0)
    throw std::invalid_argument("need one spare level below the diagram");
  Automorphism g = identity(b);
  if (swap_sides) {
    require_swappable(b);
    g.swap_sides = true;
  }
  uint32_t n = b.count_to_depth(d.depth);
  for (uint32_t x = 0; x < n; ++x) {
    int want = d.label[x] ? -1 : 1;
    if (sign(local_action(i, g, x)) != want) {
      std::swap(g.slot[x][0], g.slot[x][1]);
      if (sign(local_action(i, g, x)) != want)
        throw std::logic_error("slot transposition did not flip the parity");
    }
  }
  return g;
}

inline std::string serialize_diagram(const Diagram& d) {
  std::string out;
  for (uint32_t x = 0; x < d.label.size(); ++x) {
    out += d.ball->render_address(x);
    out += '=';
    out += d.label[x] ? 'o' : 'e';
    out += '\n';
  }
  return out;
}

}  // namespace ugt
