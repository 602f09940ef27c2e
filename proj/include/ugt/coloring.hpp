#pragma once

#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "ugt/automorphism.hpp"
#include "ugt/ball.hpp"
#include "ugt/perm.hpp"

namespace ugt {

// Legal coloring of a ball: type-0 vertices carry colors in 1..d1, type-1
// vertices colors in 1..d0, and every complete star is colored bijectively.
// Half-rooted roots use colors 1..d-1 on their d-1 children.
struct Coloring {
  const Ball* ball = nullptr;
  std::vector<uint8_t> color;  // 1-based

  uint8_t at(uint32_t x) const { return color[x]; }
};

inline int color_range(const Ball& b, uint32_t x) {
  return b.shape().degree(1 - b.type_of(x));
}

inline int star_size(const Ball& b, uint32_t x) {
  int c = b.child_count(x);
  if (b.is_root(x) && b.kind() != BallKind::edge_rooted) return c;
  return c + 1;
}

inline bool is_legal(const Coloring& i) {
  const Ball& b = *i.ball;
  for (uint32_t x = 0; x < b.size(); ++x) {
    int rng = color_range(b, x);
    if (i.color[x] < 1 || i.color[x] > rng) return false;
  }
  for (uint32_t x = 0; x < b.size(); ++x) {
    if (!b.star_complete(x)) continue;
    auto st = b.star(x);
    int m = static_cast<int>(st.size());
    std::vector<uint8_t> used(m + 1, 0);
    for (uint32_t u : st) {
      if (i.color[u] > m || used[i.color[u]]) return false;
      used[i.color[u]] = 1;
    }
  }
  return true;
}

// Deterministic reference coloring: roots get the top color of their range
// (overridable), and the children of every vertex take the colors of the
// star's range minus the parent's color, ascending in slot order.
inline Coloring canonical_coloring(const Ball& b, std::optional<int> root_color = std::nullopt) {
  Coloring i;
  i.ball = &b;
  i.color.assign(b.size(), 0);
  auto assign_children = [&](uint32_t x, int skip_color) {
    int m = star_size(b, x);
    int next = 1;
    for (int a = 1; a <= b.child_count(x); ++a) {
      while (next == skip_color) ++next;
      if (next > m) throw std::logic_error("star overflow in canonical coloring");
      i.color[b.child(x, a)] = static_cast<uint8_t>(next++);
    }
  };
  if (b.kind() == BallKind::edge_rooted) {
    // Each side root's color sits in the opposite star; picking the top color
    // on both sides keeps the two halves symmetric when d0 == d1.
    for (int s = 0; s < 2; ++s) {
      uint32_t r = b.root(s);
      i.color[r] = static_cast<uint8_t>(root_color.value_or(color_range(b, r)));
      if (i.color[r] < 1 || i.color[r] > color_range(b, r))
        throw std::invalid_argument("root color out of range");
    }
    for (int s = 0; s < 2; ++s) assign_children(b.root(s), i.color[b.root(1 - s)]);
  } else {
    i.color[0] = static_cast<uint8_t>(root_color.value_or(color_range(b, 0)));
    if (i.color[0] < 1 || i.color[0] > color_range(b, 0))
      throw std::invalid_argument("root color out of range");
    assign_children(0, 0);  // full (or d-1 at a half root) star, no parent slot
  }
  for (uint32_t x = 0; x < b.size(); ++x) {
    if (b.is_root(x) || b.is_leaf(x)) continue;
    assign_children(x, i.color[b.parent(x)]);
  }
  return i;
}

inline uint64_t legal_coloring_count(const Ball& b, uint64_t bound = 10'000'000) {
  auto fact = [](int n) {
    uint64_t f = 1;
    for (int k = 2; k <= n; ++k) f *= static_cast<uint64_t>(k);
    return f;
  };
  unsigned __int128 total = 1;
  if (b.kind() == BallKind::edge_rooted) {
    total = static_cast<uint64_t>(color_range(b, b.root(0))) *
            static_cast<uint64_t>(color_range(b, b.root(1)));
  } else {
    total = color_range(b, 0);
  }
  for (uint32_t x = 0; x < b.size(); ++x) {
    total *= fact(b.child_count(x));
    if (total > bound) throw std::length_error("legal coloring count exceeds bound");
  }
  return static_cast<uint64_t>(total);
}

// Streams all legal colorings (root colors included), single consumer.
class ColoringEnumerator {
public:
  explicit ColoringEnumerator(const Ball& b, uint64_t bound = 10'000'000) : ball_(&b) {
    legal_coloring_count(b, bound);
    for (uint32_t x = 0; x < b.size(); ++x)
      if (star_size(b, x) > 16) throw std::invalid_argument("star size exceeds enumerator limit");
    if (b.kind() == BallKind::edge_rooted) {
      roots_ = {b.root(0), b.root(1)};
    } else {
      roots_ = {0};
    }
    for (uint32_t x = 0; x < b.size(); ++x)
      if (b.child_count(x) > 0) internal_.push_back(x);
    root_color_.assign(roots_.size(), 1);
    arrangement_.resize(internal_.size());
    reset_arrangements();
  }

  std::optional<Coloring> next() {
    if (done_) return std::nullopt;
    Coloring out = materialize();
    advance();
    return out;
  }

  // Allocation-free variant: the returned view stays valid until the next
  // call.  Used by the big sweeps.
  const Coloring* next_view() {
    if (done_) return nullptr;
    if (view_.color.empty()) {
      view_.ball = ball_;
      view_.color.assign(ball_->size(), 0);
    }
    materialize_into(view_);
    advance();
    return &view_;
  }

private:
  void materialize_into(Coloring& i) const {
    const Ball& b = *ball_;
    for (std::size_t k = 0; k < roots_.size(); ++k) i.color[roots_[k]] = root_color_[k];
    uint8_t avail[16];
    for (std::size_t k = 0; k < internal_.size(); ++k) {
      uint32_t x = internal_[k];
      int m = star_size(b, x);
      int skip = 0;
      if (!b.is_root(x))
        skip = i.color[b.parent(x)];
      else if (b.kind() == BallKind::edge_rooted)
        skip = i.color[b.root(1 - b.side_of(x))];
      int n = 0;
      for (int c = 1; c <= m; ++c)
        if (c != skip) avail[n++] = static_cast<uint8_t>(c);
      uint32_t first = b.first_child(x);
      for (int a = 0; a < b.child_count(x); ++a) i.color[first + a] = avail[arrangement_[k][a]];
    }
  }
  void reset_arrangements() {
    for (std::size_t i = 0; i < internal_.size(); ++i) {
      arrangement_[i].resize(ball_->child_count(internal_[i]));
      std::iota(arrangement_[i].begin(), arrangement_[i].end(), uint8_t(0));
    }
  }

  Coloring materialize() const {
    Coloring i;
    i.ball = ball_;
    i.color.assign(ball_->size(), 0);
    materialize_into(i);
    return i;
  }

  void advance() {
    // Odometer: arrangements first (BFS order is parent-before-child, so a
    // parent color change resets all dependent arrangements consistently),
    // then root colors.
    for (std::size_t k = internal_.size(); k-- > 0;) {
      if (std::next_permutation(arrangement_[k].begin(), arrangement_[k].end())) return;
    }
    for (std::size_t k = roots_.size(); k-- > 0;) {
      if (root_color_[k] < color_range(*ball_, roots_[k])) {
        ++root_color_[k];
        return;
      }
      root_color_[k] = 1;
    }
    done_ = true;
  }

  const Ball* ball_;
  std::vector<uint32_t> roots_;
  std::vector<uint32_t> internal_;
  std::vector<uint8_t> root_color_;
  std::vector<std::vector<uint8_t>> arrangement_;
  Coloring view_;
  bool done_ = false;
};

// Local action sigma_(i)(g,x): the permutation of star colors induced by g,
// as a permutation of {1..m} stored 0-based.
inline Perm local_action(const Coloring& i, const Automorphism& g, uint32_t x,
                         const std::vector<uint32_t>* img = nullptr) {
  const Ball& b = *i.ball;
  if (!b.star_complete(x)) throw std::invalid_argument("star of x is not inside the ball");
  auto st = b.star(x);
  Perm s(static_cast<int>(st.size()));
  for (uint32_t u : st) {
    uint32_t gu = img ? (*img)[u] : apply(g, u);
    s.img[i.color[u] - 1] = static_cast<uint8_t>(i.color[gu] - 1);
  }
  return s;
}

inline int sign_product(const Coloring& i, const Automorphism& g,
                        const std::vector<uint32_t>& vertices) {
  auto img = image_table(g);
  int s = 1;
  for (uint32_t w : vertices) s *= sign(local_action(i, g, w, &img));
  return s;
}

inline std::string serialize_coloring(const Coloring& i) {
  const Ball& b = *i.ball;
  std::string out;
  for (uint32_t x = 0; x < b.size(); ++x) {
    out += b.render_address(x);
    out += '=';
    out += std::to_string(static_cast<int>(i.color[x]));
    out += '\n';
  }
  return out;
}

inline Coloring parse_coloring(const Ball& b, const std::string& text) {
  Coloring i;
  i.ball = &b;
  i.color.assign(b.size(), 0);
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("coloring line missing '='");
    uint32_t x = b.parse_address(line.substr(0, eq));
    i.color[x] = static_cast<uint8_t>(std::stoi(line.substr(eq + 1)));
  }
  if (!is_legal(i)) throw std::invalid_argument("parsed coloring is not legal");
  return i;
}

}  // namespace ugt
