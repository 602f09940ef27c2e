#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ugt {

// Degrees of the two vertex types of a (d0,d1)-semiregular tree.
struct TreeShape {
  int d0 = 3;
  int d1 = 3;

  TreeShape() = default;
  TreeShape(int a, int b) : d0(a), d1(b) {
    if (d0 < 3 || d1 < 3) throw std::invalid_argument("tree degrees must be >= 3");
  }
  int degree(int type) const { return type == 0 ? d0 : d1; }
  bool regular() const { return d0 == d1; }
};

enum class BallKind {
  vertex_full,  // B(v,n): full star at the root
  half_rooted,  // half-tree ball: d-1 children at the root
  edge_rooted,  // two half-rooted balls glued along an edge
};

// Child slots are 1-based in addresses; the root has an empty path.
struct Address {
  uint8_t side = 0;  // only meaningful for edge-rooted balls
  std::vector<uint8_t> path;
};

// A finite ball of the semiregular tree with vertices indexed in BFS order
// (level by level, lexicographic within a level).  For vertex-rooted balls
// the first count_to_depth(k) indices are exactly B(root,k); edge-rooted
// balls interleave the two sides per level and keep the same property with
// levels counted from the root edge.
class Ball {
public:
  Ball(TreeShape shape, int root_type, int depth, BallKind kind)
      : shape_(shape), root_type_(root_type), depth_(depth), kind_(kind) {
    if (root_type != 0 && root_type != 1) throw std::invalid_argument("root type must be 0 or 1");
    if (depth < 0) throw std::invalid_argument("depth must be >= 0");
    build();
  }

  const TreeShape& shape() const { return shape_; }
  int root_type() const { return root_type_; }
  int depth() const { return depth_; }
  BallKind kind() const { return kind_; }

  uint32_t size() const { return static_cast<uint32_t>(parent_.size()); }
  uint32_t count_to_depth(int k) const { return level_start_.at(static_cast<std::size_t>(k) + 1); }
  uint32_t level_begin(int level) const { return level_start_.at(level); }
  uint32_t level_end(int level) const { return level_start_.at(static_cast<std::size_t>(level) + 1); }

  int depth_of(uint32_t x) const { return depth_v_[x]; }
  int side_of(uint32_t x) const { return side_v_[x]; }
  int type_of(uint32_t x) const {
    int rt = (kind_ == BallKind::edge_rooted && side_v_[x] == 1) ? 1 - root_type_ : root_type_;
    return rt ^ (depth_v_[x] & 1);
  }
  uint32_t parent(uint32_t x) const { return parent_[x]; }  // self for roots
  uint32_t first_child(uint32_t x) const { return first_child_[x]; }
  int child_count(uint32_t x) const { return child_count_[x]; }
  uint32_t child(uint32_t x, int slot1) const {  // slot1 is 1-based
    return first_child_[x] + static_cast<uint32_t>(slot1 - 1);
  }
  int slot_of(uint32_t x) const {  // 1-based slot of x below its parent
    return static_cast<int>(x - first_child_[parent_[x]]) + 1;
  }
  bool is_root(uint32_t x) const { return depth_v_[x] == 0; }
  bool is_leaf(uint32_t x) const { return child_count_[x] == 0; }
  uint32_t root(int side = 0) const { return kind_ == BallKind::edge_rooted ? root_idx_[side] : 0; }

  // Full star of x inside the ball: the vertex "above" (parent, or the other
  // side's root for an edge root) followed by the children.  Complete exactly
  // for internal vertices; vertex-full and half-rooted roots have no "above"
  // member, matching sigma in Sym(d) resp. Sym(d-1) at the root.
  bool star_complete(uint32_t x) const { return !is_leaf(x); }
  std::vector<uint32_t> star(uint32_t x) const {
    std::vector<uint32_t> s;
    if (is_root(x)) {
      if (kind_ == BallKind::edge_rooted) s.push_back(root_idx_[1 - side_v_[x]]);
    } else {
      s.push_back(parent_[x]);
    }
    for (int a = 1; a <= child_count_[x]; ++a) s.push_back(child(x, a));
    return s;
  }

  Address address_of(uint32_t x) const {
    Address a;
    a.side = static_cast<uint8_t>(side_v_[x]);
    while (!is_root(x)) {
      a.path.push_back(static_cast<uint8_t>(slot_of(x)));
      x = parent_[x];
    }
    std::reverse(a.path.begin(), a.path.end());
    return a;
  }
  uint32_t index_of(const Address& a) const {
    uint32_t x = root(a.side);
    for (uint8_t s : a.path) {
      if (s < 1 || s > child_count_[x]) throw std::out_of_range("address leaves the ball");
      x = child(x, s);
    }
    return x;
  }

  std::string render_address(uint32_t x) const {
    Address a = address_of(x);
    std::string out;
    if (kind_ == BallKind::edge_rooted) out += a.side ? "s1" : "s0";
    if (a.path.empty()) { if (kind_ != BallKind::edge_rooted) out = "-"; return out; }
    for (std::size_t i = 0; i < a.path.size(); ++i) {
      if (!out.empty() || i > 0) out += '/';
      out += std::to_string(static_cast<int>(a.path[i]));
    }
    return out;
  }
  uint32_t parse_address(const std::string& text) const {
    Address a;
    std::size_t pos = 0;
    if (kind_ == BallKind::edge_rooted) {
      if (text.size() < 2 || text[0] != 's' || (text[1] != '0' && text[1] != '1'))
        throw std::invalid_argument("edge-rooted address must start with s0 or s1");
      a.side = text[1] - '0';
      pos = 2;
      if (pos < text.size() && text[pos] == '/') ++pos;
    } else if (text == "-") {
      return 0;
    }
    while (pos < text.size()) {
      std::size_t next = text.find('/', pos);
      if (next == std::string::npos) next = text.size();
      a.path.push_back(static_cast<uint8_t>(std::stoi(text.substr(pos, next - pos))));
      pos = next + (next < text.size() ? 1 : 0);
    }
    return index_of(a);
  }

  // Descendants of x at a given level, as a contiguous index range [lo,hi).
  std::pair<uint32_t, uint32_t> descendants_at(uint32_t x, int level) const {
    if (level < depth_v_[x]) return {0, 0};
    uint32_t lo = x, hi = x;
    for (int l = depth_v_[x]; l < level; ++l) {
      if (is_leaf(lo)) return {0, 0};
      lo = first_child_[lo];
      hi = first_child_[hi] + static_cast<uint32_t>(child_count_[hi]) - 1;
    }
    return {lo, hi + 1};
  }

  // Sphere S(x,r) inside the ball; complete (equal to the tree sphere) iff
  // depth_of(x) + r <= depth().
  std::vector<uint32_t> sphere(uint32_t x, int r) const {
    std::vector<uint32_t> out;
    if (r == 0) { out.push_back(x); return out; }
    uint32_t cur = x;
    uint32_t prev = x;  // child of cur we came from, valid when step > 0
    for (int step = 0; step <= r; ++step) {
      int down = r - step;
      if (depth_v_[cur] + down <= depth_) {
        if (step == 0) {
          auto [lo, hi] = descendants_at(cur, depth_v_[cur] + down);
          for (uint32_t v = lo; v < hi; ++v) out.push_back(v);
        } else {
          auto [lo, hi] = descendants_at(cur, depth_v_[cur] + down);
          auto [xlo, xhi] = descendants_at(prev, depth_v_[cur] + down);
          for (uint32_t v = lo; v < hi; ++v)
            if (v < xlo || v >= xhi) out.push_back(v);
        }
      }
      // move one step up (possibly across the root edge)
      if (is_root(cur)) {
        if (kind_ != BallKind::edge_rooted || side_v_[cur] != side_v_[x]) break;
        prev = cur;
        cur = root_idx_[1 - side_v_[cur]];
      } else {
        prev = cur;
        cur = parent_[cur];
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  bool sphere_complete(uint32_t x, int r) const { return depth_v_[x] + r <= depth_; }

  // Branch of x: the subtree spanned by x and its descendants.
  std::vector<uint32_t> branch(uint32_t x) const {
    std::vector<uint32_t> out;
    for (int l = depth_v_[x]; l <= depth_; ++l) {
      auto [lo, hi] = descendants_at(x, l);
      for (uint32_t v = lo; v < hi; ++v) out.push_back(v);
    }
    return out;
  }

  // r-branches: branches of the vertices at distance depth-r from the root
  // (vertex-rooted balls only).  The only depth-branch is the full ball.
  std::vector<std::vector<uint32_t>> r_branches(int r) const {
    if (kind_ == BallKind::edge_rooted)
      throw std::invalid_argument("r-branches are defined for vertex-rooted balls");
    if (r < 0 || r > depth_) throw std::out_of_range("r exceeds ball depth");
    std::vector<std::vector<uint32_t>> out;
    for (uint32_t x = level_begin(depth_ - r); x < level_end(depth_ - r); ++x)
      out.push_back(branch(x));
    return out;
  }

  // Number of children a vertex at the given side/level has.
  int branching(int side, int level) const {
    if (level >= depth_) return 0;
    int rt = (kind_ == BallKind::edge_rooted && side == 1) ? 1 - root_type_ : root_type_;
    int t = rt ^ (level & 1);
    if (level == 0 && kind_ == BallKind::vertex_full) return shape_.degree(t);
    return shape_.degree(t) - 1;
  }

private:
  void build() {
    std::vector<uint32_t> frontier;
    if (kind_ == BallKind::edge_rooted) {
      root_idx_[0] = 0;
      root_idx_[1] = 1;
      parent_ = {0, 1};
      side_v_ = {0, 1};
      depth_v_ = {0, 0};
      frontier = {0, 1};
    } else {
      parent_ = {0};
      side_v_ = {0};
      depth_v_ = {0};
      frontier = {0};
    }
    level_start_ = {0, static_cast<uint32_t>(parent_.size())};
    first_child_.assign(parent_.size(), 0);
    child_count_.assign(parent_.size(), 0);

    for (int level = 0; level < depth_; ++level) {
      std::vector<uint32_t> next;
      for (uint32_t x : frontier) {
        int c = branching(side_v_[x], level);
        first_child_[x] = static_cast<uint32_t>(parent_.size());
        child_count_[x] = c;
        for (int a = 0; a < c; ++a) {
          next.push_back(static_cast<uint32_t>(parent_.size()));
          parent_.push_back(x);
          side_v_.push_back(side_v_[x]);
          depth_v_.push_back(static_cast<uint8_t>(level + 1));
          first_child_.push_back(0);
          child_count_.push_back(0);
        }
      }
      level_start_.push_back(static_cast<uint32_t>(parent_.size()));
      frontier.swap(next);
    }
  }

  TreeShape shape_;
  int root_type_;
  int depth_;
  BallKind kind_;
  uint32_t root_idx_[2] = {0, 0};
  std::vector<uint32_t> parent_;
  std::vector<uint32_t> first_child_;
  std::vector<int> child_count_;
  std::vector<uint8_t> side_v_;
  std::vector<uint8_t> depth_v_;
  std::vector<uint32_t> level_start_;
};

// B(v,n) around a type-rt vertex of the (d0,d1)-semiregular tree.
inline Ball build_ball(TreeShape shape, int root_type, int depth,
                       BallKind kind = BallKind::vertex_full) {
  return Ball(shape, root_type, depth, kind);
}

}  // namespace ugt
