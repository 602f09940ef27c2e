#pragma once

// Brute-force oracles, kept independent of the library's ball arithmetic:
// the tree is rebuilt as an explicit adjacency graph, distances come from
// BFS, and membership follows the group definitions literally.

#include <cstdint>
#include <vector>

#include "ugt/groupspec.hpp"

namespace oracle {

struct Tree {
  int d0, d1, depth, root_type;
  std::vector<std::vector<int>> adj;
  std::vector<int> type;
  std::vector<int> dist_from_root;

  int size() const { return static_cast<int>(adj.size()); }
};

inline Tree build_tree(int d0, int d1, int root_type, int depth) {
  Tree t;
  t.d0 = d0;
  t.d1 = d1;
  t.depth = depth;
  t.root_type = root_type;
  t.adj.push_back({});
  t.type.push_back(root_type);
  t.dist_from_root.push_back(0);
  std::vector<int> frontier = {0};
  for (int level = 0; level < depth; ++level) {
    std::vector<int> next;
    for (int x : frontier) {
      int deg = t.type[x] == 0 ? d0 : d1;
      int children = (level == 0) ? deg : deg - 1;
      for (int c = 0; c < children; ++c) {
        int y = t.size();
        t.adj.push_back({});
        t.type.push_back(1 - t.type[x]);
        t.dist_from_root.push_back(level + 1);
        t.adj[x].push_back(y);
        t.adj[y].push_back(x);
        next.push_back(y);
      }
    }
    frontier = next;
  }
  return t;
}

inline std::vector<int> distances(const Tree& t, int from) {
  std::vector<int> dist(t.size(), -1);
  std::vector<int> queue = {from};
  dist[from] = 0;
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (int y : t.adj[queue[i]])
      if (dist[y] < 0) {
        dist[y] = dist[queue[i]] + 1;
        queue.push_back(y);
      }
  return dist;
}

// All windows S_X(v) of one slot that lie fully inside the tree, grouped for
// the star semantics.  A sphere S(v,r) is complete iff dist(root,v)+r <= depth.
struct OracleWindow {
  std::vector<int> verts;
  int cls;  // -1 plain
};

inline std::vector<OracleWindow> slot_windows(const Tree& t, const std::vector<int>& radii,
                                              int anchor_type, int cls) {
  std::vector<OracleWindow> out;
  int mx = radii.back();
  for (int v = 0; v < t.size(); ++v) {
    if (anchor_type >= 0 && t.type[v] != anchor_type) continue;
    if (t.dist_from_root[v] + mx > t.depth) continue;
    auto dist = distances(t, v);
    OracleWindow w;
    w.cls = cls;
    for (int u = 0; u < t.size(); ++u)
      for (int r : radii)
        if (dist[u] == r) w.verts.push_back(u);
    out.push_back(std::move(w));
  }
  return out;
}

inline std::vector<OracleWindow> spec_windows(const ugt::GroupSpec& s, const Tree& t) {
  using V = ugt::GroupSpec::Variant;
  std::vector<OracleWindow> out;
  auto add = [&](const ugt::RadiusSet& x, int anchor_type, int cls) {
    auto w = slot_windows(t, x.radii, anchor_type, cls);
    out.insert(out.end(), w.begin(), w.end());
  };
  switch (s.variant) {
    case V::type_preserving:
      if (!s.y0.empty()) add(s.y0, s.anchor_type(0), s.y0.star() ? 0 : -1);
      if (!s.y1.empty()) add(s.y1, s.anchor_type(1), s.y1.star() ? 1 : -1);
      break;
    case V::combined_star:
      add(s.y0, s.anchor_type(0), 0);
      add(s.y1, s.anchor_type(1), 0);
      break;
    case V::regular_full:
      add(s.y0, -1, -1);
      break;
    case V::regular_full_star:
      add(s.y0, 0, 0);
      add(s.y0, 1, 1);
      break;
    case V::regular_combined:
    case V::regular_prime:
      add(s.y0, -1, 0);
      break;
  }
  return out;
}

// Definitional membership of one labelling (bit v of `mask` = vertex v odd).
inline bool labelling_in_group(const std::vector<OracleWindow>& windows, uint64_t mask) {
  int cls_parity[2] = {-1, -1};
  for (const auto& w : windows) {
    int p = 0;
    for (int v : w.verts) p ^= static_cast<int>((mask >> v) & 1);
    if (w.cls < 0) {
      if (p) return false;
    } else if (cls_parity[w.cls] < 0) {
      cls_parity[w.cls] = p;
    } else if (cls_parity[w.cls] != p) {
      return false;
    }
  }
  return true;
}

}  // namespace oracle
