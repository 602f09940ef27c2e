#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "ugt/ball.hpp"
#include "ugt/bitmatrix.hpp"
#include "ugt/diagram.hpp"
#include "ugt/groupspec.hpp"
#include "ugt/system.hpp"

namespace ugt {

// a (+) b = a + b - ceil(|a-b|/2), the exponent of the classification counts.
inline int boxplus(int a, int b) {
  int diff = a > b ? a - b : b - a;
  return a + b - (diff + 1) / 2;
}

// X0 and X1 are compatible if every element of either set that reaches past
// the other set's maximum has the parity of its own maximum.
inline bool compatible(const std::vector<int>& x0, const std::vector<int>& x1) {
  if (x0.empty() || x1.empty()) throw std::invalid_argument("compatible: sets must be non-empty");
  int m0 = x0.back(), m1 = x1.back();
  for (int y : x0)
    if (y >= m1 && (y - m0) % 2 != 0) return false;
  for (int y : x1)
    if (y >= m0 && (y - m1) % 2 != 0) return false;
  return true;
}

// ---------------------------------------------------------------------------
// alpha symbols: the total order is 0 < 0* < 1 < 1* < ... < infinity.

struct AlphaSymbol {
  bool infinite = false;
  int r = 0;
  bool star = false;

  static AlphaSymbol inf() { return {true, 0, false}; }
  static AlphaSymbol finite(int r, bool star = false) { return {false, r, star}; }

  int rank() const { return infinite ? INT32_MAX : 2 * r + (star ? 1 : 0); }
  bool operator==(const AlphaSymbol& o) const { return rank() == o.rank(); }
  bool operator<(const AlphaSymbol& o) const { return rank() < o.rank(); }
  bool operator>=(const AlphaSymbol& o) const { return rank() >= o.rank(); }

  std::string str() const {
    if (infinite) return "inf";
    return std::to_string(r) + (star ? "*" : "");
  }
};

namespace detail {

inline uint32_t leftmost_at(const Ball& b, uint32_t from, int level) {
  return b.descendants_at(from, level).first;
}

}  // namespace detail

// alpha_k at a root of the given type, decided by O(k) witness membership
// queries against the compiled diagram set (never by enumeration).  The
// witnesses are e-diagrams with o's placed at lexicographically least
// addresses.
inline AlphaSymbol alpha_at_root(const DiagramSet& set) {
  const Ball& b = set.ball();
  int k = set.depth();
  // a single o at level k: allowed only when every e-diagram is allowed
  if (set.contains_sparse({detail::leftmost_at(b, 0, k)})) return AlphaSymbol::inf();
  if (k == 0) return AlphaSymbol::finite(0);
  // two o's in the same x-branch but different (x-1)-branches
  auto two_witness = [&](int x) {
    uint32_t u = b.level_begin(k - x);
    return std::vector<uint32_t>{detail::leftmost_at(b, b.child(u, 1), k),
                                 detail::leftmost_at(b, b.child(u, 2), k)};
  };
  if (set.contains_sparse(two_witness(k))) return AlphaSymbol::finite(k);
  // one o in every (k-1)-branch: the starred case
  std::vector<uint32_t> all_odd;
  for (uint32_t c = b.level_begin(1); c < b.level_end(1); ++c)
    all_odd.push_back(detail::leftmost_at(b, c, k));
  if (set.contains_sparse(all_odd)) return AlphaSymbol::finite(k - 1, true);
  for (int x = k - 1; x >= 1; --x)
    if (set.contains_sparse(two_witness(x))) return AlphaSymbol::finite(x);
  return AlphaSymbol::finite(0);
}

// alpha_k^t: computed at a root of type (t+k) mod 2 so that the sphere S(v,k)
// carries type-t vertices.
inline AlphaSymbol alpha(const GroupSpec& s, TreeShape shape, int t, int k) {
  Ball b(shape, (t + k) % 2, k, BallKind::vertex_full);
  DiagramSet set(s, b, k);
  return alpha_at_root(set);
}

inline std::vector<AlphaSymbol> alpha_sequence(const GroupSpec& s, TreeShape shape, int t,
                                               int k_max) {
  std::vector<AlphaSymbol> out;
  for (int k = 0; k <= k_max; ++k) out.push_back(alpha(s, shape, t, k));
  return out;
}

// Which of the four shapes a sequence takes: #0 all-infinite, or K with
//   #1: inf^K, K, K, ...   #2: inf^K, K-1, K-1, ...   #3: inf^K, (K-1)*, K-1, ...
// Returns nullopt when the sequence fits none (or more than a prefix allows).
struct ShapeFit {
  int c = 0;           // 0..3
  int K = -1;          // -1 stands for "infinite" (case 0)
};

inline std::optional<ShapeFit> match_shape(const std::vector<AlphaSymbol>& seq) {
  std::size_t K = 0;
  while (K < seq.size() && seq[K].infinite) ++K;
  if (K == seq.size()) return ShapeFit{0, -1};
  int k = static_cast<int>(K);
  auto tail_is = [&](AlphaSymbol v, std::size_t from) {
    for (std::size_t j = from; j < seq.size(); ++j)
      if (!(seq[j] == v)) return false;
    return true;
  };
  if (seq[K] == AlphaSymbol::finite(k) && tail_is(AlphaSymbol::finite(k), K)) return ShapeFit{1, k};
  if (k >= 1 && seq[K] == AlphaSymbol::finite(k - 1) && tail_is(AlphaSymbol::finite(k - 1), K))
    return ShapeFit{2, k};
  if (k >= 1 && seq[K] == AlphaSymbol::finite(k - 1, true) &&
      tail_is(AlphaSymbol::finite(k - 1), K + 1))
    return ShapeFit{3, k};
  return std::nullopt;
}

inline bool non_increasing(const std::vector<AlphaSymbol>& seq) {
  for (std::size_t j = 1; j < seq.size(); ++j)
    if (seq[j].rank() > seq[j - 1].rank()) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Invariant profile: (c, K, K') for both types plus the f-map data at the
// critical depth.  The f-map is recorded two ways: a value table on the
// canonical generator diagrams, and exact code fingerprints of the diagram
// sets at depths K-1 and K (which pin the map completely even in the
// K(t) > K(1-t) regime where single-o generators do not span the domain).

struct IntOrInf {
  bool inf = true;
  int v = 0;

  static IntOrInf infinite() { return {true, 0}; }
  static IntOrInf of(int x) { return {false, x}; }
  bool operator==(const IntOrInf& o) const { return inf == o.inf && (inf || v == o.v); }
  std::string str() const { return inf ? "inf" : std::to_string(v); }
};

struct FTable {
  int K = 0;
  std::vector<std::pair<std::string, std::string>> values;  // generator -> J value
  BitMatrix domain_code;  // depth K-1 set at the critical root (empty when K == 0)
  BitMatrix image_code;   // depth K set at the critical root

  bool operator==(const FTable& o) const {
    return K == o.K && values == o.values && domain_code == o.domain_code &&
           image_code == o.image_code;
  }
};

// Closed-form descriptor, emitted when K(t) <= K(1-t).  For c=1 the stored
// set is the full even window of the depth-K membership rule (it includes K
// itself); for c=2 and c=3 the sets follow the in-branch/off-branch split
// with their classical ranges A <= {1..K-1}, B <= {0..K-1}.
struct FDescriptor {
  int c = 0;
  std::vector<int> A;
  std::vector<int> B;

  bool operator==(const FDescriptor& o) const { return c == o.c && A == o.A && B == o.B; }
};

struct InvariantProfile {
  std::array<int, 2> c{0, 0};
  std::array<IntOrInf, 2> K{IntOrInf::infinite(), IntOrInf::infinite()};
  std::array<IntOrInf, 2> Kp{IntOrInf::infinite(), IntOrInf::infinite()};
  std::array<std::optional<FTable>, 2> f;
  std::array<std::optional<FDescriptor>, 2> fdesc;

  bool numeric_equal(const InvariantProfile& o) const {
    return c == o.c && K == o.K && Kp == o.Kp;
  }
  bool same_invariants(const InvariantProfile& o) const {
    if (!numeric_equal(o)) return false;
    for (int t = 0; t < 2; ++t) {
      if (f[t].has_value() != o.f[t].has_value()) return false;
      if (f[t] && !(*f[t] == *o.f[t])) return false;
    }
    return true;
  }
};

namespace detail {

inline int level_parity(const Diagram& d, int level) {
  int p = 0;
  for (uint32_t v = d.ball->level_begin(level); v < d.ball->level_end(level); ++v)
    p ^= d.label[v];
  return p;
}

inline std::vector<int> branch_parities(const Diagram& d, int level) {
  const Ball& b = *d.ball;
  std::vector<int> out;
  for (uint32_t c = b.level_begin(1); c < b.level_end(1); ++c) {
    auto [lo, hi] = b.descendants_at(c, level);
    int p = 0;
    for (uint32_t v = lo; v < hi; ++v) p ^= d.label[v];
    out.push_back(p);
  }
  return out;
}

inline std::string render_j_value(int c, const Diagram& completed, int K) {
  if (c == 1) return level_parity(completed, K) ? "O" : "E";
  std::vector<int> p = branch_parities(completed, K);
  if (c == 3 && p[0] == 1)
    for (int& x : p) x ^= 1;  // values live modulo the all-flip
  std::string out = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += ',';
    out += p[i] ? 'O' : 'E';
  }
  out += ')';
  return out;
}

}  // namespace detail

// Profile of one group spec at the given tree shape.
inline InvariantProfile invariant_profile(const GroupSpec& s, TreeShape shape,
                                          int max_param_bound = 16) {
  validate_spec_shape(s, shape);
  for (const RadiusSet* x : {&s.y0, &s.y1})
    if (!x->empty() && x->max() > max_param_bound)
      throw std::invalid_argument("spec parameter exceeds the configured bound");

  InvariantProfile p;
  int global_max = 0;
  for (const RadiusSet* x : {&s.y0, &s.y1})
    if (!x->empty()) global_max = std::max(global_max, x->max());

  for (int t = 0; t < 2; ++t) {
    bool unconstrained = s.variant == GroupSpec::Variant::type_preserving &&
                         (t == 0 ? s.y0.empty() : s.y1.empty());
    if (unconstrained) {
      p.c[t] = 0;
      continue;
    }
    auto seq = alpha_sequence(s, shape, t, global_max + 2);
    auto fit = match_shape(seq);
    if (!fit || !non_increasing(seq))
      throw std::runtime_error("alpha sequence does not match any admissible shape");
    p.c[t] = fit->c;
    if (fit->c == 0) continue;
    p.K[t] = IntOrInf::of(fit->K);
    p.Kp[t] = IntOrInf::of(fit->c == 1 ? fit->K : fit->K - 1);
  }

  // f-map data at the critical depth of each constrained type.
  for (int t = 0; t < 2; ++t) {
    if (p.c[t] == 0) continue;
    int K = p.K[t].v;
    int Kother = p.c[1 - t] != 0 ? p.K[1 - t].v : INT32_MAX;
    Ball host(shape, (t + K) % 2, K, BallKind::vertex_full);

    FTable table;
    table.K = K;
    table.image_code = DiagramSet(s, host, K).code();
    if (K >= 1) table.domain_code = DiagramSet(s, host, K - 1).code();

    std::vector<std::pair<std::string, Diagram>> generators;
    if (K <= Kother) {
      for (int r = 0; r < K; ++r) {
        Diagram d = all_e_diagram(host, K - 1);
        d.label[detail::leftmost_at(host, 0, r)] = 1;
        generators.emplace_back("delta_" + std::to_string(r), std::move(d));
      }
    } else {
      // K(t) > K(1-t): single-o cores exist only at the levels where the
      // intervening constraints leave full freedom; deeper levels are filled
      // by the group's own extension rule.
      for (int r = 0; r < K; ++r) {
        if (!(r < Kother || (K - r) % 2 == 0)) continue;
        Diagram d = all_e_diagram(host, r);
        d.label[detail::leftmost_at(host, 0, r)] = 1;
        while (d.depth < K - 1) d = extend_diagram(s, d);
        generators.emplace_back("delta_" + std::to_string(r), std::move(d));
      }
      if (p.c[1 - t] == 3 && (K - Kother) % 2 != 0) {
        Diagram d = all_e_diagram(host, Kother);
        for (uint32_t c = host.level_begin(1); c < host.level_end(1); ++c)
          d.label[detail::leftmost_at(host, c, Kother)] = 1;
        while (d.depth < K - 1) d = extend_diagram(s, d);
        generators.emplace_back("sigma", std::move(d));
      }
    }
    for (auto& [name, gen] : generators) {
      Diagram completed = extend_diagram(s, gen);
      table.values.emplace_back(name, detail::render_j_value(p.c[t], completed, K));
    }

    // Closed form when the domain is everything.
    if (K <= Kother) {
      FDescriptor desc;
      desc.c = p.c[t];
      if (p.c[t] == 1) {
        for (int r = 0; r < K; ++r)
          if (table.values[r].second == "O") desc.A.push_back(r);
        desc.A.push_back(K);
      } else {
        for (int r = 0; r < K; ++r) {
          Diagram completed = extend_diagram(s, generators[r].second);
          auto bp = detail::branch_parities(completed, K);
          if (p.c[t] == 3 && bp.back() == 1)
            for (int& x : bp) x ^= 1;
          // in-branch value x_r sits in branch 1 (where the o was placed);
          // the off-branch value y_r is shared by all other branches
          int xr = bp[0];
          int yr = bp.back();
          if (r == 0) {
            if (p.c[t] == 2 && bp[0]) desc.B.push_back(0);
          } else {
            if (xr) desc.A.push_back(r);
            if (p.c[t] == 2 && yr) desc.B.push_back(r);
          }
        }
      }
      p.fdesc[t] = std::move(desc);
    }
    p.f[t] = std::move(table);
  }
  return p;
}

// ---------------------------------------------------------------------------
// The canonical family G underline: all distinct spec names with bounded
// parameters.

inline std::vector<std::vector<int>> all_radius_sets(int max_bound) {
  std::vector<std::vector<int>> out;
  for (int mx = 0; mx <= max_bound; ++mx) {
    // subsets of {0..mx-1}, each together with mx itself
    for (int mask = 0; mask < (1 << mx); ++mask) {
      std::vector<int> xs;
      for (int r = 0; r < mx; ++r)
        if (mask & (1 << r)) xs.push_back(r);
      xs.push_back(mx);
      out.push_back(std::move(xs));
    }
  }
  return out;
}

inline std::vector<GroupSpec> enumerate_family(int max_bound) {
  std::vector<GroupSpec> out;
  auto sets = all_radius_sets(max_bound);
  out.push_back(aut_plus_spec());
  for (const auto& x : sets) {
    out.push_back(GroupSpec::type_preserving_of(RadiusSet::plain(x), RadiusSet::none()));
    out.push_back(GroupSpec::type_preserving_of(RadiusSet::starred(x), RadiusSet::none()));
    out.push_back(GroupSpec::type_preserving_of(RadiusSet::none(), RadiusSet::plain(x)));
    out.push_back(GroupSpec::type_preserving_of(RadiusSet::none(), RadiusSet::starred(x)));
  }
  for (const auto& x0 : sets)
    for (const auto& x1 : sets) {
      if (!compatible(x0, x1)) continue;
      out.push_back(GroupSpec::type_preserving_of(RadiusSet::plain(x0), RadiusSet::plain(x1)));
      out.push_back(GroupSpec::type_preserving_of(RadiusSet::plain(x0), RadiusSet::starred(x1)));
      out.push_back(GroupSpec::type_preserving_of(RadiusSet::starred(x0), RadiusSet::plain(x1)));
      out.push_back(GroupSpec::type_preserving_of(RadiusSet::starred(x0), RadiusSet::starred(x1)));
      out.push_back(GroupSpec::combined_star_of(x0, x1));
    }
  return out;
}

// Table row -> numeric profile, read off the spec name.  Verified against
// invariant_profile by the table reproduction test.
struct NumericProfile {
  int c0, c1;
  IntOrInf k0, k1;

  bool operator==(const NumericProfile& o) const {
    return c0 == o.c0 && c1 == o.c1 && k0 == o.k0 && k1 == o.k1;
  }
};

inline NumericProfile symbolic_profile(const GroupSpec& s) {
  using V = GroupSpec::Variant;
  auto fin = [](const RadiusSet& x) { return IntOrInf::of(x.max()); };
  switch (s.variant) {
    case V::type_preserving: {
      if (s.y0.empty() && s.y1.empty()) return {0, 0, IntOrInf::infinite(), IntOrInf::infinite()};
      if (s.y1.empty()) return {s.y0.star() ? 3 : 1, 0, fin(s.y0), IntOrInf::infinite()};
      if (s.y0.empty()) return {0, s.y1.star() ? 3 : 1, IntOrInf::infinite(), fin(s.y1)};
      return {s.y0.star() ? 3 : 1, s.y1.star() ? 3 : 1, fin(s.y0), fin(s.y1)};
    }
    case V::combined_star: {
      int m0 = s.y0.max(), m1 = s.y1.max();
      if (m0 == m1) return {2, 2, fin(s.y0), fin(s.y1)};
      if (m0 > m1) return {1, 3, fin(s.y0), fin(s.y1)};
      return {3, 1, fin(s.y0), fin(s.y1)};
    }
    default:
      // regular variants share the numeric profile of their type-preserving
      // counterpart (identical vertex-rooted diagram sets)
      if (s.variant == V::regular_full)
        return symbolic_profile(
            GroupSpec::type_preserving_of(RadiusSet::plain(s.y0.radii), RadiusSet::plain(s.y1.radii)));
      if (s.variant == V::regular_full_star)
        return symbolic_profile(GroupSpec::type_preserving_of(RadiusSet::starred(s.y0.radii),
                                                              RadiusSet::starred(s.y1.radii)));
      return symbolic_profile(GroupSpec::combined_star_of(s.y0.radii, s.y1.radii));
  }
}

// Number of family members with the given numeric profile (Table 1, last
// column; rows 7/11 and 8/12 share profiles and add up).
inline uint64_t count_by_profile(int c0, int c1, IntOrInf k0, IntOrInf k1) {
  auto pow2 = [](int e) { return uint64_t(1) << e; };
  if (c0 == 0 && c1 == 0) return (k0.inf && k1.inf) ? 1 : 0;
  if (c1 == 0) return (c0 == 1 || c0 == 3) && !k0.inf && k1.inf ? pow2(k0.v) : 0;
  if (c0 == 0) return (c1 == 1 || c1 == 3) && k0.inf && !k1.inf ? pow2(k1.v) : 0;
  if (k0.inf || k1.inf) return 0;
  int a = k0.v, b = k1.v;
  uint64_t base = pow2(boxplus(a, b));
  if (c0 == 2 || c1 == 2) return (c0 == 2 && c1 == 2 && a == b) ? base : 0;
  if (c0 == 1 && c1 == 1) return base;
  if (c0 == 3 && c1 == 3) return base;
  if (c0 == 1 && c1 == 3) return base * (a > b ? 2 : 1);  // rows 7 and 11
  if (c0 == 3 && c1 == 1) return base * (a < b ? 2 : 1);  // rows 8 and 12
  return 0;
}

// ---------------------------------------------------------------------------
// Distinctness: find a diagram lying in exactly one of the two sets.

struct SeparationWitness {
  int root_type = 0;
  int depth = 0;
  int in_first = 1;  // 1 if the diagram belongs to spec1's set, else 0
  std::vector<uint8_t> labels;

  Diagram materialize(const Ball& ball) const {
    Diagram d;
    d.ball = &ball;
    d.depth = depth;
    d.label = labels;
    return d;
  }
};

inline bool codes_equal_at(const GroupSpec& a, const GroupSpec& c, const Ball& ball, int depth) {
  DiagramSet sa(a, ball, depth), sc(c, ball, depth);
  BitMatrix ca = sa.code(), cc = sc.code();
  return ca == cc;
}

// The witness battery follows the distinctness proof: single-o spheres and
// one-o-per-branch diagrams; the code-basis sweep behind it is exhaustive.
inline std::optional<SeparationWitness> separating_diagram(const GroupSpec& s1,
                                                           const GroupSpec& s2, TreeShape shape,
                                                           int depth_budget) {
  for (int depth = 0; depth <= depth_budget; ++depth) {
    for (int rt = 0; rt < 2; ++rt) {
      Ball ball(shape, rt, depth, BallKind::vertex_full);
      DiagramSet a(s1, ball, depth), c(s2, ball, depth);
      auto found = [&](std::vector<uint8_t> labels, bool first) {
        SeparationWitness w;
        w.root_type = rt;
        w.depth = depth;
        w.in_first = first ? 1 : 0;
        w.labels = std::move(labels);
        return w;
      };
      auto try_candidate = [&](const std::vector<uint32_t>& o) -> std::optional<SeparationWitness> {
        bool ina = a.contains_sparse(o), inc = c.contains_sparse(o);
        if (ina == inc) return std::nullopt;
        std::vector<uint8_t> labels(ball.count_to_depth(depth), 0);
        for (uint32_t v : o) labels[v] = 1;
        return found(std::move(labels), ina);
      };
      for (int r = 0; r <= depth; ++r)
        if (auto w = try_candidate({ball.level_begin(r)})) return w;
      if (depth >= 1) {
        std::vector<uint32_t> all_odd;
        for (uint32_t ch = ball.level_begin(1); ch < ball.level_end(1); ++ch)
          all_odd.push_back(ball.descendants_at(ch, depth).first);
        if (auto w = try_candidate(all_odd)) return w;
      }
      // exhaustive fallback: a basis vector of one code outside the other
      BitMatrix ca = a.code(), cc = c.code();
      if (ca == cc) continue;
      auto sweep = [&](const BitMatrix& basis, const DiagramSet& other,
                       bool first) -> std::optional<SeparationWitness> {
        for (std::size_t r = 0; r < basis.rows(); ++r) {
          Diagram d = all_e_diagram(ball, depth);
          for (uint32_t v = 0; v < d.label.size(); ++v) d.label[v] = basis.get(r, v);
          if (!other.contains(d)) return found(std::move(d.label), first);
        }
        return std::nullopt;
      };
      if (auto w = sweep(ca, c, true)) return w;
      if (auto w = sweep(cc, a, false)) return w;
      throw std::logic_error("codes differ but no basis separator found");
    }
  }
  return std::nullopt;
}

inline bool diagram_sets_equal(const GroupSpec& s1, const GroupSpec& s2, TreeShape shape,
                               int max_depth) {
  for (int depth = 0; depth <= max_depth; ++depth)
    for (int rt = 0; rt < 2; ++rt) {
      Ball ball(shape, rt, depth, BallKind::vertex_full);
      if (!codes_equal_at(s1, s2, ball, depth)) return false;
    }
  return true;
}

// Complete-invariants property at desk scale: equal profiles iff equal
// diagram sets at every depth up to the budget.
inline bool complete_invariants_check(const GroupSpec& s1, const GroupSpec& s2, TreeShape shape,
                                      int max_depth) {
  bool profiles_equal =
      invariant_profile(s1, shape).same_invariants(invariant_profile(s2, shape));
  bool sets_equal = diagram_sets_equal(s1, s2, shape, max_depth);
  return profiles_equal == sets_equal;
}

// ---------------------------------------------------------------------------
// The c = 2 relations linking the in-branch and off-branch index sets of the
// two types: K-1 is always off-branch, and r is off-branch for t exactly
// when r+1 is in-branch for 1-t.

struct C2Relations {
  int K = 0;
  std::array<std::vector<int>, 2> A;
  std::array<std::vector<int>, 2> B;
  bool holds = false;
};

inline C2Relations check_c2_relations(const GroupSpec& s, TreeShape shape) {
  InvariantProfile p = invariant_profile(s, shape);
  if (p.c[0] != 2 || p.c[1] != 2)
    throw std::invalid_argument("check_c2_relations requires c(0) = c(1) = 2");
  C2Relations rel;
  rel.K = p.K[0].v;
  if (p.K[1].v != rel.K) return rel;  // holds stays false
  for (int t = 0; t < 2; ++t) {
    if (!p.fdesc[t]) return rel;
    rel.A[t] = p.fdesc[t]->A;
    rel.B[t] = p.fdesc[t]->B;
  }
  auto has = [](const std::vector<int>& v, int x) {
    return std::find(v.begin(), v.end(), x) != v.end();
  };
  rel.holds = true;
  for (int t = 0; t < 2; ++t) {
    if (!has(rel.B[t], rel.K - 1)) rel.holds = false;
    for (int r = 0; r + 1 <= rel.K - 1; ++r)
      if (has(rel.B[t], r) != has(rel.A[1 - t], r + 1)) rel.holds = false;
  }
  return rel;
}

// ---------------------------------------------------------------------------
// Profile rendering (text key=value blocks, versioned).

inline std::string render_profile(const GroupSpec& s, TreeShape shape,
                                  const InvariantProfile& p) {
  std::ostringstream out;
  out << "profile.v1\n";
  out << "spec=" << render_spec(s) << "\n";
  out << "shape=" << shape.d0 << "," << shape.d1 << "\n";
  out << "c0=" << p.c[0] << " c1=" << p.c[1] << " K0=" << p.K[0].str() << " K1=" << p.K[1].str()
      << " Kprime0=" << p.Kp[0].str() << " Kprime1=" << p.Kp[1].str() << "\n";
  for (int t = 0; t < 2; ++t) {
    if (!p.f[t]) continue;
    for (const auto& [gen, val] : p.f[t]->values)
      out << "f" << t << "." << gen << "=" << val << "\n";
    if (p.fdesc[t]) {
      auto render_set = [](const std::vector<int>& v) {
        std::string s = "{";
        for (std::size_t i = 0; i < v.size(); ++i) {
          if (i) s += ',';
          s += std::to_string(v[i]);
        }
        return s + "}";
      };
      if (p.fdesc[t]->c == 1)
        out << "f" << t << ".window=" << render_set(p.fdesc[t]->A) << "\n";
      else {
        out << "f" << t << ".A=" << render_set(p.fdesc[t]->A) << "\n";
        if (p.fdesc[t]->c == 2) out << "f" << t << ".B=" << render_set(p.fdesc[t]->B) << "\n";
      }
    }
  }
  return out.str();
}

}  // namespace ugt
