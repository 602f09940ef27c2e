#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <unordered_set>
#include <vector>

#include "ugt/perm.hpp"
#include "ugt/permgroup.hpp"

namespace ugt {

// Subgroup of S^n with S a permutation group of fixed base degree; elements
// are n-tuples of permutations.
struct ProductGroup {
  int n = 1;
  int base_degree = 0;
  std::vector<std::vector<Perm>> generators;
  std::vector<std::vector<Perm>> elements;

  uint64_t order() const { return elements.size(); }
};

namespace detail {

struct TupleHash {
  std::size_t operator()(const std::vector<Perm>& t) const {
    uint64_t h = 0xcbf29ce484222325ull;
    for (const auto& p : t)
      for (uint8_t v : p.img) h = (h ^ v) * 0x100000001b3ull;
    return static_cast<std::size_t>(h);
  }
};

inline std::vector<Perm> tuple_compose(const std::vector<Perm>& a, const std::vector<Perm>& b) {
  std::vector<Perm> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = compose(a[i], b[i]);
  return out;
}

inline std::vector<Perm> tuple_inverse(const std::vector<Perm>& a) {
  std::vector<Perm> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = inverse(a[i]);
  return out;
}

}  // namespace detail

inline ProductGroup product_closure(int n, int base_degree,
                                    std::vector<std::vector<Perm>> gens,
                                    uint64_t bound = 10'000'000) {
  std::unordered_set<std::vector<Perm>, detail::TupleHash> seen;
  std::vector<std::vector<Perm>> queue;
  std::vector<Perm> id(n, Perm(base_degree));
  seen.insert(id);
  queue.push_back(id);
  for (std::size_t i = 0; i < queue.size(); ++i) {
    auto cur = queue[i];
    for (const auto& g : gens) {
      auto next = detail::tuple_compose(g, cur);
      if (seen.insert(next).second) {
        if (seen.size() > bound) throw std::length_error("group order exceeds bound");
        queue.push_back(std::move(next));
      }
    }
  }
  ProductGroup out;
  out.n = n;
  out.base_degree = base_degree;
  out.generators = std::move(gens);
  out.elements.assign(seen.begin(), seen.end());
  std::sort(out.elements.begin(), out.elements.end());
  return out;
}

inline PermGroup projection(const ProductGroup& g, int i) {
  std::vector<Perm> elems;
  elems.reserve(g.elements.size());
  for (const auto& t : g.elements) elems.push_back(t[i]);
  return from_elements(g.base_degree, std::move(elems));
}

inline bool projection_pair_full(const ProductGroup& g, int i, int j, uint64_t s_order) {
  std::unordered_set<std::vector<Perm>, detail::TupleHash> pairs;
  for (const auto& t : g.elements) pairs.insert({t[i], t[j]});
  return pairs.size() == s_order * s_order;
}

// proj_{i,j}(G) = S^2 for all i<j forces G = S^n.
inline bool verify_pairwise_full(const ProductGroup& g, const PermGroup& s) {
  for (int i = 0; i < g.n; ++i)
    for (int j = i + 1; j < g.n; ++j)
      if (!projection_pair_full(g, i, j, s.order())) return false;
  uint64_t expect = 1;
  for (int i = 0; i < g.n; ++i) expect *= s.order();
  if (g.order() != expect)
    throw std::logic_error("pairwise-full projections but |G| != |S|^n");
  return true;
}

// [G,G] as the normal closure, inside G, of the generator commutators:
// close under multiplication, then add any missing conjugates and repeat.
inline ProductGroup commutator_subgroup(const ProductGroup& g, uint64_t bound = 10'000'000) {
  const auto& ggens = g.generators.empty() ? g.elements : g.generators;
  std::vector<std::vector<Perm>> gens;
  for (const auto& a : ggens)
    for (const auto& b : ggens)
      gens.push_back(detail::tuple_compose(
          detail::tuple_compose(a, b),
          detail::tuple_compose(detail::tuple_inverse(a), detail::tuple_inverse(b))));
  while (true) {
    ProductGroup sub = product_closure(g.n, g.base_degree, gens, bound);
    std::unordered_set<std::vector<Perm>, detail::TupleHash> have(sub.elements.begin(),
                                                                  sub.elements.end());
    std::vector<std::vector<Perm>> missing;
    for (const auto& h : ggens)
      for (const auto& e : sub.elements) {
        auto conj = detail::tuple_compose(detail::tuple_compose(h, e), detail::tuple_inverse(h));
        if (!have.count(conj)) missing.push_back(std::move(conj));
      }
    if (missing.empty()) return sub;
    gens = sub.elements;
    gens.insert(gens.end(), missing.begin(), missing.end());
  }
}

// Product-of-subdiagonals data: coordinates fall into blocks; within a block
// every coordinate is the image of the block representative under a fixed
// bijection S -> S (an automorphism of S, stored as an element-index table).
struct SubdiagonalDecomposition {
  std::vector<int> block_of;            // coordinate -> block id
  std::vector<int> representative;      // block id -> its representative coordinate
  std::vector<std::vector<uint32_t>> identify;  // coordinate -> table over element indices of S
};

namespace detail {

inline uint32_t element_index(const PermGroup& s, const Perm& p) {
  auto it = std::lower_bound(s.elements.begin(), s.elements.end(), p);
  if (it == s.elements.end() || !(*it == p)) throw std::invalid_argument("element not in S");
  return static_cast<uint32_t>(it - s.elements.begin());
}

}  // namespace detail

// Decomposes G <= S^n with full projections into a product of subdiagonals.
// When some projection is a proper overgroup of S, the derived series
// pre-pass replaces G by iterated commutator subgroups first.
inline SubdiagonalDecomposition decompose_subdiagonals(ProductGroup g, const PermGroup& s) {
  if (!is_simple_nonabelian(s))
    throw std::invalid_argument("base group S must be simple non-abelian");

  auto projections_are_s = [&](const ProductGroup& h) {
    for (int i = 0; i < h.n; ++i)
      if (projection(h, i).order() != s.order()) return false;
    return true;
  };
  for (int pass = 0; !projections_are_s(g); ++pass) {
    if (pass >= 8) throw std::invalid_argument("projections do not stabilize onto S");
    for (int i = 0; i < g.n; ++i) {
      PermGroup pr = projection(g, i);
      for (const auto& e : s.elements)
        if (!pr.contains(e)) throw std::invalid_argument("projection does not contain S");
    }
    g = commutator_subgroup(g);
  }

  int n = g.n;
  // i ~ j iff proj_j(ker proj_i) is trivial; the relation must come out an
  // equivalence (symmetry is re-checked explicitly).
  std::vector<std::vector<uint8_t>> related(n, std::vector<uint8_t>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      bool trivial = true;
      for (const auto& t : g.elements)
        if (t[i].is_identity() && !t[j].is_identity()) {
          trivial = false;
          break;
        }
      related[i][j] = trivial ? 1 : 0;
    }
  for (int i = 0; i < n; ++i) {
    if (!related[i][i]) throw std::logic_error("~ is not reflexive");
    for (int j = 0; j < n; ++j)
      if (related[i][j] != related[j][i]) throw std::logic_error("~ is not symmetric");
  }

  SubdiagonalDecomposition out;
  out.block_of.assign(n, -1);
  out.identify.resize(n);
  for (int i = 0; i < n; ++i) {
    if (out.block_of[i] >= 0) continue;
    int block = static_cast<int>(out.representative.size());
    out.representative.push_back(i);
    for (int j = i; j < n; ++j)
      if (related[i][j]) out.block_of[j] = block;
  }
  for (int j = 0; j < n; ++j) {
    int rep = out.representative[out.block_of[j]];
    std::vector<uint32_t> table(s.order(), UINT32_MAX);
    for (const auto& t : g.elements) {
      uint32_t from = detail::element_index(s, t[rep]);
      uint32_t to = detail::element_index(s, t[j]);
      if (table[from] != UINT32_MAX && table[from] != to)
        throw std::logic_error("identification map is not well-defined");
      table[from] = to;
    }
    for (uint32_t v : table)
      if (v == UINT32_MAX) throw std::logic_error("identification map is not total");
    out.identify[j] = std::move(table);
  }
  return out;
}

// The generative inverse of decompose_subdiagonals: rebuild the element set
// from free block choices.
inline ProductGroup reconstruct(const SubdiagonalDecomposition& d, const PermGroup& s, int n) {
  int blocks = static_cast<int>(d.representative.size());
  ProductGroup out;
  out.n = n;
  out.base_degree = s.degree;
  std::vector<uint32_t> choice(blocks, 0);
  while (true) {
    std::vector<Perm> t(n);
    for (int j = 0; j < n; ++j) t[j] = s.elements[d.identify[j][choice[d.block_of[j]]]];
    out.elements.push_back(std::move(t));
    int b = 0;
    while (b < blocks && ++choice[b] == s.order()) choice[b++] = 0;
    if (b == blocks) break;
  }
  std::sort(out.elements.begin(), out.elements.end());
  return out;
}

inline bool same_elements(const ProductGroup& a, const ProductGroup& b) {
  if (a.n != b.n || a.order() != b.order()) return false;
  return a.elements == b.elements;  // both sorted
}

}  // namespace ugt
