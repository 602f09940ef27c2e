#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "ugt/perm.hpp"

namespace ugt {

namespace detail {

struct PermHash {
  std::size_t operator()(const Perm& g) const {
    uint64_t h = 0xcbf29ce484222325ull;
    for (uint8_t v : g.img) h = (h ^ v) * 0x100000001b3ull;
    return static_cast<std::size_t>(h);
  }
};

}  // namespace detail

// Finite permutation group held as an explicit element list.  Everything
// here fits comfortably below the closure bound, so no stabilizer chains.
struct PermGroup {
  int degree = 0;
  std::vector<Perm> generators;
  std::vector<Perm> elements;  // sorted, closed under composition and inverse

  uint64_t order() const { return elements.size(); }
  bool contains(const Perm& g) const {
    return std::binary_search(elements.begin(), elements.end(), g);
  }
};

inline PermGroup closure(int degree, std::vector<Perm> gens, uint64_t bound = 10'000'000) {
  for (const auto& g : gens)
    if (g.degree() != degree) throw std::invalid_argument("generator degree mismatch");
  std::unordered_set<Perm, detail::PermHash> seen;
  std::vector<Perm> queue;
  seen.insert(Perm(degree));
  queue.push_back(Perm(degree));
  for (std::size_t i = 0; i < queue.size(); ++i) {
    Perm cur = queue[i];
    for (const auto& g : gens) {
      Perm next = compose(g, cur);
      if (seen.insert(next).second) {
        if (seen.size() > bound) throw std::length_error("group order exceeds bound");
        queue.push_back(std::move(next));
      }
    }
  }
  PermGroup out;
  out.degree = degree;
  out.generators = std::move(gens);
  out.elements.assign(seen.begin(), seen.end());
  std::sort(out.elements.begin(), out.elements.end());
  return out;
}

inline PermGroup from_elements(int degree, std::vector<Perm> elems) {
  PermGroup out;
  out.degree = degree;
  out.generators = elems;
  out.elements = std::move(elems);
  std::sort(out.elements.begin(), out.elements.end());
  out.elements.erase(std::unique(out.elements.begin(), out.elements.end()), out.elements.end());
  return out;
}

inline bool is_transitive(const PermGroup& g) {
  if (g.degree == 0) return true;
  std::vector<uint8_t> in_orbit(g.degree, 0);
  std::vector<int> stack = {0};
  in_orbit[0] = 1;
  int count = 1;
  const auto& gens = g.generators.empty() ? g.elements : g.generators;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (const auto& p : gens) {
      int y = p.img[x];
      if (!in_orbit[y]) {
        in_orbit[y] = 1;
        ++count;
        stack.push_back(y);
      }
    }
  }
  return count == g.degree;
}

inline bool is_2transitive(const PermGroup& g) {
  int m = g.degree;
  if (m < 2) return false;
  std::vector<uint8_t> in_orbit(m * m, 0);
  std::vector<std::pair<int, int>> stack = {{0, 1}};
  in_orbit[0 * m + 1] = 1;
  int count = 1;
  const auto& gens = g.generators.empty() ? g.elements : g.generators;
  while (!stack.empty()) {
    auto [a, b] = stack.back();
    stack.pop_back();
    for (const auto& p : gens) {
      int x = p.img[a], y = p.img[b];
      if (!in_orbit[x * m + y]) {
        in_orbit[x * m + y] = 1;
        ++count;
        stack.emplace_back(x, y);
      }
    }
  }
  return count == m * (m - 1);
}

inline uint64_t factorial_u64(int n) {
  uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<uint64_t>(i);
  return f;
}

// Alt(m) <= G, tested via the order of the even-element subgroup.
inline bool contains_alt(const PermGroup& g) {
  uint64_t evens = 0;
  for (const auto& p : g.elements)
    if (is_even(p)) ++evens;
  return evens == factorial_u64(g.degree) / 2;
}

inline bool is_abelian(const PermGroup& g) {
  const auto& gens = g.generators.empty() ? g.elements : g.generators;
  for (const auto& a : gens)
    for (const auto& b : gens)
      if (!(compose(a, b) == compose(b, a))) return false;
  return true;
}

inline PermGroup normal_closure(const PermGroup& g, const Perm& seed) {
  std::unordered_set<Perm, detail::PermHash> seen;
  std::vector<Perm> queue = {seed};
  seen.insert(seed);
  // close under conjugation by g and under products within the closure
  for (std::size_t i = 0; i < queue.size(); ++i) {
    Perm cur = queue[i];
    for (const auto& h : g.elements) {
      Perm conj = compose(compose(h, cur), inverse(h));
      if (seen.insert(conj).second) queue.push_back(std::move(conj));
    }
    for (std::size_t j = 0; j <= i; ++j) {
      Perm prod = compose(cur, queue[j]);
      if (seen.insert(prod).second) queue.push_back(std::move(prod));
      if (seen.size() > g.elements.size()) break;
    }
  }
  return from_elements(g.degree, std::vector<Perm>(seen.begin(), seen.end()));
}

// Brute normal-subgroup search; intended for |G| <= 360.
inline bool is_simple_nonabelian(const PermGroup& g) {
  if (g.order() <= 1 || is_abelian(g)) return false;
  for (const auto& e : g.elements) {
    if (e.is_identity()) continue;
    PermGroup nc = normal_closure(g, e);
    if (nc.order() != g.order()) return false;
  }
  return true;
}

}  // namespace ugt
