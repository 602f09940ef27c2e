#pragma once

#include <cstdint>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace ugt {

// Permutation of {0,..,m-1} as an image array.  Printed in 1-based cycle
// notation, e.g. "(1 2 3)(4 5)"; the identity prints as "()".
struct Perm {
  std::vector<uint8_t> img;

  Perm() = default;
  explicit Perm(int m) : img(m) { std::iota(img.begin(), img.end(), uint8_t(0)); }

  int degree() const { return static_cast<int>(img.size()); }
  uint8_t operator()(uint8_t x) const { return img[x]; }
  bool operator==(const Perm& o) const { return img == o.img; }
  bool operator<(const Perm& o) const { return img < o.img; }

  bool is_identity() const {
    for (std::size_t i = 0; i < img.size(); ++i)
      if (img[i] != i) return false;
    return true;
  }
};

inline Perm compose(const Perm& g, const Perm& h) {  // (g*h)(x) = g(h(x))
  Perm out;
  out.img.resize(h.img.size());
  for (std::size_t i = 0; i < h.img.size(); ++i) out.img[i] = g.img[h.img[i]];
  return out;
}

inline Perm inverse(const Perm& g) {
  Perm out;
  out.img.resize(g.img.size());
  for (std::size_t i = 0; i < g.img.size(); ++i) out.img[g.img[i]] = static_cast<uint8_t>(i);
  return out;
}

// +1 for even, -1 for odd, via cycle decomposition.
inline int sign(const Perm& g) {
  int m = g.degree();
  std::vector<uint8_t> seen(m, 0);
  int transpositions = 0;
  for (int i = 0; i < m; ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (int j = i; !seen[j]; j = g.img[j]) {
      seen[j] = 1;
      ++len;
    }
    transpositions += len - 1;
  }
  return (transpositions % 2 == 0) ? 1 : -1;
}

inline bool is_even(const Perm& g) { return sign(g) > 0; }

inline std::string cycle_notation(const Perm& g) {
  int m = g.degree();
  std::vector<uint8_t> seen(m, 0);
  std::string out;
  for (int i = 0; i < m; ++i) {
    if (seen[i] || g.img[i] == i) { seen[i] = 1; continue; }
    out += '(';
    bool first = true;
    for (int j = i; !seen[j]; j = g.img[j]) {
      seen[j] = 1;
      if (!first) out += ' ';
      out += std::to_string(j + 1);
      first = false;
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

inline Perm parse_cycles(const std::string& text, int degree) {
  Perm g(degree);
  std::size_t pos = 0;
  auto skip_ws = [&] { while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos; };
  skip_ws();
  while (pos < text.size()) {
    if (text[pos] != '(') throw std::invalid_argument("expected '(' at position " + std::to_string(pos));
    ++pos;
    std::vector<int> cycle;
    while (true) {
      skip_ws();
      if (pos < text.size() && text[pos] == ')') { ++pos; break; }
      std::size_t end = pos;
      while (end < text.size() && std::isdigit(static_cast<unsigned char>(text[end]))) ++end;
      if (end == pos) throw std::invalid_argument("expected point at position " + std::to_string(pos));
      int v = std::stoi(text.substr(pos, end - pos));
      if (v < 1 || v > degree) throw std::invalid_argument("point out of range: " + std::to_string(v));
      cycle.push_back(v - 1);
      pos = end;
      skip_ws();
      if (pos < text.size() && text[pos] == ',') ++pos;
    }
    for (std::size_t i = 0; i < cycle.size(); ++i)
      g.img[cycle[i]] = static_cast<uint8_t>(cycle[(i + 1) % cycle.size()]);
    skip_ws();
  }
  return g;
}

}  // namespace ugt
