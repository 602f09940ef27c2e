#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ugt {

// A finite set of radii, optionally starred.  Starred sets relax "every
// window has even sign" to "all windows agree".
struct RadiusSet {
  enum class Kind { empty, plain, starred };
  Kind kind = Kind::empty;
  std::vector<int> radii;  // ascending, non-empty unless kind == empty

  static RadiusSet none() { return {}; }
  static RadiusSet plain(std::vector<int> r) { return make(Kind::plain, std::move(r)); }
  static RadiusSet starred(std::vector<int> r) { return make(Kind::starred, std::move(r)); }

  bool empty() const { return kind == Kind::empty; }
  bool star() const { return kind == Kind::starred; }
  int max() const { return radii.back(); }
  bool contains(int r) const { return std::binary_search(radii.begin(), radii.end(), r); }

  bool operator==(const RadiusSet& o) const { return kind == o.kind && radii == o.radii; }

private:
  static RadiusSet make(Kind k, std::vector<int> r) {
    if (r.empty()) throw std::invalid_argument("radius set must be non-empty");
    std::sort(r.begin(), r.end());
    r.erase(std::unique(r.begin(), r.end()), r.end());
    if (r.front() < 0) throw std::invalid_argument("radii must be non-negative");
    RadiusSet s;
    s.kind = k;
    s.radii = std::move(r);
    return s;
  }
};

// One group of the classification family.
//   type_preserving    G+(Y0,Y1)        regular_full       G(X,X)
//   combined_star      G+(X0,X1)*       regular_full_star  G(X*,X*)
//                                       regular_combined   G(X,X)*
//                                       regular_prime      G'(X,X)*
// Regular variants require d0 == d1 and admit type-swapping elements.
struct GroupSpec {
  enum class Variant {
    type_preserving,
    combined_star,
    regular_full,
    regular_full_star,
    regular_combined,
    regular_prime,
  };
  Variant variant = Variant::type_preserving;
  RadiusSet y0;  // slot 0 (type-0 outermost spheres)
  RadiusSet y1;  // slot 1 (type-1 outermost spheres)

  bool regular_variant() const { return variant >= Variant::regular_full; }
  bool operator==(const GroupSpec& o) const {
    return variant == o.variant && y0 == o.y0 && y1 == o.y1;
  }

  static GroupSpec type_preserving_of(RadiusSet a, RadiusSet b) {
    GroupSpec s;
    s.variant = Variant::type_preserving;
    s.y0 = std::move(a);
    s.y1 = std::move(b);
    return s;
  }
  static GroupSpec combined_star_of(std::vector<int> x0, std::vector<int> x1) {
    GroupSpec s;
    s.variant = Variant::combined_star;
    s.y0 = RadiusSet::plain(std::move(x0));
    s.y1 = RadiusSet::plain(std::move(x1));
    return s;
  }
  static GroupSpec regular(Variant v, std::vector<int> x) {
    GroupSpec s;
    s.variant = v;
    s.y0 = RadiusSet::plain(x);
    s.y1 = RadiusSet::plain(std::move(x));
    return s;
  }

  // Anchor vertex type of slot t: chosen so that the outermost sphere of a
  // slot-t window consists of type-t vertices.
  int anchor_type(int t) const {
    const RadiusSet& x = t == 0 ? y0 : y1;
    return (t + x.max()) % 2;
  }
};

inline GroupSpec aut_plus_spec() { return GroupSpec::type_preserving_of(RadiusSet::none(), RadiusSet::none()); }
inline GroupSpec alt_spec() {
  return GroupSpec::type_preserving_of(RadiusSet::plain({0}), RadiusSet::plain({0}));
}

// ---------------------------------------------------------------------------
// Grammar (exact):
//   G+(X0=<set>; X1=<set>)   with <set> ::= empty | {a,b,...} | *{a,b,...}
//   Gc*(X0={..}; X1={..})
//   G(X={..}) | G*(X={..}) | Gc(X={..}) | Gprime(X={..})
// Sets are ascending comma-separated naturals.

namespace detail {

struct SpecCursor {
  const std::string& text;
  std::size_t pos = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("spec parse error at " + std::to_string(pos) + ": " + what);
  }
  void skip_ws() {
    while (pos < text.size() && text[pos] == ' ') ++pos;
  }
  bool eat(const std::string& tok) {
    skip_ws();
    if (text.compare(pos, tok.size(), tok) == 0) {
      pos += tok.size();
      return true;
    }
    return false;
  }
  void expect(const std::string& tok) {
    if (!eat(tok)) fail("expected '" + tok + "'");
  }
  int number() {
    skip_ws();
    std::size_t end = pos;
    while (end < text.size() && std::isdigit(static_cast<unsigned char>(text[end]))) ++end;
    if (end == pos) fail("expected a number");
    int v = std::stoi(text.substr(pos, end - pos));
    pos = end;
    return v;
  }
  std::vector<int> braced_set() {
    expect("{");
    std::vector<int> out;
    out.push_back(number());
    while (eat(",")) out.push_back(number());
    expect("}");
    for (std::size_t i = 1; i < out.size(); ++i)
      if (out[i] <= out[i - 1]) fail("set elements must be strictly ascending");
    return out;
  }
  RadiusSet radius_set() {
    skip_ws();
    if (eat("empty")) return RadiusSet::none();
    if (eat("*")) return RadiusSet::starred(braced_set());
    return RadiusSet::plain(braced_set());
  }
};

}  // namespace detail

inline GroupSpec parse_spec(const std::string& text) {
  detail::SpecCursor c{text};
  GroupSpec s;
  if (c.eat("G+")) {
    c.expect("(");
    c.expect("X0");
    c.expect("=");
    s.y0 = c.radius_set();
    c.expect(";");
    c.expect("X1");
    c.expect("=");
    s.y1 = c.radius_set();
    c.expect(")");
    s.variant = GroupSpec::Variant::type_preserving;
  } else if (c.eat("Gc*")) {
    c.expect("(");
    c.expect("X0");
    c.expect("=");
    s.y0 = c.radius_set();
    c.expect(";");
    c.expect("X1");
    c.expect("=");
    s.y1 = c.radius_set();
    c.expect(")");
    if (s.y0.kind != RadiusSet::Kind::plain || s.y1.kind != RadiusSet::Kind::plain)
      c.fail("Gc* takes two plain non-empty sets");
    s.variant = GroupSpec::Variant::combined_star;
  } else {
    GroupSpec::Variant v;
    if (c.eat("Gprime"))
      v = GroupSpec::Variant::regular_prime;
    else if (c.eat("Gc"))
      v = GroupSpec::Variant::regular_combined;
    else if (c.eat("G*"))
      v = GroupSpec::Variant::regular_full_star;
    else if (c.eat("G"))
      v = GroupSpec::Variant::regular_full;
    else
      c.fail("expected one of G+, Gc*, G, G*, Gc, Gprime");
    c.expect("(");
    c.expect("X");
    c.expect("=");
    RadiusSet x = c.radius_set();
    c.expect(")");
    if (x.empty()) c.fail("regular-tree variants take a non-empty plain set");
    if (x.star()) c.fail("regular-tree variants take a plain set");
    s = GroupSpec::regular(v, x.radii);
  }
  c.skip_ws();
  if (c.pos != text.size()) c.fail("trailing input");
  return s;
}

inline std::string render_set(const RadiusSet& s) {
  if (s.empty()) return "empty";
  std::string out = s.star() ? "*{" : "{";
  for (std::size_t i = 0; i < s.radii.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(s.radii[i]);
  }
  out += '}';
  return out;
}

inline std::string render_spec(const GroupSpec& s) {
  using V = GroupSpec::Variant;
  switch (s.variant) {
    case V::type_preserving:
      return "G+(X0=" + render_set(s.y0) + "; X1=" + render_set(s.y1) + ")";
    case V::combined_star:
      return "Gc*(X0=" + render_set(s.y0) + "; X1=" + render_set(s.y1) + ")";
    case V::regular_full:
      return "G(X=" + render_set(s.y0) + ")";
    case V::regular_full_star:
      return "G*(X=" + render_set(s.y0) + ")";
    case V::regular_combined:
      return "Gc(X=" + render_set(s.y0) + ")";
    case V::regular_prime:
      return "Gprime(X=" + render_set(s.y0) + ")";
  }
  throw std::logic_error("unreachable");
}

}  // namespace ugt
