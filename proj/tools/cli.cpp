// Command-line surface: every verification as a reproducible command.
// Machine-readable output is line-delimited records behind a schema= header;
// the human format appends the elapsed time.  Exit 0 when all checks pass,
// 1 on a check failure, 2 on usage errors.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ugt/ugt.hpp"

using namespace ugt;

namespace {

struct Output {
  std::string schema;
  std::string echo;
  bool machine = false;
  std::string path;
  std::ostringstream buf;

  template <class T>
  Output& operator<<(const T& v) {
    buf << v;
    return *this;
  }

  int flush(bool ok, double elapsed_s) {
    std::ostringstream head;
    if (machine)
      head << "schema=" << schema << "\ncmd=" << echo << "\n";
    else
      head << "# " << schema << "\n# cmd:" << echo << "\n";
    std::string body = head.str() + buf.str();
    if (machine)
      body += std::string("status=") + (ok ? "pass" : "fail") + "\n";
    else {
      std::ostringstream tail;
      tail << "elapsed=" << elapsed_s << "s status=" << (ok ? "pass" : "FAIL") << "\n";
      body += tail.str();
    }
    if (path.empty())
      std::cout << body;
    else {
      std::ofstream f(path, std::ios::binary | std::ios::trunc);
      f << body;
    }
    return ok ? 0 : 1;
  }
};

TreeShape parse_shape(const std::string& text) {
  auto comma = text.find(',');
  if (comma == std::string::npos) throw CLI::ValidationError("--shape expects d0,d1");
  return TreeShape(std::stoi(text.substr(0, comma)), std::stoi(text.substr(comma + 1)));
}

// Independent membership route for the oracle subcommand: windows recomputed
// from BFS distances on the plain adjacency graph, no shared sphere code.
bool definitional_member(const GroupSpec& s, const Ball& b, const Diagram& d) {
  std::vector<std::vector<uint32_t>> adj(b.size());
  for (uint32_t x = 0; x < b.size(); ++x)
    if (!b.is_root(x)) {
      adj[x].push_back(b.parent(x));
      adj[b.parent(x)].push_back(x);
    }
  if (b.kind() == BallKind::edge_rooted) {
    adj[b.root(0)].push_back(b.root(1));
    adj[b.root(1)].push_back(b.root(0));
  }
  auto bfs = [&](uint32_t from) {
    std::vector<int> dist(b.size(), -1);
    std::vector<uint32_t> q = {from};
    dist[from] = 0;
    for (std::size_t i = 0; i < q.size(); ++i)
      for (uint32_t y : adj[q[i]])
        if (dist[y] < 0) {
          dist[y] = dist[q[i]] + 1;
          q.push_back(y);
        }
    return dist;
  };
  int cls_parity[2] = {-1, -1};
  auto handle_slot = [&](const RadiusSet& x, int anchor_type, int cls) {
    int mx = x.max();
    for (uint32_t w = 0; w < b.size(); ++w) {
      if (anchor_type >= 0 && b.type_of(w) != anchor_type) continue;
      if (b.depth_of(w) + mx > d.depth) continue;  // sphere S(w,mx) incomplete
      auto dist = bfs(w);
      int p = 0;
      for (uint32_t u = 0; u < b.size(); ++u)
        if (dist[u] >= 0 && x.contains(dist[u])) p ^= d.label[u];
      if (cls < 0) {
        if (p) return false;
      } else if (cls_parity[cls] < 0)
        cls_parity[cls] = p;
      else if (cls_parity[cls] != p)
        return false;
    }
    return true;
  };
  using V = GroupSpec::Variant;
  switch (s.variant) {
    case V::type_preserving:
      if (!s.y0.empty() && !handle_slot(s.y0, s.anchor_type(0), s.y0.star() ? 0 : -1))
        return false;
      if (!s.y1.empty() && !handle_slot(s.y1, s.anchor_type(1), s.y1.star() ? 1 : -1))
        return false;
      return true;
    case V::combined_star:
      return handle_slot(s.y0, s.anchor_type(0), 0) && handle_slot(s.y1, s.anchor_type(1), 0);
    case V::regular_full:
      return handle_slot(s.y0, -1, -1);
    case V::regular_full_star:
      return handle_slot(s.y0, 0, 0) && handle_slot(s.y0, 1, 1);
    default:
      return handle_slot(s.y0, -1, 0);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"computations with parity-defined groups acting on semiregular trees"};
  app.require_subcommand(1);

  std::string out_path;
  std::string format = "human";
  uint64_t seed = 1;
  uint64_t bound = 10'000'000;
  app.add_option("--out", out_path, "write the report to this path instead of stdout");
  app.add_option("--format", format, "human | records")->check(CLI::IsMember({"human", "records"}));
  app.add_option("--seed", seed, "seed for randomized constructions");
  app.add_option("--bound", bound, "cap on enumeration sizes");

  std::string echo;
  for (int i = 1; i < argc; ++i) echo += std::string(" ") + argv[i];
  auto make_output = [&](const std::string& schema) {
    Output o;
    o.schema = schema;
    o.echo = echo;
    o.machine = format == "records";
    o.path = out_path;
    return o;
  };
  auto timed = [&](Output& o, bool ok, std::chrono::steady_clock::time_point t0) {
    double el = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return o.flush(ok, el);
  };

  // ---- theta ----
  auto* theta = app.add_subcommand("theta", "the degree set forcing alternating local action");
  auto* theta_list_cmd = theta->add_subcommand("list", "ascending members up to --max");
  long long theta_max = 58;
  theta_list_cmd->add_option("--max", theta_max, "upper bound");
  theta_list_cmd->callback([&] {
    auto t0 = std::chrono::steady_clock::now();
    Output o = make_output("ugt.theta.list.v1");
    ThetaSieve sieve(theta_max);
    for (long long m : sieve.list(theta_max)) o << "m=" << m << "\n";
    std::exit(timed(o, true, t0));
  });
  auto* theta_density_cmd = theta->add_subcommand("density", "|Theta cap [1..n]| / n at sampled n");
  long long density_max = 1'000'000;
  theta_density_cmd->add_option("--max", density_max, "largest sample point");
  theta_density_cmd->callback([&] {
    auto t0 = std::chrono::steady_clock::now();
    Output o = make_output("ugt.theta.density.v1");
    ThetaSieve sieve(density_max);
    bool monotone = true;
    double prev = -1;
    for (long long n = 1000; n <= density_max; n *= 10) {
      double d = sieve.density(n);
      o << "n=" << n << " count=" << sieve.count(n) << " density=" << d << "\n";
      if (d <= prev) monotone = false;
      prev = d;
    }
    std::exit(timed(o, monotone, t0));
  });

  // ---- invariants ----
  auto* inv = app.add_subcommand("invariants", "the (c, K, K', f) profile of one group");
  std::string inv_shape = "6,6", inv_spec;
  inv->add_option("--shape", inv_shape, "tree degrees d0,d1");
  inv->add_option("--spec", inv_spec, "group name, e.g. G+(X0={1}; X1=empty)")->required();
  inv->callback([&] {
    auto t0 = std::chrono::steady_clock::now();
    Output o = make_output("ugt.invariants.v1");
    GroupSpec s = parse_spec(inv_spec);
    TreeShape shape = parse_shape(inv_shape);
    o << render_profile(s, shape, invariant_profile(s, shape));
    std::exit(timed(o, true, t0));
  });

  // ---- table-verify ----
  auto* table =
      app.add_subcommand("table-verify", "computed profiles vs the classification table rows");
  std::string tv_shape = "6,6";
  int tv_max = 2;
  table->add_option("--shape", tv_shape, "tree degrees d0,d1");
  table->add_option("--max-x", tv_max, "largest allowed max X");
  table->callback([&] {
    auto t0 = std::chrono::steady_clock::now();
    Output o = make_output("ugt.table.v1");
    TreeShape shape = parse_shape(tv_shape);
    auto family = enumerate_family(tv_max);
    std::vector<int> match(family.size(), 0);
    std::vector<std::string> lines(family.size());
    parallel_for(family.size(), [&](std::size_t idx) {
      const auto& s = family[idx];
      NumericProfile want = symbolic_profile(s);
      InvariantProfile got = invariant_profile(s, shape);
      bool ok = got.c[0] == want.c0 && got.c[1] == want.c1 && got.Kp[0] == want.k0 &&
                got.Kp[1] == want.k1;
      match[idx] = ok ? 1 : 0;
      std::ostringstream line;
      line << "spec=" << render_spec(s) << " c0=" << got.c[0] << " c1=" << got.c[1]
           << " Kprime0=" << got.Kp[0].str() << " Kprime1=" << got.Kp[1].str()
           << " match=" << (ok ? 1 : 0) << "\n";
      lines[idx] = line.str();
    });
    int mismatches = 0;
    for (std::size_t idx = 0; idx < family.size(); ++idx) {
      o << lines[idx];
      if (!match[idx]) ++mismatches;
    }
    o << "specs=" << family.size() << " mismatches=" << mismatches << "\n";
    std::exit(timed(o, mismatches == 0, t0));
  });

  // ---- count ----
  auto* count = app.add_subcommand("count", "family members with a given numeric profile");
  int c0 = 0, c1 = 0;
  std::string k0 = "inf", k1 = "inf";
  count->add_option("--c0", c0)->required();
  count->add_option("--c1", c1)->required();
  count->add_option("--k0", k0, "K'(0), a number or inf")->required();
  count->add_option("--k1", k1, "K'(1), a number or inf")->required();
  count->callback([&] {
    auto t0 = std::chrono::steady_clock::now();
    Output o = make_output("ugt.count.v1");
    IntOrInf a = k0 == "inf" ? IntOrInf::infinite() : IntOrInf::of(std::stoi(k0));
    IntOrInf b = k1 == "inf" ? IntOrInf::infinite() : IntOrInf::of(std::stoi(k1));
    o << "count=" << count_by_profile(c0, c1, a, b) << "\n";
    std::exit(timed(o, true, t0));
  });

  // ---- distinguish ----
  auto* dist = app.add_subcommand("distinguish", "a diagram in exactly one of two groups");
  std::string d_spec1, d_spec2, d_shape = "6,6";
  int d_budget = 4;
  dist->add_option("--spec1", d_spec1)->required();
  dist->add_option("--spec2", d_spec2)->required();
  dist->add_option("--shape", d_shape);
  dist->add_option("--budget", d_budget, "depth budget");
  dist->callback([&] {
    auto t0 = std::chrono::steady_clock::now();
    Output o = make_output("ugt.distinguish.v1");
    GroupSpec s1 = parse_spec(d_spec1), s2 = parse_spec(d_spec2);
    TreeShape shape = parse_shape(d_shape);
    auto w = separating_diagram(s1, s2, shape, d_budget);
    if (!w) {
      o << "separated=0\n";
      std::exit(timed(o, render_spec(s1) == render_spec(s2), t0));
    }
    Ball ball(shape, w->root_type, w->depth, BallKind::vertex_full);
    Diagram d = w->materialize(ball);
    bool verified = diagram_in_group(s1, d) != diagram_in_group(s2, d);
    o << "separated=1 root_type=" << w->root_type << " depth=" << w->depth
      << " in=" << (w->in_first ? "spec1" : "spec2") << " verified=" << (verified ? 1 : 0) << "\n";
    for (uint32_t v = 0; v < d.label.size(); ++v)
      if (d.label[v]) o << "o_at=" << ball.render_address(v) << "\n";
    std::exit(timed(o, verified, t0));
  });

  // ---- quotient ----
  auto* quot = app.add_subcommand("quotient", "normalizer quotient on sign patterns");
  std::string q_sub, q_sup, q_shape = "6,6";
  quot->add_option("--sub", q_sub)->required();
  quot->add_option("--sup", q_sup)->required();
  quot->add_option("--shape", q_shape);
  quot->callback([&] {
    auto t0 = std::chrono::steady_clock::now();
    Output o = make_output("ugt.quotient.v1");
    auto q = symbolic_quotient(parse_spec(q_sub), parse_spec(q_sup), parse_shape(q_shape));
    o << "order=" << q.order << " iso=" << q.iso << "\n";
    for (const auto& p : q.sup_patterns) o << "pattern=" << p.p0 << p.p1 << p.swap << "\n";
    std::exit(timed(o, true, t0));
  });

  // ---- halftree ----
  auto* ht = app.add_subcommand("halftree", "half-tree labelling construction");
  std::string h_spec, h_shape = "6,6";
  int h_depth = -1;
  ht->add_option("--spec", h_spec)->required();
  ht->add_option("--shape", h_shape);
  ht->add_option("--depth", h_depth, "region depth (default 2M)");
  ht->callback([&] {
    auto t0 = std::chrono::steady_clock::now();
    Output o = make_output("ugt.halftree.v1");
    GroupSpec s = parse_spec(h_spec);
    TreeShape shape = parse_shape(h_shape);
    int m = halftree_m(s);
    int depth = h_depth < 0 ? 2 * m : h_depth;
    Ball region(shape, 0, depth, BallKind::edge_rooted);
    Rng rng(seed);
    Diagram sd = random_seed(s, region, rng);
    auto r = half_tree_labelling(s, sd);
    bool ok = verify_half_tree(s, r);
    o << "M=" << m << " depth=" << depth << " s0=" << region.render_address(r.s0)
      << " sM=" << region.render_address(r.s_m) << " verified=" << (ok ? 1 : 0) << "\n";
    int odd = 0;
    for (uint32_t v = 0; v < region.size(); ++v)
      if (r.labelled.label[v]) ++odd;
    o << "o_labels=" << odd << "\n";
    std::exit(timed(o, ok, t0));
  });

  // ---- goursat ----
  auto* gours = app.add_subcommand("goursat", "subdiagonal decomposition of G <= S^n");
  int g_degree = 2;
  std::string g_input;
  gours->add_option("--degree", g_degree, "number of factors n")->required();
  gours
      ->add_option("--input", g_input,
                   "file: first line 'base=<m>', then generators as n cycle-notation"
                   " permutations separated by '|'")
      ->required();
  gours->callback([&] {
    auto t0 = std::chrono::steady_clock::now();
    Output o = make_output("ugt.goursat.v1");
    std::ifstream in(g_input);
    if (!in) throw CLI::ValidationError("cannot open " + g_input);
    std::string line;
    std::getline(in, line);
    if (line.rfind("base=", 0) != 0) throw CLI::ValidationError("first line must be base=<m>");
    int base = std::stoi(line.substr(5));
    std::vector<std::vector<Perm>> gens;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      std::vector<Perm> tuple;
      std::size_t pos = 0;
      for (int i = 0; i < g_degree; ++i) {
        std::size_t bar = line.find('|', pos);
        std::string part = bar == std::string::npos ? line.substr(pos) : line.substr(pos, bar - pos);
        tuple.push_back(parse_cycles(part, base));
        pos = bar == std::string::npos ? line.size() : bar + 1;
      }
      gens.push_back(std::move(tuple));
    }
    ProductGroup g = product_closure(g_degree, base, gens, bound);
    o << "order=" << g.order() << "\n";
    PermGroup s = projection(g, 0);
    auto d = decompose_subdiagonals(g, s);
    bool ok = same_elements(reconstruct(d, s, g_degree), g);
    o << "blocks=" << d.representative.size() << " reconstructed=" << (ok ? 1 : 0) << "\n";
    for (int i = 0; i < g_degree; ++i)
      o << "coordinate=" << i << " block=" << d.block_of[i] << "\n";
    std::exit(timed(o, ok, t0));
  });

  // ---- counterexample ----
  auto* cx = app.add_subcommand("counterexample", "the SL(2,F3) obstruction on T_{4,d1,2}");
  auto* cx_verify = cx->add_subcommand("verify", "sweep all legal colorings");
  int cx_d1 = 3;
  cx_verify->add_option("--d1", cx_d1, "also verify the lift for this degree (4 or 5)");
  cx_verify->callback([&] {
    auto t0 = std::chrono::steady_clock::now();
    Output o = make_output("ugt.counterexample.v1");
    Ball t432 = t432_ball();
    auto report = verify_no_alt_coloring(t432, default_psi(), format == "records");
    o << "colorings=" << report.colorings_checked << " containments=" << report.containments
      << "\n";
    for (const auto& f : report.failures) {
      std::string one_line;
      for (char ch : f.coloring) one_line += ch == '\n' ? ';' : ch;
      o << "coloring=" << one_line << " witness=" << f.witness << "\n";
    }
    bool ok = report.all_fail && report.colorings_checked == 1152;
    if (cx_d1 >= 4) {
      auto lift = verify_lift(cx_d1, std::max<uint64_t>(bound, 50'000'000));
      o << "lift_d1=" << cx_d1 << " lift_colorings=" << lift.colorings_checked
        << " lift_all_fail=" << (lift.all_fail ? 1 : 0) << "\n";
      ok = ok && lift.all_fail;
    }
    std::exit(timed(o, ok, t0));
  });

  // ---- oracle ----
  auto* orc = app.add_subcommand("oracle", "exhaustive cross-checks");
  auto* orc_diag = orc->add_subcommand("diagrams", "compiled set vs brute-force filtering");
  std::string or_shape = "4,4", or_spec;
  int or_depth = 2;
  orc_diag->add_option("--shape", or_shape);
  orc_diag->add_option("--spec", or_spec)->required();
  orc_diag->add_option("--depth", or_depth, "diagram depth K (<= 2 recommended)");
  orc_diag->callback([&] {
    auto t0 = std::chrono::steady_clock::now();
    Output o = make_output("ugt.oracle.diagrams.v1");
    GroupSpec s = parse_spec(or_spec);
    TreeShape shape = parse_shape(or_shape);
    bool all_ok = true;
    for (int rt = 0; rt < 2; ++rt) {
      Ball ball(shape, rt, or_depth, BallKind::vertex_full);
      if (ball.size() > 24) throw CLI::ValidationError("ball too large for 2^|B| enumeration");
      DiagramSet set(s, ball, or_depth);
      uint64_t total = uint64_t(1) << ball.size(), members = 0, mismatches = 0;
      for (uint64_t mask = 0; mask < total; ++mask) {
        Diagram d = all_e_diagram(ball, or_depth);
        for (uint32_t v = 0; v < ball.size(); ++v) d.label[v] = (mask >> v) & 1;
        bool compiled = set.contains(d);
        bool direct = definitional_member(s, ball, d);
        if (compiled != direct) ++mismatches;
        members += direct;
      }
      bool ok = mismatches == 0 && members == (uint64_t(1) << set.dimension());
      all_ok = all_ok && ok;
      o << "root_type=" << rt << " labellings=" << total << " members=" << members
        << " rank_count=" << (uint64_t(1) << set.dimension()) << " mismatches=" << mismatches
        << "\n";
    }
    std::exit(timed(o, all_ok, t0));
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
