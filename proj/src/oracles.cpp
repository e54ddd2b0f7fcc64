#include "closure_kernels/oracles.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>

#include "closure_kernels/combinatorics.hpp"

namespace ck {

namespace {

using Mask = std::uint64_t;

Mask bit(int v) { return Mask{1} << v; }

std::vector<Mask> adj_masks(const Graph& g) {
  std::vector<Mask> a(static_cast<std::size_t>(g.n()), 0);
  for (auto [u, v] : g.edges()) {
    a[static_cast<std::size_t>(u)] |= bit(v);
    a[static_cast<std::size_t>(v)] |= bit(u);
  }
  return a;
}

void check_limits(const Instance& inst, OracleLimits lim, const char* who) {
  if (inst.n() > lim.max_vertices || inst.n() > 63)
    throw oracle_cap_exceeded(std::string(who) + ": " + std::to_string(inst.n()) +
                              " vertices exceed the oracle cap of " + std::to_string(lim.max_vertices) +
                              " (raise it with --oracle-cap)");
  if (inst.graph.m() > lim.max_edges)
    throw oracle_cap_exceeded(std::string(who) + ": " + std::to_string(inst.graph.m()) +
                              " edges exceed the oracle cap of " + std::to_string(lim.max_edges) +
                              " (raise it with --oracle-cap)");
}

VertexSet to_set(Mask m) {
  VertexSet s;
  while (m) {
    s.push_back(std::countr_zero(m));
    m &= m - 1;
  }
  return s;
}

Mask to_mask(const VertexSet& s) {
  Mask m = 0;
  for (int v : s) m |= bit(v);
  return m;
}

// Calls f on every subset of {0..n-1} of size 0..kmax, smaller sizes first;
// stops as soon as f returns true.
template <class F>
bool for_each_subset(int n, std::int64_t kmax, F&& f) {
  int top = static_cast<int>(std::min<std::int64_t>(kmax, n));
  for (int s = 0; s <= top; ++s) {
    if (s == 0) {
      if (f(Mask{0})) return true;
      continue;
    }
    Mask x = (Mask{1} << s) - 1;
    Mask limit = Mask{1} << n;
    while (x < limit) {
      if (f(x)) return true;
      Mask c = x & (~x + 1);
      Mask r = x + c;
      x = (((r ^ x) >> 2) / c) | r;
    }
  }
  return false;
}

bool mask_connected(const std::vector<Mask>& adj, Mask s) {
  if (std::popcount(s) <= 1) return true;
  Mask seen = s & (~s + 1), frontier = seen;
  while (frontier) {
    int v = std::countr_zero(frontier);
    frontier &= frontier - 1;
    Mask nxt = adj[static_cast<std::size_t>(v)] & s & ~seen;
    seen |= nxt;
    frontier |= nxt;
  }
  return seen == s;
}

bool mask_covers(const std::vector<Edge>& edges, Mask s) {
  for (auto [u, v] : edges)
    if (!((s >> u) & 1) && !((s >> v) & 1)) return false;
  return true;
}

// Largest component of G - s, in vertices.
int largest_component_outside(const std::vector<Mask>& adj, int n, Mask s) {
  Mask rest = (n == 64 ? ~Mask{0} : bit(n) - 1) & ~s;
  int best = 0;
  while (rest) {
    Mask comp = rest & (~rest + 1), frontier = comp;
    while (frontier) {
      int v = std::countr_zero(frontier);
      frontier &= frontier - 1;
      Mask nxt = adj[static_cast<std::size_t>(v)] & rest & ~comp;
      comp |= nxt;
      frontier |= nxt;
    }
    best = std::max(best, std::popcount(comp));
    rest &= ~comp;
  }
  return best;
}

std::optional<VertexSet> independent_set_of_size(const std::vector<Mask>& adj, int n, int b,
                                                 std::uint64_t* explored) {
  if (b <= 0) return VertexSet{};
  Mask found = 0;
  bool ok = false;
  std::function<bool(Mask, Mask, int)> rec = [&](Mask cand, Mask cur, int size) {
    if (explored) ++*explored;
    if (size >= b) {
      found = cur;
      return true;
    }
    if (size + std::popcount(cand) < b) return false;
    int pick = -1, pick_deg = 1 << 20;
    for (Mask c = cand; c; c &= c - 1) {
      int v = std::countr_zero(c);
      int d = std::popcount(adj[static_cast<std::size_t>(v)] & cand);
      if (d < pick_deg) {
        pick = v;
        pick_deg = d;
      }
    }
    if (rec(cand & ~adj[static_cast<std::size_t>(pick)] & ~bit(pick), cur | bit(pick), size + 1)) return true;
    if (pick_deg == 0) return false;
    return rec(cand & ~bit(pick), cur, size);
  };
  Mask all = n == 64 ? ~Mask{0} : bit(n) - 1;
  ok = rec(all, 0, 0);
  if (!ok) return std::nullopt;
  return to_set(found);
}

}  // namespace

bool is_vertex_cover(const Graph& g, const VertexSet& s) {
  require_vertices(g, s);
  std::vector<char> in(static_cast<std::size_t>(g.n()), 0);
  for (int v : s) in[static_cast<std::size_t>(v)] = 1;
  for (auto [u, v] : g.edges())
    if (!in[static_cast<std::size_t>(u)] && !in[static_cast<std::size_t>(v)]) return false;
  return true;
}

bool is_induced_matching(const Graph& g, const std::vector<Edge>& edges) {
  if (!is_matching(g, edges)) return false;
  for (std::size_t i = 0; i < edges.size(); ++i)
    for (std::size_t j = i + 1; j < edges.size(); ++j)
      for (int a : {edges[i].first, edges[i].second})
        for (int b : {edges[j].first, edges[j].second})
          if (g.adjacent(a, b)) return false;
  return true;
}

bool is_dominating_set(const Graph& g, const VertexSet& s) {
  require_vertices(g, s);
  std::vector<char> dom(static_cast<std::size_t>(g.n()), 0);
  for (int v : s) {
    dom[static_cast<std::size_t>(v)] = 1;
    for (int w : g.neighbors(v)) dom[static_cast<std::size_t>(w)] = 1;
  }
  return std::all_of(dom.begin(), dom.end(), [](char c) { return c != 0; });
}

std::optional<std::vector<int>> capvc_assignment(const Instance& inst, const VertexSet& s) {
  const Graph& g = inst.graph;
  auto edges = g.edges();
  int m = static_cast<int>(edges.size()), n = g.n();
  std::vector<char> in(static_cast<std::size_t>(n), 0);
  for (int v : s) in[static_cast<std::size_t>(v)] = 1;
  for (int v : s)
    if (inst.cap[static_cast<std::size_t>(v)] < 0) return std::nullopt;
  int src = 0, sink = 1 + m + n;
  FlowNetwork f(sink + 1);
  std::vector<std::pair<std::size_t, int>> choice;  // (arc, vertex)
  std::vector<std::vector<std::pair<std::size_t, int>>> per_edge(static_cast<std::size_t>(m));
  std::size_t arc = 0;
  for (int i = 0; i < m; ++i) {
    f.add_arc(src, 1 + i, 1);
    ++arc;
    for (int end : {edges[static_cast<std::size_t>(i)].first, edges[static_cast<std::size_t>(i)].second}) {
      if (!in[static_cast<std::size_t>(end)]) continue;
      f.add_arc(1 + i, 1 + m + end, 1);
      per_edge[static_cast<std::size_t>(i)].emplace_back(arc++, end);
    }
  }
  for (int v : s) f.add_arc(1 + m + v, sink, inst.cap[static_cast<std::size_t>(v)]);
  if (f.max_flow(src, sink) != m) return std::nullopt;
  std::vector<int> assignment(static_cast<std::size_t>(m), -1);
  for (int i = 0; i < m; ++i)
    for (auto [a, end] : per_edge[static_cast<std::size_t>(i)])
      if (f.flow(a) == 1) assignment[static_cast<std::size_t>(i)] = end;
  return assignment;
}

OracleResult solve_capvc_by_subsets(const Instance& inst, OracleLimits lim) {
  check_limits(inst, lim, "capvc oracle");
  OracleResult r;
  auto edges = inst.graph.edges();
  Mask usable = 0;
  for (int v = 0; v < inst.n(); ++v)
    if (inst.cap[static_cast<std::size_t>(v)] >= 0) usable |= bit(v);
  for_each_subset(inst.n(), inst.k, [&](Mask s) {
    if (s & ~usable) return false;
    ++r.explored;
    if (!mask_covers(edges, s)) return false;
    std::int64_t total = 0;
    for (int v : to_set(s)) total += inst.cap[static_cast<std::size_t>(v)];
    if (total < static_cast<std::int64_t>(edges.size())) return false;
    auto a = capvc_assignment(inst, to_set(s));
    if (!a) return false;
    r.yes = true;
    r.witness = to_set(s);
    r.assignment = *a;
    return true;
  });
  return r;
}

OracleResult solve_capvc_exact(const Instance& inst, OracleLimits lim) {
  check_limits(inst, lim, "capvc oracle");
  OracleResult r;
  const Graph& g = inst.graph;
  int n = g.n();
  auto edges = g.edges();
  auto adj = adj_masks(g);
  auto m = static_cast<std::int64_t>(edges.size());
  // Vertices that can take at least one edge; the others never help a cover.
  Mask useful = 0;
  std::vector<std::int64_t> eff(static_cast<std::size_t>(n), 0);
  for (int v = 0; v < n; ++v) {
    eff[static_cast<std::size_t>(v)] = std::min<std::int64_t>(inst.cap[static_cast<std::size_t>(v)], g.degree(v));
    if (eff[static_cast<std::size_t>(v)] >= 1) useful |= bit(v);
  }
  auto k = inst.k;
  if (m == 0) {
    r.yes = k >= 0;
    ++r.explored;
    return r;
  }

  auto capacity_reachable = [&](Mask s, Mask excluded) {
    std::int64_t have = 0;
    std::vector<std::int64_t> rest;
    for (int v = 0; v < n; ++v) {
      if (s >> v & 1)
        have += std::max<std::int64_t>(eff[static_cast<std::size_t>(v)], 0);
      else if ((useful >> v & 1) && !(excluded >> v & 1))
        rest.push_back(eff[static_cast<std::size_t>(v)]);
    }
    auto slots = static_cast<std::size_t>(std::max<std::int64_t>(k - std::popcount(s), 0));
    std::sort(rest.rbegin(), rest.rend());
    for (std::size_t i = 0; i < rest.size() && i < slots; ++i) have += rest[i];
    return have >= m;
  };

  std::function<bool(Mask, Mask)> rec = [&](Mask s, Mask excluded) {
    ++r.explored;
    if (std::popcount(s) > k || !capacity_reachable(s, excluded)) return false;
    for (auto [u, v] : edges) {
      if ((s >> u & 1) || (s >> v & 1)) continue;
      if (std::popcount(s) == k) return false;
      if ((useful >> u & 1) && !(excluded >> u & 1) && rec(s | bit(u), excluded)) return true;
      Mask need = adj[static_cast<std::size_t>(u)] & ~s;
      if (need & (excluded | ~useful)) return false;
      return rec(s | need, excluded | bit(u));
    }
    if (auto a = capvc_assignment(inst, to_set(s))) {
      r.yes = true;
      r.witness = to_set(s);
      r.assignment = *a;
      return true;
    }
    if (std::popcount(s) == k) return false;
    Mask open = useful & ~s & ~excluded;
    if (!open) return false;
    int w = std::countr_zero(open);
    return rec(s | bit(w), excluded) || rec(s, excluded | bit(w));
  };
  rec(0, 0);
  return r;
}

namespace {

OracleResult connected_cover(const Instance& inst, Mask forced) {
  OracleResult r;
  auto edges = inst.graph.edges();
  auto adj = adj_masks(inst.graph);
  for_each_subset(inst.n(), inst.k, [&](Mask s) {
    if ((s & forced) != forced) return false;
    ++r.explored;
    if (!mask_covers(edges, s) || !mask_connected(adj, s)) return false;
    r.yes = true;
    r.witness = to_set(s);
    return true;
  });
  return r;
}

}  // namespace

OracleResult solve_convc_exact(const Instance& inst, OracleLimits lim) {
  check_limits(inst, lim, "convc oracle");
  return connected_cover(inst, 0);
}

OracleResult solve_annotated_convc_exact(const Instance& inst, OracleLimits lim) {
  check_limits(inst, lim, "annotated convc oracle");
  Mask red = 0;
  for (int v = 0; v < inst.n(); ++v)
    if (inst.red[static_cast<std::size_t>(v)]) red |= bit(v);
  return connected_cover(inst, red);
}

OracleResult solve_is_exact(const Instance& inst, OracleLimits lim) {
  check_limits(inst, lim, "is oracle");
  OracleResult r;
  if (inst.k > inst.n()) return r;
  auto s = independent_set_of_size(adj_masks(inst.graph), inst.n(), static_cast<int>(inst.k), &r.explored);
  if (s) {
    r.yes = true;
    r.witness = *s;
  }
  return r;
}

OracleResult solve_im_exact(const Instance& inst, OracleLimits lim) {
  check_limits(inst, lim, "im oracle");
  OracleResult r;
  auto edges = inst.graph.edges();
  auto adj = adj_masks(inst.graph);
  std::vector<Edge> chosen;
  std::function<bool(std::size_t, Mask)> rec = [&](std::size_t from, Mask blocked) {
    ++r.explored;
    if (static_cast<std::int64_t>(chosen.size()) >= inst.k) return true;
    for (std::size_t i = from; i < edges.size(); ++i) {
      if (static_cast<std::int64_t>(edges.size() - i) < inst.k - static_cast<std::int64_t>(chosen.size()))
        return false;
      auto [u, v] = edges[i];
      if ((blocked >> u & 1) || (blocked >> v & 1)) continue;
      chosen.push_back(edges[i]);
      Mask nb = blocked | bit(u) | bit(v) | adj[static_cast<std::size_t>(u)] | adj[static_cast<std::size_t>(v)];
      if (rec(i + 1, nb)) return true;
      chosen.pop_back();
    }
    return false;
  };
  if (rec(0, 0)) {
    r.yes = true;
    r.edges = chosen;
  }
  return r;
}

OracleResult solve_ds_within(const Instance& inst, const VertexSet& allowed, OracleLimits lim) {
  check_limits(inst, lim, "ds oracle");
  require_vertices(inst.graph, allowed);
  OracleResult r;
  auto adj = adj_masks(inst.graph);
  VertexSet pool = normalized(allowed);
  Mask all = inst.n() == 64 ? ~Mask{0} : bit(inst.n()) - 1;
  for_each_subset(static_cast<int>(pool.size()), inst.k, [&](Mask pick) {
    ++r.explored;
    Mask dom = 0;
    VertexSet s;
    for (Mask c = pick; c; c &= c - 1) {
      int v = pool[static_cast<std::size_t>(std::countr_zero(c))];
      s.push_back(v);
      dom |= bit(v) | adj[static_cast<std::size_t>(v)];
    }
    if (dom != all) return false;
    r.yes = true;
    r.witness = s;
    return true;
  });
  return r;
}

OracleResult solve_ds_exact(const Instance& inst, OracleLimits lim) {
  VertexSet all(static_cast<std::size_t>(inst.n()));
  for (int v = 0; v < inst.n(); ++v) all[static_cast<std::size_t>(v)] = v;
  return solve_ds_within(inst, all, lim);
}

OracleResult solve_coc_exact(const Instance& inst, bool connected, OracleLimits lim) {
  check_limits(inst, lim, "coc oracle");
  OracleResult r;
  auto adj = adj_masks(inst.graph);
  for_each_subset(inst.n(), inst.k, [&](Mask s) {
    ++r.explored;
    if (connected && !mask_connected(adj, s)) return false;
    if (largest_component_outside(adj, inst.n(), s) > inst.ell) return false;
    r.yes = true;
    r.witness = to_set(s);
    return true;
  });
  return r;
}

OracleResult solve_multicolored_is_exact(const Instance& inst, OracleLimits lim) {
  check_limits(inst, lim, "mcis oracle");
  OracleResult r;
  std::vector<VertexSet> parts(static_cast<std::size_t>(std::max<std::int64_t>(inst.k, 0)));
  for (int v = 0; v < inst.n(); ++v) parts.at(static_cast<std::size_t>(inst.part[static_cast<std::size_t>(v)])).push_back(v);
  auto adj = adj_masks(inst.graph);
  VertexSet chosen;
  std::function<bool(std::size_t, Mask)> rec = [&](std::size_t i, Mask blocked) {
    ++r.explored;
    if (i == parts.size()) return true;
    for (int v : parts[i]) {
      if (blocked >> v & 1) continue;
      chosen.push_back(v);
      if (rec(i + 1, blocked | adj[static_cast<std::size_t>(v)])) return true;
      chosen.pop_back();
    }
    return false;
  };
  if (rec(0, 0)) {
    r.yes = true;
    r.witness = normalized(chosen);
  }
  return r;
}

OracleResult solve_multicolored_is_by_subsets(const Instance& inst, OracleLimits lim) {
  check_limits(inst, lim, "mcis oracle");
  OracleResult r;
  auto adj = adj_masks(inst.graph);
  Mask all = bit(inst.n()) - 1;
  Mask x = inst.k == 0 ? 0 : (Mask{1} << inst.k) - 1;
  if (inst.k > inst.n()) return r;
  for (;;) {
    ++r.explored;
    bool ok = true;
    Mask seen_parts = 0;
    for (Mask c = x; c && ok; c &= c - 1) {
      int v = std::countr_zero(c);
      if (adj[static_cast<std::size_t>(v)] & x) ok = false;
      Mask pb = bit(inst.part[static_cast<std::size_t>(v)]);
      if (seen_parts & pb) ok = false;
      seen_parts |= pb;
    }
    if (ok) {
      r.yes = true;
      r.witness = to_set(x);
      return r;
    }
    if (x == 0) return r;
    Mask c = x & (~x + 1);
    Mask rr = x + c;
    x = (((rr ^ x) >> 2) / c) | rr;
    if (x & ~all || x == 0) return r;
  }
}

OracleResult solve(const Instance& inst, OracleLimits lim) {
  switch (inst.kind) {
    case Problem::CapVc: return solve_capvc_exact(inst, lim);
    case Problem::ConVc: return solve_convc_exact(inst, lim);
    case Problem::AnnotatedConVc: return solve_annotated_convc_exact(inst, lim);
    case Problem::Coc: return solve_coc_exact(inst, true, lim);
    case Problem::Im: return solve_im_exact(inst, lim);
    case Problem::Ds: return solve_ds_exact(inst, lim);
    case Problem::Is: return solve_is_exact(inst, lim);
    case Problem::Mcis: return solve_multicolored_is_exact(inst, lim);
    case Problem::Plain: break;
  }
  throw invalid_input("no oracle for kind " + problem_name(inst.kind));
}

void validate(const SetCoverInstance& sc) {
  if (sc.lambda < 1 || sc.k < 0) throw invalid_input("set cover needs lambda >= 1 and k >= 0");
  if (sc.universe != sc.lambda * sc.k)
    throw invalid_input("universe size " + std::to_string(sc.universe) + " differs from lambda*k = " +
                        std::to_string(sc.lambda * sc.k));
  if (sc.universe > 64) throw invalid_input("universe too large for the exact oracle");
  for (const auto& s : sc.family) {
    if (static_cast<int>(normalized(s).size()) != sc.lambda || static_cast<int>(s.size()) != sc.lambda)
      throw invalid_input("every set must have exactly lambda distinct elements");
    for (int x : s)
      if (x < 0 || x >= sc.universe) throw invalid_input("set element outside the universe");
  }
}

OracleResult solve_exact_set_cover(const SetCoverInstance& sc) {
  validate(sc);
  OracleResult r;
  std::vector<Mask> sets;
  for (const auto& s : sc.family) sets.push_back(to_mask(s));
  Mask full = sc.universe == 64 ? ~Mask{0} : bit(sc.universe) - 1;
  VertexSet chosen;
  std::function<bool(std::size_t, Mask)> rec = [&](std::size_t from, Mask covered) {
    ++r.explored;
    if (static_cast<int>(chosen.size()) == sc.k) return covered == full;
    for (std::size_t i = from; i < sets.size(); ++i) {
      if (sets[i] & covered) continue;
      chosen.push_back(static_cast<int>(i));
      if (rec(i + 1, covered | sets[i])) return true;
      chosen.pop_back();
    }
    return false;
  };
  if (rec(0, 0)) {
    r.yes = true;
    r.witness = chosen;
  }
  return r;
}

int gamma_exact(const Graph& g) {
  int n = g.n();
  if (n > 20) throw invalid_input("gamma_exact supports at most 20 vertices");
  auto adj = adj_masks(g);
  std::vector<std::uint8_t> f(std::size_t{1} << n, 0);
  for (Mask x = 1; x < (Mask{1} << n); ++x) {
    std::uint8_t best = 255;
    for (Mask c = x; c; c &= c - 1) {
      int v = std::countr_zero(c);
      int cl = 0;
      Mask far = x & ~adj[static_cast<std::size_t>(v)] & ~bit(v);
      for (; far; far &= far - 1) {
        int w = std::countr_zero(far);
        cl = std::max(cl, std::popcount(adj[static_cast<std::size_t>(v)] & adj[static_cast<std::size_t>(w)] & x));
      }
      auto val = static_cast<std::uint8_t>(std::max<int>(cl, f[x & ~bit(v)]));
      best = std::min(best, val);
    }
    f[x] = best;
  }
  return f[(Mask{1} << n) - 1] + 1;
}

std::optional<VertexSet> find_independent_set_exact(const Graph& g, int b) {
  if (g.n() > 64) throw invalid_input("exact search supports at most 64 vertices");
  return independent_set_of_size(adj_masks(g), g.n(), b, nullptr);
}

std::optional<VertexSet> find_clique_exact(const Graph& g, int a) {
  if (g.n() > 64) throw invalid_input("exact search supports at most 64 vertices");
  auto adj = adj_masks(g);
  Mask all = g.n() == 64 ? ~Mask{0} : bit(g.n()) - 1;
  for (int v = 0; v < g.n(); ++v) adj[static_cast<std::size_t>(v)] = all & ~adj[static_cast<std::size_t>(v)] & ~bit(v);
  return independent_set_of_size(adj, g.n(), a, nullptr);
}

bool check_capvc(const Instance& inst, const VertexSet& s, const std::vector<int>& assignment) {
  const Graph& g = inst.graph;
  if (static_cast<std::int64_t>(normalized(s).size()) > inst.k) return false;
  auto edges = g.edges();
  if (assignment.size() != edges.size()) return false;
  std::map<int, std::int64_t> load;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    int v = assignment[i];
    if (v != edges[i].first && v != edges[i].second) return false;
    if (!std::binary_search(s.begin(), s.end(), v)) return false;
    ++load[v];
  }
  for (int v : s)
    if (inst.cap[static_cast<std::size_t>(v)] < 0 || load[v] > inst.cap[static_cast<std::size_t>(v)]) return false;
  return true;
}

bool check_convc(const Instance& inst, const VertexSet& s) {
  return static_cast<std::int64_t>(s.size()) <= inst.k && is_vertex_cover(inst.graph, s) &&
         induces_connected(inst.graph, s);
}

bool check_annotated_convc(const Instance& inst, const VertexSet& s) {
  for (int v = 0; v < inst.n(); ++v)
    if (inst.red[static_cast<std::size_t>(v)] && !std::binary_search(s.begin(), s.end(), v)) return false;
  return check_convc(inst, s);
}

bool check_is(const Instance& inst, const VertexSet& s) {
  return static_cast<std::int64_t>(normalized(s).size()) >= inst.k && is_independent_set(inst.graph, s);
}

bool check_im(const Instance& inst, const std::vector<Edge>& edges) {
  return static_cast<std::int64_t>(edges.size()) >= inst.k && is_induced_matching(inst.graph, edges);
}

bool check_ds(const Instance& inst, const VertexSet& s) {
  return static_cast<std::int64_t>(normalized(s).size()) <= inst.k && is_dominating_set(inst.graph, s);
}

bool check_coc(const Instance& inst, const VertexSet& s, bool connected) {
  if (static_cast<std::int64_t>(normalized(s).size()) > inst.k) return false;
  if (connected && !induces_connected(inst.graph, s)) return false;
  for (const auto& c : connected_components(remove_vertices(inst.graph, s).graph))
    if (static_cast<int>(c.size()) > inst.ell) return false;
  return true;
}

bool check_mcis(const Instance& inst, const VertexSet& s) {
  if (!is_independent_set(inst.graph, s)) return false;
  std::vector<int> hit(static_cast<std::size_t>(inst.k), 0);
  for (int v : s) ++hit.at(static_cast<std::size_t>(inst.part[static_cast<std::size_t>(v)]));
  return std::all_of(hit.begin(), hit.end(), [](int h) { return h == 1; });
}

bool check_set_cover(const SetCoverInstance& sc, const VertexSet& chosen) {
  if (static_cast<int>(chosen.size()) != sc.k) return false;
  std::vector<int> hits(static_cast<std::size_t>(sc.universe), 0);
  for (int i : chosen) {
    if (i < 0 || static_cast<std::size_t>(i) >= sc.family.size()) return false;
    for (int x : sc.family[static_cast<std::size_t>(i)]) ++hits[static_cast<std::size_t>(x)];
  }
  return std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; });
}

bool check(const Instance& inst, const OracleResult& r) {
  if (!r.yes) return true;
  switch (inst.kind) {
    case Problem::CapVc: return check_capvc(inst, r.witness, r.assignment);
    case Problem::ConVc: return check_convc(inst, r.witness);
    case Problem::AnnotatedConVc: return check_annotated_convc(inst, r.witness);
    case Problem::Coc: return check_coc(inst, r.witness, true);
    case Problem::Im: return check_im(inst, r.edges);
    case Problem::Ds: return check_ds(inst, r.witness);
    case Problem::Is: return check_is(inst, r.witness);
    case Problem::Mcis: return check_mcis(inst, r.witness);
    case Problem::Plain: break;
  }
  return false;
}

}  // namespace ck
