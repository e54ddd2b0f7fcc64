#include "closure_kernels/im.hpp"

#include <algorithm>

#include "closure_kernels/arith.hpp"
#include "closure_kernels/combinatorics.hpp"
#include "closure_kernels/oracles.hpp"

namespace ck {

BigInt im_f(int gamma, const BigInt& k) { return 4 * BigInt(gamma) * k * k + 3 * k; }

BigInt im_g(int gamma, const BigInt& x) { return 4 * BigInt(gamma) * x * x + x * x; }

ImThresholds im_thresholds(int gamma, std::int64_t k) {
  ImThresholds t;
  t.gamma = gamma;
  t.k = k;
  t.f = im_f(gamma, k);
  t.g_f = im_g(gamma, t.f);
  t.g_g_f = im_g(gamma, t.g_f);
  t.vpos = 2 * t.g_g_f;
  return t;
}

Reduced rr_im_delv(const Instance& inst, const ClosureOrdering& ord) {
  if (inst.kind != Problem::Im) throw invalid_input("rr_im_delv expects an im instance");
  auto need = 2 * static_cast<std::int64_t>(ord.gamma) * inst.k;
  for (int v = 0; v < inst.n(); ++v) {
    auto q = pq_split(inst.graph, ord, v).posterior;
    if (static_cast<std::int64_t>(q.size()) < 2 * need) continue;
    auto sub = induced_subgraph(inst.graph, q);
    if (static_cast<std::int64_t>(maximum_matching(sub.graph).size()) >= need)
      return reduce_with(inst, {delete_edit(inst, {v})});
  }
  return unchanged(inst);
}

Reduced rr_im_delv(const Instance& inst) { return rr_im_delv(inst, weak_closure_ordering(inst.graph)); }

Reduced rr_im_vpos(const Instance& inst) {
  if (inst.kind != Problem::Im) throw invalid_input("rr_im_vpos expects an im instance");
  auto t = im_thresholds(weak_closure_ordering(inst.graph).gamma, inst.k);
  auto lp = vclp_half_integral(inst.graph);
  if (BigInt(lp.doubled_objective) >= 2 * t.vpos) return reduce_with(inst, {decide_edit(true)});
  return unchanged(inst);
}

Reduced rr_im_twin(const Instance& inst) {
  if (inst.kind != Problem::Im) throw invalid_input("rr_im_twin expects an im instance");
  for (const auto& cls : false_twin_classes(inst.graph))
    if (cls.size() >= 2) return reduce_with(inst, {delete_edit(inst, {cls.back()})});
  return unchanged(inst);
}

KernelResult kernelize_im(const Instance& inst) {
  validate(inst);
  if (inst.kind != Problem::Im) throw invalid_input("kernelize_im expects an im instance");
  KernelResult kr{inst, {}, std::nullopt};
  for (;;) {
    auto r = rr_im_delv(kr.instance);
    if (!r.applied) break;
    record(kr, "delv", r);
  }
  record(kr, "vpos", rr_im_vpos(kr.instance));
  if (kr.decided) return kr;
  for (;;) {
    auto r = rr_im_twin(kr.instance);
    if (!r.applied) break;
    record(kr, "twin", r);
  }
  return kr;
}

BoundCheck im_size_bound(const Instance& reduced) {
  auto lp = vclp_half_integral(reduced.graph);
  int s = static_cast<int>(lp.v_half.size() + lp.v1.size());
  int gamma = weak_closure_ordering(reduced.graph).gamma;
  return {"im |V| <= |S| + lemma2(|S|, gamma, 1)", static_cast<std::uint64_t>(reduced.n()),
          sat_add(static_cast<std::uint64_t>(s), lemma2_bound(s, gamma, 1)), false};
}

namespace {

// Adds edges from `candidates` in order whenever the result stays induced.
std::vector<Edge> greedy_induced(const Graph& g, const std::vector<Edge>& candidates, int k) {
  std::vector<char> blocked(static_cast<std::size_t>(g.n()), 0);
  std::vector<Edge> out;
  for (auto [u, v] : candidates) {
    if (static_cast<int>(out.size()) == k) break;
    if (blocked[static_cast<std::size_t>(u)] || blocked[static_cast<std::size_t>(v)]) continue;
    out.emplace_back(u, v);
    for (int x : {u, v}) {
      blocked[static_cast<std::size_t>(x)] = 1;
      for (int y : g.neighbors(x)) blocked[static_cast<std::size_t>(y)] = 1;
    }
  }
  return out;
}

std::vector<Edge> by_degree(const Graph& g, std::vector<Edge> edges) {
  std::stable_sort(edges.begin(), edges.end(), [&](Edge x, Edge y) {
    return g.degree(x.first) + g.degree(x.second) < g.degree(y.first) + g.degree(y.second);
  });
  return edges;
}

}  // namespace

std::optional<std::vector<Edge>> extract_im_bipartite(const Graph& g, const VertexSet& a, const VertexSet& b,
                                                      int k) {
  VertexSet all = a;
  all.insert(all.end(), b.begin(), b.end());
  if (normalized(all).size() != all.size() || static_cast<int>(all.size()) != g.n() || !is_independent_set(g, a) ||
      !is_independent_set(g, b))
    throw invalid_input("extract_im_bipartite needs a bipartition of the graph");
  if (k <= 0) return std::vector<Edge>{};

  auto ord = weak_closure_ordering(g);
  auto accept = [&](std::vector<Edge> m) -> std::optional<std::vector<Edge>> {
    if (static_cast<int>(m.size()) < k) return std::nullopt;
    m.resize(static_cast<std::size_t>(k));
    for (auto& e : m) e = std::minmax(e.first, e.second);
    if (!is_induced_matching(g, m)) return std::nullopt;
    return m;
  };

  // Vertices with many posterior neighbors, latest in the ordering first, each
  // matched to a posterior neighbor not yet dominated.
  auto high = static_cast<std::size_t>(ord.gamma) * static_cast<std::size_t>(k);
  for (const VertexSet* side : {&a, &b}) {
    VertexSet hv;
    for (int v : *side)
      if (pq_split(g, ord, v).posterior.size() >= high) hv.push_back(v);
    std::sort(hv.begin(), hv.end(), [&](int x, int y) {
      return ord.position[static_cast<std::size_t>(x)] > ord.position[static_cast<std::size_t>(y)];
    });
    std::vector<Edge> cand;
    for (int v : hv)
      for (int q : pq_split(g, ord, v).posterior) cand.emplace_back(v, q);
    if (auto m = accept(greedy_induced(g, cand, k))) return m;
  }

  if (auto m = accept(greedy_induced(g, by_degree(g, maximum_matching(g).edges), k))) return m;

  // Minimum-degree greedy on the shrinking graph.
  std::vector<char> alive(static_cast<std::size_t>(g.n()), 1);
  std::vector<Edge> out;
  while (static_cast<int>(out.size()) < k) {
    std::optional<Edge> best;
    int best_deg = 0;
    auto live_deg = [&](int x) {
      int d = 0;
      for (int y : g.neighbors(x)) d += alive[static_cast<std::size_t>(y)];
      return d;
    };
    for (auto [u, v] : g.edges()) {
      if (!alive[static_cast<std::size_t>(u)] || !alive[static_cast<std::size_t>(v)]) continue;
      int d = live_deg(u) + live_deg(v);
      if (!best || d < best_deg) best = Edge{u, v}, best_deg = d;
    }
    if (!best) break;
    out.push_back(*best);
    for (int x : {best->first, best->second}) {
      alive[static_cast<std::size_t>(x)] = 0;
      for (int y : g.neighbors(x)) alive[static_cast<std::size_t>(y)] = 0;
    }
  }
  return accept(out);
}

}  // namespace ck
