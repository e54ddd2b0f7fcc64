#include "closure_kernels/closure.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "closure_kernels/arith.hpp"

namespace ck {

int vertex_closure(const Graph& g, int v) {
  if (!g.valid(v)) throw invalid_input("vertex " + std::to_string(v) + " out of range");
  int best = 0;
  for (int w = 0; w < g.n(); ++w) {
    if (w == v || g.adjacent(v, w)) continue;
    best = std::max(best, static_cast<int>(g.common_neighbors(v, w)));
  }
  return best;
}

int closure_number(const Graph& g) {
  int best = 0;
  for (int v = 0; v < g.n(); ++v) best = std::max(best, vertex_closure(g, v));
  return best + 1;
}

namespace {

// Common-neighbor counts restricted to a shrinking vertex set.
class PeelState {
 public:
  explicit PeelState(const Graph& g)
      : g_(g), n_(static_cast<std::size_t>(g.n())), cn_(n_ * n_, 0), alive_(n_, 1) {
    for (int x = 0; x < g.n(); ++x) {
      auto nb = g.neighbors(x);
      for (std::size_t i = 0; i < nb.size(); ++i)
        for (std::size_t j = i + 1; j < nb.size(); ++j) {
          ++cn_[idx(nb[i], nb[j])];
          ++cn_[idx(nb[j], nb[i])];
        }
    }
  }

  int closure(int v) const {
    int best = 0;
    for (int w = 0; w < g_.n(); ++w) {
      if (w == v || !alive_[static_cast<std::size_t>(w)] || g_.adjacent(v, w)) continue;
      best = std::max(best, cn_[idx(v, w)]);
    }
    return best;
  }

  void remove(int v) {
    alive_[static_cast<std::size_t>(v)] = 0;
    auto nb = g_.neighbors(v);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      if (!alive_[static_cast<std::size_t>(nb[i])]) continue;
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        if (!alive_[static_cast<std::size_t>(nb[j])]) continue;
        --cn_[idx(nb[i], nb[j])];
        --cn_[idx(nb[j], nb[i])];
      }
    }
  }

  bool alive(int v) const { return alive_[static_cast<std::size_t>(v)] != 0; }

 private:
  std::size_t idx(int a, int b) const {
    return static_cast<std::size_t>(a) * n_ + static_cast<std::size_t>(b);
  }

  const Graph& g_;
  std::size_t n_;
  std::vector<int> cn_;
  std::vector<char> alive_;
};

ClosureOrdering finish(std::vector<int> order, std::vector<int> steps) {
  ClosureOrdering out;
  out.position.assign(order.size(), -1);
  for (std::size_t i = 0; i < order.size(); ++i) out.position[static_cast<std::size_t>(order[i])] = static_cast<int>(i);
  int mx = 0;
  for (int s : steps) mx = std::max(mx, s);
  out.gamma = mx + 1;
  out.order = std::move(order);
  out.step_closure = std::move(steps);
  return out;
}

}  // namespace

ClosureOrdering weak_closure_ordering(const Graph& g) {
  PeelState st(g);
  std::vector<int> order, steps;
  order.reserve(static_cast<std::size_t>(g.n()));
  for (int round = 0; round < g.n(); ++round) {
    int pick = -1, pick_cl = 0;
    for (int v = 0; v < g.n(); ++v) {
      if (!st.alive(v)) continue;
      int c = st.closure(v);
      if (pick < 0 || c < pick_cl) {
        pick = v;
        pick_cl = c;
        if (c == 0) break;
      }
    }
    order.push_back(pick);
    steps.push_back(pick_cl);
    st.remove(pick);
  }
  return finish(std::move(order), std::move(steps));
}

ClosureOrdering make_ordering(const Graph& g, const std::vector<int>& order) {
  if (static_cast<int>(order.size()) != g.n() || normalized(order).size() != order.size())
    throw invalid_input("ordering is not a permutation of the vertex set");
  require_vertices(g, order);
  PeelState st(g);
  std::vector<int> steps;
  steps.reserve(order.size());
  for (int v : order) {
    steps.push_back(st.closure(v));
    st.remove(v);
  }
  return finish(order, std::move(steps));
}

PQSplit pq_split(const Graph& g, const ClosureOrdering& ord, int v) {
  if (!g.valid(v) || static_cast<std::size_t>(v) >= ord.position.size() ||
      ord.position[static_cast<std::size_t>(v)] < 0)
    throw invalid_input("vertex " + std::to_string(v) + " not covered by ordering");
  PQSplit s;
  s.v = v;
  int pv = ord.position[static_cast<std::size_t>(v)];
  for (int w : g.neighbors(v)) (ord.position[static_cast<std::size_t>(w)] < pv ? s.prior : s.posterior).push_back(w);
  return s;
}

Degeneracy degeneracy(const Graph& g) {
  std::vector<int> deg(static_cast<std::size_t>(g.n()));
  std::set<std::pair<int, int>> queue;
  for (int v = 0; v < g.n(); ++v) {
    deg[static_cast<std::size_t>(v)] = g.degree(v);
    queue.emplace(g.degree(v), v);
  }
  Degeneracy out;
  std::vector<char> gone(static_cast<std::size_t>(g.n()), 0);
  while (!queue.empty()) {
    auto [d, v] = *queue.begin();
    queue.erase(queue.begin());
    out.d = std::max(out.d, d);
    out.order.push_back(v);
    gone[static_cast<std::size_t>(v)] = 1;
    for (int w : g.neighbors(v)) {
      if (gone[static_cast<std::size_t>(w)]) continue;
      auto& dw = deg[static_cast<std::size_t>(w)];
      queue.erase({dw, w});
      --dw;
      queue.emplace(dw, w);
    }
  }
  return out;
}

std::optional<Observation1Violation> check_observation1(const Graph& g, const ClosureOrdering& ord) {
  std::vector<VertexSet> q(static_cast<std::size_t>(g.n()));
  for (int v = 0; v < g.n(); ++v) q[static_cast<std::size_t>(v)] = pq_split(g, ord, v).posterior;
  for (int u = 0; u < g.n(); ++u)
    for (int v = 0; v < g.n(); ++v) {
      if (u == v || g.adjacent(u, v)) continue;
      const auto& qu = q[static_cast<std::size_t>(u)];
      const auto& qv = q[static_cast<std::size_t>(v)];
      VertexSet a, b;
      std::set_intersection(qu.begin(), qu.end(), qv.begin(), qv.end(), std::back_inserter(a));
      auto nv = g.neighbors(v);
      std::set_intersection(qu.begin(), qu.end(), nv.begin(), nv.end(), std::back_inserter(b));
      int qq = static_cast<int>(a.size()), qn = static_cast<int>(b.size());
      if (qq > qn || qn > ord.gamma - 1) return Observation1Violation{u, v, qq, qn};
    }
  return std::nullopt;
}

ClassCounts neighborhood_classes(const Graph& g, const VertexSet& cover, const ClosureOrdering& ord) {
  require_vertices(g, cover);
  std::vector<char> in_cover(static_cast<std::size_t>(g.n()), 0);
  for (int v : cover) in_cover[static_cast<std::size_t>(v)] = 1;
  VertexSet indep;
  for (int v = 0; v < g.n(); ++v)
    if (!in_cover[static_cast<std::size_t>(v)]) indep.push_back(v);
  if (!is_independent_set(g, indep)) throw invalid_input("complement of cover is not independent");

  std::set<VertexSet> ps, qs;
  std::map<VertexSet, std::size_t> ns;
  for (int v : indep) {
    PQSplit s = pq_split(g, ord, v);
    ps.insert(s.prior);
    qs.insert(s.posterior);
    ++ns[VertexSet(g.neighbors(v).begin(), g.neighbors(v).end())];
  }
  ClassCounts c;
  c.independent_size = indep.size();
  c.p_classes = ps.size();
  c.q_classes = qs.size();
  c.n_classes = ns.size();
  for (const auto& [key, size] : ns) c.t = std::max(c.t, size);
  return c;
}

std::uint64_t moon_moser(int k) {
  if (k <= 0) return 1;
  return sat_pow(3, static_cast<std::uint64_t>((k + 2) / 3));
}

std::uint64_t lemma2_bound(int k, int gamma, std::uint64_t t, std::optional<std::uint64_t> maximal_cliques) {
  if (k < 0 || gamma < 0) throw invalid_input("lemma2_bound arguments must be non-negative");
  auto uk = static_cast<std::uint64_t>(k);
  std::uint64_t g = gamma < 1 ? 1 : static_cast<std::uint64_t>(gamma);
  std::uint64_t m = maximal_cliques ? std::max<std::uint64_t>(*maximal_cliques, 1) : moon_moser(k);
  std::uint64_t p_part = sat_add(sat_mul(g - 1, binomial(uk, 2)),
                                 sat_add(m, sat_mul(sat_mul(m, uk), binomial_prefix_sum(uk, g - 1))));
  std::uint64_t q_part = binomial_prefix_sum(uk, g);
  return sat_mul(t, sat_mul(p_part, q_part));
}

}  // namespace ck
