#include "closure_kernels/ramsey.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "closure_kernels/arith.hpp"
#include "closure_kernels/closure.hpp"
#include "closure_kernels/oracles.hpp"

namespace ck {

namespace {

using u64 = std::uint64_t;

u64 C(int n, int r) { return n < 0 || r < 0 ? 0 : binomial(static_cast<u64>(n), static_cast<u64>(r)); }

bool valid(const Graph& g, const RamseyWitness& w, int a, int b) {
  if (w.kind == RamseyWitness::Kind::Clique)
    return static_cast<int>(w.vertices.size()) == a && is_clique(g, w.vertices);
  return static_cast<int>(w.vertices.size()) == b && is_independent_set(g, w.vertices);
}

RamseyWitness clique(VertexSet s, int a) {
  s.resize(static_cast<std::size_t>(a));
  return {RamseyWitness::Kind::Clique, normalized(s)};
}

RamseyWitness independent(VertexSet s, int b) {
  s.resize(static_cast<std::size_t>(b));
  return {RamseyWitness::Kind::IndependentSet, normalized(s)};
}

// Exhaustive search for a clique of size `size` inside `pool`.
std::optional<VertexSet> clique_in(const Graph& g, const VertexSet& pool, int size) {
  if (size <= 0) return VertexSet{};
  auto sub = induced_subgraph(g, pool);
  VertexSet cur;
  std::function<bool(int)> go = [&](int from) {
    if (static_cast<int>(cur.size()) == size) return true;
    for (int v = from; v < sub.graph.n(); ++v) {
      if (!std::all_of(cur.begin(), cur.end(), [&](int u) { return sub.graph.adjacent(u, v); })) continue;
      cur.push_back(v);
      if (go(v + 1)) return true;
      cur.pop_back();
    }
    return false;
  };
  if (!go(0)) return std::nullopt;
  VertexSet out;
  for (int v : cur) out.push_back(sub.to_parent[static_cast<std::size_t>(v)]);
  return out;
}

std::optional<VertexSet> independent_in(const Graph& g, const VertexSet& pool, int size) {
  if (size <= 0) return VertexSet{};
  auto sub = induced_subgraph(g, pool);
  VertexSet cur;
  std::function<bool(int)> go = [&](int from) {
    if (static_cast<int>(cur.size()) == size) return true;
    for (int v = from; v < sub.graph.n(); ++v) {
      if (std::any_of(cur.begin(), cur.end(), [&](int u) { return sub.graph.adjacent(u, v); })) continue;
      cur.push_back(v);
      if (go(v + 1)) return true;
      cur.pop_back();
    }
    return false;
  };
  if (!go(0)) return std::nullopt;
  VertexSet out;
  for (int v : cur) out.push_back(sub.to_parent[static_cast<std::size_t>(v)]);
  return out;
}

void subsets(const VertexSet& s, int r, std::size_t from, VertexSet& cur, const std::function<bool(const VertexSet&)>& f,
             bool& stop) {
  if (stop) return;
  if (static_cast<int>(cur.size()) == r) {
    stop = f(cur);
    return;
  }
  for (std::size_t i = from; i < s.size() && !stop; ++i) {
    cur.push_back(s[i]);
    subsets(s, r, i + 1, cur, f, stop);
    cur.pop_back();
  }
}

std::optional<RamseyWitness> classical(const Graph& g, VertexSet pool, int a, int b) {
  if (pool.empty()) return std::nullopt;
  if (a == 1) return RamseyWitness{RamseyWitness::Kind::Clique, {pool.front()}};
  if (b == 1) return RamseyWitness{RamseyWitness::Kind::IndependentSet, {pool.front()}};
  int v = pool.front();
  VertexSet in, out;
  for (std::size_t i = 1; i < pool.size(); ++i) (g.adjacent(v, pool[i]) ? in : out).push_back(pool[i]);
  if (auto w = classical(g, in, a - 1, b)) {
    if (w->kind == RamseyWitness::Kind::Clique) w->vertices.push_back(v);
    return w;
  }
  if (auto w = classical(g, out, a, b - 1)) {
    if (w->kind == RamseyWitness::Kind::IndependentSet) w->vertices.push_back(v);
    return w;
  }
  return std::nullopt;
}

}  // namespace

u64 classical_ramsey_bound(int a, int b) {
  if (a < 1 || b < 1) throw invalid_input("Ramsey sizes must be positive");
  if (a == 1 || b == 1) return 1;
  return C(a + b - 2, a - 1);
}

u64 r_gamma_bound(int a, int b, int gamma) {
  if (gamma < 1) throw invalid_input("gamma must be positive");
  u64 base = classical_ramsey_bound(a, b);
  if (a == 1 || b == 1 || a <= gamma || b <= gamma) return base;
  u64 sum = 0;
  for (int bp = 1; bp <= b; ++bp) sum = sat_add(sum, C(bp - 1, gamma));
  u64 stated = sat_add(sat_add(sat_mul(static_cast<u64>(a), C(b, gamma)),
                               sat_mul(sat_mul(static_cast<u64>(b), C(a, gamma)), sum)),
                       1);
  u64 low = 0;
  for (int j = 1; j < gamma; ++j) low = sat_add(low, C(b - 1, j));
  u64 block = sat_add(sat_add(sat_mul(static_cast<u64>(a - 1), C(b - 1, gamma)), sat_mul(C(a + gamma, gamma) - 1, low)), 1);
  u64 counted = sat_mul(static_cast<u64>(b), block);
  return std::min(base, std::max(stated, counted));
}

std::optional<RamseyWitness> ramsey_blocks(const Graph& g, int a, int b) {
  if (a < 1 || b < 1) throw invalid_input("Ramsey sizes must be positive");
  int n = g.n();
  if (n == 0 || n < b) return std::nullopt;
  auto ord = weak_closure_ordering(g);
  int gamma = ord.gamma;
  // V_i are the blocks counted from the end of the ordering; V_b takes the remainder.
  int size = n / b;
  auto block = [&](int i) {
    int hi = n - (i - 1) * size;
    int lo = n - i * size;
    if (i == b) lo = 0;
    return VertexSet(ord.order.begin() + lo, ord.order.begin() + hi);
  };
  VertexSet indep{block(1).front()};
  for (int i = 2; i <= b; ++i) {
    auto vi = block(i);
    std::optional<VertexSet> next;
    for (int v : vi) {
      if (std::none_of(indep.begin(), indep.end(), [&](int u) { return g.adjacent(u, v); })) {
        next = indep;
        next->push_back(v);
        break;
      }
    }
    std::optional<RamseyWitness> found;
    if (!next) {
      VertexSet cur;
      bool stop = false;
      subsets(indep, std::min<int>(gamma, static_cast<int>(indep.size())), 0, cur,
              [&](const VertexSet& x) {
                if (static_cast<int>(x.size()) < gamma) return false;
                VertexSet vx;
                for (int v : vi)
                  if (std::all_of(x.begin(), x.end(), [&](int u) { return g.adjacent(u, v); })) vx.push_back(v);
                if (auto c = clique_in(g, vx, a)) found = clique(*c, a);
                return found.has_value();
              },
              stop);
    }
    if (!next && !found) {
      for (int r = 1; r < gamma && !next && !found; ++r) {
        VertexSet cur;
        bool stop = false;
        subsets(indep, r, 0, cur,
                [&](const VertexSet& x) {
                  VertexSet vx;
                  for (int v : vi) {
                    VertexSet hit;
                    for (int u : indep)
                      if (g.adjacent(u, v)) hit.push_back(u);
                    if (normalized(hit) == normalized(x)) vx.push_back(v);
                  }
                  if (auto s = independent_in(g, vx, r + 1)) {
                    VertexSet grown;
                    for (int u : indep)
                      if (std::find(x.begin(), x.end(), u) == x.end()) grown.push_back(u);
                    grown.insert(grown.end(), s->begin(), s->end());
                    next = grown;
                  } else if (auto c = clique_in(g, vx, a)) {
                    found = clique(*c, a);
                  }
                  return next.has_value() || found.has_value();
                },
                stop);
      }
    }
    if (found) return found;
    if (!next) return std::nullopt;
    indep = *next;
  }
  return independent(indep, b);
}

std::optional<RamseyWitness> clique_or_independent_set(const Graph& g, int a, int b) {
  if (a < 1 || b < 1) throw invalid_input("Ramsey sizes must be positive");
  std::optional<RamseyWitness> w = ramsey_blocks(g, a, b);
  if (!w || !valid(g, *w, a, b)) {
    VertexSet all;
    for (int v = 0; v < g.n(); ++v) all.push_back(v);
    w = classical(g, all, a, b);
    if (w) w->vertices = normalized(w->vertices);
  }
  if ((!w || !valid(g, *w, a, b)) && g.n() <= 20) {
    w.reset();
    if (auto c = find_clique_exact(g, a))
      w = RamseyWitness{RamseyWitness::Kind::Clique, *c};
    else if (auto s = find_independent_set_exact(g, b))
      w = RamseyWitness{RamseyWitness::Kind::IndependentSet, *s};
  }
  if (w && !valid(g, *w, a, b)) throw std::logic_error("Ramsey witness failed validation");
  return w;
}

bool g_subgraph_decided(const Graph& g, int k) {
  if (k < 1) return true;
  return static_cast<std::uint64_t>(g.n()) >= r_gamma_bound(k, k, weak_closure_ordering(g).gamma);
}

}  // namespace ck
