#include "closure_kernels/combinatorics.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <queue>

namespace ck {

namespace {

class Blossom {
 public:
  explicit Blossom(const Graph& g)
      : g_(g), n_(g.n()), match_(static_cast<std::size_t>(n_), -1), p_(match_), base_(match_),
        used_(static_cast<std::size_t>(n_)), blossom_(static_cast<std::size_t>(n_)) {}

  std::vector<int> run() {
    for (int v = 0; v < n_; ++v) {
      if (match_[at(v)] != -1) continue;
      for (int w : g_.neighbors(v))
        if (match_[at(w)] == -1) {
          match_[at(v)] = w;
          match_[at(w)] = v;
          break;
        }
    }
    for (int v = 0; v < n_; ++v) {
      if (match_[at(v)] != -1) continue;
      int u = find_path(v);
      while (u != -1) {
        int pv = p_[at(u)];
        int ppv = match_[at(pv)];
        match_[at(u)] = pv;
        match_[at(pv)] = u;
        u = ppv;
      }
    }
    return match_;
  }

 private:
  static std::size_t at(int v) { return static_cast<std::size_t>(v); }

  int lca(int a, int b) {
    std::vector<char> seen(at(n_), 0);
    for (;;) {
      a = base_[at(a)];
      seen[at(a)] = 1;
      if (match_[at(a)] == -1) break;
      a = p_[at(match_[at(a)])];
    }
    for (;;) {
      b = base_[at(b)];
      if (seen[at(b)]) return b;
      b = p_[at(match_[at(b)])];
    }
  }

  void mark_path(int v, int b, int child) {
    while (base_[at(v)] != b) {
      blossom_[at(base_[at(v)])] = 1;
      blossom_[at(base_[at(match_[at(v)])])] = 1;
      p_[at(v)] = child;
      child = match_[at(v)];
      v = p_[at(match_[at(v)])];
    }
  }

  int find_path(int root) {
    std::fill(used_.begin(), used_.end(), 0);
    std::fill(p_.begin(), p_.end(), -1);
    for (int i = 0; i < n_; ++i) base_[at(i)] = i;
    used_[at(root)] = 1;
    std::queue<int> q;
    q.push(root);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int to : g_.neighbors(v)) {
        if (base_[at(v)] == base_[at(to)] || match_[at(v)] == to) continue;
        if (to == root || (match_[at(to)] != -1 && p_[at(match_[at(to)])] != -1)) {
          int cur = lca(v, to);
          std::fill(blossom_.begin(), blossom_.end(), 0);
          mark_path(v, cur, to);
          mark_path(to, cur, v);
          for (int i = 0; i < n_; ++i) {
            if (!blossom_[at(base_[at(i)])]) continue;
            base_[at(i)] = cur;
            if (!used_[at(i)]) {
              used_[at(i)] = 1;
              q.push(i);
            }
          }
        } else if (p_[at(to)] == -1) {
          p_[at(to)] = v;
          if (match_[at(to)] == -1) return to;
          used_[at(match_[at(to)])] = 1;
          q.push(match_[at(to)]);
        }
      }
    }
    return -1;
  }

  const Graph& g_;
  int n_;
  std::vector<int> match_, p_, base_;
  std::vector<char> used_, blossom_;
};

}  // namespace

Matching maximum_matching(const Graph& g) {
  Matching m;
  m.mate = Blossom(g).run();
  for (int v = 0; v < g.n(); ++v) {
    int w = m.mate[static_cast<std::size_t>(v)];
    if (w > v) m.edges.emplace_back(v, w);
  }
  return m;
}

bool is_matching(const Graph& g, const std::vector<Edge>& edges) {
  std::vector<char> used(static_cast<std::size_t>(g.n()), 0);
  for (auto [u, v] : edges) {
    if (!g.valid(u) || !g.valid(v) || u == v || !g.adjacent(u, v)) return false;
    if (used[static_cast<std::size_t>(u)] || used[static_cast<std::size_t>(v)]) return false;
    used[static_cast<std::size_t>(u)] = used[static_cast<std::size_t>(v)] = 1;
  }
  return true;
}

HalfIntegralSolution vclp_half_integral(const Graph& g) {
  const int n = g.n();
  auto at = [](int v) { return static_cast<std::size_t>(v); };
  // Left copy v is adjacent to right copy w whenever vw is an edge.
  std::vector<int> match_left(at(n), -1), match_right(at(n), -1);
  std::vector<char> visited;
  std::function<bool(int)> augment = [&](int v) {
    for (int w : g.neighbors(v)) {
      if (visited[at(w)]) continue;
      visited[at(w)] = 1;
      if (match_right[at(w)] == -1 || augment(match_right[at(w)])) {
        match_left[at(v)] = w;
        match_right[at(w)] = v;
        return true;
      }
    }
    return false;
  };
  for (int v = 0; v < n; ++v) {
    visited.assign(at(n), 0);
    augment(v);
  }

  std::vector<char> zl(at(n), 0), zr(at(n), 0);
  std::queue<int> q;
  for (int v = 0; v < n; ++v)
    if (match_left[at(v)] == -1) {
      zl[at(v)] = 1;
      q.push(v);
    }
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int w : g.neighbors(v)) {
      if (zr[at(w)] || match_left[at(v)] == w) continue;
      zr[at(w)] = 1;
      int back = match_right[at(w)];
      if (back != -1 && !zl[at(back)]) {
        zl[at(back)] = 1;
        q.push(back);
      }
    }
  }

  HalfIntegralSolution s;
  s.doubled.assign(at(n), 0);
  for (int v = 0; v < n; ++v) {
    int x = (zl[at(v)] ? 0 : 1) + (zr[at(v)] ? 1 : 0);
    s.doubled[at(v)] = x;
    s.doubled_objective += x;
    (x == 0 ? s.v0 : x == 1 ? s.v_half : s.v1).push_back(v);
  }
  return s;
}

namespace {

std::optional<Sunflower> sunflower_rec(const std::vector<VertexSet>& family, std::vector<std::size_t> idx,
                                       const VertexSet& removed, std::size_t k) {
  if (idx.size() < k || idx.empty()) return std::nullopt;
  auto rest = [&](std::size_t i) {
    VertexSet r;
    std::set_difference(family[i].begin(), family[i].end(), removed.begin(), removed.end(), std::back_inserter(r));
    return r;
  };
  std::vector<std::size_t> disjoint;
  VertexSet used;
  for (std::size_t i : idx) {
    VertexSet r = rest(i);
    VertexSet both;
    std::set_intersection(r.begin(), r.end(), used.begin(), used.end(), std::back_inserter(both));
    if (!both.empty()) continue;
    disjoint.push_back(i);
    VertexSet merged;
    std::set_union(r.begin(), r.end(), used.begin(), used.end(), std::back_inserter(merged));
    used = std::move(merged);
  }
  if (disjoint.size() >= k) return Sunflower{removed, disjoint};
  if (used.empty()) return std::nullopt;

  std::map<int, std::size_t> freq;
  for (std::size_t i : idx)
    for (int x : rest(i))
      if (std::binary_search(used.begin(), used.end(), x)) ++freq[x];
  int best = -1;
  std::size_t best_count = 0;
  for (auto [x, c] : freq)
    if (c > best_count) {
      best = x;
      best_count = c;
    }
  std::vector<std::size_t> through;
  for (std::size_t i : idx)
    if (std::binary_search(family[i].begin(), family[i].end(), best)) through.push_back(i);
  VertexSet core = removed;
  core.insert(std::lower_bound(core.begin(), core.end(), best), best);
  return sunflower_rec(family, std::move(through), core, k);
}

}  // namespace

std::optional<Sunflower> find_sunflower(const std::vector<VertexSet>& family, std::size_t k) {
  std::vector<VertexSet> fam;
  fam.reserve(family.size());
  for (const auto& s : family) fam.push_back(normalized(s));
  std::vector<std::size_t> idx(fam.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  if (k == 0) return Sunflower{{}, {}};
  return sunflower_rec(fam, std::move(idx), {}, k);
}

bool is_sunflower(const std::vector<VertexSet>& family, const Sunflower& s) {
  for (std::size_t i : s.members)
    if (i >= family.size()) return false;
  if (normalized(std::vector<int>(s.members.begin(), s.members.end())).size() != s.members.size()) return false;
  VertexSet core = normalized(s.core);
  for (std::size_t a = 0; a < s.members.size(); ++a) {
    VertexSet fa = normalized(family[s.members[a]]);
    if (!std::includes(fa.begin(), fa.end(), core.begin(), core.end())) return false;
    for (std::size_t b = a + 1; b < s.members.size(); ++b) {
      VertexSet fb = normalized(family[s.members[b]]), both;
      std::set_intersection(fa.begin(), fa.end(), fb.begin(), fb.end(), std::back_inserter(both));
      if (both != core) return false;
    }
  }
  return true;
}

std::vector<VertexSet> maximal_cliques(const Graph& g) {
  std::vector<VertexSet> out;
  VertexSet r;
  auto restrict_to = [&](const VertexSet& s, int v) {
    VertexSet o;
    auto nb = g.neighbors(v);
    std::set_intersection(s.begin(), s.end(), nb.begin(), nb.end(), std::back_inserter(o));
    return o;
  };
  std::function<void(VertexSet, VertexSet)> expand = [&](VertexSet p, VertexSet x) {
    if (p.empty()) {
      if (x.empty()) out.push_back(normalized(r));
      return;
    }
    int pivot = -1;
    std::size_t best = 0;
    for (const VertexSet* s : {&p, &x})
      for (int u : *s) {
        std::size_t c = restrict_to(p, u).size();
        if (pivot < 0 || c > best) {
          pivot = u;
          best = c;
        }
      }
    VertexSet candidates;
    auto pn = g.neighbors(pivot);
    std::set_difference(p.begin(), p.end(), pn.begin(), pn.end(), std::back_inserter(candidates));
    for (int v : candidates) {
      r.push_back(v);
      expand(restrict_to(p, v), restrict_to(x, v));
      r.pop_back();
      p.erase(std::lower_bound(p.begin(), p.end(), v));
      x.insert(std::lower_bound(x.begin(), x.end(), v), v);
    }
  };
  VertexSet all(static_cast<std::size_t>(g.n()));
  for (int v = 0; v < g.n(); ++v) all[static_cast<std::size_t>(v)] = v;
  expand(all, {});
  std::sort(out.begin(), out.end());
  return out;
}

VertexSet maximum_clique(const Graph& g) {
  VertexSet best;
  for (auto& c : maximal_cliques(g))
    if (c.size() > best.size()) best = std::move(c);
  return best;
}

FlowNetwork::FlowNetwork(int nodes) : g_(static_cast<std::size_t>(nodes)) {}

void FlowNetwork::add_arc(int from, int to, std::int64_t cap) {
  auto& a = g_[static_cast<std::size_t>(from)];
  auto& b = g_[static_cast<std::size_t>(to)];
  index_.emplace_back(from, a.size());
  original_.push_back(cap);
  a.push_back({to, cap, b.size() + (from == to ? 1 : 0)});
  b.push_back({from, 0, a.size() - 1});
}

bool FlowNetwork::bfs(int s, int t) {
  level_.assign(g_.size(), -1);
  level_[static_cast<std::size_t>(s)] = 0;
  std::queue<int> q;
  q.push(s);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (const Arc& a : g_[static_cast<std::size_t>(v)])
      if (a.cap > 0 && level_[static_cast<std::size_t>(a.to)] < 0) {
        level_[static_cast<std::size_t>(a.to)] = level_[static_cast<std::size_t>(v)] + 1;
        q.push(a.to);
      }
  }
  return level_[static_cast<std::size_t>(t)] >= 0;
}

std::int64_t FlowNetwork::dfs(int v, int t, std::int64_t pushed) {
  if (v == t) return pushed;
  auto sv = static_cast<std::size_t>(v);
  for (; it_[sv] < g_[sv].size(); ++it_[sv]) {
    Arc& a = g_[sv][it_[sv]];
    if (a.cap <= 0 || level_[static_cast<std::size_t>(a.to)] != level_[sv] + 1) continue;
    std::int64_t got = dfs(a.to, t, std::min(pushed, a.cap));
    if (got > 0) {
      a.cap -= got;
      g_[static_cast<std::size_t>(a.to)][a.rev].cap += got;
      return got;
    }
  }
  return 0;
}

std::int64_t FlowNetwork::max_flow(int s, int t) {
  std::int64_t total = 0;
  while (bfs(s, t)) {
    it_.assign(g_.size(), 0);
    while (std::int64_t f = dfs(s, t, std::numeric_limits<std::int64_t>::max())) total += f;
  }
  return total;
}

std::int64_t FlowNetwork::flow(std::size_t arc) const {
  auto [v, i] = index_[arc];
  return original_[arc] - g_[static_cast<std::size_t>(v)][i].cap;
}

}  // namespace ck
