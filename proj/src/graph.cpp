#include "closure_kernels/graph.hpp"

#include <algorithm>
#include <map>
#include <functional>
#include <queue>

namespace ck {

VertexSet normalized(VertexSet s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

Graph::Graph(int n) {
  if (n < 0) throw invalid_input("negative vertex count");
  adj_.resize(static_cast<std::size_t>(n));
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
  for (auto [u, v] : edges) {
    if (!valid(u) || !valid(v))
      throw invalid_input("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                          ") out of range for n = " + std::to_string(n));
    if (u == v) throw invalid_input("self-loop at vertex " + std::to_string(u));
    adj_[static_cast<std::size_t>(u)].push_back(v);
    adj_[static_cast<std::size_t>(v)].push_back(u);
  }
  std::size_t total = 0;
  for (auto& nb : adj_) {
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    total += nb.size();
  }
  m_ = total / 2;
}

bool Graph::adjacent(int u, int v) const {
  const auto& a = adj_[static_cast<std::size_t>(u)];
  const auto& b = adj_[static_cast<std::size_t>(v)];
  if (a.size() <= b.size()) return std::binary_search(a.begin(), a.end(), v);
  return std::binary_search(b.begin(), b.end(), u);
}

std::size_t Graph::common_neighbors(int u, int v) const {
  const auto& a = adj_[static_cast<std::size_t>(u)];
  const auto& b = adj_[static_cast<std::size_t>(v)];
  std::size_t count = 0;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++count;
      ++i;
      ++j;
    }
  }
  return count;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (int u = 0; u < n(); ++u)
    for (int v : neighbors(u))
      if (u < v) out.emplace_back(u, v);
  return out;
}

int Graph::max_degree() const {
  int d = 0;
  for (int v = 0; v < n(); ++v) d = std::max(d, degree(v));
  return d;
}

int Graph::min_degree() const {
  if (n() == 0) return 0;
  int d = degree(0);
  for (int v = 1; v < n(); ++v) d = std::min(d, degree(v));
  return d;
}

void require_vertices(const Graph& g, std::span<const int> s) {
  for (int v : s)
    if (!g.valid(v))
      throw invalid_input("vertex " + std::to_string(v) + " out of range for n = " +
                          std::to_string(g.n()));
}

Subgraph induced_subgraph(const Graph& g, const VertexSet& keep) {
  require_vertices(g, keep);
  VertexSet ks = normalized(keep);
  std::vector<int> index(static_cast<std::size_t>(g.n()), -1);
  for (std::size_t i = 0; i < ks.size(); ++i) index[static_cast<std::size_t>(ks[i])] = static_cast<int>(i);
  std::vector<Edge> edges;
  for (int u : ks)
    for (int v : g.neighbors(u))
      if (u < v && index[static_cast<std::size_t>(v)] >= 0)
        edges.emplace_back(index[static_cast<std::size_t>(u)], index[static_cast<std::size_t>(v)]);
  return {Graph(static_cast<int>(ks.size()), edges), ks};
}

Subgraph remove_vertices(const Graph& g, const VertexSet& remove) {
  require_vertices(g, remove);
  std::vector<char> drop(static_cast<std::size_t>(g.n()), 0);
  for (int v : remove) drop[static_cast<std::size_t>(v)] = 1;
  VertexSet keep;
  for (int v = 0; v < g.n(); ++v)
    if (!drop[static_cast<std::size_t>(v)]) keep.push_back(v);
  return induced_subgraph(g, keep);
}

bool is_independent_set(const Graph& g, const VertexSet& s) {
  require_vertices(g, s);
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (g.adjacent(s[i], s[j])) return false;
  return true;
}

bool is_clique(const Graph& g, const VertexSet& s) {
  require_vertices(g, s);
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (s[i] == s[j] || !g.adjacent(s[i], s[j])) return false;
  return true;
}

std::vector<VertexSet> connected_components(const Graph& g) {
  std::vector<int> comp(static_cast<std::size_t>(g.n()), -1);
  std::vector<VertexSet> out;
  for (int s = 0; s < g.n(); ++s) {
    if (comp[static_cast<std::size_t>(s)] >= 0) continue;
    VertexSet c{s};
    comp[static_cast<std::size_t>(s)] = static_cast<int>(out.size());
    for (std::size_t head = 0; head < c.size(); ++head)
      for (int w : g.neighbors(c[head]))
        if (comp[static_cast<std::size_t>(w)] < 0) {
          comp[static_cast<std::size_t>(w)] = static_cast<int>(out.size());
          c.push_back(w);
        }
    std::sort(c.begin(), c.end());
    out.push_back(std::move(c));
  }
  return out;
}

bool induces_connected(const Graph& g, const VertexSet& s) {
  require_vertices(g, s);
  if (s.size() <= 1) return true;
  std::vector<char> in(static_cast<std::size_t>(g.n()), 0), seen(static_cast<std::size_t>(g.n()), 0);
  for (int v : s) in[static_cast<std::size_t>(v)] = 1;
  std::vector<int> stack{s.front()};
  seen[static_cast<std::size_t>(s.front())] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int w : g.neighbors(u))
      if (in[static_cast<std::size_t>(w)] && !seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        ++reached;
        stack.push_back(w);
      }
  }
  return reached == normalized(s).size();
}

std::optional<std::pair<VertexSet, VertexSet>> bipartition(const Graph& g) {
  std::vector<int> color(static_cast<std::size_t>(g.n()), -1);
  for (int s = 0; s < g.n(); ++s) {
    if (color[static_cast<std::size_t>(s)] >= 0) continue;
    color[static_cast<std::size_t>(s)] = 0;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int w : g.neighbors(u)) {
        auto& cw = color[static_cast<std::size_t>(w)];
        if (cw < 0) {
          cw = 1 - color[static_cast<std::size_t>(u)];
          q.push(w);
        } else if (cw == color[static_cast<std::size_t>(u)]) {
          return std::nullopt;
        }
      }
    }
  }
  std::pair<VertexSet, VertexSet> parts;
  for (int v = 0; v < g.n(); ++v) (color[static_cast<std::size_t>(v)] ? parts.second : parts.first).push_back(v);
  return parts;
}

namespace {

VertexSet intersect(const VertexSet& a, std::span<const int> b) {
  VertexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

std::optional<Biclique> contains_biclique(const Graph& g, int r, int s) {
  if (r < 1 || s < 1) throw invalid_input("biclique sides must be positive");
  if (r + s > g.n()) return std::nullopt;

  // Choose U in increasing id order; `common` is the joint neighborhood of
  // the chosen prefix. Vertices of U never lie in it (no self-loops).
  VertexSet chosen;
  std::optional<Biclique> found;
  std::function<void(int, const VertexSet&)> extend = [&](int next, const VertexSet& common) {
    if (found) return;
    if (static_cast<int>(chosen.size()) == r) {
      found = Biclique{chosen, VertexSet(common.begin(), common.begin() + s)};
      return;
    }
    for (int v = next; v < g.n() && !found; ++v) {
      if (g.degree(v) < s) continue;
      if (g.n() - v < r - static_cast<int>(chosen.size())) break;
      VertexSet narrowed = chosen.empty() ? VertexSet(g.neighbors(v).begin(), g.neighbors(v).end())
                                          : intersect(common, g.neighbors(v));
      if (static_cast<int>(narrowed.size()) < s) continue;
      chosen.push_back(v);
      extend(v + 1, narrowed);
      chosen.pop_back();
    }
  };
  extend(0, {});
  return found;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<Edge> edges = a.edges();
  for (auto [u, v] : b.edges()) edges.emplace_back(u + a.n(), v + a.n());
  return Graph(a.n() + b.n(), edges);
}

std::vector<VertexSet> false_twin_classes(const Graph& g) {
  std::map<std::vector<int>, VertexSet> by_nbhd;
  for (int v = 0; v < g.n(); ++v) {
    auto nb = g.neighbors(v);
    by_nbhd[std::vector<int>(nb.begin(), nb.end())].push_back(v);
  }
  std::vector<VertexSet> out;
  for (auto& [nb, cls] : by_nbhd) out.push_back(std::move(cls));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace ck
