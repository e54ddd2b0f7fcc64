#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "closure_kernels/graph.hpp"

namespace cktest {

using ck::Edge;
using ck::Graph;

inline Graph complete(int n) {
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return Graph(n, e);
}

inline Graph cycle(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph(n, e);
}

inline Graph path(int n) {
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph(n, e);
}

// center 0, leaves 1..leaves
inline Graph star(int leaves) {
  std::vector<Edge> e;
  for (int i = 1; i <= leaves; ++i) e.emplace_back(0, i);
  return Graph(leaves + 1, e);
}

// sides 0..a-1 and a..a+b-1
inline Graph biclique(int a, int b) {
  std::vector<Edge> e;
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < b; ++v) e.emplace_back(u, a + v);
  return Graph(a + b, e);
}

inline Graph petersen() {
  std::vector<Edge> e;
  for (int i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);
    e.emplace_back(i, i + 5);
    e.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  return Graph(10, e);
}

inline std::vector<Edge> all_pairs(int n) {
  std::vector<Edge> p;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) p.emplace_back(u, v);
  return p;
}

// Graph whose edge set is the subset of all_pairs(n) selected by mask.
inline Graph from_mask(int n, std::uint64_t mask) {
  auto p = all_pairs(n);
  std::vector<Edge> e;
  for (std::size_t i = 0; i < p.size(); ++i)
    if (mask >> i & 1) e.push_back(p[i]);
  return Graph(n, e);
}

inline Graph random_graph(std::mt19937_64& rng, int n, double p) {
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (static_cast<double>(rng() >> 11) * 0x1.0p-53 < p) e.emplace_back(u, v);
  return Graph(n, e);
}

// Adjacency as bitmasks, for brute force over small graphs.
inline std::vector<std::uint32_t> bits(const Graph& g) {
  std::vector<std::uint32_t> a(static_cast<std::size_t>(g.n()), 0);
  for (auto [u, v] : g.edges()) {
    a[static_cast<std::size_t>(u)] |= 1u << v;
    a[static_cast<std::size_t>(v)] |= 1u << u;
  }
  return a;
}

// cl of v inside the vertex set `alive`, straight from the definition.
inline int naive_closure(const std::vector<std::uint32_t>& adj, std::uint32_t alive, int v) {
  int best = 0;
  for (int w = 0; w < static_cast<int>(adj.size()); ++w) {
    if (w == v || !(alive >> w & 1) || (adj[static_cast<std::size_t>(v)] >> w & 1)) continue;
    int c = __builtin_popcount(adj[static_cast<std::size_t>(v)] & adj[static_cast<std::size_t>(w)] & alive);
    best = std::max(best, c);
  }
  return best;
}

// Minimum over all n! orderings of 1 + max step closure.
inline int gamma_by_permutations(const Graph& g) {
  auto adj = bits(g);
  std::vector<int> perm(static_cast<std::size_t>(g.n()));
  std::iota(perm.begin(), perm.end(), 0);
  int best = 1 << 20;
  do {
    std::uint32_t alive = g.n() == 32 ? ~0u : (1u << g.n()) - 1;
    int worst = 0;
    for (int v : perm) {
      worst = std::max(worst, naive_closure(adj, alive, v));
      alive &= ~(1u << v);
      if (worst + 1 >= best) break;
    }
    best = std::min(best, worst + 1);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return g.n() == 0 ? 1 : best;
}

inline int uniform(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

// Random base graph on `base` vertices plus `extra` vertices, each a false
// twin of a random base vertex.
inline Graph with_twins(std::mt19937_64& rng, int base, int extra, double p) {
  auto g = random_graph(rng, base, p);
  auto e = g.edges();
  for (int i = 0; i < extra; ++i) {
    int src = uniform(rng, 0, base - 1);
    for (int u : g.neighbors(src)) e.emplace_back(u, base + i);
  }
  return Graph(base + extra, e);
}

// Clique on 0..c-1, independent set c..c+i-1, cross edges with probability p.
inline Graph random_split(std::mt19937_64& rng, int c, int i, double p) {
  auto e = complete(c).edges();
  for (int u = c; u < c + i; ++u)
    for (int v = 0; v < c; ++v)
      if (static_cast<double>(rng() >> 11) * 0x1.0p-53 < p) e.emplace_back(v, u);
  return Graph(c + i, e);
}

}  // namespace cktest
