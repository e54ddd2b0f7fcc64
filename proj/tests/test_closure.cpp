#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <random>
#include <set>

#include "closure_kernels/arith.hpp"
#include "closure_kernels/closure.hpp"
#include "closure_kernels/combinatorics.hpp"
#include "support.hpp"

using namespace ck;
using namespace cktest;

TEST_CASE("vertex closure") {
  for (int v = 0; v < 5; ++v) CHECK(vertex_closure(complete(5), v) == 0);
  for (int v = 0; v < 4; ++v) CHECK(vertex_closure(cycle(4), v) == 2);
  CHECK(vertex_closure(star(4), 1) == 1);
  CHECK(vertex_closure(star(4), 0) == 0);
  CHECK_THROWS_AS(vertex_closure(cycle(4), 4), invalid_input);
}

TEST_CASE("closure number") {
  for (int n = 1; n <= 6; ++n) CHECK(closure_number(complete(n)) == 1);
  for (int n = 2; n <= 7; ++n) CHECK(closure_number(biclique(2, n)) == n + 1);
  CHECK(closure_number(cycle(4)) == 3);
  CHECK(closure_number(Graph()) == 1);
}

TEST_CASE("weak closure of named graphs") {
  for (int n = 1; n <= 6; ++n) CHECK(weak_closure_ordering(complete(n)).gamma == 1);
  CHECK(weak_closure_ordering(cycle(4)).gamma == 3);
  // The center is universal, so it peels first with closure 0.
  for (int n = 2; n <= 7; ++n) CHECK(weak_closure_ordering(star(n)).gamma == 1);
  for (int n = 2; n <= 5; ++n) CHECK(gamma_by_permutations(star(n)) == 1);
  CHECK(weak_closure_ordering(biclique(2, 5)).gamma == 3);
  CHECK(weak_closure_ordering(Graph()).gamma == 1);
}

TEST_CASE("C4 needs gamma 3 under every ordering") {
  auto c4 = cycle(4);
  std::vector<int> perm{0, 1, 2, 3};
  int best = 100;
  do {
    auto o = make_ordering(c4, perm);
    CHECK(o.gamma >= 3);
    best = std::min(best, o.gamma);
  } while (std::next_permutation(perm.begin(), perm.end()));
  CHECK(best == 3);
}

TEST_CASE("greedy ordering is deterministic with smallest-id ties") {
  auto o = weak_closure_ordering(star(3));
  CHECK(o.order == std::vector<int>{0, 1, 2, 3});
  CHECK(o.step_closure == std::vector<int>{0, 0, 0, 0});
  o = weak_closure_ordering(path(4));
  CHECK(o.order == std::vector<int>{0, 2, 1, 3});
  CHECK(o.step_closure == std::vector<int>{1, 0, 0, 0});
  CHECK(o.gamma == 2);
}

TEST_CASE("pq split") {
  auto p3 = path(3);
  auto o = make_ordering(p3, {0, 1, 2});
  CHECK(pq_split(p3, o, 0).prior.empty());
  CHECK(pq_split(p3, o, 0).posterior == VertexSet{1});
  CHECK(pq_split(p3, o, 1).prior == VertexSet{0});
  CHECK(pq_split(p3, o, 1).posterior == VertexSet{2});
  CHECK(pq_split(p3, o, 2).posterior.empty());
  CHECK_THROWS_AS(pq_split(p3, o, 3), invalid_input);
}

TEST_CASE("degeneracy") {
  for (int n = 1; n <= 6; ++n) CHECK(degeneracy(complete(n)).d == n - 1);
  CHECK(degeneracy(path(6)).d == 1);
  CHECK(degeneracy(star(5)).d == 1);
  CHECK(degeneracy(cycle(4)).d == 2);
  CHECK(degeneracy(petersen()).d == 3);
}

TEST_CASE("make_ordering rejects non-permutations") {
  CHECK_THROWS_AS(make_ordering(path(3), {0, 1}), invalid_input);
  CHECK_THROWS_AS(make_ordering(path(3), {0, 1, 1}), invalid_input);
  CHECK_THROWS_AS(make_ordering(path(3), {0, 1, 3}), invalid_input);
}

TEST_CASE("exhaustive: greedy gamma is optimal and consistent up to 6 vertices") {
  for (int n = 1; n <= 6; ++n) {
    std::uint64_t pairs = static_cast<std::uint64_t>(n * (n - 1) / 2);
    for (std::uint64_t mask = 0; mask < (1ull << pairs); ++mask) {
      Graph g = from_mask(n, mask);
      auto o = weak_closure_ordering(g);
      auto re = make_ordering(g, o.order);
      CHECK(re.step_closure == o.step_closure);
      CHECK(re.gamma == o.gamma);
      CHECK(o.gamma <= closure_number(g));
      CHECK(o.gamma <= degeneracy(g).d + 1);
      CHECK_FALSE(check_observation1(g, o).has_value());
      if (n <= 5 || mask % 7 == 0) CHECK(o.gamma == gamma_by_permutations(g));
    }
  }
}

TEST_CASE("step closures match the definition on random graphs") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 300; ++trial) {
    Graph g = random_graph(rng, 2 + trial % 14, 0.35);
    auto o = weak_closure_ordering(g);
    auto adj = bits(g);
    std::uint32_t alive = (1u << g.n()) - 1;
    for (std::size_t i = 0; i < o.order.size(); ++i) {
      CHECK(o.step_closure[i] == naive_closure(adj, alive, o.order[i]));
      alive &= ~(1u << o.order[i]);
    }
  }
}

TEST_CASE("neighborhood classes") {
  auto c = neighborhood_classes(star(5), {0}, weak_closure_ordering(star(5)));
  CHECK(c.n_classes == 1);
  CHECK(c.t == 5);

  auto k23 = biclique(2, 3);
  c = neighborhood_classes(k23, {0, 1}, weak_closure_ordering(k23));
  CHECK(c.n_classes == 1);
  CHECK(c.t == 3);

  auto c6 = cycle(6);
  c = neighborhood_classes(c6, {0, 2, 4}, weak_closure_ordering(c6));
  CHECK(c.n_classes == 3);
  CHECK(c.t == 1);

  CHECK_THROWS_AS(neighborhood_classes(c6, {0, 2}, weak_closure_ordering(c6)), invalid_input);
}

TEST_CASE("class counts: N classes at most P classes times Q classes") {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 300; ++trial) {
    Graph g = random_graph(rng, 4 + trial % 9, 0.3);
    auto o = weak_closure_ordering(g);
    VertexSet cover;
    for (auto [u, v] : g.edges())
      if (std::find(cover.begin(), cover.end(), u) == cover.end() &&
          std::find(cover.begin(), cover.end(), v) == cover.end())
        cover.push_back(u), cover.push_back(v);
    auto c = neighborhood_classes(g, normalized(cover), o);
    CHECK(c.n_classes <= c.p_classes * c.q_classes);
  }
}

TEST_CASE("lemma2 bound values") {
  CHECK(lemma2_bound(0, 1, 1) == 1);
  CHECK(lemma2_bound(0, 3, 7) == 7);
  // k = 1, gamma = 1, t = 1, M = 1: P part 0 + 1 + 1·1·1 = 2, Q part 1 + 1 = 2.
  CHECK(lemma2_bound(1, 1, 1, 1) == 4);
  // Moon–Moser gives M = 3 for k = 1: P part 3 + 3 = 6.
  CHECK(lemma2_bound(1, 1, 1) == 12);
  CHECK(moon_moser(0) == 1);
  CHECK(moon_moser(3) == 3);
  CHECK(moon_moser(4) == 9);
  CHECK(lemma2_bound(60, 30, 1000) == kSaturated);
}

namespace {

// Checks |I| ≤ lemma2_bound for every vertex cover S of g.
void check_all_covers(const Graph& g) {
  auto o = weak_closure_ordering(g);
  int n = g.n();
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    VertexSet cover, rest;
    for (int v = 0; v < n; ++v) (s >> v & 1 ? cover : rest).push_back(v);
    if (!is_independent_set(g, rest)) continue;
    auto c = neighborhood_classes(g, cover, o);
    auto m = maximal_cliques(induced_subgraph(g, cover).graph).size();
    int k = static_cast<int>(cover.size());
    CHECK(c.independent_size <= lemma2_bound(k, o.gamma, c.t, m));
    CHECK(c.independent_size <= lemma2_bound(k, o.gamma, c.t));
  }
}

}  // namespace

TEST_CASE("lemma2 bound holds for every cover of every graph up to 5 vertices") {
  for (int n = 1; n <= 5; ++n) {
    std::uint64_t pairs = static_cast<std::uint64_t>(n * (n - 1) / 2);
    for (std::uint64_t mask = 0; mask < (1ull << pairs); ++mask) check_all_covers(from_mask(n, mask));
  }
}

TEST_CASE("lemma2 bound with one cover vertex") {
  for (int n = 1; n <= 6; ++n) {
    for (int deg = 0; deg < n; ++deg) {
      std::vector<Edge> e;
      for (int i = 1; i <= deg; ++i) e.emplace_back(0, i);
      Graph g(n, e);
      auto o = weak_closure_ordering(g);
      auto c = neighborhood_classes(g, {0}, o);
      CHECK(c.independent_size <= lemma2_bound(1, o.gamma, c.t, 1));
    }
  }
}

TEST_CASE("lemma2 bound on random sparse graphs with small covers") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 6 + static_cast<int>(rng() % 7);
    int k = 1 + static_cast<int>(rng() % 3);
    std::vector<Edge> e;
    for (int u = 0; u < k; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng() % 3 == 0) e.emplace_back(u, v);
    Graph g(n, e);
    auto o = weak_closure_ordering(g);
    VertexSet cover;
    for (int v = 0; v < k; ++v) cover.push_back(v);
    auto c = neighborhood_classes(g, cover, o);
    auto m = maximal_cliques(induced_subgraph(g, cover).graph).size();
    CHECK(c.independent_size <= lemma2_bound(k, o.gamma, c.t, m));
  }
}
