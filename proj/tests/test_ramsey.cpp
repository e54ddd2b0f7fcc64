#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "closure_kernels/closure.hpp"
#include "closure_kernels/generators.hpp"
#include "closure_kernels/oracles.hpp"
#include "closure_kernels/ramsey.hpp"
#include "support.hpp"

using namespace ck;
using namespace cktest;

namespace {

std::uint64_t binom(int n, int r) {
  if (r < 0 || n < r) return 0;
  std::uint64_t v = 1;
  for (int i = 1; i <= r; ++i) v = v * static_cast<std::uint64_t>(n - r + i) / static_cast<std::uint64_t>(i);
  return v;
}

// Both counting thresholds of the block argument, straight from their sums.
std::uint64_t block_threshold(int a, int b, int g) {
  std::uint64_t stated = 1 + static_cast<std::uint64_t>(a) * binom(b, g);
  for (int bp = 1; bp <= b; ++bp) stated += static_cast<std::uint64_t>(b) * binom(a, g) * binom(bp - 1, g);
  std::uint64_t inner = static_cast<std::uint64_t>(a - 1) * binom(b - 1, g) + 1;
  for (int j = 1; j < g; ++j) inner += (binom(a + g, g) - 1) * binom(b - 1, j);
  return std::max(stated, static_cast<std::uint64_t>(b) * inner);
}

bool valid(const Graph& g, const RamseyWitness& w, int a, int b) {
  if (w.kind == RamseyWitness::Kind::Clique) return static_cast<int>(w.vertices.size()) == a && is_clique(g, w.vertices);
  return static_cast<int>(w.vertices.size()) == b && is_independent_set(g, w.vertices);
}

}  // namespace

TEST_CASE("classical bound") {
  CHECK(classical_ramsey_bound(1, 7) == 1);
  CHECK(classical_ramsey_bound(7, 1) == 1);
  for (int b = 1; b <= 9; ++b) CHECK(classical_ramsey_bound(2, b) == static_cast<std::uint64_t>(b));
  CHECK(classical_ramsey_bound(3, 3) == 6);
  CHECK(classical_ramsey_bound(4, 4) == 20);
  CHECK_THROWS_AS(classical_ramsey_bound(0, 3), invalid_input);
}

TEST_CASE("closure-aware bound: small cases") {
  for (int g = 1; g <= 4; ++g) {
    CHECK(r_gamma_bound(1, 5, g) == 1);
    CHECK(r_gamma_bound(5, 1, g) == 1);
    for (int b = 2; b <= 8; ++b) CHECK(r_gamma_bound(2, b, g) == static_cast<std::uint64_t>(b));
  }
  // two counting thresholds for a = b = 3, γ = 2 are 19 and 63; the classical 6 is smaller
  CHECK(block_threshold(3, 3, 2) == 63);
  CHECK(r_gamma_bound(3, 3, 2) == 6);
  CHECK(block_threshold(2, 2, 1) == 9);
  CHECK_THROWS_AS(r_gamma_bound(3, 3, 0), invalid_input);
}

TEST_CASE("closure-aware bound matches its definition and is monotone") {
  for (int g = 1; g <= 5; ++g)
    for (int a = 1; a <= 9; ++a)
      for (int b = 1; b <= 9; ++b) {
        auto v = r_gamma_bound(a, b, g);
        auto cl = classical_ramsey_bound(a, b);
        CHECK(v <= cl);
        if (a > g && b > g && a > 1 && b > 1) CHECK(v == std::min(cl, block_threshold(a, b, g)));
        else CHECK(v == cl);
        if (a < 9) CHECK(v <= r_gamma_bound(a + 1, b, g));
        if (b < 9) CHECK(v <= r_gamma_bound(a, b + 1, g));
        if (g < 5) CHECK(v <= r_gamma_bound(a, b, g + 1));
      }
}

TEST_CASE("named witnesses") {
  // K_4 plus five isolated vertices
  auto k4 = disjoint_union(complete(4), Graph(5));
  auto w = clique_or_independent_set(k4, 4, 7);
  REQUIRE(w);
  CHECK(w->kind == RamseyWitness::Kind::Clique);
  CHECK(w->vertices == VertexSet{0, 1, 2, 3});
  auto e = clique_or_independent_set(Graph(6), 3, 6);
  REQUIRE(e);
  CHECK(e->kind == RamseyWitness::Kind::IndependentSet);
  CHECK(e->vertices.size() == 6);
  CHECK_FALSE(clique_or_independent_set(cycle(5), 3, 3).has_value());
  CHECK_FALSE(clique_or_independent_set(Graph(0), 2, 2).has_value());
}

TEST_CASE("every graph on six vertices yields a 3-witness") {
  int weakly_one = 0;
  for (std::uint64_t mask = 0; mask < (1u << 15); ++mask) {
    auto g = from_mask(6, mask);
    int gamma = weak_closure_ordering(g).gamma;
    REQUIRE(static_cast<std::uint64_t>(g.n()) >= r_gamma_bound(3, 3, gamma));
    auto w = clique_or_independent_set(g, 3, 3);
    REQUIRE(w);
    CHECK(valid(g, *w, 3, 3));
    if (gamma == 1) ++weakly_one;
  }
  CHECK(weakly_one > 100);
}

TEST_CASE("guarantee on random weakly closed graphs") {
  std::mt19937_64 rng(2024);
  int checked = 0;
  for (int g = 1; g <= 2; ++g)
    for (int a = 1; a <= 4; ++a)
      for (int b = 1; b <= 4; ++b) {
        auto bound = r_gamma_bound(a, b, g);
        for (int n = static_cast<int>(bound); n <= 20; ++n)
          for (int trial = 0; trial < 6; ++trial) {
            auto gen = gen_random_weakly_closed(n, g, rng(), 0.15 * uniform(rng, 1, 6));
            auto w = clique_or_independent_set(gen.graph, a, b);
            REQUIRE(w);
            CHECK(valid(gen.graph, *w, a, b));
            ++checked;
          }
      }
  CHECK(checked > 1000);
}

TEST_CASE("block construction alone succeeds above the counting threshold") {
  std::mt19937_64 rng(99);
  struct Case {
    int a, b, g;
  };
  int checked = 0;
  for (Case c : {Case{2, 2, 1}, Case{3, 2, 1}, Case{2, 3, 1}, Case{3, 3, 1}, Case{3, 3, 2}, Case{4, 3, 2}}) {
    auto need = block_threshold(c.a, c.b, c.g);
    if (need > 90) continue;
    for (int trial = 0; trial < 40; ++trial) {
      int n = static_cast<int>(need) + uniform(rng, 0, 10);
      auto gen = gen_random_weakly_closed(n, c.g, rng(), 0.05 * uniform(rng, 1, 10));
      auto w = ramsey_blocks(gen.graph, c.a, c.b);
      REQUIRE(w);
      CHECK(valid(gen.graph, *w, c.a, c.b));
      ++checked;
    }
  }
  CHECK(checked >= 200);
}

TEST_CASE("returned witnesses always validate") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 600; ++trial) {
    auto g = random_graph(rng, uniform(rng, 0, 14), 0.1 * uniform(rng, 0, 10));
    int a = uniform(rng, 1, 5);
    int b = uniform(rng, 1, 5);
    auto w = clique_or_independent_set(g, a, b);
    bool has_clique = find_clique_exact(g, a).has_value();
    bool has_is = find_independent_set_exact(g, b).has_value();
    CHECK(w.has_value() == (has_clique || has_is));
    if (w) CHECK(valid(g, *w, a, b));
    if (auto bw = ramsey_blocks(g, a, b)) CHECK(valid(g, *bw, a, b));
  }
}

TEST_CASE("subgraph kernel hook") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    int k = uniform(rng, 1, 4);
    auto gen = gen_random_weakly_closed(uniform(rng, 0, 20), uniform(rng, 1, 3), rng(), 0.1 * uniform(rng, 1, 6));
    bool decided = g_subgraph_decided(gen.graph, k);
    CHECK(decided == (static_cast<std::uint64_t>(gen.graph.n()) >= r_gamma_bound(k, k, gen.gamma)));
    if (decided) CHECK(clique_or_independent_set(gen.graph, k, k).has_value());
  }
}
