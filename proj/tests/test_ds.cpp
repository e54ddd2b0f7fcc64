#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "closure_kernels/combinatorics.hpp"
#include "closure_kernels/ds.hpp"
#include "closure_kernels/oracles.hpp"
#include "support.hpp"

using namespace ck;
using namespace cktest;

namespace {

Instance ds(Graph g, std::int64_t k) { return make_instance(Problem::Ds, std::move(g), k); }

bool answer(const Instance& i) { return solve_ds_exact(i, kWideLimits).yes; }

Graph random_split_graph(std::mt19937_64& rng, int max_n) {
  int c = uniform(rng, 1, max_n - 1);
  int i = uniform(rng, 0, max_n - c);
  return random_split(rng, c, i, 0.15 * uniform(rng, 1, 5));
}

// C = 0..5; I-vertices 6.. each see vertex 0 and the listed clique vertices
Graph clique_with_pendants(const std::vector<VertexSet>& seen) {
  auto e = complete(6).edges();
  for (std::size_t j = 0; j < seen.size(); ++j) {
    int u = 6 + static_cast<int>(j);
    e.emplace_back(0, u);
    for (int v : seen[j]) e.emplace_back(v, u);
  }
  return Graph(6 + static_cast<int>(seen.size()), e);
}

}  // namespace

TEST_CASE("split recognition") {
  auto kn = split_partition(complete(5));
  CHECK(kn.clique.size() == 5);
  CHECK(kn.independent.empty());
  auto st = split_partition(star(3));
  CHECK(st.clique.size() == 2);
  CHECK(st.independent.size() == 2);
  CHECK(std::find(st.clique.begin(), st.clique.end(), 0) != st.clique.end());
  CHECK_THROWS_AS(split_partition(cycle(5)), invalid_input);
  CHECK_THROWS_AS(split_partition(cycle(4)), invalid_input);
  CHECK_FALSE(is_split(Graph(4, {{0, 1}, {2, 3}})));
  auto mi = max_independent_partition(star(3));
  CHECK(mi.clique == VertexSet{0});
  CHECK(mi.independent == VertexSet{1, 2, 3});
}

TEST_CASE("split recognition against brute force") {
  for (int n = 1; n <= 6; ++n) {
    auto pairs = all_pairs(n);
    for (std::uint64_t mask = 0; mask < (1ull << pairs.size()); ++mask) {
      auto g = from_mask(n, mask);
      bool brute = false;
      for (std::uint32_t c = 0; c < (1u << n) && !brute; ++c) {
        VertexSet cs, is;
        for (int v = 0; v < n; ++v) (c >> v & 1 ? cs : is).push_back(v);
        brute = is_clique(g, cs) && is_independent_set(g, is);
      }
      REQUIRE(is_split(g) == brute);
      if (brute) CHECK(split_partition(g).clique.size() == maximum_clique(g).size());
    }
  }
}

TEST_CASE("nc rule") {
  // 4 sees the whole clique {0,1,2}... as does every I-vertex of a star
  auto r = rr_dss_nc(ds(star(3), 1));
  REQUIRE(r.applied);
  CHECK(r.instance.n() == 1);
  // C = {0,1,2}; 3 sees {0,1}, 4 sees {2}
  CHECK_FALSE(rr_dss_nc(ds(Graph(5, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 3}, {2, 4}}), 1)).applied);
}

TEST_CASE("isolated vertices are paid for") {
  auto r = rr_ds_isolated(ds(disjoint_union(complete(3), Graph(2)), 3));
  CHECK(r.instance.k == 1);
  CHECK(r.instance.n() == 3);
  CHECK(rr_ds_isolated(ds(Graph(3), 2)).decided == false);
  CHECK(rr_ds_isolated(ds(Graph(3), 3)).decided == true);
}

TEST_CASE("good ordering on a star keeps the center first") {
  auto g = star(4);
  auto part = split_partition(g);
  auto ord = good_ordering(g, part);
  CHECK(ord.order.front() == 0);
  CHECK(ord.gamma == weak_closure_ordering(g).gamma);
}

TEST_CASE("s neighborhoods from the definition") {
  // C = 0..3 in order; 4 sees {0}, 5 sees {0, 2}
  Graph g(6, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {0, 4}, {0, 5}, {2, 5}});
  SplitPartition part{{0, 1, 2, 3}, {4, 5}};
  auto ord = make_ordering(g, {0, 1, 2, 3, 4, 5});
  auto t = compute_s_neighborhoods(g, part, ord);
  REQUIRE(t.size() == 2);
  CHECK(t[0].s == 1);
  CHECK(t[0].set.empty());
  CHECK(t[1].s == 1);
  CHECK(t[1].set == VertexSet{2});
  SplitPartition bad{{0, 1}, {2}};
  CHECK_THROWS_AS(compute_s_neighborhoods(complete(3), bad, make_ordering(complete(3), {0, 1, 2})),
                  std::logic_error);
}

TEST_CASE("sunflower rule") {
  auto disjoint = ds(clique_with_pendants({{2}, {3}, {4}}), 1);
  auto r = rr_dss_sunflower(disjoint);
  REQUIRE(r.applied);
  CHECK(r.instance.n() == disjoint.n() - 1);
  CHECK(answer(r.instance) == answer(disjoint));

  auto same = ds(clique_with_pendants({{2}, {2}, {2}}), 1);
  auto s = rr_dss_sunflower(same);
  REQUIRE(s.applied);
  CHECK(answer(s.instance) == answer(same));

  CHECK_FALSE(rr_dss_sunflower(ds(clique_with_pendants({{2}, {3}}), 1)).applied);
}

TEST_CASE("twin rule variants") {
  // 1 and 2 are clique vertices with the same closed neighborhood
  Graph g(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 4}, {2, 4}});
  auto r = rr_dss_twin(ds(g, 1));
  REQUIRE(r.applied);
  CHECK(r.instance.origin == std::vector<int>{0, 1, 3, 4});
  CHECK_FALSE(rr_dss_twin(ds(g, 1), false).applied);
  // antichain: 0 sees 3, 1 sees 4, 2 sees 5
  Graph a(6, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 4}, {2, 5}});
  CHECK_FALSE(rr_dss_twin(ds(a, 1)).applied);
}

TEST_CASE("kernel on cliques") {
  for (int n = 1; n <= 6; ++n) {
    auto kr = kernelize_ds_split(ds(complete(n), 1));
    CHECK(kr.decided == true);
  }
  CHECK_THROWS_AS(kernelize_ds_split(ds(cycle(5), 2)), invalid_input);
}

TEST_CASE("rules preserve answers on random split graphs") {
  std::mt19937_64 rng(17);
  int fired[4] = {};
  for (int trial = 0; trial < 1000; ++trial) {
    auto i = ds(random_split_graph(rng, 11), uniform(rng, 0, 3));
    bool before = answer(i);
    auto iso = rr_ds_isolated(i);
    CHECK(answer(iso.instance) == before);
    if (iso.decided) continue;
    auto base = iso.instance;
    auto nc = rr_dss_nc(base);
    fired[0] += nc.applied;
    CHECK(answer(nc.instance) == before);
    auto tw = rr_dss_twin(base);
    fired[1] += tw.applied;
    CHECK(answer(tw.instance) == before);
    auto lit = rr_dss_twin(base, false);
    CHECK_FALSE(lit.applied);

    auto exhausted = kernelize_ds_split(base);
    // the sunflower rule needs nc to be exhausted; probe it mid-pipeline too
    auto pre = base;
    for (;;) {
      auto r = rr_dss_nc(pre);
      if (!r.applied) break;
      pre = rr_ds_isolated(r.instance).instance;
      if (pre.n() == 0 || pre.kind != Problem::Ds) break;
    }
    if (pre.n() > 0 && !rr_ds_isolated(pre).applied) {
      auto sf = rr_dss_sunflower(pre);
      fired[2] += sf.applied;
      CHECK(answer(sf.instance) == answer(pre));
    }
    CHECK(answer(exhausted.instance) == before);
    CHECK(replay(i, std::vector<RuleApplication>{{"isolated", iso.edits}}) == base);
    CHECK(replay(base, exhausted.trace) == exhausted.instance);
  }
  MESSAGE("fired: nc " << fired[0] << ", twin " << fired[1] << ", sunflower " << fired[2]);
  CHECK(fired[0] > 100);
  CHECK(fired[1] > 100);
  CHECK(fired[2] > 50);
}

TEST_CASE("good ordering and s bounds on random split graphs") {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 400; ++trial) {
    auto g = random_split_graph(rng, 12);
    auto pre = ds(g, 3);
    for (;;) {
      auto r = rr_dss_nc(pre);
      if (!r.applied) break;
      pre = r.instance;
    }
    auto part = split_partition(pre.graph);
    auto ord = good_ordering(pre.graph, part);
    int gamma = weak_closure_ordering(pre.graph).gamma;
    CHECK(ord.gamma == gamma);
    for (int c : part.clique)
      for (int u : part.independent) CHECK(ord.position[static_cast<std::size_t>(c)] < ord.position[static_cast<std::size_t>(u)]);
    if (part.independent.empty() || rr_ds_isolated(pre).applied) continue;
    for (const auto& row : compute_s_neighborhoods(pre.graph, part, ord))
      CHECK(static_cast<int>(row.set.size()) <= gamma - 1);
  }
}

TEST_CASE("dominating sets can avoid the independent side") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 300; ++trial) {
    auto i = ds(random_split_graph(rng, 10), uniform(rng, 1, 3));
    auto part = split_partition(i.graph);
    if (rr_ds_isolated(i).applied) continue;
    CHECK(answer(i) == solve_ds_within(i, part.clique, kWideLimits).yes);
  }
}

TEST_CASE("size bounds after exhaustion") {
  std::mt19937_64 rng(31);
  int checked = 0, i_fail = 0;
  for (int trial = 0; trial < 400; ++trial) {
    auto i = ds(random_split_graph(rng, 12), uniform(rng, 1, 3));
    auto kr = kernelize_ds_split(i);
    if (kr.decided || !answer(i)) continue;
    ++checked;
    auto b = ds_split_size_bounds(kr.instance);
    i_fail += !b[0].holds();
    CHECK(b[1].holds());
    // the sunflower threshold counts distinct sets
    auto part = split_partition(kr.instance.graph);
    auto table = compute_s_neighborhoods(kr.instance.graph, part, good_ordering(kr.instance.graph, part));
    std::set<VertexSet> sets;
    for (auto& row : table) sets.insert(row.set);
    if (sets.size() == table.size()) CHECK(b[0].holds());
  }
  MESSAGE("undecided yes-kernels " << checked << ", |I| bound violations " << i_fail);
}

TEST_CASE("rho biclique certificate") {
  CHECK_FALSE(rho_biclique_certificate(complete(6)).violation);
  auto c4 = rho_biclique_certificate(cycle(4));
  CHECK(c4.gamma == 3);
  CHECK(c4.omega == 2);
  CHECK(c4.rho == 6);
  CHECK_FALSE(c4.violation);
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 100; ++trial) {
    auto c = rho_biclique_certificate(random_graph(rng, uniform(rng, 4, 16), 0.5));
    CHECK_FALSE(c.violation);
  }
}
