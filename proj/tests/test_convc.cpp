#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "closure_kernels/closure.hpp"
#include "closure_kernels/convc.hpp"
#include "closure_kernels/oracles.hpp"
#include "support.hpp"

using namespace ck;
using namespace cktest;

namespace {

Instance convc(Graph g, std::int64_t k) { return make_instance(Problem::ConVc, std::move(g), k); }

Instance annotated(Graph g, std::int64_t k, std::vector<char> red = {}) {
  auto i = make_instance(Problem::AnnotatedConVc, std::move(g), k);
  if (!red.empty()) i.red = std::move(red);
  return i;
}

Instance coc(Graph g, std::int64_t k, int ell) { return make_instance(Problem::Coc, std::move(g), k, ell); }

bool answer(const Instance& i) { return solve(i, kWideLimits).yes; }

Graph random_connectedish(std::mt19937_64& rng) {
  int base = uniform(rng, 2, 8);
  int extra = uniform(rng, 0, 11 - base);
  return with_twins(rng, base, extra, 0.4);
}

}  // namespace

TEST_CASE("twinset on named graphs") {
  auto s = rr_twinset(convc(star(3), 1));
  REQUIRE(s.applied);
  CHECK(s.instance.origin == std::vector<int>{0, 1, 2});
  CHECK_FALSE(rr_twinset(convc(cycle(4), 2)).applied);

  auto kr = kernelize_convc_gamma(convc(biclique(2, 5), 2));
  CHECK(kr.instance.graph == biclique(2, 2));
  CHECK(kr.trace.size() == 3);
  CHECK(answer(kr.instance) == answer(convc(biclique(2, 5), 2)));

  auto st = kernelize_convc_gamma(convc(star(7), 1));
  CHECK(st.instance.graph == Graph(2, {{0, 1}}));
  CHECK(kernelize_convc_gamma(convc(petersen(), 3)).trace.empty());
}

TEST_CASE("annotated trivial rule") {
  CHECK(rr_annotated_trivial(annotated(Graph(4, {{0, 1}, {2, 3}}), 3)).decided == false);
  CHECK(rr_annotated_trivial(annotated(star(4), 1)).decided == true);
  auto r = rr_annotated_trivial(annotated(disjoint_union(cycle(5), Graph(3)), 4));
  REQUIRE(r.applied);
  CHECK_FALSE(r.decided);
  CHECK(r.instance.n() == 5);
  // two isolated red vertices
  CHECK(rr_annotated_trivial(annotated(Graph(2), 3, {1, 1})).decided == false);
  CHECK(rr_annotated_trivial(annotated(Graph(2), 3, {1, 0})).decided == true);
}

TEST_CASE("simplicial rule") {
  auto t = rr_simplicial(annotated(complete(3), 2));
  REQUIRE(t.applied);
  CHECK(t.instance.n() == 2);
  CHECK(t.instance.red == std::vector<char>{1, 1});
  CHECK(t.instance.k == 2);
  CHECK(answer(t.instance) == answer(annotated(complete(3), 2)));

  auto p = rr_simplicial(annotated(path(3), 1));
  REQUIRE(p.applied);
  CHECK(p.instance.origin == std::vector<int>{1, 2});
  CHECK(p.instance.red == std::vector<char>{1, 0});

  CHECK_FALSE(rr_simplicial(annotated(cycle(5), 3)).applied);

  auto red_leaf = rr_simplicial(annotated(path(4), 3, {1, 0, 0, 0}));
  REQUIRE(red_leaf.applied);
  CHECK(red_leaf.instance.k == 2);
  CHECK(red_leaf.instance.red == std::vector<char>{1, 0, 0});
}

TEST_CASE("c-closed pipeline") {
  for (std::int64_t k = 0; k <= 4; ++k) {
    auto i = convc(path(5), k);
    auto kr = kernelize_convc_c(i);
    CHECK(kr.instance.kind == Problem::ConVc);
    CHECK_NOTHROW(validate(kr.instance));
    CHECK(replay(i, kr.trace) == kr.instance);
    CHECK(answer(kr.instance) == answer(i));
  }
  // C5 has no simplicial vertex: the only change is the round trip through the annotated form
  auto kr = kernelize_convc_c(convc(cycle(5), 4));
  CHECK(kr.instance.graph == cycle(5));
  CHECK_FALSE(kr.decided);
}

TEST_CASE("leaves are attached to red vertices with fresh ids") {
  // a triangle with a pendant path keeps a red core
  auto i = convc(Graph(7, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 3}}), 5);
  auto kr = kernelize_convc_c(i);
  REQUIRE_FALSE(kr.decided);
  CHECK(kr.instance.n() > 0);
  for (std::size_t v = 0; v < kr.instance.origin.size(); ++v)
    if (kr.instance.origin[v] >= 7) CHECK(kr.instance.graph.degree(static_cast<int>(v)) == 1);
  CHECK(answer(kr.instance) == answer(i));
}

TEST_CASE("ell twin classes") {
  // edges {0,1} and {2,3}; 0 and 2 see 4, 1 and 3 see 5
  Graph g(6, {{0, 1}, {2, 3}, {0, 4}, {2, 4}, {1, 5}, {3, 5}});
  auto cls = r_twin_classes(g, 2);
  bool found = false;
  for (auto& c : cls)
    if (c == std::vector<VertexSet>{{0, 1}, {2, 3}}) found = true;
  CHECK(found);

  // mirrored paths 0-1-2 and 3-4-5: ends 0,5 see 6 and ends 2,3 see 7
  Graph m(8, {{0, 1}, {1, 2}, {3, 4}, {4, 5}, {0, 6}, {5, 6}, {2, 7}, {3, 7}});
  found = false;
  for (auto& c : r_twin_classes(m, 3))
    if (c == std::vector<VertexSet>{{0, 1, 2}, {3, 4, 5}}) found = true;
  CHECK(found);

  for (auto& c : ell_twin_classes(m, 3))
    for (auto& t : c) CHECK(t.size() == c.front().size());
  // 1-twins are exactly false twins
  auto g2 = biclique(2, 3);
  CHECK(r_twin_classes(g2, 1) == std::vector<std::vector<VertexSet>>{{{0}, {1}}, {{2}, {3}, {4}}});
}

TEST_CASE("coc kernel examples") {
  auto clear = kernelize_coc(coc(disjoint_union(path(2), disjoint_union(path(2), Graph(1))), 0, 2));
  CHECK(clear.instance.n() == 0);
  CHECK(answer(clear.instance));

  // hub pair 0-1; pendant edges (a_i, b_i) with a_i ~ 0, b_i ~ 1
  std::int64_t k = 1;
  int ell = 2;
  int pairs = static_cast<int>(k) + ell + 2;
  std::vector<Edge> e{{0, 1}};
  for (int i = 0; i < pairs; ++i) {
    int a = 2 + 2 * i, b = a + 1;
    e.insert(e.end(), {{a, b}, {0, a}, {1, b}});
  }
  auto i = coc(Graph(2 + 2 * pairs, e), k, ell);
  auto r = rr_coc_twins(i);
  REQUIRE(r.applied);
  CHECK(r.instance.n() == i.n() - 2);
  CHECK(answer(r.instance) == answer(i));

  CHECK_THROWS_AS(kernelize_coc(coc(path(6), 1, 5)), invalid_input);
}

TEST_CASE("gamma kernel fixpoint and size") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 400; ++trial) {
    auto i = convc(random_connectedish(rng), uniform(rng, 0, 4));
    auto kr = kernelize_convc_gamma(i);
    for (auto& cls : false_twin_classes(kr.instance.graph))
      CHECK((cls.size() < 2 || cls.size() <= static_cast<std::size_t>(kr.instance.graph.degree(cls.front()))));
    if (answer(i)) CHECK(convc_gamma_size_bound(kr.instance).holds());
  }
}

TEST_CASE("rules preserve answers on random instances") {
  std::mt19937_64 rng(9);
  int fired[6] = {};
  for (int trial = 0; trial < 1000; ++trial) {
    auto g = random_connectedish(rng);
    auto k = uniform(rng, 0, 4);

    auto c = convc(g, k);
    bool base = answer(c);
    auto r2 = rr_twinset(c);
    fired[0] += r2.applied;
    CHECK(answer(r2.instance) == base);
    CHECK(answer(kernelize_convc_gamma(c).instance) == base);
    auto cc = kernelize_convc_c(c);
    CHECK(answer(cc.instance) == base);
    CHECK(replay(c, cc.trace) == cc.instance);

    auto a = annotated(g, k);
    for (auto& x : a.red) x = uniform(rng, 0, 5) == 0;
    bool abase = answer(a);
    auto t = rr_annotated_trivial(a);
    fired[1] += t.applied;
    CHECK(answer(t.instance) == abase);
    auto s = rr_simplicial(t.instance);
    fired[2] += s.applied;
    if (!t.decided) CHECK(answer(s.instance) == abase);
    auto ak = kernelize_annotated_convc(a);
    CHECK(answer(ak.instance) == abase);
    if (abase && !ak.decided) CHECK(annotated_size_bound(ak.instance).holds());

    int ell = uniform(rng, 1, 2);
    auto o = coc(g, k, ell);
    bool obase = answer(o);
    auto r7 = rr_coc_small_components(o);
    auto r8 = rr_coc_twins(o);
    fired[3] += r7.applied;
    fired[4] += r8.applied;
    CHECK(answer(r7.instance) == obase);
    CHECK(answer(r8.instance) == obase);
    auto ok = kernelize_coc(o);
    CHECK(answer(ok.instance) == obase);
    CHECK(replay(o, ok.trace) == ok.instance);
    if (ell == 1) CHECK(obase == base);
  }
  MESSAGE("fired: twinset " << fired[0] << ", trivial " << fired[1] << ", simplicial " << fired[2] << ", small "
                            << fired[3] << ", twins " << fired[4]);
  CHECK(fired[0] > 50);
  CHECK(fired[2] > 50);
  CHECK(fired[4] > 5);
}
