#include "closure_kernels/convc.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "closure_kernels/arith.hpp"
#include "closure_kernels/closure.hpp"
#include "closure_kernels/oracles.hpp"

namespace ck {

namespace {

void expect_kind(const Instance& inst, Problem p, const char* rule) {
  if (inst.kind != p) throw invalid_input(std::string(rule) + " expects a " + problem_name(p) + " instance");
}

bool is_red(const Instance& inst, int v) { return inst.red[static_cast<std::size_t>(v)] != 0; }

}  // namespace

Reduced rr_twinset(const Instance& inst) {
  expect_kind(inst, Problem::ConVc, "rr_twinset");
  for (const auto& cls : false_twin_classes(inst.graph)) {
    auto nb = static_cast<std::size_t>(inst.graph.degree(cls.front()));
    if (cls.size() >= 2 && cls.size() > nb) return reduce_with(inst, {delete_edit(inst, {cls.back()})});
  }
  return unchanged(inst);
}

KernelResult kernelize_convc_gamma(const Instance& inst) {
  validate(inst);
  KernelResult kr{inst, {}, std::nullopt};
  for (;;) {
    auto r = rr_twinset(kr.instance);
    if (!r.applied) break;
    record(kr, "twinset", r);
  }
  return kr;
}

std::size_t max_twin_class(const Graph& g) {
  std::size_t t = 1;
  for (const auto& cls : false_twin_classes(g)) t = std::max(t, cls.size());
  return t;
}

BoundCheck convc_gamma_size_bound(const Instance& reduced) {
  int k = static_cast<int>(reduced.k);
  int gamma = weak_closure_ordering(reduced.graph).gamma;
  return {"convc |V| <= k + lemma2(k, gamma, t*)", static_cast<std::uint64_t>(reduced.n()),
          sat_add(static_cast<std::uint64_t>(k), lemma2_bound(k, gamma, max_twin_class(reduced.graph))), false};
}

Reduced rr_annotated_trivial(const Instance& inst) {
  expect_kind(inst, Problem::AnnotatedConVc, "rr_annotated_trivial");
  std::vector<Edit> edits;
  VertexSet isolated;
  for (int v = 0; v < inst.n(); ++v)
    if (inst.graph.degree(v) == 0 && !is_red(inst, v)) isolated.push_back(v);
  Instance cur = inst;
  if (!isolated.empty()) {
    edits.push_back(delete_edit(inst, isolated));
    apply_edit(cur, edits.back());
  }

  std::optional<bool> verdict;
  if (cur.n() == 0) {
    verdict = true;
  } else if (connected_components(cur.graph).size() >= 2 || cur.k <= 0) {
    verdict = false;
  } else {
    int reds = static_cast<int>(std::count(cur.red.begin(), cur.red.end(), 1));
    for (int v = 0; v < cur.n() && !verdict; ++v) {
      bool covers = static_cast<std::size_t>(cur.graph.degree(v)) == cur.graph.m();
      bool holds_red = reds == 0 || (reds == 1 && is_red(cur, v));
      if (covers && holds_red) verdict = true;
    }
  }
  if (verdict) edits.push_back(decide_edit(*verdict));
  return edits.empty() ? unchanged(inst) : reduce_with(inst, std::move(edits));
}

Reduced rr_simplicial(const Instance& inst) {
  expect_kind(inst, Problem::AnnotatedConVc, "rr_simplicial");
  if (inst.n() < 3 || connected_components(inst.graph).size() != 1) return unchanged(inst);
  for (int v = 0; v < inst.n(); ++v) {
    auto nb = inst.graph.neighbors(v);
    VertexSet nbs(nb.begin(), nb.end());
    if (!is_clique(inst.graph, nbs)) continue;
    std::vector<Edit> edits;
    if (is_red(inst, v)) edits.push_back(Edit{Edit::Op::AddBudget, {}, -1});
    if (!is_red(inst, v) || nbs.size() == 1) {
      Edit mark{Edit::Op::MarkRed, {}, 0};
      for (int u : nbs) mark.vertices.push_back(inst.origin[static_cast<std::size_t>(u)]);
      edits.push_back(mark);
    }
    edits.push_back(delete_edit(inst, {v}));
    return reduce_with(inst, std::move(edits));
  }
  return unchanged(inst);
}

KernelResult kernelize_annotated_convc(const Instance& inst) {
  validate(inst);
  KernelResult kr{inst, {}, std::nullopt};
  for (;;) {
    record(kr, "isolated", rr_annotated_trivial(kr.instance));
    if (kr.decided) return kr;
    auto s = rr_simplicial(kr.instance);
    if (!s.applied) break;
    record(kr, "simplicial", s);
  }
  if (kr.instance.n() < 3)
    record(kr, "small-oracle", reduce_with(kr.instance, {decide_edit(solve_annotated_convc_exact(kr.instance).yes)}));
  return kr;
}

KernelResult kernelize_convc_c(const Instance& inst) {
  validate(inst);
  expect_kind(inst, Problem::ConVc, "kernelize_convc_c");
  KernelResult kr{inst, {}, std::nullopt};
  record(kr, "lift", reduce_with(inst, {convert_edit(Problem::AnnotatedConVc)}));
  auto inner = kernelize_annotated_convc(kr.instance);
  for (auto& app : inner.trace) kr.trace.push_back(std::move(app));
  kr.instance = inner.instance;
  kr.decided = inner.decided;

  std::vector<Edit> edits;
  if (!kr.decided) {
    int fresh = inst.origin.empty() ? 0 : *std::max_element(inst.origin.begin(), inst.origin.end()) + 1;
    for (int v = 0; v < kr.instance.n(); ++v)
      if (is_red(kr.instance, v))
        edits.push_back(Edit{Edit::Op::AttachLeaf, {kr.instance.origin[static_cast<std::size_t>(v)], fresh++}, 0});
  }
  edits.push_back(convert_edit(Problem::ConVc));
  record(kr, "attach-leaves", reduce_with(kr.instance, std::move(edits)));
  return kr;
}

BoundCheck annotated_size_bound(const Instance& reduced) {
  auto k = static_cast<std::uint64_t>(reduced.k);
  auto c = static_cast<std::uint64_t>(closure_number(reduced.graph));
  return {"annotated convc |V| < k + c*C(k,2)", static_cast<std::uint64_t>(reduced.n()),
          sat_add(k, sat_mul(c, binomial(k, 2))), true};
}

namespace {

using TwinKey = std::pair<std::vector<char>, std::vector<std::vector<int>>>;

TwinKey twin_key(const Graph& g, const VertexSet& t) {
  std::vector<int> perm(t.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::optional<TwinKey> best;
  do {
    TwinKey key;
    for (std::size_t i = 0; i < t.size(); ++i)
      for (std::size_t j = i + 1; j < t.size(); ++j)
        key.first.push_back(g.adjacent(t[static_cast<std::size_t>(perm[i])], t[static_cast<std::size_t>(perm[j])]));
    for (int p : perm) {
      std::vector<int> out;
      for (int u : g.neighbors(t[static_cast<std::size_t>(p)]))
        if (!std::binary_search(t.begin(), t.end(), u)) out.push_back(u);
      key.second.push_back(std::move(out));
    }
    if (!best || key < *best) best = std::move(key);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return *best;
}

void connected_subsets(const Graph& g, int r, int from, VertexSet& cur, std::vector<VertexSet>& out) {
  if (static_cast<int>(cur.size()) == r) {
    if (induces_connected(g, cur)) out.push_back(cur);
    return;
  }
  for (int v = from; v < g.n(); ++v) {
    cur.push_back(v);
    connected_subsets(g, r, v + 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<std::vector<VertexSet>> r_twin_classes(const Graph& g, int r) {
  if (r < 1) throw invalid_input("r must be at least 1");
  std::vector<VertexSet> sets;
  VertexSet cur;
  connected_subsets(g, r, 0, cur, sets);
  std::map<TwinKey, std::vector<VertexSet>> by_key;
  for (auto& t : sets) by_key[twin_key(g, t)].push_back(std::move(t));
  std::vector<std::vector<VertexSet>> out;
  for (auto& [key, cls] : by_key) out.push_back(std::move(cls));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<VertexSet>> ell_twin_classes(const Graph& g, int ell) {
  if (ell < 1) throw invalid_input("ell must be at least 1");
  std::vector<std::vector<VertexSet>> out;
  for (int r = 1; r <= ell; ++r)
    for (auto& cls : r_twin_classes(g, r)) out.push_back(std::move(cls));
  return out;
}

Reduced rr_coc_small_components(const Instance& inst) {
  expect_kind(inst, Problem::Coc, "rr_coc_small_components");
  VertexSet gone;
  for (const auto& comp : connected_components(inst.graph))
    if (static_cast<int>(comp.size()) <= inst.ell) gone.insert(gone.end(), comp.begin(), comp.end());
  return gone.empty() ? unchanged(inst) : reduce_with(inst, {delete_edit(inst, gone)});
}

Reduced rr_coc_twins(const Instance& inst) {
  expect_kind(inst, Problem::Coc, "rr_coc_twins");
  auto threshold = static_cast<std::size_t>(inst.k + inst.ell + 2);
  for (int r = 1; r <= inst.ell; ++r) {
    for (const auto& cls : r_twin_classes(inst.graph, r)) {
      if (cls.size() < threshold) continue;
      std::vector<char> used(static_cast<std::size_t>(inst.n()), 0);
      std::vector<const VertexSet*> picked;
      for (const auto& t : cls) {
        if (std::any_of(t.begin(), t.end(), [&](int v) { return used[static_cast<std::size_t>(v)]; })) continue;
        for (int v : t) used[static_cast<std::size_t>(v)] = 1;
        picked.push_back(&t);
      }
      if (picked.size() >= threshold) return reduce_with(inst, {delete_edit(inst, *picked.back())});
    }
  }
  return unchanged(inst);
}

KernelResult kernelize_coc(const Instance& inst, int max_ell) {
  validate(inst);
  expect_kind(inst, Problem::Coc, "kernelize_coc");
  if (inst.ell > max_ell)
    throw invalid_input("ell = " + std::to_string(inst.ell) + " exceeds the configured maximum " +
                        std::to_string(max_ell));
  KernelResult kr{inst, {}, std::nullopt};
  for (;;) {
    auto a = rr_coc_small_components(kr.instance);
    record(kr, "small-components", a);
    auto b = rr_coc_twins(kr.instance);
    record(kr, "ell-twins", b);
    if (!a.applied && !b.applied) break;
  }
  return kr;
}

}  // namespace ck
