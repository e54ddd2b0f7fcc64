#include "closure_kernels/ds.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "closure_kernels/arith.hpp"
#include "closure_kernels/combinatorics.hpp"

namespace ck {

SplitPartition split_partition(const Graph& g) {
  std::vector<int> by_deg(static_cast<std::size_t>(g.n()));
  std::iota(by_deg.begin(), by_deg.end(), 0);
  std::stable_sort(by_deg.begin(), by_deg.end(), [&](int a, int b) { return g.degree(a) > g.degree(b); });
  int m = 0;
  for (int i = 0; i < g.n(); ++i)
    if (g.degree(by_deg[static_cast<std::size_t>(i)]) >= i) m = i + 1;
  std::int64_t head = 0, tail = 0;
  for (int i = 0; i < g.n(); ++i) (i < m ? head : tail) += g.degree(by_deg[static_cast<std::size_t>(i)]);
  if (head != static_cast<std::int64_t>(m) * (m - 1) + tail) throw invalid_input("graph is not a split graph");
  SplitPartition p;
  p.clique = normalized(VertexSet(by_deg.begin(), by_deg.begin() + m));
  p.independent = normalized(VertexSet(by_deg.begin() + m, by_deg.end()));
  if (!is_clique(g, p.clique) || !is_independent_set(g, p.independent))
    throw std::logic_error("split recognition produced an invalid partition");
  return p;
}

bool is_split(const Graph& g) {
  try {
    split_partition(g);
    return true;
  } catch (const invalid_input&) {
    return false;
  }
}

SplitPartition max_independent_partition(const Graph& g) {
  auto p = split_partition(g);
  for (int c : p.clique) {
    auto nb = g.neighbors(c);
    bool sees_i = std::any_of(nb.begin(), nb.end(), [&](int u) {
      return std::binary_search(p.independent.begin(), p.independent.end(), u);
    });
    if (!sees_i) {
      p.clique.erase(std::find(p.clique.begin(), p.clique.end(), c));
      p.independent = normalized([&] {
        auto s = p.independent;
        s.push_back(c);
        return s;
      }());
      break;
    }
  }
  return p;
}

namespace {

void expect_ds(const Instance& inst, const char* rule) {
  if (inst.kind != Problem::Ds) throw invalid_input(std::string(rule) + " expects a ds instance");
}

}  // namespace

Reduced rr_ds_isolated(const Instance& inst) {
  expect_ds(inst, "rr_ds_isolated");
  VertexSet iso;
  for (int v = 0; v < inst.n(); ++v)
    if (inst.graph.degree(v) == 0) iso.push_back(v);
  std::vector<Edit> edits;
  std::int64_t k = inst.k - static_cast<std::int64_t>(iso.size());
  int left = inst.n() - static_cast<int>(iso.size());
  if (!iso.empty()) {
    edits.push_back(delete_edit(inst, iso));
    edits.push_back(Edit{Edit::Op::AddBudget, {}, -static_cast<std::int64_t>(iso.size())});
  }
  if (k < 0 || (k == 0 && left > 0))
    edits.push_back(decide_edit(false));
  else if (left == 0)
    edits.push_back(decide_edit(true));
  return edits.empty() ? unchanged(inst) : reduce_with(inst, std::move(edits));
}

Reduced rr_dss_nc(const Instance& inst) {
  expect_ds(inst, "rr_dss_nc");
  auto p = max_independent_partition(inst.graph);
  VertexSet gone;
  for (int v : p.independent) {
    auto nb = inst.graph.neighbors(v);
    if (!p.clique.empty() && std::equal(nb.begin(), nb.end(), p.clique.begin(), p.clique.end())) gone.push_back(v);
  }
  return gone.empty() ? unchanged(inst) : reduce_with(inst, {delete_edit(inst, gone)});
}

ClosureOrdering good_ordering(const Graph& g, const SplitPartition& part) {
  int gamma = weak_closure_ordering(g).gamma;
  std::vector<char> alive(static_cast<std::size_t>(g.n()), 1), in_c(static_cast<std::size_t>(g.n()), 0);
  for (int c : part.clique) in_c[static_cast<std::size_t>(c)] = 1;
  std::vector<int> front, back;
  int remaining = g.n();
  auto live_deg = [&](int v) {
    int d = 0;
    for (int u : g.neighbors(v)) d += alive[static_cast<std::size_t>(u)];
    return d;
  };
  auto live_closure = [&](int v) {
    int best = 0;
    for (int w = 0; w < g.n(); ++w) {
      if (w == v || !alive[static_cast<std::size_t>(w)] || g.adjacent(v, w)) continue;
      int c = 0;
      for (int x : g.neighbors(v)) c += alive[static_cast<std::size_t>(x)] && g.adjacent(w, x);
      best = std::max(best, c);
    }
    return best;
  };
  while (remaining > 0) {
    int lo = g.n(), hi = -1;
    for (int v = 0; v < g.n(); ++v) {
      if (!alive[static_cast<std::size_t>(v)]) continue;
      lo = std::min(lo, live_deg(v));
      hi = std::max(hi, live_deg(v));
    }
    if (hi <= gamma - 1) {
      for (int pass : {1, 0})
        for (int v = 0; v < g.n(); ++v)
          if (alive[static_cast<std::size_t>(v)] && in_c[static_cast<std::size_t>(v)] == pass) front.push_back(v);
      break;
    }
    int pick = -1;
    if (lo >= gamma) {
      int best = 0;
      for (int c : part.clique) {
        if (!alive[static_cast<std::size_t>(c)]) continue;
        int cl = live_closure(c);
        if (pick < 0 || cl < best) pick = c, best = cl;
      }
      if (pick < 0) throw std::logic_error("good ordering: no clique vertex left");
      front.push_back(pick);
    } else {
      for (int u : part.independent)
        if (alive[static_cast<std::size_t>(u)] && live_deg(u) <= gamma - 1) {
          pick = u;
          break;
        }
      if (pick < 0) throw std::logic_error("good ordering: low-degree vertex is not in I");
      back.push_back(pick);
    }
    alive[static_cast<std::size_t>(pick)] = 0;
    --remaining;
  }
  front.insert(front.end(), back.rbegin(), back.rend());
  return make_ordering(g, front);
}

std::vector<SNeighborhood> compute_s_neighborhoods(const Graph& g, const SplitPartition& part,
                                                   const ClosureOrdering& ord) {
  std::vector<int> cs = part.clique;
  std::sort(cs.begin(), cs.end(), [&](int a, int b) {
    return ord.position[static_cast<std::size_t>(a)] < ord.position[static_cast<std::size_t>(b)];
  });
  std::vector<SNeighborhood> out;
  for (int u : part.independent) {
    std::size_t s = 0;
    while (s < cs.size() && g.adjacent(u, cs[s])) ++s;
    if (s == cs.size()) throw std::logic_error("vertex " + std::to_string(u) + " sees the whole clique");
    SNeighborhood row{u, static_cast<int>(s), {}};
    for (std::size_t i = s; i < cs.size(); ++i)
      if (g.adjacent(u, cs[i])) row.set.push_back(cs[i]);
    row.set = normalized(row.set);
    out.push_back(std::move(row));
  }
  return out;
}

std::optional<std::vector<int>> find_s_sunflower(const std::vector<SNeighborhood>& table, std::int64_t k) {
  auto need = static_cast<std::size_t>(k + 2);
  auto take = [&](std::vector<int> us) {
    us.resize(need);
    return us;
  };
  std::map<VertexSet, std::vector<int>> same;
  for (const auto& row : table) same[row.set].push_back(row.u);
  for (auto& [set, us] : same)
    if (us.size() >= need) return take(us);

  std::vector<VertexSet> distinct;
  std::vector<int> rep;
  for (auto& [set, us] : same) distinct.push_back(set), rep.push_back(us.front());
  if (auto sf = find_sunflower(distinct, need)) {
    std::vector<int> us;
    for (std::size_t i : sf->members) us.push_back(rep[i]);
    return take(us);
  }

  std::vector<VertexSet> family;
  for (const auto& row : table) family.push_back(row.set);
  if (auto sf = find_sunflower(family, need)) {
    std::vector<int> us;
    for (std::size_t i : sf->members) us.push_back(table[i].u);
    return take(us);
  }
  return std::nullopt;
}

Reduced rr_dss_sunflower(const Instance& inst) {
  expect_ds(inst, "rr_dss_sunflower");
  auto part = split_partition(inst.graph);
  auto ord = good_ordering(inst.graph, part);
  auto table = compute_s_neighborhoods(inst.graph, part, ord);
  auto petals = find_s_sunflower(table, inst.k);
  if (!petals) return unchanged(inst);
  std::map<int, int> s_of;
  for (const auto& row : table) s_of[row.u] = row.s;
  int victim = *std::max_element(petals->begin(), petals->end(),
                                 [&](int a, int b) { return std::pair{s_of[a], a} < std::pair{s_of[b], b}; });
  return reduce_with(inst, {delete_edit(inst, {victim})});
}

Reduced rr_dss_twin(const Instance& inst, bool closed) {
  expect_ds(inst, "rr_dss_twin");
  auto part = split_partition(inst.graph);
  auto nbhd = [&](int v) {
    auto nb = inst.graph.neighbors(v);
    VertexSet s(nb.begin(), nb.end());
    if (closed) s.push_back(v);
    return normalized(s);
  };
  for (auto it = part.clique.rbegin(); it != part.clique.rend(); ++it) {
    int v = *it;
    auto nv = nbhd(v);
    for (int u : part.clique) {
      if (u == v) continue;
      auto nu = nbhd(u);
      if (std::includes(nu.begin(), nu.end(), nv.begin(), nv.end()))
        return reduce_with(inst, {delete_edit(inst, {v})});
    }
  }
  return unchanged(inst);
}

KernelResult kernelize_ds_split(const Instance& inst) {
  validate(inst);
  expect_ds(inst, "kernelize_ds_split");
  split_partition(inst.graph);
  KernelResult kr{inst, {}, std::nullopt};
  for (;;) {
    record(kr, "isolated", rr_ds_isolated(kr.instance));
    if (kr.decided) break;
    auto nc = rr_dss_nc(kr.instance);
    if (nc.applied) {
      record(kr, "nc", nc);
      continue;
    }
    auto sf = rr_dss_sunflower(kr.instance);
    if (sf.applied) {
      record(kr, "sunflower", sf);
      continue;
    }
    auto tw = rr_dss_twin(kr.instance);
    if (!tw.applied) break;
    record(kr, "twin", tw);
  }
  return kr;
}

std::vector<BoundCheck> ds_split_size_bounds(const Instance& reduced) {
  auto part = split_partition(reduced.graph);
  int gamma = weak_closure_ordering(reduced.graph).gamma;
  auto k = static_cast<std::uint64_t>(std::max<std::int64_t>(reduced.k, 0));
  auto i_size = static_cast<std::uint64_t>(part.independent.size());
  auto lambda = static_cast<std::uint64_t>(gamma - 1);
  return {
      {"ds |I| < (gamma-1)!(k+2)^(gamma-1)", i_size, sat_mul(factorial(lambda), sat_pow(k + 2, lambda)), true},
      {"ds |C| <= gamma|I| + 1", static_cast<std::uint64_t>(part.clique.size()),
       sat_add(sat_mul(static_cast<std::uint64_t>(gamma), i_size), 1), false},
  };
}

RhoCertificate rho_biclique_certificate(const Graph& g) {
  RhoCertificate c;
  c.gamma = weak_closure_ordering(g).gamma;
  c.omega = static_cast<int>(maximum_clique(g).size());
  c.rho = c.gamma + c.omega + 1;
  if (2 * c.rho <= g.n()) {
    if (auto b = contains_biclique(g, c.rho, c.rho)) c.violation = *b;
  }
  return c;
}

}  // namespace ck
