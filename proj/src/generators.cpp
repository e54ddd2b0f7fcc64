#include "closure_kernels/generators.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "closure_kernels/closure.hpp"

namespace ck {

namespace {

using Rng = std::mt19937_64;

bool coin(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

void require_probability(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw invalid_input("edge probability must lie in [0, 1]");
}

Generated measured(std::string family, std::uint64_t seed, Graph g) {
  Generated out;
  out.family = std::move(family);
  out.seed = seed;
  out.gamma = weak_closure_ordering(g).gamma;
  out.c = closure_number(g);
  out.graph = std::move(g);
  return out;
}

std::vector<int> permutation(Rng& rng, int n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

}  // namespace

Generated gen_random_weakly_closed(int n, int target_gamma, std::uint64_t seed, double p) {
  if (n < 0) throw invalid_input("vertex count must be non-negative");
  if (target_gamma < 1) throw invalid_input("target gamma must be at least 1");
  require_probability(p);
  Rng rng(seed);
  auto un = static_cast<std::size_t>(n);
  std::vector<std::vector<char>> adj(un, std::vector<char>(un, 0));
  std::vector<int> placed;  // suffix of the ordering, creation indices
  for (int v = 0; v < n; ++v) {
    std::vector<int> cand = placed;
    std::shuffle(cand.begin(), cand.end(), rng);
    std::vector<int> nb;
    auto fits = [&](const std::vector<int>& s) {
      for (int w : placed) {
        if (std::find(s.begin(), s.end(), w) != s.end()) continue;
        int common = 0;
        for (int u : s) common += adj[static_cast<std::size_t>(u)][static_cast<std::size_t>(w)];
        if (common > target_gamma - 1) return false;
      }
      return true;
    };
    for (int u : cand) {
      if (!coin(rng, p)) continue;
      nb.push_back(u);
      if (!fits(nb)) nb.pop_back();
    }
    for (int u : nb) adj[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = adj[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = 1;
    placed.push_back(v);
  }
  auto relabel = permutation(rng, n);
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (adj[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)])
        e.emplace_back(relabel[static_cast<std::size_t>(u)], relabel[static_cast<std::size_t>(v)]);
  auto out = measured("weakly-closed", seed, Graph(n, e));
  if (out.gamma > target_gamma)
    throw std::logic_error("weakly closed generator produced gamma " + std::to_string(out.gamma));
  return out;
}

Generated gen_random_split(int n, std::uint64_t seed, double p) {
  if (n < 0) throw invalid_input("vertex count must be non-negative");
  require_probability(p);
  Rng rng(seed);
  int c = n == 0 ? 0 : std::uniform_int_distribution<int>(0, n)(rng);
  std::vector<Edge> e;
  for (int u = 0; u < c; ++u)
    for (int v = u + 1; v < c; ++v) e.emplace_back(u, v);
  for (int u = c; u < n; ++u)
    for (int v = 0; v < c; ++v)
      if (coin(rng, p)) e.emplace_back(v, u);
  return measured("split", seed, Graph(n, e));
}

Generated gen_random_bipartite(int n, std::uint64_t seed, double p) {
  if (n < 0) throw invalid_input("vertex count must be non-negative");
  require_probability(p);
  Rng rng(seed);
  int a = n == 0 ? 0 : std::uniform_int_distribution<int>(0, n)(rng);
  std::vector<Edge> e;
  for (int u = 0; u < a; ++u)
    for (int v = a; v < n; ++v)
      if (coin(rng, p)) e.emplace_back(u, v);
  return measured("bipartite", seed, Graph(n, e));
}

Generated gen_k_ab(int a, int b) {
  if (a < 0 || b < 0) throw invalid_input("side sizes must be non-negative");
  std::vector<Edge> e;
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < b; ++v) e.emplace_back(u, a + v);
  return measured("k_ab", 0, Graph(a + b, e));
}

Generated gen_random_graph(int n, std::uint64_t seed, double p) {
  if (n < 0) throw invalid_input("vertex count must be non-negative");
  require_probability(p);
  Rng rng(seed);
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng, p)) e.emplace_back(u, v);
  return measured("gnp", seed, Graph(n, e));
}

SetCoverInstance gen_random_set_cover(int lambda, int k, int sets, std::uint64_t seed, bool planted) {
  if (lambda < 1 || k < 0 || sets < 0) throw invalid_input("set cover needs lambda >= 1, k >= 0, sets >= 0");
  if (planted && sets < k) throw invalid_input("a planted cover needs at least k sets");
  Rng rng(seed);
  SetCoverInstance sc;
  sc.lambda = lambda;
  sc.k = k;
  sc.universe = lambda * k;
  if (sc.universe < lambda && sets > 0) throw invalid_input("universe smaller than one set");
  if (planted) {
    auto p = permutation(rng, sc.universe);
    for (int i = 0; i < k; ++i)
      sc.family.push_back(normalized(VertexSet(p.begin() + i * lambda, p.begin() + (i + 1) * lambda)));
  }
  while (static_cast<int>(sc.family.size()) < sets) {
    auto p = permutation(rng, sc.universe);
    sc.family.push_back(normalized(VertexSet(p.begin(), p.begin() + lambda)));
  }
  std::shuffle(sc.family.begin(), sc.family.end(), rng);
  validate(sc);
  return sc;
}

Instance gen_capvc_lowerbound(const SetCoverInstance& sc) {
  validate(sc);
  int f = static_cast<int>(sc.family.size());
  int u = sc.universe;
  int lam = sc.lambda;
  int k = sc.k;
  auto u1 = [&](int i) { return f + i; };
  auto u2 = [&](int i) { return f + u + i; };
  std::vector<Edge> e;
  std::vector<std::int64_t> z(static_cast<std::size_t>(u), 0);
  for (int s = 0; s < f; ++s) {
    for (int x : sc.family[static_cast<std::size_t>(s)]) {
      e.emplace_back(s, u1(x));
      e.emplace_back(s, u2(x));
      ++z[static_cast<std::size_t>(x)];
    }
  }
  for (int a = 0; a < 2 * u; ++a)
    for (int b = a + 1; b < 2 * u; ++b) e.emplace_back(f + a, f + b);
  for (int a = 0; a < 2 * u; ++a) e.emplace_back(f + a, f + 2 * u + a);
  auto inst = make_instance(Problem::CapVc, Graph(f + 4 * u, e), 2 * lam * k + k);
  for (int s = 0; s < f; ++s) inst.cap[static_cast<std::size_t>(s)] = 2 * lam;
  for (int i = 1; i <= u; ++i) {
    auto zi = z[static_cast<std::size_t>(i - 1)];
    inst.cap[static_cast<std::size_t>(u1(i - 1))] = zi + 2 * lam * k - i;
    inst.cap[static_cast<std::size_t>(u2(i - 1))] = zi + i - 1;
  }
  return inst;
}

GadgetReport verify_capvc_lowerbound(const SetCoverInstance& sc, const Instance& gadget) {
  GadgetReport r;
  auto lam = static_cast<std::uint64_t>(sc.lambda);
  auto k = static_cast<std::uint64_t>(sc.k);
  r.closure = closure_number(gadget.graph);
  r.closure_bound = 2 * sc.lambda + 1;
  r.edges = gadget.graph.m();
  r.expected_edges = 2 * lam * k + 2 * lam * sc.family.size() + lam * k * (2 * lam * k - 1);
  r.budget = gadget.k;
  r.expected_budget = 2 * static_cast<std::int64_t>(sc.lambda) * sc.k + sc.k;
  return r;
}

std::vector<int> composition_coordinates(int index, int t, int q) {
  std::vector<int> x(static_cast<std::size_t>(q));
  for (int r = q - 1; r >= 0; --r) {
    x[static_cast<std::size_t>(r)] = index % t;
    index /= t;
  }
  return x;
}

namespace {

int int_pow(int b, int e) {
  int r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

struct InputShape {
  int max_part = 0;
  int max_degree = 0;
};

InputShape check_composition_input(const std::vector<Instance>& instances, int t, int q, int k) {
  if (t < 2 || q < 2 || k < 1) throw invalid_input("composition needs t >= 2, q >= 2, k >= 1");
  if (static_cast<int>(instances.size()) != int_pow(t, q))
    throw invalid_input("composition needs exactly t^q instances, got " + std::to_string(instances.size()));
  InputShape shape;
  for (const auto& inst : instances) {
    if (inst.kind != Problem::Mcis || inst.k != k)
      throw invalid_input("composition inputs must be multicolored independent set instances with k parts");
    validate(inst);
    std::vector<VertexSet> parts(static_cast<std::size_t>(k));
    for (int v = 0; v < inst.n(); ++v) parts[static_cast<std::size_t>(inst.part[static_cast<std::size_t>(v)])].push_back(v);
    for (const auto& p : parts) {
      if (p.size() > 3) throw invalid_input("composition inputs need parts of size at most 3");
      if (!is_clique(inst.graph, p)) throw invalid_input("composition inputs need every part to be a clique");
      shape.max_part = std::max(shape.max_part, static_cast<int>(p.size()));
    }
    if (inst.graph.max_degree() > 3) throw invalid_input("composition inputs need maximum degree at most 3");
    shape.max_degree = std::max(shape.max_degree, inst.graph.max_degree());
  }
  return shape;
}

}  // namespace

Composition gen_is_composition(const std::vector<Instance>& instances, int t, int q, int k) {
  check_composition_input(instances, t, q, k);
  Composition comp;
  comp.t = t;
  comp.q = q;
  comp.k = k;
  auto& labels = comp.labels;
  std::vector<int> offset;
  for (std::size_t x = 0; x < instances.size(); ++x) {
    offset.push_back(static_cast<int>(labels.size()));
    const auto& inst = instances[x];
    for (int v = 0; v < inst.n(); ++v) {
      CompositionLabel l;
      l.kind = CompositionLabel::Kind::Instance;
      l.layer = inst.part[static_cast<std::size_t>(v)];
      l.instance = static_cast<int>(x);
      l.vertex = v;
      labels.push_back(l);
    }
  }
  int path_len = 2 * t - 2;
  int selector_base = static_cast<int>(labels.size());
  auto selector = [&](int i, int r, int pos) { return selector_base + (i * q + r) * path_len + (pos - 1); };
  for (int i = 0; i < k; ++i)
    for (int r = 0; r < q; ++r)
      for (int pos = 1; pos <= path_len; ++pos) {
        CompositionLabel l;
        l.kind = CompositionLabel::Kind::Selector;
        l.layer = i;
        l.dim = r;
        l.position = pos;
        l.j = pos % 2 == 1 ? (pos + 1) / 2 : pos / 2 + 1;
        l.slot = pos % 2 == 1 ? 1 : 2;
        labels.push_back(l);
      }
  // p_{r,j,1} sits at position 2j−1 and p_{r,j,2} at position 2j−2.
  auto p1 = [&](int i, int r, int j) { return selector(i, r, 2 * j - 1); };
  auto p2 = [&](int i, int r, int j) { return selector(i, r, 2 * j - 2); };

  std::vector<Edge> e;
  for (std::size_t x = 0; x < instances.size(); ++x)
    for (auto [a, b] : instances[x].graph.edges()) e.emplace_back(offset[x] + a, offset[x] + b);
  for (int i = 0; i < k; ++i)
    for (int r = 0; r < q; ++r)
      for (int pos = 1; pos < path_len; ++pos) e.emplace_back(selector(i, r, pos), selector(i, r, pos + 1));
  for (int i = 0; i < k; ++i) {
    for (int r = 0; r < q; ++r) {
      for (int j = 1; j <= t; ++j) {
        VertexSet members;
        if (j <= t - 1) members.push_back(p1(i, r, j));
        if (j >= 2) members.push_back(p2(i, r, j));
        for (std::size_t x = 0; x < instances.size(); ++x) {
          if (composition_coordinates(static_cast<int>(x), t, q)[static_cast<std::size_t>(r)] != j - 1) continue;
          const auto& inst = instances[x];
          for (int v = 0; v < inst.n(); ++v)
            if (inst.part[static_cast<std::size_t>(v)] == i) members.push_back(offset[x] + v);
        }
        for (std::size_t a = 0; a < members.size(); ++a)
          for (std::size_t b = a + 1; b < members.size(); ++b) e.emplace_back(members[a], members[b]);
      }
    }
  }
  for (int i = 0; i + 1 < k; ++i)
    for (int r = 0; r < q; ++r)
      for (int j = 1; j <= t - 1; ++j) {
        e.emplace_back(p1(i, r, j), p2(i + 1, r, j + 1));
        e.emplace_back(p1(i + 1, r, j), p2(i, r, j + 1));
      }
  comp.graph = make_instance(Problem::Is, Graph(static_cast<int>(labels.size()), e), q * k * t - q * k + k);
  return comp;
}

CompositionReport verify_composition(const Composition& comp, const std::vector<Instance>& instances, OracleLimits lim) {
  auto shape = check_composition_input(instances, comp.t, comp.q, comp.k);
  CompositionReport r;
  const Graph& h = comp.graph.graph;
  int t = comp.t;
  int q = comp.q;
  int k = comp.k;
  r.budget_ok = comp.graph.k == q * k * t - q * k + k;

  r.paths_ok = static_cast<int>(comp.labels.size()) == h.n();
  for (int i = 0; i < k && r.paths_ok; ++i) {
    for (int r_dim = 0; r_dim < q; ++r_dim) {
      std::vector<int> by_pos(static_cast<std::size_t>(2 * t - 1), -1);
      int count = 0;
      for (int v = 0; v < h.n(); ++v) {
        const auto& l = comp.labels[static_cast<std::size_t>(v)];
        if (l.kind != CompositionLabel::Kind::Selector || l.layer != i || l.dim != r_dim) continue;
        ++count;
        bool label_ok = l.position >= 1 && l.position <= 2 * t - 2 &&
                        (l.position % 2 == 1 ? l.slot == 1 && l.position == 2 * l.j - 1
                                             : l.slot == 2 && l.position == 2 * (l.j - 1));
        if (!label_ok || by_pos[static_cast<std::size_t>(l.position)] >= 0) {
          r.paths_ok = false;
          continue;
        }
        by_pos[static_cast<std::size_t>(l.position)] = v;
      }
      if (count != 2 * t - 2) r.paths_ok = false;
      for (int pos = 1; pos + 1 <= 2 * t - 2 && r.paths_ok; ++pos)
        if (!h.adjacent(by_pos[static_cast<std::size_t>(pos)], by_pos[static_cast<std::size_t>(pos + 1)]))
          r.paths_ok = false;
    }
  }

  r.closure = closure_number(h);
  auto s = static_cast<std::uint64_t>(q * shape.max_part);
  r.closure_bound = static_cast<std::uint64_t>(kCompositionClosureFactor) * s * s *
                        static_cast<std::uint64_t>(int_pow(t, q - 2)) +
                    static_cast<std::uint64_t>(shape.max_degree) + 2;

  try {
    bool any = false;
    for (const auto& inst : instances) any = any || solve_multicolored_is_exact(inst, lim).yes;
    r.composed_yes = solve_is_exact(comp.graph, lim).yes;
    r.any_input_yes = any;
    r.equivalence_checked = true;
  } catch (const oracle_cap_exceeded&) {
    r.equivalence_checked = false;
  }
  return r;
}

Instance gen_random_mcis(int k, int max_part, int max_degree, double p, std::uint64_t seed) {
  if (k < 1 || max_part < 1) throw invalid_input("need k >= 1 and max_part >= 1");
  require_probability(p);
  Rng rng(seed);
  std::vector<int> part;
  for (int i = 0; i < k; ++i) {
    int size = std::uniform_int_distribution<int>(1, max_part)(rng);
    for (int j = 0; j < size; ++j) part.push_back(i);
  }
  int n = static_cast<int>(part.size());
  std::vector<int> deg(static_cast<std::size_t>(n), 0);
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (part[static_cast<std::size_t>(u)] == part[static_cast<std::size_t>(v)]) {
        e.emplace_back(u, v);
        ++deg[static_cast<std::size_t>(u)];
        ++deg[static_cast<std::size_t>(v)];
      }
  if (*std::max_element(deg.begin(), deg.end()) > max_degree)
    throw invalid_input("parts of this size exceed the degree limit");
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      if (part[static_cast<std::size_t>(u)] == part[static_cast<std::size_t>(v)] || !coin(rng, p)) continue;
      if (deg[static_cast<std::size_t>(u)] >= max_degree || deg[static_cast<std::size_t>(v)] >= max_degree) continue;
      e.emplace_back(u, v);
      ++deg[static_cast<std::size_t>(u)];
      ++deg[static_cast<std::size_t>(v)];
    }
  auto inst = make_instance(Problem::Mcis, Graph(n, e), k);
  inst.part = part;
  return inst;
}

}  // namespace ck
