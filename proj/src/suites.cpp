#include "closure_kernels/suites.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <numeric>
#include <sstream>

#include "closure_kernels/capvc.hpp"
#include "closure_kernels/closure.hpp"
#include "closure_kernels/combinatorics.hpp"
#include "closure_kernels/convc.hpp"
#include "closure_kernels/ds.hpp"
#include "closure_kernels/generators.hpp"
#include "closure_kernels/im.hpp"
#include "closure_kernels/io.hpp"
#include "closure_kernels/pipeline.hpp"
#include "closure_kernels/ramsey.hpp"

namespace ck {

namespace {

using Rng = std::mt19937_64;
using Clock = std::chrono::steady_clock;

int uni(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

// Random graph on `base` vertices plus false twins of random base vertices, n <= 11.
Graph twin_graph(Rng& rng, double p) {
  int base = uni(rng, 2, 8);
  int extra = uni(rng, 0, 11 - base);
  auto g = gen_random_graph(base, rng(), p).graph;
  auto e = g.edges();
  for (int i = 0; i < extra; ++i) {
    int src = uni(rng, 0, base - 1);
    for (int u : g.neighbors(src)) e.emplace_back(u, base + i);
  }
  return Graph(base + extra, e);
}

Instance sample_capvc(Rng& rng) {
  auto inst = make_instance(Problem::CapVc, twin_graph(rng, 0.35), uni(rng, 0, 4));
  for (auto& c : inst.cap) c = uni(rng, 0, 4);
  return inst;
}

Instance sample_convc(Rng& rng) { return make_instance(Problem::ConVc, twin_graph(rng, 0.4), uni(rng, 0, 4)); }

Instance sample_aconvc(Rng& rng) {
  auto inst = make_instance(Problem::AnnotatedConVc, twin_graph(rng, 0.4), uni(rng, 0, 4));
  for (auto& r : inst.red) r = uni(rng, 0, 5) == 0;
  return inst;
}

Instance sample_coc(Rng& rng) {
  return make_instance(Problem::Coc, twin_graph(rng, 0.3 + 0.1 * uni(rng, 0, 2)), uni(rng, 0, 4), uni(rng, 1, 2));
}

Instance sample_im(Rng& rng) {
  return make_instance(Problem::Im, twin_graph(rng, 0.25 + 0.5 * uni(rng, 0, 1)), uni(rng, 0, 4));
}

Instance sample_ds(Rng& rng) {
  auto g = gen_random_split(uni(rng, 1, 11), rng(), 0.2 + 0.15 * uni(rng, 0, 4)).graph;
  return make_instance(Problem::Ds, g, uni(rng, 0, 4));
}

// Undecided split instance without isolated vertices.
Instance sample_ds_reduced(Rng& rng) {
  for (int attempt = 0;; ++attempt) {
    auto inst = sample_ds(rng);
    auto r = rr_ds_isolated(inst);
    if (!r.decided || attempt >= 50) return r.instance;
  }
}

// Split instance with the nc rule exhausted, so that the sunflower rule applies.
Instance sample_ds_nc_free(Rng& rng) {
  for (int attempt = 0;; ++attempt) {
    auto cur = sample_ds_reduced(rng);
    for (;;) {
      auto r = rr_dss_nc(cur);
      if (!r.applied) break;
      auto iso = rr_ds_isolated(r.instance);
      cur = iso.instance;
      if (iso.decided) break;
    }
    if ((cur.n() > 0 && !rr_ds_isolated(cur).applied) || attempt >= 50) return cur;
  }
}

Reduced as_reduced(const Instance& inst, const KernelResult& kr) {
  Reduced r;
  r.instance = kr.instance;
  r.applied = !kr.trace.empty();
  for (const auto& app : kr.trace) r.edits.insert(r.edits.end(), app.edits.begin(), app.edits.end());
  r.decided = kr.decided;
  (void)inst;
  return r;
}

std::string describe(const Instance& inst) {
  std::ostringstream s;
  s << problem_name(inst.kind) << " n=" << inst.n() << " m=" << inst.graph.m() << " k=" << inst.k;
  return s.str();
}

void fail(SuiteResult& r, const std::string& why, const std::optional<Instance>& inst = std::nullopt) {
  if (r.failures == 0) {
    r.detail += (r.detail.empty() ? "" : "; ") + std::string("first failure: ") + why;
    r.counterexample = inst;
  }
  ++r.failures;
}

bool matches(const std::string& name, const std::string& problem) {
  if (problem == "all") return true;
  auto prefix = name.substr(0, name.find('/'));
  if (problem == "convc") return prefix == "convc" || prefix == "aconvc";
  return prefix == problem;
}

}  // namespace

SuiteResult check_rule_safety(const RuleSpec& spec, const SuiteOptions& opt) {
  auto t0 = Clock::now();
  SuiteResult res;
  res.name = "rule " + spec.name;
  std::uint64_t fired = 0;
  std::uint64_t yes = 0;
  for (int i = 0; i < opt.trials; ++i) {
    Rng rng(opt.seed + static_cast<std::uint64_t>(i));
    Instance inst = spec.sample(rng);
    ++res.trials;
    try {
      bool before = solve(inst, opt.limits).yes;
      yes += before;
      auto r = spec.rule(inst);
      fired += r.applied;
      if (solve(r.instance, opt.limits).yes != before) {
        fail(res, "rule changed the answer on trial " + std::to_string(i) + " (" + describe(inst) + ")", inst);
        continue;
      }
      auto kr = spec.pipeline(inst);
      if (solve(kr.instance, opt.limits).yes != before) {
        fail(res, "pipeline changed the answer on trial " + std::to_string(i) + " (" + describe(inst) + ")", inst);
        continue;
      }
      if (replay(inst, kr.trace) != kr.instance)
        fail(res, "trace does not replay on trial " + std::to_string(i) + " (" + describe(inst) + ")", inst);
    } catch (const std::exception& e) {
      fail(res, "trial " + std::to_string(i) + " threw: " + e.what(), inst);
    }
  }
  res.detail = "fired " + std::to_string(fired) + ", yes " + std::to_string(yes) +
               (res.detail.empty() ? "" : "; " + res.detail);
  res.seconds = seconds_since(t0);
  return res;
}

std::vector<RuleSpec> rule_specs() {
  auto capvc_kernel = [](const Instance& i) { return kernelize_capvc(i); };
  auto gamma_kernel = [](const Instance& i) { return kernelize_convc_gamma(i); };
  auto annotated_kernel = [](const Instance& i) { return kernelize_annotated_convc(i); };
  auto coc_kernel = [](const Instance& i) { return kernelize_coc(i); };
  auto im_kernel = [](const Instance& i) { return kernelize_im(i); };
  auto ds_kernel = [](const Instance& i) { return kernelize_ds_split(i); };
  return {
      {"capvc/twin-crown", sample_capvc, rr_twin_crown, capvc_kernel},
      {"convc/twinset", sample_convc, rr_twinset, gamma_kernel},
      {"convc/c-pipeline", sample_convc,
       [](const Instance& i) { return as_reduced(i, kernelize_convc_c(i)); },
       [](const Instance& i) { return kernelize_convc_c(i); }},
      {"aconvc/isolated", sample_aconvc, rr_annotated_trivial, annotated_kernel},
      {"aconvc/simplicial", sample_aconvc, rr_simplicial, annotated_kernel},
      {"coc/small-components", sample_coc, rr_coc_small_components, coc_kernel},
      {"coc/ell-twins", sample_coc, rr_coc_twins, coc_kernel},
      {"im/delv", sample_im, [](const Instance& i) { return rr_im_delv(i); }, im_kernel},
      {"im/vpos", sample_im, rr_im_vpos, im_kernel},
      {"im/twin", sample_im, rr_im_twin, im_kernel},
      {"ds/isolated", sample_ds, rr_ds_isolated, ds_kernel},
      {"ds/nc", sample_ds_reduced, rr_dss_nc, ds_kernel},
      {"ds/sunflower", sample_ds_nc_free, rr_dss_sunflower, ds_kernel},
      {"ds/twin", sample_ds_reduced, [](const Instance& i) { return rr_dss_twin(i); }, ds_kernel},
  };
}

RuleSpec faulty_rule_spec() {
  auto drop = [](const Instance& inst) {
    if (inst.n() == 0) return unchanged(inst);
    int best = 0;
    for (int v = 1; v < inst.n(); ++v)
      if (inst.graph.degree(v) > inst.graph.degree(best)) best = v;
    return reduce_with(inst, {delete_edit(inst, {best})});
  };
  return {"faulty/im-drop-max-degree", sample_im, drop, [](const Instance& i) { return kernelize_im(i); }};
}

std::vector<SuiteResult> suite_rule_safety(const SuiteOptions& opt, const std::string& problem) {
  std::vector<SuiteResult> out;
  for (const auto& spec : rule_specs())
    if (matches(spec.name, problem)) out.push_back(check_rule_safety(spec, opt));
  return out;
}

SuiteResult suite_parameters(const SuiteOptions& opt) {
  auto t0 = Clock::now();
  SuiteResult res;
  res.name = "parameters";
  Rng rng(opt.seed);
  std::uint64_t by_permutation = 0;
  for (int i = 0; i < opt.trials; ++i) {
    int n = uni(rng, 1, 8);
    auto g = gen_random_graph(n, rng(), 0.1 * uni(rng, 1, 9)).graph;
    ++res.trials;
    auto ord = weak_closure_ordering(g);
    auto as_instance = [&] { return make_instance(Problem::Plain, g, 0); };
    int exact = gamma_exact(g);
    if (ord.gamma != exact) {
      fail(res, "greedy gamma " + std::to_string(ord.gamma) + " vs exact " + std::to_string(exact), as_instance());
      continue;
    }
    if (n <= 6) {
      std::vector<int> perm(static_cast<std::size_t>(n));
      std::iota(perm.begin(), perm.end(), 0);
      int best = 1 << 20;
      do best = std::min(best, make_ordering(g, perm).gamma);
      while (std::next_permutation(perm.begin(), perm.end()));
      ++by_permutation;
      if (best != ord.gamma) fail(res, "greedy gamma differs from the permutation minimum", as_instance());
    }
    if (closure_number(g) < ord.gamma) fail(res, "c < gamma", as_instance());
    if (degeneracy(g).d + 1 < ord.gamma) fail(res, "d + 1 < gamma", as_instance());
    if (check_observation1(g, ord)) fail(res, "ordering violates the common-neighbour bound", as_instance());
  }
  res.detail = std::to_string(by_permutation) + " also checked against all orderings" +
               (res.detail.empty() ? "" : "; " + res.detail);
  res.seconds = seconds_since(t0);
  return res;
}

SuiteResult suite_capvc_gadget(const SuiteOptions& opt) {
  auto t0 = Clock::now();
  SuiteResult res;
  res.name = "capvc lower-bound gadget";
  Rng rng(opt.seed);
  int yes = 0;
  for (int i = 0; i < opt.trials; ++i) {
    int k = 1 + i % 2;
    int sets = uni(rng, 1, k == 1 ? 5 : 12);
    bool planted = sets >= k && uni(rng, 0, 2) == 0;
    auto sc = gen_random_set_cover(3, k, sets, rng(), planted);
    auto g = gen_capvc_lowerbound(sc);
    ++res.trials;
    auto rep = verify_capvc_lowerbound(sc, g);
    if (!rep.ok()) {
      fail(res, "gadget check: closure " + std::to_string(rep.closure) + ", edges " + std::to_string(rep.edges) +
                    " vs " + std::to_string(rep.expected_edges), g);
      continue;
    }
    bool want = solve_exact_set_cover(sc).yes;
    auto got = solve_capvc_exact(g, {64, 1000});
    yes += want;
    if (got.yes != want) fail(res, "answers differ on trial " + std::to_string(i), g);
    else if (got.yes && !check_capvc(g, got.witness, got.assignment)) fail(res, "invalid capvc witness", g);
  }
  res.detail = "yes " + std::to_string(yes) + ", no " + std::to_string(res.trials - static_cast<std::uint64_t>(yes)) +
               (res.detail.empty() ? "" : "; " + res.detail);
  res.seconds = seconds_since(t0);
  return res;
}

SuiteResult suite_composition(const SuiteOptions& opt) {
  auto t0 = Clock::now();
  SuiteResult res;
  res.name = "is composition";
  auto micro = [](bool yes) {
    auto i = make_instance(Problem::Mcis, Graph(yes ? 1 : 0), 1);
    i.part.assign(static_cast<std::size_t>(i.n()), 0);
    return i;
  };
  for (int pattern = 0; pattern < 16; ++pattern) {
    std::vector<Instance> xs;
    for (int x = 0; x < 4; ++x) xs.push_back(micro(pattern >> x & 1));
    auto comp = gen_is_composition(xs, 2, 2, 1);
    auto rep = verify_composition(comp, xs);
    ++res.trials;
    if (!rep.ok() || !rep.equivalence_checked || rep.composed_yes != (pattern != 0))
      fail(res, "pattern " + std::to_string(pattern), comp.graph);
  }
  Rng rng(opt.seed);
  int extra = std::max(1, opt.trials / 10);
  for (int i = 0; i < extra; ++i) {
    std::vector<Instance> xs;
    for (int x = 0; x < 4; ++x) {
      if (uni(rng, 0, 4) < 3) {
        auto no = make_instance(Problem::Mcis, Graph(2, {{0, 1}}), 2);
        no.part = {0, 1};
        xs.push_back(no);
      } else {
        xs.push_back(gen_random_mcis(2, 3, 3, 0.9, rng()));
      }
    }
    auto comp = gen_is_composition(xs, 2, 2, 2);
    auto rep = verify_composition(comp, xs);
    ++res.trials;
    if (!rep.ok() || !rep.equivalence_checked) fail(res, "random k = 2 input " + std::to_string(i), comp.graph);
  }
  res.detail = "16 micro patterns and " + std::to_string(extra) + " random k = 2 grids" +
               (res.detail.empty() ? "" : "; " + res.detail);
  res.seconds = seconds_since(t0);
  return res;
}

std::vector<SuiteResult> suite_kernel_bounds(const SuiteOptions& opt, const std::string& problem) {
  struct Family {
    std::string name;
    std::function<Instance(Rng&)> sample;
    std::function<std::pair<bool, std::vector<BoundCheck>>(const Instance&)> bounds;  // decided, checks
  };
  std::vector<Family> families{
      {"capvc", sample_capvc,
       [](const Instance& i) {
         auto kr = kernelize_capvc(i);
         return std::pair{kr.decided.has_value(), std::vector<BoundCheck>{capvc_size_bound(kr.instance)}};
       }},
      {"convc", sample_convc,
       [](const Instance& i) {
         auto kr = kernelize_convc_gamma(i);
         return std::pair{kr.decided.has_value(), std::vector<BoundCheck>{convc_gamma_size_bound(kr.instance)}};
       }},
      {"aconvc", sample_aconvc,
       [](const Instance& i) {
         auto kr = kernelize_annotated_convc(i);
         return std::pair{kr.decided.has_value(), std::vector<BoundCheck>{annotated_size_bound(kr.instance)}};
       }},
      {"im", sample_im,
       [](const Instance& i) {
         auto kr = kernelize_im(i);
         return std::pair{kr.decided.has_value(), std::vector<BoundCheck>{im_size_bound(kr.instance)}};
       }},
      {"ds", sample_ds,
       [](const Instance& i) {
         auto kr = kernelize_ds_split(i);
         bool decided = kr.decided.has_value() || kr.instance.kind != Problem::Ds;
         return std::pair{decided, decided ? std::vector<BoundCheck>{} : ds_split_size_bounds(kr.instance)};
       }},
  };
  std::vector<SuiteResult> out;
  for (const auto& fam : families) {
    if (!matches(fam.name, problem)) continue;
    auto t0 = Clock::now();
    SuiteResult res;
    res.name = "kernel size " + fam.name;
    std::uint64_t decided = 0;
    std::map<std::string, std::uint64_t> violated;
    for (int i = 0; i < opt.trials; ++i) {
      Rng rng(opt.seed + static_cast<std::uint64_t>(i));
      auto inst = fam.sample(rng);
      if (!solve(inst, opt.limits).yes) continue;
      auto [dec, checks] = fam.bounds(inst);
      ++res.trials;
      if (dec) {
        ++decided;
        continue;
      }
      for (const auto& b : checks) {
        if (b.holds()) continue;
        ++violated[b.name];
        fail(res, b.name + ": " + std::to_string(b.value) + " vs " + std::to_string(b.bound) + " on " + describe(inst),
             inst);
      }
    }
    std::string head = std::to_string(decided) + " decided by the kernel";
    for (const auto& [name, count] : violated) head += ", " + name + " violated " + std::to_string(count) + "x";
    res.detail = head + (res.detail.empty() ? "" : "; " + res.detail);
    res.seconds = seconds_since(t0);
    out.push_back(std::move(res));
  }
  return out;
}

SuiteResult suite_gammaomega(const SuiteOptions& opt) {
  auto t0 = Clock::now();
  SuiteResult res;
  res.name = "biclique certificate";
  Rng rng(opt.seed);
  std::uint64_t non_vacuous = 0;
  for (int i = 0; i < opt.trials; ++i) {
    int n = uni(rng, 2, 18);
    double p = 0.1 * uni(rng, 1, 9);
    Graph g = i % 2 == 0 ? gen_random_bipartite(n, rng(), p).graph : gen_random_graph(n, rng(), p * 0.5).graph;
    ++res.trials;
    auto cert = rho_biclique_certificate(g);
    if (2 * cert.rho <= n) ++non_vacuous;
    if (cert.violation) fail(res, "K_{rho,rho} found with rho = " + std::to_string(cert.rho), make_instance(Problem::Plain, g, 0));
  }
  res.detail = std::to_string(non_vacuous) + " graphs large enough to host K_{rho,rho}" +
               (res.detail.empty() ? "" : "; " + res.detail);
  res.seconds = seconds_since(t0);
  return res;
}

SuiteResult suite_ramsey(const SuiteOptions& opt) {
  auto t0 = Clock::now();
  SuiteResult res;
  res.name = "ramsey guarantee";
  Rng rng(opt.seed);
  int per_n = std::max(1, opt.trials / 200);
  std::uint64_t by_blocks = 0;
  for (int gamma = 1; gamma <= 2; ++gamma)
    for (int a = 1; a <= 4; ++a)
      for (int b = 1; b <= 4; ++b) {
        auto bound = r_gamma_bound(a, b, gamma);
        for (auto n = bound; n <= 20; ++n)
          for (int t = 0; t < per_n; ++t) {
            auto gen = gen_random_weakly_closed(static_cast<int>(n), gamma, rng(), 0.1 * uni(rng, 1, 9));
            ++res.trials;
            auto w = clique_or_independent_set(gen.graph, a, b);
            bool ok = w && (w->kind == RamseyWitness::Kind::Clique
                                ? static_cast<int>(w->vertices.size()) == a && is_clique(gen.graph, w->vertices)
                                : static_cast<int>(w->vertices.size()) == b && is_independent_set(gen.graph, w->vertices));
            if (!ok) {
              fail(res, "no witness for a=" + std::to_string(a) + " b=" + std::to_string(b) + " gamma=" +
                            std::to_string(gamma) + " n=" + std::to_string(n),
                   make_instance(Problem::Plain, gen.graph, 0));
              continue;
            }
            by_blocks += ramsey_blocks(gen.graph, a, b).has_value();
          }
      }
  res.detail = std::to_string(by_blocks) + " found by the block construction alone" +
               (res.detail.empty() ? "" : "; " + res.detail);
  res.seconds = seconds_since(t0);
  return res;
}

SuiteResult suite_vclp(const SuiteOptions& opt) {
  auto t0 = Clock::now();
  SuiteResult res;
  res.name = "vertex cover LP";
  Rng rng(opt.seed);
  for (int i = 0; i < opt.trials; ++i) {
    int n = uni(rng, 0, 10);
    auto g = gen_random_graph(n, rng(), 0.1 * uni(rng, 1, 9)).graph;
    ++res.trials;
    // minimum of Σ x over x ∈ {0, 1, 2}^V with x_u + x_v >= 2 on every edge (doubled values)
    std::vector<int> x(static_cast<std::size_t>(n), 0);
    int best = 2 * n;
    auto rec = [&](auto&& self, int v, int sum) -> void {
      if (sum >= best) return;
      if (v == n) {
        best = sum;
        return;
      }
      for (int val = 0; val <= 2; ++val) {
        bool ok = true;
        for (int u : g.neighbors(v))
          if (u < v && x[static_cast<std::size_t>(u)] + val < 2) ok = false;
        if (!ok) continue;
        x[static_cast<std::size_t>(v)] = val;
        self(self, v + 1, sum + val);
      }
      x[static_cast<std::size_t>(v)] = 0;
    };
    rec(rec, 0, 0);
    auto lp = vclp_half_integral(g);
    bool feasible = true;
    for (auto [u, v] : g.edges())
      if (lp.doubled[static_cast<std::size_t>(u)] + lp.doubled[static_cast<std::size_t>(v)] < 2) feasible = false;
    auto counted = static_cast<std::int64_t>(lp.v_half.size() + 2 * lp.v1.size());
    if (!feasible || lp.doubled_objective != best || counted != best)
      fail(res, "LP objective " + std::to_string(lp.doubled_objective) + "/2 vs enumeration " + std::to_string(best) + "/2",
           make_instance(Problem::Plain, g, 0));
  }
  res.seconds = seconds_since(t0);
  return res;
}

SuiteResult suite_determinism(const SuiteOptions& opt) {
  auto t0 = Clock::now();
  SuiteResult res;
  res.name = "determinism";
  int runs = std::max(1, std::min(opt.trials, 40));
  auto once = [&](std::uint64_t seed) {
    std::ostringstream out;
    Rng rng(seed);
    const std::pair<const char*, Instance> inputs[] = {
        {"capvc", sample_capvc(rng)}, {"convc", sample_convc(rng)}, {"aconvc", sample_aconvc(rng)},
        {"coc", sample_coc(rng)},     {"im", sample_im(rng)},       {"ds", sample_ds(rng)},
    };
    for (const auto& [pipe, inst] : inputs) {
      auto rep = run_kernel(pipe, inst);
      out << write_instance(rep.result.instance) << trace_json(rep);
      if (std::string(pipe) == "convc") {
        auto crep = run_kernel(pipe, inst, {ConvcMode::C, 4});
        out << write_instance(crep.result.instance) << trace_json(crep);
      }
    }
    out << write_instance(make_instance(Problem::Plain, gen_random_weakly_closed(14, 2, seed).graph, 0));
    out << write_instance(make_instance(Problem::Plain, gen_random_split(10, seed).graph, 0));
    out << write_instance(make_instance(Problem::Plain, gen_random_bipartite(10, seed).graph, 0));
    out << write_instance(make_instance(Problem::Plain, gen_random_graph(10, seed).graph, 0));
    auto sc = gen_random_set_cover(3, 2, 6, seed, true);
    out << write_instance(gen_capvc_lowerbound(sc));
    std::vector<Instance> xs;
    for (int x = 0; x < 4; ++x) xs.push_back(gen_random_mcis(2, 3, 3, 0.5, seed + static_cast<std::uint64_t>(x)));
    out << write_instance(xs.front()) << write_instance(gen_is_composition(xs, 2, 2, 2).graph);
    return out.str();
  };
  for (int i = 0; i < runs; ++i) {
    auto seed = opt.seed + static_cast<std::uint64_t>(i);
    ++res.trials;
    if (once(seed) != once(seed)) fail(res, "outputs differ for seed " + std::to_string(seed));
  }
  res.detail = std::to_string(runs) + " seeds, every pipeline and generator";
  res.seconds = seconds_since(t0);
  return res;
}

std::vector<SuiteResult> run_suites(const std::string& problem, const SuiteOptions& opt) {
  static const std::vector<std::string> known{"all", "params", "capvc", "convc", "coc", "im", "ds", "ramsey", "is"};
  if (std::find(known.begin(), known.end(), problem) == known.end())
    throw invalid_input("unknown suite selection '" + problem + "'");
  std::vector<SuiteResult> out;
  auto add = [&](std::vector<SuiteResult> rs) {
    for (auto& r : rs) out.push_back(std::move(r));
  };
  bool all = problem == "all";
  if (all || problem == "params") out.push_back(suite_parameters(opt));
  add(suite_rule_safety(opt, problem));
  if (all || problem == "capvc") out.push_back(suite_capvc_gadget(opt));
  if (all || problem == "is") out.push_back(suite_composition(opt));
  add(suite_kernel_bounds(opt, problem));
  if (all || problem == "ds") out.push_back(suite_gammaomega(opt));
  if (all || problem == "ramsey") out.push_back(suite_ramsey(opt));
  if (all || problem == "params" || problem == "im") out.push_back(suite_vclp(opt));
  if (all) out.push_back(suite_determinism(opt));
  return out;
}

}  // namespace ck
