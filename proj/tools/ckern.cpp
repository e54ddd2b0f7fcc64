#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "closure_kernels/generators.hpp"
#include "closure_kernels/io.hpp"
#include "closure_kernels/oracles.hpp"
#include "closure_kernels/pipeline.hpp"
#include "closure_kernels/suites.hpp"

namespace {

using namespace ck;

enum Exit { kOk = 0, kSuiteFailure = 1, kUsage = 2, kParse = 3 };

struct Common {
  std::optional<std::int64_t> k;
  std::optional<int> ell;
  std::uint64_t seed = 1;
  int trials = 1000;
  int oracle_cap = kWideLimits.max_vertices;
  std::string mode = "gamma";
  std::string output;
};

OracleLimits limits(const Common& c) {
  std::size_t all_pairs = static_cast<std::size_t>(c.oracle_cap) * static_cast<std::size_t>(std::max(c.oracle_cap - 1, 0)) / 2;
  return {c.oracle_cap, std::max(kWideLimits.max_edges, all_pairs)};
}

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-")
    std::cout << text;
  else
    write_text_file(path, text);
}

// A bare graph file takes the requested kind; any other kind must match.
Instance load(const std::string& path, Problem kind, const Common& c) {
  Instance inst = read_instance_file(path).instance;
  if (inst.kind == Problem::Plain && kind != Problem::Plain) {
    auto origin = inst.origin;
    inst = make_instance(kind, inst.graph, inst.k, inst.ell);
    inst.origin = origin;
  }
  if (inst.kind != kind)
    throw invalid_input("'" + path + "' holds a " + problem_name(inst.kind) + " instance, expected " + problem_name(kind));
  if (c.k) inst.k = *c.k;
  if (c.ell) inst.ell = *c.ell;
  validate(inst);
  return inst;
}

Problem pipeline_kind(const std::string& pipeline) {
  if (pipeline == "capvc") return Problem::CapVc;
  if (pipeline == "convc") return Problem::ConVc;
  if (pipeline == "aconvc") return Problem::AnnotatedConVc;
  if (pipeline == "coc") return Problem::Coc;
  if (pipeline == "im") return Problem::Im;
  if (pipeline == "ds") return Problem::Ds;
  throw invalid_input("unknown pipeline '" + pipeline + "' (capvc, convc, aconvc, coc, im, ds)");
}

int cmd_params(const std::string& path, const Common& c) {
  Graph g = read_instance_file(path).instance.graph;
  auto p = graph_parameters(g, c.oracle_cap);
  std::cout << "n " << p["n"] << "\nm " << p["m"] << "\nc " << p["c"] << "\ngamma " << p["gamma"]
            << "\ndegeneracy " << p["degeneracy"] << '\n';
  if (p.count("omega"))
    std::cout << "omega " << p["omega"] << '\n';
  else
    std::cout << "omega skipped (n > --oracle-cap " << c.oracle_cap << ")\n";
  bool below_c = p["gamma"] <= p["c"];
  bool below_d = p["gamma"] <= p["degeneracy"] + 1;
  std::cout << "check gamma<=c " << (below_c ? "ok" : "VIOLATED") << "\ncheck gamma<=d+1 "
            << (below_d ? "ok" : "VIOLATED") << '\n';
  return below_c && below_d ? kOk : kSuiteFailure;
}

int cmd_kernel(const std::string& pipeline, const std::string& path, const std::string& trace_path, const Common& c) {
  KernelOptions opt;
  if (c.mode == "c")
    opt.mode = ConvcMode::C;
  else if (c.mode != "gamma")
    throw invalid_input("--mode must be gamma or c");
  Instance inst = load(path, pipeline_kind(pipeline), c);
  KernelReport rep = run_kernel(pipeline, inst, opt);
  emit(c.output, write_instance(rep.result.instance));
  if (!trace_path.empty()) emit(trace_path, trace_json(rep));
  std::cerr << rep.pipeline << ": n " << inst.n() << " -> " << rep.result.instance.n() << ", "
            << rep.result.trace.size() << " steps, decided "
            << (rep.result.decided ? (*rep.result.decided ? "yes" : "no") : "none") << '\n';
  return kOk;
}

int cmd_solve(const std::string& problem, const std::string& path, const Common& c) {
  Instance inst = load(path, parse_problem(problem), c);
  OracleResult r = solve(inst, limits(c));
  if (r.yes && !check(inst, r)) throw std::logic_error("oracle witness failed validation");
  std::ostringstream out;
  out << "answer " << (r.yes ? "yes" : "no") << '\n';
  if (r.yes) {
    if (inst.kind == Problem::Im) {
      for (auto [u, v] : r.edges) out << "edge " << u << ' ' << v << '\n';
    } else {
      out << "vertices";
      for (int v : r.witness) out << ' ' << v;
      out << '\n';
    }
    if (inst.kind == Problem::CapVc) {
      auto edges = inst.graph.edges();
      for (std::size_t i = 0; i < edges.size(); ++i)
        out << "assign " << edges[i].first << ' ' << edges[i].second << ' ' << r.assignment[i] << '\n';
    }
  }
  emit(c.output, out.str());
  return kOk;
}

std::string file_name(std::string suite) {
  for (char& ch : suite)
    if (!std::isalnum(static_cast<unsigned char>(ch))) ch = '-';
  return suite + ".txt";
}

int cmd_verify(const std::string& problem, const std::string& dump_dir, bool timing, bool faulty, const Common& c) {
  SuiteOptions opt;
  opt.seed = c.seed;
  opt.trials = c.trials;
  opt.limits = limits(c);
  std::vector<SuiteResult> results =
      faulty ? std::vector<SuiteResult>{check_rule_safety(faulty_rule_spec(), opt)} : run_suites(problem, opt);
  bool ok = true;
  for (const auto& r : results) {
    ok = ok && r.passed();
    std::cout << (r.passed() ? "PASS " : "FAIL ") << r.name << " trials=" << r.trials << " failures=" << r.failures;
    if (timing) std::cout << " seconds=" << r.seconds;
    std::cout << " | " << r.detail << '\n';
    if (r.counterexample) {
      std::filesystem::create_directories(dump_dir);
      auto file = (std::filesystem::path(dump_dir) / file_name(r.name)).string();
      InstanceFile f{*r.counterexample, {{"seed", static_cast<std::int64_t>(c.seed)}}};
      write_text_file(file, "c counterexample for " + r.name + "\n" + write_instance(f));
      std::cout << "  counterexample written to " << file << '\n';
    }
  }
  std::cout << (ok ? "all suites passed" : "suite failures") << '\n';
  return ok ? kOk : kSuiteFailure;
}

struct GenArgs {
  std::string family;
  int n = 10;
  int gamma = 2;
  double p = 0.5;
  int a = 2;
  int b = 3;
  int lambda = 3;
  int sets = 6;
  bool planted = false;
  int max_part = 2;
  int max_degree = 3;
  int t = 2;
  int q = 2;
  std::string as;
};

int cmd_generate(const GenArgs& g, const Common& c) {
  InstanceFile file;
  std::int64_t k = c.k.value_or(0);
  auto graph_file = [&](const Generated& gen, Problem default_kind) {
    Problem kind = g.as.empty() ? default_kind : parse_problem(g.as);
    file.instance = make_instance(kind, gen.graph, k, c.ell.value_or(kind == Problem::Coc ? 1 : 0));
    file.hints = {{"gamma", gen.gamma}, {"c", gen.c}, {"seed", static_cast<std::int64_t>(gen.seed)}};
  };
  if (g.family == "weakly-closed") {
    graph_file(gen_random_weakly_closed(g.n, g.gamma, c.seed, g.p), Problem::Plain);
  } else if (g.family == "split") {
    graph_file(gen_random_split(g.n, c.seed, g.p), Problem::Ds);
  } else if (g.family == "bipartite") {
    graph_file(gen_random_bipartite(g.n, c.seed, g.p), Problem::Plain);
  } else if (g.family == "random") {
    graph_file(gen_random_graph(g.n, c.seed, g.p), Problem::Plain);
  } else if (g.family == "kab") {
    graph_file(gen_k_ab(g.a, g.b), Problem::Plain);
  } else if (g.family == "capvc-gadget") {
    auto sc = gen_random_set_cover(g.lambda, static_cast<int>(c.k.value_or(1)), g.sets, c.seed, g.planted);
    file.instance = gen_capvc_lowerbound(sc);
    auto rep = verify_capvc_lowerbound(sc, file.instance);
    file.hints = {{"c", rep.closure}, {"lambda", g.lambda}, {"seed", static_cast<std::int64_t>(c.seed)}};
  } else if (g.family == "mcis") {
    file.instance = gen_random_mcis(static_cast<int>(c.k.value_or(2)), g.max_part, g.max_degree, g.p, c.seed);
    file.hints = {{"seed", static_cast<std::int64_t>(c.seed)}};
  } else if (g.family == "composition") {
    int parts = static_cast<int>(c.k.value_or(1));
    std::mt19937_64 rng(c.seed);
    std::vector<Instance> inputs;
    int count = 1;
    for (int r = 0; r < g.q; ++r) count *= g.t;
    for (int i = 0; i < count; ++i) inputs.push_back(gen_random_mcis(parts, g.max_part, g.max_degree, g.p, rng()));
    auto comp = gen_is_composition(inputs, g.t, g.q, parts);
    file.instance = comp.graph;
    file.hints = {{"t", g.t}, {"q", g.q}, {"parts", parts}, {"seed", static_cast<std::int64_t>(c.seed)}};
  } else {
    throw invalid_input("unknown family '" + g.family +
                        "' (weakly-closed, split, bipartite, random, kab, capvc-gadget, mcis, composition)");
  }
  emit(c.output, write_instance(file));
  return kOk;
}

int cmd_replay(const std::string& path, const std::string& trace_path, const Common& c) {
  Instance inst = read_instance_file(path).instance;
  std::ifstream in(trace_path, std::ios::binary);
  if (!in) throw parse_error(0, 0, "cannot open '" + trace_path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  emit(c.output, write_instance(replay(inst, parse_trace_json(buf.str()))));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Kernelization toolkit for weakly closed graphs"};
  app.require_subcommand(1);
  Common c;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--k", c.k, "Budget, overrides the file");
    sub->add_option("--ell", c.ell, "Component order bound, overrides the file");
    sub->add_option("--oracle-cap", c.oracle_cap, "Largest vertex count handed to exact solvers")->check(CLI::PositiveNumber);
    sub->add_option("-o,--output", c.output, "Output file (default stdout)");
  };

  std::string path, problem = "all", trace_path, dump_dir = "counterexamples";
  bool timing = false, faulty = false;
  GenArgs gen;

  auto* params = app.add_subcommand("params", "Graph parameters n, m, c, gamma, degeneracy, omega");
  params->add_option("file", path)->required();
  add_common(params);

  auto* kernel = app.add_subcommand("kernel", "Run a kernel pipeline, write the reduced instance and a JSON trace");
  kernel->add_option("problem", problem, "capvc, convc, aconvc, coc, im, ds")->required();
  kernel->add_option("file", path)->required();
  kernel->add_option("--trace", trace_path, "JSON trace output");
  kernel->add_option("--mode", c.mode, "ConVC pipeline: gamma or c")->check(CLI::IsMember({"gamma", "c"}));
  add_common(kernel);

  auto* solve_cmd = app.add_subcommand("solve", "Exact answer and witness");
  solve_cmd->add_option("problem", problem)->required();
  solve_cmd->add_option("file", path)->required();
  add_common(solve_cmd);

  auto* verify = app.add_subcommand("verify", "Randomized safety and invariant suites");
  verify->add_option("problem", problem, "all, params, capvc, convc, coc, im, ds, ramsey, is");
  verify->add_option("--seed", c.seed);
  verify->add_option("--trials", c.trials)->check(CLI::PositiveNumber);
  verify->add_option("--dump-dir", dump_dir, "Where failing instances are written");
  verify->add_flag("--timing", timing, "Print seconds per suite");
  verify->add_flag("--faulty-rule", faulty, "Run only the unsafe control rule");
  add_common(verify);

  auto* generate = app.add_subcommand("generate", "Write a generated instance");
  generate->add_option("family", gen.family)->required();
  generate->add_option("--seed", c.seed);
  generate->add_option("--n", gen.n);
  generate->add_option("--gamma", gen.gamma);
  generate->add_option("--p", gen.p);
  generate->add_option("--a", gen.a);
  generate->add_option("--b", gen.b);
  generate->add_option("--lambda", gen.lambda);
  generate->add_option("--sets", gen.sets);
  generate->add_flag("--planted", gen.planted);
  generate->add_option("--max-part", gen.max_part);
  generate->add_option("--max-degree", gen.max_degree);
  generate->add_option("--t", gen.t);
  generate->add_option("--q", gen.q);
  generate->add_option("--as", gen.as, "Instance kind for graph families");
  add_common(generate);

  auto* replay_cmd = app.add_subcommand("replay", "Apply a JSON trace to its input instance");
  replay_cmd->add_option("file", path)->required();
  replay_cmd->add_option("trace", trace_path)->required();
  add_common(replay_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*params) return cmd_params(path, c);
    if (*kernel) return cmd_kernel(problem, path, trace_path, c);
    if (*solve_cmd) return cmd_solve(problem, path, c);
    if (*verify) return cmd_verify(problem, dump_dir, timing, faulty, c);
    if (*generate) return cmd_generate(gen, c);
    if (*replay_cmd) return cmd_replay(path, trace_path, c);
  } catch (const parse_error& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kParse;
  } catch (const oracle_cap_exceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const invalid_input& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
