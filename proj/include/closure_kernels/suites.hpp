#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "closure_kernels/instance.hpp"
#include "closure_kernels/oracles.hpp"

namespace ck {

struct SuiteOptions {
  std::uint64_t seed = 1;
  int trials = 1000;  // per rule or per family; suites with fixed sizes ignore it
  OracleLimits limits{24, 400};
};

struct SuiteResult {
  std::string name;
  std::uint64_t trials = 0;
  std::uint64_t failures = 0;
  std::string detail;                     // counts, first failure
  std::optional<Instance> counterexample; // first failing instance, when there is one
  double seconds = 0;
  bool passed() const { return failures == 0 && trials > 0; }
};

/// A reduction rule with a sampler for its inputs and the pipeline it belongs to.
struct RuleSpec {
  std::string name;
  std::function<Instance(std::mt19937_64&)> sample;
  std::function<Reduced(const Instance&)> rule;
  std::function<KernelResult(const Instance&)> pipeline;
};

/// The oracle answer must be the same before the rule, after it, and after the
/// full pipeline; the pipeline trace must replay. Trial i draws from
/// mt19937_64(seed + i).
SuiteResult check_rule_safety(const RuleSpec& spec, const SuiteOptions& opt);

/// Every rule of every kernel with its sampler.
std::vector<RuleSpec> rule_specs();
/// Negative control: deletes a vertex of maximum degree from an induced
/// matching instance and keeps k. Not safe.
RuleSpec faulty_rule_spec();
std::vector<SuiteResult> suite_rule_safety(const SuiteOptions& opt, const std::string& problem = "all");

/// Greedy γ against the exact minimum over orderings, c >= γ, d+1 >= γ and the
/// ordering check on every nonadjacent pair, for `trials` graphs on <= 8 vertices.
SuiteResult suite_parameters(const SuiteOptions& opt);
/// Set cover gadget: answers agree, closure <= 2λ+1, exact edge count.
SuiteResult suite_capvc_gadget(const SuiteOptions& opt);
/// All 16 yes/no patterns for q = t = 2, k = 1, plus random k = 2 inputs.
SuiteResult suite_composition(const SuiteOptions& opt);
/// Size bounds on yes-instances after exhaustion, one result per kernel.
std::vector<SuiteResult> suite_kernel_bounds(const SuiteOptions& opt, const std::string& problem = "all");
/// No K_{ρ,ρ} with ρ = γ + ω + 1 on random bipartite and bounded-ω graphs.
SuiteResult suite_gammaomega(const SuiteOptions& opt);
/// Witness guarantee for a, b <= 4, γ <= 2 above r_gamma_bound, n <= 20.
SuiteResult suite_ramsey(const SuiteOptions& opt);
/// LP optimum against enumeration of {0, 1/2, 1} assignments, n <= 10.
SuiteResult suite_vclp(const SuiteOptions& opt);
/// Kernel outputs, traces and generator outputs are identical across two runs.
SuiteResult suite_determinism(const SuiteOptions& opt);

/// Suites relevant to `problem` (capvc, convc, coc, im, ds, ramsey, params, all).
std::vector<SuiteResult> run_suites(const std::string& problem, const SuiteOptions& opt);

}  // namespace ck
