// One line per acceptance criterion. Trial counts, seeds and time limits are fixed here.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "closure_kernels/suites.hpp"

using namespace ck;

namespace {

struct Criterion {
  int id;
  std::string title;
  int trials;          // passed to the suites as SuiteOptions::trials
  std::uint64_t min_trials;  // smallest acceptable number of checked cases per suite
  double max_seconds;
  std::function<std::vector<SuiteResult>(const SuiteOptions&)> run;
};

constexpr std::uint64_t kSeed = 20240601;

std::vector<SuiteResult> one(SuiteResult r) { return {std::move(r)}; }

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "parameter engines", 5000, 5000, 120, [](const SuiteOptions& o) { return one(suite_parameters(o)); }},
      {2, "rule safety", 1000, 1000, 600, [](const SuiteOptions& o) { return suite_rule_safety(o); }},
      {3, "set cover gadget equivalence", 300, 200, 300, [](const SuiteOptions& o) { return one(suite_capvc_gadget(o)); }},
      {4, "composition equivalence", 100, 16, 120, [](const SuiteOptions& o) { return one(suite_composition(o)); }},
      {5, "kernel size bounds", 1000, 1, 300, [](const SuiteOptions& o) { return suite_kernel_bounds(o); }},
      {6, "biclique-freeness certificate", 600, 500, 300, [](const SuiteOptions& o) { return one(suite_gammaomega(o)); }},
      {7, "clique or independent set guarantee", 1000, 1, 300, [](const SuiteOptions& o) { return one(suite_ramsey(o)); }},
      {8, "half-integral LP exactness", 1000, 1000, 120, [](const SuiteOptions& o) { return one(suite_vclp(o)); }},
      {9, "determinism", 40, 40, 60, [](const SuiteOptions& o) { return one(suite_determinism(o)); }},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    SuiteOptions opt;
    opt.seed = kSeed;
    opt.trials = c.trials;
    auto t0 = std::chrono::steady_clock::now();
    auto results = c.run(opt);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool ok = !results.empty() && secs <= c.max_seconds;
    std::uint64_t trials = 0, failures = 0;
    std::string notes;
    for (const auto& r : results) {
      ok = ok && r.passed() && r.trials >= c.min_trials;
      trials += r.trials;
      failures += r.failures;
      if (!r.passed()) notes += " [" + r.name + ": " + r.detail + "]";
    }
    failed += !ok;
    std::printf("criterion %d %s: %s (suites=%zu cases=%llu failures=%llu seconds=%.1f limit=%.0f)%s\n", c.id,
                ok ? "PASS" : "FAIL", c.title.c_str(), results.size(), static_cast<unsigned long long>(trials),
                static_cast<unsigned long long>(failures), secs, c.max_seconds, notes.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
