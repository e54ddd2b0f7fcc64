#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "closure_kernels/graph.hpp"
#include "closure_kernels/instance.hpp"
#include "closure_kernels/oracles.hpp"

namespace ck {

/// A generated graph with the parameters measured on it.
struct Generated {
  std::string family;
  std::uint64_t seed = 0;
  Graph graph;
  int gamma = 1;
  int c = 1;
};

/// Random graph with weak closure at most target_gamma. Vertices are placed
/// in front of a growing closure ordering; each new vertex picks random
/// neighbors (probability p each) as long as its closure in the suffix stays
/// below target_gamma. Ids are shuffled at the end and γ is re-measured.
/// Throws invalid_input for target_gamma < 1, n < 0 or p outside [0, 1].
Generated gen_random_weakly_closed(int n, int target_gamma, std::uint64_t seed, double p = 0.5);

/// Clique part of random size, cross edges with probability p.
Generated gen_random_split(int n, std::uint64_t seed, double p = 0.5);
/// Sides of random size, edges with probability p.
Generated gen_random_bipartite(int n, std::uint64_t seed, double p = 0.5);
/// Complete bipartite K_{a,b}; sides 0..a-1 and a..a+b-1.
Generated gen_k_ab(int a, int b);
/// G(n, p).
Generated gen_random_graph(int n, std::uint64_t seed, double p = 0.5);

/// λ-exact set cover with `sets` random λ-sets over λk elements. When
/// `planted`, k of the sets partition the universe.
SetCoverInstance gen_random_set_cover(int lambda, int k, int sets, std::uint64_t seed, bool planted);

/// Capacitated vertex cover gadget. Vertex order: one vertex per set, then
/// U¹ (elements 1..λk), then U², then the leaves of U¹ and U² in that order.
Instance gen_capvc_lowerbound(const SetCoverInstance& sc);

struct GadgetReport {
  int closure = 0;           // c of the gadget graph
  int closure_bound = 0;     // 2λ+1
  std::uint64_t edges = 0;
  std::uint64_t expected_edges = 0;  // 2λk + 2λ|F| + λk(2λk−1)
  std::int64_t budget = 0;
  std::int64_t expected_budget = 0;  // 2λk + k
  bool ok() const { return closure <= closure_bound && edges == expected_edges && budget == expected_budget; }
};

GadgetReport verify_capvc_lowerbound(const SetCoverInstance& sc, const Instance& gadget);

/// Role of a vertex of the composed graph.
struct CompositionLabel {
  enum class Kind { Instance, Selector };
  Kind kind = Kind::Instance;
  int layer = 0;  // i, 0-based
  // Instance vertices
  int instance = 0;  // index of x in [t]^q, coordinate r is digit r (most significant first) in base t
  int vertex = 0;    // id inside that instance
  // Selector vertices p_{r, j, s}, j 1-based as in the construction
  int dim = 0;       // r, 0-based
  int j = 0;
  int slot = 0;      // 1 or 2
  int position = 0;  // 1-based position on the path
};

struct Composition {
  Instance graph;  // kind Is, k = k'
  int t = 0;
  int q = 0;
  int k = 0;
  std::vector<CompositionLabel> labels;
};

/// The coordinates of instance index x in [t]^q.
std::vector<int> composition_coordinates(int index, int t, int q);

/// Independent set instance from t^q multicolored independent set instances,
/// each with k parts that are cliques of size at most 3 and maximum degree at
/// most 3. Throws invalid_input otherwise.
Composition gen_is_composition(const std::vector<Instance>& instances, int t, int q, int k);

/// Closure of the composed graph is checked against
/// kCompositionClosureFactor · (q·s)^2 · t^(q−2) + Δ + 2 where s is the
/// largest part and Δ the largest degree of the inputs.
inline constexpr int kCompositionClosureFactor = 1;

struct CompositionReport {
  bool paths_ok = false;    // 2t−2 vertices per path, labels in order, path edges present
  bool budget_ok = false;   // k' = qkt − qk + k
  int closure = 0;
  std::uint64_t closure_bound = 0;
  bool equivalence_checked = false;
  bool any_input_yes = false;
  bool composed_yes = false;
  bool ok() const {
    return paths_ok && budget_ok && static_cast<std::uint64_t>(closure) <= closure_bound &&
           (!equivalence_checked || any_input_yes == composed_yes);
  }
};

/// Structure and closure checks, and, when every oracle fits in `lim`, the
/// answer equivalence.
CompositionReport verify_composition(const Composition& comp, const std::vector<Instance>& instances,
                                     OracleLimits lim = {40, 2000});

/// Random multicolored independent set instance with k parts of size 1..max_part
/// (each a clique) and extra edges while every degree stays at most max_degree.
Instance gen_random_mcis(int k, int max_part, int max_degree, double p, std::uint64_t seed);

}  // namespace ck
