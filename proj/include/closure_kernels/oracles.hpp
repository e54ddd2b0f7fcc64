#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "closure_kernels/graph.hpp"
#include "closure_kernels/instance.hpp"

namespace ck {

struct OracleLimits {
  int max_vertices = 14;
  std::size_t max_edges = 25;
};

/// Limits large enough for every desk-scale suite in this repository.
inline constexpr OracleLimits kWideLimits{24, 400};

class oracle_cap_exceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct OracleResult {
  bool yes = false;
  VertexSet witness;            // vertex solutions
  std::vector<Edge> edges;      // induced matching
  std::vector<int> assignment;  // CapVc: covering vertex per edge of graph.edges()
  std::uint64_t explored = 0;   // candidate solutions examined
};

/// Branch and bound: an uncovered edge uv puts u in the cover or N(u) in the
/// cover; once every edge is covered, further vertices are tried for their
/// capacity. Feasibility of each cover is a max-flow test.
OracleResult solve_capvc_exact(const Instance& inst, OracleLimits lim = {});
/// Plain enumeration of all subsets of size <= k, for cross-checks.
OracleResult solve_capvc_by_subsets(const Instance& inst, OracleLimits lim = {});
OracleResult solve_convc_exact(const Instance& inst, OracleLimits lim = {});
OracleResult solve_annotated_convc_exact(const Instance& inst, OracleLimits lim = {});
OracleResult solve_is_exact(const Instance& inst, OracleLimits lim = {});
OracleResult solve_im_exact(const Instance& inst, OracleLimits lim = {});
OracleResult solve_ds_exact(const Instance& inst, OracleLimits lim = {});
/// Dominating set drawn only from `allowed`.
OracleResult solve_ds_within(const Instance& inst, const VertexSet& allowed, OracleLimits lim = {});
/// `connected` selects the connected deletion-set variant (the kernel's problem).
OracleResult solve_coc_exact(const Instance& inst, bool connected = true, OracleLimits lim = {});
/// One vertex per part, product enumeration.
OracleResult solve_multicolored_is_exact(const Instance& inst, OracleLimits lim = {});
/// Same question answered by enumerating k-subsets; used as a cross-check.
OracleResult solve_multicolored_is_by_subsets(const Instance& inst, OracleLimits lim = {});

/// Dispatch on inst.kind (Coc uses the connected variant).
OracleResult solve(const Instance& inst, OracleLimits lim = {});

struct SetCoverInstance {
  int universe = 0;  // elements 0..universe-1
  std::vector<VertexSet> family;
  int lambda = 0;
  int k = 0;
};

/// Throws invalid_input unless every set has size lambda and universe = lambda·k.
void validate(const SetCoverInstance& sc);

/// Exactly k pairwise disjoint sets covering the universe; witness holds family indices.
OracleResult solve_exact_set_cover(const SetCoverInstance& sc);

/// Weak closure number by dynamic programming over vertex subsets (n ≤ 20).
int gamma_exact(const Graph& g);

/// Clique of size a, or none (n ≤ 64).
std::optional<VertexSet> find_clique_exact(const Graph& g, int a);
/// Independent set of size b, or none (n ≤ 64).
std::optional<VertexSet> find_independent_set_exact(const Graph& g, int b);

bool is_vertex_cover(const Graph& g, const VertexSet& s);
bool is_induced_matching(const Graph& g, const std::vector<Edge>& edges);
bool is_dominating_set(const Graph& g, const VertexSet& s);

/// Covering vertex for every edge of graph.edges() respecting capacities, if one exists.
std::optional<std::vector<int>> capvc_assignment(const Instance& inst, const VertexSet& s);

bool check_capvc(const Instance& inst, const VertexSet& s, const std::vector<int>& assignment);
bool check_convc(const Instance& inst, const VertexSet& s);
bool check_annotated_convc(const Instance& inst, const VertexSet& s);
bool check_is(const Instance& inst, const VertexSet& s);
bool check_im(const Instance& inst, const std::vector<Edge>& edges);
bool check_ds(const Instance& inst, const VertexSet& s);
bool check_coc(const Instance& inst, const VertexSet& s, bool connected = true);
bool check_mcis(const Instance& inst, const VertexSet& s);
bool check_set_cover(const SetCoverInstance& sc, const VertexSet& chosen);

/// Validates a yes-result's witness against the instance.
bool check(const Instance& inst, const OracleResult& r);

}  // namespace ck
