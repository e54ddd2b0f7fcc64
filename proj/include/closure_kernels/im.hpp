#pragma once

#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "closure_kernels/closure.hpp"
#include "closure_kernels/instance.hpp"

namespace ck {

using BigInt = boost::multiprecision::cpp_int;

/// f(k) = 4γk² + 3k
BigInt im_f(int gamma, const BigInt& k);
/// g(x) = 4γx² + x²
BigInt im_g(int gamma, const BigInt& x);

struct ImThresholds {
  int gamma = 1;
  std::int64_t k = 0;
  BigInt f;
  BigInt g_f;
  BigInt g_g_f;
  BigInt vpos;  // 2·g(g(f(k)))
};

ImThresholds im_thresholds(int gamma, std::int64_t k);

/// Deletes the smallest v whose posterior neighborhood Q(v) induces a graph
/// with a matching of size at least 2γk, γ taken from `ord`.
Reduced rr_im_delv(const Instance& inst, const ClosureOrdering& ord);
/// Same, with the greedy weak closure ordering of the instance graph.
Reduced rr_im_delv(const Instance& inst);

/// Decides Yes when the vertex cover LP optimum reaches the threshold of
/// im_thresholds(γ, k).
Reduced rr_im_vpos(const Instance& inst);

/// Deletes the largest member of the first class of at least two vertices
/// with equal open neighborhoods.
Reduced rr_im_twin(const Instance& inst);

/// delv to exhaustion (ordering recomputed after every deletion), vpos, then
/// twin to exhaustion.
KernelResult kernelize_im(const Instance& inst);

/// |V| <= |S| + lemma2_bound(|S|, γ, 1) for S = V_{1/2} ∪ V_1 of the LP.
BoundCheck im_size_bound(const Instance& reduced);

/// Induced matching of size k in a bipartite graph, built greedily: first
/// from vertices of one side with many posterior neighbors, each paired with
/// a private posterior neighbor, then by minimum-degree greedy over a maximum
/// matching and over all edges. Always validated before it is returned.
/// Throws invalid_input when (a, b) is not a bipartition of g.
std::optional<std::vector<Edge>> extract_im_bipartite(const Graph& g, const VertexSet& a, const VertexSet& b,
                                                      int k);

}  // namespace ck
