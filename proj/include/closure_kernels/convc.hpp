#pragma once

#include <vector>

#include "closure_kernels/instance.hpp"

namespace ck {

/// Removes the largest member of the first false-twin class S with |S| >= 2
/// and |S| > |N(S)|.
Reduced rr_twinset(const Instance& inst);

/// rr_twinset to exhaustion.
KernelResult kernelize_convc_gamma(const Instance& inst);

/// Largest false-twin class of the graph, at least 1.
std::size_t max_twin_class(const Graph& g);

/// |V| <= k + lemma2_bound(k, gamma, t) with t the largest twin class.
BoundCheck convc_gamma_size_bound(const Instance& reduced);

/// Removes isolated white vertices, then decides the instance when the
/// remaining graph is disconnected (No), empty (Yes), has a one-vertex
/// solution within budget (Yes) or is nonempty with k = 0 (No).
Reduced rr_annotated_trivial(const Instance& inst);

/// Removes the smallest simplicial vertex v of a connected graph on at least
/// three vertices. A red v costs one unit of budget; a white v or a leaf turns
/// its neighbors red.
Reduced rr_simplicial(const Instance& inst);

/// Alternates rr_annotated_trivial and rr_simplicial until neither applies.
/// A leftover on fewer than three vertices is decided by the oracle.
KernelResult kernelize_annotated_convc(const Instance& inst);

/// Lifts a connected vertex cover instance to the annotated form, reduces it
/// and attaches a pendant leaf to every red vertex. Leaves get fresh origin
/// ids past the largest input origin.
KernelResult kernelize_convc_c(const Instance& inst);

/// |V| < k + c·C(k,2) for a reduced undecided annotated instance.
BoundCheck annotated_size_bound(const Instance& reduced);

inline constexpr int kMaxEll = 4;

/// Classes of connected r-vertex sets that are r-twins under a bijection
/// preserving the induced adjacency. Members of a class are sorted
/// lexicographically; classes are ordered by first member.
std::vector<std::vector<VertexSet>> r_twin_classes(const Graph& g, int r);

/// r_twin_classes for r = 1..ell, concatenated.
std::vector<std::vector<VertexSet>> ell_twin_classes(const Graph& g, int ell);

/// Deletes every connected component with at most ell vertices.
Reduced rr_coc_small_components(const Instance& inst);

/// For the first r-twin class (r = 1..ell) holding x >= k+ell+2 pairwise
/// disjoint members, chosen greedily in order, deletes the x-th member.
Reduced rr_coc_twins(const Instance& inst);

/// Both rules to exhaustion. Throws invalid_input when ell > max_ell.
KernelResult kernelize_coc(const Instance& inst, int max_ell = kMaxEll);

}  // namespace ck
