#pragma once

#include <cstdint>
#include <optional>

#include "closure_kernels/graph.hpp"

namespace ck {

struct RamseyWitness {
  enum class Kind { Clique, IndependentSet };
  Kind kind = Kind::Clique;
  VertexSet vertices;
};

/// Classical R(a, b) <= C(a+b−2, a−1); 1 when a or b is 1.
std::uint64_t classical_ramsey_bound(int a, int b);

/// Vertex count beyond which every weakly γ-closed graph has a clique of size
/// a or an independent set of size b. For a, b > γ this is the minimum of the
/// classical bound and the larger of the two counting thresholds of the block
/// argument over a closure ordering, with R(a, γ) <= C(a+γ, γ):
///   a·C(b,γ) + b·C(a,γ)·Σ_{b'≤b} C(b'−1,γ) + 1
///   b·[(a−1)·C(b−1,γ) + (C(a+γ,γ)−1)·Σ_{1≤j<γ} C(b−1,j) + 1]
/// Otherwise the classical bound. Saturating.
std::uint64_t r_gamma_bound(int a, int b, int gamma);

/// Block construction over the greedy closure ordering, then the classical
/// recursion, then exact search for n <= 20. Returned witnesses are validated.
std::optional<RamseyWitness> clique_or_independent_set(const Graph& g, int a, int b);

/// The witness produced by the block construction alone, if it succeeds.
std::optional<RamseyWitness> ramsey_blocks(const Graph& g, int a, int b);

/// Any graph with at least r_gamma_bound(k, k, γ) vertices has a clique or an
/// independent set of size k, so the maximum subgraph problem for a class
/// containing both is a Yes.
bool g_subgraph_decided(const Graph& g, int k);

}  // namespace ck
