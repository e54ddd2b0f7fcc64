#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "closure_kernels/instance.hpp"
#include "closure_kernels/io.hpp"

namespace ck {

enum class ConvcMode { Gamma, C };

struct KernelOptions {
  ConvcMode mode = ConvcMode::Gamma;
  int max_ell = 4;
};

/// Pipelines: capvc, convc (γ or c mode), aconvc, coc, im, ds. Throws
/// invalid_input for an unknown pipeline or when inst.kind does not match it.
KernelReport run_kernel(const std::string& pipeline, const Instance& inst, const KernelOptions& opt = {});

/// n, m, c, gamma, degeneracy, and omega when n <= omega_cap.
std::map<std::string, std::int64_t> graph_parameters(const Graph& g, int omega_cap = 64);

}  // namespace ck
