#pragma once

#include "closure_kernels/instance.hpp"

namespace ck {

/// One application of the twin rule for capacitated vertex cover: a class S
/// of k+2 false twins with |N(S)| <= k+2 loses a minimum-capacity member and
/// every vertex of N(S) loses one unit of capacity. Members are chosen by
/// smallest (capacity, id); classes are scanned by smallest member.
Reduced rr_twin_crown(const Instance& inst);

/// rr_twin_crown to exhaustion.
KernelResult kernelize_capvc(const Instance& inst);

/// |V| <= k + lemma2_bound(k, gamma, k+2) with gamma of the given graph.
BoundCheck capvc_size_bound(const Instance& reduced);

}  // namespace ck
