#include "closure_kernels/capvc.hpp"

#include <algorithm>

#include "closure_kernels/arith.hpp"
#include "closure_kernels/closure.hpp"

namespace ck {

Reduced rr_twin_crown(const Instance& inst) {
  if (inst.kind != Problem::CapVc) throw invalid_input("rr_twin_crown expects a capvc instance");
  auto need = static_cast<std::size_t>(inst.k + 2);
  for (auto& cls : false_twin_classes(inst.graph)) {
    auto nb = inst.graph.neighbors(cls.front());
    if (cls.size() < need || nb.size() > need) continue;
    auto key = [&](int v) { return std::pair{inst.cap[static_cast<std::size_t>(v)], v}; };
    std::sort(cls.begin(), cls.end(), [&](int a, int b) { return key(a) < key(b); });
    Edit dec{Edit::Op::AddCap, {}, -1};
    for (int u : nb) dec.vertices.push_back(inst.origin[static_cast<std::size_t>(u)]);
    std::vector<Edit> edits;
    if (!dec.vertices.empty()) edits.push_back(dec);
    edits.push_back(delete_edit(inst, {cls.front()}));
    return reduce_with(inst, std::move(edits));
  }
  return unchanged(inst);
}

KernelResult kernelize_capvc(const Instance& inst) {
  validate(inst);
  KernelResult kr{inst, {}, std::nullopt};
  for (;;) {
    auto r = rr_twin_crown(kr.instance);
    if (!r.applied) break;
    record(kr, "twin-crown", r);
  }
  return kr;
}

BoundCheck capvc_size_bound(const Instance& reduced) {
  int k = static_cast<int>(reduced.k);
  int gamma = weak_closure_ordering(reduced.graph).gamma;
  auto t = static_cast<std::uint64_t>(k + 2);
  return {"capvc |V| <= k + lemma2(k, gamma, k+2)", static_cast<std::uint64_t>(reduced.n()),
          sat_add(static_cast<std::uint64_t>(k), lemma2_bound(k, gamma, t)), false};
}

}  // namespace ck
