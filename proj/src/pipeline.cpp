#include "closure_kernels/pipeline.hpp"

#include "closure_kernels/capvc.hpp"
#include "closure_kernels/closure.hpp"
#include "closure_kernels/combinatorics.hpp"
#include "closure_kernels/convc.hpp"
#include "closure_kernels/ds.hpp"
#include "closure_kernels/im.hpp"

namespace ck {

namespace {

void expect(const Instance& inst, Problem kind, const std::string& pipeline) {
  if (inst.kind != kind)
    throw invalid_input("pipeline '" + pipeline + "' needs a " + problem_name(kind) + " instance, got " +
                        problem_name(inst.kind));
}

}  // namespace

std::map<std::string, std::int64_t> graph_parameters(const Graph& g, int omega_cap) {
  std::map<std::string, std::int64_t> p;
  p["n"] = g.n();
  p["m"] = static_cast<std::int64_t>(g.m());
  p["c"] = closure_number(g);
  p["gamma"] = weak_closure_ordering(g).gamma;
  p["degeneracy"] = degeneracy(g).d;
  if (g.n() <= omega_cap) p["omega"] = static_cast<std::int64_t>(maximum_clique(g).size());
  return p;
}

KernelReport run_kernel(const std::string& pipeline, const Instance& inst, const KernelOptions& opt) {
  validate(inst);
  KernelReport rep;
  rep.input = inst;
  auto params = graph_parameters(inst.graph);
  rep.parameters = {{"c", params["c"]}, {"gamma", params["gamma"]}, {"degeneracy", params["degeneracy"]}};
  rep.parameters["k"] = inst.k;
  if (pipeline == "capvc") {
    expect(inst, Problem::CapVc, pipeline);
    rep.pipeline = "capvc";
    rep.result = kernelize_capvc(inst);
    if (!rep.result.decided) rep.bounds.push_back(capvc_size_bound(rep.result.instance));
  } else if (pipeline == "convc" && opt.mode == ConvcMode::Gamma) {
    expect(inst, Problem::ConVc, pipeline);
    rep.pipeline = "convc-gamma";
    rep.result = kernelize_convc_gamma(inst);
    if (!rep.result.decided) rep.bounds.push_back(convc_gamma_size_bound(rep.result.instance));
  } else if (pipeline == "convc") {
    expect(inst, Problem::ConVc, pipeline);
    rep.pipeline = "convc-c";
    rep.result = kernelize_convc_c(inst);
    // the bound is stated for the annotated kernel inside the pipeline
    Instance lifted = inst;
    apply_edit(lifted, convert_edit(Problem::AnnotatedConVc));
    auto inner = kernelize_annotated_convc(lifted);
    if (!inner.decided) rep.bounds.push_back(annotated_size_bound(inner.instance));
  } else if (pipeline == "aconvc") {
    expect(inst, Problem::AnnotatedConVc, pipeline);
    rep.pipeline = "aconvc";
    rep.result = kernelize_annotated_convc(inst);
    if (!rep.result.decided) rep.bounds.push_back(annotated_size_bound(rep.result.instance));
  } else if (pipeline == "coc") {
    expect(inst, Problem::Coc, pipeline);
    rep.pipeline = "coc";
    rep.parameters["ell"] = inst.ell;
    rep.result = kernelize_coc(inst, opt.max_ell);
  } else if (pipeline == "im") {
    expect(inst, Problem::Im, pipeline);
    rep.pipeline = "im";
    rep.result = kernelize_im(inst);
    if (!rep.result.decided) rep.bounds.push_back(im_size_bound(rep.result.instance));
  } else if (pipeline == "ds") {
    expect(inst, Problem::Ds, pipeline);
    rep.pipeline = "ds-split";
    rep.result = kernelize_ds_split(inst);
    if (!rep.result.decided && rep.result.instance.kind == Problem::Ds)
      for (auto& b : ds_split_size_bounds(rep.result.instance)) rep.bounds.push_back(b);
  } else {
    throw invalid_input("unknown pipeline '" + pipeline + "'");
  }
  return rep;
}

}  // namespace ck
