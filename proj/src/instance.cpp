#include "closure_kernels/instance.hpp"

#include <algorithm>
#include <array>
#include <utility>

namespace ck {

namespace {

constexpr std::array<std::pair<Problem, const char*>, 9> kNames{{
    {Problem::CapVc, "capvc"},
    {Problem::ConVc, "convc"},
    {Problem::AnnotatedConVc, "aconvc"},
    {Problem::Coc, "coc"},
    {Problem::Im, "im"},
    {Problem::Ds, "ds"},
    {Problem::Is, "is"},
    {Problem::Mcis, "mcis"},
    {Problem::Plain, "graph"},
}};

constexpr std::array<std::pair<Edit::Op, const char*>, 7> kOps{{
    {Edit::Op::Delete, "delete"},
    {Edit::Op::AddCap, "add_cap"},
    {Edit::Op::AddBudget, "add_budget"},
    {Edit::Op::MarkRed, "mark_red"},
    {Edit::Op::AttachLeaf, "attach_leaf"},
    {Edit::Op::Decide, "decide"},
    {Edit::Op::Convert, "convert"},
}};

}  // namespace

std::string problem_name(Problem p) {
  for (auto [q, name] : kNames)
    if (q == p) return name;
  return "?";
}

Problem parse_problem(const std::string& name) {
  for (auto [q, n] : kNames)
    if (name == n) return q;
  throw invalid_input("unknown problem kind '" + name + "'");
}

std::string op_name(Edit::Op op) {
  for (auto [o, name] : kOps)
    if (o == op) return name;
  return "?";
}

Edit::Op parse_op(const std::string& name) {
  for (auto [o, n] : kOps)
    if (name == n) return o;
  throw invalid_input("unknown edit op '" + name + "'");
}

Instance make_instance(Problem kind, Graph g, std::int64_t k, int ell) {
  Instance inst;
  inst.kind = kind;
  inst.k = k;
  inst.ell = ell;
  auto n = static_cast<std::size_t>(g.n());
  inst.graph = std::move(g);
  if (kind == Problem::CapVc) inst.cap.assign(n, 0);
  if (kind == Problem::AnnotatedConVc) inst.red.assign(n, 0);
  if (kind == Problem::Mcis) inst.part.assign(n, 0);
  inst.origin.resize(n);
  for (std::size_t i = 0; i < n; ++i) inst.origin[i] = static_cast<int>(i);
  return inst;
}

void validate(const Instance& inst) {
  auto n = static_cast<std::size_t>(inst.n());
  auto sized = [&](std::size_t got, bool used, const char* what) {
    if (used ? got != n : got != 0)
      throw invalid_input(std::string(what) + " annotation has " + std::to_string(got) + " entries for " +
                          std::to_string(n) + " vertices");
  };
  sized(inst.cap.size(), inst.kind == Problem::CapVc, "capacity");
  sized(inst.red.size(), inst.kind == Problem::AnnotatedConVc, "red");
  sized(inst.part.size(), inst.kind == Problem::Mcis, "part");
  if (inst.origin.size() != n) throw invalid_input("origin map does not match vertex count");
  if (inst.kind != Problem::Plain && inst.k < 0) throw invalid_input("budget k must be non-negative");
  if (inst.kind == Problem::Coc && inst.ell < 1) throw invalid_input("ell must be at least 1");
  if (inst.kind == Problem::Mcis) {
    for (int p : inst.part)
      if (p < 0 || p >= inst.k) throw invalid_input("part index out of range [0, k)");
  }
}

Instance canonical_instance(Problem kind, bool yes, int ell) {
  if (yes) return make_instance(kind, Graph(0), 0, ell);
  switch (kind) {
    case Problem::CapVc:
    case Problem::ConVc:
    case Problem::AnnotatedConVc:
      return make_instance(kind, Graph(2, {{0, 1}}), 0, ell);
    case Problem::Coc: {
      std::vector<Edge> e;
      for (int i = 0; i < ell; ++i) e.emplace_back(i, i + 1);
      return make_instance(kind, Graph(ell + 1, e), 0, ell);
    }
    case Problem::Im:
      return make_instance(kind, Graph(1), 1, ell);
    case Problem::Ds:
      return make_instance(kind, Graph(1), 0, ell);
    case Problem::Is:
      return make_instance(kind, Graph(1), 2, ell);
    case Problem::Mcis: {
      auto inst = make_instance(kind, Graph(2, {{0, 1}}), 2, ell);
      inst.part = {0, 1};
      return inst;
    }
    case Problem::Plain:
      break;
  }
  throw invalid_input("no canonical instance for kind " + problem_name(kind));
}

int find_origin(const Instance& inst, int origin_id) {
  auto it = std::find(inst.origin.begin(), inst.origin.end(), origin_id);
  return it == inst.origin.end() ? -1 : static_cast<int>(it - inst.origin.begin());
}

namespace {

int require_origin(const Instance& inst, int origin_id) {
  int v = find_origin(inst, origin_id);
  if (v < 0) throw invalid_input("edit refers to vertex " + std::to_string(origin_id) + " which is not present");
  return v;
}

template <class T>
std::vector<T> pick(const std::vector<T>& xs, const std::vector<int>& keep) {
  if (xs.empty()) return xs;
  std::vector<T> out;
  out.reserve(keep.size());
  for (int v : keep) out.push_back(xs[static_cast<std::size_t>(v)]);
  return out;
}

}  // namespace

void apply_edit(Instance& inst, const Edit& e) {
  switch (e.op) {
    case Edit::Op::Delete: {
      VertexSet gone;
      for (int o : e.vertices) gone.push_back(require_origin(inst, o));
      auto sub = remove_vertices(inst.graph, normalized(gone));
      inst.cap = pick(inst.cap, sub.to_parent);
      inst.red = pick(inst.red, sub.to_parent);
      inst.part = pick(inst.part, sub.to_parent);
      inst.origin = pick(inst.origin, sub.to_parent);
      inst.graph = std::move(sub.graph);
      break;
    }
    case Edit::Op::AddCap:
      for (int o : e.vertices) inst.cap.at(static_cast<std::size_t>(require_origin(inst, o))) += e.amount;
      break;
    case Edit::Op::AddBudget:
      inst.k += e.amount;
      break;
    case Edit::Op::MarkRed:
      for (int o : e.vertices) inst.red.at(static_cast<std::size_t>(require_origin(inst, o))) = 1;
      break;
    case Edit::Op::AttachLeaf: {
      if (e.vertices.size() != 2) throw invalid_input("attach_leaf needs {parent, leaf}");
      int parent = require_origin(inst, e.vertices[0]);
      if (find_origin(inst, e.vertices[1]) >= 0) throw invalid_input("leaf id already present");
      auto edges = inst.graph.edges();
      int leaf = inst.n();
      edges.emplace_back(parent, leaf);
      inst.graph = Graph(leaf + 1, edges);
      if (!inst.cap.empty() || inst.kind == Problem::CapVc) inst.cap.push_back(0);
      if (!inst.red.empty() || inst.kind == Problem::AnnotatedConVc) inst.red.push_back(0);
      if (!inst.part.empty() || inst.kind == Problem::Mcis) inst.part.push_back(0);
      inst.origin.push_back(e.vertices[1]);
      break;
    }
    case Edit::Op::Decide:
      inst = canonical_instance(inst.kind, e.amount != 0, inst.ell);
      break;
    case Edit::Op::Convert: {
      auto to = static_cast<Problem>(e.amount);
      auto n = static_cast<std::size_t>(inst.n());
      inst.kind = to;
      inst.cap.assign(to == Problem::CapVc ? n : 0, 0);
      inst.red.resize(to == Problem::AnnotatedConVc ? n : 0, 0);
      inst.part.resize(to == Problem::Mcis ? n : 0, 0);
      break;
    }
  }
}

void apply_edits(Instance& inst, const std::vector<Edit>& edits) {
  for (const Edit& e : edits) apply_edit(inst, e);
}

Instance replay(const Instance& input, const Trace& trace) {
  Instance inst = input;
  for (const auto& app : trace) apply_edits(inst, app.edits);
  return inst;
}

Reduced reduce_with(const Instance& inst, std::vector<Edit> edits) {
  Reduced r;
  r.instance = inst;
  apply_edits(r.instance, edits);
  r.applied = !edits.empty();
  for (const Edit& e : edits)
    if (e.op == Edit::Op::Decide) r.decided = e.amount != 0;
  r.edits = std::move(edits);
  return r;
}

Reduced unchanged(const Instance& inst) { return Reduced{inst, false, {}, std::nullopt}; }

void record(KernelResult& kr, const std::string& rule, const Reduced& r) {
  if (!r.applied) return;
  kr.trace.push_back({rule, r.edits});
  kr.instance = r.instance;
  if (r.decided) kr.decided = r.decided;
}

Edit delete_edit(const Instance& inst, const VertexSet& current_ids) {
  Edit e;
  e.op = Edit::Op::Delete;
  for (int v : normalized(current_ids)) e.vertices.push_back(inst.origin.at(static_cast<std::size_t>(v)));
  return e;
}

Edit convert_edit(Problem to) {
  Edit e;
  e.op = Edit::Op::Convert;
  e.amount = static_cast<std::int64_t>(to);
  return e;
}

Edit decide_edit(bool yes) {
  Edit e;
  e.op = Edit::Op::Decide;
  e.amount = yes ? 1 : 0;
  return e;
}

}  // namespace ck
