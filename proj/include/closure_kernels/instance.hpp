#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "closure_kernels/graph.hpp"

namespace ck {

enum class Problem {
  CapVc,           // capacitated vertex cover
  ConVc,           // connected vertex cover
  AnnotatedConVc,  // connected vertex cover with red (forced) vertices
  Coc,             // connected ℓ-component order connectivity deletion
  Im,              // induced matching
  Ds,              // dominating set (split graphs for the kernel)
  Is,              // independent set
  Mcis,            // multicolored independent set
  Plain,           // bare graph, parameters only
};

std::string problem_name(Problem p);
/// Throws invalid_input for an unknown name.
Problem parse_problem(const std::string& name);

/// One problem instance. Fields that a problem does not use stay empty.
/// `origin[i]` is the id vertex i had in the instance a pipeline started
/// from; kernels keep it increasing except for appended leaves.
struct Instance {
  Problem kind = Problem::Plain;
  Graph graph;
  std::int64_t k = 0;
  int ell = 0;
  std::vector<std::int64_t> cap;  // CapVc, may go negative
  std::vector<char> red;          // AnnotatedConVc
  std::vector<int> part;          // Mcis
  std::vector<int> origin;

  int n() const { return graph.n(); }
  bool operator==(const Instance&) const = default;
};

/// Fresh instance with identity origin and zeroed annotations.
Instance make_instance(Problem kind, Graph g, std::int64_t k, int ell = 0);

/// Throws invalid_input when annotation sizes or values are inconsistent.
void validate(const Instance& inst);

/// Smallest instance of the given kind with the given answer.
Instance canonical_instance(Problem kind, bool yes, int ell = 0);

/// Instance edits recorded by rules, keyed by origin ids so that traces
/// replay against the input instance.
struct Edit {
  enum class Op { Delete, AddCap, AddBudget, MarkRed, AttachLeaf, Decide, Convert };
  Op op = Op::Delete;
  std::vector<int> vertices;  // Delete: removed; AddCap/MarkRed: targets; AttachLeaf: {parent, leaf}
  std::int64_t amount = 0;    // AddCap/AddBudget: delta; Decide: 1 yes, 0 no; Convert: Problem
};

std::string op_name(Edit::Op op);
Edit::Op parse_op(const std::string& name);

struct RuleApplication {
  std::string rule;
  std::vector<Edit> edits;
};

using Trace = std::vector<RuleApplication>;

/// Index of the vertex whose origin is `origin_id`, or -1.
int find_origin(const Instance& inst, int origin_id);

void apply_edit(Instance& inst, const Edit& e);
void apply_edits(Instance& inst, const std::vector<Edit>& edits);
Instance replay(const Instance& input, const Trace& trace);

/// Outcome of one rule application.
struct Reduced {
  Instance instance;
  bool applied = false;
  std::vector<Edit> edits;
  std::optional<bool> decided;
};

/// Outcome of a kernel pipeline.
struct KernelResult {
  Instance instance;
  Trace trace;
  std::optional<bool> decided;
};

/// A size inequality checked on a kernel output: value <= bound, or value < bound when strict.
struct BoundCheck {
  std::string name;
  std::uint64_t value = 0;
  std::uint64_t bound = 0;
  bool strict = false;
  bool holds() const { return strict ? value < bound : value <= bound; }
};

/// Applies `edits` to a copy of `inst`.
Reduced reduce_with(const Instance& inst, std::vector<Edit> edits);
Reduced unchanged(const Instance& inst);

/// Appends an application to the trace and folds it into the result.
void record(KernelResult& kr, const std::string& rule, const Reduced& r);

Edit delete_edit(const Instance& inst, const VertexSet& current_ids);
Edit decide_edit(bool yes);
/// Changes the problem kind; annotations the new kind does not use are dropped.
Edit convert_edit(Problem to);

}  // namespace ck
