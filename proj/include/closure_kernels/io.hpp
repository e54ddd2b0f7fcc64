#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "closure_kernels/instance.hpp"

namespace ck {

/// Malformed input, with 1-based line and column of the offending token.
class parse_error : public std::runtime_error {
 public:
  parse_error(int line, int column, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// Text instance format:
///   c <anything>                 comment
///   p <kind> <n> <m> <k> [ell]   header, exactly once, before everything else
///   h <name> <value>             parameter hint (gamma, c, ...)
///   v <id> <label>               label table entry; labels default to the id
///   cap <id> <x>                 capacity (capvc)
///   red <id>                     red vertex (aconvc)
///   part <id> <i>                part index (mcis)
///   e <u> <v>                    edge
/// Ids are dense, 0-based. Labels are the ids of the original input and survive kernelization.
struct InstanceFile {
  Instance instance;
  std::map<std::string, std::int64_t> hints;
};

InstanceFile parse_instance(std::string_view text);
std::string write_instance(const InstanceFile& file);
std::string write_instance(const Instance& inst);

InstanceFile read_instance_file(const std::string& path);
/// Throws std::runtime_error when the file cannot be written.
void write_text_file(const std::string& path, const std::string& text);

inline constexpr int kTraceSchemaVersion = 1;

/// Everything a kernel run reports.
struct KernelReport {
  std::string pipeline;
  Instance input;
  KernelResult result;
  std::map<std::string, std::int64_t> parameters;  // measured on the input
  std::vector<BoundCheck> bounds;
};

/// JSON document: schema_version, pipeline, problem, sizes before and after,
/// parameters, decided, steps (rule, edits, sizes after the step), bounds.
std::string trace_json(const KernelReport& report);
/// The rule applications stored in a trace document.
Trace parse_trace_json(std::string_view text);

}  // namespace ck
