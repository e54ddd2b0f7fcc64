#include "closure_kernels/io.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace ck {

namespace {

struct Token {
  std::string_view text;
  int column = 0;
};

std::vector<Token> split(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) out.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
  }
  return out;
}

template <class T>
T number(const Token& t, int line, const char* what) {
  T v{};
  auto [p, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
  if (ec != std::errc() || p != t.text.data() + t.text.size())
    throw parse_error(line, t.column, std::string("expected ") + what + ", got '" + std::string(t.text) + "'");
  return v;
}

}  // namespace

InstanceFile parse_instance(std::string_view text) {
  InstanceFile file;
  bool header = false;
  int header_line = 0;
  Token m_token;
  Problem kind = Problem::Plain;
  int n = 0;
  std::size_t m = 0;
  std::int64_t k = 0;
  int ell = 0;
  std::vector<Edge> edges;
  std::set<Edge> seen_edges;
  std::vector<std::pair<int, std::int64_t>> caps;
  std::vector<int> reds;
  std::vector<std::pair<int, int>> parts;
  std::vector<std::pair<int, int>> labels;

  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    auto line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    auto tok = split(line);
    if (tok.empty() || tok[0].text == "c") continue;
    auto arity = [&](std::size_t lo, std::size_t hi) {
      if (tok.size() < lo) throw parse_error(line_no, static_cast<int>(line.size()) + 1, "too few fields");
      if (tok.size() > hi) throw parse_error(line_no, tok[hi].column, "unexpected trailing field");
    };
    auto vertex = [&](const Token& t) {
      int v = number<int>(t, line_no, "vertex id");
      if (v < 0 || v >= n) throw parse_error(line_no, t.column, "vertex id " + std::to_string(v) + " out of range");
      return v;
    };
    auto kind_only = [&](Problem p) {
      if (kind != p) throw parse_error(line_no, tok[0].column, "'" + std::string(tok[0].text) + "' lines need kind " + problem_name(p));
    };
    const auto& key = tok[0].text;
    if (key == "p") {
      if (header) throw parse_error(line_no, tok[0].column, "second header line");
      arity(5, 6);
      try {
        kind = parse_problem(std::string(tok[1].text));
      } catch (const invalid_input& e) {
        throw parse_error(line_no, tok[1].column, e.what());
      }
      n = number<int>(tok[2], line_no, "vertex count");
      if (n < 0) throw parse_error(line_no, tok[2].column, "negative vertex count");
      m_token = tok[3];
      m = number<std::size_t>(tok[3], line_no, "edge count");
      k = number<std::int64_t>(tok[4], line_no, "budget");
      if (tok.size() == 6) ell = number<int>(tok[5], line_no, "ell");
      header = true;
      header_line = line_no;
      continue;
    }
    if (!header) throw parse_error(line_no, tok[0].column, "expected header line 'p <kind> <n> <m> <k> [ell]'");
    if (key == "e") {
      arity(3, 3);
      int u = vertex(tok[1]);
      int v = vertex(tok[2]);
      if (u == v) throw parse_error(line_no, tok[2].column, "self-loop");
      Edge e{std::min(u, v), std::max(u, v)};
      if (!seen_edges.insert(e).second) throw parse_error(line_no, tok[1].column, "duplicate edge");
      edges.push_back(e);
    } else if (key == "h") {
      arity(3, 3);
      file.hints[std::string(tok[1].text)] = number<std::int64_t>(tok[2], line_no, "hint value");
    } else if (key == "v") {
      arity(3, 3);
      labels.emplace_back(vertex(tok[1]), number<int>(tok[2], line_no, "label"));
    } else if (key == "cap") {
      arity(3, 3);
      kind_only(Problem::CapVc);
      caps.emplace_back(vertex(tok[1]), number<std::int64_t>(tok[2], line_no, "capacity"));
    } else if (key == "red") {
      arity(2, 2);
      kind_only(Problem::AnnotatedConVc);
      reds.push_back(vertex(tok[1]));
    } else if (key == "part") {
      arity(3, 3);
      kind_only(Problem::Mcis);
      parts.emplace_back(vertex(tok[1]), number<int>(tok[2], line_no, "part index"));
    } else {
      throw parse_error(line_no, tok[0].column, "unknown line type '" + std::string(key) + "'");
    }
  }
  if (!header) throw parse_error(line_no, 1, "missing header line");
  if (edges.size() != m)
    throw parse_error(header_line, m_token.column,
                      "header announces " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));

  Instance inst = make_instance(kind, Graph(n, edges), k, ell);
  for (auto [v, x] : caps) inst.cap[static_cast<std::size_t>(v)] = x;
  for (int v : reds) inst.red[static_cast<std::size_t>(v)] = 1;
  for (auto [v, p] : parts) inst.part[static_cast<std::size_t>(v)] = p;
  std::set<int> used;
  for (auto [v, l] : labels) inst.origin[static_cast<std::size_t>(v)] = l;
  for (int l : inst.origin)
    if (!used.insert(l).second) throw parse_error(header_line, 1, "label " + std::to_string(l) + " used twice");
  try {
    validate(inst);
  } catch (const invalid_input& e) {
    throw parse_error(header_line, 1, e.what());
  }
  file.instance = std::move(inst);
  return file;
}

std::string write_instance(const InstanceFile& file) {
  const Instance& inst = file.instance;
  std::ostringstream out;
  out << "p " << problem_name(inst.kind) << ' ' << inst.n() << ' ' << inst.graph.m() << ' ' << inst.k;
  if (inst.kind == Problem::Coc || inst.ell != 0) out << ' ' << inst.ell;
  out << '\n';
  for (const auto& [name, value] : file.hints) out << "h " << name << ' ' << value << '\n';
  for (int v = 0; v < inst.n(); ++v)
    if (inst.origin[static_cast<std::size_t>(v)] != v) out << "v " << v << ' ' << inst.origin[static_cast<std::size_t>(v)] << '\n';
  for (std::size_t v = 0; v < inst.cap.size(); ++v) out << "cap " << v << ' ' << inst.cap[v] << '\n';
  for (std::size_t v = 0; v < inst.red.size(); ++v)
    if (inst.red[v]) out << "red " << v << '\n';
  for (std::size_t v = 0; v < inst.part.size(); ++v) out << "part " << v << ' ' << inst.part[v] << '\n';
  for (auto [u, v] : inst.graph.edges()) out << "e " << u << ' ' << v << '\n';
  return out.str();
}

std::string write_instance(const Instance& inst) { return write_instance(InstanceFile{inst, {}}); }

InstanceFile read_instance_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw parse_error(0, 0, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_instance(buf.str());
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
}

namespace {

using json = nlohmann::ordered_json;

json sizes(const Instance& inst) {
  json j;
  j["kind"] = problem_name(inst.kind);
  j["n"] = inst.n();
  j["m"] = inst.graph.m();
  j["k"] = inst.k;
  if (inst.kind == Problem::Coc) j["ell"] = inst.ell;
  return j;
}

json edit_json(const Edit& e) {
  json j;
  j["op"] = op_name(e.op);
  if (e.op == Edit::Op::Convert) {
    j["to"] = problem_name(static_cast<Problem>(e.amount));
  } else {
    j["vertices"] = e.vertices;
    j["amount"] = e.amount;
  }
  return j;
}

}  // namespace

std::string trace_json(const KernelReport& report) {
  json doc;
  doc["schema_version"] = kTraceSchemaVersion;
  doc["pipeline"] = report.pipeline;
  doc["before"] = sizes(report.input);
  doc["after"] = sizes(report.result.instance);
  json params = json::object();
  for (const auto& [name, value] : report.parameters) params[name] = value;
  doc["parameters"] = params;
  doc["decided"] = report.result.decided ? json(*report.result.decided ? "yes" : "no") : json(nullptr);
  json steps = json::array();
  Instance cur = report.input;
  for (const auto& app : report.result.trace) {
    apply_edits(cur, app.edits);
    json s;
    s["rule"] = app.rule;
    json edits = json::array();
    for (const auto& e : app.edits) edits.push_back(edit_json(e));
    s["edits"] = edits;
    s["after"] = sizes(cur);
    steps.push_back(s);
  }
  doc["steps"] = steps;
  json bounds = json::array();
  for (const auto& b : report.bounds) {
    json j;
    j["name"] = b.name;
    j["value"] = b.value;
    j["bound"] = b.bound;
    j["strict"] = b.strict;
    j["holds"] = b.holds();
    bounds.push_back(j);
  }
  doc["bounds"] = bounds;
  return doc.dump(2) + "\n";
}

Trace parse_trace_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw parse_error(0, static_cast<int>(e.byte), std::string("malformed JSON: ") + e.what());
  }
  try {
    if (doc.at("schema_version").get<int>() != kTraceSchemaVersion)
      throw parse_error(0, 0, "unsupported trace schema version " + doc.at("schema_version").dump());
    Trace trace;
    for (const auto& s : doc.at("steps")) {
      RuleApplication app;
      app.rule = s.at("rule").get<std::string>();
      for (const auto& je : s.at("edits")) {
        Edit e;
        e.op = parse_op(je.at("op").get<std::string>());
        if (e.op == Edit::Op::Convert) {
          e.amount = static_cast<std::int64_t>(parse_problem(je.at("to").get<std::string>()));
        } else {
          e.vertices = je.at("vertices").get<std::vector<int>>();
          e.amount = je.at("amount").get<std::int64_t>();
        }
        app.edits.push_back(std::move(e));
      }
      trace.push_back(std::move(app));
    }
    return trace;
  } catch (const json::exception& e) {
    throw parse_error(0, 0, std::string("malformed trace: ") + e.what());
  } catch (const invalid_input& e) {
    throw parse_error(0, 0, std::string("malformed trace: ") + e.what());
  }
}

}  // namespace ck
