#pragma once

#include <algorithm>
#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "raag/certificate.hpp"
#include "raag/decision.hpp"
#include "raag/graph.hpp"

namespace raag {

/// Malformed input. `line` is 1-based when the fault sits on a line.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what, std::optional<std::size_t> line = std::nullopt)
      : std::runtime_error(line ? "line " + std::to_string(*line) + ": " + what : what), line_(line) {}

  std::optional<std::size_t> line() const noexcept { return line_; }

 private:
  std::optional<std::size_t> line_;
};

struct GraphDocument {
  std::string name;
  Graph graph;

  friend bool operator==(const GraphDocument&, const GraphDocument&) = default;
};

namespace detail {

inline std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

inline std::optional<std::size_t> parse_count(std::string_view s) {
  std::size_t v = 0;
  if (s.empty() || s.size() > 18) return std::nullopt;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) return std::nullopt;
  return v;
}

/// Line cursor over a text document, skipping blank and comment lines.
class Lines {
 public:
  explicit Lines(std::string_view text) {
    std::size_t start = 0, no = 1;
    while (start <= text.size()) {
      auto end = text.find('\n', start);
      if (end == std::string_view::npos) end = text.size();
      auto line = text.substr(start, end - start);
      auto tokens = split_ws(line);
      if (!tokens.empty() && tokens[0].front() != '#') rows_.push_back({no, std::move(tokens)});
      ++no;
      if (end == text.size()) break;
      start = end + 1;
    }
  }

  bool done() const noexcept { return pos_ >= rows_.size(); }
  const std::vector<std::string_view>& peek() const { return rows_.at(pos_).tokens; }
  std::size_t line() const noexcept { return done() ? (rows_.empty() ? 1 : rows_.back().no) : rows_[pos_].no; }
  void next() { ++pos_; }

  const std::vector<std::string_view>& expect(std::string_view keyword, std::size_t arity) {
    if (done()) throw InputError("unexpected end of input, expected '" + std::string(keyword) + "'", line());
    const auto& t = peek();
    if (t[0] != keyword || t.size() != arity + 1)
      throw InputError("expected '" + std::string(keyword) + "' with " + std::to_string(arity) + " field(s)", line());
    return t;
  }

  std::size_t count(std::string_view tok) const {
    auto v = parse_count(tok);
    if (!v) throw InputError("not a non-negative integer: '" + std::string(tok) + "'", line());
    return *v;
  }

 private:
  struct Row {
    std::size_t no;
    std::vector<std::string_view> tokens;
  };
  std::vector<Row> rows_;
  std::size_t pos_ = 0;
};

inline constexpr std::size_t kMaxOrder = 4096;

/// Reads a `graph <name> <order>` header followed by its `e u v` lines.
inline GraphDocument read_graph_block(Lines& in) {
  const auto& h = in.expect("graph", 2);
  GraphDocument doc;
  doc.name = std::string(h[1]);
  const std::size_t order = in.count(h[2]);
  if (order > kMaxOrder) throw InputError("graph order exceeds " + std::to_string(kMaxOrder), in.line());
  doc.graph = Graph(order);
  in.next();
  while (!in.done() && in.peek()[0] == "e") {
    const auto& t = in.peek();
    if (t.size() != 3) throw InputError("edge line must be 'e <u> <v>'", in.line());
    std::size_t u = in.count(t[1]), v = in.count(t[2]);
    if (u >= v) throw InputError("edge endpoints must satisfy u < v", in.line());
    if (v >= order) throw InputError("edge endpoint out of range", in.line());
    if (doc.graph.adjacent(u, v)) throw InputError("duplicate edge", in.line());
    doc.graph.add_edge(u, v);
    in.next();
  }
  return doc;
}

inline void write_graph_block(std::ostream& os, const std::string& name, const Graph& g) {
  os << "graph " << name << ' ' << g.order() << '\n';
  for (auto [u, v] : g.edges()) os << "e " << u << ' ' << v << '\n';
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Graph documents

inline GraphDocument parse_graph(std::string_view text) {
  detail::Lines in(text);
  auto doc = detail::read_graph_block(in);
  if (!in.done()) throw InputError("unexpected content after the graph", in.line());
  return doc;
}

/// Normal form: header, then edges sorted with u < v, single spaces.
inline std::string serialize_graph(const GraphDocument& doc) {
  std::ostringstream os;
  detail::write_graph_block(os, doc.name, doc.graph);
  return os.str();
}

inline std::string serialize_graph(const Graph& g, const std::string& name = "g") {
  return serialize_graph(GraphDocument{name, g});
}

/// Builds a graph from a builder expression such as `cycle:5`,
/// `complement:path:4`, `union:path:2+cycle:3` or `join:kr2:2*path:1`.
/// Returns nullopt when the text is not a builder expression at all.
inline std::optional<Graph> build_graph(std::string_view spec) {
  auto colon = spec.find(':');
  if (colon == std::string_view::npos) return std::nullopt;
  const auto kind = spec.substr(0, colon);
  const auto arg = spec.substr(colon + 1);

  auto number = [&]() {
    auto n = detail::parse_count(arg);
    if (!n) throw InputError("builder '" + std::string(kind) + "' needs a non-negative integer, got '" +
                             std::string(arg) + "'");
    if (*n > detail::kMaxOrder) throw InputError("builder size exceeds " + std::to_string(detail::kMaxOrder));
    return *n;
  };
  auto binary = [&](char sep, auto op) -> Graph {
    for (std::size_t i = arg.find(sep); i != std::string_view::npos; i = arg.find(sep, i + 1)) {
      try {
        auto a = build_graph(arg.substr(0, i));
        auto b = build_graph(arg.substr(i + 1));
        if (a && b) return op(*a, *b);
      } catch (const InputError&) {
      }
    }
    throw InputError("cannot split '" + std::string(arg) + "' into two builder expressions at '" +
                     std::string(1, sep) + "'");
  };

  if (kind == "path") return path_graph(number());
  if (kind == "cycle") {
    auto n = number();
    if (n < 3) throw InputError("cycle needs at least 3 vertices");
    return cycle_graph(n);
  }
  if (kind == "complete") return complete_graph(number());
  if (kind == "kr2") return kr2_graph(number());
  if (kind == "complement") {
    auto inner = build_graph(arg);
    if (!inner) throw InputError("complement: expects a builder expression");
    return complement(*inner);
  }
  if (kind == "union") return binary('+', [](const Graph& a, const Graph& b) { return disjoint_union(a, b); });
  if (kind == "join") return binary('*', [](const Graph& a, const Graph& b) { return join(a, b); });
  throw InputError("unknown builder '" + std::string(kind) + "'");
}

inline std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

/// Resolves a command-line graph argument: a builder expression or a file.
inline GraphDocument load_graph(const std::string& arg) {
  if (auto g = build_graph(arg)) {
    std::string name = arg;
    std::replace_if(name.begin(), name.end(), [](char c) { return c == ' ' || c == '\t'; }, '_');
    return {name, std::move(*g)};
  }
  try {
    return parse_graph(read_file(arg));
  } catch (const InputError& e) {
    throw InputError(arg + ": " + e.what());
  }
}

// ---------------------------------------------------------------------------
// Certificates

namespace detail {

inline void write_map(std::ostream& os, const VertexMap& map) {
  for (std::size_t i = 0; i < map.size(); ++i) os << "map " << i << ' ' << map[i] << '\n';
}

inline VertexMap read_map(Lines& in, std::size_t size) {
  VertexMap map(size);
  for (std::size_t i = 0; i < size; ++i) {
    const auto& t = in.expect("map", 2);
    if (in.count(t[1]) != i) throw InputError("map entries must be listed in order 0, 1, ...", in.line());
    map[i] = in.count(t[2]);
    in.next();
  }
  return map;
}

}  // namespace detail

inline std::string serialize_certificate(const Certificate& c) {
  std::ostringstream os;
  os << "raag-certificate 1\n";
  os << "convention " << (c.convention == Convention::G ? "G" : "A") << '\n';
  detail::write_graph_block(os, "lhs", c.lhs);
  detail::write_graph_block(os, "rhs", c.rhs);
  os << "steps " << c.steps.size() << '\n';
  for (const auto& s : c.steps) {
    if (const auto* f = std::get_if<FullStep>(&s)) {
      os << "step full\n";
      detail::write_graph_block(os, "source", f->source());
      detail::write_graph_block(os, "target", f->target());
      detail::write_map(os, f->witness.map);
    } else {
      const auto& d = std::get<DoubleCollapseStep>(s);
      os << "step double-collapse\n";
      os << "vertex " << d.vertex << '\n';
      detail::write_graph_block(os, "source", d.source());
      detail::write_graph_block(os, "target", d.target);
      detail::write_graph_block(os, "double", d.iso.target);
      detail::write_map(os, d.iso.map);
    }
  }
  return os.str();
}

/// Parses the certificate text format. Structural problems are input errors;
/// whether the chain is valid is left to validate().
inline Certificate parse_certificate(std::string_view text) {
  detail::Lines in(text);
  {
    const auto& t = in.expect("raag-certificate", 1);
    if (t[1] != "1") throw InputError("unsupported certificate version", in.line());
    in.next();
  }
  Certificate c;
  {
    const auto& t = in.expect("convention", 1);
    if (t[1] == "G")
      c.convention = Convention::G;
    else if (t[1] == "A")
      c.convention = Convention::A;
    else
      throw InputError("convention must be A or G", in.line());
    in.next();
  }
  c.lhs = detail::read_graph_block(in).graph;
  c.rhs = detail::read_graph_block(in).graph;
  const std::size_t count = in.count(in.expect("steps", 1)[1]);
  in.next();
  for (std::size_t i = 0; i < count; ++i) {
    const auto& t = in.expect("step", 1);
    const std::string kind(t[1]);
    in.next();
    if (kind == "full") {
      FullStep f;
      f.witness.source = detail::read_graph_block(in).graph;
      f.witness.target = detail::read_graph_block(in).graph;
      f.witness.map = detail::read_map(in, f.witness.source.order());
      c.steps.emplace_back(std::move(f));
    } else if (kind == "double-collapse") {
      DoubleCollapseStep d;
      d.vertex = in.count(in.expect("vertex", 1)[1]);
      in.next();
      d.iso.source = detail::read_graph_block(in).graph;
      d.target = detail::read_graph_block(in).graph;
      d.iso.target = detail::read_graph_block(in).graph;
      d.iso.map = detail::read_map(in, d.iso.source.order());
      c.steps.emplace_back(std::move(d));
    } else {
      throw InputError("unknown step kind '" + kind + "'", in.line());
    }
  }
  if (!in.done()) throw InputError("unexpected content after the last step", in.line());
  return c;
}

// ---------------------------------------------------------------------------
// Structured output
//
// Lines are `key: value` or `key {` ... `}` with two-space indentation per
// level. Graph payloads are graph documents, indented.

class StructuredWriter {
 public:
  explicit StructuredWriter(std::ostream& os) : os_(os) {}

  StructuredWriter& field(std::string_view key, const std::string& value) {
    indent() << key << ": " << value << '\n';
    return *this;
  }
  template <class T>
  StructuredWriter& field(std::string_view key, const T& value) {
    std::ostringstream ss;
    ss << value;
    return field(key, ss.str());
  }
  StructuredWriter& open(std::string_view key) {
    indent() << key << " {\n";
    ++depth_;
    return *this;
  }
  StructuredWriter& close() {
    --depth_;
    indent() << "}\n";
    return *this;
  }
  StructuredWriter& text(std::string_view key, const std::string& body) {
    open(key);
    std::istringstream ss(body);
    for (std::string line; std::getline(ss, line);) indent() << line << '\n';
    return close();
  }
  StructuredWriter& graph(std::string_view key, const Graph& g, const std::string& name = "g") {
    return text(key, serialize_graph(g, name));
  }
  StructuredWriter& list(std::string_view key, const std::vector<std::size_t>& xs) {
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? " " : "") + std::to_string(xs[i]);
    return field(key, s);
  }

 private:
  std::ostream& indent() {
    for (int i = 0; i < depth_; ++i) os_ << "  ";
    return os_;
  }
  std::ostream& os_;
  int depth_ = 0;
};

inline void write_obstruction(StructuredWriter& w, const Obstruction& o) {
  w.open("obstruction");
  if (const auto* f = std::get_if<ForestObstruction>(&o)) {
    w.field("kind", "linear-forest");
    w.graph("forest", f->forest, "forest");
    w.list("vertices-in-lhs", f->witness_in_lhs.map);
    w.field("search-nodes", f->nonembed_in_rhs.search_nodes);
    w.field("exhaustive", f->nonembed_in_rhs.exhaustive ? "true" : "false");
  } else {
    const auto& t = std::get<TableEntry>(o);
    w.field("kind", "table-entry");
    w.field("lhs", std::string(to_string(t.lhs_family)) + " " + std::to_string(t.m));
    w.field("rhs", std::string(to_string(t.rhs_family)) + " " + std::to_string(t.n));
  }
  w.close();
}

inline void write_budgets(StructuredWriter& w, const Budgets& b) {
  w.open("budgets");
  w.field("solver", b.solver);
  w.field("forest-cap", b.forest_cap);
  w.field("double-depth", b.double_depth);
  w.field("vertex-cap", b.vertex_cap);
  w.close();
}

inline void write_decision(StructuredWriter& w, const Decision& d) {
  w.field("verdict", to_string(d.verdict));
  w.field("provenance", to_string(d.provenance));
  w.field("citation", d.citation);
  if (d.depth) w.field("depth", *d.depth);
  std::visit(
      [&](const auto& e) {
        using E = std::decay_t<decltype(e)>;
        if constexpr (std::is_same_v<E, Certificate>) {
          w.text("certificate", serialize_certificate(e));
        } else if constexpr (std::is_same_v<E, Obstruction>) {
          write_obstruction(w, e);
        } else if constexpr (std::is_same_v<E, BudgetReport>) {
          w.open("budget-report");
          write_budgets(w, e.budgets);
          w.field("solver-exhausted", e.solver_exhausted ? "true" : "false");
          for (const auto& n : e.notes) w.field("note", n);
          w.close();
        } else if constexpr (std::is_same_v<E, TableEntry>) {
          w.open("table-entry");
          w.field("lhs", std::string(to_string(e.lhs_family)) + " " + std::to_string(e.m));
          w.field("rhs", std::string(to_string(e.rhs_family)) + " " + std::to_string(e.n));
          w.close();
        }
      },
      d.evidence);
}

}  // namespace raag
