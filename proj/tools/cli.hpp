#pragma once

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "raag/raag.hpp"

namespace raag::cli {

enum ExitCode : int { kYes = 0, kNo = 1, kUnknown = 2, kInputError = 3, kBudgetFault = 4 };

class BudgetFault : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline int exit_code(Verdict v) {
  switch (v) {
    case Verdict::yes: return kYes;
    case Verdict::no: return kNo;
    case Verdict::unknown: return kUnknown;
  }
  return kUnknown;
}

inline std::string join_list(const std::vector<std::size_t>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? " " : "") + std::to_string(xs[i]);
  return s;
}

inline Family parse_family(const std::string& s) {
  if (s == "path") return Family::path;
  if (s == "cycle") return Family::cycle;
  throw InputError("family must be 'path' or 'cycle', got '" + s + "'");
}

inline Sign parse_sign(const std::string& s) {
  if (s == "plus" || s == "+") return Sign::plus;
  if (s == "minus" || s == "-") return Sign::minus;
  throw InputError("sign must be 'plus' or 'minus', got '" + s + "'");
}

struct Options {
  Budgets budgets;
  std::string format = "text";
  std::string cert_out;

  bool structured() const { return format == "structured"; }
};

/// Runs one command line; results go to `out`, diagnostics to `err`.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Embedding questions for right-angled Artin groups", "raag"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--solver-budget", opt.budgets.solver, "search nodes per solver call")->capture_default_str();
  app.add_option("--forest-cap", opt.budgets.forest_cap, "largest obstruction forest (0 = min(|lhs|, 8))")
      ->capture_default_str();
  app.add_option("--double-depth", opt.budgets.double_depth, "doubling depth")->capture_default_str();
  app.add_option("--vertex-cap", opt.budgets.vertex_cap, "largest double explored")->capture_default_str();
  app.add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"text", "structured"}))
      ->capture_default_str();
  app.add_option("--cert-out", opt.cert_out, "write the certificate to this file");
  app.fallthrough();

  std::string a1, a2;
  std::size_t n1 = 0, n2 = 0, n3 = 0;
  long long l1 = 0, l2 = 0, l3 = 0;
  int code = kYes;
  StructuredWriter sw(out);

  auto write_cert = [&](const Certificate& c) {
    if (opt.cert_out.empty()) return;
    std::ofstream f(opt.cert_out, std::ios::binary);
    if (!f) throw InputError("cannot write '" + opt.cert_out + "'");
    f << serialize_certificate(c);
  };
  auto print_graph = [&](const std::string& key, const Graph& g, const std::string& name) {
    if (opt.structured())
      sw.graph(key, g, name);
    else
      out << serialize_graph(g, name);
  };

  auto* decide_cmd = app.add_subcommand("decide", "decide whether G(lhs) embeds in G(rhs)");
  decide_cmd->add_option("lhs", a1)->required();
  decide_cmd->add_option("rhs", a2)->required();
  decide_cmd->callback([&] {
    auto lhs = load_graph(a1), rhs = load_graph(a2);
    auto d = decide(lhs.graph, rhs.graph, opt.budgets);
    if (opt.structured()) {
      write_decision(sw, d);
    } else {
      out << to_string(d.verdict) << " (" << to_string(d.provenance) << ")\n";
      out << "citation: " << d.citation << '\n';
      if (d.depth) out << "depth: " << *d.depth << '\n';
      if (const auto* c = std::get_if<Certificate>(&d.evidence)) out << "certificate: " << c->steps.size() << " step(s)\n";
      if (const auto* b = std::get_if<BudgetReport>(&d.evidence))
        for (const auto& n : b->notes) out << "note: " << n << '\n';
      if (const auto* o = std::get_if<Obstruction>(&d.evidence))
        if (const auto* f = std::get_if<ForestObstruction>(o))
          out << "obstruction: induced linear forest on vertices " << join_list(f->witness_in_lhs.map) << '\n';
    }
    if (const auto* c = std::get_if<Certificate>(&d.evidence)) write_cert(*c);
    code = exit_code(d.verdict);
  });

  auto* table_cmd = app.add_subcommand("table", "closed-form answer for paths and cycles");
  table_cmd->add_option("lhs-family", a1)->required();
  table_cmd->add_option("m", n1)->required();
  table_cmd->add_option("rhs-family", a2)->required();
  table_cmd->add_option("n", n2)->required();
  table_cmd->callback([&] {
    Decision d;
    try {
      d = decide_path_cycle(parse_family(a1), n1, parse_family(a2), n2);
    } catch (const std::invalid_argument& e) {
      throw InputError(e.what());
    }
    if (opt.structured()) {
      sw.field("verdict", to_string(d.verdict));
      sw.field("provenance", to_string(d.provenance));
      sw.field("citation", d.citation);
    } else {
      out << to_string(d.verdict) << " (" << to_string(d.provenance) << ")\n";
      out << "citation: " << d.citation << '\n';
    }
    code = exit_code(d.verdict);
  });

  auto* cx_cmd = app.add_subcommand("counterexample", "build Gamma with G(Lambda) <= G(Gamma) but Lambda not <= Gamma");
  cx_cmd->add_option("graph", a1)->required();
  cx_cmd->callback([&] {
    auto g = load_graph(a1);
    Counterexample cx;
    try {
      cx = counterexample(g.graph, opt.budgets.solver);
    } catch (const std::invalid_argument& e) {
      throw InputError(e.what());
    }
    if (!cx.non_embedding.exhaustive) throw BudgetFault("non-embedding check ran out of budget");
    if (opt.structured()) {
      sw.field("rule", to_string(cx.rule));
      if (cx.move)
        sw.field("move", std::string(to_string(cx.move->sign)) + " u=" + std::to_string(cx.move->u) +
                             " w1=" + std::to_string(cx.move->w1) + " w2=" + std::to_string(cx.move->w2));
      sw.graph("gamma", cx.gamma, "gamma");
      sw.field("full-subgraph", "absent");
      sw.field("search-nodes", cx.non_embedding.search_nodes);
      sw.text("certificate", serialize_certificate(cx.certificate));
    } else {
      out << "rule: " << to_string(cx.rule) << '\n';
      if (cx.move)
        out << "move: " << to_string(cx.move->sign) << " u=" << cx.move->u << " w1=" << cx.move->w1
            << " w2=" << cx.move->w2 << '\n';
      out << serialize_graph(cx.gamma, "gamma");
      out << "lambda is not a full subgraph of gamma (" << cx.non_embedding.search_nodes << " search nodes)\n";
      out << "certificate: " << cx.certificate.steps.size() << " step(s)\n";
    }
    write_cert(cx.certificate);
  });

  auto* flat_cmd = app.add_subcommand("flatten", "reduce a tree to maximum degree 3");
  flat_cmd->add_option("tree", a1)->required();
  flat_cmd->callback([&] {
    auto g = load_graph(a1);
    if (!is_tree(g.graph)) throw InputError("flatten: input is not a tree");
    auto r = flatten_tree(g.graph);
    if (opt.structured()) {
      sw.field("excess", tree_excess(g.graph));
      sw.field("moves", r.moves.size());
      sw.graph("tree", r.tree, "tree");
      sw.text("certificate", serialize_certificate(r.certificate));
    } else {
      out << "excess: " << tree_excess(g.graph) << '\n';
      out << "moves: " << r.moves.size() << '\n';
      out << serialize_graph(r.tree, "tree");
    }
    write_cert(r.certificate);
  });

  auto* sub_cmd = app.add_subcommand("subdivide", "subdivide the edge [u,v]");
  sub_cmd->add_option("graph", a1)->required();
  sub_cmd->add_option("u", n1)->required();
  sub_cmd->add_option("v", n2)->required();
  sub_cmd->callback([&] {
    auto g = load_graph(a1);
    if (n1 >= g.graph.order() || n2 >= g.graph.order() || !g.graph.adjacent(n1, n2))
      throw InputError("subdivide: [u,v] is not an edge");
    ChainBuilder chain(Convention::G, g.graph);
    auto s = append_subdivision(chain, g.graph, {n1, n2});
    auto cert = std::move(chain).finish();
    if (opt.structured()) {
      sw.field("new-vertex", s.new_vertex);
      sw.graph("graph", s.graph, "subdivided");
      sw.text("certificate", serialize_certificate(cert));
    } else {
      out << "new vertex: " << s.new_vertex << '\n' << serialize_graph(s.graph, "subdivided");
    }
    write_cert(cert);
  });

  auto* dbl_cmd = app.add_subcommand("double", "double a graph along the star of v");
  dbl_cmd->add_option("graph", a1)->required();
  dbl_cmd->add_option("v", n1)->required();
  dbl_cmd->callback([&] {
    auto g = load_graph(a1);
    if (n1 >= g.graph.order()) throw InputError("double: vertex out of range");
    auto d = double_along_star(g.graph, n1);
    if (opt.structured()) {
      sw.list("star", d.star);
      sw.list("copy-injection", d.copy_injection);
      sw.graph("graph", d.graph, "double");
    } else {
      out << "star: " << join_list(d.star) << '\n';
      out << "copy: " << join_list(d.copy_injection) << '\n';
      out << serialize_graph(d.graph, "double");
    }
  });

  auto* pm_cmd = app.add_subcommand("pm", "apply the plus or minus construction at u");
  pm_cmd->add_option("graph", a1)->required();
  pm_cmd->add_option("u", n1)->required();
  pm_cmd->add_option("w1", n2)->required();
  pm_cmd->add_option("w2", n3)->required();
  pm_cmd->add_option("sign", a2)->required();
  pm_cmd->callback([&] {
    auto g = load_graph(a1);
    const Sign sign = parse_sign(a2);
    ChainBuilder chain(Convention::G, g.graph);
    PMResult r;
    try {
      r = append_pm(chain, g.graph, n1, n2, n3, sign);
    } catch (const std::invalid_argument& e) {
      throw InputError(e.what());
    }
    auto cert = std::move(chain).finish();
    if (opt.structured()) {
      sw.field("new-vertex", r.move.new_vertex);
      sw.graph("graph", r.graph, "pm");
      sw.text("certificate", serialize_certificate(cert));
    } else {
      out << "new vertex: " << r.move.new_vertex << '\n' << serialize_graph(r.graph, "pm");
    }
    write_cert(cert);
  });

  auto* comp_cmd = app.add_subcommand("complement", "print the complement graph");
  comp_cmd->add_option("graph", a1)->required();
  comp_cmd->callback([&] {
    auto g = load_graph(a1);
    print_graph("graph", complement(g.graph), g.name + "-complement");
  });

  auto* embed_cmd = app.add_subcommand("embed", "search for a full embedding of pattern into host");
  embed_cmd->add_option("pattern", a1)->required();
  embed_cmd->add_option("host", a2)->required();
  embed_cmd->callback([&] {
    auto p = load_graph(a1), h = load_graph(a2);
    auto s = find_full_embedding(p.graph, h.graph, opt.budgets.solver);
    if (s.exhausted()) throw BudgetFault("embedding search ran out of budget after " + std::to_string(s.nodes) + " nodes");
    if (opt.structured()) {
      sw.field("found", s.found() ? "true" : "false");
      sw.field("search-nodes", s.nodes);
      if (s.found()) sw.list("map", s.witness->map);
    } else if (s.found()) {
      out << "embedding: " << join_list(s.witness->map) << '\n';
    } else {
      out << "no full embedding (" << s.nodes << " search nodes)\n";
    }
    code = s.found() ? kYes : kNo;
  });

  auto* cls_cmd = app.add_subcommand("classify", "linear-forest, degree and tree data");
  cls_cmd->add_option("graph", a1)->required();
  cls_cmd->callback([&] {
    auto g = load_graph(a1);
    auto lf = linear_forest(g.graph);
    auto dc = degree_classes(g.graph);
    auto tm = tree_measures(g.graph);
    std::string forest;
    if (const auto* d = std::get_if<LinearForestDecomposition>(&lf))
      forest = "paths " + join_list(d->path_lengths);
    else {
      const auto& r = std::get<ForestRefusal>(lf);
      forest = (r.kind == ForestRefusal::Kind::cycle ? "cycle " : "high-degree ") + join_list(r.witness);
    }
    auto emit = [&](const std::string& k, const std::string& v) {
      if (opt.structured())
        sw.field(k, v);
      else
        out << k << ": " << v << '\n';
    };
    emit("order", std::to_string(g.graph.order()));
    emit("edges", std::to_string(g.graph.edge_count()));
    emit("linear-forest", forest);
    for (std::size_t d = 0; d < dc.by_degree.size(); ++d)
      if (!dc.by_degree[d].empty()) emit("degree-" + std::to_string(d), join_list(dc.by_degree[d]));
    emit("v3-edgeless-link", join_list(dc.v3_edgeless));
    emit("v3-link-with-edge", join_list(dc.v3_star));
    emit("v3-complete-link", join_list(dc.v3_complete));
    emit("tree", tm.is_tree ? "true" : "false");
    if (tm.is_tree) {
      emit("excess", std::to_string(tm.excess));
      emit("condition-c", tm.condition_c ? "true" : "false");
    }
  });

  auto* ver_cmd = app.add_subcommand("verify", "validate a certificate file");
  ver_cmd->add_option("certificate", a1)->required();
  ver_cmd->callback([&] {
    auto c = parse_certificate(read_file(a1));
    auto r = validate(c);
    if (opt.structured()) {
      sw.field("valid", r.ok ? "true" : "false");
      if (!r.ok) {
        if (r.step) sw.field("step", *r.step);
        sw.field("reason", r.reason);
      }
    } else if (r.ok) {
      out << "valid (" << c.steps.size() << " step(s))\n";
    } else {
      out << "invalid";
      if (r.step) out << " at step " << *r.step;
      out << ": " << r.reason << '\n';
    }
    code = r.ok ? kYes : kNo;
  });

  auto* mcg_cmd = app.add_subcommand("mcg", "does A(K_r(2)) embed in the mapping class group of S_{g,n}");
  mcg_cmd->add_option("genus", l1)->required();
  mcg_cmd->add_option("punctures", l2)->required();
  mcg_cmd->add_option("r", l3)->required();
  mcg_cmd->callback([&] {
    McgCriterion m;
    try {
      m = kr2_mcg_embeds(l1, l2, l3);
    } catch (const std::invalid_argument& e) {
      throw InputError(e.what());
    }
    if (opt.structured()) {
      sw.field("verdict", m.embeds ? "yes" : "no");
      sw.field("bound", m.bound);
      sw.field("chromatic-number", m.chromatic_number);
      sw.graph("kr2", m.kr2, "kr2");
    } else {
      out << (m.embeds ? "yes" : "no") << " (r <= " << m.bound << " required)\n";
    }
    code = m.embeds ? kYes : kNo;
  });


  try {
    std::reverse(args.begin(), args.end());
    app.parse(std::move(args));
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kYes;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const BudgetFault& e) {
    err << "budget fault: " << e.what() << '\n';
    return kBudgetFault;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    err << "internal fault: " << e.what() << '\n';
    return kBudgetFault;
  }
  return code;
}

inline int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(std::move(args), out, err);
}

}  // namespace raag::cli
