#include <iostream>

#include "raag/raag.hpp"

int main() {
  using namespace raag;

  auto d = decide(cycle_graph(4), path_graph(3));
  std::cout << "G(C_4) in G(P_3): " << to_string(d.verdict) << " via " << to_string(d.provenance) << '\n';
  if (const auto* c = std::get_if<Certificate>(&d.evidence)) {
    std::cout << serialize_certificate(*c);
    std::cout << "checks: " << (validate(*c).ok ? "ok" : "broken") << '\n';
  }

  auto cx = counterexample(star_graph(4));
  std::cout << "\nK_{1,4} is not a full subgraph of\n" << serialize_graph(cx.gamma, "gamma")
            << "yet its RAAG embeds (" << cx.certificate.steps.size() << " certified steps)\n";

  auto flat = flatten_tree(star_graph(6));
  std::cout << "\nK_{1,6} flattens to a tree on " << flat.tree.order() << " vertices of max degree "
            << flat.tree.max_degree() << '\n';
}
