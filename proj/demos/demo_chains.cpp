// Decomposes a configuration into rotating-line chains and prints the result:
// the chains themselves, the straddling span with its witness line, the chain
// crossings, and the outcome of the crossing-charging audit.

#include <halving/chains.hpp>
#include <halving/constructions.hpp>

#include <iostream>

using namespace halving;

int main(int argc, char** argv) {
  const int n = argc > 1 ? std::atoi(argv[1]) : 8;
  const Construction c = path_construction(n);
  const UnderlyingGeograph g = underlying_geograph(c.config);
  std::cout << "path construction on " << n << " points: " << g.E() << " halving edges\n";

  const Direction up = generic_up_direction(c.config);
  std::cout << "generic up direction: " << format_scalar(up.dx) << ", " << format_scalar(up.dy)
            << "\n\n";

  const ChainDecomposition d = decompose_chains(g, up);
  std::cout << d.chains.size() << " chains (left-to-right vertex ranks in parentheses):\n";
  std::vector<int> rank(static_cast<std::size_t>(g.n()));
  for (std::size_t r = 0; r < d.vertex_order.size(); ++r)
    rank[static_cast<std::size_t>(d.vertex_order[r])] = static_cast<int>(r);
  for (std::size_t i = 0; i < d.chains.size(); ++i) {
    std::cout << "  chain " << i << ":";
    for (int v : d.chains[i].vertices)
      std::cout << " " << v << "(" << rank[static_cast<std::size_t>(v)] << ")";
    std::cout << "\n";
  }
  std::cout << "mirrored-procedure cross-check: " << (reverse_check(g, up) ? "agrees" : "DISAGREES")
            << "\n\n";

  const auto crossings = geometric_crossings(d);
  std::cout << crossings.size() << " chain crossings\n";

  const StraddlingSpan s = straddling_span(g);
  std::cout << "straddling span " << s.span << " (witness line through "
            << format_scalar(s.witness.through.x) << ", " << format_scalar(s.witness.through.y)
            << " crossing " << edges_straddled(g, s.witness) << " edges)\n";

  const ChargingReport charge = verify_charging(g, 8);
  std::cout << "charging audit over " << charge.orientations_tested << " orientations on "
            << charge.crossings << " crossings: "
            << (charge.ok() ? "no violations"
                            : std::to_string(charge.violations.size()) + " violations")
            << "\n";
  return charge.ok() && reverse_check(g, up) ? 0 : 1;
}
