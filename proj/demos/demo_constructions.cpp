// Walks through the configuration generators: builds one of each, prints the
// halving-edge counts next to the certified expectations, and composes two
// generators with cross and pad.

#include <halving/constructions.hpp>
#include <halving/verification.hpp>

#include <iostream>

using namespace halving;

namespace {

void report(const std::string& label, const Construction& c) {
  const UnderlyingGeograph g = underlying_geograph(c.config);
  std::cout << label << ": n = " << g.n() << ", E = " << g.E();
  if (c.cert.expected_edges) std::cout << " (certified " << *c.cert.expected_edges << ")";
  if (!c.cert.marked.empty())
    std::cout << ", marked " << c.cert.marked_shape << " of " << c.cert.marked.size()
              << " vertices";
  const CertCheck check = validate_cert(c.config, c.cert);
  std::cout << (check.ok ? "" : "  CERT MISMATCH: " + check.detail) << "\n";
}

}  // namespace

int main() {
  report("convex polygon, 10 points", convex_polygon(10));
  report("star, 10 points", star(10));
  report("path, 10 points", path_construction(10));
  report("path with four leaves, 10 points", path_construction(10, true));
  report("cycle, 12 points", cycle_construction(12));
  report("clique, 4 marked vertices", clique_construction(4));

  AbstractGraph square;
  square.n = 4;
  square.edges = {{0, 1}, {1, 2}, {2, 3}, {3, 0}};
  report("induced 4-cycle", induced_embedding(square));

  const Construction combined = cross(convex_polygon(6).config, star(6).config);
  report("cross of hexagon and star", combined);

  report("hexagon padded to 12 points", pad(convex_polygon(6).config, 12));

  const Construction y = y_shape(convex_polygon(4).config, star(4).config,
                                 convex_polygon(4).config);
  report("y-shape of three 4-point branches", y);

  std::cout << "\nfull verification of the y-shape:\n";
  const VerificationReport rep = verify_all(y.config);
  for (const auto& chk : rep.checks)
    std::cout << "  " << (chk.pass ? "pass" : "FAIL") << "  " << chk.name
              << (chk.witness.empty() ? "" : "  (" + chk.witness + ")") << "\n";
  std::cout << rep.passed << " passed, " << rep.failed << " failed\n";
  return rep.all_pass() ? 0 : 1;
}
