// Acceptance checks for the halving-line toolkit. Each test case is one
// criterion; the registered listener prints exactly one PASS/FAIL line per
// criterion with its wall-clock time. Time budgets are asserted in-case.

#include <halving/chains.hpp>
#include <halving/cli.hpp>
#include <halving/constructions.hpp>
#include <halving/halving.hpp>
#include <halving/search.hpp>
#include <halving/verification.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>

#include "test_support.hpp"

using namespace halving;

namespace {

class CriterionReporter : public Catch::EventListenerBase {
 public:
  using Catch::EventListenerBase::EventListenerBase;

  void testCaseStarting(const Catch::TestCaseInfo&) override { timer_.start(); }

  void testCaseEnded(const Catch::TestCaseStats& stats) override {
    const bool pass = stats.totals.assertions.failed == 0 && !stats.aborting;
    std::printf("[%s] %s (%.2f s)\n", pass ? "PASS" : "FAIL", stats.testInfo->name.c_str(),
                timer_.getElapsedSeconds());
    std::fflush(stdout);
  }

 private:
  Catch::Timer timer_;
};

// Every geograph built anywhere in this binary lands here so the bound
// criterion can audit the whole session.
std::vector<std::pair<int, int>>& edge_registry() {
  static std::vector<std::pair<int, int>> reg;
  return reg;
}

UnderlyingGeograph build(const PointConfig& cfg) {
  UnderlyingGeograph g = underlying_geograph(cfg, EnumMethod::rotational_sweep);
  edge_registry().push_back({g.n(), g.E()});
  return g;
}

bool walk_is_path(const UnderlyingGeograph& g, const std::vector<int>& verts, bool closed) {
  if (verts.size() < 2) return false;
  std::set<int> distinct(verts.begin(), verts.end());
  if (distinct.size() != verts.size()) return false;
  for (std::size_t i = 0; i + 1 < verts.size(); ++i)
    if (!g.has_edge(verts[i], verts[i + 1])) return false;
  return !closed || g.has_edge(verts.back(), verts.front());
}

// Independent reference for the straddling span. A vertex-avoiding line
// splits the points into two strict sides; sliding and rotating the line
// until it rests on two points shows every such split arises from an
// ordered point pair with each of the two touched points resolved to either
// side. Enumerating all pairs and all four resolutions is therefore the
// dense limit of sampling lines, and exact.
int oracle_span(const UnderlyingGeograph& g) {
  const auto& cfg = g.config;
  const int n = g.n();
  int best = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      for (int mask = 0; mask < 4; ++mask) {
        std::vector<char> left(static_cast<std::size_t>(n));
        for (int x = 0; x < n; ++x) {
          if (x == i)
            left[static_cast<std::size_t>(x)] = (mask & 1) != 0;
          else if (x == j)
            left[static_cast<std::size_t>(x)] = (mask & 2) != 0;
          else
            left[static_cast<std::size_t>(x)] =
                orientation(cfg[i], cfg[j], cfg[x]) == Orientation::CCW;
        }
        int cut = 0;
        for (auto [a, b] : g.edges)
          if (left[static_cast<std::size_t>(a)] != left[static_cast<std::size_t>(b)]) ++cut;
        best = std::max(best, cut);
      }
    }
  }
  return best;
}

struct Budget {
  explicit Budget(double limit) : limit_seconds(limit) { timer.start(); }
  void check() const {
    INFO("time budget " << limit_seconds << " s");
    CHECK(timer.getElapsedSeconds() < limit_seconds);
  }
  double limit_seconds;
  Catch::Timer timer;
};

}  // namespace

CATCH_REGISTER_LISTENER(CriterionReporter)

TEST_CASE("criterion 01: polygon and star edge counts") {
  Budget budget(1.0);
  for (int n = 4; n <= 20; n += 2) {
    const Construction poly = convex_polygon(n);
    CHECK(build(poly.config).E() == n / 2);

    const Construction st = star(n);
    const UnderlyingGeograph g = build(st.config);
    CHECK(g.E() == n - 1);
    CHECK(vertex_degrees(g).back() == n - 1);  // the near-center point is last
  }
  budget.check();
}

TEST_CASE("criterion 02: four-point configurations") {
  Budget budget(1.0);

  PointConfig quad;
  quad.points = {{Scalar(0), Scalar(0)}, {Scalar(4), Scalar(0)},
                 {Scalar(5), Scalar(3)}, {Scalar(-1), Scalar(2)}};
  REQUIRE(validate_general_position(quad).ok);
  CHECK(build(quad).E() == 2);

  PointConfig triangle;
  triangle.points = {{Scalar(0), Scalar(0)}, {Scalar(8), Scalar(0)},
                     {Scalar(4), Scalar(7)}, {Scalar(4), Scalar(3)}};
  REQUIRE(validate_general_position(triangle).ok);
  CHECK(build(triangle).E() == 3);

  for (const PointConfig* cfg : {&quad, &triangle})
    CHECK(underlying_geograph(*cfg, EnumMethod::brute_force).edges ==
          underlying_geograph(*cfg, EnumMethod::rotational_sweep).edges);

  budget.check();
}

TEST_CASE("criterion 03: structural invariants with negative controls") {
  Budget budget(120.0);

  auto invariants_hold = [](const UnderlyingGeograph& g) {
    for (const CheckResult& r :
         {check_odd_degrees(g), check_leaf_count(g), check_hull_degree_one(g),
          check_half_plane(g), check_degree_max_star(g), check_degree_count_near_max(g),
          check_degree_sum(g)}) {
      if (!r.pass) {
        UNSCOPED_INFO(r.name << ": " << r.witness);
        return false;
      }
    }
    return true;
  };

  for (const auto& c : testsupport::generator_corpus()) {
    INFO("generator " << c.cert.kind << " n=" << c.config.n());
    CHECK(invariants_hold(build(c.config)));
  }

  for (int n = 4; n <= 16; n += 2) {
    std::mt19937_64 rng(0xACCE5500ull + static_cast<unsigned long long>(n));
    int failures = 0;
    for (int t = 0; t < 1000; ++t) {
      const UnderlyingGeograph g = build(random_config(n, rng));
      if (!invariants_hold(g)) ++failures;
    }
    INFO("n=" << n);
    CHECK(failures == 0);
  }

  // negative controls: fabricated edge sets must trip their checks
  const PointConfig hexagon = convex_polygon(6).config;
  const UnderlyingGeograph honest = underlying_geograph(hexagon);
  auto tampered = [&](std::vector<std::pair<int, int>> edges) {
    UnderlyingGeograph g = honest;
    std::sort(edges.begin(), edges.end());
    g.edges = std::move(edges);
    return g;
  };

  CHECK_FALSE(check_odd_degrees(tampered({{0, 1}, {0, 2}})).pass);
  CHECK_FALSE(
      check_leaf_count(tampered({{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}})).pass);
  CHECK_FALSE(check_hull_degree_one(tampered({{0, 1}, {0, 2}})).pass);
  CHECK_FALSE(check_degree_max_star(
                  tampered({{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5},
                            {1, 2}, {1, 3}, {1, 4}, {1, 5}}))
                  .pass);
  // four vertices of degree n-3 = 3 exceed the allowed three
  CHECK_FALSE(check_degree_count_near_max(
                  tampered({{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}))
                  .pass);
  // non-adjacent 0 and 1 with degree sum 5 > n - 2 = 4
  CHECK_FALSE(
      check_degree_sum(tampered({{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}})).pass);

  // neighbors of vertex 0 packed at angles 0, 45, 90: the outer pair's
  // closed half-plane swallows every other edge
  PointConfig narrow;
  narrow.points = {{Scalar(0), Scalar(0)}, {Scalar(3), Scalar(0)},
                   {Scalar(2), Scalar(2)}, {Scalar(0), Scalar(3)}};
  CHECK_FALSE(check_half_plane(UnderlyingGeograph{narrow, {{0, 1}, {0, 2}, {0, 3}}}).pass);

  budget.check();
}

TEST_CASE("criterion 04: chain decomposition properties") {
  Budget budget(120.0);

  auto chains_hold = [](const PointConfig& cfg, const UnderlyingGeograph& g) {
    for (const CheckResult& r : check_chains(g, generic_up_direction(cfg))) {
      if (!r.pass) {
        UNSCOPED_INFO(r.name << ": " << r.witness);
        return false;
      }
    }
    return true;
  };

  for (const auto& c : testsupport::generator_corpus()) {
    INFO("generator " << c.cert.kind << " n=" << c.config.n());
    CHECK(chains_hold(c.config, build(c.config)));
  }

  for (int n = 4; n <= 16; n += 2) {
    std::mt19937_64 rng(0xACCE5500ull + static_cast<unsigned long long>(n));
    int failures = 0;
    for (int t = 0; t < 1000; ++t) {
      const PointConfig cfg = random_config(n, rng);
      if (!chains_hold(cfg, build(cfg))) ++failures;
    }
    INFO("n=" << n);
    CHECK(failures == 0);
  }

  budget.check();
}

TEST_CASE("criterion 05: y-shape edge formula") {
  Budget budget(30.0);
  std::mt19937_64 rng(0x5ca1ab1eull);
  for (int trial = 0; trial < 20; ++trial) {
    const int nb = 4 + 2 * (trial % 3);
    const PointConfig b1 = random_config(nb, rng);
    const PointConfig b2 = random_config(nb, rng);
    const PointConfig b3 = random_config(nb, rng);
    const int k1 = build(b1).E();
    const int k2 = build(b2).E();
    const int k3 = build(b3).E();

    const Construction y = y_shape(b1, b2, b3);
    INFO("trial " << trial << " branch size " << nb);
    CHECK(build(y.config).E() == k1 + k2 + k3 + 3 * nb / 2);
  }
  budget.check();
}

TEST_CASE("criterion 06: path and cycle constructions") {
  Budget budget(60.0);

  for (int n = 4; n <= 16; n += 2) {
    const Construction c = path_construction(n);
    const UnderlyingGeograph g = build(c.config);
    INFO("path n=" << n);
    REQUIRE(static_cast<int>(c.cert.marked.size()) == n - 1);
    CHECK(walk_is_path(g, c.cert.marked, false));
    CHECK(validate_cert(c.config, c.cert).ok);
  }

  for (int n : {6, 12, 18}) {
    const Construction c = cycle_construction(n);
    const UnderlyingGeograph g = build(c.config);
    INFO("cycle n=" << n);
    REQUIRE(static_cast<int>(c.cert.marked.size()) == n - 3);
    CHECK(walk_is_path(g, c.cert.marked, true));
    CHECK(validate_cert(c.config, c.cert).ok);
  }

  budget.check();
}

TEST_CASE("criterion 07: clique construction and bound") {
  Budget budget(120.0);

  for (int k : {2, 4, 6}) {
    const Construction c = clique_construction(k);
    const UnderlyingGeograph g = build(c.config);
    INFO("k=" << k << " n=" << c.config.n());

    REQUIRE(static_cast<int>(c.cert.marked.size()) == k);
    for (std::size_t i = 0; i < c.cert.marked.size(); ++i)
      for (std::size_t j = i + 1; j < c.cert.marked.size(); ++j)
        CHECK(g.has_edge(c.cert.marked[i], c.cert.marked[j]));

    if (k >= 4) CHECK(c.config.n() - k <= 2 * k * k - 6 * k);

    VerifyOptions opt;
    opt.charging = c.config.n() <= 16;  // charging economics are criterion 10's job
    const VerificationReport rep = verify_all(c.config, opt);
    for (const auto& chk : rep.checks) {
      INFO(chk.name << ": " << chk.witness);
      CHECK(chk.pass);
    }
    // the clique-bound check ran and certifies k <= sqrt(2n) + 1
    CHECK(std::any_of(rep.checks.begin(), rep.checks.end(),
                      [](const CheckResult& r) { return r.name == "clique-bound"; }));
  }

  budget.check();
}

TEST_CASE("criterion 08: induced embeddings of small graphs") {
  Budget budget(300.0);

  // Any graph on fewer than 4 vertices extends to a 4-vertex graph by
  // isolated vertices whose embedding restricts to it, so the 4-vertex
  // sweep plus the two 2-vertex graphs covers everything up to 4 vertices.
  auto check_graph = [](const AbstractGraph& in) {
    const Construction c = induced_embedding(in);
    const UnderlyingGeograph g =
        underlying_geograph(c.config, EnumMethod::rotational_sweep);
    edge_registry().push_back({g.n(), g.E()});

    REQUIRE(static_cast<int>(c.cert.marked.size()) == in.n);
    std::set<std::pair<int, int>> want;
    for (auto [x, y] : in.edges) want.insert(std::minmax(x, y));
    bool induced_ok = true;
    for (int i = 0; i < in.n; ++i)
      for (int j = i + 1; j < in.n; ++j)
        induced_ok = induced_ok &&
                     g.has_edge(c.cert.marked[static_cast<std::size_t>(i)],
                                c.cert.marked[static_cast<std::size_t>(j)]) ==
                         (want.count({i, j}) > 0);
    CHECK(induced_ok);

    const long long k = in.n, e = static_cast<long long>(in.edges.size());
    const long long cap = 2 * k + 2 * e * k - 4 * e + 2 * (2 * k) * (2 * k - 1) / 2;
    CHECK(c.config.n() <= cap);
    CHECK(validate_cert(c.config, c.cert).ok);
  };

  check_graph({2, {}});
  check_graph({2, {{0, 1}}});

  const std::vector<std::pair<int, int>> all_pairs{{0, 1}, {0, 2}, {0, 3},
                                                   {1, 2}, {1, 3}, {2, 3}};
  for (int mask = 0; mask < 64; ++mask) {
    AbstractGraph in;
    in.n = 4;
    for (int b = 0; b < 6; ++b)
      if (mask & (1 << b)) in.edges.push_back(all_pairs[static_cast<std::size_t>(b)]);
    INFO("edge mask " << mask);
    check_graph(in);
  }

  budget.check();
}

TEST_CASE("criterion 09: straddling span bounds and oracle") {
  Budget budget(120.0);

  for (const auto& c : testsupport::generator_corpus()) {
    const UnderlyingGeograph g = build(c.config);
    const StraddlingSpan s = straddling_span(g);
    INFO("generator " << c.cert.kind << " n=" << c.config.n());
    CHECK(g.n() >= 2 * s.span);
    CHECK(edges_straddled(g, s.witness) == s.span);
  }

  for (int k : {2, 4, 6}) {
    const Construction c = clique_construction(k);
    const UnderlyingGeograph g = build(c.config);
    INFO("certified " << k << "-clique, n=" << c.config.n());
    CHECK(straddling_span(g).span >= k * k / 4);
  }

  std::mt19937_64 rng(0x02ac1e00ull);
  for (int n : {4, 6, 8, 10}) {
    for (int t = 0; t < 25; ++t) {
      const UnderlyingGeograph g = build(random_config(n, rng));
      const StraddlingSpan s = straddling_span(g);
      INFO("n=" << n << " trial " << t);
      CHECK(g.n() >= 2 * s.span);
      CHECK(s.span == oracle_span(g));
      CHECK(edges_straddled(g, s.witness) == s.span);
    }
  }

  budget.check();
}

TEST_CASE("criterion 10: crossing charging soundness") {
  Budget budget(300.0);

  long long total_crossings = 0;
  for (int n : {4, 6, 8, 10, 12}) {
    std::mt19937_64 rng(0xc4a26e00ull + static_cast<unsigned long long>(n));
    int bad = 0;
    for (int t = 0; t < 100; ++t) {
      const UnderlyingGeograph g = build(random_config(n, rng));
      const ChargingReport rep = verify_charging(g, 4);
      if (!rep.ok()) {
        UNSCOPED_INFO("n=" << n << " trial " << t << ": " << rep.violations.front().kind);
        ++bad;
      }
      if (4 * rep.crossings > n * (n - 1) / 2) {
        UNSCOPED_INFO("n=" << n << " trial " << t << ": " << rep.crossings << " crossings");
        ++bad;
      }
      total_crossings += rep.crossings;
    }
    INFO("n=" << n);
    CHECK(bad == 0);
  }
  CHECK(total_crossings > 0);  // the sample genuinely exercised crossings

  budget.check();
}

TEST_CASE("criterion 11: edge-count bounds") {
  Budget budget(10.0);

  // audits every geograph built by this binary so far; a filtered run that
  // skipped the other criteria still audits the generator corpus
  if (edge_registry().empty())
    for (const auto& c : testsupport::generator_corpus()) build(c.config);
  CHECK_FALSE(edge_registry().empty());
  for (auto [n, e] : edge_registry()) {
    if (!within_edge_bound(e, n)) {
      INFO("n=" << n << " E=" << e);
      CHECK(within_edge_bound(e, n));
    }
  }

  const EdgeBound b = new_upper_bound(10000);
  const double ratio = b.cube_root / std::pow(10000.0, 4.0 / 3.0);
  CHECK(ratio > 1.61);
  CHECK(ratio < 1.63);

  for (int n = 2; n <= 26; n += 2) {
    const int cap = *reference_max(n);
    CHECK(within_edge_bound(cap, n));
    if (n > 2) CHECK(cap > *reference_max(n - 2));
  }
  CHECK(reference_max(28) == std::nullopt);

  budget.check();
}

TEST_CASE("criterion 12: exhaustive grid search") {
  Budget budget(60.0);

  const SearchResult r45 = grid_exhaustive(4, 5);
  CHECK(r45.best == 3);
  CHECK(underlying_geograph(r45.witness).E() == 3);

  for (auto [n, grid] : std::vector<std::pair<int, int>>{{4, 3}, {4, 4}, {4, 5}, {6, 3}, {6, 4}}) {
    const SearchResult r = grid_exhaustive(n, grid);
    INFO("n=" << n << " grid=" << grid);
    CHECK(r.best <= *reference_max(n));
    edge_registry().push_back({n, r.best});
  }

  for (auto [n, grid] : std::vector<std::pair<int, int>>{{4, 5}, {6, 4}}) {
    const SearchResult serial = grid_exhaustive(n, grid, 1);
    for (int threads : {2, 5}) {
      const SearchResult par = grid_exhaustive(n, grid, threads);
      INFO("n=" << n << " grid=" << grid << " threads=" << threads);
      CHECK(par.best == serial.best);
      CHECK(par.examined == serial.examined);
      REQUIRE(par.witness.n() == serial.witness.n());
      bool same = true;
      for (int i = 0; i < serial.witness.n(); ++i)
        same = same && par.witness[i] == serial.witness[i];
      CHECK(same);
    }
  }

  budget.check();
}

TEST_CASE("criterion 13: interpolation counts") {
  Budget budget(30.0);

  const auto traces = interpolate(convex_polygon(6).config, star(6).config);
  REQUIRE_FALSE(traces.empty());

  std::set<int> seen;
  int cur = traces.front().start_count;
  bool steps_ok = true;
  for (const auto& tr : traces) {
    steps_ok = steps_ok && tr.start_count == cur;
    seen.insert(tr.start_count);
    for (const auto& ev : tr.events) {
      const int delta = ev.count_after - cur;
      steps_ok = steps_ok && delta * delta <= 1;
      seen.insert(ev.count_after);
      cur = ev.count_after;
    }
  }
  CHECK(steps_ok);
  CHECK(seen.count(3) == 1);
  CHECK(seen.count(4) == 1);
  CHECK(seen.count(5) == 1);
  CHECK(cur == 5);

  budget.check();
}
