#pragma once

// Invariant checks over a configuration's underlying graph, plus the
// closed-form edge-count bounds. Verdicts are never made in floating point:
// the one real-valued output (a cube root) is reported next to its exact
// radicand, and all comparisons happen on integers or rationals.

#include <halving/chains.hpp>

#include <string>

namespace halving {

struct OddN : std::invalid_argument {
  OddN() : std::invalid_argument("reference table is indexed by even n") {}
};

struct OutOfRegime : std::runtime_error {
  OutOfRegime() : std::runtime_error("crossing bound needs E > 7.5n") {}
};

/// Largest known halving-edge counts for n = 2, 4, ..., 26.
inline constexpr std::array<int, 13> kBoundTable{1, 3, 6, 9, 13, 18, 22, 27, 33, 38, 44, 51, 57};

inline std::optional<int> reference_max(int n) {
  if (n <= 0 || n % 2 != 0) throw OddN();
  if (n > 26) return std::nullopt;
  return kBoundTable[static_cast<std::size_t>(n / 2 - 1)];
}

/// A non-increasing degree sequence is realizable by a simple graph iff the
/// sum is even and every k-prefix obeys
///   sum_{i<=k} d_i <= k(k-1) + sum_{i>k} min(d_i, k).
inline bool erdos_gallai(const DegreeSequence& seq) {
  long long sum = 0;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (seq[i] < 0 || (i > 0 && seq[i] > seq[i - 1]))
      throw std::invalid_argument("degree sequence must be non-increasing and non-negative");
    sum += seq[i];
  }
  if (sum % 2 != 0) return false;
  const long long n = static_cast<long long>(seq.size());
  long long prefix = 0;
  for (long long k = 1; k <= n; ++k) {
    prefix += seq[static_cast<std::size_t>(k - 1)];
    long long rhs = k * (k - 1);
    for (long long i = k; i < n; ++i)
      rhs += std::min<long long>(seq[static_cast<std::size_t>(i)], k);
    if (prefix > rhs) return false;
  }
  return true;
}

/// Exact lower bound 4E^3 / (135 n^2) on the crossing number of the halving
/// edge set, valid only in the regime E > 7.5n.
inline Scalar crossing_lower_bound(long long E, long long n) {
  if (n <= 0 || E < 0) throw std::invalid_argument("crossing bound needs E >= 0, n > 0");
  if (2 * E <= 15 * n) throw OutOfRegime();
  const Int e3 = Int(E) * E * E;
  return Scalar(4 * e3) / Scalar(Int(135) * n * n);
}

struct EdgeBound {
  Scalar radicand;   // 135 n^2 / 16 * C(n, 2), exact
  double cube_root;  // presentation only, ~1e-15 relative error
};

/// Upper bound on the halving-edge count: E <= cbrt(135 n^2 / 16 * C(n,2)).
inline EdgeBound new_upper_bound(long long n) {
  if (n < 2) throw std::invalid_argument("bound needs n >= 2");
  const Scalar radicand = Scalar(Int(135) * n * n) * Scalar(Int(n) * (n - 1) / 2) / 16;
  return {radicand, std::cbrt(radicand.convert_to<double>())};
}

/// Integerized form of E <= new_upper_bound(n): 32 E^3 <= 135 n^3 (n-1).
inline bool within_edge_bound(long long E, long long n) {
  return Int(32) * E * E * E <= Int(135) * n * n * n * (n - 1);
}

struct CheckResult {
  std::string name;
  bool pass = true;
  std::string witness;  // empty unless the check failed
};

struct VerificationReport {
  std::vector<CheckResult> checks;  // sorted by name
  int passed = 0;
  int failed = 0;
  bool all_pass() const { return failed == 0; }
};

struct VerifyOptions {
  bool chains = true;            // chain-structure checks (decomposition based)
  bool charging = true;          // crossing-charging checks (the slowest part)
  int charging_orientations = 4; // extra random orientations for the charging run
};

namespace detail {

/// True iff some closed half-plane through the origin contains u, v and w.
/// If one exists it can be rotated until its boundary touches one vector,
/// so testing the six perpendicular candidates is exhaustive.
inline bool in_closed_half_plane(const Direction& u, const Direction& v, const Direction& w) {
  for (const Direction* z : {&u, &v, &w}) {
    for (const Direction& h : {perp(*z), -perp(*z)}) {
      if (dot(h, u).sign() >= 0 && dot(h, v).sign() >= 0 && dot(h, w).sign() >= 0) return true;
    }
  }
  return false;
}

}  // namespace detail

// Each structural check takes a prebuilt geograph so callers can also probe
// fabricated edge sets (the graph-theoretic checks never recompute edges).

inline CheckResult check_odd_degrees(const UnderlyingGeograph& g) {
  const auto deg = vertex_degrees(g);
  for (int v = 0; v < g.n(); ++v)
    if (deg[static_cast<std::size_t>(v)] % 2 == 0)
      return {"odd-degrees", false,
              "vertex " + std::to_string(v) + " has even degree " +
                  std::to_string(deg[static_cast<std::size_t>(v)])};
  return {"odd-degrees", true, ""};
}

inline CheckResult check_leaf_count(const UnderlyingGeograph& g) {
  const auto deg = vertex_degrees(g);
  const int leaves = static_cast<int>(std::count(deg.begin(), deg.end(), 1));
  const bool ok = g.n() < 4 || leaves >= 3;
  return {"leaf-count", ok, ok ? "" : "only " + std::to_string(leaves) + " leaves"};
}

inline CheckResult check_hull_degree_one(const UnderlyingGeograph& g) {
  const auto deg = vertex_degrees(g);
  for (int v : convex_hull(g.config))
    if (deg[static_cast<std::size_t>(v)] != 1)
      return {"hull-degree-one", false,
              "hull vertex " + std::to_string(v) + " has degree " +
                  std::to_string(deg[static_cast<std::size_t>(v)])};
  return {"hull-degree-one", true, ""};
}

/// Every two incident edges are completed by a third leaving their closed
/// half-plane (vacuous at leaves).
inline CheckResult check_half_plane(const UnderlyingGeograph& g) {
  const auto& cfg = g.config;
  const auto adj = adjacency_lists(g);
  for (int v = 0; v < g.n(); ++v) {
    const auto& nb = adj[static_cast<std::size_t>(v)];
    for (std::size_t a = 0; a < nb.size(); ++a) {
      for (std::size_t b = a + 1; b < nb.size(); ++b) {
        const Direction u1 = direction_between(cfg[v], cfg[nb[a]]);
        const Direction u2 = direction_between(cfg[v], cfg[nb[b]]);
        bool found = false;
        for (int r : nb) {
          if (r == nb[a] || r == nb[b]) continue;
          if (!detail::in_closed_half_plane(u1, u2, direction_between(cfg[v], cfg[r]))) {
            found = true;
            break;
          }
        }
        if (!found)
          return {"half-plane", false,
                  "edges " + std::to_string(v) + "-" + std::to_string(nb[a]) + ", " +
                      std::to_string(v) + "-" + std::to_string(nb[b]) +
                      " have no completing third edge"};
      }
    }
  }
  return {"half-plane", true, ""};
}

inline CheckResult check_degree_max_star(const UnderlyingGeograph& g) {
  const int n = g.n();
  if (n < 4) return {"degree-max-star", true, ""};
  const auto deg = vertex_degrees(g);
  const int full = static_cast<int>(std::count(deg.begin(), deg.end(), n - 1));
  if (full > 1)
    return {"degree-max-star", false, std::to_string(full) + " vertices of degree n-1"};
  if (full == 1) {
    DegreeSequence star_seq(static_cast<std::size_t>(n), 1);
    star_seq.front() = n - 1;
    if (degree_sequence(g) != star_seq)
      return {"degree-max-star", false, "degree n-1 present but the graph is not a star"};
  }
  return {"degree-max-star", true, ""};
}

inline CheckResult check_degree_count_near_max(const UnderlyingGeograph& g) {
  const int n = g.n();
  if (n < 6) return {"degree-count-near-max", true, ""};
  const auto deg = vertex_degrees(g);
  const int near = static_cast<int>(std::count(deg.begin(), deg.end(), n - 3));
  if (near > 3)
    return {"degree-count-near-max", false, std::to_string(near) + " vertices of degree n-3"};
  return {"degree-count-near-max", true, ""};
}

inline CheckResult check_degree_sum(const UnderlyingGeograph& g) {
  const int n = g.n();
  const auto deg = vertex_degrees(g);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const int s = deg[static_cast<std::size_t>(i)] + deg[static_cast<std::size_t>(j)];
      const int cap = g.has_edge(i, j) ? n : n - 2;
      if (s > cap)
        return {"degree-sum", false,
                "deg(" + std::to_string(i) + ")+deg(" + std::to_string(j) + ") = " +
                    std::to_string(s) + " > " + std::to_string(cap)};
    }
  return {"degree-sum", true, ""};
}

inline CheckResult check_edge_bounds(const UnderlyingGeograph& g) {
  const int n = g.n(), E = g.E();
  if (E < n / 2 || !within_edge_bound(E, n))
    return {"edge-bounds", false, "E = " + std::to_string(E) + " outside bounds"};
  if (n <= 26 && n % 2 == 0) {
    const int cap = *reference_max(n);
    if (E > cap)
      return {"edge-bounds", false,
              "E = " + std::to_string(E) + " exceeds the reference maximum " +
                  std::to_string(cap)};
  }
  return {"edge-bounds", true, ""};
}

inline CheckResult check_span_doubling(const UnderlyingGeograph& g) {
  const StraddlingSpan s = straddling_span(g);
  const bool ok = g.n() >= 2 * s.span;
  return {"span-doubling", ok, ok ? "" : "span " + std::to_string(s.span) + " exceeds n/2"};
}

inline CheckResult check_clique_bound(const UnderlyingGeograph& g) {
  if (const auto k = exact_max_clique(g)) {
    // k <= sqrt(2n) + 1, integerized as (k-1)^2 <= 2n
    const long long km1 = *k - 1;
    if (km1 * km1 > 2 * g.n())
      return {"clique-bound", false,
              "clique of size " + std::to_string(*k) + " too large for n = " +
                  std::to_string(g.n())};
  }
  return {"clique-bound", true, ""};
}

/// Chain-structure checks under one generic direction: count, edge
/// partition, size cap, concavity, reverse agreement, windmill disjointness
/// and the positional degree bound.
inline std::vector<CheckResult> check_chains(const UnderlyingGeograph& g, const Direction& up) {
  const int n = g.n();
  const auto deg = vertex_degrees(g);
  const ChainDecomposition d = decompose_chains(g, up);
  std::vector<CheckResult> out;

  out.push_back({"chain-count", static_cast<int>(d.chains.size()) == n / 2,
                 std::to_string(d.chains.size()) + " chains"});
  {
    std::vector<std::pair<int, int>> all;
    for (const Chain& c : d.chains)
      for (auto [a, b] : c.edges) all.emplace_back(std::min(a, b), std::max(a, b));
    std::sort(all.begin(), all.end());
    out.push_back(
        {"chain-edge-partition", all == g.edges, "chain edges do not partition the edge set"});
  }
  {
    bool ok = true;
    for (const Chain& c : d.chains)
      if (static_cast<int>(c.edges.size()) > n / 2) ok = false;
    out.push_back({"chain-size", ok, "a chain exceeds n/2 edges"});
  }
  {
    bool ok = true;
    for (const Chain& c : d.chains)
      for (std::size_t i = 0; i + 1 < c.edges.size(); ++i) {
        const auto [a1, b1] = c.edges[i];
        const auto [a2, b2] = c.edges[i + 1];
        if (!(rotated_slope(up, d.config[a2], d.config[b2]) <
              rotated_slope(up, d.config[a1], d.config[b1])))
          ok = false;
      }
    out.push_back({"chain-concavity", ok, "chain slopes not strictly decreasing"});
  }
  out.push_back(
      {"chain-reverse-procedure", reverse_check(g, up), "reverse procedure yields different chains"});
  {
    // wings around a shared vertex are pairwise disjoint slope sectors
    bool ok = true;
    std::string w;
    const auto ws = wings(d);
    for (std::size_t i = 0; i < ws.size() && ok; ++i)
      for (std::size_t j = i + 1; j < ws.size() && ok; ++j)
        if (ws[i].vertex == ws[j].vertex && wings_overlap(ws[i], ws[j])) {
          ok = false;
          w = "overlapping wings at vertex " + std::to_string(ws[i].vertex);
        }
    out.push_back({"chain-windmill", ok, w});
  }
  {
    bool ok = true;
    std::string w;
    for (int i = 0; i < n && ok; ++i) {
      const int v = d.vertex_order[static_cast<std::size_t>(i)];
      if (deg[static_cast<std::size_t>(v)] > 2 * (i + 1) - 1) {
        ok = false;
        w = "vertex " + std::to_string(v) + " at position " + std::to_string(i + 1) +
            " has degree " + std::to_string(deg[static_cast<std::size_t>(v)]);
      }
    }
    out.push_back({"chain-positional-degree", ok, w});
  }
  for (CheckResult& c : out)
    if (c.pass) c.witness.clear();
  return out;
}

inline std::vector<CheckResult> check_charging(const UnderlyingGeograph& g,
                                               int extra_orientations) {
  const ChargingReport cr = verify_charging(g, extra_orientations);
  std::vector<CheckResult> out;
  std::string w;
  if (!cr.ok())
    w = cr.violations.front().kind + " violation among " + std::to_string(cr.violations.size());
  out.push_back({"charging", cr.ok(), w});
  const bool cnt =
      4 * static_cast<long long>(cr.crossings) <= static_cast<long long>(g.n()) * (g.n() - 1) / 2;
  out.push_back({"crossing-count", cnt,
                 cnt ? "" : std::to_string(cr.crossings) + " crossings exceed C(n,2)/4"});
  return out;
}

inline VerificationReport verify_all(const PointConfig& cfg, const VerifyOptions& opt = {}) {
  if (cfg.n() % 2 != 0) throw std::invalid_argument("halving lines need an even point count");
  if (const auto v = validate_general_position(cfg); !v.ok)
    throw std::invalid_argument(
        std::string("configuration is degenerate: ") +
        (v.duplicate ? "duplicate points " : "collinear points ") + std::to_string(v.witness[0]) +
        ", " + std::to_string(v.witness[1]) +
        (v.witness[2] >= 0 ? ", " + std::to_string(v.witness[2]) : ""));

  const UnderlyingGeograph g = underlying_geograph(cfg, EnumMethod::rotational_sweep);
  VerificationReport rep;

  rep.checks.push_back(check_odd_degrees(g));
  rep.checks.push_back(check_leaf_count(g));
  rep.checks.push_back(check_hull_degree_one(g));
  rep.checks.push_back(check_half_plane(g));
  rep.checks.push_back(check_degree_max_star(g));
  rep.checks.push_back(check_degree_count_near_max(g));
  rep.checks.push_back(check_degree_sum(g));
  rep.checks.push_back(check_edge_bounds(g));
  if (opt.chains)
    for (CheckResult& c : check_chains(g, generic_up_direction(cfg)))
      rep.checks.push_back(std::move(c));
  rep.checks.push_back(check_span_doubling(g));
  rep.checks.push_back(check_clique_bound(g));
  if (opt.charging)
    for (CheckResult& c : check_charging(g, opt.charging_orientations))
      rep.checks.push_back(std::move(c));

  std::sort(rep.checks.begin(), rep.checks.end(),
            [](const CheckResult& a, const CheckResult& b) { return a.name < b.name; });
  for (const CheckResult& c : rep.checks) (c.pass ? rep.passed : rep.failed) += 1;
  return rep;
}

}  // namespace halving
