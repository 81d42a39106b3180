#pragma once

// Halving-line enumeration and the underlying geograph: the graph on the
// configuration's points whose edges are exactly the halving lines.

#include <halving/geometry.hpp>

#include <cstdint>
#include <optional>
#include <thread>

namespace halving {

struct SameVertex : std::invalid_argument {
  SameVertex() : std::invalid_argument("halving_difference needs two distinct vertices") {}
};

/// |#points strictly on one side of line(i,j) - #points on the other|.
/// General position keeps every other point off the line, so the two side
/// counts always sum to n-2 and the difference is even.
inline int halving_difference(const PointConfig& cfg, int i, int j) {
  if (i == j) throw SameVertex();
  int left = 0, right = 0;
  for (int k = 0; k < cfg.n(); ++k) {
    if (k == i || k == j) continue;
    orientation(cfg[i], cfg[j], cfg[k]) == Orientation::CCW ? ++left : ++right;
  }
  return left >= right ? left - right : right - left;
}

inline bool is_halving_edge(const PointConfig& cfg, int i, int j) {
  return halving_difference(cfg, i, j) == 0;
}

struct UnderlyingGeograph {
  PointConfig config;
  std::vector<std::pair<int, int>> edges;  // sorted, i < j
  int n() const { return config.n(); }
  int E() const { return static_cast<int>(edges.size()); }
  bool has_edge(int i, int j) const {
    if (i > j) std::swap(i, j);
    return std::binary_search(edges.begin(), edges.end(), std::make_pair(i, j));
  }
};

enum class EnumMethod { brute_force, rotational_sweep };

namespace detail {

inline std::vector<std::pair<int, int>> enumerate_brute(const PointConfig& cfg, int threads) {
  const int n = cfg.n();
  std::vector<std::pair<int, int>> all_pairs;
  all_pairs.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) all_pairs.emplace_back(i, j);

  if (threads <= 1) {
    std::vector<std::pair<int, int>> edges;
    for (auto [i, j] : all_pairs)
      if (is_halving_edge(cfg, i, j)) edges.emplace_back(i, j);
    return edges;
  }
  // Fixed index partition; concatenation in worker order keeps the result
  // identical to the serial run.
  std::vector<std::vector<std::pair<int, int>>> parts(static_cast<std::size_t>(threads));
  std::vector<std::thread> pool;
  const std::size_t total = all_pairs.size();
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      const std::size_t lo = total * static_cast<std::size_t>(t) / static_cast<std::size_t>(threads);
      const std::size_t hi =
          total * static_cast<std::size_t>(t + 1) / static_cast<std::size_t>(threads);
      for (std::size_t k = lo; k < hi; ++k)
        if (is_halving_edge(cfg, all_pairs[k].first, all_pairs[k].second))
          parts[static_cast<std::size_t>(t)].push_back(all_pairs[k]);
    });
  }
  for (auto& th : pool) th.join();
  std::vector<std::pair<int, int>> edges;
  for (auto& p : parts) edges.insert(edges.end(), p.begin(), p.end());
  return edges;
}

// O(n^2 log n): sort the other points around each vertex by angle, then a
// rotating half-plane count gives every side count in amortized O(1).
inline std::vector<std::pair<int, int>> enumerate_sweep(const PointConfig& cfg) {
  const int n = cfg.n();
  std::vector<std::pair<int, int>> edges;
  std::vector<int> ord;
  for (int i = 0; i < n; ++i) {
    ord.clear();
    for (int k = 0; k < n; ++k)
      if (k != i) ord.push_back(k);
    auto vec = [&](int k) { return direction_between(cfg[i], cfg[k]); };
    auto lower = [&](const Direction& d) {
      return d.dy.sign() < 0 || (d.dy.is_zero() && d.dx.sign() < 0);
    };
    std::sort(ord.begin(), ord.end(), [&](int a, int b) {
      const Direction da = vec(a), db = vec(b);
      const bool la = lower(da), lb = lower(db);
      if (la != lb) return lb;
      return cross(da, db).sign() > 0;
    });
    const std::size_t m = ord.size();
    std::size_t r = 1;  // circular window (j, r) holds the strictly-left points
    for (std::size_t j = 0; j < m; ++j) {
      if (r < j + 1) r = j + 1;
      while (r - j < m && cross(vec(ord[j]), vec(ord[r % m])).sign() > 0) ++r;
      if (static_cast<int>(r - j - 1) * 2 == n - 2 && i < ord[j])
        edges.emplace_back(i, ord[j]);
    }
  }
  std::sort(edges.begin(), edges.end());
  return edges;
}

}  // namespace detail

/// Builds the underlying geograph. Brute force over all point pairs is the
/// reference; the rotational sweep must (and in tests does) agree exactly.
inline UnderlyingGeograph underlying_geograph(const PointConfig& cfg,
                                              EnumMethod method = EnumMethod::brute_force,
                                              int threads = 1) {
  UnderlyingGeograph g{cfg, {}};
  g.edges = method == EnumMethod::brute_force ? detail::enumerate_brute(cfg, threads)
                                              : detail::enumerate_sweep(cfg);
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

inline std::vector<int> vertex_degrees(const UnderlyingGeograph& g) {
  std::vector<int> deg(static_cast<std::size_t>(g.n()), 0);
  for (auto [i, j] : g.edges) {
    ++deg[static_cast<std::size_t>(i)];
    ++deg[static_cast<std::size_t>(j)];
  }
  return deg;
}

/// Non-increasing degree sequence.
using DegreeSequence = std::vector<int>;

inline DegreeSequence degree_sequence(const UnderlyingGeograph& g) {
  DegreeSequence d = vertex_degrees(g);
  std::sort(d.begin(), d.end(), std::greater<int>());
  return d;
}

inline std::vector<std::vector<int>> adjacency_lists(const UnderlyingGeograph& g) {
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(g.n()));
  for (auto [i, j] : g.edges) {
    adj[static_cast<std::size_t>(i)].push_back(j);
    adj[static_cast<std::size_t>(j)].push_back(i);
  }
  return adj;
}

struct GraphStats {
  int leaves = 0;
  int components = 0;
  std::vector<int> hull;
  // Exact subgraph searches are exponential and only run for n <= exact_cap;
  // otherwise these stay empty and the caller reports them as unavailable.
  static constexpr int exact_cap = 20;
  std::optional<int> max_clique;
  std::optional<int> longest_path_vertices;
  std::optional<int> longest_cycle_vertices;  // 0 when the graph is acyclic
};

namespace detail {

inline int bron_kerbosch(const std::vector<std::uint64_t>& adj, std::uint64_t r, std::uint64_t p,
                         std::uint64_t x) {
  if (p == 0 && x == 0) return std::popcount(r);
  const std::uint64_t px = p | x;
  const int pivot = std::countr_zero(px);
  int best = 0;
  std::uint64_t cand = p & ~adj[static_cast<std::size_t>(pivot)];
  while (cand) {
    const int v = std::countr_zero(cand);
    cand &= cand - 1;
    const std::uint64_t bit = std::uint64_t{1} << v;
    best = std::max(best, bron_kerbosch(adj, r | bit, p & adj[static_cast<std::size_t>(v)],
                                        x & adj[static_cast<std::size_t>(v)]));
    p &= ~bit;
    x |= bit;
  }
  return best;
}

inline void longest_path_dfs(const std::vector<std::vector<int>>& adj, int v, std::uint32_t seen,
                             int len, int& best) {
  best = std::max(best, len);
  for (int w : adj[static_cast<std::size_t>(v)])
    if (!(seen & (1u << w))) longest_path_dfs(adj, w, seen | (1u << w), len + 1, best);
}

// Longest cycle = longest closed walk without vertex repeats; each cycle is
// enumerated from its minimum vertex to cut symmetry.
inline void longest_cycle_dfs(const std::vector<std::vector<int>>& adj, int start, int v,
                              std::uint32_t seen, int len, int& best) {
  for (int w : adj[static_cast<std::size_t>(v)]) {
    if (w == start && len >= 3) best = std::max(best, len);
    if (w > start && !(seen & (1u << w)))
      longest_cycle_dfs(adj, start, w, seen | (1u << w), len + 1, best);
  }
}

}  // namespace detail

/// Exact maximum clique size for n <= 64 (bitset Bron-Kerbosch; halving
/// graphs are sparse, so this stays fast), nullopt above.
inline std::optional<int> exact_max_clique(const UnderlyingGeograph& g) {
  const int n = g.n();
  if (n > 64) return std::nullopt;
  if (n == 0) return 0;
  std::vector<std::uint64_t> bits(static_cast<std::size_t>(n), 0);
  for (auto [i, j] : g.edges) {
    bits[static_cast<std::size_t>(i)] |= std::uint64_t{1} << j;
    bits[static_cast<std::size_t>(j)] |= std::uint64_t{1} << i;
  }
  const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  return detail::bron_kerbosch(bits, 0, all, 0);
}

inline GraphStats graph_stats(const UnderlyingGeograph& g) {
  GraphStats s;
  const int n = g.n();
  const auto deg = vertex_degrees(g);
  for (int d : deg)
    if (d == 1) ++s.leaves;
  const auto adj = adjacency_lists(g);
  std::vector<char> visited(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    if (visited[static_cast<std::size_t>(i)]) continue;
    ++s.components;
    std::vector<int> stack{i};
    visited[static_cast<std::size_t>(i)] = 1;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int w : adj[static_cast<std::size_t>(v)])
        if (!visited[static_cast<std::size_t>(w)]) {
          visited[static_cast<std::size_t>(w)] = 1;
          stack.push_back(w);
        }
    }
  }
  s.hull = convex_hull(g.config);

  if (n <= GraphStats::exact_cap) {
    s.max_clique = exact_max_clique(g);
    int path = 0;
    for (int v = 0; v < n; ++v) detail::longest_path_dfs(adj, v, 1u << v, 1, path);
    s.longest_path_vertices = path;
    int cyc = 0;
    for (int v = 0; v < n; ++v) detail::longest_cycle_dfs(adj, v, v, 1u << v, 1, cyc);
    s.longest_cycle_vertices = cyc;
  }
  return s;
}

}  // namespace halving
