#pragma once

// Search for extremal configurations: exhaustive over small grids, randomized
// hill-climbing, and the continuous-motion interpolation between two
// configurations with exact rational event times.

#include <halving/constructions.hpp>
#include <halving/verification.hpp>

#include <random>
#include <thread>

namespace halving {

struct Unreachable : std::runtime_error {
  Unreachable() : std::runtime_error("no non-degenerate motion path found within the budget") {}
};

struct SearchResult {
  int n = 0;
  int best = 0;
  PointConfig witness;
  unsigned long long examined = 0;  // valid configurations evaluated
  int grid_size = 0;
  unsigned long long seed = 0;
  unsigned long long trials = 0;
};

namespace detail {

inline int count_halving(const PointConfig& cfg) {
  int e = 0;
  for (int i = 0; i < cfg.n(); ++i)
    for (int j = i + 1; j < cfg.n(); ++j)
      if (is_halving_edge(cfg, i, j)) ++e;
  return e;
}

// Binomials saturated at 2^62; enumeration refuses anything bigger anyway.
inline unsigned long long binom_sat(int m, int k) {
  constexpr unsigned long long cap = 1ull << 62;
  if (k < 0 || k > m) return 0;
  k = std::min(k, m - k);
  unsigned long long r = 1;
  for (int i = 1; i <= k; ++i) {
    if (r > cap / static_cast<unsigned long long>(m - k + i)) return cap;
    r = r * static_cast<unsigned long long>(m - k + i) / static_cast<unsigned long long>(i);
    if (r >= cap) return cap;
  }
  return r;
}

/// rank-th n-subset of {0..m-1} in lexicographic order.
inline std::vector<int> unrank_subset(int m, int n, unsigned long long rank) {
  std::vector<int> c(static_cast<std::size_t>(n));
  int x = 0;
  for (int i = 0; i < n; ++i) {
    for (;; ++x) {
      const unsigned long long cnt = binom_sat(m - 1 - x, n - 1 - i);
      if (rank < cnt) break;
      rank -= cnt;
    }
    c[static_cast<std::size_t>(i)] = x++;
  }
  return c;
}

inline bool next_subset(std::vector<int>& c, int m) {
  const int n = static_cast<int>(c.size());
  for (int i = n - 1; i >= 0; --i) {
    if (c[static_cast<std::size_t>(i)] < m - n + i) {
      int v = ++c[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < n; ++j) c[static_cast<std::size_t>(j)] = ++v;
      return true;
    }
  }
  return false;
}

inline PointConfig subset_to_config(const std::vector<int>& c, int g) {
  PointConfig cfg;
  for (int p : c) cfg.points.push_back({Scalar(p % g), Scalar(p / g)});
  return cfg;
}

}  // namespace detail

/// Maximum halving-edge count over all general-position n-subsets of the
/// g x g integer grid. Work is split by rank ranges; the merge takes the
/// maximum count and then the least rank, so any thread count returns the
/// same result, with the lexicographically least witness.
inline SearchResult grid_exhaustive(int n, int grid_size, int threads = 1) {
  if (n < 2 || n % 2 != 0) throw BadSize("subset size must be even and at least 2");
  const int m = grid_size * grid_size;
  if (m < n) throw BadSize("grid too small for the subset size");
  const unsigned long long total = detail::binom_sat(m, n);
  if (total >= (1ull << 62)) throw BadSize("grid enumeration too large");
  threads = std::max(1, std::min<int>(threads, 64));

  struct Partial {
    int best = -1;
    unsigned long long best_rank = 0;
    unsigned long long examined = 0;
  };
  std::vector<Partial> part(static_cast<std::size_t>(threads));
  const unsigned long long chunk = (total + static_cast<unsigned long long>(threads) - 1) /
                                   static_cast<unsigned long long>(threads);

  auto work = [&](int t) {
    const unsigned long long lo = chunk * static_cast<unsigned long long>(t);
    const unsigned long long hi = std::min(total, lo + chunk);
    if (lo >= hi) return;
    Partial& p = part[static_cast<std::size_t>(t)];
    std::vector<int> c = detail::unrank_subset(m, n, lo);
    for (unsigned long long r = lo; r < hi; ++r) {
      const PointConfig cfg = detail::subset_to_config(c, grid_size);
      if (validate_general_position(cfg).ok) {
        ++p.examined;
        const int e = detail::count_halving(cfg);
        if (e > p.best) {
          p.best = e;
          p.best_rank = r;
        }
      }
      detail::next_subset(c, m);
    }
  };

  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(work, t);
    for (auto& th : pool) th.join();
  }

  SearchResult res;
  res.n = n;
  res.grid_size = grid_size;
  int best = -1;
  unsigned long long best_rank = 0;
  for (const Partial& p : part) {
    res.examined += p.examined;
    if (p.best > best || (p.best == best && p.best >= 0 && p.best_rank < best_rank)) {
      best = p.best;
      best_rank = p.best_rank;
    }
  }
  if (best < 0) throw BadSize("no general-position subset exists on this grid");
  res.best = best;
  res.witness = detail::subset_to_config(detail::unrank_subset(m, n, best_rank), grid_size);
  return res;
}

/// Uniform random configuration on an integer box, rejecting general-position
/// failures. Uses raw rng draws (no distribution adapters) so results are
/// identical on every platform.
inline PointConfig random_config(int n, std::mt19937_64& rng, long long coord_range = 0) {
  if (n < 2) throw BadSize("configuration needs at least 2 points");
  const long long range = coord_range > 0 ? coord_range : std::max<long long>(64, 4ll * n * n);
  for (int attempt = 0; attempt < 4096; ++attempt) {
    PointConfig cfg;
    for (int i = 0; i < n; ++i) {
      const long long x = static_cast<long long>(rng() % static_cast<unsigned long long>(range));
      const long long y = static_cast<long long>(rng() % static_cast<unsigned long long>(range));
      cfg.points.push_back({Scalar(x), Scalar(y)});
    }
    if (validate_general_position(cfg).ok) return cfg;
  }
  throw Unreachable();
}

/// Seeded hill-climb with single-point moves; plateau steps are accepted and
/// stagnation triggers a restart. Deterministic per seed.
inline SearchResult random_search(int n, unsigned long long trials, unsigned long long seed) {
  if (n < 2 || n % 2 != 0) throw BadSize("subset size must be even and at least 2");
  std::mt19937_64 rng(seed);
  SearchResult res;
  res.n = n;
  res.seed = seed;
  res.trials = trials;

  PointConfig cur = random_config(n, rng);
  int cur_e = detail::count_halving(cur);
  res.best = cur_e;
  res.witness = cur;
  res.examined = 1;
  unsigned long long stale = 0;

  for (unsigned long long t = 0; t < trials; ++t) {
    PointConfig cand = cur;
    const long long range = std::max<long long>(64, 4ll * n * n);
    bool ok = false;
    for (int tries = 0; tries < 64 && !ok; ++tries) {
      cand.points[rng() % static_cast<unsigned long long>(n)] = {
          Scalar(static_cast<long long>(rng() % static_cast<unsigned long long>(range))),
          Scalar(static_cast<long long>(rng() % static_cast<unsigned long long>(range)))};
      ok = validate_general_position(cand).ok;
      if (!ok) cand = cur;
    }
    if (!ok) continue;
    const int e = detail::count_halving(cand);
    ++res.examined;
    if (e >= cur_e) {
      stale = e > cur_e ? 0 : stale + 1;
      cur = cand;
      cur_e = e;
      if (e > res.best) {
        res.best = e;
        res.witness = cand;
      }
    } else if (++stale > 40 * static_cast<unsigned long long>(n)) {
      cur = random_config(n, rng);
      cur_e = detail::count_halving(cur);
      ++res.examined;
      stale = 0;
    }
  }
  return res;
}

struct MotionEvent {
  Scalar t;                      // position along the leg, strictly inside (0, 1)
  std::pair<int, int> aligned;   // the fixed pair the mover gets collinear with
  int count_after = 0;
};

struct MotionTrace {
  int vertex = -1;
  int start_count = 0;
  std::vector<MotionEvent> events;
};

namespace detail {

inline bool config_valid_with(PointConfig& cfg, int i, const Point& p) {
  const Point saved = cfg.points[static_cast<std::size_t>(i)];
  cfg.points[static_cast<std::size_t>(i)] = p;
  const bool ok = validate_general_position(cfg).ok;
  cfg.points[static_cast<std::size_t>(i)] = saved;
  return ok;
}

/// One straight-line leg of the motion. Crossing times are exact rational
/// roots of the per-pair collinearity condition; a tie between two pairs
/// means the path runs through a line crossing, which a recursive detour
/// through a perturbed waypoint resolves.
inline void move_leg(PointConfig& cur, int i, const Point& target,
                     std::vector<MotionTrace>& traces, int depth) {
  const Point a = cur[i];
  if (a == target) return;
  if (depth > 16) throw Unreachable();

  const Direction ab{target.x - a.x, target.y - a.y};
  std::vector<std::pair<Scalar, std::pair<int, int>>> events;
  for (int x = 0; x < cur.n(); ++x) {
    if (x == i) continue;
    for (int y = x + 1; y < cur.n(); ++y) {
      if (y == i) continue;
      const Direction d = direction_between(cur[x], cur[y]);
      const Scalar den = cross(d, Direction{a.x - target.x, a.y - target.y});
      if (den.is_zero()) continue;  // motion parallel to the pair line, never collinear
      const Scalar t = cross(d, direction_between(cur[x], a)) / den;
      if (t.sign() > 0 && t < 1) events.emplace_back(t, std::make_pair(x, y));
    }
  }
  std::sort(events.begin(), events.end(),
            [](const auto& l, const auto& r) { return l.first < r.first; });

  bool simultaneous = false;
  for (std::size_t e = 0; e + 1 < events.size(); ++e)
    if (events[e].first == events[e + 1].first) simultaneous = true;

  if (simultaneous) {
    const Point mid{(a.x + target.x) / 2, (a.y + target.y) / 2};
    const Direction off = perp(ab);
    Scalar delta = Scalar(1, 16);
    for (int retry = 0; retry < 24; ++retry, delta /= 8) {
      for (int sgn : {1, -1}) {
        const Point w{mid.x + sgn * delta * off.dx, mid.y + sgn * delta * off.dy};
        if (!config_valid_with(cur, i, w)) continue;
        move_leg(cur, i, w, traces, depth + 1);
        move_leg(cur, i, target, traces, depth + 1);
        return;
      }
    }
    throw Unreachable();
  }

  MotionTrace trace;
  trace.vertex = i;
  trace.start_count = count_halving(cur);
  auto at = [&](const Scalar& t) {
    return Point{a.x + t * ab.dx, a.y + t * ab.dy};
  };
  for (std::size_t e = 0; e < events.size(); ++e) {
    const Scalar next = e + 1 < events.size() ? events[e + 1].first : Scalar(1);
    const Scalar mid_t = (events[e].first + next) / 2;
    cur.points[static_cast<std::size_t>(i)] = at(mid_t);
    trace.events.push_back({events[e].first, events[e].second, count_halving(cur)});
  }
  cur.points[static_cast<std::size_t>(i)] = target;
  traces.push_back(std::move(trace));
}

}  // namespace detail

/// Moves c1's points one at a time (index order) to their c2 positions,
/// recording every moment the mover crosses a line through two resting
/// points and the halving count between events. Every count between the
/// extremes occurs somewhere, because generic events change it by at most 1.
inline std::vector<MotionTrace> interpolate(const PointConfig& c1, const PointConfig& c2) {
  if (c1.n() != c2.n()) throw std::invalid_argument("interpolation needs equal sizes");
  if (!is_valid_config(c1) || !is_valid_config(c2))
    throw std::invalid_argument("interpolation needs valid configurations");

  PointConfig cur = c1;
  std::vector<MotionTrace> traces;
  std::vector<int> pending;
  for (int i = 0; i < cur.n(); ++i)
    if (!(cur[i] == c2[i])) pending.push_back(i);

  // A leg whose exact arrival would be degenerate parks near the target and
  // is repaired once the interfering points have moved on.
  for (int round = 0; round < 40 && !pending.empty(); ++round) {
    std::vector<int> parked;
    for (int i : pending) {
      if (detail::config_valid_with(cur, i, c2[i])) {
        detail::move_leg(cur, i, c2[i], traces, 0);
        continue;
      }
      const Point t = c2[i];
      const Direction off = perp(direction_between(cur[i], t));
      Scalar delta = Scalar(1, 256) / (round + 1);
      bool placed = false;
      for (int retry = 0; retry < 24 && !placed; ++retry, delta /= 8) {
        for (int sgn : {1, -1}) {
          const Point w{t.x + sgn * delta * off.dx, t.y + sgn * delta * off.dy};
          if (!detail::config_valid_with(cur, i, w)) continue;
          detail::move_leg(cur, i, w, traces, 0);
          placed = true;
          break;
        }
      }
      if (!placed) throw Unreachable();
      parked.push_back(i);
    }
    pending = std::move(parked);
  }
  if (!pending.empty()) throw Unreachable();
  return traces;
}

}  // namespace halving
