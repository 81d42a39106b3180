#pragma once

// Chain decomposition of the halving edges under an up direction, plus the
// machinery built on it: wings, straddling span, proper crossings, upper
// tangents, and the tangent-charging consistency check.

#include <halving/halving.hpp>

#include <array>
#include <map>
#include <random>
#include <set>
#include <string>

namespace halving {

struct NonGenericDirection : std::invalid_argument {
  NonGenericDirection()
      : std::invalid_argument("direction is not generic for this configuration") {}
};

struct NoTangent : std::runtime_error {
  NoTangent() : std::runtime_error("no spanning upper tangent joins the two chains") {}
};

/// One chain: a left-to-right path in the rotated frame. Edges are stored in
/// traversal order as (from, to); slopes strictly decrease along the chain.
struct Chain {
  std::vector<int> vertices;
  std::vector<std::pair<int, int>> edges;
};

struct ChainDecomposition {
  Direction up;
  std::vector<Chain> chains;
  std::vector<int> vertex_order;  // all vertices by increasing rotated x
  PointConfig config;
};

/// Slope of segment a->b in the up-rotated frame. Genericity of up keeps the
/// rotated x-difference nonzero.
inline Scalar rotated_slope(const Direction& up, const Point& a, const Point& b) {
  return (rotated_y(up, b) - rotated_y(up, a)) / (rotated_x(up, b) - rotated_x(up, a));
}

namespace detail {

// The rotating line sweeps clockwise from vertical, so it meets the incident
// halving edges in strictly decreasing slope order. forward=false runs the
// mirrored procedure: counterclockwise from vertical, increasing slopes,
// re-pivoting on the leftmost chain vertex.
inline Chain grow_chain(const UnderlyingGeograph& g, const Direction& up,
                        const std::vector<std::vector<int>>& adj, int start, bool forward) {
  const auto& cfg = g.config;
  auto xr = [&](int v) { return rotated_x(up, cfg[v]); };
  auto slope = [&](int a, int b) { return rotated_slope(up, cfg[a], cfg[b]); };

  Chain chain;
  chain.vertices.push_back(start);
  int pivot = start;
  std::optional<Scalar> bound;  // last aligned slope; empty before the first edge
  for (;;) {
    int best = -1;
    std::optional<Scalar> best_slope;
    for (int w : adj[static_cast<std::size_t>(pivot)]) {
      const Scalar s = slope(pivot, w);
      if (bound && (forward ? !(s < *bound) : !(s > *bound))) continue;
      if (best == -1 || (forward ? s > *best_slope : s < *best_slope)) {
        best = w;
        best_slope = s;
      }
    }
    if (best == -1) break;
    chain.edges.emplace_back(pivot, best);
    bound = best_slope;
    if (std::find(chain.vertices.begin(), chain.vertices.end(), best) == chain.vertices.end())
      chain.vertices.push_back(best);
    pivot = *std::max_element(chain.vertices.begin(), chain.vertices.end(), [&](int a, int b) {
      return forward ? xr(a) < xr(b) : xr(a) > xr(b);
    });
  }
  if (!forward) {
    std::reverse(chain.vertices.begin(), chain.vertices.end());
    std::reverse(chain.edges.begin(), chain.edges.end());
    for (auto& e : chain.edges) std::swap(e.first, e.second);
  }
  return chain;
}

inline std::vector<Chain> run_procedure(const UnderlyingGeograph& g, const Direction& up,
                                        const std::vector<int>& order, bool forward) {
  const int n = g.n();
  const auto adj = adjacency_lists(g);
  std::vector<Chain> chains;
  chains.reserve(static_cast<std::size_t>(n) / 2);
  for (int pos = 0; pos < n / 2; ++pos) {
    const int start = forward ? order[static_cast<std::size_t>(pos)]
                              : order[static_cast<std::size_t>(n - 1 - pos)];
    chains.push_back(grow_chain(g, up, adj, start, forward));
  }
  return chains;
}

inline std::vector<std::vector<std::pair<int, int>>> normalized_chain_set(
    const std::vector<Chain>& chains) {
  std::vector<std::vector<std::pair<int, int>>> out;
  for (const Chain& c : chains) {
    std::vector<std::pair<int, int>> es;
    for (auto [a, b] : c.edges) es.emplace_back(std::min(a, b), std::max(a, b));
    std::sort(es.begin(), es.end());
    out.push_back(std::move(es));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace detail

/// Rotating-line procedure: from each vertex of the left half, sweep a line
/// clockwise from vertical, appending every edge it aligns with and
/// re-pivoting on the rightmost chain vertex, until vertical again.
inline ChainDecomposition decompose_chains(const UnderlyingGeograph& g, const Direction& up) {
  if (!is_generic_up(g.config, up)) throw NonGenericDirection();
  ChainDecomposition d{up, {}, x_order(g.config, up), g.config};
  d.chains = detail::run_procedure(g, up, d.vertex_order, true);
  return d;
}

/// True when the mirrored procedure (right half, counterclockwise) produces
/// the identical set of chains.
inline bool reverse_check(const UnderlyingGeograph& g, const Direction& up) {
  if (!is_generic_up(g.config, up)) throw NonGenericDirection();
  const auto order = x_order(g.config, up);
  return detail::normalized_chain_set(detail::run_procedure(g, up, order, true)) ==
         detail::normalized_chain_set(detail::run_procedure(g, up, order, false));
}

/// Wing of a chain at one of its vertices: the double sector the rotating
/// line sweeps while pivoting there, as an open slope interval in the rotated
/// frame. Empty bounds mean the sector is closed off by the vertical line.
struct Wing {
  int chain = -1;
  int vertex = -1;
  std::optional<Scalar> slope_lo, slope_hi;
};

inline bool wings_overlap(const Wing& a, const Wing& b) {
  auto lt = [](const std::optional<Scalar>& x, const std::optional<Scalar>& y) {
    // x < y with empty lo = -inf on the left arg convention handled by caller
    return *x < *y;
  };
  // open intervals (lo, hi), empty lo = -inf, empty hi = +inf
  const bool left_ok = !a.slope_lo || !b.slope_hi || lt(a.slope_lo, b.slope_hi);
  const bool right_ok = !b.slope_lo || !a.slope_hi || lt(b.slope_lo, a.slope_hi);
  return left_ok && right_ok;
}

/// Direction (original frame) of the line whose rotated slope is s; the
/// empty slope stands for the vertical line, which is the up direction.
inline Direction unrotate_slope(const Direction& up, const std::optional<Scalar>& s) {
  if (!s) return up;
  return Direction{up.dy + up.dx * *s, up.dy * *s - up.dx};
}

inline std::pair<Direction, Direction> wing_rays(const ChainDecomposition& d, const Wing& w) {
  return {unrotate_slope(d.up, w.slope_lo), unrotate_slope(d.up, w.slope_hi)};
}

/// One wing per (chain, vertex): start wings open upward to vertical, end
/// wings downward, interior wings sit between the incoming and outgoing edge.
inline std::vector<Wing> wings(const ChainDecomposition& d) {
  std::vector<Wing> out;
  for (int ci = 0; ci < static_cast<int>(d.chains.size()); ++ci) {
    const Chain& c = d.chains[static_cast<std::size_t>(ci)];
    if (c.edges.empty()) continue;
    if (c.vertices.size() != c.edges.size() + 1)
      throw std::logic_error("chain is not a simple left-to-right path");
    std::vector<Scalar> s;
    s.reserve(c.edges.size());
    for (auto [a, b] : c.edges) s.push_back(rotated_slope(d.up, d.config[a], d.config[b]));
    const int m = static_cast<int>(c.edges.size());
    out.push_back({ci, c.vertices.front(), s.front(), std::nullopt});
    for (int i = 1; i < m; ++i)
      out.push_back({ci, c.vertices[static_cast<std::size_t>(i)],
                     s[static_cast<std::size_t>(i)], s[static_cast<std::size_t>(i - 1)]});
    out.push_back({ci, c.vertices.back(), std::nullopt, s.back()});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Straddling span: the largest number of halving edges any vertex-avoiding
// line can cross. Every maximal line can be moved until it passes through two
// points, so four symbolic perturbations (small translation either way, small
// rotation either way about the midpoint) of every two-point line cover all
// combinatorially distinct positions; docs/span.md carries the argument.

enum class PerturbKind { translate_pos, translate_neg, rotate_pos, rotate_neg };

struct StraddlingSpan {
  int span = 0;
  int p = -1, q = -1;  // the two-point line the witness perturbs
  PerturbKind kind = PerturbKind::translate_pos;
  Line witness;        // concrete vertex-avoiding line achieving the span
};

namespace detail {

// Sign of a point's side of the perturbed line, lexicographic in (base term,
// epsilon term). The epsilon term only decides points on the unperturbed
// line, which general position limits to the two defining vertices.
inline int straddle_side(const Scalar& base, const Scalar& eps_coeff) {
  if (!base.is_zero()) return base.sign();
  return eps_coeff.sign();
}

}  // namespace detail

inline StraddlingSpan straddling_span(const UnderlyingGeograph& g) {
  const auto& cfg = g.config;
  const int n = cfg.n();
  StraddlingSpan best;
  std::vector<int> side(static_cast<std::size_t>(n));
  for (int p = 0; p < n; ++p) {
    for (int q = p + 1; q < n; ++q) {
      const Direction dvec = direction_between(cfg[p], cfg[q]);
      const Scalar d2 = dot(dvec, dvec);
      const Point mid{(cfg[p].x + cfg[q].x) / 2, (cfg[p].y + cfg[q].y) / 2};
      std::vector<Scalar> base(static_cast<std::size_t>(n)), rot(static_cast<std::size_t>(n));
      for (int k = 0; k < n; ++k) {
        base[static_cast<std::size_t>(k)] = cross(dvec, direction_between(cfg[p], cfg[k]));
        rot[static_cast<std::size_t>(k)] = -dot(dvec, direction_between(mid, cfg[k]));
      }
      for (PerturbKind kind : {PerturbKind::translate_pos, PerturbKind::translate_neg,
                               PerturbKind::rotate_pos, PerturbKind::rotate_neg}) {
        for (int k = 0; k < n; ++k) {
          Scalar coeff = kind == PerturbKind::translate_pos   ? Scalar(d2)
                         : kind == PerturbKind::translate_neg ? Scalar(-d2)
                         : kind == PerturbKind::rotate_pos
                             ? rot[static_cast<std::size_t>(k)]
                             : Scalar(-rot[static_cast<std::size_t>(k)]);
          side[static_cast<std::size_t>(k)] =
              detail::straddle_side(base[static_cast<std::size_t>(k)], coeff);
        }
        int count = 0;
        for (auto [a, b] : g.edges)
          if (side[static_cast<std::size_t>(a)] * side[static_cast<std::size_t>(b)] < 0) ++count;
        if (count > best.span) {
          best.span = count;
          best.p = p;
          best.q = q;
          best.kind = kind;
        }
      }
    }
  }
  if (best.p < 0) return best;  // no edges straddled by any candidate

  // Materialize the symbolic witness: pick a concrete epsilon below the first
  // sign change among off-line points, so every exact side is preserved.
  const Direction dvec = direction_between(cfg[best.p], cfg[best.q]);
  const Scalar d2 = dot(dvec, dvec);
  const Point mid{(cfg[best.p].x + cfg[best.q].x) / 2, (cfg[best.p].y + cfg[best.q].y) / 2};
  Scalar eps(1);
  for (int k = 0; k < n; ++k) {
    if (k == best.p || k == best.q) continue;
    const Scalar base = cross(dvec, direction_between(cfg[best.p], cfg[k]));
    Scalar coeff;
    if (best.kind == PerturbKind::translate_pos || best.kind == PerturbKind::translate_neg)
      coeff = d2;
    else
      coeff = dot(dvec, direction_between(mid, cfg[k]));
    if (coeff.is_zero()) continue;
    const Scalar limit = abs(base) / (abs(coeff) * 2);
    if (limit < eps) eps = limit;
  }
  switch (best.kind) {
    case PerturbKind::translate_pos:
      // side of k is cross(dvec, through->k) = base_k - eps*cross(dvec, perp(dvec))
      // = base_k - eps*d2, so the positive-side shift moves through by -perp.
      best.witness = {Point{cfg[best.p].x - eps * perp(dvec).dx, cfg[best.p].y - eps * perp(dvec).dy},
                      dvec};
      break;
    case PerturbKind::translate_neg:
      best.witness = {Point{cfg[best.p].x + eps * perp(dvec).dx, cfg[best.p].y + eps * perp(dvec).dy},
                      dvec};
      break;
    case PerturbKind::rotate_pos:
      best.witness = {mid, Direction{dvec.dx + eps * perp(dvec).dx, dvec.dy + eps * perp(dvec).dy}};
      break;
    case PerturbKind::rotate_neg:
      best.witness = {mid, Direction{dvec.dx - eps * perp(dvec).dx, dvec.dy - eps * perp(dvec).dy}};
      break;
  }
  return best;
}

/// Number of halving edges whose open segments the line crosses; exact, for
/// cross-checking a materialized witness (0 on any vertex the line hits).
inline int edges_straddled(const UnderlyingGeograph& g, const Line& line) {
  int count = 0;
  for (auto [a, b] : g.edges) {
    const Scalar sa = cross(line.dir, direction_between(line.through, g.config[a]));
    const Scalar sb = cross(line.dir, direction_between(line.through, g.config[b]));
    if (sa.sign() * sb.sign() < 0) ++count;
  }
  return count;
}

// ---------------------------------------------------------------------------
// Crossings and tangent charging.

/// Proper crossing of two edges from distinct chains. Edge endpoints are
/// carried by value so a crossing stays meaningful independent of any one
/// decomposition (the crossing set itself does not depend on up).
struct Crossing {
  std::pair<int, int> e1, e2;  // vertex index pairs, e1 < e2 lexicographically
  int chain1 = -1, chain2 = -1;
  std::array<Point, 2> seg1, seg2;
  Point point;
};

using CrossingSet = std::vector<Crossing>;

inline CrossingSet geometric_crossings(const ChainDecomposition& d) {
  CrossingSet out;
  const auto& cfg = d.config;
  const int nc = static_cast<int>(d.chains.size());
  for (int ci = 0; ci < nc; ++ci) {
    for (int cj = ci + 1; cj < nc; ++cj) {
      for (auto ea : d.chains[static_cast<std::size_t>(ci)].edges) {
        for (auto eb : d.chains[static_cast<std::size_t>(cj)].edges) {
          auto a = std::make_pair(std::min(ea.first, ea.second), std::max(ea.first, ea.second));
          auto b = std::make_pair(std::min(eb.first, eb.second), std::max(eb.first, eb.second));
          if (a.first == b.first || a.first == b.second || a.second == b.first ||
              a.second == b.second)
            continue;
          if (!segments_cross(cfg[a.first], cfg[a.second], cfg[b.first], cfg[b.second])) continue;
          Crossing c;
          c.e1 = std::min(a, b);
          c.e2 = std::max(a, b);
          c.chain1 = a < b ? ci : cj;
          c.chain2 = a < b ? cj : ci;
          c.seg1 = {cfg[c.e1.first], cfg[c.e1.second]};
          c.seg2 = {cfg[c.e2.first], cfg[c.e2.second]};
          c.point = line_intersection(cfg[a.first], cfg[a.second], cfg[b.first], cfg[b.second]);
          out.push_back(std::move(c));
        }
      }
    }
  }
  std::sort(out.begin(), out.end(),
            [](const Crossing& x, const Crossing& y) { return std::tie(x.e1, x.e2) < std::tie(y.e1, y.e2); });
  return out;
}

/// Vertex pair charged by a crossing: the upper-tangent endpoints.
struct ChargedTangent {
  int a = -1, b = -1;  // sorted vertex indices, one on each chain
  friend bool operator==(const ChargedTangent& x, const ChargedTangent& y) {
    return x.a == y.a && x.b == y.b;
  }
  friend bool operator<(const ChargedTangent& x, const ChargedTangent& y) {
    return std::tie(x.a, x.b) < std::tie(y.a, y.b);
  }
};

/// Upper tangent of the two chains crossed at c, evaluated in d's frame: the
/// upper-hull edge of the union of their vertices whose x-span covers the
/// crossing, with one endpoint on each chain.
inline ChargedTangent charged_tangent(const ChainDecomposition& d, const Crossing& c) {
  const auto& cfg = d.config;
  auto find_chain = [&](std::pair<int, int> e) {
    for (int ci = 0; ci < static_cast<int>(d.chains.size()); ++ci)
      for (auto [a, b] : d.chains[static_cast<std::size_t>(ci)].edges)
        if (std::minmax(a, b) == std::minmax(e.first, e.second)) return ci;
    return -1;
  };
  const int ci = find_chain(c.e1), cj = find_chain(c.e2);
  if (ci < 0 || cj < 0 || ci == cj)
    throw std::invalid_argument("crossing does not join two distinct chains of this decomposition");

  // chain membership mask: bit 0 = first chain, bit 1 = second
  std::map<int, int> member;
  for (int v : d.chains[static_cast<std::size_t>(ci)].vertices) member[v] |= 1;
  for (int v : d.chains[static_cast<std::size_t>(cj)].vertices) member[v] |= 2;
  std::vector<int> verts;
  verts.reserve(member.size());
  for (auto& [v, _] : member) verts.push_back(v);
  std::sort(verts.begin(), verts.end(),
            [&](int a, int b) { return rotated_x(d.up, cfg[a]) < rotated_x(d.up, cfg[b]); });

  // upper hull in the rotated frame; the rotation preserves orientation signs
  std::vector<int> hull;
  for (int v : verts) {
    while (hull.size() >= 2 &&
           orientation(cfg[hull[hull.size() - 2]], cfg[hull.back()], cfg[v]) != Orientation::CW)
      hull.pop_back();
    hull.push_back(v);
  }

  const Scalar xc = rotated_x(d.up, c.point);
  auto mixed = [&](int a, int b) {
    return (member[a] & 1 && member[b] & 2) || (member[a] & 2 && member[b] & 1);
  };
  int fallback_a = -1, fallback_b = -1;
  for (std::size_t k = 0; k + 1 < hull.size(); ++k) {
    const int a = hull[k], b = hull[k + 1];
    if (!mixed(a, b)) continue;
    const Scalar xa = rotated_x(d.up, cfg[a]), xb = rotated_x(d.up, cfg[b]);
    if (xa < xc && xc < xb) return {std::min(a, b), std::max(a, b)};
    if (fallback_a < 0 && xa <= xc && xc <= xb) {
      fallback_a = a;
      fallback_b = b;
    }
  }
  if (fallback_a >= 0) return {std::min(fallback_a, fallback_b), std::max(fallback_a, fallback_b)};
  throw NoTangent();
}

/// The four angle bisector directions of the two edge lines at a crossing,
/// one strictly inside each of the four angular regions. Rational unit
/// approximations are refined until exact sign tests certify the placement.
inline std::array<Direction, 4> bisector_orientations(const Crossing& c) {
  const Direction u = direction_between(c.seg1[0], c.seg1[1]);
  const Direction v = direction_between(c.seg2[0], c.seg2[1]);
  for (unsigned prec = 32;; prec *= 2) {
    const Direction uh = detail::approx_unit(u, prec);
    const Direction vh = detail::approx_unit(v, prec);
    const std::array<Direction, 4> cand{
        Direction{uh.dx + vh.dx, uh.dy + vh.dy}, Direction{uh.dx - vh.dx, uh.dy - vh.dy},
        Direction{-uh.dx - vh.dx, -uh.dy - vh.dy}, Direction{vh.dx - uh.dx, vh.dy - uh.dy}};
    std::set<std::pair<int, int>> regions;
    bool ok = true;
    for (const Direction& w : cand) {
      const int su = cross(u, w).sign(), sv = cross(v, w).sign();
      if (su == 0 || sv == 0) {
        ok = false;
        break;
      }
      regions.insert({su, sv});
    }
    if (ok && regions.size() == 4) {
      std::array<Direction, 4> out;
      for (std::size_t i = 0; i < 4; ++i) out[i] = cand[i].reduced();
      return out;
    }
    if (prec > 1u << 14)
      throw std::logic_error("bisector refinement failed to separate regions");
  }
}

/// Perturbs dir, staying strictly inside the angular region the two edge
/// lines u and v carve out around it, until it is generic for cfg. The
/// candidates dir*2^k + u are pairwise non-parallel, so only finitely many
/// can collide with the finitely many non-generic axes.
inline Direction generic_in_region(const PointConfig& cfg, const Direction& dir,
                                   const Direction& u, const Direction& v) {
  if (is_generic_up(cfg, dir)) return dir.reduced();
  const int su = cross(u, dir).sign(), sv = cross(v, dir).sign();
  for (int k = 6; k < 4096; ++k) {
    const Scalar scale = Scalar(Int(1) << k);
    const Direction cand{dir.dx * scale + u.dx, dir.dy * scale + u.dy};
    if (cross(u, cand).sign() == su && cross(v, cand).sign() == sv && is_generic_up(cfg, cand))
      return cand.reduced();
  }
  throw std::logic_error("failed to find a generic direction inside the region");
}

struct ChargingViolation {
  std::string kind;  // "injectivity" | "bisector-distinctness" | "cross-orientation"
  std::pair<int, int> crossing1_e1, crossing1_e2;
  std::pair<int, int> crossing2_e1{-1, -1}, crossing2_e2{-1, -1};
  Direction orientation1, orientation2;
  ChargedTangent charge;
};

struct ChargingReport {
  int crossings = 0;
  int orientations_tested = 0;
  std::vector<ChargingViolation> violations;
  bool ok() const { return violations.empty(); }
};

/// Samples orientations (the four bisectors of every crossing, plus
/// extra_orientations seeded random generic directions), charges every
/// crossing under each, and reports every collision the main charging
/// theorem forbids.
inline ChargingReport verify_charging(const UnderlyingGeograph& g, int extra_orientations = 16,
                                      std::uint64_t seed = 0x9e3779b97f4a7c15ull) {
  ChargingReport rep;
  const auto& cfg = g.config;
  const auto base_up = generic_up_direction(cfg);
  const auto d0 = decompose_chains(g, base_up);
  const auto crossings = geometric_crossings(d0);
  rep.crossings = static_cast<int>(crossings.size());
  if (crossings.empty()) return rep;

  using CrossId = std::pair<std::pair<int, int>, std::pair<int, int>>;
  auto id_of = [](const Crossing& c) { return CrossId{c.e1, c.e2}; };

  struct Sample {
    Direction dir;
    int owner = -1;  // index into crossings when this is one of its bisectors
  };
  std::vector<Sample> samples;
  for (int i = 0; i < static_cast<int>(crossings.size()); ++i) {
    const Crossing& c = crossings[static_cast<std::size_t>(i)];
    const Direction u = direction_between(c.seg1[0], c.seg1[1]);
    const Direction v = direction_between(c.seg2[0], c.seg2[1]);
    for (const Direction& b : bisector_orientations(c))
      samples.push_back({generic_in_region(cfg, b, u, v), i});
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> coord(-(1l << 20), 1l << 20);
  int added = 0;
  while (added < extra_orientations) {
    const Direction dir{Scalar(coord(rng)), Scalar(coord(rng))};
    if (dir.is_zero() || !is_generic_up(cfg, dir)) continue;
    samples.push_back({dir.reduced(), -1});
    ++added;
  }
  rep.orientations_tested = static_cast<int>(samples.size());

  // charge every crossing under every sampled orientation
  std::map<CrossId, std::vector<ChargedTangent>> bisector_charges;
  std::map<ChargedTangent, std::pair<CrossId, Direction>> first_charge;
  for (const Sample& s : samples) {
    const auto d = decompose_chains(g, s.dir);
    const auto cs = geometric_crossings(d);
    std::map<ChargedTangent, CrossId> seen_this_orientation;
    for (const Crossing& c : cs) {
      const ChargedTangent t = charged_tangent(d, c);
      const CrossId id = id_of(c);
      if (s.owner >= 0 && id == id_of(crossings[static_cast<std::size_t>(s.owner)]))
        bisector_charges[id].push_back(t);

      auto [it, fresh] = seen_this_orientation.emplace(t, id);
      if (!fresh && it->second != id)
        rep.violations.push_back({"injectivity", it->second.first, it->second.second, id.first,
                                  id.second, s.dir, s.dir, t});

      auto [git, gfresh] = first_charge.emplace(t, std::make_pair(id, s.dir));
      if (!gfresh && git->second.first != id)
        rep.violations.push_back({"cross-orientation", git->second.first.first,
                                  git->second.first.second, id.first, id.second, git->second.second,
                                  s.dir, t});
    }
  }
  for (auto& [id, charges] : bisector_charges) {
    std::set<ChargedTangent> uniq(charges.begin(), charges.end());
    if (charges.size() == 4 && uniq.size() == 4) continue;
    ChargingViolation v;
    v.kind = "bisector-distinctness";
    v.crossing1_e1 = id.first;
    v.crossing1_e2 = id.second;
    v.charge = charges.empty() ? ChargedTangent{} : charges.front();
    rep.violations.push_back(std::move(v));
  }
  return rep;
}

}  // namespace halving
