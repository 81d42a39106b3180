#pragma once

// Configuration generators. Each returns the points plus a certificate of
// what the construction promises; nothing is trusted until the certificate
// revalidates against a full recomputation of the underlying geograph.
// Irrational ingredients (regular polygons, 120-degree rays) are replaced by
// rational approximations inside validate-and-refine loops, so the promises
// hold exactly, not approximately.

#include <halving/halving.hpp>

#include <cmath>
#include <map>
#include <set>
#include <string>

namespace halving {

struct BadSize : std::invalid_argument {
  explicit BadSize(const std::string& what) : std::invalid_argument(what) {}
};

struct SizeMismatch : std::invalid_argument {
  SizeMismatch() : std::invalid_argument("branch configurations must have equal even sizes") {}
};

struct NotHullNeighbors : std::invalid_argument {
  NotHullNeighbors() : std::invalid_argument("the two vertices are not hull neighbors") {}
};

struct NoValidLine : std::runtime_error {
  NoValidLine() : std::runtime_error("no direction realizes the requested segment order") {}
};

struct ConstructionFailed : std::runtime_error {
  explicit ConstructionFailed(const std::string& kind)
      : std::runtime_error("construction failed to validate within the retry budget: " + kind) {}
};

struct ConstructionCert {
  std::string kind;
  std::optional<int> expected_edges;
  std::optional<DegreeSequence> expected_degrees;
  // marked carries a vertex list whose meaning marked_shape fixes:
  // "path"/"cycle" = ordered traversal, "clique" = member set,
  // "induced" = vertex set whose induced subgraph must equal marked_edges.
  std::vector<int> marked;
  std::string marked_shape;
  std::vector<std::pair<int, int>> marked_edges;  // local indices into marked
  std::optional<std::vector<std::pair<int, int>>> expected_edge_list;
};

struct Construction {
  PointConfig config;
  ConstructionCert cert;
};

struct CertCheck {
  bool ok = true;
  std::string detail;
};

inline CertCheck validate_cert(const PointConfig& cfg, const ConstructionCert& cert) {
  if (!is_valid_config(cfg)) return {false, "not a valid general-position configuration"};
  const UnderlyingGeograph g = underlying_geograph(cfg);
  if (cert.expected_edges && g.E() != *cert.expected_edges)
    return {false, "edge count " + std::to_string(g.E()) + " != promised " +
                       std::to_string(*cert.expected_edges)};
  if (cert.expected_degrees && degree_sequence(g) != *cert.expected_degrees)
    return {false, "degree sequence differs from promise"};
  if (cert.expected_edge_list) {
    auto want = *cert.expected_edge_list;
    for (auto& [a, b] : want)
      if (a > b) std::swap(a, b);
    std::sort(want.begin(), want.end());
    if (g.edges != want) return {false, "edge set differs from promise"};
  }
  const auto& m = cert.marked;
  if (cert.marked_shape == "path" || cert.marked_shape == "cycle") {
    for (std::size_t i = 0; i + 1 < m.size(); ++i)
      if (!g.has_edge(m[i], m[i + 1]))
        return {false, "missing promised edge " + std::to_string(m[i]) + "-" +
                           std::to_string(m[i + 1])};
    if (cert.marked_shape == "cycle" && !m.empty() && !g.has_edge(m.back(), m.front()))
      return {false, "missing promised closing edge"};
  } else if (cert.marked_shape == "clique") {
    for (std::size_t i = 0; i < m.size(); ++i)
      for (std::size_t j = i + 1; j < m.size(); ++j)
        if (!g.has_edge(m[i], m[j])) return {false, "missing promised clique edge"};
  } else if (cert.marked_shape == "induced") {
    std::set<std::pair<int, int>> want;
    for (auto [a, b] : cert.marked_edges) want.insert(std::minmax(a, b));
    for (std::size_t i = 0; i < m.size(); ++i)
      for (std::size_t j = i + 1; j < m.size(); ++j) {
        const bool have = g.has_edge(m[i], m[j]);
        const bool need = want.count({static_cast<int>(i), static_cast<int>(j)}) > 0;
        if (have != need) return {false, "induced subgraph differs from promise"};
      }
  }
  return {};
}

namespace detail {

inline Scalar pow2(int k) { return Scalar(Int(1) << k); }

/// Point on the unit circle with parameter t = tan(angle/2).
inline Point circle_point(const Scalar& t) {
  const Scalar t2 = t * t;
  return {(1 - t2) / (1 + t2), 2 * t / (1 + t2)};
}

/// Rational tan(theta/2) snapped to a 2^-prec grid. Callers keep theta/2
/// away from pi/2, so the magnitude stays small enough for exact rounding.
inline Scalar tan_half(double theta, int prec) {
  const long double t = std::tan(static_cast<long double>(theta) / 2.0L);
  const long long scaled = llroundl(t * static_cast<long double>(1LL << prec));
  return Scalar(Int(scaled), Int(1) << prec);
}

constexpr double kPi = 3.14159265358979323846;

}  // namespace detail

/// n points on a rational parametrization of a circle. Convex position makes
/// the underlying graph the perfect matching of opposite-in-order vertices.
inline Construction convex_polygon(int n) {
  if (n < 4 || n % 2 != 0) throw BadSize("polygon size must be even and at least 4");
  Construction out;
  for (int i = 0; i < n; ++i) out.config.points.push_back(detail::circle_point(Scalar(i)));
  out.cert.kind = "polygon";
  out.cert.expected_edges = n / 2;
  out.cert.expected_degrees = DegreeSequence(static_cast<std::size_t>(n), 1);
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n / 2; ++i) edges.emplace_back(i, i + n / 2);
  out.cert.expected_edge_list = std::move(edges);
  return out;
}

/// Near-regular (n-1)-gon around an exact center point. Every strict side
/// count of the regular ideal survives a close enough approximation, so the
/// refine loop always lands on the (n-1)-star.
inline Construction star(int n) {
  if (n < 4 || n % 2 != 0) throw BadSize("star size must be even and at least 4");
  const int m = n - 1;
  Construction out;
  out.cert.kind = "star";
  out.cert.expected_edges = m;
  DegreeSequence deg(static_cast<std::size_t>(n), 1);
  deg.front() = m;
  out.cert.expected_degrees = deg;
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < m; ++i) edges.emplace_back(i, m);  // center is the last index
  out.cert.expected_edge_list = std::move(edges);

  for (int prec : {24, 30, 36, 42, 48}) {
    PointConfig cfg;
    const double phase = detail::kPi / (4.0 * m);
    for (int i = 0; i < m; ++i)
      cfg.points.push_back(
          detail::circle_point(detail::tan_half(2.0 * detail::kPi * i / m + phase, prec)));
    cfg.points.push_back({Scalar(0), Scalar(0)});
    out.config = cfg;
    if (validate_cert(cfg, out.cert).ok) return out;
  }
  throw ConstructionFailed("star");
}

/// Affine squeeze toward the line by 1/factor. Positive-determinant affine
/// maps preserve every orientation sign, so the halving edge set (as index
/// pairs) is unchanged for any factor.
inline PointConfig segmentarize(const PointConfig& cfg, const Line& target,
                                const Scalar& factor) {
  if (factor.sign() <= 0) throw SingularMap();
  const Direction u = perp(target.dir);
  const Scalar c = (1 - 1 / factor) / dot(u, u);
  AffineMap m;
  m.m00 = 1 - c * u.dx * u.dx;
  m.m01 = -c * u.dx * u.dy;
  m.m10 = -c * u.dy * u.dx;
  m.m11 = 1 - c * u.dy * u.dy;
  const Scalar shift = c * (u.dx * target.through.x + u.dy * target.through.y);
  m.tx = shift * u.dx;
  m.ty = shift * u.dy;
  return apply_affine(cfg, m);
}

/// Squeeze onto a segment so that hull vertex A projects first and its hull
/// neighbor B projects k-th. The search direction u must keep all points
/// strictly after A and exactly k-1 points (A included) on A's side of the
/// line through B; candidates sit between consecutive pairwise-difference
/// axes, where both counts are locally constant.
inline PointConfig segmentarize_ordered(const PointConfig& cfg, int A, int B, int k) {
  const int n = cfg.n();
  if (k <= 1 || k > n) throw BadSize("segment position k must satisfy 1 < k <= n");
  const auto hull = convex_hull(cfg);
  bool adjacent = false;
  for (std::size_t i = 0; i < hull.size(); ++i) {
    const int a = hull[i], b = hull[(i + 1) % hull.size()];
    if ((a == A && b == B) || (a == B && b == A)) adjacent = true;
  }
  if (!adjacent) throw NotHullNeighbors();

  std::vector<std::pair<Int, Int>> axes;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      axes.push_back(direction_between(cfg[i], cfg[j]).axis_key());
  std::sort(axes.begin(), axes.end(), [](const auto& a, const auto& b) {
    if (detail::axis_angle_less(a, b)) return true;
    if (detail::axis_angle_less(b, a)) return false;
    return a < b;
  });
  axes.erase(std::unique(axes.begin(), axes.end()), axes.end());

  auto try_dir = [&](const Direction& u) -> bool {
    for (int x = 0; x < n; ++x)
      if (x != A && cross(u, direction_between(cfg[A], cfg[x])).sign() <= 0) return false;
    const int side_a = cross(u, direction_between(cfg[B], cfg[A])).sign();
    int count = 0;
    for (int x = 0; x < n; ++x)
      if (x != B && cross(u, direction_between(cfg[B], cfg[x])).sign() == side_a) ++count;
    return count == k - 1;
  };

  const std::size_t m = axes.size();
  for (std::size_t i = 0; i < m; ++i) {
    const Direction d1{Scalar(axes[i].first), Scalar(axes[i].second)};
    const Direction d2 = i + 1 < m
                             ? Direction{Scalar(axes[i + 1].first), Scalar(axes[i + 1].second)}
                             : Direction{Scalar(-axes[0].first), Scalar(-axes[0].second)};
    const Direction mid = m == 1 ? perp(d1) : Direction{d1.dx + d2.dx, d1.dy + d2.dy};
    for (const Direction& u : {mid, -mid}) {
      if (try_dir(u)) {
        PointConfig out = segmentarize(cfg, Line{cfg[A], perp(u)}, detail::pow2(16));
        // the squeezed configuration's own generic direction fixes the rank
        // order only up to reversal; a point reflection (determinant +1, so
        // the edge set is untouched) pins A to rank 1
        if (x_order(out, generic_up_direction(out)).front() != A) {
          AffineMap flip;
          flip.m00 = flip.m11 = Scalar(-1);
          out = apply_affine(out, flip);
        }
        return out;
      }
    }
  }
  throw NoValidLine();
}

namespace detail {

/// Branch points keyed by increasing rotated x under the branch's own
/// generic direction; rank 1 is the first entry.
inline std::vector<int> branch_rank_order(const PointConfig& cfg) {
  return x_order(cfg, generic_up_direction(cfg));
}

/// Affine placement of a branch onto the ray through `dir`: along-coordinates
/// are normalized into [1, 2] (rank order preserved), transverse offsets are
/// crushed by 1/factor.
inline void place_branch(PointConfig& out, const PointConfig& branch, const Direction& dir,
                         const Scalar& factor) {
  const Direction u = generic_up_direction(branch);
  Scalar xmin = rotated_x(u, branch[0]), xmax = xmin, ymax(0);
  for (int i = 0; i < branch.n(); ++i) {
    const Scalar x = rotated_x(u, branch[i]);
    if (x < xmin) xmin = x;
    if (x > xmax) xmax = x;
    const Scalar ya = abs(rotated_y(u, branch[i]));
    if (ya > ymax) ymax = ya;
  }
  const Scalar spread = xmax > xmin ? xmax - xmin : Scalar(1);
  const Scalar beta = 1 / ((1 + ymax) * factor);
  const Direction nrm = perp(dir);
  for (int i = 0; i < branch.n(); ++i) {
    const Scalar a = 1 + (rotated_x(u, branch[i]) - xmin) / spread;  // in [1, 2]
    const Scalar b = rotated_y(u, branch[i]) * beta;
    out.points.push_back({a * dir.dx + b * nrm.dx, a * dir.dy + b * nrm.dy});
  }
}

}  // namespace detail

/// Squeezes both inputs into narrow crossing segments meeting at their median
/// points; the union's halving edges are exactly the two input edge sets.
inline Construction cross(const PointConfig& c1, const PointConfig& c2) {
  if (!is_valid_config(c1) || !is_valid_config(c2))
    throw std::invalid_argument("cross needs two valid configurations");
  if (c1.n() < 2 || c1.n() % 2 != 0 || c2.n() < 2 || c2.n() % 2 != 0)
    throw BadSize("cross needs even-size configurations");
  const auto g1 = underlying_geograph(c1);
  const auto g2 = underlying_geograph(c2);
  Construction out;
  out.cert.kind = "cross";
  std::vector<std::pair<int, int>> want = g1.edges;
  for (auto [a, b] : g2.edges) want.emplace_back(a + c1.n(), b + c1.n());
  out.cert.expected_edge_list = want;
  out.cert.expected_edges = static_cast<int>(want.size());

  // Each branch is placed by an affine map sending half its points to each
  // side of the origin along its own diagonal, so the two narrow segments
  // cross at both medians.
  auto place = [](PointConfig& dst, const PointConfig& src, const Direction& dir,
                  const Scalar& factor) {
    const Direction u = generic_up_direction(src);
    const auto order = x_order(src, u);
    const int n = src.n();
    const Scalar med = (rotated_x(u, src[order[static_cast<std::size_t>(n / 2 - 1)]]) +
                        rotated_x(u, src[order[static_cast<std::size_t>(n / 2)]])) /
                       2;
    Scalar amax(0), ymax(0);
    for (int i = 0; i < n; ++i) {
      const Scalar a = abs(rotated_x(u, src[i]) - med);
      if (a > amax) amax = a;
      const Scalar y = abs(rotated_y(u, src[i]));
      if (y > ymax) ymax = y;
    }
    const Scalar alpha = 1 / (1 + amax);
    const Scalar beta = 1 / ((1 + ymax) * factor);
    const Direction nrm = perp(dir);
    for (int i = 0; i < n; ++i) {
      const Scalar a = (rotated_x(u, src[i]) - med) * alpha;
      const Scalar b = rotated_y(u, src[i]) * beta;
      dst.points.push_back({a * dir.dx + b * nrm.dx, a * dir.dy + b * nrm.dy});
    }
  };

  Scalar factor = detail::pow2(16);
  for (int attempt = 0; attempt < 8; ++attempt, factor *= factor) {
    PointConfig cand;
    place(cand, c1, Direction{Scalar(1), Scalar(1)}, factor);
    place(cand, c2, Direction{Scalar(1), Scalar(-1)}, factor);
    out.config = cand;
    if (validate_cert(cand, out.cert).ok) return out;
  }
  throw ConstructionFailed("cross");
}

/// Three equal-size branches on rays ~120 degrees apart. Besides the three
/// input edge sets, ranks i and j on neighboring rays with i + j = n_b/2 + 1
/// become halving edges: (3/2) n_b new edges.
inline Construction y_shape(const PointConfig& c1, const PointConfig& c2,
                            const PointConfig& c3) {
  const std::array<const PointConfig*, 3> branches{&c1, &c2, &c3};
  const int nb = c1.n();
  if (c2.n() != nb || c3.n() != nb) throw SizeMismatch();
  if (nb < 2 || nb % 2 != 0) throw BadSize("y_shape branches must have even size");
  for (const auto* c : branches)
    if (!is_valid_config(*c)) throw std::invalid_argument("y_shape needs valid configurations");

  // Pairwise separations of these rays lie in (90, 150) degrees and each
  // reversed ray falls strictly inside the opposite sector, which is what the
  // halving balance of the inter-branch edges rests on.
  const std::array<Direction, 3> rays{Direction{Scalar(0), Scalar(1)},
                                      Direction{Scalar(-13), Scalar(-7)},
                                      Direction{Scalar(13), Scalar(-7)}};

  Construction out;
  out.cert.kind = "y-shape";
  std::vector<std::pair<int, int>> want;
  int total_in = 0;
  for (int t = 0; t < 3; ++t) {
    const auto g = underlying_geograph(*branches[static_cast<std::size_t>(t)]);
    total_in += g.E();
    for (auto [a, b] : g.edges) want.emplace_back(a + t * nb, b + t * nb);
  }
  std::array<std::vector<int>, 3> rank;  // rank[t][r-1] = local index of rank r
  for (int t = 0; t < 3; ++t)
    rank[static_cast<std::size_t>(t)] =
        detail::branch_rank_order(*branches[static_cast<std::size_t>(t)]);
  for (int t = 0; t < 3; ++t) {
    const int tn = (t + 1) % 3;
    for (int i = 1; i <= nb / 2; ++i) {
      const int j = nb / 2 + 1 - i;
      want.emplace_back(t * nb + rank[static_cast<std::size_t>(t)][static_cast<std::size_t>(i - 1)],
                        tn * nb +
                            rank[static_cast<std::size_t>(tn)][static_cast<std::size_t>(j - 1)]);
    }
  }
  out.cert.expected_edge_list = want;
  out.cert.expected_edges = total_in + 3 * nb / 2;

  Scalar factor = detail::pow2(16);
  for (int attempt = 0; attempt < 8; ++attempt, factor *= factor) {
    PointConfig cand;
    for (int t = 0; t < 3; ++t)
      detail::place_branch(cand, *branches[static_cast<std::size_t>(t)],
                           rays[static_cast<std::size_t>(t)], factor);
    out.config = cand;
    if (validate_cert(cand, out.cert).ok) return out;
  }
  throw ConstructionFailed("y-shape");
}

/// V-shape: two concave arcs on the lines y = -x (left) and y = x (right)
/// with two extra points below the origin. The promised path runs down the
/// left arc, through (0,-1), and up the right arc: n-1 vertices.
/// four_leaves replaces the two axis points by a horizontal bottom pair,
/// trading the path promise for a degree sequence with exactly four ones.
inline Construction path_construction(int n, bool four_leaves = false) {
  if (n < 4 || n % 2 != 0) throw BadSize("path construction size must be even and at least 4");
  const int m = (n - 2) / 2;
  Construction out;
  out.cert.kind = four_leaves ? "path-four-leaves" : "path";
  if (four_leaves) {
    DegreeSequence deg(static_cast<std::size_t>(n), 3);
    deg[static_cast<std::size_t>(n - 4)] = deg[static_cast<std::size_t>(n - 3)] =
        deg[static_cast<std::size_t>(n - 2)] = deg[static_cast<std::size_t>(n - 1)] = 1;
    out.cert.expected_degrees = deg;
  } else {
    out.cert.marked_shape = "path";
    for (int i = m - 1; i >= 0; --i) out.cert.marked.push_back(i);  // left arc, outside in
    out.cert.marked.push_back(2 * m);                               // (0,-1)
    for (int i = m; i < 2 * m; ++i) out.cert.marked.push_back(i);   // right arc, inside out
  }

  Scalar factor = detail::pow2(16);
  for (int attempt = 0; attempt < 8; ++attempt, factor *= factor) {
    PointConfig cand;
    for (int k = 1; k <= m; ++k) {
      const Scalar w = Scalar(k) * (m + 1 - k) / factor;  // strictly concave cap
      cand.points.push_back({Scalar(-k) + w, Scalar(k) + w});
    }
    for (int k = 1; k <= m; ++k) {
      const Scalar w = Scalar(k) * (m + 1 - k) / factor;
      cand.points.push_back({Scalar(k) - w, Scalar(k) + w});
    }
    if (four_leaves) {
      cand.points.push_back({Scalar(-1), Scalar(-2)});
      cand.points.push_back({Scalar(1), Scalar(-2)});
    } else {
      cand.points.push_back({Scalar(0), Scalar(-1)});
      cand.points.push_back({Scalar(0), Scalar(-2)});
    }
    out.config = cand;
    if (validate_cert(cand, out.cert).ok) return out;
  }
  throw ConstructionFailed(out.cert.kind);
}

/// Three ordered copies of the path construction in a Y-shape. Each branch is
/// squeezed so its path endpoints take along-segment positions 1 and b/2;
/// then the rank-1 and rank-b/2 inter-branch edges close the three sub-paths
/// into an (n-3)-cycle.
inline Construction cycle_construction(int n) {
  if (n < 6 || n % 6 != 0) throw BadSize("cycle construction size must be a multiple of 6");
  const int b = n / 3;

  // Two-point branches admit no path construction, but the rank pairing
  // 1 + 1 = b/2 + 1 already closes the three rank-1 vertices into a triangle.
  if (b == 2) {
    PointConfig two;
    two.points = {{Scalar(0), Scalar(0)}, {Scalar(1), Scalar(1)}};
    Construction out = y_shape(two, two, two);
    out.cert.kind = "cycle";
    out.cert.marked_shape = "cycle";
    out.cert.marked.clear();
    const int r1 = detail::branch_rank_order(two).front();
    for (int t : {0, 1, 2}) out.cert.marked.push_back(t * 2 + r1);
    const CertCheck chk = validate_cert(out.config, out.cert);
    if (!chk.ok) throw ConstructionFailed("cycle: " + chk.detail);
    return out;
  }

  Construction branch = path_construction(b);
  const std::vector<int> path = branch.cert.marked;
  const int A = path.front(), B = path.back();
  PointConfig seg = segmentarize_ordered(branch.config, A, B, b / 2);
  {
    auto order = detail::branch_rank_order(seg);
    if (order.front() != A) {
      AffineMap flip;
      flip.m00 = flip.m11 = Scalar(-1);
      seg = apply_affine(seg, flip);
      order = detail::branch_rank_order(seg);
    }
    if (order.front() != A ||
        order[static_cast<std::size_t>(b / 2 - 1)] != B)
      throw ConstructionFailed("cycle: ordered segment ranks");
  }

  Construction out = y_shape(seg, seg, seg);
  out.cert.kind = "cycle";
  out.cert.marked_shape = "cycle";
  out.cert.marked.clear();
  // branch t contributes its path from A to B; B on branch t joins A on
  // branch t-1 (the rank pairing 1 + b/2 = b/2 + 1)
  for (int t : {0, 2, 1}) {
    for (int v : path) out.cert.marked.push_back(t * b + v);
  }
  const CertCheck chk = validate_cert(out.config, out.cert);
  if (!chk.ok) throw ConstructionFailed("cycle: " + chk.detail);
  return out;
}

struct AbstractGraph {
  int n = 0;  // even
  std::vector<std::pair<int, int>> edges;
};

/// Realizes g as the induced subgraph on marked vertices. Pair lines are
/// processed in decreasing slope order; each gets balanced far-away point
/// groups (half beyond each end, on the deficient side) that set its own
/// halving difference without moving any other pair line's difference.
inline Construction induced_embedding(const AbstractGraph& g) {
  if (g.n < 2 || g.n % 2 != 0) throw BadSize("induced embedding needs an even vertex count");
  const int k2 = g.n;
  std::set<std::pair<int, int>> want_edges;
  for (auto [a, b] : g.edges) {
    if (a == b || a < 0 || b < 0 || a >= k2 || b >= k2)
      throw std::invalid_argument("bad edge in abstract graph");
    want_edges.insert(std::minmax(a, b));
  }

  // Marked points sit on a parabola over a Sidon set, so all pair lines have
  // distinct slopes and no three points are collinear.
  std::vector<long long> sidon;
  {
    std::set<long long> sums;
    long long v = 1;
    while (static_cast<int>(sidon.size()) < k2) {
      bool ok = true;
      for (long long s : sidon)
        if (sums.count(s + v)) ok = false;
      if (ok) {
        for (long long s : sidon) sums.insert(s + v);
        sidon.push_back(v);
      }
      ++v;
    }
  }

  Construction out;
  out.cert.kind = "induced";
  out.cert.marked_shape = "induced";
  for (int i = 0; i < k2; ++i) out.cert.marked.push_back(i);
  for (auto [a, b] : want_edges) out.cert.marked_edges.emplace_back(a, b);

  struct PairLine {
    int a, b;
    Scalar slope;
  };
  std::vector<PairLine> lines;

  for (int attempt = 0; attempt < 8; ++attempt) {
    const Scalar gamma = 1 / detail::pow2(10 + 6 * attempt);
    PointConfig cfg;
    for (int i = 0; i < k2; ++i)
      cfg.points.push_back({Scalar(sidon[static_cast<std::size_t>(i)]),
                            Scalar(sidon[static_cast<std::size_t>(i)]) *
                                Scalar(sidon[static_cast<std::size_t>(i)])});
    lines.clear();
    for (int i = 0; i < k2; ++i)
      for (int j = i + 1; j < k2; ++j)
        lines.push_back({i, j,
                         (cfg[j].y - cfg[i].y) / (cfg[j].x - cfg[i].x)});
    std::sort(lines.begin(), lines.end(),
              [](const PairLine& x, const PairLine& y) { return x.slope > y.slope; });

    bool failed = false;
    for (const PairLine& pl : lines) {
      const Point P = cfg[pl.a], Q = cfg[pl.b];
      const Direction d = direction_between(P, Q);
      const Point mid{(P.x + Q.x) / 2, (P.y + Q.y) / 2};
      int plus = 0, minus = 0;
      for (int x = 0; x < cfg.n(); ++x) {
        if (x == pl.a || x == pl.b) continue;
        cross(d, direction_between(P, cfg[x])).sign() > 0 ? ++plus : ++minus;
      }
      const int delta = plus >= minus ? plus - minus : minus - plus;
      const bool edge = want_edges.count({pl.a, pl.b}) > 0;
      int to_add = 0, side = 0;
      if (edge && delta > 0) {
        to_add = delta;
        side = plus < minus ? 1 : -1;
      } else if (!edge && delta == 0) {
        to_add = 2;
        side = -1;
      }
      if (to_add == 0) continue;

      // Track parameter beyond every crossing of this line's far tracks with
      // any other pair line, so group sides are decided by direction alone.
      Scalar reach(16);
      for (const PairLine& other : lines) {
        if (other.a == pl.a && other.b == pl.b) continue;
        const Direction d2 = direction_between(cfg[other.a], cfg[other.b]);
        const Scalar denom = cross(d2, d);
        if (denom.is_zero()) continue;
        const Scalar base = abs(cross(d2, direction_between(cfg[other.a], mid)));
        const Scalar wobble = abs(cross(d2, perp(d))) * 4;
        const Scalar t = (base + wobble) / abs(denom);
        if (t > reach) reach = t;
      }
      const Scalar R = reach * 2 + 16 + 7 * attempt;  // shifted on retry
      const int half = to_add / 2;
      for (int e : {-1, +1}) {
        for (int j = 0; j < half; ++j) {
          const Scalar t = e * (R + j);
          const Scalar h = Scalar(side) * (1 + Scalar(j) * j * gamma);
          cfg.points.push_back(
              {mid.x + t * d.dx + h * perp(d).dx, mid.y + t * d.dy + h * perp(d).dy});
        }
      }
      if (!validate_general_position(cfg).ok) {
        failed = true;
        break;
      }
    }
    if (failed) continue;
    out.config = cfg;
    if (validate_cert(cfg, out.cert).ok) return out;
  }
  throw ConstructionFailed("induced");
}

/// K_k on the marked polygon vertices. A rational projective distortion makes
/// each parallel class of the near-regular k-gon a pencil meeting far right;
/// a fan of two points per far sector turns the whole cluster into halving
/// lines, and two balanced far-left groups keep every other line untouched.
inline Construction clique_construction(int k) {
  if (k < 2 || k % 2 != 0) throw BadSize("clique size must be even and at least 2");
  Construction out;
  out.cert.kind = "clique";
  out.cert.marked_shape = "clique";
  for (int i = 0; i < k; ++i) out.cert.marked.push_back(i);
  if (k == 2) {
    out.config.points = {{Scalar(0), Scalar(0)}, {Scalar(1), Scalar(1)}};
    return out;
  }

  const Scalar alpha(1, 8);  // horizon at x = 8, polygon inside the unit disk
  for (int prec : {26, 32, 38, 44, 48}) {
    for (int spread_boost = 0; spread_boost < 3; ++spread_boost) {
      PointConfig cfg;
      bool bad = false;
      for (int i = 0; i < k && !bad; ++i) {
        const double theta = 2.0 * detail::kPi * i / k + detail::kPi / (4.0 * k);
        const Point p = detail::circle_point(detail::tan_half(theta, prec));
        const Scalar denom = 1 + alpha * p.x;
        if (denom.sign() <= 0) bad = true;
        cfg.points.push_back({p.x / denom, p.y / denom});
      }
      if (bad) continue;
      // no pair line may be vertical (the horizon direction)
      for (int i = 0; i < k && !bad; ++i)
        for (int j = i + 1; j < k; ++j)
          if (cfg[i].x == cfg[j].x) bad = true;
      if (bad || !validate_general_position(cfg).ok) continue;

      // direction classes of the ideal regular k-gon: (i + j) mod k
      bool built = true;
      for (int c = 0; c < k && built; ++c) {
        struct ClusterLine {
          int a, b;
          Scalar slope, intercept;
        };
        std::vector<ClusterLine> cl;
        for (int i = 0; i < k; ++i)
          for (int j = i + 1; j < k; ++j)
            if ((i + j) % k == c) {
              const Scalar s = (cfg[j].y - cfg[i].y) / (cfg[j].x - cfg[i].x);
              cl.push_back({i, j, s, cfg[i].y - s * cfg[i].x});
            }
        const int L = static_cast<int>(cl.size());
        if (L <= 1) continue;  // a lone line is already balanced
        // top-to-bottom by intercept; the distortion makes slopes increase
        std::sort(cl.begin(), cl.end(),
                  [](const ClusterLine& x, const ClusterLine& y) {
                    return x.intercept > y.intercept;
                  });
        for (int j = 0; j + 1 < L; ++j)
          if (!(cl[static_cast<std::size_t>(j)].slope <
                cl[static_cast<std::size_t>(j + 1)].slope))
            built = false;
        if (!built) break;

        // far-right abscissa beyond every pairwise intersection of pair lines
        Scalar far_x(16);
        {
          std::vector<std::pair<Scalar, Scalar>> all;  // slope, intercept
          for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j) {
              const Scalar s = (cfg[j].y - cfg[i].y) / (cfg[j].x - cfg[i].x);
              all.emplace_back(s, cfg[i].y - s * cfg[i].x);
            }
          for (std::size_t i = 0; i < all.size(); ++i)
            for (std::size_t j = i + 1; j < all.size(); ++j) {
              if (all[i].first == all[j].first) continue;
              const Scalar x = abs((all[j].second - all[i].second) /
                                   (all[i].first - all[j].first));
              if (x > far_x) far_x = x;
            }
          for (const Point& p : cfg.points) {
            const Scalar ax = abs(p.x);
            if (ax > far_x) far_x = ax;
          }
        }
        const Scalar T = (far_x * 2 + 16) * detail::pow2(4 * spread_boost);

        // fan: two points strictly inside each consecutive far sector
        auto at = [&](const ClusterLine& l, const Scalar& x) {
          return l.slope * x + l.intercept;
        };
        for (int j = 0; j + 1 < L; ++j) {
          for (int step : {0, 1}) {
            const Scalar x = T + step * Scalar(1, 4) + Scalar(c) / (8 * k);
            const Scalar lo = at(cl[static_cast<std::size_t>(j)], x);
            const Scalar hi = at(cl[static_cast<std::size_t>(j + 1)], x);
            const Scalar y =
                lo + (hi - lo) * Scalar(2 + step + ((c + j) % 3), 8);  // strictly inside
            cfg.points.push_back({x, y});
          }
        }
        // compensation: L-1 points above and L-1 below the cluster, far left;
        // the band extremes are evaluated at each point's own abscissa
        const Scalar U = T;
        for (int j = 0; j < L - 1; ++j) {
          const Scalar x = -U - Scalar(j) - Scalar(c) / (4 * k);
          Scalar top = at(cl.front(), x), bot = top;
          for (const ClusterLine& l : cl) {
            const Scalar y = at(l, x);
            if (y > top) top = y;
            if (y < bot) bot = y;
          }
          const Scalar rise = 1 + Scalar(j) * j / (L + 1);
          cfg.points.push_back({x, top + (top - bot) + rise});
          cfg.points.push_back({x, bot - (top - bot) - rise});
        }
      }
      if (!built) continue;
      out.config = cfg;
      if (validate_cert(cfg, out.cert).ok) return out;
    }
  }
  throw ConstructionFailed("clique");
}

/// Pads to target_n points by crossing with a convex polygon (or a plain
/// two-point segment); the original graph survives as a disjoint component.
inline Construction pad(const PointConfig& cfg, int target_n) {
  if (target_n % 2 != 0 || target_n < cfg.n())
    throw BadSize("pad target must be even and at least the current size");
  const int diff = target_n - cfg.n();
  Construction out;
  if (diff == 0) {
    out.config = cfg;
    out.cert.kind = "pad";
    out.cert.expected_edge_list = underlying_geograph(cfg).edges;
    out.cert.expected_edges = static_cast<int>(out.cert.expected_edge_list->size());
    return out;
  }
  PointConfig extra;
  if (diff == 2)
    extra.points = {{Scalar(0), Scalar(0)}, {Scalar(1), Scalar(1)}};
  else
    extra = convex_polygon(diff).config;
  out = cross(cfg, extra);
  out.cert.kind = "pad";
  return out;
}

}  // namespace halving
