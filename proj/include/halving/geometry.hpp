#pragma once

// Points, directions, exact predicates, affine maps, and the points file
// format. Everything downstream assumes general position, validated here.

#include <halving/rational.hpp>

#include <algorithm>
#include <array>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <vector>

namespace halving {

enum class Orientation : int { CW = -1, COLLINEAR = 0, CCW = 1 };

struct Point {
  Scalar x, y;
  friend bool operator==(const Point& a, const Point& b) { return a.x == b.x && a.y == b.y; }
  friend bool operator!=(const Point& a, const Point& b) { return !(a == b); }
  friend bool operator<(const Point& a, const Point& b) {
    return a.x != b.x ? a.x < b.x : a.y < b.y;
  }
};

/// Nonzero vector; two Directions are the same direction iff positively
/// proportional. reduced() clears denominators and divides by gcd keeping
/// the sign; axis_key() additionally flips so (dy, dx) is lexicographically
/// positive, giving a stable mod-half-turn map key.
struct Direction {
  Scalar dx, dy;

  Direction reduced() const {
    Int nx = numerator(dx) * denominator(dy);
    Int ny = numerator(dy) * denominator(dx);
    Int g = boost::multiprecision::gcd(boost::multiprecision::abs(nx), boost::multiprecision::abs(ny));
    if (g.is_zero()) return {dx, dy};  // zero vector; callers reject earlier
    return {Scalar(nx / g), Scalar(ny / g)};
  }

  std::pair<Int, Int> axis_key() const {
    Direction r = reduced();
    Int nx = numerator(r.dx), ny = numerator(r.dy);
    if (ny < 0 || (ny == 0 && nx < 0)) { nx = -nx; ny = -ny; }
    return {nx, ny};
  }

  bool is_zero() const { return dx.is_zero() && dy.is_zero(); }
};

inline Scalar cross(const Direction& a, const Direction& b) { return a.dx * b.dy - a.dy * b.dx; }
inline Scalar dot(const Direction& a, const Direction& b) { return a.dx * b.dx + a.dy * b.dy; }
inline Direction perp(const Direction& d) { return {-d.dy, d.dx}; }
inline Direction operator-(const Direction& d) { return {-d.dx, -d.dy}; }
inline Direction direction_between(const Point& from, const Point& to) {
  return {to.x - from.x, to.y - from.y};
}
inline bool same_direction(const Direction& a, const Direction& b) {
  return cross(a, b).is_zero() && dot(a, b).sign() > 0;
}
inline bool parallel(const Direction& a, const Direction& b) { return cross(a, b).is_zero(); }

inline Orientation orientation(const Point& p, const Point& q, const Point& r) {
  const Scalar det = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
  const int s = det.sign();
  return s > 0 ? Orientation::CCW : s < 0 ? Orientation::CW : Orientation::COLLINEAR;
}

/// Line through a point with a direction.
struct Line {
  Point through;
  Direction dir;
};

struct PointConfig {
  std::vector<Point> points;
  int n() const { return static_cast<int>(points.size()); }
  const Point& operator[](int i) const { return points[static_cast<std::size_t>(i)]; }
};

struct GeneralPositionReport {
  bool ok = true;
  bool duplicate = false;        // witness holds (i, j, -1)
  std::array<int, 3> witness{-1, -1, -1};
};

/// First violation in index order: duplicate pair before collinear triple.
inline GeneralPositionReport validate_general_position(const PointConfig& cfg) {
  const int n = cfg.n();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (cfg[i] == cfg[j]) return {false, true, {i, j, -1}};
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k)
        if (orientation(cfg[i], cfg[j], cfg[k]) == Orientation::COLLINEAR)
          return {false, false, {i, j, k}};
  return {};
}

inline bool is_valid_config(const PointConfig& cfg) {
  return cfg.n() >= 2 && cfg.n() % 2 == 0 && validate_general_position(cfg).ok;
}

struct SingularMap : std::runtime_error {
  SingularMap() : std::runtime_error("affine map is singular") {}
};

struct AffineMap {
  Scalar m00{1}, m01{0}, m10{0}, m11{1};
  Scalar tx{0}, ty{0};

  Scalar det() const { return m00 * m11 - m01 * m10; }
  Point apply(const Point& p) const {
    return {m00 * p.x + m01 * p.y + tx, m10 * p.x + m11 * p.y + ty};
  }
  static AffineMap identity() { return {}; }
};

inline PointConfig apply_affine(const PointConfig& cfg, const AffineMap& m) {
  if (m.det().is_zero()) throw SingularMap();
  PointConfig out;
  out.points.reserve(cfg.points.size());
  for (const Point& p : cfg.points) out.points.push_back(m.apply(p));
  return out;
}

// ---------------------------------------------------------------------------
// Rotated frame. rotate(up -> +y) sends p to (x', y'); only relative order
// and signs of x'/y' ever matter, so the unnormalized rotation suffices.

inline Scalar rotated_x(const Direction& up, const Point& p) { return up.dy * p.x - up.dx * p.y; }
inline Scalar rotated_y(const Direction& up, const Point& p) { return up.dx * p.x + up.dy * p.y; }

/// A direction is generic for a config when no two points share a rotated
/// x-coordinate (equivalently: up is parallel to no pairwise difference).
inline bool is_generic_up(const PointConfig& cfg, const Direction& up) {
  if (up.is_zero()) return false;
  const int n = cfg.n();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (parallel(up, direction_between(cfg[i], cfg[j]))) return false;
  return true;
}

/// Vertex indices sorted by increasing rotated x.
inline std::vector<int> x_order(const PointConfig& cfg, const Direction& up) {
  std::vector<int> idx(static_cast<std::size_t>(cfg.n()));
  for (int i = 0; i < cfg.n(); ++i) idx[static_cast<std::size_t>(i)] = i;
  std::sort(idx.begin(), idx.end(), [&](int a, int b) {
    return rotated_x(up, cfg[a]) < rotated_x(up, cfg[b]);
  });
  return idx;
}

namespace detail {

// angle(a) < angle(b) for vectors in the upper half-plane (angles in [0, pi)).
inline bool axis_angle_less(const std::pair<Int, Int>& a, const std::pair<Int, Int>& b) {
  const Int cr = a.first * b.second - a.second * b.first;
  return cr > 0;
}

// Compares sizes of two angular gaps, each given by (cross, dot) with the
// gap in (0, pi]. Returns true when g1 is strictly larger.
inline bool gap_greater(const Scalar& c1, const Scalar& d1, const Scalar& c2, const Scalar& d2) {
  auto cls = [](const Scalar& c, const Scalar& d) {
    if (c.is_zero()) return 3;        // exactly pi
    if (d.sign() < 0) return 2;       // (pi/2, pi)
    if (d.is_zero()) return 1;        // exactly pi/2
    return 0;                         // (0, pi/2)
  };
  const int k1 = cls(c1, d1), k2 = cls(c2, d2);
  if (k1 != k2) return k1 > k2;
  if (k1 == 1 || k1 == 3) return false;  // equal gaps
  // within one class tan is monotone and dots share a sign
  return c1 * d2 > c2 * d1;
}

// Rational approximation of v / |v| with error O(2^-prec); never zero.
inline Direction approx_unit(const Direction& v, unsigned prec) {
  const Scalar n2 = dot(v, v);
  const Int num = numerator(n2), den = denominator(n2);
  // sqrt(n2) ~= isqrt(num * den * 4^prec) / (den * 2^prec)
  const Int s = isqrt(num * den << (2 * prec));
  if (s.is_zero()) return v;
  const Scalar inv_len = Scalar(den << prec, s);
  return {v.dx * inv_len, v.dy * inv_len};
}

}  // namespace detail

/// Deterministic direction that is generic for cfg: collect the pairwise
/// difference axes, sort modulo a half-turn, and return (a rational
/// approximation of) the midpoint of the largest angular gap, verified
/// exactly to lie strictly inside the gap.
inline Direction generic_up_direction(const PointConfig& cfg) {
  const int n = cfg.n();
  std::vector<std::pair<Int, Int>> axes;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      axes.push_back(direction_between(cfg[i], cfg[j]).axis_key());
  std::sort(axes.begin(), axes.end(), [](const auto& a, const auto& b) {
    if (detail::axis_angle_less(a, b)) return true;
    if (detail::axis_angle_less(b, a)) return false;
    return a < b;
  });
  axes.erase(std::unique(axes.begin(), axes.end(),
                         [](const auto& a, const auto& b) {
                           return Int(a.first * b.second - a.second * b.first).is_zero();
                         }),
             axes.end());

  // Gap i runs from axes[i] to axes[i+1]; the last wraps to -axes[0].
  const std::size_t m = axes.size();
  // a lone axis (two-point configuration) leaves a half-turn gap whose exact
  // midpoint is the perpendicular
  if (m == 1) return perp(Direction{Scalar(axes[0].first), Scalar(axes[0].second)}).reduced();
  auto gap_ends = [&](std::size_t i) -> std::pair<Direction, Direction> {
    Direction u{Scalar(axes[i].first), Scalar(axes[i].second)};
    if (i + 1 < m) return {u, Direction{Scalar(axes[i + 1].first), Scalar(axes[i + 1].second)}};
    return {u, Direction{Scalar(-axes[0].first), Scalar(-axes[0].second)}};
  };
  std::size_t best = 0;
  for (std::size_t i = 1; i < m; ++i) {
    auto [u1, v1] = gap_ends(best);
    auto [u2, v2] = gap_ends(i);
    if (detail::gap_greater(cross(u2, v2), dot(u2, v2), cross(u1, v1), dot(u1, v1))) best = i;
  }

  auto [u, v] = gap_ends(best);
  for (unsigned prec = 32; prec <= 4096; prec *= 2) {
    Direction a = detail::approx_unit(u, prec);
    Direction b = detail::approx_unit(v, prec);
    Direction mid{a.dx + b.dx, a.dy + b.dy};
    if (mid.is_zero()) continue;
    if (cross(u, mid).sign() > 0 && cross(mid, v).sign() > 0 && is_generic_up(cfg, mid))
      return mid.reduced();
  }
  // unreachable: the exact bisector is strictly interior and approximations converge
  throw std::logic_error("generic_up_direction: no midpoint found");
}

// ---------------------------------------------------------------------------
// Segments.

/// True when the open segments ab and cd intersect in exactly one interior
/// point (all four endpoints distinct, no touching).
inline bool segments_cross(const Point& a, const Point& b, const Point& c, const Point& d) {
  const int o1 = static_cast<int>(orientation(a, b, c));
  const int o2 = static_cast<int>(orientation(a, b, d));
  const int o3 = static_cast<int>(orientation(c, d, a));
  const int o4 = static_cast<int>(orientation(c, d, b));
  return o1 * o2 < 0 && o3 * o4 < 0;
}

/// Intersection point of the (non-parallel) lines ab and cd.
inline Point line_intersection(const Point& a, const Point& b, const Point& c, const Point& d) {
  const Direction r = direction_between(a, b), s = direction_between(c, d);
  const Scalar denom = cross(r, s);
  const Scalar t = cross(direction_between(a, c), s) / denom;
  return {a.x + t * r.dx, a.y + t * r.dy};
}

/// Indices of hull vertices in counterclockwise order, lexicographically
/// smallest first. Assumes general position (no collinear triples).
inline std::vector<int> convex_hull(const PointConfig& cfg) {
  const int n = cfg.n();
  std::vector<int> idx(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) idx[static_cast<std::size_t>(i)] = i;
  std::sort(idx.begin(), idx.end(), [&](int a, int b) { return cfg[a] < cfg[b]; });
  if (n <= 2) return idx;
  std::vector<int> hull;
  auto build = [&](auto first, auto last) {
    const std::size_t base = hull.size();
    for (auto it = first; it != last; ++it) {
      while (hull.size() >= base + 2 &&
             orientation(cfg[hull[hull.size() - 2]], cfg[hull.back()], cfg[*it]) !=
                 Orientation::CCW)
        hull.pop_back();
      hull.push_back(*it);
    }
    hull.pop_back();
  };
  build(idx.begin(), idx.end());
  build(idx.rbegin(), idx.rend());
  return hull;
}

// ---------------------------------------------------------------------------
// Points file: '#' comment lines, then n, then n lines of "X Y" where each
// coordinate is a decimal integer or a fraction p/q. Round-trips bit-exactly.

inline PointConfig read_points(std::istream& in) {
  std::vector<std::string> tokens;
  std::string line;
  std::optional<long> expected;
  PointConfig cfg;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    if (!expected) {
      long n;
      if (!(ls >> n) || n < 2 || n % 2 != 0) throw ParseError("bad point count line: '" + line + "'");
      std::string rest;
      if (ls >> rest) throw ParseError("trailing tokens after count: '" + line + "'");
      expected = n;
      cfg.points.reserve(static_cast<std::size_t>(n));
      continue;
    }
    std::string xs, ys, rest;
    if (!(ls >> xs >> ys)) throw ParseError("bad point line: '" + line + "'");
    if (ls >> rest) throw ParseError("trailing tokens on point line: '" + line + "'");
    cfg.points.push_back({parse_scalar(xs), parse_scalar(ys)});
  }
  if (!expected) throw ParseError("empty points file");
  if (cfg.n() != *expected)
    throw ParseError("expected " + std::to_string(*expected) + " points, got " +
                     std::to_string(cfg.n()));
  return cfg;
}

inline void write_points(std::ostream& out, const PointConfig& cfg) {
  out << cfg.n() << "\n";
  for (const Point& p : cfg.points) out << format_scalar(p.x) << " " << format_scalar(p.y) << "\n";
}

}  // namespace halving
