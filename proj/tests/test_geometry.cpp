#include <halving/geometry.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <sstream>

using namespace halving;

namespace {

PointConfig square() {
  return {{{Scalar(0), Scalar(0)}, {Scalar(4), Scalar(0)}, {Scalar(4), Scalar(3)},
           {Scalar(0), Scalar(3)}}};
}

}  // namespace

TEST_CASE("scalar text round trip") {
  CHECK(format_scalar(parse_scalar("42")) == "42");
  CHECK(format_scalar(parse_scalar("-7")) == "-7");
  CHECK(format_scalar(parse_scalar("6/4")) == "3/2");
  CHECK(format_scalar(parse_scalar("-6/4")) == "-3/2");
  CHECK(format_scalar(parse_scalar("0/9")) == "0");
  CHECK(parse_scalar("1/3") + parse_scalar("1/6") == Scalar(1, 2));

  CHECK_THROWS_AS(parse_scalar(""), ParseError);
  CHECK_THROWS_AS(parse_scalar("1.5"), ParseError);
  CHECK_THROWS_AS(parse_scalar("x"), ParseError);
  CHECK_THROWS_AS(parse_scalar("3/"), ParseError);
  CHECK_THROWS_AS(parse_scalar("3/0"), ParseError);
  CHECK_THROWS_AS(parse_scalar("1e3"), ParseError);
}

TEST_CASE("fixed-point decimals round half to even") {
  CHECK(format_decimal(Scalar(1, 2), 0) == "0");
  CHECK(format_decimal(Scalar(3, 2), 0) == "2");
  CHECK(format_decimal(Scalar(5, 2), 0) == "2");
  CHECK(format_decimal(Scalar(1, 8), 2) == "0.12");
  CHECK(format_decimal(Scalar(3, 8), 2) == "0.38");
  CHECK(format_decimal(Scalar(-1, 8), 2) == "-0.12");
  CHECK(format_decimal(Scalar(0), 2) == "0.00");
  CHECK(format_decimal(Scalar(7), 3) == "7.000");
  CHECK(format_decimal(Scalar(-1, 1000000), 2) == "0.00");
  CHECK(format_decimal(Scalar(1234567, 1000), 6) == "1234.567000");
}

TEST_CASE("integer roots are exact floors") {
  CHECK(isqrt(Int(0)) == 0);
  CHECK(isqrt(Int(35)) == 5);
  CHECK(isqrt(Int(36)) == 6);
  const Int big = (Int(1) << 200) - 1;
  CHECK(isqrt(big * big) == big);
  CHECK(icbrt(Int(0)) == 0);
  CHECK(icbrt(Int(26)) == 2);
  CHECK(icbrt(Int(27)) == 3);
  CHECK(icbrt(big * big * big) == big);
  CHECK(icbrt(big * big * big - 1) == big - 1);
  CHECK_THROWS(isqrt(Int(-1)));
  CHECK_THROWS(icbrt(Int(-8)));
}

TEST_CASE("orientation predicate") {
  const Point a{Scalar(0), Scalar(0)}, b{Scalar(2), Scalar(0)};
  CHECK(orientation(a, b, {Scalar(1), Scalar(1)}) == Orientation::CCW);
  CHECK(orientation(a, b, {Scalar(1), Scalar(-1)}) == Orientation::CW);
  CHECK(orientation(a, b, {Scalar(7), Scalar(0)}) == Orientation::COLLINEAR);
  // tiny rational offsets still decide exactly
  CHECK(orientation(a, b, {Scalar(1), Scalar(1, Int(1) << 200)}) == Orientation::CCW);
}

TEST_CASE("direction algebra") {
  const Direction d{Scalar(3), Scalar(4)};
  CHECK(cross(d, perp(d)) == dot(d, d));
  CHECK(dot(d, perp(d)).is_zero());
  CHECK(same_direction(d, Direction{Scalar(3, 2), Scalar(2)}));
  CHECK_FALSE(same_direction(d, -d));
  CHECK(parallel(d, -d));

  const Direction r = Direction{Scalar(4, 6), Scalar(8, 6)}.reduced();
  CHECK(r.dx == 1);
  CHECK(r.dy == 2);
  CHECK(Direction{Scalar(-2), Scalar(-4)}.axis_key() == std::make_pair(Int(1), Int(2)));
  CHECK(Direction{Scalar(-2), Scalar(0)}.axis_key() == std::make_pair(Int(1), Int(0)));
}

TEST_CASE("general position validation") {
  PointConfig good = square();
  CHECK(validate_general_position(good).ok);
  CHECK(is_valid_config(good));

  PointConfig dup = good;
  dup.points.push_back(good[1]);
  dup.points.push_back({Scalar(9), Scalar(9)});
  const auto d = validate_general_position(dup);
  CHECK_FALSE(d.ok);
  CHECK(d.duplicate);
  CHECK(d.witness[0] == 1);
  CHECK(d.witness[1] == 4);

  PointConfig col = good;
  col.points.push_back({Scalar(8), Scalar(0)});
  col.points.push_back({Scalar(1), Scalar(7)});
  const auto c = validate_general_position(col);
  CHECK_FALSE(c.ok);
  CHECK_FALSE(c.duplicate);
  CHECK(c.witness == std::array<int, 3>{0, 1, 4});

  PointConfig odd{{{Scalar(0), Scalar(0)}, {Scalar(1), Scalar(0)}, {Scalar(0), Scalar(1)}}};
  CHECK(validate_general_position(odd).ok);
  CHECK_FALSE(is_valid_config(odd));  // odd count
}

TEST_CASE("affine maps preserve exactness") {
  const AffineMap id = AffineMap::identity();
  CHECK(id.det() == 1);
  const Point p{Scalar(5, 3), Scalar(-2, 7)};
  CHECK(id.apply(p) == p);

  AffineMap m;
  m.m00 = Scalar(2);
  m.m01 = Scalar(1, 3);
  m.m10 = Scalar(0);
  m.m11 = Scalar(1, 2);
  m.tx = Scalar(-1);
  CHECK(m.det() == Scalar(1));
  const PointConfig out = apply_affine(square(), m);
  CHECK(out[0] == Point{Scalar(-1), Scalar(0)});
  CHECK(out[2] == Point{Scalar(8), Scalar(3, 2)});

  AffineMap sing;
  sing.m11 = Scalar(0);
  CHECK_THROWS_AS(apply_affine(square(), sing), SingularMap);
}

TEST_CASE("rotated frame and generic directions") {
  const PointConfig cfg = square();
  const Direction up{Scalar(0), Scalar(1)};
  // vertical up is degenerate here: two points share x = 0
  CHECK_FALSE(is_generic_up(cfg, up));
  CHECK_FALSE(is_generic_up(cfg, Direction{Scalar(0), Scalar(0)}));

  const Direction g = generic_up_direction(cfg);
  CHECK(is_generic_up(cfg, g));
  const auto ord = x_order(cfg, g);
  for (std::size_t i = 0; i + 1 < ord.size(); ++i)
    CHECK(rotated_x(g, cfg[ord[i]]) < rotated_x(g, cfg[ord[i + 1]]));

  // rotating the square's frame by up = +x sends (x, y) to x' = -y
  const Direction right{Scalar(1), Scalar(0)};
  CHECK(rotated_x(right, cfg[2]) == Scalar(-3));
  CHECK(rotated_y(right, cfg[2]) == Scalar(4));
}

TEST_CASE("segment crossing is open") {
  const Point a{Scalar(0), Scalar(0)}, b{Scalar(4), Scalar(4)};
  const Point c{Scalar(0), Scalar(4)}, d{Scalar(4), Scalar(0)};
  CHECK(segments_cross(a, b, c, d));
  CHECK_FALSE(segments_cross(a, b, a, c));                       // shared endpoint
  CHECK_FALSE(segments_cross(a, b, {Scalar(2), Scalar(2)}, d));  // T-touch at interior
  CHECK_FALSE(segments_cross(a, {Scalar(1), Scalar(1)}, c, d));  // too short to reach
  CHECK_FALSE(segments_cross(a, b, {Scalar(1), Scalar(0)}, {Scalar(5), Scalar(4)}));  // parallel

  CHECK(line_intersection(a, b, c, d) == Point{Scalar(2), Scalar(2)});
  CHECK(line_intersection({Scalar(0), Scalar(0)}, {Scalar(3), Scalar(1)}, {Scalar(0), Scalar(1)},
                          {Scalar(1), Scalar(0)}) == Point{Scalar(3, 4), Scalar(1, 4)});
}

TEST_CASE("convex hull in ccw order") {
  PointConfig cfg = square();
  cfg.points.push_back({Scalar(2), Scalar(1)});  // interior
  cfg.points.push_back({Scalar(1), Scalar(1)});  // interior
  const auto hull = convex_hull(cfg);
  REQUIRE(hull.size() == 4);
  CHECK(hull[0] == 0);  // lexicographically smallest point first
  for (std::size_t i = 0; i < hull.size(); ++i) {
    const Point& p = cfg[hull[i]];
    const Point& q = cfg[hull[(i + 1) % hull.size()]];
    const Point& r = cfg[hull[(i + 2) % hull.size()]];
    CHECK(orientation(p, q, r) == Orientation::CCW);
  }

  const PointConfig two{{{Scalar(3), Scalar(1)}, {Scalar(0), Scalar(0)}}};
  CHECK(convex_hull(two) == std::vector<int>{1, 0});
}

TEST_CASE("points file round trip") {
  PointConfig cfg = square();
  cfg.points.push_back({Scalar(22, 7), Scalar(-3, 5)});
  cfg.points.push_back({Scalar(-1), Scalar(1000000007)});

  std::ostringstream os;
  write_points(os, cfg);
  std::istringstream is(os.str());
  const PointConfig back = read_points(is);
  REQUIRE(back.n() == cfg.n());
  for (int i = 0; i < cfg.n(); ++i) CHECK(back[i] == cfg[i]);
}

TEST_CASE("points file accepts comments and blank lines") {
  std::istringstream is(
      "# two points\n"
      "\n"
      "2\n"
      "  # interleaved comment\n"
      "1/2 -3\n"
      "4 5/6\n");
  const PointConfig cfg = read_points(is);
  REQUIRE(cfg.n() == 2);
  CHECK(cfg[0] == Point{Scalar(1, 2), Scalar(-3)});
  CHECK(cfg[1] == Point{Scalar(4), Scalar(5, 6)});
}

TEST_CASE("points file rejects malformed input") {
  auto reject = [](const std::string& text) {
    std::istringstream is(text);
    CHECK_THROWS_AS(read_points(is), ParseError);
  };
  reject("");
  reject("# only comments\n");
  reject("garbage\n");
  reject("3\n0 0\n1 0\n0 1\n");       // odd count
  reject("2\n0 0\n");                 // too few points
  reject("2\n0 0\n1 0\n2 2\n");       // too many points
  reject("2\n0 0 0\n1 0\n");          // trailing token
  reject("2 2\n0 0\n1 0\n");          // trailing token after count
  reject("2\n0\n1 0\n");              // missing coordinate
  reject("2\n0 a\n1 0\n");            // bad coordinate
  reject("2\n0.5 1\n1 0\n");          // decimals are not part of the format
}
