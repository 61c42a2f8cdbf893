#include <cmath>
#include <random>

#include "doctest.h"
#include "euclid/error.hpp"
#include "euclid/plane.hpp"

using namespace euclid;

namespace {

bool near(Point p, Point q, double eps = 1e-12) { return distance(p, q) <= eps; }

}  // namespace

TEST_CASE("line through two points") {
  const Line x_axis = line_through({0, 0}, {1, 0});
  CHECK(std::abs(x_axis.residual({5, 0})) < 1e-12);
  CHECK(std::abs(x_axis.residual({0, 2})) == doctest::Approx(2.0));

  const Line y_axis = line_through({0, 0}, {0, 1});
  CHECK(std::abs(y_axis.residual({0, -7})) < 1e-12);

  const Line diag = line_through({0, 0}, {1, 1});
  CHECK(std::abs(diag.residual({3, 3})) < 1e-12);
  CHECK(diag.a() * diag.a() + diag.b() * diag.b() == doctest::Approx(1.0));

  CHECK_THROWS_AS(line_through({1, 1}, {1, 1}), DegenerateInput);
}

TEST_CASE("line-line intersection") {
  const Line x_axis = line_through({0, 0}, {1, 0});
  const Line y_axis = line_through({0, 0}, {0, 1});
  const auto o = intersect_line_line(x_axis, y_axis);
  REQUIRE(std::holds_alternative<Point>(o));
  CHECK(near(std::get<Point>(o), {0, 0}));

  const Line y1 = line_through({0, 1}, {1, 1});
  CHECK(std::holds_alternative<Parallel>(intersect_line_line(x_axis, y1)));
  CHECK(std::holds_alternative<Coincident>(
      intersect_line_line(x_axis, line_through({4, 0}, {-2, 0}))));

  const auto p = intersect_line_line(line_through({0, 0}, {1, 1}), line_through({0, 2}, {2, 0}));
  REQUIRE(std::holds_alternative<Point>(p));
  CHECK(near(std::get<Point>(p), {1, 1}));
}

TEST_CASE("line-circle intersection") {
  const Circle unit{{0, 0}, 1};
  const auto two = intersect_line_circle(line_through({0, 0}, {1, 0}), unit);
  REQUIRE(two.size() == 2);
  CHECK(near(two[0], {-1, 0}));
  CHECK(near(two[1], {1, 0}));

  const auto one = intersect_line_circle(line_through({0, 1}, {1, 1}), unit);
  REQUIRE(one.size() == 1);
  CHECK(near(one[0], {0, 1}));

  CHECK(intersect_line_circle(line_through({0, 2}, {1, 2}), unit).empty());
}

TEST_CASE("circle-circle intersection") {
  const Circle a{{0, 0}, 1};
  const auto r = intersect_circle_circle(a, Circle{{1, 0}, 1});
  CHECK(r.relation == CircleRelation::kIntersecting);
  REQUIRE(r.points.size() == 2);
  CHECK(near(r.points[0], {0.5, -std::sqrt(3.0) / 2}));
  CHECK(near(r.points[1], {0.5, std::sqrt(3.0) / 2}));

  const auto t = intersect_circle_circle(a, Circle{{2, 0}, 1});
  CHECK(t.relation == CircleRelation::kExternalTangent);
  REQUIRE(t.points.size() == 1);
  CHECK(near(t.points[0], {1, 0}));

  const auto inner = intersect_circle_circle(Circle{{0, 0}, 2}, Circle{{0.5, 0}, 1});
  CHECK(inner.relation == CircleRelation::kInternalDisjoint);
  CHECK(inner.points.empty());

  CHECK(classify_circles(a, Circle{{5, 0}, 1}) == CircleRelation::kExternalDisjoint);
  CHECK(classify_circles(Circle{{0, 0}, 2}, Circle{{1, 0}, 1}) == CircleRelation::kInternalTangent);
  CHECK(classify_circles(a, Circle{{0, 0}, 3}) == CircleRelation::kConcentric);
  CHECK_THROWS_AS(intersect_circle_circle(a, a), DegenerateInput);
}

TEST_CASE("foot, distance and reflection") {
  const Line x_axis = line_through({0, 0}, {1, 0});
  CHECK(near(foot_of_perpendicular({0, 2}, x_axis), {0, 0}));
  CHECK(distance_point_line({0, 2}, x_axis) == doctest::Approx(2.0));

  const Line y_axis = line_through({0, 0}, {0, 1});
  CHECK(near(foot_of_perpendicular({3, 4}, y_axis), {0, 4}));
  CHECK(distance_point_line({3, 4}, y_axis) == doctest::Approx(3.0));

  CHECK(near(reflect_point({0, 1}, x_axis), {0, -1}));
  CHECK(near(reflect_point({2, 3}, line_through({0, 0}, {1, 1})), {3, 2}));
}

TEST_CASE("point power") {
  const Circle unit{{0, 0}, 1};
  CHECK(point_power(unit, {0, 0}) == doctest::Approx(-1.0));
  CHECK(std::abs(point_power(unit, {1, 0})) < 1e-15);
  CHECK(point_power(unit, {2, 0}) == doctest::Approx(3.0));
  // Tangent length from (2, 0) is sqrt(3).
  CHECK(std::sqrt(point_power(unit, {2, 0})) == doctest::Approx(std::sqrt(3.0)));
}

TEST_CASE("angles") {
  CHECK(angle_at({1, 0}, {0, 0}, {0, 1}) == doctest::Approx(std::numbers::pi / 2));
  CHECK(oriented_angle({1, 0}, {0, 0}, {0, 1}) == doctest::Approx(std::numbers::pi / 2));
  CHECK(oriented_angle({0, 1}, {0, 0}, {1, 0}) == doctest::Approx(-std::numbers::pi / 2));
  CHECK_THROWS_AS(angle_at({0, 0}, {0, 0}, {1, 0}), DegenerateInput);
}

TEST_CASE("arcs") {
  const Arc a = arc_between(Circle{{0, 0}, 1}, {1, 0}, {0, 1});
  CHECK(a.sweep.radians() == doctest::Approx(std::numbers::pi / 2));
  CHECK(near(arc_point(a, 1.0), {0, 1}, 1e-12));
  CHECK(near(arc_point(a, 0.5), {std::sqrt(0.5), std::sqrt(0.5)}, 1e-12));
  CHECK_THROWS_AS(make_arc(Circle{{0, 0}, 1}, AngleMeasure(0), AngleMeasure(0)), DomainError);
  CHECK_THROWS_AS(make_circle({0, 0}, -1.0), DomainError);
}

TEST_CASE("randomized plane invariants") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-10.0, 10.0);
  std::uniform_real_distribution<double> r(0.5, 5.0);
  for (int i = 0; i < 2000; ++i) {
    const Point p{u(rng), u(rng)}, q{u(rng), u(rng)}, s{u(rng), u(rng)};
    if (distance(p, q) < 1e-3) continue;
    const Line l = line_through(p, q);
    // Reflection is an involution and the foot is the midpoint of s, s'.
    const Point s2 = reflect_point(s, l);
    CHECK(near(reflect_point(s2, l), s, 1e-11));
    CHECK(near(foot_of_perpendicular(s, l), midpoint(s, s2), 1e-11));

    const Circle c1{p, r(rng)}, c2{q, r(rng)};
    const auto x = intersect_circle_circle(c1, c2);
    if (x.points.size() == 2) {
      // Mirror images across the line of centers, up to rounding.
      const Point m = reflect_point(x.points[0], line_through(p, q));
      CHECK(distance(m, x.points[1]) < 1e-9);
    }
    for (const Point& pt : x.points) {
      CHECK(std::abs(distance(pt, c1.center) - c1.radius) < 1e-9);
      CHECK(std::abs(distance(pt, c2.center) - c2.radius) < 1e-9);
    }
    for (const Point& pt : intersect_line_circle(l, Circle{s, r(rng) * 3})) {
      CHECK(std::abs(l.residual(pt)) < 1e-9);
    }
  }
}
