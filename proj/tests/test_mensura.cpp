#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "euclid/error.hpp"
#include "euclid/machine.hpp"
#include "euclid/mensura.hpp"

using namespace euclid;

namespace {

constexpr double kPi = std::numbers::pi;

// Coordinates for sides (a, b, c): A at the origin, B on the x axis.
struct Placed {
  Point A, B, C;
};

Placed place(double a, double b, double c) {
  const double x = (b * b + c * c - a * a) / (2 * c);
  return {{0, 0}, {c, 0}, {x, std::sqrt(b * b - x * x)}};
}

double shoelace(Point p, Point q, Point r) {
  return 0.5 * std::abs((q.x - p.x) * (r.y - p.y) - (r.x - p.x) * (q.y - p.y));
}

// Simpson's rule over the part of the disk beyond the chord at distance d.
double segment_by_quadrature(double R, double alpha) {
  const double d = R * std::cos(alpha / 2);
  const int n = 20000;
  const double h = (R - d) / n;
  double s = 0;
  for (int i = 0; i <= n; ++i) {
    const double y = d + i * h;
    const double f = 2 * std::sqrt(std::max(0.0, R * R - y * y));
    s += f * (i == 0 || i == n ? 1 : (i % 2 ? 4 : 2));
  }
  return s * h / 3;
}

}  // namespace

TEST_CASE("heron") {
  CHECK(heron_area(1.0, 1.0, 1.0) == doctest::Approx(std::sqrt(3.0) / 4).epsilon(1e-15));
  CHECK(heron_area(3.0, 4.0, 5.0) == doctest::Approx(6.0).epsilon(1e-15));
  CHECK(heron_area(2.0, 2.0, 2.0) == doctest::Approx(std::sqrt(3.0)).epsilon(1e-15));
  CHECK_THROWS_AS(make_triangle_sides(1, 1, 3), DomainError);
  CHECK_THROWS_AS(make_triangle_sides(1, 1, 2), DomainError);
  CHECK_THROWS_AS(make_triangle_sides(-1, 1, 1), DomainError);

  const Interval enc = heron_area(Interval(3.0), Interval(4.0), Interval(5.0));
  CHECK(enc.contains(6.0));
}

TEST_CASE("heron agrees with coordinates") {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> u(0.5, 10.0);
  for (int i = 0; i < 2000; ++i) {
    const double b = u(rng), c = u(rng);
    const double a = std::abs(b - c) + (b + c - std::abs(b - c)) * (0.05 + 0.9 * u(rng) / 10.0);
    const Placed t = place(a, b, c);
    CHECK(heron_area(a, b, c) == doctest::Approx(shoelace(t.A, t.B, t.C)).epsilon(1e-9));
  }
}

TEST_CASE("triangle metrics against coordinates") {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(1.0, 10.0);
  for (int i = 0; i < 500; ++i) {
    const Point A{u(rng), u(rng)}, B{u(rng), u(rng)}, C{u(rng), u(rng)};
    if (shoelace(A, B, C) < 1.0) continue;
    const double a = distance(B, C), b = distance(C, A), c = distance(A, B);
    const TriangleMetrics m = triangle_metrics(make_triangle_sides(a, b, c));
    const double area = shoelace(A, B, C);
    CHECK(m.area == doctest::Approx(area).epsilon(1e-9));
    CHECK(m.h_a == doctest::Approx(distance_point_line(A, line_through(B, C))).epsilon(1e-9));
    CHECK(m.m_a == doctest::Approx(distance(A, midpoint(B, C))).epsilon(1e-9));
    CHECK(m.m_b == doctest::Approx(distance(B, midpoint(C, A))).epsilon(1e-9));
    CHECK(m.angle_a.radians() == doctest::Approx(angle_at(B, A, C)).epsilon(1e-9));
    CHECK(m.angle_c.radians() == doctest::Approx(angle_at(A, C, B)).epsilon(1e-9));
    // Circumcenter from two perpendicular bisectors.
    const Line pb1 = line_through(midpoint(A, B), midpoint(A, B) + perp(B - A));
    const Line pb2 = line_through(midpoint(A, C), midpoint(A, C) + perp(C - A));
    const Point O = std::get<Point>(intersect_line_line(pb1, pb2));
    CHECK(m.circumradius == doctest::Approx(distance(O, A)).epsilon(1e-8));
    // Incenter as the side-weighted mean of the vertices.
    const double p = a + b + c;
    const Point I{(a * A.x + b * B.x + c * C.x) / p, (a * A.y + b * B.y + c * C.y) / p};
    CHECK(m.inradius == doctest::Approx(distance_point_line(I, line_through(A, B))).epsilon(1e-8));
    CHECK(m.proj_c_on_a + m.proj_b_on_a == doctest::Approx(a).epsilon(1e-12));
  }
}

TEST_CASE("angle classes") {
  const TriangleMetrics right = triangle_metrics(make_triangle_sides(5, 4, 3));
  CHECK(right.class_a == AngleClass::kRight);
  CHECK(right.class_b == AngleClass::kAcute);
  const TriangleMetrics obtuse = triangle_metrics(make_triangle_sides(7, 3, 5));
  CHECK(obtuse.class_a == AngleClass::kObtuse);
  CHECK(to_string(AngleClass::kObtuse) == "obtuse");
}

TEST_CASE("right triangle from projections") {
  const RightTriangle r = right_triangle_from_projections(9, 16);
  CHECK(r.hypotenuse == 25);
  CHECK(r.leg_b == doctest::Approx(15));
  CHECK(r.leg_c == doctest::Approx(20));
  CHECK(r.height == doctest::Approx(12));
  CHECK_THROWS_AS(right_triangle_from_projections(0, 1), DomainError);
}

TEST_CASE("parallelogram diagonals") {
  CHECK(parallelogram_diagonals_check(3, 4, 5, 5));
  CHECK_FALSE(parallelogram_diagonals_check(3, 4, 5, 6));
  std::mt19937_64 rng(10);
  std::uniform_real_distribution<double> u(-5.0, 5.0);
  for (int i = 0; i < 200; ++i) {
    const Vec2 p{u(rng), u(rng)}, q{u(rng), u(rng)};
    CHECK(parallelogram_diagonals_check(norm(p), norm(q), norm(p + q), norm(p + (-1.0) * q)));
  }
}

TEST_CASE("polygon areas") {
  CHECK(rectangle_area(3.5, 4.6) == doctest::Approx(16.1).epsilon(1e-15));
  CHECK(trapezoid_area(2, 4, 3) == 9);
  CHECK(rhombus_area(6, 8) == 24);
  CHECK(regular_polygon_area(6, 1) == doctest::Approx(3 * std::sqrt(3.0) / 2));
  CHECK(regular_polygon_area(4, 1) == doctest::Approx(2.0));
  // Circumscribed square about the unit circle: perimeter 8.
  CHECK(circumscribed_polygon_area(8, 1) == 4);
  CHECK(polygon_area("trapezoid", {{"a", 2}, {"b", 4}, {"height", 3}}) == 9);
  CHECK(polygon_area("circle", {{"R", 2}}) == doctest::Approx(4 * kPi));
  CHECK_THROWS_AS(polygon_area("rectangle", {{"a", 2}}), DomainError);
  CHECK_THROWS_AS(polygon_area("rectangle", {{"a", 2}, {"b", -1}}), DomainError);
  CHECK_THROWS_AS(polygon_area("rectangle", {{"a", 2}, {"b", 1}, {"c", 1}}), DomainError);
  CHECK_THROWS_AS(polygon_area("hexagram", {}), DomainError);
}

TEST_CASE("interior angle of the octagon") {
  Machine m;
  m.free_point("O", {0, 0});
  m.free_point("U", {1, 0});
  m.circle("c", "O", "U");
  m.call("inscribe_regular", {"P"}, {8.0, "c"});
  const Workspace& ws = m.workspace();
  CHECK(angle_at(ws.point("P8"), ws.point("P1"), ws.point("P2")) * 180 / kPi ==
        doctest::Approx(135.0).epsilon(1e-12));
}

TEST_CASE("pi by doubling") {
  const auto zero = pi_doubling_table<double>(0, false);
  REQUIRE(zero.size() == 1);
  CHECK(zero[0].n == 6);
  CHECK(zero[0].side == 1.0);
  CHECK(zero[0].perimeter == 6.0);

  const auto naive = pi_doubling_table<double>(10, false);
  const auto stable = pi_doubling_table<double>(10, true);
  REQUIRE(naive.size() == 11);
  CHECK(naive.back().n == 6 * 1024);
  for (std::size_t i = 0; i < naive.size(); ++i) {
    CHECK(std::abs(naive[i].side - stable[i].side) <= 1e-12);
    // Closed-form oracle: a_n = 2 sin(pi / n).
    const double n = static_cast<double>(stable[i].n);
    CHECK(stable[i].side == doctest::Approx(2 * std::sin(kPi / n)).epsilon(1e-14));
  }

  // Increasing, and below every circumscribed perimeter.
  for (std::size_t i = 1; i < stable.size(); ++i) {
    CHECK(stable[i].perimeter > stable[i - 1].perimeter);
  }
  for (const auto& row : stable) {
    for (const auto& other : stable) {
      CHECK(row.perimeter < circumscribed_perimeter(other.n, other.side));
    }
  }

  const auto enc = pi_doubling_table<Interval>(24, true);
  const auto pt = pi_doubling_table<double>(24, true);
  for (std::size_t i = 0; i < enc.size(); ++i) {
    CHECK(enc[i].perimeter.contains(pt[i].perimeter));
    CHECK(enc[i].perimeter.upper() < 2 * kPi + 1e-9);
  }
  CHECK(enc.back().perimeter.upper() > 2 * kPi - 1e-12);

  CHECK(circumscribed_perimeter(6, 1.0) == doctest::Approx(4 * std::sqrt(3.0)));
  CHECK_THROWS_AS(pi_doubling_table<double>(25, true), DomainError);
  CHECK_THROWS_AS(pi_doubling_table<double>(-1, true), DomainError);
}

TEST_CASE("arcs and sectors") {
  CHECK(arc_length_deg(2, 90) == doctest::Approx(kPi));
  CHECK(sector_area_deg(2, 90) == doctest::Approx(kPi));
  const AngleMeasure a = dms_to_radians(81, 21, 36);
  CHECK(radius_from_arc(0.452, a) == doctest::Approx(0.318).epsilon(1e-3));
  CHECK(angle_from_arc(kPi, 2).degrees() == doctest::Approx(90));
  CHECK_THROWS_AS(arc_length(1, AngleMeasure(0)), DomainError);
  CHECK_THROWS_AS(arc_length(-1, AngleMeasure(1)), DomainError);
}

TEST_CASE("segment areas against quadrature") {
  for (double deg : {10.0, 45.0, 60.0, 120.0, 179.0}) {
    const double alpha = deg * kPi / 180;
    const double exact = segment_area(1.0, AngleMeasure(alpha), SegmentMethod::kExact);
    CHECK(exact == doctest::Approx(segment_by_quadrature(1.0, alpha)).epsilon(1e-6));
  }
  // Beyond half a turn the segment is the disk minus the complementary one.
  const double big = segment_area(1.0, AngleMeasure::from_degrees(300), SegmentMethod::kExact);
  CHECK(big == doctest::Approx(kPi - segment_by_quadrature(1.0, kPi / 3)).epsilon(1e-6));
  // Both approximations improve as the segment flattens.
  const double e1 = segment_area(1, AngleMeasure::from_degrees(10), SegmentMethod::kExact);
  CHECK(segment_area(1, AngleMeasure::from_degrees(10), SegmentMethod::kApprox2) ==
        doctest::Approx(e1).epsilon(1e-4));
}

TEST_CASE("apollonius circle") {
  const auto c = apollonius_circle({0, 0}, {3, 0}, 2, 1);
  REQUIRE(std::holds_alternative<Circle>(c));
  const Circle& k = std::get<Circle>(c);
  CHECK(distance(k.center, {4, 0}) < 1e-12);
  CHECK(k.radius == doctest::Approx(2));
  // Every point keeps the ratio.
  for (int i = 0; i < 12; ++i) {
    const double t = i * kPi / 6;
    const Point m{k.center.x + k.radius * std::cos(t), k.center.y + k.radius * std::sin(t)};
    CHECK(distance(m, {0, 0}) / distance(m, {3, 0}) == doctest::Approx(2.0).epsilon(1e-12));
  }
  const auto l = apollonius_circle({0, 0}, {3, 0}, 1, 1);
  REQUIRE(std::holds_alternative<Line>(l));
  CHECK(std::abs(std::get<Line>(l).residual({1.5, 7})) < 1e-12);
}

TEST_CASE("pythagorean triples") {
  CHECK(pythagorean_triple(2, 1) == std::array<std::int64_t, 3>{4, 3, 5});
  CHECK(pythagorean_triple(3, 2) == std::array<std::int64_t, 3>{12, 5, 13});
  CHECK_THROWS_AS(pythagorean_triple(2, 2), DomainError);
  for (std::int64_t a = 2; a < 40; ++a) {
    for (std::int64_t b = 1; b < a; ++b) {
      const auto [x, y, z] = pythagorean_triple(a, b);
      CHECK(x * x + y * y == z * z);
    }
  }
}
