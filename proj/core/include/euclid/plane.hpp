#pragma once

#include <cmath>
#include <compare>
#include <string_view>
#include <variant>
#include <vector>

#include "euclid/angle.hpp"
#include "euclid/tolerance.hpp"

namespace euclid {

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend constexpr bool operator==(const Point&, const Point&) = default;
  // Lexicographic (x, then y); used to order multi-point results.
  friend constexpr auto operator<=>(const Point&, const Point&) = default;
};

struct Vec2 {
  double x = 0.0;
  double y = 0.0;
};

constexpr Vec2 operator-(Point p, Point q) { return {p.x - q.x, p.y - q.y}; }
constexpr Point operator+(Point p, Vec2 v) { return {p.x + v.x, p.y + v.y}; }
constexpr Point operator-(Point p, Vec2 v) { return {p.x - v.x, p.y - v.y}; }
constexpr Vec2 operator*(double k, Vec2 v) { return {k * v.x, k * v.y}; }
constexpr Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
constexpr double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
constexpr double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Vec2 v) { return std::hypot(v.x, v.y); }
constexpr Vec2 perp(Vec2 v) { return {-v.y, v.x}; }

inline double distance(Point p, Point q) { return norm(p - q); }
constexpr Point midpoint(Point p, Point q) { return {0.5 * (p.x + q.x), 0.5 * (p.y + q.y)}; }

// Locus a*x + b*y + c = 0 with a^2 + b^2 = 1. The first of (a, b) that is not
// negligible is positive.
class Line {
 public:
  // Normalizes the coefficients. Throws DegenerateInput when a = b = 0.
  Line(double a, double b, double c);

  double a() const { return a_; }
  double b() const { return b_; }
  double c() const { return c_; }

  // Signed residual a*x + b*y + c (the signed distance for a normalized line).
  double residual(Point p) const { return a_ * p.x + b_ * p.y + c_; }
  Vec2 normal() const { return {a_, b_}; }
  Vec2 direction() const { return {-b_, a_}; }
  // Foot of the perpendicular from the origin.
  Point anchor() const { return {-c_ * a_, -c_ * b_}; }

  friend bool operator==(const Line&, const Line&) = default;

 private:
  double a_;
  double b_;
  double c_;
};

struct Circle {
  Point center;
  double radius = 1.0;

  friend bool operator==(const Circle&, const Circle&) = default;
};

// Throws DomainError unless radius is finite and > 0.
Circle make_circle(Point center, double radius);

// Counter-clockwise arc of `circle` starting at `start` and spanning `sweep`,
// 0 < sweep <= 2*pi.
struct Arc {
  Circle circle;
  AngleMeasure start;
  AngleMeasure sweep;
};

// Throws DomainError unless 0 < sweep <= 2*pi.
Arc make_arc(Circle circle, AngleMeasure start, AngleMeasure sweep);
// Arc from `from` to `to` counter-clockwise around `circle`.
Arc arc_between(Circle circle, Point from, Point to);
Point arc_point(const Arc& arc, double t);  // t in [0, 1]
bool arc_contains_angle(const Arc& arc, double theta, double tol_rad);

Line line_through(Point p, Point q, const Tolerance& tol = {});

struct Parallel {};
struct Coincident {};
using LineIntersection = std::variant<Point, Parallel, Coincident>;

LineIntersection intersect_line_line(const Line& l1, const Line& l2,
                                     const Tolerance& tol = {});

// 0, 1 (tangency foot) or 2 points in (x, y) ascending order.
std::vector<Point> intersect_line_circle(const Line& l, const Circle& c,
                                         const Tolerance& tol = {});

enum class CircleRelation {
  kExternalDisjoint,
  kExternalTangent,
  kIntersecting,
  kInternalTangent,
  kInternalDisjoint,
  kConcentric,
};

std::string_view to_string(CircleRelation r);

struct CircleIntersection {
  CircleRelation relation;
  std::vector<Point> points;
};

// Classifies the pair by comparing the center distance with R + R1 and
// |R - R1|. Throws DegenerateInput for coincident circles.
CircleRelation classify_circles(const Circle& c1, const Circle& c2,
                                const Tolerance& tol = {});
CircleIntersection intersect_circle_circle(const Circle& c1, const Circle& c2,
                                           const Tolerance& tol = {});

Point foot_of_perpendicular(Point p, const Line& l);
double distance_point_line(Point p, const Line& l);
Point reflect_point(Point p, const Line& l);

// d^2 - R^2: negative inside, zero on, positive outside.
double point_power(const Circle& c, Point p);

// Unsigned angle AOB in [0, pi]. Throws DegenerateInput if A or B equals O.
double angle_at(Point a, Point o, Point b);
// Signed counter-clockwise rotation taking ray OA onto ray OB, in (-pi, pi].
double oriented_angle(Point a, Point o, Point b);

bool is_parallel(const Line& l1, const Line& l2, double eps);
bool is_perpendicular(const Line& l1, const Line& l2, double eps);

}  // namespace euclid
