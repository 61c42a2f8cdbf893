#include "euclid/plane.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "euclid/error.hpp"

namespace euclid {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
// Below this a coefficient is treated as zero for the sign convention only.
constexpr double kSignEps = 1e-12;

double wrap_2pi(double t) {
  t = std::fmod(t, kTwoPi);
  return t < 0.0 ? t + kTwoPi : t;
}

std::vector<Point> sorted(std::vector<Point> pts) {
  std::sort(pts.begin(), pts.end());
  return pts;
}

}  // namespace

Line::Line(double a, double b, double c) {
  const double n = std::hypot(a, b);
  if (!(n > 0.0) || !std::isfinite(n) || !std::isfinite(c)) {
    throw DegenerateInput("line coefficients a and b are both zero");
  }
  a /= n;
  b /= n;
  c /= n;
  const bool flip = std::abs(a) > kSignEps ? a < 0.0 : b < 0.0;
  if (flip) {
    a = -a;
    b = -b;
    c = -c;
  }
  a_ = a + 0.0;  // drop negative zeros
  b_ = b + 0.0;
  c_ = c + 0.0;
}

Circle make_circle(Point center, double radius) {
  if (!(radius > 0.0) || !std::isfinite(radius)) {
    throw DomainError("circle radius must be finite and > 0");
  }
  return Circle{center, radius};
}

Arc make_arc(Circle circle, AngleMeasure start, AngleMeasure sweep) {
  if (!(sweep.radians() > 0.0) || sweep.radians() > kTwoPi) {
    throw DomainError("arc sweep must lie in (0, 2pi]");
  }
  return Arc{circle, AngleMeasure(wrap_2pi(start.radians())), sweep};
}

Arc arc_between(Circle circle, Point from, Point to) {
  const Vec2 u = from - circle.center;
  const Vec2 v = to - circle.center;
  const double t0 = std::atan2(u.y, u.x);
  double sweep = wrap_2pi(std::atan2(v.y, v.x) - t0);
  if (sweep == 0.0) sweep = kTwoPi;
  return make_arc(circle, AngleMeasure(t0), AngleMeasure(sweep));
}

Point arc_point(const Arc& arc, double t) {
  const double theta = arc.start.radians() + t * arc.sweep.radians();
  return {arc.circle.center.x + arc.circle.radius * std::cos(theta),
          arc.circle.center.y + arc.circle.radius * std::sin(theta)};
}

bool arc_contains_angle(const Arc& arc, double theta, double tol_rad) {
  const double offset = wrap_2pi(theta - arc.start.radians());
  return offset <= arc.sweep.radians() + tol_rad || offset >= kTwoPi - tol_rad;
}

Line line_through(Point p, Point q, const Tolerance& tol) {
  const Vec2 d = q - p;
  if (norm(d) <= tol.abs_eps()) {
    throw DegenerateInput("line through coincident points");
  }
  // Normal (dy, -dx); c chosen so p lies on the line.
  return Line(d.y, -d.x, d.x * p.y - d.y * p.x);
}

LineIntersection intersect_line_line(const Line& l1, const Line& l2,
                                     const Tolerance& tol) {
  const double det = l1.a() * l2.b() - l2.a() * l1.b();
  if (std::abs(det) <= tol.abs_eps()) {
    // Normals are (anti)parallel; compare offsets along the shared normal.
    const double s = dot(l1.normal(), l2.normal()) >= 0.0 ? 1.0 : -1.0;
    if (std::abs(l1.c() - s * l2.c()) <= tol.band(std::max(std::abs(l1.c()), std::abs(l2.c())))) {
      return Coincident{};
    }
    return Parallel{};
  }
  const double x = (l1.b() * l2.c() - l2.b() * l1.c()) / det;
  const double y = (l2.a() * l1.c() - l1.a() * l2.c()) / det;
  return Point{x, y};
}

std::vector<Point> intersect_line_circle(const Line& l, const Circle& c,
                                         const Tolerance& tol) {
  const double d = l.residual(c.center);
  const Point foot = c.center - d * l.normal();
  const double gap = std::abs(d) - c.radius;
  if (std::abs(gap) <= tol.band(c.radius)) return {foot};
  if (gap > 0.0) return {};
  const double half = std::sqrt(c.radius * c.radius - d * d);
  const Vec2 dir = l.direction();
  return sorted({foot + half * dir, foot - half * dir});
}

std::string_view to_string(CircleRelation r) {
  switch (r) {
    case CircleRelation::kExternalDisjoint: return "external-disjoint";
    case CircleRelation::kExternalTangent: return "external-tangent";
    case CircleRelation::kIntersecting: return "intersecting";
    case CircleRelation::kInternalTangent: return "internal-tangent";
    case CircleRelation::kInternalDisjoint: return "internal-disjoint";
    case CircleRelation::kConcentric: return "concentric";
  }
  return "unknown";
}

CircleRelation classify_circles(const Circle& c1, const Circle& c2,
                                const Tolerance& tol) {
  const double d = distance(c1.center, c2.center);
  const double scale = std::max(c1.radius, c2.radius);
  const double band = tol.band(scale);
  const double diff = std::abs(c1.radius - c2.radius);
  if (d <= band) {
    if (diff <= band) throw DegenerateInput("coincident circles");
    return CircleRelation::kConcentric;
  }
  const double sum = c1.radius + c2.radius;
  if (std::abs(d - sum) <= band) return CircleRelation::kExternalTangent;
  if (d > sum) return CircleRelation::kExternalDisjoint;
  if (std::abs(d - diff) <= band) return CircleRelation::kInternalTangent;
  if (d < diff) return CircleRelation::kInternalDisjoint;
  return CircleRelation::kIntersecting;
}

CircleIntersection intersect_circle_circle(const Circle& c1, const Circle& c2,
                                           const Tolerance& tol) {
  const CircleRelation rel = classify_circles(c1, c2, tol);
  const Vec2 between = c2.center - c1.center;
  const double d = norm(between);
  switch (rel) {
    case CircleRelation::kExternalDisjoint:
    case CircleRelation::kInternalDisjoint:
    case CircleRelation::kConcentric:
      return {rel, {}};
    case CircleRelation::kExternalTangent:
      return {rel, {c1.center + (c1.radius / d) * between}};
    case CircleRelation::kInternalTangent: {
      // Contact lies on the ray from the larger center through the smaller.
      const double s = c1.radius >= c2.radius ? c1.radius : -c1.radius;
      return {rel, {c1.center + (s / d) * between}};
    }
    case CircleRelation::kIntersecting:
      break;
  }
  const double along = (d * d + c1.radius * c1.radius - c2.radius * c2.radius) / (2.0 * d);
  const double h = std::sqrt(std::max(0.0, c1.radius * c1.radius - along * along));
  const Vec2 u = (1.0 / d) * between;
  const Point base = c1.center + along * u;
  return {rel, sorted({base + h * perp(u), base - h * perp(u)})};
}

Point foot_of_perpendicular(Point p, const Line& l) {
  return p - l.residual(p) * l.normal();
}

double distance_point_line(Point p, const Line& l) {
  return std::abs(l.residual(p));
}

Point reflect_point(Point p, const Line& l) {
  return p - (2.0 * l.residual(p)) * l.normal();
}

double point_power(const Circle& c, Point p) {
  const Vec2 v = p - c.center;
  return dot(v, v) - c.radius * c.radius;
}

double angle_at(Point a, Point o, Point b) {
  const Vec2 u = a - o;
  const Vec2 v = b - o;
  if (norm(u) == 0.0 || norm(v) == 0.0) {
    throw DegenerateInput("angle with a side of zero length");
  }
  return std::atan2(std::abs(cross(u, v)), dot(u, v));
}

double oriented_angle(Point a, Point o, Point b) {
  const Vec2 u = a - o;
  const Vec2 v = b - o;
  if (norm(u) == 0.0 || norm(v) == 0.0) {
    throw DegenerateInput("angle with a side of zero length");
  }
  return std::atan2(cross(u, v), dot(u, v));
}

bool is_parallel(const Line& l1, const Line& l2, double eps) {
  return std::abs(cross(l1.direction(), l2.direction())) <= eps;
}

bool is_perpendicular(const Line& l1, const Line& l2, double eps) {
  return std::abs(dot(l1.direction(), l2.direction())) <= eps;
}

}  // namespace euclid
