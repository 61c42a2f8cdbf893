#include "euclid/mensura.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace euclid {

namespace {

using std::numbers::pi;

double positive(double v, const char* what) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw DomainError(std::string(what) + " must be finite and > 0");
  }
  return v;
}

double check_angle(AngleMeasure angle) {
  const double a = angle.radians();
  if (!(a > 0.0) || a > 2.0 * pi * (1.0 + 1e-15)) {
    throw DomainError("angle must lie in (0, 2 pi]");
  }
  return std::min(a, 2.0 * pi);
}

AngleClass classify(double opposite, double s1, double s2) {
  const double lhs = opposite * opposite;
  const double rhs = s1 * s1 + s2 * s2;
  if (std::abs(lhs - rhs) <= 1e-9 * rhs) return AngleClass::kRight;
  return lhs < rhs ? AngleClass::kAcute : AngleClass::kObtuse;
}

// Angle opposite side `a` by the law of cosines, in a cancellation-free form.
double opposite_angle(double a, double b, double c, double area) {
  return std::atan2(4.0 * area, b * b + c * c - a * a);
}

}  // namespace

TriangleSides make_triangle_sides(double a, double b, double c) {
  positive(a, "side a");
  positive(b, "side b");
  positive(c, "side c");
  const double longest = std::max({a, b, c});
  if (!(longest < (a + b + c) - longest)) {
    throw DomainError("sides violate the triangle inequality");
  }
  return {a, b, c};
}

double triangle_area(const TriangleSides& t) { return heron_area(t.a, t.b, t.c); }

std::string_view to_string(AngleClass c) {
  switch (c) {
    case AngleClass::kAcute: return "acute";
    case AngleClass::kRight: return "right";
    case AngleClass::kObtuse: return "obtuse";
  }
  return "?";
}

TriangleMetrics triangle_metrics(const TriangleSides& in) {
  const TriangleSides t = make_triangle_sides(in.a, in.b, in.c);
  const double a = t.a, b = t.b, c = t.c;
  TriangleMetrics m;
  m.sides = t;
  m.perimeter = a + b + c;
  m.area = heron_area(a, b, c);
  m.proj_c_on_a = (a * a + c * c - b * b) / (2.0 * a);
  m.proj_b_on_a = a - m.proj_c_on_a;
  m.h_a = 2.0 * m.area / a;
  m.h_b = 2.0 * m.area / b;
  m.h_c = 2.0 * m.area / c;
  m.m_a = 0.5 * std::sqrt(std::max(0.0, 2.0 * b * b + 2.0 * c * c - a * a));
  m.m_b = 0.5 * std::sqrt(std::max(0.0, 2.0 * a * a + 2.0 * c * c - b * b));
  m.m_c = 0.5 * std::sqrt(std::max(0.0, 2.0 * a * a + 2.0 * b * b - c * c));
  m.angle_a = AngleMeasure(opposite_angle(a, b, c, m.area));
  m.angle_b = AngleMeasure(opposite_angle(b, a, c, m.area));
  m.angle_c = AngleMeasure(opposite_angle(c, a, b, m.area));
  m.class_a = classify(a, b, c);
  m.class_b = classify(b, a, c);
  m.class_c = classify(c, a, b);
  m.circumradius = b * c / (2.0 * m.h_a);
  m.inradius = m.area / (0.5 * m.perimeter);
  m.bisector_a = {a * c / (b + c), a * b / (b + c)};
  m.bisector_b = {b * c / (a + c), b * a / (a + c)};
  m.bisector_c = {c * b / (a + b), c * a / (a + b)};
  return m;
}

RightTriangle right_triangle_from_projections(double b_proj, double c_proj) {
  positive(b_proj, "projection b'");
  positive(c_proj, "projection c'");
  const double a = b_proj + c_proj;
  return {a, std::sqrt(a * b_proj), std::sqrt(a * c_proj), std::sqrt(b_proj * c_proj)};
}

bool parallelogram_diagonals_check(double a, double b, double d1, double d2, double rel_eps) {
  positive(a, "side a");
  positive(b, "side b");
  positive(d1, "diagonal d1");
  positive(d2, "diagonal d2");
  const double rhs = 2.0 * (a * a + b * b);
  return std::abs(d1 * d1 + d2 * d2 - rhs) <= rel_eps * rhs;
}

double rectangle_area(double a, double b) { return positive(a, "a") * positive(b, "b"); }
double parallelogram_area(double base, double height) {
  return positive(base, "base") * positive(height, "height");
}
double triangle_area_base_height(double base, double height) {
  return 0.5 * parallelogram_area(base, height);
}
double rhombus_area(double d1, double d2) { return 0.5 * positive(d1, "d1") * positive(d2, "d2"); }
double trapezoid_area(double base1, double base2, double height) {
  return 0.5 * (positive(base1, "base a") + positive(base2, "base b")) * positive(height, "height");
}
double regular_polygon_area(long long n, double circumradius) {
  if (n < 3) throw DomainError("regular polygon needs n >= 3");
  positive(circumradius, "R");
  const double nn = static_cast<double>(n);
  return 0.5 * nn * circumradius * circumradius * std::sin(2.0 * pi / nn);
}
double circumscribed_polygon_area(double perimeter, double inradius) {
  return 0.5 * positive(perimeter, "perimeter") * positive(inradius, "r");
}

namespace {

struct AreaKind {
  std::string_view name;
  std::vector<std::string_view> keys;
  double (*eval)(const std::vector<double>&);
};

const std::vector<AreaKind>& area_kinds() {
  static const std::vector<AreaKind> kinds = {
      {"rectangle", {"a", "b"}, [](const std::vector<double>& v) { return rectangle_area(v[0], v[1]); }},
      {"parallelogram", {"base", "height"},
       [](const std::vector<double>& v) { return parallelogram_area(v[0], v[1]); }},
      {"triangle", {"base", "height"},
       [](const std::vector<double>& v) { return triangle_area_base_height(v[0], v[1]); }},
      {"rhombus", {"d1", "d2"}, [](const std::vector<double>& v) { return rhombus_area(v[0], v[1]); }},
      {"trapezoid", {"a", "b", "height"},
       [](const std::vector<double>& v) { return trapezoid_area(v[0], v[1], v[2]); }},
      {"regular", {"n", "R"},
       [](const std::vector<double>& v) {
         if (v[0] != std::floor(v[0]) || v[0] > 1e9) throw DomainError("n must be an integer");
         return regular_polygon_area(static_cast<long long>(v[0]), v[1]);
       }},
      {"circumscribed", {"perimeter", "r"},
       [](const std::vector<double>& v) { return circumscribed_polygon_area(v[0], v[1]); }},
      {"circle", {"R"}, [](const std::vector<double>& v) { return pi * v[0] * v[0]; }},
      {"sector", {"R", "deg"}, [](const std::vector<double>& v) { return sector_area_deg(v[0], v[1]); }},
      {"arc", {"R", "deg"}, [](const std::vector<double>& v) { return arc_length_deg(v[0], v[1]); }},
      {"segment", {"R", "deg"},
       [](const std::vector<double>& v) {
         return segment_area(v[0], AngleMeasure::from_degrees(v[1]), SegmentMethod::kExact);
       }},
  };
  return kinds;
}

}  // namespace

double polygon_area(std::string_view kind, const Params& params) {
  for (const AreaKind& k : area_kinds()) {
    if (k.name != kind) continue;
    for (const auto& [key, value] : params) {
      if (std::find(k.keys.begin(), k.keys.end(), key) == k.keys.end()) {
        throw DomainError("unknown parameter '" + key + "' for " + std::string(kind));
      }
    }
    std::vector<double> values;
    for (std::string_view key : k.keys) {
      const auto it = params.find(key);
      if (it == params.end()) {
        throw DomainError("missing parameter '" + std::string(key) + "' for " + std::string(kind));
      }
      values.push_back(positive(it->second, std::string(key).c_str()));
    }
    return k.eval(values);
  }
  throw DomainError("unknown shape '" + std::string(kind) + "'");
}

std::vector<std::string_view> polygon_kinds() {
  std::vector<std::string_view> names;
  for (const AreaKind& k : area_kinds()) names.push_back(k.name);
  return names;
}

double circumscribed_perimeter(std::int64_t n, double inscribed_side) {
  const double s = inscribed_side;
  return static_cast<double>(n) * s / std::sqrt(1.0 - 0.25 * s * s);
}

double arc_length(double radius, AngleMeasure angle) {
  return check_angle(angle) * positive(radius, "radius");
}
double sector_area(double radius, AngleMeasure angle) {
  positive(radius, "radius");
  return 0.5 * check_angle(angle) * radius * radius;
}
double arc_length_deg(double radius, double degrees) {
  return arc_length(radius, AngleMeasure::from_degrees(degrees));
}
double sector_area_deg(double radius, double degrees) {
  return sector_area(radius, AngleMeasure::from_degrees(degrees));
}
double radius_from_arc(double length, AngleMeasure angle) {
  return positive(length, "arc length") / check_angle(angle);
}
AngleMeasure angle_from_arc(double length, double radius) {
  const double a = positive(length, "arc length") / positive(radius, "radius");
  return AngleMeasure(check_angle(AngleMeasure(a)));
}

std::string_view to_string(SegmentMethod m) {
  switch (m) {
    case SegmentMethod::kExact: return "exact";
    case SegmentMethod::kApprox1: return "approx1";
    case SegmentMethod::kApprox2: return "approx2";
  }
  return "?";
}

double segment_area(double radius, AngleMeasure angle, SegmentMethod method) {
  positive(radius, "radius");
  const double alpha = angle.radians();
  if (!(alpha > 0.0) || !(alpha < 2.0 * pi)) throw DomainError("segment angle must lie in (0, 2 pi)");
  if (alpha > pi) {
    return pi * radius * radius - segment_area(radius, AngleMeasure(2.0 * pi - alpha), method);
  }
  const double r2 = radius * radius;
  if (method == SegmentMethod::kExact) return 0.5 * r2 * (alpha - std::sin(alpha));
  const double half = 0.5 * alpha;
  const double b = 2.0 * radius * std::sin(half);
  const double s = std::sin(0.5 * half);
  const double h = 2.0 * radius * s * s;  // R (1 - cos(alpha / 2))
  const double base = 2.0 / 3.0 * b * h;
  return method == SegmentMethod::kApprox1 ? base : base + h * h * h / (2.0 * b);
}

std::variant<Circle, Line> apollonius_circle(Point a, Point b, double m, double n) {
  positive(m, "m");
  positive(n, "n");
  if (distance(a, b) == 0.0) throw DomainError("apollonius_circle: A and B coincide");
  if (m == n) {
    const Vec2 d = b - a;
    const Point mid = midpoint(a, b);
    return Line(d.x, d.y, -(d.x * mid.x + d.y * mid.y));
  }
  const Vec2 ab = b - a;
  const Point inner = a + (m / (m + n)) * ab;
  const Point outer = a + (m / (m - n)) * ab;
  return make_circle(midpoint(inner, outer), 0.5 * distance(inner, outer));
}

std::array<std::int64_t, 3> pythagorean_triple(std::int64_t a, std::int64_t b) {
  if (!(b >= 1 && a > b)) throw DomainError("pythagorean_triple: need a > b >= 1");
  if (a > 2'000'000'000) throw DomainError("pythagorean_triple: a too large for 64-bit result");
  return {2 * a * b, a * a - b * b, a * a + b * b};
}

}  // namespace euclid
