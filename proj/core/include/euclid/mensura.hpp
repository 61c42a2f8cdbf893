#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "euclid/angle.hpp"
#include "euclid/error.hpp"
#include "euclid/plane.hpp"
#include "euclid/scalar.hpp"

namespace euclid {

// ---- triangles --------------------------------------------------------------

// Side lengths; a is opposite vertex A, and so on.
struct TriangleSides {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
};

// Throws DomainError unless each side is positive and shorter than the sum of
// the other two (a flat triangle is rejected).
TriangleSides make_triangle_sides(double a, double b, double c);

// Heron's area. Evaluated in Kahan's arrangement (sides sorted a >= b >= c),
// which is algebraically the same product and keeps needle triangles accurate.
template <Scalar T>
T heron_area(T a, T b, T c) {
  if (midpoint(a) < midpoint(b)) std::swap(a, b);
  if (midpoint(b) < midpoint(c)) std::swap(b, c);
  if (midpoint(a) < midpoint(b)) std::swap(a, b);
  const T prod = (a + (b + c)) * (c - (a - b)) * (c + (a - b)) * (a + (b - c));
  if (!(upper_bound(prod) > 0.0) || !(lower_bound(c) > 0.0)) {
    throw DomainError("heron_area: sides violate the triangle inequality");
  }
  return T(0.25) * scalar_sqrt(prod, Tolerance(1e-300, 1e-9));
}

double triangle_area(const TriangleSides& t);

enum class AngleClass { kAcute, kRight, kObtuse };
std::string_view to_string(AngleClass c);

struct TriangleMetrics {
  TriangleSides sides;
  double perimeter = 0.0;
  double area = 0.0;
  // Signed projections onto side a of the sides c and b (c' + b' = a).
  double proj_c_on_a = 0.0;
  double proj_b_on_a = 0.0;
  double h_a = 0.0, h_b = 0.0, h_c = 0.0;
  double m_a = 0.0, m_b = 0.0, m_c = 0.0;
  AngleMeasure angle_a, angle_b, angle_c;
  AngleClass class_a = AngleClass::kAcute;
  AngleClass class_b = AngleClass::kAcute;
  AngleClass class_c = AngleClass::kAcute;
  double circumradius = 0.0;
  double inradius = 0.0;
  // The bisector from each vertex splits the opposite side into two parts,
  // listed in vertex order: from A, (BD, DC); from B, (AE, EC); from C, (AF, FB).
  std::pair<double, double> bisector_a, bisector_b, bisector_c;
};

TriangleMetrics triangle_metrics(const TriangleSides& t);

// Right triangle from the projections of its legs on the hypotenuse.
struct RightTriangle {
  double hypotenuse = 0.0;  // a = b' + c'
  double leg_b = 0.0;       // sqrt(a b')
  double leg_c = 0.0;       // sqrt(a c')
  double height = 0.0;      // sqrt(b' c')
};
RightTriangle right_triangle_from_projections(double b_proj, double c_proj);

// d1^2 + d2^2 == 2 (a^2 + b^2) within rel_eps of the right-hand side.
bool parallelogram_diagonals_check(double a, double b, double d1, double d2,
                                   double rel_eps = 1e-9);

// ---- polygons ---------------------------------------------------------------

double rectangle_area(double a, double b);
double parallelogram_area(double base, double height);
double triangle_area_base_height(double base, double height);
double rhombus_area(double d1, double d2);
double trapezoid_area(double base1, double base2, double height);
// Regular n-gon with circumradius R.
double regular_polygon_area(long long n, double circumradius);
// Any polygon circumscribed about a circle: perimeter times half the inradius.
double circumscribed_polygon_area(double perimeter, double inradius);

using Params = std::map<std::string, double, std::less<>>;

// Keyword dispatcher over the closed forms above. Kinds and keys:
//   rectangle a b | parallelogram base height | triangle base height |
//   rhombus d1 d2 | trapezoid a b height | regular n R | circumscribed perimeter r
//   circle R | sector R deg | arc R deg | segment R deg
// Unknown kinds or keys, missing keys and non-positive values raise DomainError.
double polygon_area(std::string_view kind, const Params& params);
std::vector<std::string_view> polygon_kinds();

// ---- pi by polygon doubling -------------------------------------------------

template <Scalar T>
struct PiRow {
  std::int64_t n = 0;
  T side{};       // a_n, unit circle
  T perimeter{};  // p_n = n a_n
};

template <Scalar T>
using PiTable = std::vector<PiRow<T>>;

inline constexpr int kMaxPiRounds = 24;

// Doubles the inscribed hexagon (a_6 = R = 1) `rounds` times. The naive form is
// a_2n^2 = 2 - 2 sqrt(1 - a_n^2 / 4); the stabilized form divides instead of
// subtracting: a_2n^2 = a_n^2 / (2 + 2 sqrt(1 - a_n^2 / 4)).
template <Scalar T>
PiTable<T> pi_doubling_table(int rounds, bool stabilized, int max_rounds = kMaxPiRounds) {
  if (rounds < 0 || rounds > max_rounds) {
    throw DomainError("pi_doubling_table: rounds must lie in [0, " + std::to_string(max_rounds) +
                      "]");
  }
  PiTable<T> table;
  table.reserve(static_cast<std::size_t>(rounds) + 1);
  std::int64_t n = 6;
  T sq(1.0);  // a_n^2
  T side(1.0);
  table.push_back({n, side, T(static_cast<double>(n)) * side});
  const Tolerance tol(1e-300, 1e-12);
  for (int i = 0; i < rounds; ++i) {
    const T root = scalar_sqrt(T(1.0) - sq / T(4.0), tol);
    sq = stabilized ? sq / (T(2.0) + T(2.0) * root) : T(2.0) - T(2.0) * root;
    n *= 2;
    side = scalar_sqrt(sq, tol);
    table.push_back({n, side, T(static_cast<double>(n)) * side});
  }
  return table;
}

// Perimeter of the circumscribed n-gon on the unit circle, from the
// inscribed side: n a_n / sqrt(1 - a_n^2 / 4).
double circumscribed_perimeter(std::int64_t n, double inscribed_side);

// ---- arcs, sectors, segments ------------------------------------------------

// 0 < angle <= 2 pi and R > 0, else DomainError.
double arc_length(double radius, AngleMeasure angle);
double sector_area(double radius, AngleMeasure angle);
double arc_length_deg(double radius, double degrees);
double sector_area_deg(double radius, double degrees);
double radius_from_arc(double length, AngleMeasure angle);
AngleMeasure angle_from_arc(double length, double radius);

enum class SegmentMethod { kExact, kApprox1, kApprox2 };
std::string_view to_string(SegmentMethod m);

// Area of the circular segment cut off by a chord subtending `angle`.
// kApprox1 is 2/3 b h and kApprox2 adds h^3 / (2 b), with chord b and sagitta h.
// Angles above pi are handled through the complementary segment.
double segment_area(double radius, AngleMeasure angle, SegmentMethod method);

// ---- other ------------------------------------------------------------------

// Locus of M with MA : MB = m : n. A circle on CC' as diameter (C, C'
// dividing AB internally and externally in that ratio), or the perpendicular
// bisector when m == n.
std::variant<Circle, Line> apollonius_circle(Point a, Point b, double m, double n);

// (2ab, a^2 - b^2, a^2 + b^2). Throws DomainError unless a > b >= 1.
std::array<std::int64_t, 3> pythagorean_triple(std::int64_t a, std::int64_t b);

}  // namespace euclid
