#include "euclid/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <random>

#include "euclid/error.hpp"
#include "euclid/machine.hpp"
#include "euclid/mensura.hpp"
#include "euclid/plane.hpp"
#include "euclid/solids.hpp"

namespace euclid {

bool SuiteReport::pass() const {
  return std::all_of(invariants.begin(), invariants.end(),
                     [](const InvariantResult& r) { return r.pass(); });
}

namespace {

using std::numbers::pi;

// mt19937_64 with a fixed mapping to [0, 1), so reports are reproducible
// independent of the standard library's distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }
  int integer(int lo, int hi) {  // inclusive
    return lo + static_cast<int>(engine_() % static_cast<std::uint64_t>(hi - lo + 1));
  }
  Point point(double span = 10.0) { return {uniform(-span, span), uniform(-span, span)}; }

 private:
  std::mt19937_64 engine_;
};

class Tracker {
 public:
  Tracker(std::string name, double limit) { result_.name = std::move(name), result_.limit = limit; }

  void add(double residual) {
    ++result_.samples;
    if (!(residual <= result_.limit)) ++result_.failures;
    if (std::isnan(residual)) residual = std::numeric_limits<double>::infinity();
    result_.max_residual = std::max(result_.max_residual, residual);
  }
  void fail() { add(std::numeric_limits<double>::infinity()); }
  InvariantResult result() const { return result_; }

 private:
  InvariantResult result_;
};

// A triangle of random points whose smallest angle is not tiny.
std::array<Point, 3> random_triangle(Rng& rng) {
  for (;;) {
    const Point a = rng.point(), b = rng.point(), c = rng.point();
    const double s = std::abs(cross(b - a, c - a));
    const double longest = std::max({distance(a, b), distance(b, c), distance(c, a)});
    if (s > 1e-2 * longest * longest) return {a, b, c};
  }
}

Point circumcenter(Point a, Point b, Point c) {
  const Vec2 ab = b - a, ac = c - a;
  const Line l1(ab.x, ab.y, -dot(ab, {midpoint(a, b).x, midpoint(a, b).y}));
  const Line l2(ac.x, ac.y, -dot(ac, {midpoint(a, c).x, midpoint(a, c).y}));
  return std::get<Point>(intersect_line_line(l1, l2));
}

// --- suites ---------------------------------------------------------------

std::vector<InvariantResult> angle_sum(Rng& rng, std::size_t n) {
  Tracker t("interior angles of triangle_from_sides sum to pi", 1e-9);
  for (std::size_t i = 0; i < n; ++i) {
    double a, b, c;
    do {
      a = rng.uniform(0.1, 10.0);
      b = rng.uniform(0.1, 10.0);
      c = rng.uniform(0.1, 10.0);
    } while (std::max({a, b, c}) > 0.99 * (a + b + c - std::max({a, b, c})));
    try {
      Machine m;
      m.call("triangle_from_sides", {"A", "B", "C"}, {a, b, c});
      const Point A = m.workspace().point("A"), B = m.workspace().point("B"),
                  C = m.workspace().point("C");
      t.add(std::abs(angle_at(B, A, C) + angle_at(A, B, C) + angle_at(A, C, B) - pi));
    } catch (const Error&) {
      t.fail();
    }
  }
  return {t.result()};
}

std::vector<InvariantResult> exterior_angle(Rng& rng, std::size_t n) {
  Tracker t("exterior angles of a convex polygon sum to 2 pi", 1e-9);
  for (std::size_t i = 0; i < n; ++i) {
    const int k = rng.integer(3, 12);
    std::vector<double> theta;
    for (int j = 0; j < k; ++j) theta.push_back(rng.uniform(0.0, 2.0 * pi));
    std::sort(theta.begin(), theta.end());
    // An ellipse keeps the points in convex position.
    const double rx = rng.uniform(0.5, 5.0), ry = rng.uniform(0.5, 5.0);
    const Point o = rng.point();
    std::vector<Point> poly;
    for (double th : theta) poly.push_back(o + Vec2{rx * std::cos(th), ry * std::sin(th)});
    double sum = 0.0;
    bool ok = true;
    for (int j = 0; j < k && ok; ++j) {
      const Point prev = poly[static_cast<std::size_t>((j + k - 1) % k)];
      const Point cur = poly[static_cast<std::size_t>(j)];
      const Point next = poly[static_cast<std::size_t>((j + 1) % k)];
      if (distance(prev, cur) < 1e-9 || distance(cur, next) < 1e-9) ok = false;
      else sum += oriented_angle(cur + (cur - prev), cur, next);
    }
    if (ok) t.add(std::abs(sum - 2.0 * pi));
  }
  return {t.result()};
}

std::vector<InvariantResult> power_of_point(Rng& rng, std::size_t n) {
  Tracker chord("signed chord product equals point_power", 1e-9);
  Tracker tangent("squared tangent length equals point_power", 1e-9);
  for (std::size_t i = 0; i < n; ++i) {
    const Circle c{rng.point(), rng.uniform(0.5, 5.0)};
    const Point p = rng.point(12.0);
    const double power = point_power(c, p);
    const double scale = std::max(c.radius * c.radius, distance(p, c.center) * distance(p, c.center));
    // Secant through P and a random interior point, so it always cuts the circle.
    const double phi = rng.uniform(0.0, 2.0 * pi);
    const Point inner = c.center + rng.uniform(0.0, 0.9 * c.radius) * Vec2{std::cos(phi), std::sin(phi)};
    if (distance(p, inner) > 1e-3) {
      const Vec2 u = (1.0 / distance(p, inner)) * (inner - p);
      const auto pts = intersect_line_circle(line_through(p, inner), c);
      if (pts.size() == 2) {
        const double prod = dot(pts[0] - p, u) * dot(pts[1] - p, u);
        chord.add(std::abs(prod - power) / scale);
      } else {
        chord.fail();
      }
    }
    if (power > 1e-6 * scale) {
      // Touch points from the Thales circle on PO.
      const Circle thales{midpoint(p, c.center), 0.5 * distance(p, c.center)};
      const auto touch = intersect_circle_circle(thales, c).points;
      for (const Point& tp : touch) {
        const double len = distance(p, tp);
        tangent.add(std::abs(len * len - power) / scale);
      }
    }
  }
  return {chord.result(), tangent.result()};
}

std::vector<InvariantResult> heron(Rng& rng, std::size_t n) {
  Tracker t("Heron equals half base times height", 1e-9);
  for (std::size_t i = 0; i < n; ++i) {
    const auto [A, B, C] = random_triangle(rng);
    const double a = distance(B, C), b = distance(C, A), c = distance(A, B);
    const double h = distance_point_line(A, line_through(B, C));
    const double s = heron_area(a, b, c);
    t.add(std::abs(s - 0.5 * a * h) / s);
  }
  return {t.result()};
}

std::vector<InvariantResult> circumradius(Rng& rng, std::size_t n) {
  Tracker t("b c equals 2 R h_a (R from the circumcenter)", 1e-9);
  Tracker u("triangle_metrics circumradius matches the circumcenter", 1e-9);
  for (std::size_t i = 0; i < n; ++i) {
    const auto [A, B, C] = random_triangle(rng);
    const double a = distance(B, C), b = distance(C, A), c = distance(A, B);
    const double r = distance(circumcenter(A, B, C), A);
    const double h = distance_point_line(A, line_through(B, C));
    t.add(std::abs(b * c - 2.0 * r * h) / (b * c));
    u.add(std::abs(triangle_metrics({a, b, c}).circumradius - r) / r);
  }
  return {t.result(), u.result()};
}

std::vector<InvariantResult> parallelogram(Rng& rng, std::size_t n) {
  Tracker t("d1^2 + d2^2 equals 2(a^2 + b^2)", 1e-9);
  Tracker c("parallelogram_diagonals_check accepts every sample", 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const Point o = rng.point(), p = rng.point(), q = rng.point();
    const Vec2 u = p - o, v = q - o;
    const double a = norm(u), b = norm(v), d1 = norm(u + v), d2 = norm(u + (-1.0) * v);
    const double rhs = 2.0 * (a * a + b * b);
    t.add(std::abs(d1 * d1 + d2 * d2 - rhs) / rhs);
    c.add(parallelogram_diagonals_check(a, b, d1, d2) ? 0.0 : 1.0);
  }
  return {t.result(), c.result()};
}

// One random, non-degenerate invocation per macro. Returns the worst
// residual / limit ratio over the macro's checks.
using MacroCase = std::function<double(Rng&)>;

double worst_ratio(const MacroResult& r) {
  double worst = 0.0;
  for (const PostconditionCheck& c : r.checks) {
    worst = std::max(worst, c.limit > 0.0 ? c.residual / c.limit : (c.residual > 0.0 ? 1e300 : 0.0));
  }
  return worst;
}

Machine fresh() {
  Machine m;
  m.set_enforce_postconditions(false);
  return m;
}

// Points A, O, B with |OA|, |OB| >= 1 and angle AOB in [0.1, pi - 0.1].
void angle_points(Rng& rng, Machine& m) {
  const Point o = rng.point(5.0);
  const double t0 = rng.uniform(0.0, 2.0 * pi);
  const double t1 = t0 + rng.uniform(0.1, pi - 0.1) * (rng.unit() < 0.5 ? 1.0 : -1.0);
  m.free_point("O", o);
  m.free_point("A", o + rng.uniform(1.0, 5.0) * Vec2{std::cos(t0), std::sin(t0)});
  m.free_point("B", o + rng.uniform(1.0, 5.0) * Vec2{std::cos(t1), std::sin(t1)});
}

void segment_points(Rng& rng, Machine& m, const char* p = "A", const char* q = "B") {
  const Point a = rng.point(5.0);
  const double th = rng.uniform(0.0, 2.0 * pi);
  m.free_point(p, a);
  m.free_point(q, a + rng.uniform(1.0, 8.0) * Vec2{std::cos(th), std::sin(th)});
}

void random_circle(Rng& rng, Machine& m, const char* name, const char* center, const char* on) {
  const Point o = rng.point(5.0);
  const double th = rng.uniform(0.0, 2.0 * pi);
  m.free_point(center, o);
  m.free_point(on, o + rng.uniform(0.5, 5.0) * Vec2{std::cos(th), std::sin(th)});
  m.circle(name, center, on);
}

// Point at distance >= 1 from line PQ.
Point off_line(Rng& rng, const Machine& m) {
  const Line l = m.workspace().line("l");
  for (;;) {
    const Point x = rng.point(8.0);
    if (std::abs(l.residual(x)) >= 1.0) return x;
  }
}

const std::vector<std::pair<std::string, MacroCase>>& macro_cases() {
  static const std::vector<std::pair<std::string, MacroCase>> cases = {
      {"triangle_from_sides",
       [](Rng& rng) {
         double a, b, c;
         do {
           a = rng.uniform(0.5, 10.0);
           b = rng.uniform(0.5, 10.0);
           c = rng.uniform(0.5, 10.0);
         } while (std::max({a, b, c}) > 0.95 * (a + b + c - std::max({a, b, c})));
         Machine m = fresh();
         return worst_ratio(m.call("triangle_from_sides", {"A", "B", "C"}, {a, b, c}));
       }},
      {"copy_angle",
       [](Rng& rng) {
         Machine m = fresh();
         angle_points(rng, m);
         segment_points(rng, m, "P", "Q");
         return worst_ratio(m.call("copy_angle", {"k", "F"}, {"A", "O", "B", "P", "Q"}));
       }},
      {"bisect_angle",
       [](Rng& rng) {
         Machine m = fresh();
         angle_points(rng, m);
         return worst_ratio(m.call("bisect_angle", {"k", "E"}, {"A", "O", "B"}));
       }},
      {"erect_perpendicular",
       [](Rng& rng) {
         Machine m = fresh();
         segment_points(rng, m, "P", "Q");
         m.line("l", "P", "Q");
         return worst_ratio(m.call("erect_perpendicular", {"k"}, {"P", "l"}));
       }},
      {"drop_perpendicular",
       [](Rng& rng) {
         Machine m = fresh();
         segment_points(rng, m, "P", "Q");
         m.line("l", "P", "Q");
         m.free_point("A", off_line(rng, m));
         return worst_ratio(m.call("drop_perpendicular", {"k", "F"}, {"A", "l"}));
       }},
      {"perpendicular_bisector",
       [](Rng& rng) {
         Machine m = fresh();
         segment_points(rng, m);
         return worst_ratio(m.call("perpendicular_bisector", {"k", "M"}, {"A", "B"}));
       }},
      {"parallel_through",
       [](Rng& rng) {
         Machine m = fresh();
         segment_points(rng, m, "P", "Q");
         m.line("l", "P", "Q");
         m.free_point("M", off_line(rng, m));
         return worst_ratio(m.call("parallel_through", {"k"}, {"M", "l"}));
       }},
      {"divide_segment",
       [](Rng& rng) {
         Machine m = fresh();
         segment_points(rng, m);
         const double parts = rng.integer(2, 7);
         return worst_ratio(m.call("divide_segment", {"D"}, {"A", "B", parts}));
       }},
      {"divide_segment_ratio",
       [](Rng& rng) {
         Machine m = fresh();
         segment_points(rng, m);
         std::vector<MacroValue> args{"A", "B"};
         const int k = rng.integer(2, 4);
         for (int i = 0; i < k; ++i) args.emplace_back(static_cast<double>(rng.integer(1, 4)));
         return worst_ratio(m.call("divide_segment_ratio", {"D"}, args));
       }},
      {"fourth_proportional",
       [](Rng& rng) {
         Machine m = fresh();
         return worst_ratio(m.call("fourth_proportional", {"O", "X"},
                                   {rng.uniform(0.5, 5.0), rng.uniform(0.5, 5.0), rng.uniform(0.5, 5.0)}));
       }},
      {"geometric_mean",
       [](Rng& rng) {
         Machine m = fresh();
         return worst_ratio(
             m.call("geometric_mean", {"C", "D"}, {rng.uniform(0.2, 8.0), rng.uniform(0.2, 8.0)}));
       }},
      {"geometric_mean_chord",
       [](Rng& rng) {
         Machine m = fresh();
         double a = rng.uniform(0.2, 8.0), b = rng.uniform(0.2, 8.0);
         if (std::abs(a - b) < 0.05) b = a + 0.5;
         return worst_ratio(m.call("geometric_mean_chord", {"A", "D"}, {a, b}));
       }},
      {"golden_section",
       [](Rng& rng) {
         Machine m = fresh();
         segment_points(rng, m);
         return worst_ratio(m.call("golden_section", {"G"}, {"A", "B"}));
       }},
      {"inscribe_regular",
       [](Rng& rng) {
         static constexpr double kSizes[] = {3, 4, 5, 6, 8, 10, 12, 15, 16, 20, 24, 30};
         Machine m = fresh();
         random_circle(rng, m, "c", "O", "U");
         const double n = kSizes[rng.integer(0, 11)];
         return worst_ratio(m.call("inscribe_regular", {"V"}, {n, "c"}));
       }},
      {"tangents_from_point",
       [](Rng& rng) {
         Machine m = fresh();
         random_circle(rng, m, "c", "O", "U");
         const Circle c = m.workspace().circle("c");
         const double th = rng.uniform(0.0, 2.0 * pi);
         m.free_point("P", c.center + c.radius * rng.uniform(1.1, 4.0) * Vec2{std::cos(th), std::sin(th)});
         return worst_ratio(m.call("tangents_from_point", {"t"}, {"P", "c"}));
       }},
      {"common_tangents",
       [](Rng& rng) {
         Machine m = fresh();
         random_circle(rng, m, "c1", "O1", "U1");
         const Circle c = m.workspace().circle("c1");
         const double th = rng.uniform(0.0, 2.0 * pi);
         const double r2 = c.radius * rng.uniform(0.2, 1.5);
         // Center distance chosen so that at least the external tangents exist.
         const double d = std::abs(c.radius - r2) + rng.uniform(0.1, 3.0) * (c.radius + r2);
         const Point o2 = c.center + d * Vec2{std::cos(th), std::sin(th)};
         m.free_point("O2", o2);
         m.free_point("U2", o2 + Vec2{0.0, r2});
         m.circle("c2", "O2", "U2");
         return worst_ratio(m.call("common_tangents", {"t"}, {"c1", "c2"}));
       }},
      {"arc_containing_angle",
       [](Rng& rng) {
         Machine m = fresh();
         segment_points(rng, m);
         return worst_ratio(
             m.call("arc_containing_angle", {"a", "O"}, {"A", "B", rng.uniform(5.0, 175.0)}));
       }},
  };
  return cases;
}

std::vector<InvariantResult> macros(Rng& rng, std::size_t n) {
  const auto& cases = macro_cases();
  std::vector<Tracker> trackers;
  for (const auto& [name, run] : cases) trackers.emplace_back(name + " postconditions (residual / limit)", 1.0);
  // n / 10 runs per macro, 1000 each at the default sample count.
  const std::size_t per_macro = std::max<std::size_t>(1, n / 10);
  for (std::size_t i = 0; i < per_macro * cases.size(); ++i) {
    const std::size_t k = i % cases.size();
    try {
      trackers[k].add(cases[k].second(rng));
    } catch (const Error&) {
      trackers[k].fail();
    }
  }
  std::vector<InvariantResult> out;
  for (const Tracker& t : trackers) out.push_back(t.result());
  return out;
}

std::vector<InvariantResult> interval(Rng& rng, std::size_t n) {
  Tracker heron_t("interval Heron encloses the double result", 0.0);
  Tracker dist_t("interval distance encloses the double result", 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const auto [A, B, C] = random_triangle(rng);
    const double a = distance(B, C), b = distance(C, A), c = distance(A, B);
    const Interval s = heron_area(Interval(a), Interval(b), Interval(c));
    heron_t.add(s.contains(heron_area(a, b, c)) ? 0.0 : 1.0);
    const Interval dx = Interval(A.x) - Interval(B.x);
    const Interval dy = Interval(A.y) - Interval(B.y);
    const Interval d = sqrt(dx * dx + dy * dy);
    const double fx = A.x - B.x, fy = A.y - B.y;
    dist_t.add(d.contains(std::sqrt(fx * fx + fy * fy)) ? 0.0 : 1.0);
  }
  Tracker pi_t("interval doubling table encloses the double table", 0.0);
  for (bool stabilized : {false, true}) {
    const auto fi = pi_doubling_table<Interval>(kMaxPiRounds, stabilized);
    const auto fd = pi_doubling_table<double>(kMaxPiRounds, stabilized);
    for (std::size_t r = 0; r < fd.size(); ++r) {
      pi_t.add(fi[r].perimeter.contains(fd[r].perimeter) ? 0.0 : 1.0);
    }
  }
  return {heron_t.result(), dist_t.result(), pi_t.result()};
}

std::vector<InvariantResult> archimedes(Rng& rng, std::size_t n) {
  Tracker t("sphere : cylinder = 2/3 and sphere : cone = 4/9", 1e-12);
  for (std::size_t i = 0; i < n; ++i) {
    const ArchimedesRatios r = archimedes_ratios(rng.uniform(1e-3, 1e3));
    t.add(std::max({std::abs(r.cylinder_area - 2.0 / 3.0), std::abs(r.cylinder_volume - 2.0 / 3.0),
                    std::abs(r.cone_area - 4.0 / 9.0), std::abs(r.cone_volume - 4.0 / 9.0)}));
  }
  return {t.result()};
}

std::vector<InvariantResult> solids_suite(Rng& rng, std::size_t n) {
  Tracker sector("sector = segment + cone over the cap base", 1e-9);
  Tracker zone("zone surfaces over a partition of the diameter sum to 4 pi R^2", 1e-9);
  Tracker frustum("frustum meets prism (b = B) and pyramid (b = 0)", 1e-9);
  for (std::size_t i = 0; i < n; ++i) {
    const double r = rng.uniform(0.1, 10.0);
    const double h = rng.uniform(0.0, 2.0 * r);
    const double rho2 = h * (2.0 * r - h);
    const double cone = pi * rho2 * (r - h) / 3.0;  // apex at the center; signed past the equator
    const double lhs = volume(solid::SphericalSector{r, h});
    const double rhs = volume(solid::SphericalSegment{r, h}) + cone;
    sector.add(std::abs(lhs - rhs) / (4.0 * pi * r * r * r / 3.0));
    const int parts = rng.integer(1, 8);
    std::vector<double> cuts{0.0, 2.0 * r};
    for (int k = 1; k < parts; ++k) cuts.push_back(rng.uniform(0.0, 2.0 * r));
    std::sort(cuts.begin(), cuts.end());
    double sum = 0.0;
    for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
      sum += surface_area(solid::SphericalZone{r, cuts[k + 1] - cuts[k]}, Surface::kTotal);
    }
    zone.add(std::abs(sum - 4.0 * pi * r * r) / (4.0 * pi * r * r));
    const double base = rng.uniform(0.1, 10.0), height = rng.uniform(0.1, 10.0);
    const double prism = volume(solid::Prism{base, height});
    const double pyramid = volume(solid::Pyramid{base, height});
    frustum.add(std::max(std::abs(volume(solid::PyramidFrustum{base, base, height}) - prism) / prism,
                         std::abs(volume(solid::PyramidFrustum{base, 0.0, height}) - pyramid) / pyramid));
  }
  return {sector.result(), zone.result(), frustum.result()};
}

struct Suite {
  std::string_view name;
  std::vector<InvariantResult> (*run)(Rng&, std::size_t);
};

constexpr Suite kSuites[] = {
    {"angle-sum", angle_sum},
    {"exterior-angle", exterior_angle},
    {"power-of-point", power_of_point},
    {"heron", heron},
    {"circumradius", circumradius},
    {"parallelogram", parallelogram},
    {"macros", macros},
    {"interval", interval},
    {"archimedes", archimedes},
    {"solids", solids_suite},
};

}  // namespace

std::vector<std::string_view> verify_suite_names() {
  std::vector<std::string_view> out;
  for (const Suite& s : kSuites) out.push_back(s.name);
  return out;
}

SuiteReport run_verify_suite(std::string_view name, std::uint64_t seed, std::size_t samples) {
  for (const Suite& s : kSuites) {
    if (s.name != name) continue;
    Rng rng(seed);
    return {std::string(name), seed, s.run(rng, samples)};
  }
  throw DomainError("unknown verify suite '" + std::string(name) + "'");
}

}  // namespace euclid
