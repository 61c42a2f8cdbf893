// Macro library: the classical constructions, each expanded into line,
// circle and intersection primitives on the Machine. Where two intersection
// points are possible the macro inspects the figure and records the choice as
// an explicit selector, so the trace replays without the macro.

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "euclid/error.hpp"
#include "euclid/machine.hpp"
#include "euclid/ngon.hpp"

namespace euclid {

namespace {

using Names = std::span<const std::string>;
using Args = std::span<const MacroValue>;

constexpr double kAngleLimit = 1e-9;   // radians
constexpr double kRelLimit = 1e-9;     // relative length agreement
constexpr double kArcAngleLimit = 1e-7;

const std::string& name_arg(Args args, std::size_t i, const char* macro) {
  if (const auto* s = std::get_if<std::string>(&args[i])) return *s;
  throw DomainError(std::string(macro) + ": argument " + std::to_string(i + 1) +
                    " must be an object name");
}

double number_arg(Args args, std::size_t i, const char* macro) {
  if (const auto* d = std::get_if<double>(&args[i])) return *d;
  throw DomainError(std::string(macro) + ": argument " + std::to_string(i + 1) +
                    " must be a number");
}

double positive_arg(Args args, std::size_t i, const char* macro) {
  const double v = number_arg(args, i, macro);
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw DomainError(std::string(macro) + ": argument " + std::to_string(i + 1) +
                      " must be a positive length");
  }
  return v;
}

long long count_arg(Args args, std::size_t i, const char* macro) {
  const double v = number_arg(args, i, macro);
  if (!(v >= 1.0) || v != std::floor(v) || v > 1e6) {
    throw DomainError(std::string(macro) + ": argument " + std::to_string(i + 1) +
                      " must be a positive integer");
  }
  return static_cast<long long>(v);
}

// Output name i, or a hidden name when the caller did not ask for it.
std::string out_or_hidden(Machine& m, Names outs, std::size_t i, std::string_view tag) {
  return i < outs.size() ? outs[i] : m.hidden(tag);
}

void require_outputs(Names outs, std::size_t min, std::size_t max, const char* macro) {
  if (outs.size() < min || outs.size() > max) {
    throw Error(std::string(macro) + ": expected " + std::to_string(min) +
                (min == max ? "" : ".." + std::to_string(max)) + " output name(s), got " +
                std::to_string(outs.size()));
  }
}

// Binds `count` names: the given list if it has exactly `count` entries,
// otherwise a single name is used as a prefix (P -> P1..Pcount).
std::vector<std::string> expand_names(Names outs, std::size_t count, const char* macro) {
  if (outs.size() == count) return {outs.begin(), outs.end()};
  if (outs.size() == 1) {
    std::vector<std::string> names;
    names.reserve(count);
    for (std::size_t i = 1; i <= count; ++i) names.push_back(outs[0] + std::to_string(i));
    return names;
  }
  throw Error(std::string(macro) + ": produces " + std::to_string(count) +
              " object(s); give that many names or a single prefix");
}

Selector pick(std::size_t index) {
  return Selector{index == 0 ? Selector::Kind::kFirst : Selector::Kind::kSecond, {}};
}
Selector nearest(const std::string& ref) { return Selector{Selector::Kind::kNearest, ref}; }
Selector farthest(const std::string& ref) { return Selector{Selector::Kind::kFarthest, ref}; }

// Index of the candidate with the largest y (ties: the first).
std::size_t upper_index(const std::vector<Point>& pts) {
  return pts.size() > 1 && pts[1].y > pts[0].y ? 1 : 0;
}

Point pt(const Machine& m, const std::string& name) { return m.workspace().point(name); }

double rel_residual(double got, double want) {
  const double scale = std::max(std::abs(want), 1e-300);
  return std::abs(got - want) / scale;
}

// --- shared constructions -------------------------------------------------

// Perpendicular bisector of AB from the two equal circles about A and B.
std::string perp_bisector(Machine& m, const std::string& out, const std::string& a,
                          const std::string& b) {
  const std::string ca = m.hidden("circ");
  const std::string cb = m.hidden("circ");
  m.circle(ca, a, b);
  m.circle(cb, b, a);
  const std::string x = m.hidden("pt");
  const std::string y = m.hidden("pt");
  m.intersect({x, y}, ca, cb);
  m.line(out, x, y);
  return out;
}

std::string point_on_line_other_than(const Machine& m, const std::string& line,
                                     const std::string& avoid) {
  const Entry& e = m.workspace().entry(line);
  if (!std::holds_alternative<Line>(e.value) || e.sources.size() != 2) {
    throw DomainError("'" + line + "' is not a line through two points");
  }
  const Point a = pt(m, avoid);
  const double d0 = distance(pt(m, e.sources[0]), a);
  const double d1 = distance(pt(m, e.sources[1]), a);
  return d0 >= d1 ? e.sources[0] : e.sources[1];
}

// Perpendicular to `line` at C (C on the line): mark P and its mirror P' about
// C with one circle, then bisect PP'.
std::string erect(Machine& m, const std::string& out, const std::string& c,
                  const std::string& line) {
  const Line& l = m.workspace().line(line);
  const Tolerance tol = m.tolerance();
  if (std::abs(l.residual(pt(m, c))) > tol.abs_eps()) {
    throw DomainError("erect_perpendicular: '" + c + "' is not on '" + line + "'");
  }
  const std::string p = point_on_line_other_than(m, line, c);
  const std::string k = m.hidden("circ");
  m.circle(k, c, p);
  const std::string p2 = m.intersect_one(m.hidden("pt"), k, line, farthest(p));
  const std::string c1 = m.hidden("circ");
  const std::string c2 = m.hidden("circ");
  m.circle(c1, p, p2);
  m.circle(c2, p2, p);
  const std::string e = m.intersect_one(m.hidden("pt"), c1, c2, pick(0));
  m.line(out, c, e);
  return out;
}

// Perpendicular from A (off the line): a circle about A cuts the line at P and
// P'; circles about P and P' through A meet again at the mirror image of A.
std::string drop(Machine& m, const std::string& out, const std::string& a,
                 const std::string& line) {
  const Entry& e = m.workspace().entry(line);
  const Line& l = m.workspace().line(line);
  const Point pa = pt(m, a);
  const Tolerance tol = m.tolerance();
  const double d = std::abs(l.residual(pa));
  if (d <= tol.abs_eps()) {
    throw DomainError("drop_perpendicular: '" + a + "' lies on '" + line + "'");
  }
  // A defining point that is not the foot itself, otherwise the circle only touches.
  std::string p = e.sources.at(0);
  if (std::abs(distance(pa, pt(m, p)) - d) <= tol.band(d)) p = e.sources.at(1);
  const std::string k = m.hidden("circ");
  m.circle(k, a, p);
  const std::string p2 = m.intersect_one(m.hidden("pt"), k, line, farthest(p));
  const std::string c1 = m.hidden("circ");
  const std::string c2 = m.hidden("circ");
  m.circle(c1, p, a);
  m.circle(c2, p2, a);
  const std::string mirror = m.intersect_one(m.hidden("pt"), c1, c2, farthest(a));
  m.line(out, a, mirror);
  return out;
}

std::string parallel(Machine& m, const std::string& out, const std::string& through,
                     const std::string& line, bool* coincident = nullptr) {
  const Line& l = m.workspace().line(line);
  if (std::abs(l.residual(pt(m, through))) <= m.tolerance().abs_eps()) {
    const Entry& e = m.workspace().entry(line);
    m.line(out, e.sources.at(0), e.sources.at(1));
    m.annotate(out, "coincident with " + line);
    if (coincident) *coincident = true;
    return out;
  }
  const std::string k = drop(m, m.hidden("line"), through, line);
  erect(m, out, through, k);
  if (coincident) *coincident = false;
  return out;
}

// Advances one chord along circle `c` counter-clockwise from `from`, the chord
// length being the distance between `s0` and `s1`.
std::string step_ccw(Machine& m, const std::string& out, const std::string& from,
                     const std::string& c, const std::string& s0, const std::string& s1) {
  const std::string k = m.hidden("circ");
  m.circle_radius_of(k, from, s0, s1);
  const std::vector<Point> cand = m.peek_intersection(k, c);
  const Point o = m.workspace().circle_like(c).center;
  const Point f = pt(m, from);
  std::size_t idx = 0;
  if (cand.size() == 2) {
    const double c0 = cross(f - o, cand[0] - o);
    const double c1 = cross(f - o, cand[1] - o);
    idx = c1 > c0 ? 1 : 0;
  }
  return m.intersect_one(out, k, c, pick(idx));
}

// Points where the tangents from P touch circle c (Thales circle on PO).
std::vector<std::string> touch_points(Machine& m, const std::string& p, const std::string& c) {
  const std::string o = m.center_of(c);
  const std::string pb = perp_bisector(m, m.hidden("line"), p, o);
  const std::string mid = m.intersect_one(m.hidden("pt"), pb, m.line_of(p, o));
  const std::string th = m.hidden("circ");
  m.circle(th, mid, p);
  const std::size_t n = m.peek_intersection(th, c).size();
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back(m.hidden("touch"));
  return m.intersect(names, th, c);
}

// Any point of circle c: its through-point, or a cut with a line through the center.
std::string point_on_circle(Machine& m, const std::string& c) {
  const Entry& e = m.workspace().entry(c);
  if (std::holds_alternative<Circle>(e.value) && e.sources.size() == 2) return e.sources[1];
  const std::string o = m.center_of(c);
  const Circle& circ = m.workspace().circle_like(c);
  const std::string h = m.hidden("dir");
  m.free_point(h, circ.center + Vec2{circ.radius, 0.0});
  return m.intersect_one(m.hidden("pt"), m.line_of(o, h), c, nearest(h));
}

PostconditionCheck line_touches(const Machine& m, const std::string& line, const Circle& c,
                                const std::string& what) {
  const double d = distance_point_line(c.center, m.workspace().line(line));
  return {what + " touches circle", std::abs(d - c.radius), m.tolerance().band(c.radius)};
}

// --- macros ---------------------------------------------------------------

MacroResult triangle_from_sides(Machine& m, Names outs, Args args) {
  constexpr const char* kName = "triangle_from_sides";
  require_outputs(outs, 3, 3, kName);
  const double a = positive_arg(args, 0, kName);
  const double b = positive_arg(args, 1, kName);
  const double c = positive_arg(args, 2, kName);
  const double longest = std::max({a, b, c});
  if (longest >= (a + b + c - longest) - m.workspace().base_tolerance().band(longest)) {
    throw Infeasible("triangle_from_sides: the longest side must be shorter than the sum of the others");
  }
  const std::string &A = outs[0], &B = outs[1], &C = outs[2];
  m.free_point(A, {0.0, 0.0});
  m.free_point(B, {c, 0.0});
  // The given segments a and b, laid out below the base.
  const double row = 0.25 * longest;
  const std::string a0 = m.hidden("given_a"), a1 = m.hidden("given_a");
  const std::string b0 = m.hidden("given_b"), b1 = m.hidden("given_b");
  m.free_point(a0, {0.0, -row});
  m.free_point(a1, {a, -row});
  m.free_point(b0, {0.0, -2.0 * row});
  m.free_point(b1, {b, -2.0 * row});
  const std::string ka = m.hidden("circ");
  const std::string kb = m.hidden("circ");
  m.circle_radius_of(kb, A, b0, b1);
  m.circle_radius_of(ka, B, a0, a1);
  m.intersect_one(C, kb, ka, pick(upper_index(m.peek_intersection(kb, ka))));

  MacroResult r{{A, B, C}, {}, {}};
  r.checks.push_back({"|BC| = a", rel_residual(distance(pt(m, B), pt(m, C)), a), kRelLimit});
  r.checks.push_back({"|CA| = b", rel_residual(distance(pt(m, C), pt(m, A)), b), kRelLimit});
  r.checks.push_back({"|AB| = c", rel_residual(distance(pt(m, A), pt(m, B)), c), kRelLimit});
  return r;
}

MacroResult copy_angle(Machine& m, Names outs, Args args) {
  constexpr const char* kName = "copy_angle";
  require_outputs(outs, 1, 2, kName);
  const std::string& A = name_arg(args, 0, kName);
  const std::string& O = name_arg(args, 1, kName);
  const std::string& B = name_arg(args, 2, kName);
  const std::string& P = name_arg(args, 3, kName);
  const std::string& Q = name_arg(args, 4, kName);
  const double theta = angle_at(pt(m, A), pt(m, O), pt(m, B));
  const double orient = cross(pt(m, A) - pt(m, O), pt(m, B) - pt(m, O));

  const std::string k = m.hidden("circ");
  m.circle(k, O, A);
  const std::string D = m.intersect_one(m.hidden("pt"), k, m.line_of(O, B), nearest(B));
  const std::string k2 = m.hidden("circ");
  m.circle_radius_of(k2, P, O, A);
  const std::string E = m.intersect_one(m.hidden("pt"), k2, m.line_of(P, Q), nearest(Q));

  const std::string F = out_or_hidden(m, outs, 1, "ray");
  MacroResult r;
  if (distance(pt(m, A), pt(m, D)) <= m.tolerance().abs_eps()) {
    // Zero angle: the copy is the target ray itself.
    m.intersect_one(F, k2, m.line_of(P, Q), nearest(Q));
    m.line(outs[0], P, F);
    m.annotate(outs[0], "coincident with ray " + P + Q);
  } else {
    const std::string k3 = m.hidden("circ");
    m.circle_radius_of(k3, E, A, D);
    const std::vector<Point> cand = m.peek_intersection(k2, k3);
    std::size_t idx = 0;
    if (cand.size() == 2) {
      const Point p = pt(m, P);
      const Point e = pt(m, E);
      const double s0 = cross(e - p, cand[0] - p);
      idx = (s0 >= 0.0) == (orient >= 0.0) ? 0 : 1;
    }
    m.intersect_one(F, k2, k3, pick(idx));
    m.line(outs[0], P, F);
  }
  r.outputs = {outs.begin(), outs.end()};
  const double copied = angle_at(pt(m, Q), pt(m, P), pt(m, F));
  r.checks.push_back({"copied angle equals source", std::abs(copied - theta), kAngleLimit});
  return r;
}

MacroResult bisect_angle(Machine& m, Names outs, Args args) {
  constexpr const char* kName = "bisect_angle";
  require_outputs(outs, 1, 2, kName);
  const std::string& A = name_arg(args, 0, kName);
  const std::string& O = name_arg(args, 1, kName);
  const std::string& B = name_arg(args, 2, kName);
  const std::string k = m.hidden("circ");
  m.circle(k, O, A);
  const std::string D = m.intersect_one(m.hidden("pt"), k, m.line_of(O, B), nearest(B));
  if (distance(pt(m, A), pt(m, D)) <= m.tolerance().abs_eps()) {
    throw DegenerateInput("bisect_angle: the sides coincide (zero angle)");
  }
  const std::string c1 = m.hidden("circ");
  const std::string c2 = m.hidden("circ");
  m.circle(c1, A, D);
  m.circle(c2, D, A);
  const std::string E = m.intersect_one(out_or_hidden(m, outs, 1, "pt"), c1, c2, farthest(O));
  m.line(outs[0], O, E);

  MacroResult r{{outs.begin(), outs.end()}, {}, {}};
  const Point a = pt(m, A), o = pt(m, O), b = pt(m, B), e = pt(m, E);
  r.checks.push_back({"half-angles equal", std::abs(angle_at(a, o, e) - angle_at(e, o, b)),
                      kAngleLimit});
  const double da = distance_point_line(e, line_through(o, a));
  const double db = distance_point_line(e, line_through(o, b));
  r.checks.push_back({"bisector point equidistant from the sides", rel_residual(da, db), kRelLimit});
  return r;
}

PostconditionCheck perpendicular_check(const Machine& m, const std::string& l1,
                                       const std::string& l2) {
  const double d = std::abs(dot(m.workspace().line(l1).direction(),
                                m.workspace().line(l2).direction()));
  return {"perpendicular to " + l2, d, kRelLimit};
}

PostconditionCheck through_check(const Machine& m, const std::string& line,
                                 const std::string& p) {
  return {"passes through " + p, std::abs(m.workspace().line(line).residual(pt(m, p))),
          m.tolerance().abs_eps()};
}

MacroResult erect_perpendicular(Machine& m, Names outs, Args args) {
  constexpr const char* kName = "erect_perpendicular";
  require_outputs(outs, 1, 1, kName);
  const std::string& C = name_arg(args, 0, kName);
  const std::string& l = name_arg(args, 1, kName);
  erect(m, outs[0], C, l);
  return {{outs[0]}, {}, {perpendicular_check(m, outs[0], l), through_check(m, outs[0], C)}};
}

MacroResult drop_perpendicular(Machine& m, Names outs, Args args) {
  constexpr const char* kName = "drop_perpendicular";
  require_outputs(outs, 1, 2, kName);
  const std::string& A = name_arg(args, 0, kName);
  const std::string& l = name_arg(args, 1, kName);
  drop(m, outs[0], A, l);
  MacroResult r{{outs.begin(), outs.end()}, {}, {}};
  if (outs.size() == 2) m.intersect_one(outs[1], outs[0], l);
  r.checks = {perpendicular_check(m, outs[0], l), through_check(m, outs[0], A)};
  return r;
}

MacroResult perpendicular_bisector(Machine& m, Names outs, Args args) {
  constexpr const char* kName = "perpendicular_bisector";
  require_outputs(outs, 1, 2, kName);
  const std::string& A = name_arg(args, 0, kName);
  const std::string& B = name_arg(args, 1, kName);
  if (distance(pt(m, A), pt(m, B)) <= m.tolerance().abs_eps()) {
    throw DegenerateInput("perpendicular_bisector: coincident end points");
  }
  perp_bisector(m, outs[0], A, B);
  if (outs.size() == 2) m.intersect_one(outs[1], outs[0], m.line_of(A, B));

  MacroResult r{{outs.begin(), outs.end()}, {}, {}};
  const Line& l = m.workspace().line(outs[0]);
  const Point a = pt(m, A), b = pt(m, B);
  const double span = distance(a, b);
  double worst = 0.0;
  for (int t = -2; t <= 2; ++t) {
    const Point x = foot_of_perpendicular(midpoint(a, b), l) + (span * t) * l.direction();
    worst = std::max(worst, std::abs(distance(x, a) - distance(x, b)) / span);
  }
  r.checks.push_back({"sampled points equidistant from the ends", worst, kRelLimit});
  return r;
}

MacroResult parallel_through(Machine& m, Names outs, Args args) {
  constexpr const char* kName = "parallel_through";
  require_outputs(outs, 1, 1, kName);
  const std::string& M = name_arg(args, 0, kName);
  const std::string& l = name_arg(args, 1, kName);
  bool coincident = false;
  parallel(m, outs[0], M, l, &coincident);
  MacroResult r{{outs[0]}, {coincident ? "coincident" : ""}, {}};
  const double c = std::abs(cross(m.workspace().line(outs[0]).direction(),
                                  m.workspace().line(l).direction()));
  r.checks.push_back({"direction cross product", c, 1e-12});
  r.checks.push_back(through_check(m, outs[0], M));
  return r;
}

// Cuts AB at the cumulative `weights` by marking sum(weights) equal steps on an
// auxiliary ray from A and drawing parallels to the closing line.
MacroResult divide_by_weights(Machine& m, Names outs, const std::string& A,
                              const std::string& B, const std::vector<long long>& weights,
                              const char* macro) {
  const Point a = pt(m, A), b = pt(m, B);
  const double ab = distance(a, b);
  if (ab <= m.tolerance().abs_eps()) throw DegenerateInput(std::string(macro) + ": A = B");
  const long long total = std::accumulate(weights.begin(), weights.end(), 0LL);
  const std::vector<std::string> names = expand_names(outs, weights.size() - 1, macro);

  // Auxiliary ray at 60 degrees to AB; the step length is an arbitrary choice.
  const Vec2 u = (1.0 / static_cast<double>(total)) * (b - a);
  const double c60 = 0.5, s60 = std::sqrt(3.0) / 2.0;
  const std::string C = m.hidden("aux");
  m.free_point(C, a + Vec2{c60 * u.x - s60 * u.y, s60 * u.x + c60 * u.y});
  const std::string ray = m.line_of(A, C);
  std::vector<std::string> marks{C};
  for (long long i = 1; i < total; ++i) {
    const std::string k = m.hidden("circ");
    m.circle_radius_of(k, marks.back(), A, C);
    marks.push_back(m.intersect_one(m.hidden("mark"), k, ray, farthest(A)));
  }
  const std::string closing = m.line_of(marks.back(), B);
  const std::string base = m.line_of(A, B);
  long long cum = 0;
  for (std::size_t i = 0; i + 1 < weights.size(); ++i) {
    cum += weights[i];
    const std::string par = parallel(m, m.hidden("line"), marks[static_cast<std::size_t>(cum - 1)], closing);
    m.intersect_one(names[i], par, base);
  }

  MacroResult r{names, {}, {}};
  std::vector<Point> cuts{a};
  for (const auto& n : names) cuts.push_back(pt(m, n));
  cuts.push_back(b);
  double worst = 0.0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    const double want = static_cast<double>(weights[i]) / static_cast<double>(total);
    worst = std::max(worst, rel_residual(distance(cuts[i], cuts[i + 1]) / ab, want));
  }
  r.checks.push_back({"pieces proportional to the weights", worst, kRelLimit});
  return r;
}

MacroResult divide_segment(Machine& m, Names outs, Args args) {
  constexpr const char* kName = "divide_segment";
  const long long n = count_arg(args, 2, kName);
  if (n < 2) throw DomainError("divide_segment: n must be at least 2");
  return divide_by_weights(m, outs, name_arg(args, 0, kName), name_arg(args, 1, kName),
                           std::vector<long long>(static_cast<std::size_t>(n), 1), kName);
}

MacroResult divide_segment_ratio(Machine& m, Names outs, Args args) {
  constexpr const char* kName = "divide_segment_ratio";
  std::vector<long long> w;
  for (std::size_t i = 2; i < args.size(); ++i) w.push_back(count_arg(args, i, kName));
  return divide_by_weights(m, outs, name_arg(args, 0, kName), name_arg(args, 1, kName), w, kName);
}

MacroResult fourth_proportional(Machine& m, Names outs, Args args) {
  constexpr const char* kName = "fourth_proportional";
  require_outputs(outs, 2, 2, kName);
  const double a = positive_arg(args, 0, kName);
  const double b = positive_arg(args, 1, kName);
  const double c = positive_arg(args, 2, kName);
  const std::string& O = outs[0];
  const std::string A = m.hidden("given_a"), B = m.hidden("given_b"), C = m.hidden("given_c");
  m.free_point(O, {0.0, 0.0});
  m.free_point(A, {a, 0.0});
  m.free_point(B, {b, 0.0});
  m.free_point(C, {0.5 * c, std::sqrt(3.0) / 2.0 * c});
  const std::string par = parallel(m, m.hidden("line"), B, m.line_of(A, C));
  m.intersect_one(outs[1], par, m.line_of(O, C));
  const double x = distance(pt(m, O), pt(m, outs[1]));
  return {{outs.begin(), outs.end()}, {}, {{"a:b = c:x", rel_residual(x, b * c / a), kRelLimit}}};
}

MacroResult geometric_mean(Machine& m, Names outs, Args args) {
  constexpr const char* kName = "geometric_mean";
  require_outputs(outs, 2, 2, kName);
  const double a = positive_arg(args, 0, kName);
  const double b = positive_arg(args, 1, kName);
  // Altitude from the right angle of the triangle inscribed in a semicircle
  // on a + b, at the point dividing the diameter into a and b.
  const std::string A = m.hidden("end");
  const std::string& C = outs[0];
  const std::string B = m.hidden("end");
  m.free_point(A, {0.0, 0.0});
  m.free_point(C, {a, 0.0});
  m.free_point(B, {a + b, 0.0});
  const std::string base = m.line_of(A, B);
  const std::string pb = perp_bisector(m, m.hidden("line"), A, B);
  const std::string mid = m.intersect_one(m.hidden("pt"), pb, base);
  const std::string k = m.hidden("circ");
  m.circle(k, mid, A);
  const std::string t = erect(m, m.hidden("line"), C, base);
  m.intersect_one(outs[1], t, k, pick(upper_index(m.peek_intersection(t, k))));
  const double x = distance(pt(m, C), pt(m, outs[1]));
  return {{outs.begin(), outs.end()}, {}, {{"x^2 = a b", rel_residual(x * x, a * b), kRelLimit}}};
}

MacroResult geometric_mean_chord(Machine& m, Names outs, Args args) {
  constexpr const char* kName = "geometric_mean_chord";
  require_outputs(outs, 2, 2, kName);
  const double a = positive_arg(args, 0, kName);
  const double b = positive_arg(args, 1, kName);
  // A chord from the end of a diameter is the mean proportional between the
  // diameter and the chord's projection on it.
  const double whole = std::max(a, b);
  const double part = std::min(a, b);
  const std::string& A = outs[0];
  const std::string B = m.hidden("end");
  const std::string C = m.hidden("foot");
  m.free_point(A, {0.0, 0.0});
  m.free_point(B, {whole, 0.0});
  m.free_point(C, {part, 0.0});
  const std::string base = m.line_of(A, B);
  const std::string pb = perp_bisector(m, m.hidden("line"), A, B);
  const std::string mid = m.intersect_one(m.hidden("pt"), pb, base);
  const std::string k = m.hidden("circ");
  m.circle(k, mid, A);
  const std::string t = erect(m, m.hidden("line"), C, base);
  m.intersect_one(outs[1], t, k, pick(upper_index(m.peek_intersection(t, k))));
  const double x = distance(pt(m, A), pt(m, outs[1]));
  return {{outs.begin(), outs.end()}, {}, {{"x^2 = a b", rel_residual(x * x, a * b), kRelLimit}}};
}

MacroResult golden_section(Machine& m, Names outs, Args args) {
  constexpr const char* kName = "golden_section";
  require_outputs(outs, 1, 1, kName);
  const std::string& A = name_arg(args, 0, kName);
  const std::string& B = name_arg(args, 1, kName);
  const double ab = distance(pt(m, A), pt(m, B));
  if (ab <= m.tolerance().abs_eps()) throw DegenerateInput("golden_section: A = B");
  const std::string base = m.line_of(A, B);
  const std::string pb = perp_bisector(m, m.hidden("line"), A, B);
  const std::string mid = m.intersect_one(m.hidden("pt"), pb, base);
  const std::string t = erect(m, m.hidden("line"), B, base);
  const std::string k = m.hidden("circ");
  m.circle(k, B, mid);  // |BC| = AB / 2
  const std::string C = m.intersect_one(m.hidden("pt"), t, k, pick(0));
  const std::string k2 = m.hidden("circ");
  m.circle(k2, C, B);
  const std::string D = m.intersect_one(m.hidden("pt"), m.line_of(A, C), k2, nearest(A));
  const std::string k3 = m.hidden("circ");
  m.circle(k3, A, D);
  m.intersect_one(outs[0], k3, base, nearest(B));

  const Point g = pt(m, outs[0]);
  const double ag = distance(pt(m, A), g);
  const double gb = distance(g, pt(m, B));
  MacroResult r{{outs[0]}, {}, {}};
  r.checks.push_back({"AG^2 = AB GB", std::abs(ag * ag - ab * gb) / (ab * ab), kRelLimit});
  r.checks.push_back({"G between A and B", std::abs(ag + gb - ab) / ab, kRelLimit});
  return r;
}

MacroResult double_side(Machine& m, Names outs, Args args) {
  constexpr const char* kName = "double_side";
  require_outputs(outs, 1, 1, kName);
  const std::string& c = name_arg(args, 0, kName);
  const std::string& U = name_arg(args, 1, kName);
  const std::string& V = name_arg(args, 2, kName);
  const std::string pb = perp_bisector(m, m.hidden("line"), U, V);
  m.intersect_one(outs[0], pb, c, nearest(U));
  const Point w = pt(m, outs[0]);
  const double du = distance(w, pt(m, U));
  const double dv = distance(w, pt(m, V));
  return {{outs[0]}, {}, {{"arc midpoint equidistant", rel_residual(du, dv), kRelLimit}}};
}

MacroResult inscribe_regular(Machine& m, Names outs, Args args) {
  constexpr const char* kName = "inscribe_regular";
  const long long n = count_arg(args, 0, kName);
  const std::string& c = name_arg(args, 1, kName);
  if (n < 3) throw DomainError("inscribe_regular: n must be at least 3");
  if (!has_inscribe_construction(n)) {
    throw NotConstructible(
        "inscribe_regular: no construction for n = " + std::to_string(n) +
        (is_constructible_ngon(n) ? " (constructible per is_constructible_ngon, but not in the macro library)"
                                  : " (is_constructible_ngon(" + std::to_string(n) + ") is false)"));
  }
  const std::vector<std::string> names = expand_names(outs, static_cast<std::size_t>(n), kName);
  const std::string O = m.center_of(c);
  const std::string Q = point_on_circle(m, c);

  long long odd = n;
  int doublings = 0;
  while (odd % 2 == 0) {
    odd /= 2;
    ++doublings;
  }
  // chord = pair of points at the side length of the base polygon.
  std::pair<std::string, std::string> chord;
  auto golden_chord = [&] {
    const std::string g = m.hidden("golden");
    m.call("golden_section", {g}, {O, Q});
    return std::pair{O, g};  // side of the decagon
  };
  if (odd == 1) {
    const std::string q2 = m.intersect_one(m.hidden("pt"), m.line_of(O, Q), c, farthest(Q));
    const std::string pb = perp_bisector(m, m.hidden("line"), Q, q2);
    const std::vector<Point> cand = m.peek_intersection(pb, c);
    const Point o = pt(m, O), q = pt(m, Q);
    const std::size_t idx = cross(q - o, cand[1] - o) > cross(q - o, cand[0] - o) ? 1 : 0;
    chord = {Q, m.intersect_one(m.hidden("vertex"), pb, c, pick(idx))};
    doublings -= 2;
  } else if (odd == 3) {
    chord = {O, Q};  // hexagon
    if (doublings == 0) {
      const std::string h1 = step_ccw(m, m.hidden("hex"), Q, c, O, Q);
      chord = {Q, step_ccw(m, m.hidden("hex"), h1, c, O, Q)};
    } else {
      doublings -= 1;
    }
  } else if (odd == 5) {
    chord = golden_chord();
    if (doublings == 0) {
      const std::string d1 = step_ccw(m, m.hidden("dec"), Q, c, chord.first, chord.second);
      chord = {Q, step_ccw(m, m.hidden("dec"), d1, c, chord.first, chord.second)};
    } else {
      doublings -= 1;
    }
  } else {
    // 1/15 of the circle = 1/6 - 1/10.
    const auto dec = golden_chord();
    const std::string h1 = step_ccw(m, m.hidden("hex"), Q, c, O, Q);
    const std::string d1 = step_ccw(m, m.hidden("dec"), Q, c, dec.first, dec.second);
    chord = {d1, h1};
  }
  for (int i = 0; i < doublings; ++i) {
    std::string u = chord.first;
    std::string v = chord.second;
    if (u != Q) {
      v = step_ccw(m, m.hidden("vertex"), Q, c, u, v);
      u = Q;
    }
    const std::string w = m.hidden("vertex");
    m.call("double_side", {w}, {c, u, v});
    chord = {u, w};
  }

  m.intersect_one(names[0], m.line_of(O, Q), c, nearest(Q));
  for (std::size_t i = 1; i < names.size(); ++i) {
    step_ccw(m, names[i], names[i - 1], c, chord.first, chord.second);
  }

  MacroResult r{names, {}, {}};
  const Circle& circ = m.workspace().circle_like(c);
  const double want = regular_side(n, circ.radius);
  double worst = 0.0;
  double worst_on = 0.0;
  for (std::size_t i = 0; i < names.size(); ++i) {
    const Point p = pt(m, names[i]);
    const Point q = pt(m, names[(i + 1) % names.size()]);
    worst = std::max(worst, rel_residual(distance(p, q), want));
    worst_on = std::max(worst_on, std::abs(distance(p, circ.center) - circ.radius) / circ.radius);
  }
  r.checks.push_back({"sides equal 2R sin(pi/n)", worst, kRelLimit});
  r.checks.push_back({"vertices on the circle", worst_on, kRelLimit});
  return r;
}

MacroResult tangents_from_point(Machine& m, Names outs, Args args) {
  constexpr const char* kName = "tangents_from_point";
  const std::string& P = name_arg(args, 0, kName);
  const std::string& c = name_arg(args, 1, kName);
  const Circle& circ = m.workspace().circle_like(c);
  const std::string O = m.center_of(c);
  const double d = distance(pt(m, P), circ.center);
  const Tolerance tol = m.tolerance();
  MacroResult r;
  if (std::abs(d - circ.radius) <= tol.band(circ.radius)) {
    const std::vector<std::string> names = expand_names(outs, 1, kName);
    erect(m, names[0], P, m.line_of(O, P));
    r.outputs = names;
  } else if (d < circ.radius) {
    throw Infeasible("tangents_from_point: '" + P + "' lies inside '" + c + "'");
  } else {
    const std::vector<std::string> names = expand_names(outs, 2, kName);
    const std::vector<std::string> touch = touch_points(m, P, c);
    if (touch.size() != 2) throw Error("tangents_from_point: expected two points of contact");
    for (std::size_t i = 0; i < 2; ++i) m.line(names[i], P, touch[i]);
    r.outputs = names;
    r.checks.push_back({"tangent lengths equal",
                        rel_residual(distance(pt(m, P), pt(m, touch[0])),
                                     distance(pt(m, P), pt(m, touch[1]))),
                        kRelLimit});
  }
  for (const auto& name : r.outputs) r.checks.push_back(line_touches(m, name, circ, name));
  return r;
}

MacroResult common_tangents(Machine& m, Names outs, Args args) {
  constexpr const char* kName = "common_tangents";
  std::string big = name_arg(args, 0, kName);
  std::string small = name_arg(args, 1, kName);
  const Tolerance tol = m.tolerance();
  const CircleRelation rel = classify_circles(m.workspace().circle_like(big),
                                              m.workspace().circle_like(small), tol);
  if (m.workspace().circle_like(small).radius > m.workspace().circle_like(big).radius) {
    std::swap(big, small);
  }
  const Circle c1 = m.workspace().circle_like(big);
  const Circle c2 = m.workspace().circle_like(small);
  const std::string O1 = m.center_of(big);
  const std::string O2 = m.center_of(small);

  // Tangents are built as hidden lines first, then bound to output names.
  std::vector<std::pair<std::string, std::string>> built;  // (line, tag)
  auto tangent_at_contact = [&](const std::string& contact, const std::string& radial,
                                const char* tag) {
    built.emplace_back(erect(m, m.hidden("tangent"), contact, radial), tag);
  };

  if (rel == CircleRelation::kInternalTangent) {
    const std::string t = m.intersect_one(m.hidden("contact"), big, small);
    tangent_at_contact(t, m.line_of(O1, O2), "external");
  } else if (rel != CircleRelation::kConcentric && rel != CircleRelation::kInternalDisjoint) {
    const std::string centers = m.line_of(O1, O2);
    const auto [s0, s1] = m.radius_pair(small);
    if (std::abs(c1.radius - c2.radius) <= tol.band(c1.radius)) {
      // Equal radii: the external tangents run parallel to the line of centers.
      const std::string e1 = erect(m, m.hidden("line"), O1, centers);
      const std::string a1 = m.hidden("pt");
      const std::string a2 = m.hidden("pt");
      m.intersect({a1, a2}, e1, big);
      for (const auto& a : {a1, a2}) {
        built.emplace_back(parallel(m, m.hidden("tangent"), a, centers), "external");
      }
    } else {
      // Circle about O1 of radius R - r; tangents from O2 to it are shifted
      // external tangents.
      const std::string q = m.intersect_one(m.hidden("pt"), centers, big, nearest(O2));
      const std::string kq = m.hidden("circ");
      m.circle_radius_of(kq, q, s0, s1);
      const std::string y = m.intersect_one(m.hidden("pt"), kq, centers, nearest(O1));
      const std::string aux = m.hidden("circ");
      m.circle(aux, O1, y);
      for (const auto& t : touch_points(m, O2, aux)) {
        const std::string radial = m.line_of(O1, t);
        const std::string a = m.intersect_one(m.hidden("pt"), radial, big, nearest(t));
        tangent_at_contact(a, radial, "external");
      }
    }
    if (rel == CircleRelation::kExternalTangent) {
      const std::string t = m.intersect_one(m.hidden("contact"), big, small);
      tangent_at_contact(t, centers, "internal");
    } else if (rel == CircleRelation::kExternalDisjoint) {
      const std::string q = m.intersect_one(m.hidden("pt"), centers, big, nearest(O2));
      const std::string kq = m.hidden("circ");
      m.circle_radius_of(kq, q, s0, s1);
      const std::string z = m.intersect_one(m.hidden("pt"), kq, centers, farthest(O1));
      const std::string aux = m.hidden("circ");
      m.circle(aux, O1, z);  // radius R + r
      for (const auto& t : touch_points(m, O2, aux)) {
        const std::string radial = m.line_of(O1, t);
        const std::string a = m.intersect_one(m.hidden("pt"), radial, big, nearest(t));
        tangent_at_contact(a, radial, "internal");
      }
    }
  }

  MacroResult r;
  if (built.empty()) {
    return r;  // no common tangent: concentric or one circle inside the other
  }
  const std::vector<std::string> names = expand_names(outs, built.size(), kName);
  for (std::size_t i = 0; i < built.size(); ++i) {
    const Entry& e = m.workspace().entry(built[i].first);
    m.line(names[i], e.sources.at(0), e.sources.at(1));
    m.annotate(names[i], built[i].second);
    r.outputs.push_back(names[i]);
    r.tags.push_back(built[i].second);
    r.checks.push_back(line_touches(m, names[i], c1, names[i]));
    r.checks.push_back(line_touches(m, names[i], c2, names[i]));
  }
  return r;
}

MacroResult arc_containing_angle(Machine& m, Names outs, Args args) {
  constexpr const char* kName = "arc_containing_angle";
  require_outputs(outs, 1, 2, kName);
  const std::string& A = name_arg(args, 0, kName);
  const std::string& B = name_arg(args, 1, kName);
  const double deg = number_arg(args, 2, kName);
  if (!(deg > 0.0 && deg < 180.0)) {
    throw DegenerateInput("arc_containing_angle: the angle must lie strictly between 0 and 180 degrees");
  }
  const Point a = pt(m, A), b = pt(m, B);
  if (distance(a, b) <= m.tolerance().abs_eps()) throw DegenerateInput("arc_containing_angle: A = B");
  const double alpha = AngleMeasure::from_degrees(deg).radians();
  // The given angle, laid off clockwise from AB at A: AD is then the tangent.
  const Vec2 u = b - a;
  const std::string D = m.hidden("given_angle");
  m.free_point(D, a + Vec2{std::cos(-alpha) * u.x - std::sin(-alpha) * u.y,
                           std::sin(-alpha) * u.x + std::cos(-alpha) * u.y});
  const std::string normal = erect(m, m.hidden("line"), A, m.line_of(A, D));
  const std::string pb = perp_bisector(m, m.hidden("line"), A, B);
  const std::string O = m.intersect_one(out_or_hidden(m, outs, 1, "center"), normal, pb);
  m.arc(outs[0], O, B, A);

  MacroResult r{{outs.begin(), outs.end()}, {}, {}};
  const Arc& arc = std::get<Arc>(m.workspace().entry(outs[0]).value);
  double worst = 0.0;
  for (int i = 1; i <= 10; ++i) {
    const Point c = arc_point(arc, i / 11.0);
    worst = std::max(worst, std::abs(angle_at(a, c, b) - alpha));
  }
  r.checks.push_back({"inscribed angle on sampled arc points", worst, kArcAngleLimit});
  return r;
}

std::vector<MacroDef> build_library() {
  return {
      {"triangle_from_sides", "A, B, C = triangle_from_sides(a, b, c)", 3, 3, triangle_from_sides},
      {"copy_angle", "l[, F] = copy_angle(A, O, B, P, Q)", 5, 5, copy_angle},
      {"bisect_angle", "l[, E] = bisect_angle(A, O, B)", 3, 3, bisect_angle},
      {"erect_perpendicular", "l = erect_perpendicular(C, line)", 2, 2, erect_perpendicular},
      {"drop_perpendicular", "l[, F] = drop_perpendicular(A, line)", 2, 2, drop_perpendicular},
      {"perpendicular_bisector", "l[, M] = perpendicular_bisector(A, B)", 2, 2,
       perpendicular_bisector},
      {"parallel_through", "l = parallel_through(M, line)", 2, 2, parallel_through},
      {"divide_segment", "P = divide_segment(A, B, n)", 3, 3, divide_segment},
      {"divide_segment_ratio", "P = divide_segment_ratio(A, B, w1, w2, ...)", 4, -1,
       divide_segment_ratio},
      {"fourth_proportional", "O, X = fourth_proportional(a, b, c)", 3, 3, fourth_proportional},
      {"geometric_mean", "C, D = geometric_mean(a, b)", 2, 2, geometric_mean},
      {"geometric_mean_chord", "A, D = geometric_mean_chord(a, b)", 2, 2, geometric_mean_chord},
      {"golden_section", "G = golden_section(A, B)", 2, 2, golden_section},
      {"double_side", "W = double_side(circle, U, V)", 3, 3, double_side},
      {"inscribe_regular", "P = inscribe_regular(n, circle)", 2, 2, inscribe_regular},
      {"tangents_from_point", "t = tangents_from_point(P, circle)", 2, 2, tangents_from_point},
      {"common_tangents", "t = common_tangents(c1, c2)", 2, 2, common_tangents},
      {"arc_containing_angle", "a[, O] = arc_containing_angle(A, B, degrees)", 3, 3,
       arc_containing_angle},
  };
}

}  // namespace

const std::vector<MacroDef>& macro_library() {
  static const std::vector<MacroDef> library = build_library();
  return library;
}

const MacroDef* find_macro(std::string_view name) {
  for (const MacroDef& def : macro_library()) {
    if (def.name == name) return &def;
  }
  return nullptr;
}

}  // namespace euclid
