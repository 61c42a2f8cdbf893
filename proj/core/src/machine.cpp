#include "euclid/machine.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include "euclid/error.hpp"
#include "euclid/io.hpp"
#include "euclid/svg.hpp"

namespace euclid {

namespace {

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(12);
  os << v;
  return os.str();
}

// Pops the macro stack even when expansion throws.
class StackGuard {
 public:
  StackGuard(std::vector<std::string>& stack, std::string name) : stack_(stack) {
    stack_.push_back(std::move(name));
  }
  ~StackGuard() { stack_.pop_back(); }
  StackGuard(const StackGuard&) = delete;
  StackGuard& operator=(const StackGuard&) = delete;

 private:
  std::vector<std::string>& stack_;
};

// Same exception type, message prefixed with the script line.
[[noreturn]] void rethrow_at(int line) {
  const std::string at = "line " + std::to_string(line) + ": ";
  try {
    throw;
  } catch (const ParseError&) {
    throw;
  } catch (const AssertionFailed& e) {
    throw AssertionFailed(at + e.what(), e.measured(), e.expected());
  } catch (const Infeasible& e) {
    throw Infeasible(at + e.what());
  } catch (const NotConstructible& e) {
    throw NotConstructible(at + e.what());
  } catch (const DegenerateInput& e) {
    throw DegenerateInput(at + e.what());
  } catch (const DomainError& e) {
    throw DomainError(at + e.what());
  } catch (const UnresolvedName& e) {
    throw UnresolvedName(at + e.what());
  } catch (const Error& e) {
    throw Error(at + e.what());
  }
}

}  // namespace

double evaluate_expr(const Expr& e, const Workspace& ws) {
  switch (e.kind) {
    case Expr::Kind::kNumber: return e.number;
    case Expr::Kind::kDist: return distance(ws.point(e.names[0]), ws.point(e.names[1]));
    case Expr::Kind::kAngle:
      return angle_at(ws.point(e.names[0]), ws.point(e.names[1]), ws.point(e.names[2])) * 180.0 /
             std::numbers::pi;
    case Expr::Kind::kRadius: return ws.circle_like(e.names[0]).radius;
    case Expr::Kind::kNeg: return -evaluate_expr(e.args[0], ws);
    case Expr::Kind::kAdd: return evaluate_expr(e.args[0], ws) + evaluate_expr(e.args[1], ws);
    case Expr::Kind::kSub: return evaluate_expr(e.args[0], ws) - evaluate_expr(e.args[1], ws);
    case Expr::Kind::kMul: return evaluate_expr(e.args[0], ws) * evaluate_expr(e.args[1], ws);
    case Expr::Kind::kDiv: {
      const double d = evaluate_expr(e.args[1], ws);
      if (d == 0.0) throw DomainError("division by zero in expression");
      return evaluate_expr(e.args[0], ws) / d;
    }
    case Expr::Kind::kSqrt: {
      const double v = evaluate_expr(e.args[0], ws);
      if (v < 0.0) throw DomainError("sqrt of a negative value in expression");
      return std::sqrt(v);
    }
  }
  return 0.0;
}

Machine::Machine(Tolerance tol) : ws_(tol) {}

void Machine::define(std::string name, Object value, std::vector<std::string> sources,
                     Instruction instr) {
  ws_.define(Entry{std::move(name), std::move(value), std::move(sources), {}});
  std::string origin;
  for (const auto& m : macro_stack_) {
    if (!origin.empty()) origin += '/';
    origin += m;
  }
  ws_.record(TraceEntry{std::move(instr), std::move(origin), line_});
}

void Machine::free_point(const std::string& name, Point p) {
  if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
    throw DomainError("point '" + name + "' has non-finite coordinates");
  }
  define(name, p, {}, FreePoint{name, p.x, p.y});
}

void Machine::line(const std::string& name, const std::string& p, const std::string& q) {
  const Line l = line_through(ws_.point(p), ws_.point(q), tolerance());
  define(name, l, {p, q}, LineThrough{name, p, q});
}

void Machine::circle(const std::string& name, const std::string& center,
                     const std::string& through) {
  const Point c = ws_.point(center);
  const double r = distance(c, ws_.point(through));
  if (r <= tolerance().abs_eps()) {
    throw DegenerateInput("circle '" + name + "' has zero radius");
  }
  define(name, Circle{c, r}, {center, through}, CircleCenterThrough{name, center, through});
}

void Machine::circle_radius_of(const std::string& name, const std::string& center,
                               const std::string& p, const std::string& q) {
  const Point c = ws_.point(center);
  const double r = distance(ws_.point(p), ws_.point(q));
  if (r <= tolerance().abs_eps()) {
    throw DegenerateInput("circle '" + name + "' has zero radius");
  }
  define(name, Circle{c, r}, {center, p, q}, CircleCenterRadiusOf{name, center, p, q});
}

void Machine::arc(const std::string& name, const std::string& center, const std::string& from,
                  const std::string& to) {
  const Point c = ws_.point(center);
  const Point a = ws_.point(from);
  const Point b = ws_.point(to);
  const double r = distance(c, a);
  if (r <= tolerance().abs_eps()) throw DegenerateInput("arc '" + name + "' has zero radius");
  if (std::abs(distance(c, b) - r) > tolerance().band(r)) {
    throw DomainError("arc '" + name + "': end point is not on the circle through the start");
  }
  define(name, arc_between(Circle{c, r}, a, b), {center, from, to},
         ArcThrough{name, center, from, to});
}

std::vector<Point> Machine::peek_intersection(std::string_view a, std::string_view b) const {
  const Entry& ea = ws_.entry(a);
  const Entry& eb = ws_.entry(b);
  const Tolerance tol = tolerance();
  if (std::holds_alternative<Point>(ea.value) || std::holds_alternative<Point>(eb.value)) {
    throw DomainError("cannot intersect a point ('" + std::string(a) + "', '" + std::string(b) + "')");
  }
  std::vector<Point> pts;
  const auto* la = std::get_if<Line>(&ea.value);
  const auto* lb = std::get_if<Line>(&eb.value);
  if (la && lb) {
    const LineIntersection r = intersect_line_line(*la, *lb, tol);
    if (std::holds_alternative<Coincident>(r)) {
      throw DegenerateInput("lines '" + std::string(a) + "' and '" + std::string(b) + "' coincide");
    }
    if (const auto* p = std::get_if<Point>(&r)) pts.push_back(*p);
    return pts;
  }
  if (la || lb) {
    const Line& l = la ? *la : *lb;
    pts = intersect_line_circle(l, la ? ws_.circle_like(b) : ws_.circle_like(a), tol);
  } else {
    pts = intersect_circle_circle(ws_.circle_like(a), ws_.circle_like(b), tol).points;
  }
  // Arcs keep only the points inside their sweep.
  for (const Entry* e : {&ea, &eb}) {
    const auto* arc = std::get_if<Arc>(&e->value);
    if (arc == nullptr) continue;
    const double tol_rad = tol.band(arc->circle.radius) / arc->circle.radius;
    std::erase_if(pts, [&](const Point& p) {
      const Vec2 v = p - arc->circle.center;
      return !arc_contains_angle(*arc, std::atan2(v.y, v.x), tol_rad);
    });
  }
  return pts;
}

std::vector<std::string> Machine::intersect(std::vector<std::string> names, const std::string& a,
                                            const std::string& b, Selector selector) {
  if (names.empty()) throw Error("intersect needs at least one name");
  const std::vector<Point> pts = peek_intersection(a, b);
  if (pts.empty()) {
    throw Infeasible("'" + a + "' and '" + b + "' do not intersect");
  }
  std::vector<Point> chosen;
  switch (selector.kind) {
    case Selector::Kind::kBoth:
      if (names.size() != pts.size()) {
        throw Infeasible("'" + a + "' and '" + b + "' meet in " + std::to_string(pts.size()) +
                         " point(s) but " + std::to_string(names.size()) +
                         " name(s) were given; add a selector");
      }
      chosen = pts;
      break;
    case Selector::Kind::kFirst:
    case Selector::Kind::kSecond: {
      const std::size_t idx = selector.kind == Selector::Kind::kFirst ? 0 : 1;
      if (idx >= pts.size()) {
        throw Infeasible("'" + a + "' and '" + b + "' meet in a single point");
      }
      chosen = {pts[idx]};
      break;
    }
    case Selector::Kind::kNearest:
    case Selector::Kind::kFarthest: {
      const Point ref = ws_.point(selector.reference);
      const bool nearest = selector.kind == Selector::Kind::kNearest;
      std::size_t best = 0;
      for (std::size_t i = 1; i < pts.size(); ++i) {
        const double di = distance(pts[i], ref);
        const double db = distance(pts[best], ref);
        if (nearest ? di < db : di > db) best = i;
      }
      chosen = {pts[best]};
      break;
    }
  }
  if (selector.kind != Selector::Kind::kBoth && names.size() != 1) {
    throw Error("a selector picks one point; give exactly one name");
  }
  // Only the first defined name carries the instruction in the trace.
  const Intersect instr{names, a, b, selector};
  for (std::size_t i = 0; i < names.size(); ++i) {
    ws_.define(Entry{names[i], chosen[i], {a, b}, {}});
  }
  std::string origin;
  for (const auto& m : macro_stack_) {
    if (!origin.empty()) origin += '/';
    origin += m;
  }
  ws_.record(TraceEntry{instr, std::move(origin), line_});
  return names;
}

std::string Machine::intersect_one(const std::string& name, const std::string& a,
                                   const std::string& b, Selector selector) {
  return intersect({name}, a, b, std::move(selector)).front();
}

std::string Machine::hidden(std::string_view tag) {
  return "_" + std::to_string(++hidden_counter_) + "_" + std::string(tag);
}

std::string Machine::line_of(const std::string& p, const std::string& q) {
  for (const Entry& e : ws_.entries()) {
    if (std::holds_alternative<Line>(e.value) && e.sources.size() == 2 &&
        ((e.sources[0] == p && e.sources[1] == q) || (e.sources[0] == q && e.sources[1] == p))) {
      return e.name;
    }
  }
  std::string name = hidden("line");
  line(name, p, q);
  return name;
}

std::pair<std::string, std::string> Machine::radius_pair(std::string_view circle) const {
  const Entry& e = ws_.entry(circle);
  if (!std::holds_alternative<Circle>(e.value) && !std::holds_alternative<Arc>(e.value)) {
    throw DomainError("'" + std::string(circle) + "' is not a circle");
  }
  if (e.sources.size() == 3 && std::holds_alternative<Circle>(e.value)) {
    return {e.sources[1], e.sources[2]};
  }
  return {e.sources[0], e.sources[1]};
}

std::string Machine::center_of(std::string_view circle) const {
  const Entry& e = ws_.entry(circle);
  if (!std::holds_alternative<Circle>(e.value) && !std::holds_alternative<Arc>(e.value)) {
    throw DomainError("'" + std::string(circle) + "' is not a circle");
  }
  return e.sources.at(0);
}

void Machine::annotate(std::string_view name, std::string note) {
  ws_.set_note(name, std::move(note));
}

double Machine::evaluate(const Expr& e) const { return evaluate_expr(e, ws_); }

void Machine::run_assert(const Assert& a) {
  const Tolerance tol = a.tolerance ? Tolerance(*a.tolerance, *a.tolerance) : tolerance();
  const std::string text = format_instruction(a);
  double measured = 0.0;
  double expected = 0.0;
  bool ok = false;
  if (const auto* cmp = std::get_if<Comparison>(&a.predicate)) {
    measured = evaluate(cmp->lhs);
    expected = evaluate(cmp->rhs);
    ok = tol.equal(measured, expected);
  } else if (const auto* on = std::get_if<OnPredicate>(&a.predicate)) {
    const Point p = ws_.point(on->point);
    const Entry& obj = ws_.entry(on->object);
    double limit = tol.abs_eps();
    if (const auto* l = std::get_if<Line>(&obj.value)) {
      measured = std::abs(l->residual(p));
    } else if (const auto* c = std::get_if<Circle>(&obj.value)) {
      measured = std::abs(distance(p, c->center) - c->radius);
      limit = tol.band(c->radius);
    } else if (const auto* arc = std::get_if<Arc>(&obj.value)) {
      measured = std::abs(distance(p, arc->circle.center) - arc->circle.radius);
      limit = tol.band(arc->circle.radius);
      const Vec2 v = p - arc->circle.center;
      if (!arc_contains_angle(*arc, std::atan2(v.y, v.x), limit / arc->circle.radius)) {
        measured = std::max(measured, distance(p, arc_point(*arc, 0.0)));
      }
    } else {
      measured = distance(p, std::get<Point>(obj.value));
    }
    ok = measured <= limit;
    expected = 0.0;
  } else if (const auto* par = std::get_if<ParallelPredicate>(&a.predicate)) {
    const Line& l1 = ws_.line(par->l1);
    const Line& l2 = ws_.line(par->l2);
    measured = std::abs(cross(l1.direction(), l2.direction()));
    ok = measured <= (a.tolerance ? *a.tolerance : ws_.base_tolerance().abs_eps());
  } else {
    const auto& pp = std::get<PerpPredicate>(a.predicate);
    const Line& l1 = ws_.line(pp.l1);
    const Line& l2 = ws_.line(pp.l2);
    measured = std::abs(dot(l1.direction(), l2.direction()));
    ok = measured <= (a.tolerance ? *a.tolerance : ws_.base_tolerance().abs_eps());
  }
  if (!ok) {
    throw AssertionFailed("assertion failed: " + text + " (measured " + fmt(measured) +
                              ", expected " + fmt(expected) + ")",
                          measured, expected);
  }
  ws_.record(TraceEntry{a, {}, line_});
}

void Machine::execute(const Statement& stmt) {
  line_ = stmt.line;
  struct Visitor {
    Machine& m;
    void operator()(const FreePoint& p) const { m.free_point(p.name, {p.x, p.y}); }
    void operator()(const LineThrough& l) const { m.line(l.name, l.p, l.q); }
    void operator()(const CircleCenterThrough& c) const { m.circle(c.name, c.center, c.through); }
    void operator()(const CircleCenterRadiusOf& c) const {
      m.circle_radius_of(c.name, c.center, c.p, c.q);
    }
    void operator()(const ArcThrough& a) const { m.arc(a.name, a.center, a.from, a.to); }
    void operator()(const Intersect& in) const {
      m.intersect(in.names, in.first, in.second, in.selector);
    }
    void operator()(const MacroCall& call) const {
      std::vector<MacroValue> args;
      for (const MacroArg& arg : call.args) {
        if (const auto* name = std::get_if<std::string>(&arg)) {
          args.emplace_back(*name);
        } else {
          args.emplace_back(evaluate_expr(std::get<Expr>(arg), m.ws_));
        }
      }
      m.call(call.macro, call.outputs, std::move(args));
    }
    void operator()(const Assert& a) const { m.run_assert(a); }
    void operator()(const Emit& e) const {
      if (m.emit_) {
        m.emit_(e, m.ws_);
      } else {
        write_file_atomic(e.path, render_svg(m.ws_));
      }
      m.ws_.record(TraceEntry{e, {}, m.line_});
    }
  };
  std::visit(Visitor{*this}, stmt.instruction);
}

MacroResult Machine::call(std::string_view macro, std::vector<std::string> outputs,
                          std::vector<MacroValue> args) {
  const MacroDef* def = find_macro(macro);
  if (def == nullptr) throw UnresolvedName("unknown macro '" + std::string(macro) + "'");
  const auto n = static_cast<int>(args.size());
  if (n < def->min_args || (def->max_args >= 0 && n > def->max_args)) {
    throw Error("macro '" + def->name + "' takes " + std::to_string(def->min_args) +
                (def->max_args == def->min_args
                     ? ""
                     : (def->max_args < 0 ? "+" : ".." + std::to_string(def->max_args))) +
                " argument(s), got " + std::to_string(n) + "; usage: " + def->usage);
  }
  if (outputs.empty()) throw Error("macro '" + def->name + "' needs at least one output name");
  MacroResult result;
  {
    StackGuard guard(macro_stack_, def->name);
    result = def->expand(*this, outputs, args);
  }
  for (const PostconditionCheck& c : result.checks) {
    if (enforce_postconditions_ && !c.ok()) {
      throw AssertionFailed("macro '" + def->name + "' postcondition failed: " + c.description +
                   " (residual " + fmt(c.residual) + " > " + fmt(c.limit) + ")",
                            c.residual, c.limit);
    }
  }
  return result;
}

Workspace run_program(const ConstructionProgram& program, const RunOptions& options) {
  Machine m(options.tolerance);
  if (options.emit) {
    m.set_emit_handler(options.emit);
  } else {
    const std::filesystem::path base = options.base_dir;
    m.set_emit_handler([base](const Emit& e, const Workspace& ws) {
      std::filesystem::path p(e.path);
      if (p.is_relative()) p = base / p;
      write_file_atomic(p, render_svg(ws));
    });
  }
  for (const Statement& s : program.statements) {
    try {
      m.execute(s);
    } catch (const Error&) {
      rethrow_at(s.line);
    }
  }
  return std::move(m.workspace());
}

Workspace run_script(std::string_view text, const RunOptions& options) {
  return run_program(parse_program(text), options);
}

}  // namespace euclid
