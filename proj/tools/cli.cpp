#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "euclid/error.hpp"
#include "euclid/io.hpp"
#include "euclid/machine.hpp"
#include "euclid/measure.hpp"
#include "euclid/mensura.hpp"
#include "euclid/solids.hpp"
#include "euclid/svg.hpp"
#include "euclid/verify.hpp"
#include "json.hpp"

namespace euclid::cli {

namespace {

using json = nlohmann::ordered_json;
namespace fs = std::filesystem;

// 12 significant digits, C locale, no trailing noise.
std::string num(double v, int digits = 12) {
  if (v == 0.0) v = 0.0;
  char buf[64];
  const auto r = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, digits);
  return std::string(buf, r.ptr);
}

// Round-trip representation for values meant to be re-read.
std::string exact(double v) {
  if (v == 0.0) v = 0.0;
  char buf[64];
  const auto r = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, r.ptr);
}

double parse_double(const std::string& text, const std::string& what) {
  double v = 0.0;
  const char* end = text.data() + text.size();
  const auto r = std::from_chars(text.data(), end, v);
  if (r.ec != std::errc() || r.ptr != end || !std::isfinite(v)) {
    throw DomainError(what + ": '" + text + "' is not a number");
  }
  return v;
}

// Named constants, p/q fractions, sqrt(x) and plain numbers.
double parse_value(const std::string& text) {
  if (text == "pi") return std::numbers::pi;
  if (text == "e") return std::numbers::e;
  if (text == "phi") return std::numbers::phi;
  if (text == "sqrt2") return std::numbers::sqrt2;
  if (text == "sqrt3") return std::numbers::sqrt3;
  if (text.rfind("sqrt(", 0) == 0 && text.back() == ')') {
    const double x = parse_double(text.substr(5, text.size() - 6), "value");
    if (x < 0.0) throw DomainError("value: sqrt of a negative number");
    return std::sqrt(x);
  }
  if (const auto slash = text.find('/'); slash != std::string::npos) {
    const double p = parse_double(text.substr(0, slash), "value");
    const double q = parse_double(text.substr(slash + 1), "value");
    if (q == 0.0) throw DomainError("value: zero denominator");
    return p / q;
  }
  return parse_double(text, "value");
}

Params parse_params(const std::vector<std::string>& words, std::size_t first) {
  Params params;
  for (std::size_t i = first; i < words.size(); ++i) {
    const auto eq = words[i].find('=');
    if (eq == std::string::npos || eq == 0) {
      throw DomainError("expected key=value, got '" + words[i] + "'");
    }
    const std::string key = words[i].substr(0, eq);
    if (params.count(key)) throw DomainError("parameter '" + key + "' given twice");
    params[key] = parse_double(words[i].substr(eq + 1), key);
  }
  return params;
}

void write_output(const std::string& path, const std::string& content, std::ostream& out) {
  if (path == "-") {
    out << content;
  } else {
    write_file_atomic(path, content);
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string joined(const std::vector<std::string_view>& items) {
  std::string s;
  for (const auto& i : items) {
    if (!s.empty()) s += ", ";
    s += i;
  }
  return s;
}

// ---- construct ---------------------------------------------------------------

struct ConstructOpts {
  std::string script;
  std::string svg;
  std::string trace;
  std::string format = "text";
  bool show_hidden = false;
};

json object_json(const Entry& e) {
  json j;
  j["name"] = e.name;
  j["kind"] = std::string(kind_name(e.value));
  if (const auto* p = std::get_if<Point>(&e.value)) {
    j["x"] = p->x;
    j["y"] = p->y;
  } else if (const auto* l = std::get_if<Line>(&e.value)) {
    j["a"] = l->a();
    j["b"] = l->b();
    j["c"] = l->c();
  } else if (const auto* c = std::get_if<Circle>(&e.value)) {
    j["cx"] = c->center.x;
    j["cy"] = c->center.y;
    j["r"] = c->radius;
  } else {
    const auto& a = std::get<Arc>(e.value);
    j["cx"] = a.circle.center.x;
    j["cy"] = a.circle.center.y;
    j["r"] = a.circle.radius;
    j["start_deg"] = a.start.degrees();
    j["sweep_deg"] = a.sweep.degrees();
  }
  if (!e.note.empty()) j["note"] = e.note;
  return j;
}

std::string object_text(const Entry& e) {
  std::string s = std::string(kind_name(e.value)) + " " + e.name + " ";
  if (const auto* p = std::get_if<Point>(&e.value)) {
    s += "(" + num(p->x) + ", " + num(p->y) + ")";
  } else if (const auto* l = std::get_if<Line>(&e.value)) {
    s += num(l->a()) + " x + " + num(l->b()) + " y + " + num(l->c()) + " = 0";
  } else if (const auto* c = std::get_if<Circle>(&e.value)) {
    s += "center (" + num(c->center.x) + ", " + num(c->center.y) + ") r " + num(c->radius);
  } else {
    const auto& a = std::get<Arc>(e.value);
    s += "center (" + num(a.circle.center.x) + ", " + num(a.circle.center.y) + ") r " +
         num(a.circle.radius) + " from " + num(a.start.degrees()) + " deg sweep " +
         num(a.sweep.degrees()) + " deg";
  }
  if (!e.note.empty()) s += " [" + e.note + "]";
  return s;
}

std::string trace_text(const Workspace& ws) {
  std::string s;
  for (const TraceEntry& t : ws.trace()) {
    s += format_instruction(t.instruction);
    if (!t.macro.empty() || t.line > 0) {
      s += "  # ";
      if (t.line > 0) s += "line " + std::to_string(t.line);
      if (!t.macro.empty()) s += (t.line > 0 ? ", " : "") + t.macro;
    }
    s += '\n';
  }
  return s;
}

int cmd_construct(const ConstructOpts& o, std::ostream& out) {
  const std::string text = read_file(o.script);
  RunOptions options;
  options.base_dir = fs::path(o.script).parent_path();
  if (options.base_dir.empty()) options.base_dir = ".";
  SvgStyle style;
  style.show_hidden = o.show_hidden;
  options.emit = [&](const Emit& e, const Workspace& ws) {
    fs::path p(e.path);
    if (p.is_relative()) p = options.base_dir / p;
    write_file_atomic(p, render_svg(ws, style));
  };
  const Workspace ws = run_script(text, options);
  if (!o.svg.empty()) write_output(o.svg, render_svg(ws, style), out);
  if (!o.trace.empty()) write_output(o.trace, trace_text(ws), out);

  std::size_t asserts = 0;
  for (const TraceEntry& t : ws.trace()) asserts += std::holds_alternative<Assert>(t.instruction);
  if (o.format == "json") {
    json j;
    j["status"] = "ok";
    j["steps"] = ws.trace().size();
    j["asserts"] = asserts;
    j["objects"] = json::array();
    for (const Entry& e : ws.entries()) {
      if (o.show_hidden || e.name[0] != '_') j["objects"].push_back(object_json(e));
    }
    out << j.dump(2) << '\n';
  } else if (o.trace != "-" && o.svg != "-") {
    out << "ok: " << ws.size() << " objects, " << ws.trace().size() << " steps, " << asserts
        << " asserts passed\n";
    for (const Entry& e : ws.entries()) {
      if (o.show_hidden || e.name[0] != '_') out << object_text(e) << '\n';
    }
  }
  return kOk;
}

// ---- verify --------------------------------------------------------------------

int cmd_verify(const std::string& suite, std::uint64_t seed, std::size_t samples,
               const std::string& format, std::ostream& out) {
  std::vector<std::string_view> names;
  if (suite == "all") {
    names = verify_suite_names();
  } else {
    names.push_back(suite);
  }
  std::vector<SuiteReport> reports;
  for (std::string_view n : names) reports.push_back(run_verify_suite(n, seed, samples));
  bool ok = true;
  if (format == "json") {
    json j = json::array();
    for (const SuiteReport& r : reports) {
      json s;
      s["suite"] = r.suite;
      s["seed"] = r.seed;
      s["pass"] = r.pass();
      s["invariants"] = json::array();
      for (const InvariantResult& i : r.invariants) {
        s["invariants"].push_back({{"name", i.name},
                                   {"samples", i.samples},
                                   {"max_residual", i.max_residual},
                                   {"limit", i.limit},
                                   {"failures", i.failures},
                                   {"pass", i.pass()}});
      }
      ok = ok && r.pass();
      j.push_back(s);
    }
    out << j.dump(2) << '\n';
  } else {
    for (const SuiteReport& r : reports) {
      out << "suite " << r.suite << " (seed " << r.seed << "): " << (r.pass() ? "PASS" : "FAIL")
          << '\n';
      for (const InvariantResult& i : r.invariants) {
        out << "  " << (i.pass() ? "ok  " : "FAIL") << " " << i.name << ": samples " << i.samples
            << ", max residual " << num(i.max_residual, 3) << " (limit " << num(i.limit, 3) << ")";
        if (i.failures) out << ", " << i.failures << " failures";
        out << '\n';
      }
      ok = ok && r.pass();
    }
  }
  return ok ? kOk : kCheckFailed;
}

// ---- tables ------------------------------------------------------------------

int cmd_pi_table(int rounds, bool stabilized, const std::string& backend, std::ostream& out) {
  if (backend == "interval") {
    out << "n,a_n_lo,a_n_hi,p_n_lo,p_n_hi\n";
    for (const auto& r : pi_doubling_table<Interval>(rounds, stabilized)) {
      out << r.n << ',' << exact(r.side.lower()) << ',' << exact(r.side.upper()) << ','
          << exact(r.perimeter.lower()) << ',' << exact(r.perimeter.upper()) << '\n';
    }
    return kOk;
  }
  out << "n,a_n,p_n,pi_est,error_vs_reference\n";
  for (const auto& r : pi_doubling_table<double>(rounds, stabilized)) {
    const double est = 0.5 * r.perimeter;
    out << r.n << ',' << num(r.side) << ',' << num(r.perimeter) << ',' << num(est) << ','
        << num(est - std::numbers::pi, 6) << '\n';
  }
  return kOk;
}

int cmd_cf(const std::string& value, const std::string& a, const std::string& b, int steps,
           double stop_eps, const std::string& format, std::ostream& out) {
  double x = 0.0, y = 1.0;
  if (!value.empty()) {
    if (!a.empty() || !b.empty()) throw DomainError("give either --value or --a/--b");
    x = parse_value(value);
  } else {
    if (a.empty() || b.empty()) throw DomainError("give --value, or both --a and --b");
    x = parse_value(a);
    y = parse_value(b);
  }
  const CFExpansion cf = euclid_on_lengths(x, y, steps, stop_eps);
  const std::vector<Convergent> cs = convergents(cf);
  const double target = x / y;
  if (format == "json") {
    json j;
    j["target"] = target;
    j["quotients"] = cf.quotients;
    j["terminated"] = cf.terminated;
    j["remainder"] = cf.remainder_bound;
    j["convergents"] = json::array();
    for (const Convergent& c : cs) j["convergents"].push_back({{"p", c.p}, {"q", c.q}});
    out << j.dump(2) << '\n';
    return kOk;
  }
  out << "k,quotient,p,q,value,error\n";
  for (std::size_t k = 0; k < cs.size(); ++k) {
    out << k << ',' << cf.quotients[k] << ',' << cs[k].p << ',' << cs[k].q << ','
        << num(cs[k].value(), 15) << ',' << num(cs[k].value() - target, 6) << '\n';
  }
  return kOk;
}

int cmd_solve_triangle(const std::vector<double>& sides, const std::vector<double>& proj,
                       const std::string& format, std::ostream& out) {
  if (!proj.empty()) {
    if (!sides.empty()) throw DomainError("give either three sides or --projections");
    const RightTriangle t = right_triangle_from_projections(proj[0], proj[1]);
    if (format == "json") {
      json j{{"hypotenuse", t.hypotenuse}, {"leg_b", t.leg_b}, {"leg_c", t.leg_c}, {"height", t.height}};
      out << j.dump(2) << '\n';
    } else {
      out << "hypotenuse a  " << num(t.hypotenuse) << '\n'
          << "leg b         " << num(t.leg_b) << '\n'
          << "leg c         " << num(t.leg_c) << '\n'
          << "height h      " << num(t.height) << '\n';
    }
    return kOk;
  }
  if (sides.size() != 3) throw DomainError("solve-triangle needs three sides a b c");
  const TriangleMetrics m = triangle_metrics({sides[0], sides[1], sides[2]});
  const auto pair = [](std::pair<double, double> p) { return json::array({p.first, p.second}); };
  if (format == "json") {
    json j;
    j["sides"] = {m.sides.a, m.sides.b, m.sides.c};
    j["perimeter"] = m.perimeter;
    j["area"] = m.area;
    j["projections_on_a"] = {{"c", m.proj_c_on_a}, {"b", m.proj_b_on_a}};
    j["heights"] = {m.h_a, m.h_b, m.h_c};
    j["medians"] = {m.m_a, m.m_b, m.m_c};
    j["angles_deg"] = {m.angle_a.degrees(), m.angle_b.degrees(), m.angle_c.degrees()};
    j["angle_classes"] = {to_string(m.class_a), to_string(m.class_b), to_string(m.class_c)};
    j["circumradius"] = m.circumradius;
    j["inradius"] = m.inradius;
    j["bisector_splits"] = {pair(m.bisector_a), pair(m.bisector_b), pair(m.bisector_c)};
    out << j.dump(2) << '\n';
    return kOk;
  }
  const auto triple = [](double x, double y, double z) {
    return num(x) + "  " + num(y) + "  " + num(z);
  };
  const auto split = [](std::pair<double, double> p) { return num(p.first) + " : " + num(p.second); };
  out << "sides a b c        " << triple(m.sides.a, m.sides.b, m.sides.c) << '\n'
      << "perimeter          " << num(m.perimeter) << '\n'
      << "area               " << num(m.area) << '\n'
      << "projections on a   c' " << num(m.proj_c_on_a) << "  b' " << num(m.proj_b_on_a) << '\n'
      << "heights            " << triple(m.h_a, m.h_b, m.h_c) << '\n'
      << "medians            " << triple(m.m_a, m.m_b, m.m_c) << '\n'
      << "angles (deg)       " << triple(m.angle_a.degrees(), m.angle_b.degrees(), m.angle_c.degrees())
      << '\n'
      << "angle classes      " << to_string(m.class_a) << "  " << to_string(m.class_b) << "  "
      << to_string(m.class_c) << '\n'
      << "circumradius R     " << num(m.circumradius) << '\n'
      << "inradius r         " << num(m.inradius) << '\n'
      << "bisector from A    " << split(m.bisector_a) << '\n'
      << "bisector from B    " << split(m.bisector_b) << '\n'
      << "bisector from C    " << split(m.bisector_c) << '\n';
  return kOk;
}

json optional_json(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

int cmd_mensurate(const std::vector<std::string>& words, const std::string& method,
                  const std::string& format, std::ostream& out, std::ostream& err) {
  if (words.empty()) throw DomainError("mensurate needs a shape: " + joined(polygon_kinds()) + ", or solid <kind>");
  if (words[0] == "solid") {
    if (words.size() < 2) throw DomainError("mensurate solid needs a kind: " + joined(solid_kinds()));
    const SolidSpec spec = make_solid(words[1], parse_params(words, 2));
    const SolidMeasures m = measure(spec);
    if (m.degenerate) err << "warning: degenerate " << kind_name(spec) << " (limit case)\n";
    json j;
    j["volume"] = optional_json(m.volume);
    j["lateral"] = optional_json(m.lateral);
    j["total"] = optional_json(m.total);
    out << j.dump(2) << '\n';
    return kOk;
  }
  const Params params = parse_params(words, 1);
  double value = 0.0;
  std::string label = words[0] == "arc" ? "length" : "area";
  if (words[0] == "segment") {
    const auto r = params.find("R");
    const auto d = params.find("deg");
    if (r == params.end() || d == params.end() || params.size() != 2) {
      throw DomainError("segment takes R=<radius> deg=<angle>");
    }
    SegmentMethod sm = SegmentMethod::kExact;
    if (method == "approx1") sm = SegmentMethod::kApprox1;
    else if (method == "approx2") sm = SegmentMethod::kApprox2;
    else if (method != "exact") throw DomainError("unknown --method '" + method + "'");
    value = segment_area(r->second, AngleMeasure::from_degrees(d->second), sm);
  } else {
    if (method != "exact") throw DomainError("--method applies to segment only");
    value = polygon_area(words[0], params);
  }
  if (format == "json") {
    json j;
    j[label] = value;
    out << j.dump(2) << '\n';
  } else {
    out << label << ' ' << num(value) << '\n';
  }
  return kOk;
}

int cmd_lantern(double r, double h, std::int64_t m, std::int64_t n, std::int64_t sweep,
                double m_power, std::ostream& out) {
  out << "n,m,S\n";
  const auto m_for = [&](std::int64_t nn) -> std::int64_t {
    if (m > 0) return m;
    const double mm = std::pow(static_cast<double>(nn), m_power);
    if (!(mm >= 1.0) || mm > 9e15) throw DomainError("lantern: m = n^power is out of range");
    return static_cast<std::int64_t>(std::llround(mm));
  };
  const std::int64_t last = sweep > 0 ? sweep : n;
  if (last < n) throw DomainError("--sweep must be at least --n");
  for (std::int64_t k = n; k <= last; ++k) {
    const std::int64_t mk = m_for(k);
    out << k << ',' << mk << ',' << num(schwarz_lantern_area({r, h, mk, k})) << '\n';
  }
  return kOk;
}

int cmd_macros(std::ostream& out) {
  for (const MacroDef& d : macro_library()) out << d.usage << '\n';
  return kOk;
}

}  // namespace

const std::vector<std::string>& help_examples() {
  static const std::vector<std::string> examples = {
      "construct golden_section.euc --trace -",
      "verify angle-sum --seed 7",
      "pi-table --rounds 4",
      "cf --value sqrt2 --steps 4",
      "cf --a 31 --b 9",
      "solve-triangle 3 4 5",
      "solve-triangle --projections 5 7",
      "mensurate rectangle a=3.5 b=4.6",
      "mensurate segment R=1 deg=60 --method approx2",
      "mensurate solid cone R=5 L=13",
      "lantern --R 1 --H 1 --n 4 --sweep 8 --m-power 3",
      "macros",
  };
  return examples;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Ruler-and-compass construction machine and mensuration toolkit", "euclid"};
  app.require_subcommand(1);
  std::string footer = "\nExamples:\n";
  for (const std::string& e : help_examples()) footer += "  euclid " + e + "\n";
  footer +=
      "\nExit status: 0 success, 1 a checked property failed, 2 bad input or infeasible problem.\n"
      "EUCLID_TOLERANCE=\"eps\" or \"abs,rel\" overrides the default tolerance 1e-9.";
  app.footer(footer);

  ConstructOpts con;
  auto* construct = app.add_subcommand("construct", "Run a construction script");
  construct->add_option("script", con.script, "Script file")->required();
  construct->add_option("--svg", con.svg, "Write an SVG of the final figure (- for stdout)");
  construct->add_option("--trace", con.trace, "Write the primitive trace as a script (- for stdout)");
  construct->add_option("--format", con.format, "Summary format")->check(CLI::IsMember({"text", "json"}));
  construct->add_flag("--show-hidden", con.show_hidden, "Include macro-internal objects");

  std::string suite;
  std::uint64_t seed = kDefaultSeed;
  std::size_t samples = kDefaultSamples;
  std::string verify_format = "text";
  auto* verify = app.add_subcommand("verify", "Run a randomized property suite");
  verify->add_option("suite", suite, "Suite name or 'all': " + joined(verify_suite_names()))->required();
  verify->add_option("--seed", seed, "Random seed");
  verify->add_option("--samples", samples, "Samples per suite")->check(CLI::Range(1, 10000000));
  verify->add_option("--format", verify_format, "Report format")->check(CLI::IsMember({"text", "json"}));

  int rounds = 5;
  bool stabilized = false;
  std::string backend = "double";
  auto* pi_table = app.add_subcommand("pi-table", "Perimeters of inscribed polygons by side doubling");
  pi_table->add_option("--rounds", rounds, "Doublings from the hexagon")->check(CLI::Range(0, kMaxPiRounds));
  pi_table->add_flag("--stabilized", stabilized, "Use the cancellation-free recurrence");
  pi_table->add_option("--backend", backend, "Number backend")->check(CLI::IsMember({"double", "interval"}));

  std::string cf_value, cf_a, cf_b, cf_format = "csv";
  int cf_steps = 20;
  double stop_eps = kDefaultStopEps;
  auto* cf = app.add_subcommand("cf", "Euclid's algorithm / continued fraction and convergents");
  cf->add_option("--value", cf_value, "Number: decimal, p/q, sqrt(x), pi, e, phi, sqrt2, sqrt3");
  cf->add_option("--a", cf_a, "First length");
  cf->add_option("--b", cf_b, "Second length");
  cf->add_option("--steps", cf_steps, "Maximum quotients")->check(CLI::Range(1, 64));
  cf->add_option("--stop-eps", stop_eps, "Relative remainder that counts as zero");
  cf->add_option("--format", cf_format, "Output format")->check(CLI::IsMember({"csv", "json"}));

  std::vector<double> sides, projections;
  std::string tri_format = "text";
  auto* solve = app.add_subcommand("solve-triangle", "All metrics of a triangle from its sides");
  solve->add_option("sides", sides, "Sides a b c")->expected(3);
  solve->add_option("--projections", projections, "Right triangle from leg projections b' c'")->expected(2);
  solve->add_option("--format", tri_format, "Output format")->check(CLI::IsMember({"text", "json"}));

  std::vector<std::string> words;
  std::string method = "exact", men_format = "text";
  auto* mensurate = app.add_subcommand("mensurate", "Area of a plane figure, or solid measures as JSON");
  mensurate->add_option("shape", words, "Shape and key=value parameters, or: solid <kind> key=value...")
      ->required();
  mensurate->add_option("--method", method, "Segment formula")->check(CLI::IsMember({"exact", "approx1", "approx2"}));
  mensurate->add_option("--format", men_format, "Output format for plane figures")
      ->check(CLI::IsMember({"text", "json"}));
  mensurate->footer("Plane: " + joined(polygon_kinds()) + "\nSolids: " + joined(solid_kinds()));

  double lr = 1.0, lh = 1.0, m_power = 1.0;
  std::int64_t lm = 0, ln = 3, sweep = 0;
  auto* lantern = app.add_subcommand("lantern", "Schwarz lantern area, one row or a sweep over n");
  lantern->add_option("--R", lr, "Cylinder radius");
  lantern->add_option("--H", lh, "Cylinder height");
  auto* m_opt = lantern->add_option("--m", lm, "Axial slabs (default: n^m-power)")->check(CLI::PositiveNumber);
  lantern->add_option("--n", ln, "Angular divisions")->check(CLI::Range(std::int64_t{3}, std::int64_t{1} << 40));
  lantern->add_option("--sweep", sweep, "Last n of a sweep starting at --n");
  lantern->add_option("--m-power", m_power, "m = n^power when --m is absent")->excludes(m_opt);

  auto* macros = app.add_subcommand("macros", "List the construction macros");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kBadInput;
  }

  try {
    if (construct->parsed()) return cmd_construct(con, out);
    if (verify->parsed()) return cmd_verify(suite, seed, samples, verify_format, out);
    if (pi_table->parsed()) return cmd_pi_table(rounds, stabilized, backend, out);
    if (cf->parsed()) return cmd_cf(cf_value, cf_a, cf_b, cf_steps, stop_eps, cf_format, out);
    if (solve->parsed()) return cmd_solve_triangle(sides, projections, tri_format, out);
    if (mensurate->parsed()) return cmd_mensurate(words, method, men_format, out, err);
    if (lantern->parsed()) return cmd_lantern(lr, lh, lm, ln, sweep, m_power, out);
    if (macros->parsed()) return cmd_macros(out);
  } catch (const AssertionFailed& e) {
    err << "error: " << e.what() << "\n  measured " << exact(e.measured())
        << "\n  expected " << exact(e.expected()) << '\n';
    return kCheckFailed;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  }
  return kBadInput;
}

}  // namespace euclid::cli
