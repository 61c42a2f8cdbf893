#include "euclid/svg.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <sstream>

namespace euclid {

namespace {

struct Box {
  double x0 = std::numeric_limits<double>::infinity();
  double y0 = std::numeric_limits<double>::infinity();
  double x1 = -std::numeric_limits<double>::infinity();
  double y1 = -std::numeric_limits<double>::infinity();

  void add(Point p) {
    x0 = std::min(x0, p.x);
    y0 = std::min(y0, p.y);
    x1 = std::max(x1, p.x);
    y1 = std::max(y1, p.y);
  }
  bool valid() const { return x0 <= x1 && y0 <= y1; }
};

bool is_hidden(const std::string& name) { return !name.empty() && name[0] == '_'; }

// Shortest round-trip text, so output is byte-stable across runs.
std::string num(double v) {
  if (v == 0.0) v = 0.0;  // drop the sign of -0
  char buf[32];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, end);
}

std::string escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    switch (ch) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += ch;
    }
  }
  return out;
}

// Liang-Barsky style clip of an infinite line to the box.
std::optional<std::pair<Point, Point>> clip(const Line& l, const Box& b) {
  const Point p0 = l.anchor();
  const Vec2 d = l.direction();
  double t0 = -std::numeric_limits<double>::infinity();
  double t1 = std::numeric_limits<double>::infinity();
  const auto slab = [&](double p, double dv, double lo, double hi) {
    if (std::abs(dv) < 1e-300) return p >= lo && p <= hi;
    double a = (lo - p) / dv;
    double c = (hi - p) / dv;
    if (a > c) std::swap(a, c);
    t0 = std::max(t0, a);
    t1 = std::min(t1, c);
    return t0 <= t1;
  };
  if (!slab(p0.x, d.x, b.x0, b.x1) || !slab(p0.y, d.y, b.y0, b.y1)) return std::nullopt;
  return std::pair{p0 + t0 * d, p0 + t1 * d};
}

}  // namespace

std::string render_svg(const Workspace& ws, const SvgStyle& style) {
  Box box;
  for (const Entry& e : ws.entries()) {
    if (!style.show_hidden && is_hidden(e.name)) continue;
    if (const auto* p = std::get_if<Point>(&e.value)) {
      box.add(*p);
    } else if (const auto* c = std::get_if<Circle>(&e.value)) {
      box.add(c->center - Vec2{c->radius, c->radius});
      box.add(c->center + Vec2{c->radius, c->radius});
    } else if (const auto* a = std::get_if<Arc>(&e.value)) {
      for (int i = 0; i <= 32; ++i) box.add(arc_point(*a, i / 32.0));
    }
  }
  if (!box.valid()) box = Box{-1.0, -1.0, 1.0, 1.0};
  double w = box.x1 - box.x0;
  double h = box.y1 - box.y0;
  const double span = std::max({w, h, 1e-9});
  if (w < 1e-12 * span + 1e-300) { box.x0 -= 0.5 * span; box.x1 += 0.5 * span; }
  if (h < 1e-12 * span + 1e-300) { box.y0 -= 0.5 * span; box.y1 += 0.5 * span; }
  w = box.x1 - box.x0;
  h = box.y1 - box.y0;
  box.x0 -= 0.05 * w;
  box.x1 += 0.05 * w;
  box.y0 -= 0.05 * h;
  box.y1 += 0.05 * h;
  w = box.x1 - box.x0;
  h = box.y1 - box.y0;

  // World units per pixel; strokes and labels are sized in pixels.
  const double px = w / style.width_px;
  const double height_px = style.width_px * h / w;
  // Flip y: world (x, y) -> svg (x, -y).
  const auto X = [](Point p) { return num(p.x); };
  const auto Y = [](Point p) { return num(-p.y); };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(style.width_px)
      << "\" height=\"" << num(std::round(height_px)) << "\" viewBox=\"" << num(box.x0) << ' '
      << num(-box.y1) << ' ' << num(w) << ' ' << num(h) << "\">\n";
  out << "<g fill=\"none\" stroke=\"black\" stroke-width=\"" << num(px) << "\">\n";
  for (const Entry& e : ws.entries()) {
    if (!style.show_hidden && is_hidden(e.name)) continue;
    const std::string id = " id=\"" + escape(e.name) + "\"";
    const std::string hid = is_hidden(e.name) ? " stroke-opacity=\"0.3\"" : "";
    if (const auto* l = std::get_if<Line>(&e.value)) {
      if (const auto seg = clip(*l, box)) {
        out << "<line" << id << hid << " x1=\"" << X(seg->first) << "\" y1=\"" << Y(seg->first)
            << "\" x2=\"" << X(seg->second) << "\" y2=\"" << Y(seg->second) << "\"/>\n";
      }
    } else if (const auto* c = std::get_if<Circle>(&e.value)) {
      out << "<circle" << id << hid << " cx=\"" << X(c->center) << "\" cy=\"" << Y(c->center)
          << "\" r=\"" << num(c->radius) << "\"/>\n";
    } else if (const auto* a = std::get_if<Arc>(&e.value)) {
      const Point s = arc_point(*a, 0.0);
      const Point t = arc_point(*a, 1.0);
      const double sweep = a->sweep.radians();
      if (sweep >= 2.0 * std::numbers::pi - 1e-12) {
        out << "<circle" << id << hid << " cx=\"" << X(a->circle.center) << "\" cy=\""
            << Y(a->circle.center) << "\" r=\"" << num(a->circle.radius) << "\"/>\n";
      } else {
        // Counter-clockwise in world coordinates is clockwise (sweep-flag 0) after the flip.
        out << "<path" << id << hid << " d=\"M " << X(s) << ' ' << Y(s) << " A "
            << num(a->circle.radius) << ' ' << num(a->circle.radius) << " 0 "
            << (sweep > std::numbers::pi ? 1 : 0) << " 0 " << X(t) << ' ' << Y(t) << "\"/>\n";
      }
    }
  }
  out << "</g>\n<g fill=\"black\" font-family=\"sans-serif\" font-size=\""
      << num(style.font_px * px) << "\">\n";
  for (const Entry& e : ws.entries()) {
    if (!style.show_hidden && is_hidden(e.name)) continue;
    if (const auto* p = std::get_if<Point>(&e.value)) {
      out << "<circle cx=\"" << X(*p) << "\" cy=\"" << Y(*p) << "\" r=\""
          << num(style.point_radius_px * px) << "\"/>\n";
      out << "<text x=\"" << num(p->x + 3.0 * px) << "\" y=\"" << num(-p->y - 3.0 * px)
          << "\">" << escape(e.name) << "</text>\n";
    }
  }
  out << "</g>\n</svg>\n";
  return out.str();
}

}  // namespace euclid
