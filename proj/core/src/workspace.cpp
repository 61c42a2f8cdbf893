#include "euclid/workspace.hpp"

#include <bit>
#include <cstdint>

#include "euclid/error.hpp"

namespace euclid {

namespace {

bool same_bits(double a, double b) {
  return std::bit_cast<std::uint64_t>(a) == std::bit_cast<std::uint64_t>(b);
}

bool same_object(const Object& a, const Object& b) {
  if (a.index() != b.index()) return false;
  if (const auto* p = std::get_if<Point>(&a)) {
    const auto& q = std::get<Point>(b);
    return same_bits(p->x, q.x) && same_bits(p->y, q.y);
  }
  if (const auto* l = std::get_if<Line>(&a)) {
    const auto& m = std::get<Line>(b);
    return same_bits(l->a(), m.a()) && same_bits(l->b(), m.b()) && same_bits(l->c(), m.c());
  }
  const auto same_circle = [](const Circle& c, const Circle& d) {
    return same_bits(c.center.x, d.center.x) && same_bits(c.center.y, d.center.y) &&
           same_bits(c.radius, d.radius);
  };
  if (const auto* c = std::get_if<Circle>(&a)) return same_circle(*c, std::get<Circle>(b));
  const auto& x = std::get<Arc>(a);
  const auto& y = std::get<Arc>(b);
  return same_circle(x.circle, y.circle) && same_bits(x.start.radians(), y.start.radians()) &&
         same_bits(x.sweep.radians(), y.sweep.radians());
}

template <typename T>
const T& typed(const Workspace& ws, std::string_view name, const char* what) {
  const Entry& e = ws.entry(name);
  if (const auto* v = std::get_if<T>(&e.value)) return *v;
  throw DomainError("'" + std::string(name) + "' is a " + std::string(kind_name(e.value)) +
                    ", expected a " + what);
}

}  // namespace

std::string_view kind_name(const Object& obj) {
  switch (obj.index()) {
    case 0: return "point";
    case 1: return "line";
    case 2: return "circle";
    default: return "arc";
  }
}

bool Workspace::contains(std::string_view name) const {
  return index_.find(std::string(name)) != index_.end();
}

const Entry& Workspace::entry(std::string_view name) const {
  const auto it = index_.find(std::string(name));
  if (it == index_.end()) throw UnresolvedName("unknown object '" + std::string(name) + "'");
  return entries_[it->second];
}

const Point& Workspace::point(std::string_view name) const {
  return typed<Point>(*this, name, "point");
}
const Line& Workspace::line(std::string_view name) const {
  return typed<Line>(*this, name, "line");
}
const Circle& Workspace::circle(std::string_view name) const {
  return typed<Circle>(*this, name, "circle");
}

const Circle& Workspace::circle_like(std::string_view name) const {
  const Entry& e = entry(name);
  if (const auto* c = std::get_if<Circle>(&e.value)) return *c;
  if (const auto* a = std::get_if<Arc>(&e.value)) return a->circle;
  throw DomainError("'" + std::string(name) + "' is a " + std::string(kind_name(e.value)) +
                    ", expected a circle or arc");
}

void Workspace::define(Entry entry) {
  if (entry.name.empty()) throw Error("object name must not be empty");
  if (contains(entry.name)) throw Error("name '" + entry.name + "' is already defined");
  index_.emplace(entry.name, entries_.size());
  entries_.push_back(std::move(entry));
}

void Workspace::set_note(std::string_view name, std::string note) {
  const auto it = index_.find(std::string(name));
  if (it == index_.end()) throw UnresolvedName("unknown object '" + std::string(name) + "'");
  entries_[it->second].note = std::move(note);
}

double Workspace::unit() const {
  const Point* first = nullptr;
  for (const Entry& e : entries_) {
    const auto* p = std::get_if<Point>(&e.value);
    if (p == nullptr) continue;
    if (first == nullptr) {
      first = p;
      continue;
    }
    const double d = distance(*first, *p);
    return d > 0.0 ? d : 1.0;
  }
  return 1.0;
}

bool operator==(const Entry& a, const Entry& b) {
  return a.name == b.name && a.sources == b.sources && a.note == b.note &&
         same_object(a.value, b.value);
}

bool same_geometry(const Workspace& a, const Workspace& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const Entry& x = a.entries()[i];
    const Entry& y = b.entries()[i];
    if (x.name != y.name || x.sources != y.sources || !same_object(x.value, y.value)) return false;
  }
  return true;
}

bool operator==(const Workspace& a, const Workspace& b) {
  if (a.entries_ != b.entries_ || a.trace_.size() != b.trace_.size()) return false;
  for (std::size_t i = 0; i < a.trace_.size(); ++i) {
    if (a.trace_[i].macro != b.trace_[i].macro ||
        format_instruction(a.trace_[i].instruction) !=
            format_instruction(b.trace_[i].instruction)) {
      return false;
    }
  }
  return true;
}

}  // namespace euclid
