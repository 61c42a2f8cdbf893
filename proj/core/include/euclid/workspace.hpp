#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <variant>
#include <vector>

#include "euclid/plane.hpp"
#include "euclid/program.hpp"
#include "euclid/tolerance.hpp"

namespace euclid {

using Object = std::variant<Point, Line, Circle, Arc>;

std::string_view kind_name(const Object& obj);

// One named object. `sources` lists the names the object was built from:
// a line keeps the two points it passes through, a circle its center followed
// by either the through-point or the pair whose distance is the radius.
struct Entry {
  std::string name;
  Object value;
  std::vector<std::string> sources;
  std::string note;
};

// One executed primitive instruction. `macro` names the macro whose
// expansion emitted it (empty for top-level statements).
struct TraceEntry {
  Instruction instruction;
  std::string macro;
  int line = 0;
};

// Insertion-ordered store of named construction objects.
class Workspace {
 public:
  explicit Workspace(Tolerance tol = default_tolerance()) : base_tol_(tol) {}

  bool contains(std::string_view name) const;
  const Entry& entry(std::string_view name) const;
  const Point& point(std::string_view name) const;
  const Line& line(std::string_view name) const;
  const Circle& circle(std::string_view name) const;
  // Circle of a circle or of an arc.
  const Circle& circle_like(std::string_view name) const;

  // Throws Error if `name` is already bound.
  void define(Entry entry);

  void set_note(std::string_view name, std::string note);

  void record(TraceEntry step) { trace_.push_back(std::move(step)); }

  const std::vector<Entry>& entries() const { return entries_; }
  const std::vector<TraceEntry>& trace() const { return trace_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  // Distance between the first two points defined, or 1 if there are fewer
  // than two (or they coincide). Tolerances are expressed in this unit.
  double unit() const;
  const Tolerance& base_tolerance() const { return base_tol_; }
  Tolerance tolerance() const { return base_tol_.scaled(unit()); }

  friend bool operator==(const Workspace& a, const Workspace& b);

 private:
  Tolerance base_tol_;
  std::vector<Entry> entries_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<TraceEntry> trace_;
};

bool operator==(const Entry& a, const Entry& b);

// Same names, sources and bit-identical values in the same order; notes and
// traces are ignored. A replayed trace satisfies this against its original.
bool same_geometry(const Workspace& a, const Workspace& b);

}  // namespace euclid
