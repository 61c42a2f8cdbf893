#pragma once

#include <filesystem>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "euclid/program.hpp"
#include "euclid/workspace.hpp"

namespace euclid {

// A machine-checked macro postcondition: holds when residual <= limit.
struct PostconditionCheck {
  std::string description;
  double residual = 0.0;
  double limit = 0.0;

  bool ok() const { return residual <= limit; }
};

struct MacroResult {
  std::vector<std::string> outputs;  // names bound, in output order
  std::vector<std::string> tags;     // per output, may be empty
  std::vector<PostconditionCheck> checks;
};

using MacroValue = std::variant<std::string, double>;

class Machine;

struct MacroDef {
  std::string name;
  std::string usage;  // e.g. "A, B, C = triangle_from_sides(a, b, c)"
  int min_args = 0;
  int max_args = 0;  // -1: unbounded
  std::function<MacroResult(Machine&, std::span<const std::string> outputs,
                            std::span<const MacroValue> args)>
      expand;
};

const std::vector<MacroDef>& macro_library();
const MacroDef* find_macro(std::string_view name);

// Executes construction instructions against a Workspace, recording every
// primitive it performs. Macros expand into primitives on this machine.
class Machine {
 public:
  using EmitHandler = std::function<void(const Emit&, const Workspace&)>;

  explicit Machine(Tolerance tol = default_tolerance());

  void set_emit_handler(EmitHandler handler) { emit_ = std::move(handler); }
  // When off, call() returns failed postcondition checks instead of throwing
  // AssertionFailed.
  void set_enforce_postconditions(bool on) { enforce_postconditions_ = on; }

  void execute(const Statement& stmt);

  MacroResult call(std::string_view macro, std::vector<std::string> outputs,
                   std::vector<MacroValue> args);

  // Primitive steps. Each validates, defines the object and records it.
  void free_point(const std::string& name, Point p);
  void line(const std::string& name, const std::string& p, const std::string& q);
  void circle(const std::string& name, const std::string& center, const std::string& through);
  void circle_radius_of(const std::string& name, const std::string& center,
                        const std::string& p, const std::string& q);
  void arc(const std::string& name, const std::string& center, const std::string& from,
           const std::string& to);
  std::vector<std::string> intersect(std::vector<std::string> names, const std::string& a,
                                     const std::string& b, Selector selector = {});
  // Single-name convenience over intersect().
  std::string intersect_one(const std::string& name, const std::string& a,
                            const std::string& b, Selector selector = {});

  // Intersection points of two objects in (x, y) order, without binding.
  std::vector<Point> peek_intersection(std::string_view a, std::string_view b) const;

  // Fresh name for a macro-internal object.
  std::string hidden(std::string_view tag);
  // Name of the line through p and q, creating it (hidden) on first use.
  std::string line_of(const std::string& p, const std::string& q);
  // Two points whose distance is the radius of the named circle.
  std::pair<std::string, std::string> radius_pair(std::string_view circle) const;
  std::string center_of(std::string_view circle) const;

  void annotate(std::string_view name, std::string note);

  const Workspace& workspace() const { return ws_; }
  Workspace& workspace() { return ws_; }
  Tolerance tolerance() const { return ws_.tolerance(); }

  // Line of the statement being executed (0 outside run_program).
  void set_current_line(int line) { line_ = line; }

 private:
  void define(std::string name, Object value, std::vector<std::string> sources,
              Instruction instr);
  void run_assert(const Assert& a);
  double evaluate(const Expr& e) const;

  Workspace ws_;
  EmitHandler emit_;
  std::vector<std::string> macro_stack_;
  std::size_t hidden_counter_ = 0;
  int line_ = 0;
  bool enforce_postconditions_ = true;
};

double evaluate_expr(const Expr& e, const Workspace& ws);

struct RunOptions {
  Tolerance tolerance = default_tolerance();
  // Relative `emit` paths resolve against this directory.
  std::filesystem::path base_dir = ".";
  // Replaces the default file writer when set.
  Machine::EmitHandler emit;
};

// Runs a program to completion. Errors thrown by a statement are rethrown
// with its line number prefixed to the message (same exception type).
Workspace run_program(const ConstructionProgram& program, const RunOptions& options = {});
Workspace run_script(std::string_view text, const RunOptions& options = {});

}  // namespace euclid
