#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace euclid {

// Numeric expression used by asserts and numeric macro arguments.
struct Expr {
  enum class Kind { kNumber, kDist, kAngle, kRadius, kNeg, kAdd, kSub, kMul, kDiv, kSqrt };

  Kind kind = Kind::kNumber;
  double number = 0.0;
  std::vector<std::string> names;  // operands of dist/angle/radius
  std::vector<Expr> args;          // operands of unary/binary nodes

  static Expr constant(double v) { return Expr{Kind::kNumber, v, {}, {}}; }
  bool is_constant() const;
};

struct FreePoint {
  std::string name;
  double x = 0.0;
  double y = 0.0;
};

struct LineThrough {
  std::string name;
  std::string p;
  std::string q;
};

// Circle with center `center` passing through `through`.
struct CircleCenterThrough {
  std::string name;
  std::string center;
  std::string through;
};

// Compass transfer: circle about `center` with radius |pq|.
struct CircleCenterRadiusOf {
  std::string name;
  std::string center;
  std::string p;
  std::string q;
};

// Counter-clockwise arc about `center` from `from` to `to` (radius |center from|).
struct ArcThrough {
  std::string name;
  std::string center;
  std::string from;
  std::string to;
};

struct Selector {
  enum class Kind { kBoth, kFirst, kSecond, kNearest, kFarthest };
  Kind kind = Kind::kBoth;
  std::string reference;  // for kNearest / kFarthest
};

struct Intersect {
  std::vector<std::string> names;
  std::string first;
  std::string second;
  Selector selector;
};

using MacroArg = std::variant<std::string, Expr>;

struct MacroCall {
  std::vector<std::string> outputs;
  std::string macro;
  std::vector<MacroArg> args;
};

struct Comparison {
  Expr lhs;
  Expr rhs;
};
struct OnPredicate {
  std::string point;
  std::string object;
};
struct ParallelPredicate {
  std::string l1;
  std::string l2;
};
struct PerpPredicate {
  std::string l1;
  std::string l2;
};
using Predicate = std::variant<Comparison, OnPredicate, ParallelPredicate, PerpPredicate>;

struct Assert {
  Predicate predicate;
  std::optional<double> tolerance;
};

struct Emit {
  std::string format;
  std::string path;
};

using Instruction = std::variant<FreePoint, LineThrough, CircleCenterThrough,
                                 CircleCenterRadiusOf, ArcThrough, Intersect, MacroCall,
                                 Assert, Emit>;

struct Statement {
  Instruction instruction;
  int line = 0;  // 1-based source line, 0 when synthesized
};

struct ConstructionProgram {
  std::vector<Statement> statements;
};

// Parses the line-oriented script format. Throws ParseError with the
// 1-based line and column of the offending token.
ConstructionProgram parse_program(std::string_view text);

// Renders one instruction in script syntax; parse_program accepts the output.
std::string format_instruction(const Instruction& instr);
std::string format_expr(const Expr& e);

}  // namespace euclid
