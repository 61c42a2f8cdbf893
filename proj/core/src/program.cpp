#include "euclid/program.hpp"

#include <charconv>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <string>
#include <system_error>

#include "euclid/error.hpp"

namespace euclid {

namespace {

enum class Tok { kIdent, kNumber, kString, kPunct, kEnd };

struct Token {
  Tok kind = Tok::kEnd;
  std::string text;
  double number = 0.0;
  int column = 0;  // 1-based
};

bool ident_start(unsigned char c) {
  return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_' || c >= 0x80;
}
bool ident_char(unsigned char c) {
  return ident_start(c) || (c >= '0' && c <= '9') || c == '\'';
}

std::vector<Token> tokenize(std::string_view line, int line_no) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    const unsigned char c = static_cast<unsigned char>(line[i]);
    const int col = static_cast<int>(i) + 1;
    if (c == ' ' || c == '\t' || c == '\r') {
      ++i;
    } else if (c == '#') {
      break;
    } else if (ident_start(c)) {
      std::size_t j = i;
      while (j < line.size() && ident_char(static_cast<unsigned char>(line[j]))) ++j;
      out.push_back({Tok::kIdent, std::string(line.substr(i, j - i)), 0.0, col});
      i = j;
    } else if ((c >= '0' && c <= '9') || c == '.') {
      double v = 0.0;
      const char* begin = line.data() + i;
      auto [ptr, ec] = std::from_chars(begin, line.data() + line.size(), v);
      if (ec != std::errc()) throw ParseError(line_no, col, "malformed number");
      const auto len = static_cast<std::size_t>(ptr - begin);
      out.push_back({Tok::kNumber, std::string(line.substr(i, len)), v, col});
      i += len;
    } else if (c == '"') {
      std::string s;
      std::size_t j = i + 1;
      bool closed = false;
      while (j < line.size()) {
        if (line[j] == '\\' && j + 1 < line.size()) {
          s.push_back(line[j + 1]);
          j += 2;
        } else if (line[j] == '"') {
          closed = true;
          ++j;
          break;
        } else {
          s.push_back(line[j++]);
        }
      }
      if (!closed) throw ParseError(line_no, col, "unterminated string");
      out.push_back({Tok::kString, std::move(s), 0.0, col});
      i = j;
    } else if (c == '=' && i + 1 < line.size() && line[i + 1] == '=') {
      out.push_back({Tok::kPunct, "==", 0.0, col});
      i += 2;
    } else if (std::string_view("(),=+-*/").find(static_cast<char>(c)) != std::string_view::npos) {
      out.push_back({Tok::kPunct, std::string(1, static_cast<char>(c)), 0.0, col});
      ++i;
    } else {
      throw ParseError(line_no, col, std::string("unexpected character '") +
                                         static_cast<char>(c) + "'");
    }
  }
  out.push_back({Tok::kEnd, "", 0.0, static_cast<int>(line.size()) + 1});
  return out;
}

class LineParser {
 public:
  LineParser(std::vector<Token> toks, int line_no) : toks_(std::move(toks)), line_(line_no) {}

  Instruction statement() {
    const std::string kw = ident("a statement keyword");
    Instruction out = dispatch(kw);
    if (peek().kind != Tok::kEnd) fail("unexpected trailing '" + peek().text + "'");
    return out;
  }

 private:
  Instruction dispatch(const std::string& kw) {
    if (kw == "point") return point_stmt();
    if (kw == "points") return points_stmt();
    if (kw == "line") return line_stmt();
    if (kw == "circle") return circle_stmt();
    if (kw == "arc") return arc_stmt();
    if (kw == "macro") return macro_stmt();
    if (kw == "assert") return assert_stmt();
    if (kw == "emit") return emit_stmt();
    fail_at(toks_[0], "unknown statement '" + kw + "'");
  }

  Instruction point_stmt() {
    std::string name = ident("a point name");
    punct("=");
    if (peek_punct("(")) {
      punct("(");
      const double x = constant_expr();
      punct(",");
      const double y = constant_expr();
      punct(")");
      return FreePoint{std::move(name), x, y};
    }
    return intersect_tail({std::move(name)});
  }

  Instruction points_stmt() {
    std::vector<std::string> names{ident("a point name")};
    while (peek_punct(",")) {
      punct(",");
      names.push_back(ident("a point name"));
    }
    punct("=");
    return intersect_tail(std::move(names));
  }

  Instruction intersect_tail(std::vector<std::string> names) {
    keyword("intersect");
    punct("(");
    Intersect in;
    in.names = std::move(names);
    in.first = ident("an object name");
    punct(",");
    in.second = ident("an object name");
    if (peek_punct(",")) {
      punct(",");
      const Token& t = peek();
      const std::string sel = ident("a selector");
      if (sel == "both") {
        in.selector.kind = Selector::Kind::kBoth;
      } else if (sel == "first") {
        in.selector.kind = Selector::Kind::kFirst;
      } else if (sel == "second") {
        in.selector.kind = Selector::Kind::kSecond;
      } else if (sel == "nearest" || sel == "farthest") {
        in.selector.kind = sel == "nearest" ? Selector::Kind::kNearest : Selector::Kind::kFarthest;
        punct("=");
        in.selector.reference = ident("a point name");
      } else {
        fail_at(t, "unknown selector '" + sel + "'");
      }
    }
    punct(")");
    return in;
  }

  Instruction line_stmt() {
    std::string name = ident("a line name");
    punct("=");
    keyword("line");
    punct("(");
    std::string p = ident("a point name");
    punct(",");
    std::string q = ident("a point name");
    punct(")");
    return LineThrough{std::move(name), std::move(p), std::move(q)};
  }

  Instruction circle_stmt() {
    std::string name = ident("a circle name");
    punct("=");
    keyword("circle");
    punct("(");
    std::string center = ident("a center point");
    punct(",");
    std::string second = ident("a point name or r_of");
    if (second == "r_of" && peek_punct("(")) {
      punct("(");
      std::string p = ident("a point name");
      punct(",");
      std::string q = ident("a point name");
      punct(")");
      punct(")");
      return CircleCenterRadiusOf{std::move(name), std::move(center), std::move(p), std::move(q)};
    }
    punct(")");
    return CircleCenterThrough{std::move(name), std::move(center), std::move(second)};
  }

  Instruction arc_stmt() {
    std::string name = ident("an arc name");
    punct("=");
    keyword("arc");
    punct("(");
    ArcThrough a{std::move(name), ident("a center point"), {}, {}};
    punct(",");
    a.from = ident("a point name");
    punct(",");
    a.to = ident("a point name");
    punct(")");
    return a;
  }

  Instruction macro_stmt() {
    MacroCall call;
    call.outputs.push_back(ident("an output name"));
    while (peek_punct(",")) {
      punct(",");
      call.outputs.push_back(ident("an output name"));
    }
    punct("=");
    call.macro = ident("a macro name");
    punct("(");
    if (!peek_punct(")")) {
      call.args.push_back(macro_arg());
      while (peek_punct(",")) {
        punct(",");
        call.args.push_back(macro_arg());
      }
    }
    punct(")");
    return call;
  }

  MacroArg macro_arg() {
    const Token& t = peek();
    const Token& next = toks_[pos_ + 1 < toks_.size() ? pos_ + 1 : pos_];
    const bool bare = t.kind == Tok::kIdent && t.text != "pi" && next.kind == Tok::kPunct &&
                      (next.text == "," || next.text == ")");
    if (bare) return ident("an argument");
    Expr e = expr();
    if (!e.is_constant()) fail_at(t, "macro arguments must be names or constant expressions");
    return e;
  }

  Instruction assert_stmt() {
    Assert a;
    const Token& t = peek();
    if (t.kind == Tok::kIdent && (t.text == "on" || t.text == "parallel" || t.text == "perp")) {
      const std::string kind = ident("a predicate");
      punct("(");
      std::string x = ident("an object name");
      punct(",");
      std::string y = ident("an object name");
      punct(")");
      if (kind == "on") {
        a.predicate = OnPredicate{std::move(x), std::move(y)};
      } else if (kind == "parallel") {
        a.predicate = ParallelPredicate{std::move(x), std::move(y)};
      } else {
        a.predicate = PerpPredicate{std::move(x), std::move(y)};
      }
    } else {
      Comparison cmp;
      cmp.lhs = expr();
      punct("==");
      cmp.rhs = expr();
      a.predicate = std::move(cmp);
    }
    if (peek().kind == Tok::kIdent && peek().text == "tol") {
      ++pos_;
      const Token& tt = peek();
      const double tol = constant_expr();
      if (!(tol > 0.0)) fail_at(tt, "tolerance must be > 0");
      a.tolerance = tol;
    }
    return a;
  }

  Instruction emit_stmt() {
    const Token& t = peek();
    std::string format = ident("an output format");
    if (format != "svg") fail_at(t, "unsupported emit format '" + format + "'");
    if (peek().kind != Tok::kString) fail("expected a quoted path");
    std::string path = toks_[pos_++].text;
    return Emit{std::move(format), std::move(path)};
  }

  // expr := term {(+|-) term}
  Expr expr() {
    Expr lhs = term();
    while (peek_punct("+") || peek_punct("-")) {
      const bool add = toks_[pos_++].text == "+";
      Expr rhs = term();
      lhs = Expr{add ? Expr::Kind::kAdd : Expr::Kind::kSub, 0.0, {}, {std::move(lhs), std::move(rhs)}};
    }
    return lhs;
  }

  Expr term() {
    Expr lhs = factor();
    while (peek_punct("*") || peek_punct("/")) {
      const bool mul = toks_[pos_++].text == "*";
      Expr rhs = factor();
      lhs = Expr{mul ? Expr::Kind::kMul : Expr::Kind::kDiv, 0.0, {}, {std::move(lhs), std::move(rhs)}};
    }
    return lhs;
  }

  Expr factor() {
    const Token& t = peek();
    if (peek_punct("-")) {
      ++pos_;
      return Expr{Expr::Kind::kNeg, 0.0, {}, {factor()}};
    }
    if (peek_punct("(")) {
      ++pos_;
      Expr e = expr();
      punct(")");
      return e;
    }
    if (t.kind == Tok::kNumber) {
      ++pos_;
      return Expr::constant(t.number);
    }
    if (t.kind != Tok::kIdent) fail("expected an expression");
    ++pos_;
    if (t.text == "pi") return Expr::constant(std::numbers::pi);
    if (t.text == "sqrt") {
      punct("(");
      Expr e = expr();
      punct(")");
      return Expr{Expr::Kind::kSqrt, 0.0, {}, {std::move(e)}};
    }
    Expr::Kind kind;
    std::size_t arity;
    if (t.text == "dist") {
      kind = Expr::Kind::kDist;
      arity = 2;
    } else if (t.text == "angle") {
      kind = Expr::Kind::kAngle;
      arity = 3;
    } else if (t.text == "radius") {
      kind = Expr::Kind::kRadius;
      arity = 1;
    } else {
      fail_at(t, "unknown function '" + t.text + "'");
    }
    punct("(");
    Expr e{kind, 0.0, {}, {}};
    for (std::size_t i = 0; i < arity; ++i) {
      if (i > 0) punct(",");
      e.names.push_back(ident("an object name"));
    }
    punct(")");
    return e;
  }

  double constant_expr() {
    const Token& t = peek();
    Expr e = expr();
    if (!e.is_constant()) fail_at(t, "expected a constant expression");
    // Constant trees only use arithmetic and sqrt; fold them here.
    return fold(e, t);
  }

  double fold(const Expr& e, const Token& at) {
    switch (e.kind) {
      case Expr::Kind::kNumber: return e.number;
      case Expr::Kind::kNeg: return -fold(e.args[0], at);
      case Expr::Kind::kAdd: return fold(e.args[0], at) + fold(e.args[1], at);
      case Expr::Kind::kSub: return fold(e.args[0], at) - fold(e.args[1], at);
      case Expr::Kind::kMul: return fold(e.args[0], at) * fold(e.args[1], at);
      case Expr::Kind::kDiv: return fold(e.args[0], at) / fold(e.args[1], at);
      case Expr::Kind::kSqrt: {
        const double v = fold(e.args[0], at);
        if (v < 0.0) fail_at(at, "sqrt of a negative constant");
        return std::sqrt(v);
      }
      default: fail_at(at, "expected a constant expression");
    }
  }

  const Token& peek() const { return toks_[pos_]; }
  bool peek_punct(std::string_view p) const {
    return toks_[pos_].kind == Tok::kPunct && toks_[pos_].text == p;
  }

  std::string ident(const char* what) {
    const Token& t = peek();
    if (t.kind != Tok::kIdent) fail(std::string("expected ") + what);
    ++pos_;
    return t.text;
  }
  void keyword(std::string_view kw) {
    const Token& t = peek();
    if (t.kind != Tok::kIdent || t.text != kw) fail("expected '" + std::string(kw) + "'");
    ++pos_;
  }
  void punct(std::string_view p) {
    if (!peek_punct(p)) fail("expected '" + std::string(p) + "'");
    ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const { fail_at(peek(), what); }
  [[noreturn]] void fail_at(const Token& t, const std::string& what) const {
    throw ParseError(line_, t.column, what);
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  int line_;
};

std::string num(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  std::string s(buf, ptr);
  return s;
}

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

std::string join(const std::vector<std::string>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += v[i];
  }
  return out;
}

}  // namespace

bool Expr::is_constant() const {
  switch (kind) {
    case Kind::kNumber: return true;
    case Kind::kDist:
    case Kind::kAngle:
    case Kind::kRadius: return false;
    default:
      for (const Expr& a : args) {
        if (!a.is_constant()) return false;
      }
      return true;
  }
}

ConstructionProgram parse_program(std::string_view text) {
  ConstructionProgram prog;
  int line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    std::string_view line = text.substr(start, end - start);
    if (line_no == 1 && line.starts_with("\xEF\xBB\xBF")) line.remove_prefix(3);
    auto toks = tokenize(line, line_no);
    if (toks.size() > 1) {
      LineParser p(std::move(toks), line_no);
      prog.statements.push_back({p.statement(), line_no});
    }
    if (end == text.size()) break;
    start = end + 1;
  }
  return prog;
}

std::string format_expr(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::kNumber: return num(e.number);
    case Expr::Kind::kDist: return "dist(" + join(e.names) + ")";
    case Expr::Kind::kAngle: return "angle(" + join(e.names) + ")";
    case Expr::Kind::kRadius: return "radius(" + join(e.names) + ")";
    case Expr::Kind::kNeg: return "-(" + format_expr(e.args[0]) + ")";
    case Expr::Kind::kSqrt: return "sqrt(" + format_expr(e.args[0]) + ")";
    case Expr::Kind::kAdd: return "(" + format_expr(e.args[0]) + " + " + format_expr(e.args[1]) + ")";
    case Expr::Kind::kSub: return "(" + format_expr(e.args[0]) + " - " + format_expr(e.args[1]) + ")";
    case Expr::Kind::kMul: return "(" + format_expr(e.args[0]) + " * " + format_expr(e.args[1]) + ")";
    case Expr::Kind::kDiv: return "(" + format_expr(e.args[0]) + " / " + format_expr(e.args[1]) + ")";
  }
  return {};
}

std::string format_instruction(const Instruction& instr) {
  struct Formatter {
    std::string operator()(const FreePoint& p) const {
      return "point " + p.name + " = (" + num(p.x) + ", " + num(p.y) + ")";
    }
    std::string operator()(const LineThrough& l) const {
      return "line " + l.name + " = line(" + l.p + ", " + l.q + ")";
    }
    std::string operator()(const CircleCenterThrough& c) const {
      return "circle " + c.name + " = circle(" + c.center + ", " + c.through + ")";
    }
    std::string operator()(const CircleCenterRadiusOf& c) const {
      return "circle " + c.name + " = circle(" + c.center + ", r_of(" + c.p + ", " + c.q + "))";
    }
    std::string operator()(const ArcThrough& a) const {
      return "arc " + a.name + " = arc(" + a.center + ", " + a.from + ", " + a.to + ")";
    }
    std::string operator()(const Intersect& in) const {
      std::string s = (in.names.size() == 1 ? "point " : "points ") + join(in.names) +
                      " = intersect(" + in.first + ", " + in.second;
      switch (in.selector.kind) {
        case Selector::Kind::kBoth: break;
        case Selector::Kind::kFirst: s += ", first"; break;
        case Selector::Kind::kSecond: s += ", second"; break;
        case Selector::Kind::kNearest: s += ", nearest=" + in.selector.reference; break;
        case Selector::Kind::kFarthest: s += ", farthest=" + in.selector.reference; break;
      }
      return s + ")";
    }
    std::string operator()(const MacroCall& m) const {
      std::string s = "macro " + join(m.outputs) + " = " + m.macro + "(";
      for (std::size_t i = 0; i < m.args.size(); ++i) {
        if (i) s += ", ";
        if (const auto* name = std::get_if<std::string>(&m.args[i])) {
          s += *name;
        } else {
          s += format_expr(std::get<Expr>(m.args[i]));
        }
      }
      return s + ")";
    }
    std::string operator()(const Assert& a) const {
      std::string s = "assert ";
      if (const auto* c = std::get_if<Comparison>(&a.predicate)) {
        s += format_expr(c->lhs) + " == " + format_expr(c->rhs);
      } else if (const auto* on = std::get_if<OnPredicate>(&a.predicate)) {
        s += "on(" + on->point + ", " + on->object + ")";
      } else if (const auto* par = std::get_if<ParallelPredicate>(&a.predicate)) {
        s += "parallel(" + par->l1 + ", " + par->l2 + ")";
      } else {
        const auto& pp = std::get<PerpPredicate>(a.predicate);
        s += "perp(" + pp.l1 + ", " + pp.l2 + ")";
      }
      if (a.tolerance) s += " tol " + num(*a.tolerance);
      return s;
    }
    std::string operator()(const Emit& e) const { return "emit " + e.format + " " + quoted(e.path); }
  };
  return std::visit(Formatter{}, instr);
}

}  // namespace euclid
