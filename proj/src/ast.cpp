#include "gcmonad/ast.hpp"

namespace gcmonad::lang {

const char* kind_name(SourceError::Kind k) {
  switch (k) {
    case SourceError::Kind::Syntax:
      return "syntax";
    case SourceError::Kind::UnboundVariable:
      return "unbound-variable";
    case SourceError::Kind::Type:
      return "type";
  }
  return "?";
}

SourceError::SourceError(Kind kind, Pos pos, std::string message)
    : std::runtime_error(std::to_string(pos.line) + ":" + std::to_string(pos.column) + ": " + kind_name(kind) +
                         " error: " + message),
      kind_(kind),
      pos_(pos),
      message_(std::move(message)) {}

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

bool same_ptr(const ExprPtr& a, const ExprPtr& b) { return a == b || (a && b && *a == *b); }
bool same_ptr(const ValuePtr& a, const ValuePtr& b) { return a == b || (a && b && *a == *b); }

}  // namespace

bool operator==(const Value& a, const Value& b) {
  if (a.node.index() != b.node.index()) return false;
  return std::visit(
      overloaded{
          [&](const Literal& x) { return x.value == std::get<Literal>(b.node).value; },
          [&](const VarRef& x) { return x.name == std::get<VarRef>(b.node).name; },
          [&](const EqTest& x) {
            const auto& y = std::get<EqTest>(b.node);
            return same_ptr(x.lhs, y.lhs) && same_ptr(x.rhs, y.rhs);
          },
      },
      a.node);
}

bool operator==(const Expr& a, const Expr& b) {
  if (a.node.index() != b.node.index()) return false;
  return std::visit(
      overloaded{
          [&](const Ret& x) { return x.value == std::get<Ret>(b.node).value; },
          [&](const Choice& x) {
            const auto& y = std::get<Choice>(b.node);
            return x.p == y.p && same_ptr(x.lhs, y.lhs) && same_ptr(x.rhs, y.rhs);
          },
          [&](const Alt& x) {
            const auto& y = std::get<Alt>(b.node);
            return same_ptr(x.lhs, y.lhs) && same_ptr(x.rhs, y.rhs);
          },
          [&](const Bind& x) {
            const auto& y = std::get<Bind>(b.node);
            return x.var == y.var && same_ptr(x.bound, y.bound) && same_ptr(x.body, y.body);
          },
          [&](const Uniform& x) {
            const auto& y = std::get<Uniform>(b.node);
            return x.def == y.def && x.values == y.values;
          },
          [&](const Arbitrary& x) {
            const auto& y = std::get<Arbitrary>(b.node);
            return x.def == y.def && x.values == y.values;
          },
      },
      a.node);
}

Value lit(Outcome v) { return Value{Literal{std::move(v)}, {}}; }
Value var(std::string name) { return Value{VarRef{std::move(name)}, {}}; }
Value eq(Value a, Value b) {
  return Value{EqTest{std::make_shared<const Value>(std::move(a)), std::make_shared<const Value>(std::move(b))}, {}};
}
ExprPtr ret(Value v) { return std::make_shared<const Expr>(Expr{Ret{std::move(v)}, {}}); }
ExprPtr choice(Prob p, ExprPtr a, ExprPtr b) {
  return std::make_shared<const Expr>(Expr{Choice{std::move(p), std::move(a), std::move(b)}, {}});
}
ExprPtr alt(ExprPtr a, ExprPtr b) { return std::make_shared<const Expr>(Expr{Alt{std::move(a), std::move(b)}, {}}); }
ExprPtr bind(std::string x, ExprPtr bound, ExprPtr body) {
  return std::make_shared<const Expr>(Expr{Bind{std::move(x), std::move(bound), std::move(body)}, {}});
}
ExprPtr uniform(Value def, std::vector<Value> values) {
  return std::make_shared<const Expr>(Expr{Uniform{std::move(def), std::move(values)}, {}});
}
ExprPtr arbitrary(Value def, std::vector<Value> values) {
  return std::make_shared<const Expr>(Expr{Arbitrary{std::move(def), std::move(values)}, {}});
}

std::string print(const Value& v) {
  return std::visit(overloaded{
                        [](const Literal& x) { return to_text(x.value); },
                        [](const VarRef& x) { return x.name; },
                        [](const EqTest& x) { return "(" + print(*x.lhs) + " == " + print(*x.rhs) + ")"; },
                    },
                    v.node);
}

namespace {

// Context precedence: 0 anything, 1 no bare `do`, 2 choice or tighter,
// 3 primary only.
std::string print_at(const Expr& e, int level);

std::string print_values(const Value& def, const std::vector<Value>& values) {
  std::string out = print(def) + " [";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ", ";
    out += print(values[i]);
  }
  return out + "]";
}

std::string print_at(const Expr& e, int level) {
  bool wrap = false;
  std::string body = std::visit(
      overloaded{
          [&](const Ret& x) { return "ret " + print(x.value); },
          [&](const Choice& x) {
            wrap = level >= 3;
            return print_at(*x.lhs, 2) + " <|" + x.p.str() + "|> " + print_at(*x.rhs, 3);
          },
          [&](const Alt& x) {
            wrap = level >= 2;
            return print_at(*x.lhs, 1) + " [~] " + print_at(*x.rhs, 2);
          },
          [&](const Bind& x) {
            wrap = level >= 1;
            return "do " + x.var + " <- " + print_at(*x.bound, 1) + "; " + print_at(*x.body, 0);
          },
          [&](const Uniform& x) { return "uniform " + print_values(x.def, x.values); },
          [&](const Arbitrary& x) { return "arbitrary " + print_values(x.def, x.values); },
      },
      e.node);
  return wrap ? "(" + body + ")" : body;
}

}  // namespace

std::string print(const Expr& e) { return print_at(e, 0); }

}  // namespace gcmonad::lang
