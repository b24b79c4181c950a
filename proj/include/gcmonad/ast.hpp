#pragma once

// Abstract syntax of the choice-program language.
//
//   expr  ::= expr '[~]' expr            nondeterministic choice (loosest)
//           | expr '<|' p '|>' expr      probabilistic choice
//           | 'do' x '<-' expr ';' expr  bind (extends to the right)
//           | 'ret' value
//           | 'uniform' value '[' values ']'
//           | 'arbitrary' value '[' values ']'
//           | '(' expr ')'
//   value ::= true | false | integer | Symbol | var | '(' value '==' value ')'
//
// Capitalized identifiers are symbols, lower-case identifiers are variables.

#include <memory>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "gcmonad/outcome.hpp"
#include "gcmonad/prob.hpp"

namespace gcmonad::lang {

struct Pos {
  int line = 1;
  int column = 1;
};

class SourceError : public std::runtime_error {
 public:
  enum class Kind { Syntax, UnboundVariable, Type };

  SourceError(Kind kind, Pos pos, std::string message);

  Kind kind() const { return kind_; }
  Pos pos() const { return pos_; }
  const std::string& message() const { return message_; }

 private:
  Kind kind_;
  Pos pos_;
  std::string message_;
};

const char* kind_name(SourceError::Kind k);

struct Value;
using ValuePtr = std::shared_ptr<const Value>;

struct Literal {
  Outcome value;
};
struct VarRef {
  std::string name;
};
struct EqTest {
  ValuePtr lhs;
  ValuePtr rhs;
};

struct Value {
  std::variant<Literal, VarRef, EqTest> node;
  Pos pos;
};

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Ret {
  Value value;
};
struct Choice {
  Prob p;
  ExprPtr lhs;
  ExprPtr rhs;
};
struct Alt {
  ExprPtr lhs;
  ExprPtr rhs;
};
struct Bind {
  std::string var;
  ExprPtr bound;
  ExprPtr body;
};
struct Uniform {
  Value def;
  std::vector<Value> values;
};
struct Arbitrary {
  Value def;
  std::vector<Value> values;
};

struct Expr {
  std::variant<Ret, Choice, Alt, Bind, Uniform, Arbitrary> node;
  Pos pos;
};

// Structural equality; positions are ignored.
bool operator==(const Value& a, const Value& b);
bool operator==(const Expr& a, const Expr& b);

// Constructors for building programs in code.
Value lit(Outcome v);
Value var(std::string name);
Value eq(Value a, Value b);
ExprPtr ret(Value v);
ExprPtr choice(Prob p, ExprPtr a, ExprPtr b);
ExprPtr alt(ExprPtr a, ExprPtr b);
ExprPtr bind(std::string x, ExprPtr bound, ExprPtr body);
ExprPtr uniform(Value def, std::vector<Value> values);
ExprPtr arbitrary(Value def, std::vector<Value> values);

/// Minimal-parenthesis source text; parse(print(e)) == e.
std::string print(const Expr& e);
std::string print(const Value& v);

/// Throws SourceError.
ExprPtr parse(std::string_view text);

}  // namespace gcmonad::lang
