#pragma once

// Random closed programs for round-trip and evaluator cross-checks.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "gcmonad/ast.hpp"

namespace testing {

class AstGen {
 public:
  /// With `bool_only`, every value is boolean so programs are well typed and
  /// small enough to evaluate; otherwise all literal kinds appear.
  AstGen(std::uint64_t seed, bool bool_only) : rng_(seed), bool_only_(bool_only) {}

  gcmonad::lang::ExprPtr program(int depth) {
    std::vector<std::string> scope;
    return expr(depth, scope);
  }

 private:
  int pick(int n) { return static_cast<int>(rng_() % static_cast<std::uint64_t>(n)); }

  gcmonad::Prob prob() {
    const long d = 1 + pick(12);
    return gcmonad::Prob(pick(static_cast<int>(d) + 1), d);
  }

  gcmonad::Outcome literal() {
    if (bool_only_) return gcmonad::Outcome::boolean(pick(2) == 1);
    switch (pick(3)) {
      case 0:
        return gcmonad::Outcome::boolean(pick(2) == 1);
      case 1:
        return gcmonad::Outcome::integer(pick(41) - 20);
      default: {
        static const char* names[] = {"A", "B", "C", "Door", "X1"};
        return gcmonad::Outcome::symbol(names[pick(5)]);
      }
    }
  }

  gcmonad::lang::Value value(const std::vector<std::string>& scope, int depth) {
    using namespace gcmonad::lang;
    const int r = pick(depth > 0 ? 4 : 3);
    if (r == 3) return eq(value(scope, depth - 1), value(scope, depth - 1));
    if (r >= 1 && !scope.empty()) return var(scope[static_cast<std::size_t>(pick(static_cast<int>(scope.size())))]);
    return lit(literal());
  }

  std::vector<gcmonad::lang::Value> values(const std::vector<std::string>& scope) {
    std::vector<gcmonad::lang::Value> out;
    const int n = pick(4);
    for (int i = 0; i < n; ++i) out.push_back(value(scope, 1));
    return out;
  }

  gcmonad::lang::ExprPtr expr(int depth, std::vector<std::string>& scope) {
    using namespace gcmonad::lang;
    if (depth <= 0) return ret(value(scope, 1));
    switch (pick(7)) {
      case 0:
        return ret(value(scope, 2));
      case 1:
        return choice(prob(), expr(depth - 1, scope), expr(depth - 1, scope));
      case 2:
        return alt(expr(depth - 1, scope), expr(depth - 1, scope));
      case 3:
      case 4: {
        static const char* names[] = {"x", "y", "c", "a", "h2"};
        std::string name = names[pick(5)];
        ExprPtr bound = expr(depth - 1, scope);
        scope.push_back(name);
        ExprPtr body = expr(depth - 1, scope);
        scope.pop_back();
        return bind(name, bound, body);
      }
      case 5:
        return uniform(value(scope, 1), values(scope));
      default:
        return arbitrary(value(scope, 1), values(scope));
    }
  }

  std::mt19937_64 rng_;
  bool bool_only_;
};

}  // namespace testing
