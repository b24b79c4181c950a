#include <map>
#include <string>
#include <vector>

#include "gcmonad/programs.hpp"

namespace gcmonad::lang {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

using Env = std::map<std::string, Outcome>;

Outcome eval_value(const Value& v, const Env& env) {
  return std::visit(
      overloaded{
          [&](const Literal& x) { return x.value; },
          [&](const VarRef& x) {
            auto it = env.find(x.name);
            if (it == env.end()) {
              throw SourceError(SourceError::Kind::UnboundVariable, v.pos, "unbound variable '" + x.name + "'");
            }
            return it->second;
          },
          [&](const EqTest& x) {
            const Outcome a = eval_value(*x.lhs, env);
            const Outcome b = eval_value(*x.rhs, env);
            if (a.kind() != b.kind()) {
              throw SourceError(SourceError::Kind::Type, v.pos,
                                std::string("cannot compare ") + kind_name(a.kind()) + " with " + kind_name(b.kind()));
            }
            return Outcome::boolean(a == b);
          },
      },
      v.node);
}

std::vector<Outcome> eval_values(const std::vector<Value>& vs, const Env& env) {
  std::vector<Outcome> out;
  out.reserve(vs.size());
  for (const auto& v : vs) out.push_back(eval_value(v, env));
  return out;
}

Gcm eval_in(const Expr& e, const Env& env) {
  return std::visit(
      overloaded{
          [&](const Ret& x) { return ret_gcm(eval_value(x.value, env)); },
          [&](const Choice& x) { return choice_gcm(x.p, eval_in(*x.lhs, env), eval_in(*x.rhs, env)); },
          [&](const Alt& x) { return alt_gcm(eval_in(*x.lhs, env), eval_in(*x.rhs, env)); },
          [&](const Bind& x) {
            // One evaluation of the body per distinct bound value.
            std::map<Outcome, Gcm> memo;
            auto k = [&](const Outcome& a) -> const Gcm& {
              auto it = memo.find(a);
              if (it == memo.end()) {
                Env inner = env;
                inner.insert_or_assign(x.var, a);
                it = memo.emplace(a, eval_in(*x.body, inner)).first;
              }
              return it->second;
            };
            return bind_gcm(eval_in(*x.bound, env), k);
          },
          [&](const Uniform& x) {
            const std::vector<Outcome> vs = eval_values(x.values, env);
            return programs::uniform(eval_value(x.def, env), vs);
          },
          [&](const Arbitrary& x) {
            const std::vector<Outcome> vs = eval_values(x.values, env);
            return programs::arbitrary(eval_value(x.def, env), vs);
          },
      },
      e.node);
}

}  // namespace

Gcm eval(const Expr& e) { return eval_in(e, Env{}); }

Gcm eval_source(std::string_view text) { return eval(*parse(text)); }

}  // namespace gcmonad::lang
