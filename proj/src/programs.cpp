#include "gcmonad/programs.hpp"

#include <algorithm>

namespace gcmonad::programs {

Gcm bcoin(const Prob& p) {
  return choice_gcm(p, ret_gcm(Outcome::boolean(true)), ret_gcm(Outcome::boolean(false)));
}

Gcm arb() { return alt_gcm(ret_gcm(Outcome::boolean(true)), ret_gcm(Outcome::boolean(false))); }

Gcm coinarb(const Prob& p) {
  return bind_gcm(bcoin(p), [](const Outcome& c) {
    return bind_gcm(arb(), [&](const Outcome& a) { return ret_gcm(Outcome::boolean(a == c)); });
  });
}

std::string bcoin_source(const Prob& p) { return "ret true <|" + p.str() + "|> ret false"; }

std::string arb_source() { return "ret true [~] ret false"; }

std::string coinarb_source(const Prob& p) {
  return "do c <- " + bcoin_source(p) + "; do a <- " + arb_source() + "; ret (a == c)";
}

Gcm uniform(const Outcome& def, std::span<const Outcome> values) {
  if (values.empty()) return ret_gcm(def);
  // Fold from the right: ret x_i <|1/(n-i)|> (rest).
  const auto n = static_cast<long>(values.size());
  Gcm acc = ret_gcm(values.back());
  for (long i = n - 2; i >= 0; --i) {
    acc = choice_gcm(Prob(1, n - i), ret_gcm(values[static_cast<std::size_t>(i)]), acc);
  }
  return acc;
}

Gcm arbitrary(const Outcome& def, std::span<const Outcome> values) {
  if (values.empty()) return ret_gcm(def);
  Gcm acc = ret_gcm(values.back());
  for (std::size_t i = values.size() - 1; i-- > 0;) acc = alt_gcm(ret_gcm(values[i]), acc);
  return acc;
}

const std::vector<Outcome>& doors() {
  static const std::vector<Outcome> ds{Outcome::symbol("A"), Outcome::symbol("B"), Outcome::symbol("C")};
  return ds;
}

namespace {

std::vector<Outcome> doors_except(std::initializer_list<Outcome> removed) {
  std::vector<Outcome> out;
  for (const auto& d : doors()) {
    if (std::find(removed.begin(), removed.end(), d) == removed.end()) out.push_back(d);
  }
  return out;
}

const Outcome& default_door() { return doors().front(); }

}  // namespace

Gcm monty(Strategy strategy) {
  const Gcm hide = arbitrary(default_door(), doors());
  const Gcm pick = uniform(default_door(), doors());
  auto tease = [](const Outcome& h, const Outcome& p) { return arbitrary(default_door(), doors_except({h, p})); };
  auto play = [strategy](const Outcome& p, const Outcome& t) {
    if (strategy == Strategy::Stick) return ret_gcm(p);
    const auto rest = doors_except({p, t});
    return ret_gcm(rest.empty() ? default_door() : rest.front());
  };
  return bind_gcm(hide, [&](const Outcome& h) {
    return bind_gcm(pick, [&](const Outcome& p) {
      return bind_gcm(tease(h, p), [&](const Outcome& t) {
        return bind_gcm(play(p, t), [&](const Outcome& s) { return ret_gcm(Outcome::boolean(s == h)); });
      });
    });
  });
}

}  // namespace gcmonad::programs
