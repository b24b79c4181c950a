#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "gcmonad/gcm.hpp"

namespace testing {

using gcmonad::Dist;
using gcmonad::Gcm;
using gcmonad::NECSet;
using gcmonad::Outcome;
using gcmonad::Prob;
using gcmonad::Rat;

inline Outcome sym(const std::string& s) { return Outcome::symbol(s); }
inline Outcome B(bool b) { return Outcome::boolean(b); }
inline Outcome I(long n) { return Outcome::integer(n); }

inline Rat q(long n, long d = 1) { return Rat(n, d); }

/// Distribution literal: dist({{sym("a"), q(1, 2)}, {sym("b"), q(1, 2)}}).
template <class K = Outcome>
Dist<K> dist(std::initializer_list<std::pair<K, Rat>> entries) {
  return Dist<K>::from_weights(std::vector<typename Dist<K>::Entry>(entries.begin(), entries.end()));
}

inline Dist<Outcome> delta(const Outcome& o) { return gcmonad::point(o); }

inline Gcm gens(std::vector<Dist<Outcome>> ds) { return Gcm::from_generators(std::move(ds)); }

}  // namespace testing
