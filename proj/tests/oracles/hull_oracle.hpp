#pragma once

// Brute-force hull membership by Caratheodory subset enumeration. Shares no
// code with the simplex path it is used to check.

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "gcmonad/dist.hpp"

namespace gcmonad::oracle {

/// True iff some subset of `gens` of size <= dim+1 has an exact solution
/// lambda >= 0, sum lambda = 1, sum lambda_i gens[i] = x.
bool caratheodory_feasible(const std::vector<Rat>& x, const std::vector<std::vector<Rat>>& gens);

template <class K>
bool in_hull_oracle(const Dist<K>& x, const std::vector<Dist<K>>& gens) {
  if (gens.empty()) throw std::invalid_argument("in_hull_oracle: empty generator list");
  std::vector<K> basis = x.support();
  for (const auto& g : gens) {
    for (const auto& k : g.support()) {
      if (std::find(basis.begin(), basis.end(), k) == basis.end()) basis.push_back(k);
    }
  }
  auto coords = [&](const Dist<K>& d) {
    std::vector<Rat> v;
    for (const auto& k : basis) v.push_back(d.weight(k));
    return v;
  };
  std::vector<std::vector<Rat>> cols;
  for (const auto& g : gens) cols.push_back(coords(g));
  return caratheodory_feasible(coords(x), cols);
}

}  // namespace gcmonad::oracle
