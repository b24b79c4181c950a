#pragma once

// Convex-space operations: the binary mixing operator per carrier, n-ary
// convex combinations, exact hull membership and reduction of a generator
// list to its extreme points.

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "gcmonad/dist.hpp"
#include "gcmonad/prob.hpp"

namespace gcmonad {

class HullError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Binary mixing operator of a convex space. Specialized per carrier.
template <class C>
struct ConvexInstance;

template <>
struct ConvexInstance<Rat> {
  static Rat conv(const Prob& p, const Rat& a, const Rat& b) {
    return p.value() * a + p.complement().value() * b;
  }
};

template <class K>
struct ConvexInstance<Dist<K>> {
  static Dist<K> conv(const Prob& p, const Dist<K>& a, const Dist<K>& b) { return conv_dist(p, a, b); }
};

template <class C>
concept ConvexSpace = requires(const Prob& p, const C& a) {
  { ConvexInstance<C>::conv(p, a, a) } -> std::convertible_to<C>;
};

/// Convex combination of `points` weighted by `weights`, unfolded from the
/// first support element: w0 * p0 + (1-w0) * convn(rest / (1-w0)).
template <ConvexSpace C>
C convn(const Dist<std::size_t>& weights, std::span<const C> points) {
  const auto& entries = weights.entries();
  for (const auto& [i, w] : entries) {
    if (i >= points.size()) throw HullError("no point for index " + std::to_string(i));
  }
  // Walk from the back so each step is one binary mix.
  std::size_t last = entries.size() - 1;
  C acc = points[entries[last].first];
  Rat tail = entries[last].second;
  while (last-- > 0) {
    const Rat& w = entries[last].second;
    tail += w;
    acc = ConvexInstance<C>::conv(Prob(w / tail), points[entries[last].first], acc);
  }
  return acc;
}

/// Barycenter of a distribution over points of a convex space.
template <ConvexSpace C>
C barycenter(const Dist<C>& d) {
  std::vector<C> pts;
  std::vector<Dist<std::size_t>::Entry> raw;
  pts.reserve(d.size());
  for (const auto& [c, w] : d.entries()) {
    raw.emplace_back(pts.size(), w);
    pts.push_back(c);
  }
  return convn(Dist<std::size_t>::from_weights(std::move(raw)), std::span<const C>(pts));
}

/// Coordinates of a distribution over a fixed sorted basis.
using PointVec = std::vector<Rat>;

namespace detail {

/// Is there lambda >= 0, sum lambda = 1, with sum lambda_i * gens[i] = x?
/// All vectors share one dimension. Large instances first try a
/// floating-point guess whose answer is then certified exactly; the exact
/// simplex below decides everything else.
bool hull_feasible(const PointVec& x, std::span<const PointVec* const> gens);

/// The same question answered by phase-one simplex with Bland's rule over
/// exact rationals alone.
bool hull_feasible_exact(const PointVec& x, std::span<const PointVec* const> gens);

}  // namespace detail

/// A set of distributions embedded over the sorted union of their supports.
template <class K>
struct Embedding {
  std::vector<K> basis;
  std::vector<PointVec> points;
};

template <class K>
Embedding<K> embed(std::span<const Dist<K>> dists) {
  Embedding<K> e;
  for (const auto& d : dists) {
    for (const auto& entry : d.entries()) e.basis.push_back(entry.first);
  }
  std::sort(e.basis.begin(), e.basis.end());
  e.basis.erase(std::unique(e.basis.begin(), e.basis.end()), e.basis.end());
  e.points.reserve(dists.size());
  for (const auto& d : dists) {
    PointVec v(e.basis.size(), Rat(0));
    std::size_t pos = 0;
    for (const auto& [k, w] : d.entries()) {
      while (e.basis[pos] < k) ++pos;
      v[pos] = w;
    }
    e.points.push_back(std::move(v));
  }
  return e;
}

/// Exact test of x in hull(gens).
template <class K>
bool in_hull(const Dist<K>& x, std::span<const Dist<K>> gens) {
  if (gens.empty()) throw HullError("in_hull: empty generator list");
  std::vector<Dist<K>> all;
  all.reserve(gens.size() + 1);
  all.push_back(x);
  all.insert(all.end(), gens.begin(), gens.end());
  const Embedding<K> e = embed(std::span<const Dist<K>>(all));
  std::vector<const PointVec*> cols;
  cols.reserve(gens.size());
  for (std::size_t i = 1; i < e.points.size(); ++i) cols.push_back(&e.points[i]);
  return detail::hull_feasible(e.points[0], cols);
}

template <class K>
bool in_hull(const Dist<K>& x, const std::vector<Dist<K>>& gens) {
  return in_hull(x, std::span<const Dist<K>>(gens));
}

namespace detail {

/// Indices of the extreme points of the hull of `points` (all distinct, one
/// shared basis), in increasing index order.
std::vector<std::size_t> extreme_points(const std::vector<PointVec>& points);

}  // namespace detail

/// Extreme points of hull(gens), sorted increasingly. The result does not
/// depend on the order of `gens`.
template <class K>
std::vector<Dist<K>> canonicalize(std::vector<Dist<K>> gens) {
  if (gens.empty()) throw HullError("canonicalize: empty generator list");
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  if (gens.size() <= 2) return gens;
  const Embedding<K> e = embed(std::span<const Dist<K>>(gens));
  std::vector<Dist<K>> out;
  for (std::size_t j : detail::extreme_points(e.points)) out.push_back(std::move(gens[j]));
  return out;
}

}  // namespace gcmonad
