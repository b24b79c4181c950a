#pragma once

// The geometrically convex monad: a computation over A is a non-empty
// finitely-generated convex set of distributions over A.

#include <functional>
#include <type_traits>
#include <utility>
#include <vector>

#include "gcmonad/convexgeom.hpp"
#include "gcmonad/dist.hpp"
#include "gcmonad/necset.hpp"

namespace gcmonad {

template <class A>
using GcmVal = NECSet<A>;

namespace detail {
template <class T>
struct gcm_value_type;
template <class A>
struct gcm_value_type<NECSet<A>> {
  using type = A;
};
}  // namespace detail

/// Singleton of the point mass.
template <class A>
GcmVal<A> ret_gcm(A a) {
  return NECSet<A>::singleton(Dist<A>::point(std::move(a)));
}

/// Direct image of the pushforward along f.
template <class F, class A>
auto map_gcm(F&& f, const GcmVal<A>& m) {
  using B = std::decay_t<std::invoke_result_t<F&, const A&>>;
  std::vector<Dist<B>> gens;
  gens.reserve(m.size());
  for (const auto& d : m.generators()) gens.push_back(map_dist(f, d));
  return NECSet<B>::from_generators(std::move(gens));
}

/// Hull of the union of the barycenters of each generator.
template <class A>
GcmVal<A> join_gcm(const GcmVal<GcmVal<A>>& mm) {
  std::vector<GcmVal<A>> centers;
  centers.reserve(mm.size());
  for (const auto& d : mm.generators()) centers.push_back(barycenter(d));
  return lub_necset(std::span<const GcmVal<A>>(centers));
}

/// join . map k
template <class A, class F>
auto bind_gcm(const GcmVal<A>& m, F&& k) {
  using Out = std::decay_t<std::invoke_result_t<F&, const A&>>;
  using B = typename detail::gcm_value_type<Out>::type;
  return join_gcm<B>(map_gcm(std::forward<F>(k), m));
}

/// The same bind, computed directly: for each generator d of m and each
/// choice of one generator g_a of k(a) per support element a, the point
/// sum_a d(a) * g_a. Exponential in the support size.
template <class A, class F>
auto bind_gcm_product(const GcmVal<A>& m, F&& k) {
  using Out = std::decay_t<std::invoke_result_t<F&, const A&>>;
  using B = typename detail::gcm_value_type<Out>::type;
  std::vector<Dist<B>> points;
  for (const auto& d : m.generators()) {
    std::vector<Out> images;
    for (const auto& [a, w] : d.entries()) images.push_back(std::invoke(k, a));
    std::vector<std::size_t> pick(images.size(), 0);
    while (true) {
      std::vector<typename Dist<B>::Entry> raw;
      for (std::size_t i = 0; i < images.size(); ++i) {
        const Rat& w = d.entries()[i].second;
        for (const auto& [b, v] : images[i].generators()[pick[i]].entries()) raw.emplace_back(b, w * v);
      }
      points.push_back(Dist<B>::from_weights(std::move(raw)));
      std::size_t i = 0;
      while (i < pick.size() && ++pick[i] == images[i].size()) pick[i++] = 0;
      if (i == pick.size()) break;
    }
  }
  return NECSet<B>::from_generators(std::move(points));
}

/// x <|p|> y
template <class A>
GcmVal<A> choice_gcm(const Prob& p, const GcmVal<A>& x, const GcmVal<A>& y) {
  return conv_necset(p, x, y);
}

/// x [~] y
template <class A>
GcmVal<A> alt_gcm(const GcmVal<A>& x, const GcmVal<A>& y) {
  return alt_necset(x, y);
}

}  // namespace gcmonad
