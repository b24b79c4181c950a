#pragma once

// Non-empty finitely-generated convex sets of distributions, kept in
// extreme-point normal form so that structural equality is set equality.

#include <compare>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "gcmonad/convexgeom.hpp"
#include "gcmonad/dist.hpp"

namespace gcmonad {

class NECSetError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Invariants: generators are non-empty, strictly increasing, and none lies
/// in the hull of the others.
template <class K>
class NECSet {
 public:
  using key_type = K;
  using point_type = Dist<K>;

  static NECSet singleton(Dist<K> d) { return NECSet(std::vector<Dist<K>>{std::move(d)}); }

  /// hull(gens). Throws NECSetError on an empty list.
  static NECSet from_generators(std::vector<Dist<K>> gens) {
    if (gens.empty()) throw NECSetError("a convex set needs at least one generator");
    return NECSet(canonicalize(std::move(gens)));
  }

  const std::vector<Dist<K>>& generators() const { return gens_; }
  std::size_t size() const { return gens_.size(); }

  bool contains(const Dist<K>& d) const { return in_hull(d, std::span<const Dist<K>>(gens_)); }

  friend bool operator==(const NECSet& a, const NECSet& b) { return a.gens_ == b.gens_; }
  friend std::strong_ordering operator<=>(const NECSet& a, const NECSet& b) {
    const std::size_t n = std::min(a.gens_.size(), b.gens_.size());
    for (std::size_t i = 0; i < n; ++i) {
      if (auto c = a.gens_[i] <=> b.gens_[i]; c != 0) return c;
    }
    return a.gens_.size() <=> b.gens_.size();
  }

 private:
  explicit NECSet(std::vector<Dist<K>> canonical) : gens_(std::move(canonical)) {}
  std::vector<Dist<K>> gens_;
};

template <class K>
NECSet<K> singleton_necset(Dist<K> d) {
  return NECSet<K>::singleton(std::move(d));
}

template <class K>
NECSet<K> from_generators(std::vector<Dist<K>> gens) {
  return NECSet<K>::from_generators(std::move(gens));
}

template <class K>
bool member(const Dist<K>& d, const NECSet<K>& x) {
  return x.contains(d);
}

/// hull(X u Y)
template <class K>
NECSet<K> alt_necset(const NECSet<K>& x, const NECSet<K>& y) {
  std::vector<Dist<K>> gens = x.generators();
  gens.insert(gens.end(), y.generators().begin(), y.generators().end());
  return NECSet<K>::from_generators(std::move(gens));
}

/// hull of the union of a finite non-empty family.
template <class K>
NECSet<K> lub_necset(std::span<const NECSet<K>> family) {
  if (family.empty()) throw NECSetError("lub of an empty family");
  std::vector<Dist<K>> gens;
  for (const auto& x : family) gens.insert(gens.end(), x.generators().begin(), x.generators().end());
  return NECSet<K>::from_generators(std::move(gens));
}

template <class K>
NECSet<K> lub_necset(const std::vector<NECSet<K>>& family) {
  return lub_necset(std::span<const NECSet<K>>(family));
}

/// { p*x + (1-p)*y : x in X, y in Y }, from pairwise generator mixtures.
template <class K>
NECSet<K> conv_necset(const Prob& p, const NECSet<K>& x, const NECSet<K>& y) {
  std::vector<Dist<K>> gens;
  gens.reserve(x.size() * y.size());
  for (const auto& a : x.generators()) {
    for (const auto& b : y.generators()) gens.push_back(conv_dist(p, a, b));
  }
  return NECSet<K>::from_generators(std::move(gens));
}

template <class K>
struct ConvexInstance<NECSet<K>> {
  static NECSet<K> conv(const Prob& p, const NECSet<K>& a, const NECSet<K>& b) { return conv_necset(p, a, b); }
};

/// Inline form used when a set appears as a key: `<d1; d2>`.
template <class K>
std::string to_text(const NECSet<K>& s) {
  std::string out = "<";
  for (std::size_t i = 0; i < s.generators().size(); ++i) {
    if (i > 0) out += "; ";
    out += to_text(s.generators()[i]);
  }
  out += ">";
  return out;
}

/// One generator per line, in canonical order, no trailing newline.
template <class K>
std::string render_lines(const NECSet<K>& s) {
  std::string out;
  for (std::size_t i = 0; i < s.generators().size(); ++i) {
    if (i > 0) out += "\n";
    out += to_text(s.generators()[i]);
  }
  return out;
}

}  // namespace gcmonad
