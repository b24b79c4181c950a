#pragma once

// Finitely-supported probability distributions over a totally ordered key
// type, stored as a sorted association list.

#include <algorithm>
#include <compare>
#include <functional>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "gcmonad/prob.hpp"
#include "gcmonad/text.hpp"

namespace gcmonad {

class DistError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A distribution with strictly increasing keys, strictly positive weights
/// and total mass exactly one. Every constructor enforces this.
template <class K>
class Dist {
 public:
  using key_type = K;
  using Entry = std::pair<K, Rat>;

  /// Point mass at `k`.
  static Dist point(K k) {
    Dist d;
    d.entries_.emplace_back(std::move(k), Rat(1));
    return d;
  }

  /// Builds a distribution from arbitrary (key, weight) pairs: duplicate keys
  /// are merged, zero weights dropped. Throws DistError on a negative weight
  /// or a total mass other than one.
  static Dist from_weights(std::vector<Entry> raw) {
    std::sort(raw.begin(), raw.end(),
              [](const Entry& a, const Entry& b) { return a.first < b.first; });
    Dist d;
    Rat total(0);
    for (auto& [key, weight] : raw) {
      if (weight.sign() < 0) throw DistError("negative weight " + weight.str());
      total += weight;
      if (!d.entries_.empty() && d.entries_.back().first == key) {
        d.entries_.back().second += weight;
      } else {
        d.entries_.emplace_back(std::move(key), std::move(weight));
      }
    }
    if (total != Rat(1)) throw DistError("weights sum to " + total.str() + ", expected 1");
    std::erase_if(d.entries_, [](const Entry& e) { return e.second.is_zero(); });
    return d;
  }

  const std::vector<Entry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }

  /// Keys with positive weight, in increasing order.
  std::vector<K> support() const {
    std::vector<K> keys;
    keys.reserve(entries_.size());
    for (const auto& e : entries_) keys.push_back(e.first);
    return keys;
  }

  Rat weight(const K& key) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), key,
                               [](const Entry& e, const K& k) { return e.first < k; });
    if (it == entries_.end() || !(it->first == key)) return Rat(0);
    return it->second;
  }

  /// Checks the representation invariants; used by tests after every operation.
  bool valid() const {
    if (entries_.empty()) return false;
    Rat total(0);
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      if (entries_[i].second.sign() <= 0) return false;
      if (i > 0 && !(entries_[i - 1].first < entries_[i].first)) return false;
      total += entries_[i].second;
    }
    return total == Rat(1);
  }

  friend bool operator==(const Dist& a, const Dist& b) { return a.entries_ == b.entries_; }

  /// Lexicographic on (key, weight) entries; a proper prefix is smaller.
  friend std::strong_ordering operator<=>(const Dist& a, const Dist& b) {
    const std::size_t n = std::min(a.entries_.size(), b.entries_.size());
    for (std::size_t i = 0; i < n; ++i) {
      if (auto c = a.entries_[i].first <=> b.entries_[i].first; c != 0) return c;
      if (auto c = a.entries_[i].second <=> b.entries_[i].second; c != 0) return c;
    }
    return a.entries_.size() <=> b.entries_.size();
  }

 private:
  Dist() = default;
  std::vector<Entry> entries_;
};

template <class K>
Dist<K> point(K k) {
  return Dist<K>::point(std::move(k));
}

template <class K>
std::strong_ordering compare_dist(const Dist<K>& a, const Dist<K>& b) {
  return a <=> b;
}

/// p*d1 + (1-p)*d2
template <class K>
Dist<K> conv_dist(const Prob& p, const Dist<K>& d1, const Dist<K>& d2) {
  const Rat& w = p.value();
  const Rat wc = p.complement().value();
  std::vector<typename Dist<K>::Entry> raw;
  raw.reserve(d1.size() + d2.size());
  for (const auto& [k, v] : d1.entries()) raw.emplace_back(k, w * v);
  for (const auto& [k, v] : d2.entries()) raw.emplace_back(k, wc * v);
  return Dist<K>::from_weights(std::move(raw));
}

/// Pushforward of `d` along `f`.
template <class F, class K>
auto map_dist(F&& f, const Dist<K>& d) {
  using K2 = std::decay_t<std::invoke_result_t<F&, const K&>>;
  std::vector<typename Dist<K2>::Entry> raw;
  raw.reserve(d.size());
  for (const auto& [k, v] : d.entries()) raw.emplace_back(std::invoke(f, k), v);
  return Dist<K2>::from_weights(std::move(raw));
}

/// Sum over the support of d(a) * k(a).
template <class K, class F>
auto bind_dist(const Dist<K>& d, F&& k) {
  using Out = std::decay_t<std::invoke_result_t<F&, const K&>>;
  using K2 = typename Out::key_type;
  std::vector<typename Dist<K2>::Entry> raw;
  for (const auto& [a, w] : d.entries()) {
    const Out inner = std::invoke(k, a);
    for (const auto& [b, v] : inner.entries()) raw.emplace_back(b, w * v);
  }
  return Dist<K2>::from_weights(std::move(raw));
}

template <class K>
std::string to_text(const Dist<K>& d) {
  std::string out = "{";
  bool first = true;
  for (const auto& [k, w] : d.entries()) {
    if (!first) out += ", ";
    first = false;
    out += to_text(k);
    out += ": ";
    out += w.str();
  }
  out += "}";
  return out;
}

}  // namespace gcmonad
