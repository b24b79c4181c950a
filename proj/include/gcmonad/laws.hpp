#pragma once

// Randomized law checking for the monad and the convex-set structures.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "gcmonad/dist.hpp"
#include "gcmonad/gcm.hpp"

namespace gcmonad {

class LawError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct GenConfig {
  int carrier_size = 3;
  int max_support = 3;
  int max_generators = 3;
  int max_denominator = 6;
  int trials = 200;
  std::uint64_t seed = 42;

  /// Throws LawError when a bound is below one.
  void validate() const;
};

/// A function on the carrier given as an exhaustive table.
struct FnTable {
  std::map<Outcome, Outcome> table;
  Outcome operator()(const Outcome& a) const { return table.at(a); }
};

/// A Kleisli arrow on the carrier given as an exhaustive table.
template <class V>
struct KleisliTable {
  std::map<Outcome, V> table;
  const V& operator()(const Outcome& a) const { return table.at(a); }
};

/// Instance generator. Output is a pure function of (config, seed).
class Gen {
 public:
  Gen(const GenConfig& config, std::uint64_t seed);

  const GenConfig& config() const { return config_; }
  std::mt19937_64& rng() { return rng_; }

  /// Uniform integer in [lo, hi].
  int uniform_int(int lo, int hi);

  /// The carrier symbols, in increasing order.
  const std::vector<Outcome>& carrier() const { return carrier_; }
  Outcome key();
  /// Denominator in [1, max_denominator], numerator in [0, denominator].
  Prob prob();
  /// Support of 1..max_support distinct keys drawn from `keys`.
  Dist<Outcome> dist();
  template <class K>
  Dist<K> dist_over(const std::vector<K>& keys);
  /// 1..max_generators random generators.
  Gcm gcm();
  /// Convex set over an arbitrary key pool (used for nesting).
  template <class K>
  NECSet<K> necset_over(const std::vector<K>& keys);
  FnTable function();
  KleisliTable<Gcm> kleisli();
  KleisliTable<Dist<Outcome>> dist_kleisli();
  /// Random member of `x`: a random convex combination of its generators.
  template <class K>
  Dist<K> member_of(const NECSet<K>& x);

 private:
  std::vector<Rat> random_weights(std::size_t parts);

  GenConfig config_;
  std::mt19937_64 rng_;
  std::vector<Outcome> carrier_;
};

template <class K>
Dist<K> Gen::dist_over(const std::vector<K>& keys) {
  const int max_s = std::min<int>(config_.max_support, static_cast<int>(keys.size()));
  const auto s = static_cast<std::size_t>(uniform_int(1, max_s));
  std::vector<std::size_t> idx(keys.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  // Partial Fisher-Yates for the first s positions.
  for (std::size_t i = 0; i < s; ++i) {
    const auto j = static_cast<std::size_t>(uniform_int(static_cast<int>(i), static_cast<int>(idx.size()) - 1));
    std::swap(idx[i], idx[j]);
  }
  const std::vector<Rat> w = random_weights(s);
  std::vector<typename Dist<K>::Entry> raw;
  for (std::size_t i = 0; i < s; ++i) raw.emplace_back(keys[idx[i]], w[i]);
  return Dist<K>::from_weights(std::move(raw));
}

template <class K>
NECSet<K> Gen::necset_over(const std::vector<K>& keys) {
  const int g = uniform_int(1, config_.max_generators);
  std::vector<Dist<K>> gens;
  for (int i = 0; i < g; ++i) gens.push_back(dist_over(keys));
  return NECSet<K>::from_generators(std::move(gens));
}

template <class K>
Dist<K> Gen::member_of(const NECSet<K>& x) {
  std::vector<std::size_t> idx(x.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  const Dist<std::size_t> w = dist_over(idx);
  return convn(w, std::span<const Dist<K>>(x.generators()));
}

enum class Expectation { Holds, Refuted };

/// Returns a rendered counterexample, or nullopt when the instance satisfies
/// the law.
using LawChecker = std::function<std::optional<std::string>(Gen&)>;

struct LawCase {
  std::string name;
  Expectation expected = Expectation::Holds;
  std::string statement;
  LawChecker checker;
};

struct LawReport {
  std::string name;
  Expectation expected = Expectation::Holds;
  int trials = 0;
  std::uint64_t seed = 0;
  /// (trial index, rendered counterexample), in trial order.
  std::vector<std::pair<int, std::string>> failures;

  /// A positive law passes with no counterexample; a negative control
  /// passes when at least one is found.
  bool passed() const {
    return expected == Expectation::Holds ? failures.empty() : !failures.empty();
  }
};

/// Every registered law, in a fixed order.
const std::vector<LawCase>& law_registry();

/// Throws LawError for an unknown name.
const LawCase& find_law(const std::string& name);

/// Per-trial seed, a pure function of (seed, law name, trial index).
std::uint64_t trial_seed(std::uint64_t seed, const std::string& law, int trial);

/// Runs one trial on its own; the same (config, law, trial) always produces
/// the same instance.
std::optional<std::string> check_trial(const std::string& name, const GenConfig& config, int trial);

std::optional<std::string> check_trial(const LawCase& law, const GenConfig& config, int trial);

/// Runs `config.trials` instances, in parallel; results are in trial order.
LawReport check_law(const std::string& name, const GenConfig& config);

LawReport check_law(const LawCase& law, const GenConfig& config);

std::vector<LawReport> check_all(const GenConfig& config);

bool all_passed(std::span<const LawReport> reports);

/// `PASS name (N trials, F counterexamples)` plus up to `max_shown`
/// indented counterexamples.
std::string render_report(const LawReport& r, std::size_t max_shown = 3);

std::string render_reports(std::span<const LawReport> reports, std::size_t max_shown = 3);

}  // namespace gcmonad
