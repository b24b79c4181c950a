#include <algorithm>
#include <string>

#include "gcmonad/laws.hpp"

namespace gcmonad {

void GenConfig::validate() const {
  auto need = [](int v, const char* what) {
    if (v < 1) throw LawError(std::string(what) + " must be at least 1, got " + std::to_string(v));
  };
  need(carrier_size, "carrier_size");
  need(max_support, "max_support");
  need(max_generators, "max_generators");
  need(max_denominator, "max_denominator");
  need(trials, "trials");
}

namespace {

std::string carrier_name(int i) {
  if (i < 26) return std::string(1, static_cast<char>('a' + i));
  return "k" + std::to_string(i);
}

}  // namespace

Gen::Gen(const GenConfig& config, std::uint64_t seed) : config_(config), rng_(seed) {
  config_.validate();
  for (int i = 0; i < config_.carrier_size; ++i) carrier_.push_back(Outcome::symbol(carrier_name(i)));
  std::sort(carrier_.begin(), carrier_.end());
}

int Gen::uniform_int(int lo, int hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<int>(rng_() % span);
}

Outcome Gen::key() { return carrier_[static_cast<std::size_t>(uniform_int(0, config_.carrier_size - 1))]; }

Prob Gen::prob() {
  const int den = uniform_int(1, config_.max_denominator);
  const int num = uniform_int(0, den);
  return Prob(num, den);
}

// `parts` positive weights with a common denominator in
// [parts, max(parts, max_denominator)], summing to one.
std::vector<Rat> Gen::random_weights(std::size_t parts) {
  const int n = static_cast<int>(parts);
  const int den = uniform_int(n, std::max(n, config_.max_denominator));
  // Choose n-1 distinct cut points in [1, den-1].
  std::vector<int> slots(static_cast<std::size_t>(den - 1));
  for (int i = 0; i < den - 1; ++i) slots[static_cast<std::size_t>(i)] = i + 1;
  for (int i = 0; i < n - 1; ++i) {
    const int j = uniform_int(i, den - 2);
    std::swap(slots[static_cast<std::size_t>(i)], slots[static_cast<std::size_t>(j)]);
  }
  std::vector<int> cuts(slots.begin(), slots.begin() + (n - 1));
  std::sort(cuts.begin(), cuts.end());
  cuts.push_back(den);
  std::vector<Rat> w;
  int prev = 0;
  for (int c : cuts) {
    w.emplace_back(c - prev, den);
    prev = c;
  }
  return w;
}

Dist<Outcome> Gen::dist() { return dist_over(carrier_); }

Gcm Gen::gcm() { return necset_over(carrier_); }

FnTable Gen::function() {
  FnTable f;
  for (const auto& a : carrier_) f.table.emplace(a, key());
  return f;
}

KleisliTable<Gcm> Gen::kleisli() {
  KleisliTable<Gcm> k;
  for (const auto& a : carrier_) k.table.emplace(a, gcm());
  return k;
}

KleisliTable<Dist<Outcome>> Gen::dist_kleisli() {
  KleisliTable<Dist<Outcome>> k;
  for (const auto& a : carrier_) k.table.emplace(a, dist());
  return k;
}

}  // namespace gcmonad
