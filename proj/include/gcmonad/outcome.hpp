#pragma once

// Runtime outcome values: booleans, integers, symbols, and nested
// distributions or convex sets. Totally ordered by tag, then by value.

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <variant>

#include "gcmonad/text.hpp"

namespace gcmonad {

struct Symbol {
  std::string name;
  friend auto operator<=>(const Symbol&, const Symbol&) = default;
};

class Outcome {
 public:
  /// Tag order is the primary sort key.
  enum class Kind { Bool = 0, Int = 1, Symbol = 2, Dist = 3, NECSet = 4 };

  Outcome() : Outcome(false) {}
  explicit Outcome(bool b) : v_(b) {}
  explicit Outcome(std::int64_t i) : v_(i) {}
  explicit Outcome(Symbol s) : v_(std::move(s)) {}
  explicit Outcome(Dist<Outcome> d);
  explicit Outcome(NECSet<Outcome> s);

  static Outcome boolean(bool b) { return Outcome(b); }
  static Outcome integer(std::int64_t i) { return Outcome(i); }
  static Outcome symbol(std::string name) { return Outcome(Symbol{std::move(name)}); }

  Kind kind() const { return static_cast<Kind>(v_.index()); }
  bool is_atom() const { return v_.index() <= 2; }

  bool as_bool() const { return std::get<bool>(v_); }
  std::int64_t as_int() const { return std::get<std::int64_t>(v_); }
  const Symbol& as_symbol() const { return std::get<Symbol>(v_); }
  const Dist<Outcome>& as_dist() const { return *std::get<DistPtr>(v_); }
  const NECSet<Outcome>& as_necset() const { return *std::get<SetPtr>(v_); }

  friend bool operator==(const Outcome& a, const Outcome& b) { return (a <=> b) == 0; }
  friend std::strong_ordering operator<=>(const Outcome& a, const Outcome& b);

 private:
  using DistPtr = std::shared_ptr<const Dist<Outcome>>;
  using SetPtr = std::shared_ptr<const NECSet<Outcome>>;
  std::variant<bool, std::int64_t, Symbol, DistPtr, SetPtr> v_;
};

std::string to_text(const Outcome& o);

/// Name of a kind, for type-error messages.
const char* kind_name(Outcome::Kind k);

}  // namespace gcmonad
