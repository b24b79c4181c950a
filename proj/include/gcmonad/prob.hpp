#pragma once

// Exact rationals and probabilities.

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace gcmonad {

/// Raised when a probability leaves [0,1] or a rational has a zero denominator.
class ProbError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Arbitrary-precision rational, always in lowest terms with a positive
/// denominator.
class Rat {
 public:
  Rat() = default;
  Rat(long num) : value_(num) {}  // NOLINT(google-explicit-constructor)
  Rat(long num, long den);
  explicit Rat(mpq_class value);

  /// Accepts `a/b`, `a` and finite decimals such as `-0.125`.
  static Rat parse(std::string_view text);

  const mpq_class& raw() const { return value_; }
  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }

  bool is_zero() const { return sgn(value_) == 0; }
  int sign() const { return sgn(value_); }

  /// `a/b`, or `a` when the denominator is one.
  std::string str() const;

  friend Rat operator+(const Rat& a, const Rat& b) { return Rat(mpq_class(a.value_ + b.value_)); }
  friend Rat operator-(const Rat& a, const Rat& b) { return Rat(mpq_class(a.value_ - b.value_)); }
  friend Rat operator*(const Rat& a, const Rat& b) { return Rat(mpq_class(a.value_ * b.value_)); }
  friend Rat operator/(const Rat& a, const Rat& b);
  Rat operator-() const { return Rat(mpq_class(-value_)); }
  Rat& operator+=(const Rat& o) { value_ += o.value_; return *this; }
  Rat& operator-=(const Rat& o) { value_ -= o.value_; return *this; }
  Rat& operator*=(const Rat& o) { value_ *= o.value_; return *this; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class value_{0};
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

/// A rational in [0,1].
class Prob {
 public:
  Prob() = default;
  /// Throws ProbError when den == 0 or the value falls outside [0,1].
  Prob(long num, long den);
  explicit Prob(const Rat& value);

  static Prob zero() { return Prob(); }
  static Prob one() { return Prob(1, 1); }
  static Prob parse(std::string_view text) { return Prob(Rat::parse(text)); }

  const Rat& value() const { return value_; }
  std::string str() const { return value_.str(); }

  /// 1 - p
  Prob complement() const;

  friend bool operator==(const Prob&, const Prob&) = default;
  friend auto operator<=>(const Prob&, const Prob&) = default;

 private:
  struct Unchecked {};
  Prob(Rat value, Unchecked) : value_(std::move(value)) {}
  friend Prob s_of(const Prob&, const Prob&);
  friend Prob r_of(const Prob&, const Prob&);
  friend Prob operator*(const Prob&, const Prob&);

  Rat value_;
};

inline Prob complement(const Prob& p) { return p.complement(); }

/// 1 - (1-p)(1-q)
Prob s_of(const Prob& p, const Prob& q);

/// p / s_of(p,q); zero when s_of(p,q) is zero (only when p = q = 0).
Prob r_of(const Prob& p, const Prob& q);

Prob operator*(const Prob& a, const Prob& b);

std::ostream& operator<<(std::ostream& os, const Prob& p);

}  // namespace gcmonad
