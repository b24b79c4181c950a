#include "gcmonad/prob.hpp"

#include <cctype>
#include <ostream>

namespace gcmonad {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

mpz_class parse_integer(std::string_view s, std::string_view whole) {
  std::string_view digits = s;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
  if (!all_digits(digits)) throw ProbError("malformed rational: '" + std::string(whole) + "'");
  mpz_class z;
  z.set_str(std::string(digits), 10);
  return s.front() == '-' ? mpz_class(-z) : z;
}

}  // namespace

Rat::Rat(long num, long den) {
  if (den == 0) throw ProbError("zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rat::Rat(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rat Rat::parse(std::string_view text) {
  if (text.empty()) throw ProbError("empty rational literal");
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    const mpz_class num = parse_integer(text.substr(0, slash), text);
    const std::string_view den_text = text.substr(slash + 1);
    if (!all_digits(den_text)) throw ProbError("malformed rational: '" + std::string(text) + "'");
    const mpz_class den = parse_integer(den_text, text);
    if (den == 0) throw ProbError("zero denominator in '" + std::string(text) + "'");
    return Rat(mpq_class(num, den));
  }
  if (const auto dot = text.find('.'); dot != std::string_view::npos) {
    const std::string_view int_part = text.substr(0, dot);
    const std::string_view frac = text.substr(dot + 1);
    if (!all_digits(frac)) throw ProbError("malformed decimal: '" + std::string(text) + "'");
    const bool negative = !int_part.empty() && int_part.front() == '-';
    std::string_view int_digits = int_part;
    if (!int_digits.empty() && (int_digits.front() == '-' || int_digits.front() == '+')) int_digits.remove_prefix(1);
    if (!int_digits.empty() && !all_digits(int_digits)) {
      throw ProbError("malformed decimal: '" + std::string(text) + "'");
    }
    mpz_class whole_num;
    whole_num.set_str(std::string(int_digits.empty() ? "0" : int_digits) + std::string(frac), 10);
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    mpq_class q(whole_num, scale);
    if (negative) q = -q;
    return Rat(q);
  }
  return Rat(mpq_class(parse_integer(text, text)));
}

std::string Rat::str() const {
  if (value_.get_den() == 1) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rat operator/(const Rat& a, const Rat& b) {
  if (b.is_zero()) throw ProbError("division by zero");
  return Rat(mpq_class(a.value_ / b.value_));
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

Prob::Prob(long num, long den) : Prob(Rat(num, den)) {}

Prob::Prob(const Rat& value) : value_(value) {
  if (value_.sign() < 0 || value_ > Rat(1)) {
    throw ProbError("probability out of range [0,1]: " + value_.str());
  }
}

Prob Prob::complement() const { return Prob(Rat(1) - value_, Unchecked{}); }

Prob operator*(const Prob& a, const Prob& b) { return Prob(a.value_ * b.value_, Prob::Unchecked{}); }

Prob s_of(const Prob& p, const Prob& q) {
  return Prob(Rat(1) - p.complement().value_ * q.complement().value_, Prob::Unchecked{});
}

Prob r_of(const Prob& p, const Prob& q) {
  const Prob s = s_of(p, q);
  if (s.value_.is_zero()) return Prob::zero();
  return Prob(p.value_ / s.value_, Prob::Unchecked{});
}

std::ostream& operator<<(std::ostream& os, const Prob& p) { return os << p.value(); }

}  // namespace gcmonad
