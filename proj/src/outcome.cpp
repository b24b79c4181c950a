#include "gcmonad/outcome.hpp"

#include "gcmonad/dist.hpp"
#include "gcmonad/necset.hpp"

namespace gcmonad {

Outcome::Outcome(Dist<Outcome> d) : v_(std::make_shared<const Dist<Outcome>>(std::move(d))) {}

Outcome::Outcome(NECSet<Outcome> s) : v_(std::make_shared<const NECSet<Outcome>>(std::move(s))) {}

std::strong_ordering operator<=>(const Outcome& a, const Outcome& b) {
  if (auto c = a.v_.index() <=> b.v_.index(); c != 0) return c;
  switch (a.kind()) {
    case Outcome::Kind::Bool:
      return a.as_bool() <=> b.as_bool();
    case Outcome::Kind::Int:
      return a.as_int() <=> b.as_int();
    case Outcome::Kind::Symbol:
      return a.as_symbol() <=> b.as_symbol();
    case Outcome::Kind::Dist:
      return a.as_dist() <=> b.as_dist();
    case Outcome::Kind::NECSet:
      return a.as_necset() <=> b.as_necset();
  }
  return std::strong_ordering::equal;
}

std::string to_text(const Outcome& o) {
  switch (o.kind()) {
    case Outcome::Kind::Bool:
      return to_text(o.as_bool());
    case Outcome::Kind::Int:
      return to_text(o.as_int());
    case Outcome::Kind::Symbol:
      return o.as_symbol().name;
    case Outcome::Kind::Dist:
      return to_text(o.as_dist());
    case Outcome::Kind::NECSet:
      return to_text(o.as_necset());
  }
  return {};
}

const char* kind_name(Outcome::Kind k) {
  switch (k) {
    case Outcome::Kind::Bool:
      return "bool";
    case Outcome::Kind::Int:
      return "int";
    case Outcome::Kind::Symbol:
      return "symbol";
    case Outcome::Kind::Dist:
      return "dist";
    case Outcome::Kind::NECSet:
      return "necset";
  }
  return "?";
}

}  // namespace gcmonad
