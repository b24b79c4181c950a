#pragma once

// Evaluation of choice programs, the library of example programs, and output
// rendering.

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gcmonad/ast.hpp"
#include "gcmonad/gcm.hpp"

namespace gcmonad {

namespace lang {

/// Evaluates a closed program. Throws SourceError on a type error, e.g. an
/// equality test between a boolean and a symbol.
Gcm eval(const Expr& e);

/// parse + eval.
Gcm eval_source(std::string_view text);

}  // namespace lang

namespace programs {

/// ret true <|p|> ret false
Gcm bcoin(const Prob& p);
/// ret true [~] ret false
Gcm arb();
/// do c <- bcoin p; do a <- arb; ret (a == c)
Gcm coinarb(const Prob& p);

std::string bcoin_source(const Prob& p);
std::string arb_source();
std::string coinarb_source(const Prob& p);

/// Uniform choice over `values` by nested binary choices; `def` when empty.
Gcm uniform(const Outcome& def, std::span<const Outcome> values);
/// Nondeterministic choice over `values`; `def` when empty. Duplicates are kept.
Gcm arbitrary(const Outcome& def, std::span<const Outcome> values);

/// The doors A, B, C in list order.
const std::vector<Outcome>& doors();

enum class Strategy { Stick, Switch };

/// The game with a nondeterministic host: hide, pick uniformly, tease, apply
/// the strategy, report whether the final door hides the car.
Gcm monty(Strategy strategy);

}  // namespace programs

enum class Format { Text, Structured };

/// Text: one generator per line in canonical order. Structured: compact JSON
/// `{"generators":[[[key,"num/den"],...],...]}`. Equal values render
/// byte-identically in both formats.
std::string render(const Gcm& v, Format format);

}  // namespace gcmonad
