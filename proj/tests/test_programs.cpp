#include "doctest.h"
#include "gcmonad/programs.hpp"
#include "corpus.hpp"
#include "helpers.hpp"
#include "oracles/subst_eval.hpp"
#include "random_ast.hpp"

using namespace testing;
namespace lang = gcmonad::lang;
namespace programs = gcmonad::programs;
using gcmonad::Format;
using gcmonad::render;
using lang::SourceError;

namespace {

const Outcome T = B(true);
const Outcome F = B(false);

SourceError error_of(const std::string& text) {
  try {
    lang::eval_source(text);
  } catch (const SourceError& e) {
    return e;
  }
  FAIL("expected a source error for: " << text);
  throw std::logic_error("unreachable");
}

}  // namespace

TEST_CASE("parsing the coinarb program") {
  const auto parsed =
      lang::parse("do c <- ret true <|1/2|> ret false; do a <- ret true [~] ret false; ret (a == c)");
  const auto built = lang::bind(
      "c", lang::choice(Prob(1, 2), lang::ret(lang::lit(T)), lang::ret(lang::lit(F))),
      lang::bind("a", lang::alt(lang::ret(lang::lit(T)), lang::ret(lang::lit(F))),
                 lang::ret(lang::eq(lang::var("a"), lang::var("c")))));
  CHECK(*parsed == *built);
  CHECK(*lang::parse(programs::coinarb_source(Prob(1, 2))) == *built);
}

TEST_CASE("precedence and associativity") {
  using lang::alt;
  using lang::choice;
  using lang::lit;
  using lang::ret;
  auto r = [](long n) { return ret(lit(I(n))); };
  // <|p|> binds tighter than [~]
  CHECK(*lang::parse("ret 1 [~] ret 2 <|1/2|> ret 3") == *alt(r(1), choice(Prob(1, 2), r(2), r(3))));
  // both associate to the left
  CHECK(*lang::parse("ret 1 [~] ret 2 [~] ret 3") == *alt(alt(r(1), r(2)), r(3)));
  CHECK(*lang::parse("ret 1 <|1/2|> ret 2 <|1/3|> ret 3") ==
        *choice(Prob(1, 3), choice(Prob(1, 2), r(1), r(2)), r(3)));
  // do extends as far right as possible
  CHECK(*lang::parse("do x <- ret 1; ret x [~] ret 2") ==
        *lang::bind("x", r(1), alt(ret(lang::var("x")), r(2))));
  CHECK(*lang::parse("(do x <- ret 1; ret x) [~] ret 2") ==
        *alt(lang::bind("x", r(1), ret(lang::var("x"))), r(2)));
}

TEST_CASE("source errors carry kind and position") {
  const auto unbound = error_of("ret (x == true)");
  CHECK(unbound.kind() == SourceError::Kind::UnboundVariable);
  CHECK(unbound.pos().line == 1);
  CHECK(unbound.pos().column == 6);

  const auto range = error_of("ret true <|3/2|> ret false");
  CHECK(range.kind() == SourceError::Kind::Syntax);
  CHECK(range.pos().column == 12);

  const auto type = error_of("do a <- ret A; ret (a == true)");
  CHECK(type.kind() == SourceError::Kind::Type);

  const auto multi = error_of("do c <- ret true;\n  ret (c ==\n   )");
  CHECK(multi.kind() == SourceError::Kind::Syntax);
  CHECK(multi.pos().line == 3);
  CHECK(std::string(multi.what()).rfind("3:4: syntax error:", 0) == 0);

  CHECK(error_of("").kind() == SourceError::Kind::Syntax);
  CHECK(error_of("ret true ret false").kind() == SourceError::Kind::Syntax);
  CHECK(error_of("ret 1/0").kind() == SourceError::Kind::Syntax);
  CHECK(error_of("do ret <- ret 1; ret 2").kind() == SourceError::Kind::Syntax);
  CHECK(error_of("ret true <|1/0|> ret false").kind() == SourceError::Kind::Syntax);
  CHECK(error_of("ret true @").kind() == SourceError::Kind::Syntax);
}

TEST_CASE("evaluation examples") {
  CHECK(lang::eval_source("ret true") == gens({delta(T)}));
  CHECK(lang::eval_source(programs::coinarb_source(Prob(1, 2))) == gens({delta(F), delta(T)}));
  CHECK(lang::eval_source("(ret 1 [~] ret 2) <|1/3|> ret 3") ==
        gens({dist({{I(1), q(1, 3)}, {I(3), q(2, 3)}}), dist({{I(2), q(1, 3)}, {I(3), q(2, 3)}})}));
  CHECK(lang::eval_source("ret (1 == 1)") == gens({delta(T)}));
  CHECK(lang::eval_source("ret (A == B)") == gens({delta(F)}));
}

TEST_CASE("uniform and arbitrary") {
  const Outcome d = sym("D");
  const std::vector<Outcome> abc{sym("A"), sym("B"), sym("C")};
  CHECK(programs::uniform(d, abc) ==
        gens({dist({{sym("A"), q(1, 3)}, {sym("B"), q(1, 3)}, {sym("C"), q(1, 3)}})}));
  CHECK(programs::uniform(d, std::vector<Outcome>{T}) == gcmonad::ret_gcm(T));
  CHECK(programs::uniform(d, std::vector<Outcome>{}) == gcmonad::ret_gcm(d));
  CHECK(programs::arbitrary(d, std::vector<Outcome>{T, F}) == programs::arb());
  CHECK(programs::arbitrary(d, std::vector<Outcome>{T}) == gcmonad::ret_gcm(T));
  CHECK(programs::arbitrary(d, abc).generators() ==
        std::vector<Dist<Outcome>>{delta(sym("A")), delta(sym("B")), delta(sym("C"))});
  CHECK(programs::arbitrary(d, std::vector<Outcome>{}) == gcmonad::ret_gcm(d));
  // Duplicates are kept in the list and collapse in the value.
  CHECK(programs::arbitrary(d, std::vector<Outcome>{T, F, T}) == programs::arb());
  // Uniform weights stay exact for longer lists.
  std::vector<Outcome> seven;
  for (long i = 0; i < 7; ++i) seven.push_back(I(i));
  const auto u7 = programs::uniform(d, seven);
  REQUIRE(u7.size() == 1);
  for (const auto& [k, w] : u7.generators().front().entries()) CHECK(w == q(1, 7));
}

TEST_CASE("Monty Hall") {
  CHECK(programs::monty(programs::Strategy::Switch) == programs::bcoin(Prob(2, 3)));
  CHECK(programs::monty(programs::Strategy::Stick) == programs::bcoin(Prob(1, 3)));
  CHECK(render(programs::monty(programs::Strategy::Switch), Format::Text) == "{false: 1/3, true: 2/3}");
  CHECK(render(programs::monty(programs::Strategy::Stick), Format::Text) == "{false: 2/3, true: 1/3}");
}

TEST_CASE("a guess that ignores the hiding place") {
  const auto& doors = programs::doors();
  const Outcome d = doors.front();
  const Gcm hide = programs::arbitrary(d, doors);
  const Gcm pick = programs::uniform(d, doors);
  // Binding an arbitrary choice and ignoring it changes nothing.
  for (const Gcm& m : {programs::bcoin(Prob(1, 5)), programs::arb(), pick}) {
    CHECK(gcmonad::bind_gcm(hide, [&](const Outcome&) { return m; }) == m);
  }
  const Gcm differ = gcmonad::bind_gcm(hide, [&](const Outcome& h) {
    return gcmonad::bind_gcm(pick, [&](const Outcome& p) { return gcmonad::ret_gcm(B(!(h == p))); });
  });
  CHECK(differ == programs::bcoin(Prob(2, 3)));
}

TEST_CASE("rendering") {
  CHECK(render(gcmonad::ret_gcm(T), Format::Text) == "{true: 1}");
  CHECK(render(programs::arb(), Format::Text) == "{false: 1}\n{true: 1}");
  CHECK(render(lang::eval_source("(ret 1 [~] ret 2) <|1/3|> ret 3"), Format::Structured) ==
        R"({"generators":[[[1,"1/3"],[3,"2/3"]],[[2,"1/3"],[3,"2/3"]]]})");
  CHECK(render(programs::arbitrary(sym("A"), programs::doors()), Format::Structured) ==
        R"({"generators":[[["A","1"]],[["B","1"]],[["C","1"]]]})");
  CHECK(render(programs::arb(), Format::Structured) == R"({"generators":[[[false,"1"]],[[true,"1"]]]})");
  for (long n = 0; n <= 4; ++n) {
    const Gcm a = programs::coinarb(Prob(n, 4));
    CHECK(render(a, Format::Structured) == render(programs::arb(), Format::Structured));
    CHECK(render(a, Format::Text) == render(programs::arb(), Format::Text));
  }
}

TEST_CASE("print then parse is the identity") {
  for (int t = 0; t < 200; ++t) {
    AstGen gen(100 + t, false);
    const auto e = gen.program(4);
    const std::string text = lang::print(*e);
    CAPTURE(text);
    CHECK(*lang::parse(text) == *e);
    CHECK(lang::print(*lang::parse(text)) == text);
  }
}

TEST_CASE("environment evaluator agrees with the substitution evaluator") {
  for (int t = 0; t < 200; ++t) {
    AstGen gen(500 + t, true);
    const auto e = gen.program(4);
    CAPTURE(lang::print(*e));
    CHECK(lang::eval(*e) == gcmonad::oracle::subst_eval(*e));
  }
}

TEST_CASE("corpus") {
  const auto corpus = load_corpus(GCMONAD_CORPUS_DIR);
  REQUIRE(corpus.size() >= 10);
  bool saw_coinarb = false;
  for (const auto& entry : corpus) {
    CAPTURE(entry.name);
    saw_coinarb = saw_coinarb || entry.name == "coinarb";
    if (entry.expects_error()) {
      try {
        lang::eval_source(entry.source);
        FAIL("no error for " << entry.name);
      } catch (const SourceError& e) {
        CHECK(std::string(e.what()).rfind(entry.expected, 0) == 0);
      }
      continue;
    }
    const auto ast = lang::parse(entry.source);
    CHECK(*lang::parse(lang::print(*ast)) == *ast);
    const Gcm v = lang::eval(*ast);
    CHECK(render(v, Format::Text) == entry.expected);
    CHECK(v == gcmonad::oracle::subst_eval(*ast));
  }
  CHECK(saw_coinarb);
}
