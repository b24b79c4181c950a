// Runs every acceptance criterion once and prints one PASS/FAIL line each.
// Exit status is nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "corpus.hpp"
#include "gcmonad/laws.hpp"
#include "gcmonad/programs.hpp"
#include "helpers.hpp"
#include "instances.hpp"
#include "oracles/hull_oracle.hpp"
#include "random_ast.hpp"

using namespace testing;
namespace lang = gcmonad::lang;
namespace programs = gcmonad::programs;
using gcmonad::Format;
using gcmonad::GenConfig;
using gcmonad::render;

namespace {

struct Verdict {
  bool ok;
  std::string detail;
};

// The size bounds shared by the randomized criteria.
GenConfig desk_scale(int trials) {
  GenConfig c;
  c.carrier_size = 4;
  c.max_support = 4;
  c.max_generators = 4;
  c.max_denominator = 12;
  c.trials = trials;
  return c;
}

// Reads a boolean distribution literal such as "{true: 2/3, false: 1/3}",
// accepting the entries in any order.
Dist<Outcome> bool_dist_literal(std::string text) {
  if (text.size() < 2 || text.front() != '{' || text.back() != '}') throw std::invalid_argument("bad literal " + text);
  text = text.substr(1, text.size() - 2);
  std::vector<Dist<Outcome>::Entry> entries;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto colon = item.find(':');
    std::string key = item.substr(0, colon);
    key.erase(0, key.find_first_not_of(' '));
    const std::string weight = item.substr(colon + 1);
    if (key != "true" && key != "false") throw std::invalid_argument("bad key " + key);
    entries.emplace_back(B(key == "true"), Rat::parse(weight.substr(weight.find_first_not_of(' '))));
  }
  return Dist<Outcome>::from_weights(std::move(entries));
}

Verdict full_law_suite() {
  const auto reports = gcmonad::check_all(desk_scale(200));
  int positive = 0;
  int negative = 0;
  std::string bad;
  for (const auto& r : reports) {
    const bool is_negative = r.expected == gcmonad::Expectation::Refuted;
    (is_negative ? negative : positive)++;
    if (r.trials < 200 || !r.passed()) bad += "\n" + gcmonad::render_report(r);
  }
  const bool ok = bad.empty() && negative == 2 && gcmonad::all_passed(reports);
  return {ok, std::to_string(positive) + " positive laws with zero failures, " + std::to_string(negative) +
                  " negative controls refuted, 200 trials each" + bad};
}

Verdict monty_hall() {
  const Gcm sw = programs::monty(programs::Strategy::Switch);
  const Gcm st = programs::monty(programs::Strategy::Stick);
  // Compared entry by entry against the stated literals; the rendering itself
  // lists keys in canonical order, false before true.
  const Gcm want_sw = Gcm::singleton(bool_dist_literal("{true: 2/3, false: 1/3}"));
  const Gcm want_st = Gcm::singleton(bool_dist_literal("{true: 1/3, false: 2/3}"));
  const std::string sw_text = render(sw, Format::Text);
  const std::string st_text = render(st, Format::Text);
  const bool ok = sw == want_sw && st == want_st && sw == programs::bcoin(Prob(2, 3)) &&
                  st == programs::bcoin(Prob(1, 3)) && sw_text == render(want_sw, Format::Text) &&
                  st_text == render(want_st, Format::Text) && sw_text == "{false: 1/3, true: 2/3}" &&
                  st_text == "{false: 2/3, true: 1/3}";
  return {ok, "switch " + sw_text + ", stick " + st_text};
}

Verdict coinarb_equals_arb() {
  const Gcm arb = lang::eval_source(programs::arb_source());
  std::string bad;
  for (const auto& p : {Prob(0), Prob(1, 3), Prob(1, 2), Prob(2, 3), Prob(1)}) {
    if (lang::eval_source(programs::coinarb_source(p)) != arb) bad += " " + p.str();
  }
  return {bad.empty() && arb == programs::arb(), bad.empty() ? "p in {0, 1/3, 1/2, 2/3, 1}" : "differs at" + bad};
}

Verdict nontriviality() {
  gcmonad::Gen g(desk_scale(1), 2024);
  const Gcm t = gcmonad::ret_gcm(B(true));
  const Gcm f = gcmonad::ret_gcm(B(false));
  int pairs = 0;
  std::string bad;
  while (pairs < 20) {
    const Prob p = g.prob();
    const Prob q = g.prob();
    if (p == q) continue;
    ++pairs;
    if (gcmonad::choice_gcm(p, t, f) == gcmonad::choice_gcm(q, t, f)) bad += " (" + p.str() + ", " + q.str() + ")";
  }
  return {bad.empty(), bad.empty() ? "20 pairs all distinct" : "equal for" + bad};
}

Verdict hull_oracle_agreement() {
  int disagreements = 0;
  int inside = 0;
  for (int i = 0; i < 500; ++i) {
    const auto inst = random_hull_instance(static_cast<std::uint64_t>(i));
    const bool fast = gcmonad::in_hull(inst.x, inst.gens);
    if (fast != gcmonad::oracle::in_hull_oracle(inst.x, inst.gens)) ++disagreements;
    inside += fast ? 1 : 0;
  }
  return {disagreements == 0, std::to_string(disagreements) + " disagreements on 500 instances (" +
                                  std::to_string(inside) + " inside)"};
}

Verdict hull_laws() {
  std::string detail;
  bool ok = true;
  for (const char* name : {"affine_image_hull", "lub_op_hull"}) {
    const auto r = gcmonad::check_law(name, desk_scale(200));
    ok = ok && r.passed() && r.trials == 200;
    detail += (detail.empty() ? "" : ", ") + std::string(name) + " " + std::to_string(r.failures.size()) + " failures";
    if (!r.passed()) detail += "\n" + gcmonad::render_report(r);
  }
  return {ok, detail};
}

Verdict flattening() {
  gcmonad::Gen g(desk_scale(1), 7);
  int failures = 0;
  for (int i = 0; i < 200; ++i) {
    const Dist<Outcome> d = g.dist();
    const auto dd = gcmonad::map_dist([](const Outcome& o) { return gcmonad::point(o); }, d);
    if (gcmonad::barycenter(dd) != d) ++failures;
  }
  return {failures == 0, std::to_string(failures) + " failures on 200 distributions"};
}

Verdict round_trip() {
  int bad_ast = 0;
  for (int t = 0; t < 200; ++t) {
    AstGen gen(9000 + static_cast<std::uint64_t>(t), false);
    const auto e = gen.program(4);
    const std::string text = lang::print(*e);
    const auto back = lang::parse(text);
    if (!(*back == *e) || lang::print(*back) != text) ++bad_ast;
  }

  const auto corpus = load_corpus(GCMONAD_CORPUS_DIR);
  int programs_checked = 0;
  int bad_corpus = 0;
  bool saw_coinarb = false;
  for (const auto& entry : corpus) {
    if (entry.expects_error()) continue;
    saw_coinarb = saw_coinarb || entry.name == "coinarb";
    ++programs_checked;
    const auto ast = lang::parse(entry.source);
    const bool stable = *lang::parse(lang::print(*ast)) == *ast;
    if (!stable || render(lang::eval(*ast), Format::Text) != entry.expected) ++bad_corpus;
  }

  // Equal values built by different routes must render byte for byte alike.
  int unstable = 0;
  const std::string arb = render(programs::arb(), Format::Structured);
  for (long n = 0; n <= 12; ++n) {
    if (render(programs::coinarb(Prob(n, 12)), Format::Structured) != arb) ++unstable;
  }
  gcmonad::Gen g(desk_scale(1), 11);
  for (int i = 0; i < 100; ++i) {
    const Gcm m = g.gcm();
    const auto k = g.kleisli();
    const Gcm a = gcmonad::bind_gcm(m, k);
    const Gcm b = gcmonad::bind_gcm_product(m, k);
    if (a != b || render(a, Format::Structured) != render(b, Format::Structured)) ++unstable;
  }

  const bool ok = bad_ast == 0 && bad_corpus == 0 && saw_coinarb && programs_checked >= 10 && unstable == 0;
  return {ok, std::to_string(bad_ast) + "/200 AST mismatches, " + std::to_string(bad_corpus) + "/" +
                  std::to_string(programs_checked) + " corpus mismatches, " + std::to_string(unstable) +
                  " unstable renderings"};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit_seconds;  // 0 means no stated bound
    std::function<Verdict()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "full law suite", 60, full_law_suite},
      {2, "Monty Hall", 5, monty_hall},
      {3, "coinarb equals arb", 1, coinarb_equals_arb},
      {4, "probabilistic choice is nontrivial", 0, nontriviality},
      {5, "hull membership agrees with the oracle", 30, hull_oracle_agreement},
      {6, "affine images and lub preserve hulls", 0, hull_laws},
      {7, "flattening identity", 0, flattening},
      {8, "parser round trip and stable rendering", 0, round_trip},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v{false, ""};
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_seconds > 0 && secs >= c.limit_seconds) {
      v.ok = false;
      v.detail += "; over the " + std::to_string(static_cast<int>(c.limit_seconds)) + " s limit";
    }
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2f s", secs);
    std::cout << (v.ok ? "PASS" : "FAIL") << " [" << c.id << "] " << c.name << ": " << v.detail << " (" << timing
              << ")" << std::endl;
    failed += v.ok ? 0 : 1;
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << std::endl;
  return failed == 0 ? 0 : 1;
}
