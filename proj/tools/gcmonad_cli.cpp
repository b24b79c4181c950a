// gcmonad: evaluate choice programs, check the monad laws, play Monty Hall.
//
// Exit codes: 0 success, 1 parse/evaluation/usage error, 2 a law check failed.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "gcmonad/laws.hpp"
#include "gcmonad/programs.hpp"

namespace {

using namespace gcmonad;

int run_eval(const std::string& path, const std::string& format) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  } else {
    std::ifstream in(path);
    if (!in) {
      std::cerr << path << ": cannot open file\n";
      return 1;
    }
    text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  }
  try {
    const Gcm v = lang::eval_source(text);
    std::cout << render(v, format == "structured" ? Format::Structured : Format::Text) << '\n';
  } catch (const lang::SourceError& e) {
    std::cerr << (path == "-" ? "<stdin>" : path) << ':' << e.what() << '\n';
    return 1;
  }
  return 0;
}

int run_check_laws(const GenConfig& config, const std::string& law, std::size_t shown) {
  std::vector<LawReport> reports;
  if (law.empty()) {
    reports = check_all(config);
  } else {
    reports.push_back(check_law(law, config));
  }
  std::cout << render_reports(reports, shown);
  const bool ok = all_passed(reports);
  std::cout << (ok ? "all laws behaved as expected" : "law check FAILED") << " (seed " << config.seed << ")\n";
  return ok ? 0 : 2;
}

void print_monty(const char* label, programs::Strategy s) {
  std::cout << label << ": " << render(programs::monty(s), Format::Text) << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact semantics for programs mixing probabilistic and nondeterministic choice"};
  app.require_subcommand(1);

  auto* eval_cmd = app.add_subcommand("eval", "Parse, evaluate and render a program");
  std::string eval_path;
  std::string eval_format = "text";
  eval_cmd->add_option("--format", eval_format, "Output format")
      ->check(CLI::IsMember({"text", "structured"}));
  eval_cmd->add_option("file", eval_path, "Program file, or - for standard input")->required();

  auto* laws_cmd = app.add_subcommand("check-laws", "Run the randomized law checks");
  GenConfig config;
  std::string law_name;
  std::size_t shown = 3;
  laws_cmd->add_option("--trials", config.trials, "Trials per law")->capture_default_str();
  laws_cmd->add_option("--seed", config.seed, "Base seed")->capture_default_str();
  laws_cmd->add_option("--law", law_name, "Run a single law");
  laws_cmd->add_option("--carrier-size", config.carrier_size, "Outcome carrier size")->capture_default_str();
  laws_cmd->add_option("--max-support", config.max_support, "Maximum support size")->capture_default_str();
  laws_cmd->add_option("--max-generators", config.max_generators, "Maximum generators per set")
      ->capture_default_str();
  laws_cmd->add_option("--max-denominator", config.max_denominator, "Maximum probability denominator")
      ->capture_default_str();
  laws_cmd->add_option("--show", shown, "Counterexamples printed per law")->capture_default_str();
  auto* list_flag = laws_cmd->add_flag("--list", "List registered laws and exit");

  auto* monty_cmd = app.add_subcommand("monty", "Evaluate the Monty Hall game");
  std::string strategy = "both";
  monty_cmd->add_option("--strategy", strategy, "Player strategy")
      ->check(CLI::IsMember({"stick", "switch", "both"}))
      ->capture_default_str();

  app.add_subcommand("version", "Print the version");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    if (*eval_cmd) return run_eval(eval_path, eval_format);
    if (*laws_cmd) {
      if (*list_flag) {
        for (const auto& law : law_registry()) {
          std::cout << law.name << (law.expected == Expectation::Refuted ? " (negative control)" : "") << ": "
                    << law.statement << '\n';
        }
        return 0;
      }
      return run_check_laws(config, law_name, shown);
    }
    if (*monty_cmd) {
      if (strategy != "switch") print_monty("stick", programs::Strategy::Stick);
      if (strategy != "stick") print_monty("switch", programs::Strategy::Switch);
      return 0;
    }
    std::cout << "gcmonad " << GCMONAD_VERSION << '\n';
    return 0;
  } catch (const LawError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
