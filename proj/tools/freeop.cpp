#include "freeop/cli/run.hpp"

#include "CLI11.hpp"

#include <iostream>

namespace cli = freeop::cli;

namespace {

struct Leaf {
  CLI::App* app;
  cli::Command command;
};

int worst(int a, int b) {
  auto rank = [](int c) { return c == 1 ? 3 : c == 2 ? 2 : c == 3 ? 1 : 0; };
  return rank(a) >= rank(b) ? a : b;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"freeop: D-rings, prolongations, D-varieties and UC_D instance checks"};
  app.require_subcommand(0, 1);

  cli::RunOptions options;
  std::size_t budget = 0;
  bool fixtures = false;
  std::string fixtures_dir = FREEOP_FIXTURES_DIR;
  std::vector<std::string> files;

  app.add_flag("--json", options.json, "Emit machine-readable JSON");
  app.add_option("--budget", budget, "Cap on Groebner basis size; exceeding it reports undetermined (exit 3)")
      ->check(CLI::PositiveNumber);
  app.add_option("--order", options.order, "Monomial order for ideals: grevlex or lex")
      ->check(CLI::IsMember({"grevlex", "lex"}));
  app.add_option("--block", options.block, "Only run on the named block");
  app.add_flag("--fixtures", fixtures, "Run the shipped fixture corpus");
  app.add_option("--fixtures-dir", fixtures_dir, "Fixture directory for --fixtures")->check(CLI::ExistingDirectory);

  std::vector<Leaf> leaves;
  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help, cli::Command c) {
    CLI::App* sub = parent->add_subcommand(name, help);
    sub->add_option("files", files, "Input .dr files")->required()->check(CLI::ExistingFile);
    leaves.push_back({sub, c});
  };
  CLI::App* algebra = app.add_subcommand("algebra", "Finite-dimensional algebras")->require_subcommand(1);
  leaf(algebra, "check", "Check commutativity, associativity and the unit", cli::Command::algebra_check);
  leaf(algebra, "decompose", "Local decomposition and residue fields", cli::Command::algebra_decompose);
  CLI::App* dring = app.add_subcommand("dring", "D-ring structures")->require_subcommand(1);
  leaf(dring, "verify", "Validate a D-ring structure and its D-ideal fixtures", cli::Command::dring_verify);
  leaf(&app, "prolong", "Print the prolongation tau X", cli::Command::prolong);
  CLI::App* dvariety = app.add_subcommand("dvariety", "D-varieties")->require_subcommand(1);
  leaf(dvariety, "check", "Validate a D-variety", cli::Command::dvariety_check);
  leaf(dvariety, "sharp", "Sharp locus and rational sharp points", cli::Command::dvariety_sharp);
  leaf(dvariety, "descend", "Weil descent to Q", cli::Command::dvariety_descend);
  CLI::App* ucd = app.add_subcommand("ucd", "UC_D instances")->require_subcommand(1);
  leaf(ucd, "check", "Verify the hypotheses of an instance", cli::Command::ucd_check);
  leaf(ucd, "search", "Search for a with nabla(a) in U", cli::Command::ucd_search);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : cli::exit_input_error;
  }
  if (budget > 0) options.budget = budget;

  if (fixtures) {
    const cli::FixtureReport report = cli::run_fixtures(fixtures_dir, options);
    std::cout << (options.json ? report.json() : report.text());
    return report.passed() ? cli::exit_ok : cli::exit_refuted;
  }

  for (const auto& l : leaves) {
    if (!l.app->parsed()) continue;
    const std::vector<std::filesystem::path> paths(files.begin(), files.end());
    const auto results = cli::run_batch(l.command, paths, options);
    int code = cli::exit_ok;
    for (std::size_t i = 0; i < results.size(); ++i) {
      if (results.size() > 1 && !options.json) std::cout << "== " << paths[i].string() << " ==\n";
      std::cout << results[i].output(options);
      code = worst(code, results[i].exit_code);
    }
    return code;
  }
  std::cout << app.help();
  return cli::exit_input_error;
}
