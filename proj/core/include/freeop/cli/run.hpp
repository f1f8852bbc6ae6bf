#pragma once

#include "freeop/cli/document.hpp"
#include "freeop/poly/ideal.hpp"

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace freeop::cli {

enum class Command {
  algebra_check,
  algebra_decompose,
  dring_verify,
  prolong,
  dvariety_check,
  dvariety_sharp,
  dvariety_descend,
  ucd_check,
  ucd_search,
};

/// "algebra check", "prolong", ...
std::string command_name(Command c);
/// Inverse of command_name; nullopt for an unknown command.
std::optional<Command> parse_command(const std::string& text);
const std::vector<Command>& all_commands();

/// Process exit codes.
inline constexpr int exit_ok = 0;
inline constexpr int exit_input_error = 1;
inline constexpr int exit_refuted = 2;
inline constexpr int exit_undetermined = 3;

struct RunOptions {
  bool json = false;
  /// Caps the size of every Groebner basis; exceeding it is reported as
  /// undetermined.
  std::optional<std::size_t> budget;
  std::string order = "grevlex";
  /// Restricts the command to one block.
  std::optional<std::string> block;

  IdealOptions ideal_options() const;
};

struct RunResult {
  int exit_code = exit_ok;
  std::string text;
  /// Serialized JSON report.
  std::string json;
  /// Blocks the command applied to; zero means nothing to do.
  std::size_t blocks_run = 0;

  /// text or json, depending on the options used.
  const std::string& output(const RunOptions& options) const { return options.json ? json : text; }
};

/// Runs one command over every applicable block of the document, or over
/// options.block only. Errors from a block are reported under its name and
/// do not stop the other blocks; the exit code is the most severe one
/// (input error, then refuted, then undetermined).
RunResult run(Command command, const Document& doc, const RunOptions& options = {});

/// Reads, parses and runs a file; parse errors become exit code 1 with the
/// file name and position in the message.
RunResult run_file(Command command, const std::filesystem::path& path, const RunOptions& options = {});

/// run_file over several files concurrently; results in input order.
std::vector<RunResult> run_batch(Command command, const std::vector<std::filesystem::path>& paths,
                                 const RunOptions& options = {});

struct FixtureOutcome {
  std::filesystem::path path;
  /// command_name(), or "parse" for the round-trip step.
  std::string command;
  int expected = exit_ok;
  int actual = exit_ok;
  bool round_trip = true;
  double seconds = 0;
  std::string message;

  bool passed() const { return round_trip && expected == actual; }
};

struct FixtureReport {
  std::vector<FixtureOutcome> outcomes;
  double seconds = 0;
  bool passed() const;
  std::string text() const;
  std::string json() const;
};

/// Every *.dr file in `dir`, sorted: checks print/parse idempotence, then
/// runs each command that applies to some block. A comment line
/// `# expect <command>: <code>` sets a nonzero expected exit code.
FixtureReport run_fixtures(const std::filesystem::path& dir, const RunOptions& options = {});

}  // namespace freeop::cli
