// Batch command-line front end: one subcommand per analysis, reports as an
// aligned table, CSV or JSON lines.

#ifndef SHIRSHOV_CLI_HPP
#define SHIRSHOV_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace shirshov {

enum class OutputFormat { table, csv, jsonl };

struct RunConfig {
  std::string subcommand;
  // Flag name without dashes -> value; boolean flags map to "true".
  std::map<std::string, std::string> params;
  OutputFormat format = OutputFormat::table;
  std::uint64_t budget = 10'000'000;
  std::uint64_t seed = 1;
};

namespace exit_code {
constexpr int ok = 0;
constexpr int unknown_subcommand = 1;
constexpr int domain_error = 2;
constexpr int budget_exhausted = 3;
}  // namespace exit_code

const std::vector<std::string>& subcommands();

// Executes the subcommand and writes its report to out; diagnostics go to
// err.  Returns one of the exit codes.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

// Parses argv (argv[1] is the subcommand) and runs it.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace shirshov

#endif  // SHIRSHOV_CLI_HPP
