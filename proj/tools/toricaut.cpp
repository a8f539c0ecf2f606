// toricaut: structure of the automorphism group of a complete toric variety.
//
//   toricaut <subcommand> <fan.json> [--format text|json] [--check] [--box B]
//
// Exit codes: 0 success, 1 invalid input, 2 internal invariant violation.

#include "toric/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <map>

int main(int argc, char** argv) {
  using namespace toric::cli;

  CLI::App app{"Automorphism group of a complete toric variety from its fan"};
  std::string subcommand;
  std::string path;
  std::string format = "text";
  Flags flags;

  std::vector<std::string> names(kSubcommands.begin(), kSubcommands.end());
  app.add_option("subcommand", subcommand, "One of: validate, classgroup, roots, classes, aut0, symmetries, "
                                           "component-group, report")
      ->required()
      ->check(CLI::IsMember(names));
  app.add_option("fan", path, "Fan file (JSON)")->required();
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--check", flags.check, "Run the symbolic verification suite on every root");
  app.add_option("--box", flags.box, "Half-width of the monomial sample box")->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInvalid;
  }
  flags.format = format == "json" ? OutputFormat::Json : OutputFormat::Text;

  RunResult result;
  try {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw toric::InputError("ParseError", "cannot open " + path);
    const std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    result = run(subcommand, parse_fan_file(text), flags);
  } catch (const toric::InputError& e) {
    result.report = {{"command", subcommand},
                     {"status", "invalid_fan"},
                     {"error", {{"kind", e.kind()}, {"message", e.what()}, {"indices", e.indices()}}}};
    result.exit_code = kExitInvalid;
  }

  if (flags.format == OutputFormat::Json)
    std::cout << result.report.dump(2) << "\n";
  else
    std::cout << render_text(result.report);
  return result.exit_code;
}
