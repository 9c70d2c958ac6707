// shchain: count, enumerate, verify and cross-check semi-Heyting
// implications on finite chains.

#include <iostream>
#include <map>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "shchain/cli.hpp"

namespace {

void add_cap_flags(CLI::App* cmd, shchain::cli::Caps& caps) {
  cmd->add_option("--max-pure", caps.max_pure, "Largest n for the unrestricted oracle")
      ->capture_default_str();
  cmd->add_option("--max-forced", caps.max_forced, "Largest n for the skeleton oracle")
      ->capture_default_str();
  cmd->add_option("--max-construct", caps.max_construct,
                  "Largest n for counting by construction")
      ->capture_default_str();
  cmd->add_option("--max-formula", caps.max_formula, "Largest n for formula comparisons")
      ->capture_default_str();
}

const std::map<std::string, shchain::Format> kFormats = {
    {"text", shchain::Format::Text},
    {"json", shchain::Format::Json},
    {"auto", shchain::Format::Auto},
};

}  // namespace

int main(int argc, char** argv) {
  using namespace shchain::cli;

  CLI::App app{"Semi-Heyting algebras on finite chains"};
  app.require_subcommand(1);

  Caps caps;
  std::size_t n = 0;

  auto* count = app.add_subcommand("count", "Print the number of algebras on the n-chain");
  std::string method = "recursive";
  count->add_option("--n", n, "Chain size")->required();
  count->add_option("--method", method,
                    "recursive | product | construct | oracle-pure | oracle-forced")
      ->capture_default_str();
  add_cap_flags(count, caps);

  auto* enumerate = app.add_subcommand("enumerate", "Stream every table on the n-chain");
  shchain::Format enum_format = shchain::Format::Text;
  std::string destination = "-";
  std::optional<std::uint64_t> limit;
  enumerate->add_option("--n", n, "Chain size")->required();
  enumerate->add_option("--format", enum_format, "text | json")
      ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));
  enumerate->add_option("--out", destination, "Output file, '-' for standard output")
      ->capture_default_str();
  enumerate->add_option("--limit", limit, "Stop after this many tables");

  auto* verify = app.add_subcommand("verify", "Check a table document against the axioms");
  std::string input;
  shchain::Format verify_format = shchain::Format::Auto;
  verify->add_option("file", input, "Table document")->required();
  verify->add_option("--format", verify_format, "text | json | auto")
      ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));

  auto* crosscheck =
      app.add_subcommand("crosscheck", "Compare constructor, oracle and both formulas");
  add_cap_flags(crosscheck, caps);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInputError;
  }

  if (*count) {
    auto parsed = parse_count_method(method);
    if (!parsed) {
      std::cerr << "error: unknown method '" << method << "'\n";
      return kExitInputError;
    }
    return cmd_count(n, *parsed, caps, std::cout, std::cerr);
  }
  if (*enumerate) return cmd_enumerate(n, enum_format, destination, limit, std::cout, std::cerr);
  if (*verify) return cmd_verify(input, verify_format, std::cout, std::cerr);
  return cmd_crosscheck(caps, std::cout, std::cerr);
}
