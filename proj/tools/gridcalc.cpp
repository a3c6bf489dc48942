#include <CLI11.hpp>

#include <iostream>
#include <map>

#include "gridarith/cli.hpp"

int main(int argc, char** argv) {
  using gridarith::cli::Output;
  using gridarith::chain::Rounding;

  CLI::App app{"Grid arithmetic calculator"};
  gridarith::cli::Invocation inv;
  std::vector<std::string> words;
  std::optional<std::string> trace;
  std::string csv;

  app.add_option("expression", words, "e.g. \"2075 / 25\" or \"chain(425, 23; 13, 10)\"");
  app.add_option("--base", inv.base, "numeral base, 2..36")->capture_default_str();
  app.add_option("--trace", trace, "print the trace as text or json")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--precision", inv.precision, "fractional digits for chain results")->capture_default_str();
  app.add_option("--rounding", inv.rounding, "truncate or half-up")
      ->transform(CLI::CheckedTransformer(std::map<std::string, Rounding>{{"truncate", Rounding::truncate},
                                                                          {"half-up", Rounding::half_up}}));
  app.add_option("--seed", inv.seed, "evaluate a generated case when no expression is given");
  app.add_option("--csv", csv, "write chain steps to this CSV file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return 1;
  }

  for (const std::string& w : words) inv.expression += (inv.expression.empty() ? "" : " ") + w;
  if (trace) inv.output = *trace == "json" ? Output::json_trace : Output::text_trace;
  if (!csv.empty()) inv.csv_path = csv;
  return gridarith::cli::run(inv, std::cout, std::cerr);
}
