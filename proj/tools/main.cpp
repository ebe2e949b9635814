#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "strdet/cli.hpp"

namespace {

// Writes to a sibling temporary file and renames it over the target.
bool write_atomically(const std::string& path, const std::string& text) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) return false;
    out << text;
    if (!out.flush()) return false;
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  return !ec;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimal right determiners of string algebras on tree quivers"};
  app.require_subcommand(1);

  strdet::RunConfig config;
  std::string output;

  auto file_command = [&](const std::string& name, const std::string& help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("input", config.input, "algebra description file, - for stdin")->required();
    sub->add_flag("--json", config.json, "machine-readable output");
    sub->add_option("-o,--output", output, "write the result to this file");
    return sub;
  };
  file_command("validate", "check the string-algebra conditions");
  file_command("classify", "vertex classes");
  file_command("ideals", "vertex ideals and their witnesses");
  file_command("determiners", "projective determiners and the count formula");
  for (auto* sub : {file_command("oracle", "brute-force determiners from the AR quiver"),
                    file_command("check", "compare the formula engine with the oracle")})
    sub->add_option("--max-strings", config.max_strings, "refuse algebras with more indecomposables")
        ->capture_default_str();
  auto* dot = file_command("export-dot", "Graphviz export of the quiver");
  dot->add_flag("--ar", config.with_ar, "export the AR quiver instead");
  dot->add_option("--max-strings", config.max_strings, "refuse algebras with more indecomposables")
      ->capture_default_str();

  auto* gen = app.add_subcommand("gen-example", "print an example algebra");
  gen->add_option("family", config.family, "six, zigzag, fork, fork-single, lambda, linear or dn")->required();
  gen->add_option("-n,--size", config.size, "lambda level, or vertex count for linear and dn");
  gen->add_option("--orientation", config.orientation, "linear: one letter r or l per arrow");
  gen->add_option("-o,--output", output, "write the result to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? strdet::exit_ok : strdet::exit_usage;
  }
  config.command = app.get_subcommands().front()->get_name();

  const strdet::RunResult result = strdet::run(config);
  if (!result.err.empty()) std::cerr << result.err;
  if (!result.out.empty()) {
    if (output.empty()) {
      std::fwrite(result.out.data(), 1, result.out.size(), stdout);
      std::fflush(stdout);
    } else if (!write_atomically(output, result.out)) {
      std::cerr << "error: cannot write " << output << '\n';
      return strdet::exit_usage;
    }
  }
  return result.exit_code;
}
