#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "mop/commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Marked order polyhedra: faces, vertices, facets and conditional dimensions."};
  app.set_version_flag("--version", "mop 0.1.0");

  std::string command;
  std::string path;
  mop::CommandOptions options;
  std::string point;

  app.add_option("command", command, "One of: check dim faces facets vertices regularize "
                                     "minkowski conditional-dim oracle-verify")
      ->required()
      ->check(CLI::IsMember(mop::command_names()));
  app.add_option("file", path, "Input .mop document, or - for standard input")->required();
  app.add_flag("--json", options.json, "Machine-readable output");
  app.add_option("--max-elements", options.max_elements, "Enumeration guard")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", options.seed, "Seed for randomized verification")->capture_default_str();
  app.add_option("--samples", options.samples, "Random points drawn by oracle-verify")
      ->capture_default_str();
  app.add_option("--point", point, "Point as k=v,... over the unmarked elements");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : mop::kExitParseError;
  }
  if (!point.empty()) options.point = point;

  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(path);
    if (!in) {
      std::cerr << "error: cannot read '" << path << "'\n";
      return mop::kExitParseError;
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    text = buffer.str();
  }
  return mop::run_command(command, text, options, std::cout, std::cerr);
}
