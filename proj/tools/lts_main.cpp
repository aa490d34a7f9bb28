#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "lts/commands.hpp"

namespace {

int dispatch(lts::Command command, const std::string& input, const std::string& json_out, const lts::CommandOptions& options) {
  const lts::CommandResult r = lts::run_command_file(command, input, options);
  if (r.exit_code == lts::kExitInputError) {
    std::cerr << "error: " << r.error << "\n";
    return r.exit_code;
  }
  if (json_out.empty()) {
    std::cout << r.summary;
  } else if (json_out == "-") {
    std::cout << r.json;
  } else {
    std::ofstream out(json_out, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot write " << json_out << "\n";
      return lts::kExitInputError;
    }
    out << r.json;
    std::cout << r.summary;
  }
  return r.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact analysis of graded Leibniz triple systems"};
  app.set_version_flag("--version", std::string(lts::kToolName) + " " + lts::kToolVersion);
  app.require_subcommand(1);

  std::string input;
  std::string json_out;
  lts::CommandOptions options;

  struct Sub {
    const char* name;
    const char* help;
    lts::Command command;
  };
  const Sub subs[] = {
      {"verify", "check the axioms, the fundamental identity and the grading", lts::Command::verify},
      {"analyze", "supports and connection classes with witness sequences", lts::Command::analyze},
      {"embed", "standard embedding summary and certificates", lts::Command::embed},
      {"decompose", "ideal decomposition, structure checks and simplicity obstructions", lts::Command::decompose},
  };
  lts::Command chosen = lts::Command::verify;
  for (const Sub& s : subs) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    sub->add_option("input", input, "system file")->required();
    sub->add_option("--json", json_out, "write the JSON report here ('-' for stdout)");
    if (s.command == lts::Command::decompose) {
      sub->add_option("--seed", options.seed, "seed for random probe lines")->default_val(0);
      sub->add_option("--probes", options.random_probes, "number of random probe lines")->default_val(16);
    }
    sub->callback([&chosen, c = s.command] { chosen = c; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : lts::kExitInputError;
  }
  return dispatch(chosen, input, json_out, options);
}
