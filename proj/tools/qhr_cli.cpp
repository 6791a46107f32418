#include <string>

#include <CLI11.hpp>

#include "qhr/commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"exact BRST cohomology of quantum Hamiltonian reductions"};
  app.require_subcommand(1);

  std::string config_path;
  qhr::CliOptions opts;
  std::string command;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", config_path, "run configuration file")
        ->required();
    sub->add_option("--max-degree", [&](const CLI::results_t& r) {
      opts.max_degree = std::stoi(r.front());
      return true;
    }, "override the truncation bound");
    sub->add_option("--weights", [&](const CLI::results_t& r) {
      opts.weights = r.front();
      return true;
    }, "weight sectors: 'auto' or 'a,b;c,d'");
    sub->add_option("--output", [&](const CLI::results_t& r) {
      opts.format = r.front();
      return true;
    }, "report format: text or json");
    sub->add_option("--out", opts.out_path, "write the report to this path");
    sub->add_option("--jobs", opts.jobs, "parallel sector workers")
        ->check(CLI::PositiveNumber);
    sub->callback([&, sub] { command = sub->get_name(); });
  };

  for (const char* name :
       {"validate", "flatness", "brst", "oracle", "predict", "verify"}) {
    add_common(app.add_subcommand(name));
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 3;
  }

  return qhr::run_command(command, config_path, opts);
}
