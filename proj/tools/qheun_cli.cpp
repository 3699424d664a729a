#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "qheun/runner.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Exact verification runner for q-Heun and Askey-Wilson identities"};
  app.require_subcommand(1);

  auto* list = app.add_subcommand("list", "List the available suites");
  auto* run = app.add_subcommand("run", "Run one suite and print a JSON report");

  std::map<std::string, std::string> raw;
  std::string config_path;
  auto flag = [&](const std::string& name, const std::string& help) {
    run->add_option_function<std::string>("--" + name, [&raw, name](const std::string& v) { raw[name] = v; }, help);
  };
  flag("suite", "qhahn | heun-aw | degenerations | tridiagonal | characterizations | pastro | aw-triple | finite-matrix");
  for (const char* k : {"q", "a", "b", "c"}) flag(k, "parameter as an exact rational p/q");
  for (int i = 0; i <= 4; ++i) flag("tau" + std::to_string(i), "tau coefficient as an exact rational");
  flag("pastro-a", "Pastro parameter a");
  flag("pastro-b", "Pastro parameter b");
  flag("trials", "random parameter sets (default 10)");
  flag("seed", "64-bit seed (default 0)");
  flag("nmax", "largest degree checked (default 8)");
  flag("N", "grid size for finite-matrix (default 4)");
  flag("budget", "search nodes for the aw-triple solver (default 4000)");
  flag("out", "write the report here instead of standard output");
  run->add_option("--config", config_path, "JSON file mirroring the flags; flags win");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  if (*list) {
    for (const auto& s : qheun::suite_names()) std::cout << s << "\n";
    return 0;
  }
  (void)run;
  try {
    const qheun::RunConfig cfg = qheun::resolve_config(raw, config_path);
    const qheun::Report rep = qheun::run_suite(cfg);
    const std::string text = qheun::render_report(cfg, rep);
    if (cfg.out.empty()) {
      std::cout << text;
    } else {
      std::ofstream out(cfg.out);
      if (!out) throw qheun::ConfigError("cannot write " + cfg.out);
      out << text;
    }
    std::cerr << cfg.suite << ": " << rep.passed() << " passed, " << rep.failed() << " failed\n";
    return qheun::exit_code(rep);
  } catch (const qheun::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
