#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "superdq/suites.hpp"

using namespace superdq;

int main(int argc, char** argv) {
  CLI::App app{"Checks for the superdeformation toolkit"};
  app.set_config("--config", "", "key = value file with any of the options below");
  RunConfig cfg;
  double alpha_re = 1.0, alpha_im = 0.0;
  std::map<std::string, double> tols;

  app.add_option("--suite", cfg.suite, "suite to run, or all")->capture_default_str();
  app.add_option("--m", cfg.m, "even dimension")->capture_default_str();
  app.add_option("--n", cfg.n, "odd dimension")->capture_default_str();
  app.add_option("--a0", cfg.a0, "a0 = 1/theta")->capture_default_str();
  auto* opt_alpha = app.add_option("--alpha", alpha_re, "real alpha");
  app.add_option("--alpha-re", alpha_re, "real part of alpha")->excludes(opt_alpha);
  app.add_option("--alpha-im", alpha_im, "imaginary part of alpha");
  app.add_option("--grid", cfg.N, "grid points per axis (power of two)")->capture_default_str();
  app.add_option("--extent,--L", cfg.L, "half-width of the grid box")->capture_default_str();
  for (auto& [k, v] : default_tolerances())
    app.add_option_function<double>("--tol-" + k, [&tols, key = k](double x) { tols[key] = x; },
                                    "tolerance '" + k + "' (default " + fmt(v) + ")");
  app.add_flag("--exact", cfg.exact, "rational arithmetic for the structure constants");
  app.add_flag("--parallel", cfg.parallel, "run suites concurrently");
  app.add_option("--json", cfg.json_path, "write the report as JSON here ('-' for stdout)");
  bool list = false;
  app.add_flag("--list", list, "list suites and exit");

  std::string dump_dir = "tables";
  auto* dump = app.add_subcommand("dump_tables", "write Lambda, factor sets and a canonical basis as JSON");
  dump->fallthrough();
  dump->add_option("--out", dump_dir, "output directory")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  if (list) {
    for (auto& s : suite_names()) std::cout << s << "\n";
    return 0;
  }
  cfg.alpha = cplx(alpha_re, alpha_im);
  cfg.tol = tols;
  try {
    cfg.validate();
  } catch (const std::exception& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return 2;
  }

  if (*dump) {
    try {
      for (auto& p : dump_tables(cfg, dump_dir)) std::cout << p << "\n";
    } catch (const std::exception& e) {
      std::cerr << "dump_tables: " << e.what() << "\n";
      return 1;
    }
    return 0;
  }

  Report rep = run_selected(cfg);
  if (cfg.json_path == "-") {
    std::cout << rep.json() << "\n";
  } else {
    std::cout << rep.text();
    if (!cfg.json_path.empty()) {
      std::ofstream os(cfg.json_path);
      os << rep.json() << "\n";
      if (!os) {
        std::cerr << "cannot write " << cfg.json_path << "\n";
        return 1;
      }
    }
  }
  return rep.exit_code();
}
