// spw-verify: batch verification harness for the sp(2n) W-algebra engine.
//
// Exit codes: 0 all checks pass, 1 verification failure, 2 usage error,
// 3 internal engine error.

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "spw/rational.hpp"
#include "spw/report.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Exact verification suites for the minimal nilpotent "
               "W-algebra of sp(2n)"};
  app.allow_extras(false);

  spw::RunConfig cfg;
  int corrupt_bracket = -1, corrupt_onedim = -1;
  bool list = false;

  app.add_option("--n", cfg.n, "Rank n (2..4)")->capture_default_str();
  app.add_option("--suite", cfg.suites,
                 "Suite to run (repeatable; default: all)");
  app.add_option("--max-degree", cfg.max_degree,
                 "Degree bound for the PBW independence suite")
      ->capture_default_str();
  app.add_option("--window-radius", cfg.window_radius,
                 "Interior radius for the cuspidal window suites")
      ->capture_default_str();
  app.add_option("--seed", cfg.seed, "Random seed")->capture_default_str();
  app.add_option("--format", cfg.format, "Output format: text | json")
      ->capture_default_str();
  app.add_option("--out", cfg.out_path, "Write the report to a file");
  app.add_option("--jobs", cfg.jobs, "Concurrent suites")
      ->capture_default_str();
  app.add_flag("--timings", cfg.timings, "Include wall times in the report");
  app.add_flag("--list-suites", list, "List suite names and exit");
  app.add_option("--corrupt-bracket", corrupt_bracket,
                 "Test mode: corrupt one cached structure constant "
                 "(index into the (a,b,target) grid)");
  app.add_option("--corrupt-onedim", corrupt_onedim,
                 "Test mode: corrupt one scalar of the one-dimensional "
                 "module (label index)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp") {
      std::cout << app.help();
      return 0;
    }
    std::cerr << e.what() << "\n";
    return 2;
  }

  if (list) {
    for (const auto& s : spw::known_suites()) std::cout << s << "\n";
    return 0;
  }
  if (corrupt_bracket >= 0) cfg.corrupt_bracket = corrupt_bracket;
  if (corrupt_onedim >= 0) cfg.corrupt_onedim = corrupt_onedim;

  try {
    spw::Report rep = spw::run_suites(cfg);
    const std::string body =
        cfg.format == "json" ? rep.to_json() : rep.to_text();
    if (cfg.out_path.empty()) {
      std::cout << body;
    } else {
      std::ofstream out(cfg.out_path);
      if (!out) {
        std::cerr << "cannot open " << cfg.out_path << "\n";
        return 2;
      }
      out << body;
    }
    return rep.all_pass() ? 0 : 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const spw::EngineError& e) {
    std::cerr << "engine error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
}
