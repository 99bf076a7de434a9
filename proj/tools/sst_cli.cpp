// Command-line front end for the sliding suffix tree.
//
//   sst [--relative] [--paranoid]                 line protocol on stdin
//   sst replay SCRIPT [--relative] [--paranoid]   same, from a file
//   sst bench --corpus F --window N --queries F [--csv PATH]
//
// Exit code is 0 iff no ERR or audit violation was emitted.

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "sst/script.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Sliding-window substring index"};
  app.require_subcommand(0, 1);

  sst::ScriptOptions options;
  app.add_flag("--relative", options.relative, "Print window offsets instead of stream positions");
  app.add_flag("--paranoid", options.paranoid, "Audit the index after every shift");

  std::string script_path;
  auto* replay = app.add_subcommand("replay", "Run a command script");
  replay->add_option("script", script_path, "Script file")->required();

  sst::BenchConfig bench_config;
  std::string csv_path;
  auto* bench = app.add_subcommand("bench", "Benchmark against rescan and rebuild baselines");
  bench->add_option("--corpus", bench_config.corpus_path, "Corpus file")->required();
  bench->add_option("--window", bench_config.window, "Window capacity")->required()->check(CLI::PositiveNumber);
  bench->add_option("--queries", bench_config.queries_path, "Query file, one per line")->required();
  bench->add_option("--csv", csv_path, "Also write CSV here");
  bench->add_option("--checkpoints", bench_config.checkpoints, "Query points along the corpus");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*bench) {
      if (!csv_path.empty()) bench_config.csv_path = csv_path;
      sst::run_bench(bench_config, std::cout);
      return 0;
    }
    if (*replay) {
      std::ifstream in(script_path);
      if (!in) {
        std::cerr << "cannot open " << script_path << '\n';
        return 2;
      }
      return sst::run_script(in, std::cout, options) ? 0 : 1;
    }
    return sst::run_script(std::cin, std::cout, options) ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
