#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "hpseudo/cli.hpp"
#include "hpseudo/parallel.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Lie pseudoalgebras of type H: constructions and verification"};
  hp::RunConfig cfg;
  std::string lambda, out;
  int threads = 0;
  app.add_option("command", cfg.command, "validate | axioms | complex | singular | lattice | all")
      ->required()
      ->check(CLI::IsMember({"validate", "axioms", "complex", "singular", "lattice", "all"}));
  app.add_option("--spec", cfg.spec, "Lie algebra spec file (.alg)");
  app.add_option("--degree-cap", cfg.degree_cap, "filtration degree cap D (>= 2)")->capture_default_str();
  app.add_option("--jet-order", cfg.jet_order, "jet truncation order for annihilation checks")->capture_default_str();
  app.add_option("--pi-module", cfg.pi_module, "d'-module JSON file: {dim, act, lambda}");
  app.add_option("--sp-rep", cfg.sp_rep, "U: pi:n, sym2, or JSON file with f or gl matrices")->capture_default_str();
  app.add_option("--lambda", lambda, "scalar by which c acts (needs chi = 0)");
  app.add_option("--out", out, "write the report here instead of stdout");
  app.add_option("--threads", threads, "worker threads (0 = hardware)");
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return hp::kExitParse;
  }
  if (!lambda.empty()) cfg.lambda = lambda;
  if (threads > 0) hp::set_threads(threads);

  hp::RunResult r = hp::run(cfg);
  if (!r.report.empty()) {
    if (out.empty()) {
      std::cout << r.report;
    } else {
      std::ofstream f(out, std::ios::binary);
      if (!f) {
        std::cerr << "error: cannot write '" << out << "'\n";
        return hp::kExitParse;
      }
      f << r.report;
    }
  }
  std::cerr << r.message << "\n";
  return r.exit_code;
}
