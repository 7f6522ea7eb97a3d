#include <cstdio>
#include <string>

#include "CLI11.hpp"
#include "qpres/errors.hpp"
#include "qpres/runner.hpp"

int main(int argc, char** argv) {
  CLI::App app{"exact invariants of projective presentations over "
               "finite-dimensional path algebras"};
  std::string command;
  std::string dimcap;
  qpres::RunConfig cfg;

  app.add_option("command", command,
                 "hom | epair | coker | fpoly | candecomp | classify | "
                 "membership | tfcheck | indset | verify | testset")
      ->required();
  app.add_option("harness", cfg.harness_arg,
                 "harness name when the command is verify");
  app.add_option("--algebra", cfg.algebra_arg, "builtin:NAME or a JSON file")
      ->required();
  app.add_option("--seed", cfg.seed, "root seed (default 0)");
  app.add_option("--samples", cfg.samples, "generic sample count (default 16)");
  app.add_option("--nmax", cfg.n_max, "largest weight multiple (default 8)");
  app.add_option("--dimcap", dimcap, "testset bound per vertex, a,b,...");
  app.add_option("--trials", cfg.trials, "split trials (default 24)");
  app.add_option("--field", cfg.field_override,
                 "field characteristic override");
  app.add_option("--threads", cfg.threads, "worker threads (default 1)");
  app.add_option("--weight", cfg.weight, "weight vector, a,b,...");
  app.add_option("--eta", cfg.eta, "second weight vector, a,b,...");
  app.add_option("--module", cfg.module_name,
                 "S<i> | P<i> | I<i> | coker:<weight>:<seed>");
  app.add_option("--count", cfg.count, "sampled testset extras");
  app.add_flag("--exhaustive", cfg.exhaustive,
               "enumerate every class within the cap");
  app.add_flag("--json", cfg.json, "canonical JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (!dimcap.empty()) {
    try {
      cfg.dim_cap = qpres::parse_int_list(dimcap, "dimcap");
    } catch (const qpres::Error& e) {
      std::fprintf(stderr, "error: %s\n", e.what());
      return 2;
    }
  }

  qpres::RunResult rr = qpres::run_command(command, cfg);
  std::fputs(rr.output.c_str(), stdout);
  return rr.exit_code;
}
