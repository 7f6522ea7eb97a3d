#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qpres {

/* Everything a command invocation needs, already typed.  weight, eta and
   module stay as raw strings so diagnostics can quote them. */
struct RunConfig {
  std::string algebra_arg;  // builtin:NAME or a JSON file path
  uint64_t seed = 0;
  int samples = 16;
  int n_max = 8;
  std::vector<int> dim_cap;  // empty = one default per command
  int trials = 24;
  bool json = false;
  int threads = 1;
  uint32_t field_override = 0;  // 0 keeps the algebra's own field
  std::string weight;
  std::string eta;
  std::string module_name;
  std::string harness_arg;  // verify only
  int count = 0;            // sampled testset extras
  bool exhaustive = false;
};

struct RunResult {
  int exit_code = 0;    // 0 ok, 1 failed verification, 2 input error
  std::string output;   // complete stdout text, newline terminated
};

// comma-separated integers; the field name goes into the diagnostic
std::vector<int> parse_int_list(const std::string& s, const char* field);

/* Dispatches one command: hom, epair, coker, fpoly, candecomp, classify,
   membership, tfcheck, indset, verify <harness>, testset.  Never throws;
   errors come back as exit code 2 with the diagnostic in output. */
RunResult run_command(const std::string& command, const RunConfig& cfg);

}  // namespace qpres
