#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "qpres/stability.hpp"

namespace qpres {

/* Knobs for one verification run.  fixture_params gives tuned defaults per
   built-in algebra; every field can be overridden before the run. */
struct HarnessParams {
  std::vector<int> dim_cap;  // per-vertex bound of the exhaustive testset
  uint32_t small_char = 2;   // enumeration field
  uint32_t big_char = 1009;  // generic-computation field
  int grid_bound = 3;        // sup-norm bound of the full weight sweep
  int theta_bound = 2;       // sup-norm bound of the stability weight grid
  int n_max = 8;
  int samples = 16;
  int count = 0;   // sampled extras added to the testset
  int trials = 24;
  int cone_points = 5;
  int pair_count = 100;    // random weight pairs in the e comparison
  int triple_target = 200;  // closure triples required in total
  int closure_deltas = 6;   // weights sampled for the closure harness
  int etame_bound = 3;
  int threads = 1;
  bool exhaustive = true;
  bool expect_etame = true;  // does the scan up to etame_bound expect no witness
};

// a2, k2, k3, a3n
HarnessParams fixture_params(const std::string& name);

struct HarnessCase {
  std::string case_id;
  nlohmann::ordered_json inputs;
  nlohmann::ordered_json expected;
  nlohmann::ordered_json got;
  bool pass = false;
  nlohmann::ordered_json witness;  // null unless something failed
};

struct HarnessReport {
  std::string name;
  std::string note;
  int cases_pass = 0;
  int cases_fail = 0;
  std::vector<HarnessCase> cases;
  long long wall_ms = 0;  // never serialized, reports must be byte-stable

  bool ok() const { return cases_fail == 0 && !cases.empty(); }
};

nlohmann::ordered_json report_to_json(const HarnessReport& r);

// duality, stabilization, limit_agreement, closure, cone, etame_iff,
// e_equivalence, semicontinuity, synthetic_fail
const std::vector<std::string>& harness_names();

/* Runs one named harness over the algebra: testsets and submodule
   enumeration on small_char, generic hom and e over big_char.  Results are
   independent of params.threads.  Unknown names raise ValidationError. */
HarnessReport run_harness(const AlgebraSpec& spec, const std::string& name,
                          const HarnessParams& params, uint64_t seed);

}  // namespace qpres
