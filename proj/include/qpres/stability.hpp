#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qpres/candecomp.hpp"
#include "qpres/present.hpp"
#include "qpres/rep.hpp"
#include "qpres/tropical.hpp"

namespace qpres {

/* Membership of one module in the torsion-side classes of one weight, decided
   from the enumerated submodule lattice.  in_t / in_f are the strict classes:
   every nonzero quotient scores positive, every nonzero submodule scores
   negative.  The barred flags are the closures, equivalent to vanishing
   tropical values; in_w is semistability, the meet of the two closures. */
struct MembershipFlags {
  bool in_t = false;
  bool in_tbar = false;
  bool in_fbar = false;
  bool in_f = false;
  bool in_w = false;
};

MembershipFlags membership(const DimSet& subdims, const std::vector<int>& total,
                           const std::vector<int>& delta);
// enumerates the submodule lattice; throws EnumerationCapExceeded beyond the
// small-field caps
MembershipFlags membership(const Representation& m, const std::vector<int>& delta);

/* Limit forms of the same classes through generic hom and e: in_f_limit iff
   hom(n delta, m) = 0 for some n <= n_max, in_t_limit iff e(n delta, m) = 0
   for some n.  witness_* is the least such n, 0 when none was found. */
struct LimitFlags {
  bool in_f_limit = false;
  bool in_t_limit = false;
  int witness_f = 0;
  int witness_t = 0;
};

LimitFlags limit_membership(AlgebraPtr alg, const Representation& m,
                            const std::vector<int>& delta, int n_max, int samples,
                            uint64_t seed);

struct TaggedModule {
  std::string name;
  std::string tag;  // simple | projective | injective-dual | sampled-cokernel |
                    // extension | exhaustive
  Representation rep;
  DimSet subdims;  // dimension vectors of all submodules
};

struct TestSet {
  AlgebraPtr alg;
  std::vector<TaggedModule> modules;
};

/* Simples, projectives, duals of opposite projectives, `count` sampled
   cokernels of random weights within dim_cap, up to `count` sampled extension
   middles, and, when exhaustive, every representation with dims <= dim_cap up
   to isomorphism.  One entry per isomorphism class; the zero module is never
   included.  Exhaustive mode requires q^(entries at the cap) <= 2^20. */
TestSet build_testset(AlgebraPtr alg, const std::vector<int>& dim_cap, int count,
                      uint64_t seed, bool exhaustive);

struct TfResult {
  bool equivalent = true;
  std::string module_name;  // first disagreement, empty when equivalent
  std::string flag_name;    // "tbar" or "fbar"
};

// do the closure flags of theta and eta agree on every module of the testset
TfResult tf_equivalent(const std::vector<int>& theta, const std::vector<int>& eta,
                       const TestSet& ts);

struct IndSet {
  std::vector<std::vector<int>> weights;  // sorted, distinct
};

// distinct weights of the canonical decomposition; empty for the zero weight
IndSet ind_set(AlgebraPtr alg, const std::vector<int>& theta, int samples,
               uint64_t seed);

// k integer points of the open cone on ind: sums of p_i * w_i with p_i in 1..5
std::vector<std::vector<int>> cone_sample(const IndSet& ind, int k, uint64_t seed);

// all nonzero weights within the sup-norm bound whose generic self-e is
// positive; empty means no obstruction up to the bound
std::vector<std::vector<int>> e_tame_scan(AlgebraPtr alg, int bound, int samples,
                                          uint64_t seed);

}  // namespace qpres
