#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "qpres/present.hpp"
#include "qpres/rep.hpp"

namespace qpres {

using DimSet = std::vector<std::vector<int>>;

// max of v . delta over a set of dimension vectors (always >= 0: v = 0 is in
// every submodule set)
int trop_eval(const DimSet& subdims, const std::vector<int>& delta);
// max of (total - v) . delta, ranging over the same set
int trop_eval_dual(const DimSet& subdims, const std::vector<int>& total,
                   const std::vector<int>& delta);

// tropical evaluation against the enumerated submodule lattice of m
int trop_f(const Representation& m, const std::vector<int>& delta);
int trop_f_dual(const Representation& m, const std::vector<int>& delta);

/* Smallest n <= n_max at which both tropical values match the generic hom and
   e of weight n delta, with every multiple k n <= n_max re-verified.  n_found
   stays 0 when no level works. */
struct StabilizationReport {
  int n_found = 0;
  std::vector<std::pair<int, bool>> checked_multiples;
  std::string wildness_note;
};

/* m_small carries the enumerable module (its field must admit submodule
   enumeration); hom and e run over alg, lifting m_small when the fields
   differ.  tag_hint, when nonempty, replaces the classification of delta. */
StabilizationReport stabilization_n(AlgebraPtr alg, const Representation& m_small,
                                    const std::vector<int>& delta, int n_max,
                                    int samples, uint64_t seed,
                                    const std::string& tag_hint = "");
StabilizationReport stabilization_n(AlgebraPtr alg, const Representation& m_big,
                                    const DimSet& subdims,
                                    const std::vector<int>& dims_small,
                                    const std::vector<int>& delta, int n_max,
                                    int samples, uint64_t seed,
                                    const std::string& tag_hint = "");

}  // namespace qpres
