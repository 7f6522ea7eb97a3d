#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "qpres/present.hpp"

namespace qpres {

/* Strict endomorphism pairs (s, t) of a two-term complex d: maps with
   d after s = t after d.  Always contains the identity pair when the complex
   is nonempty. */
struct EndAlgebra {
  int dimension = 0;
  std::vector<std::pair<Presentation, Presentation>> basis;
  // structure[i][j] = coordinates of basis_i * basis_j over the basis
  std::vector<std::vector<std::vector<uint32_t>>> structure;
};

EndAlgebra end_algebra(const Presentation& d);

/* One indecomposable-over-the-ground-field summand.  residue_degree records
   the irreducible minimal-polynomial degree seen while failing to split; a
   value e >= 2 signals a summand that merges e geometric pieces. */
struct SplitPiece {
  Presentation pres;
  int residue_degree = 1;
};

// direct-sum decomposition through idempotents of the strict endomorphism
// pairs; a piece is declared unsplittable after `trials` failed random draws
std::vector<SplitPiece> split_pieces(const Presentation& d, uint64_t seed, int trials);
std::vector<Presentation> split_presentation(const Presentation& d, uint64_t seed,
                                             int trials);

struct Decomposition {
  std::vector<std::vector<int>> summands;  // sorted with multiplicity
  int samples = 0;
  int agree_num = 0;
  int agree_den = 0;
};

/* Majority vote over independent generic draws; summands of merged pieces are
   refined recursively through their residue degree.  Throws
   CanonicalInconsistent when no multiset reaches half the votes. */
Decomposition canonical_decomposition(AlgebraPtr alg, const std::vector<int>& delta,
                                      int samples, uint64_t seed, int trials);

// all summands indecomposable and pairwise generic e = 0
bool verify_canonical(AlgebraPtr alg, const std::vector<std::vector<int>>& candidate,
                      int samples, uint64_t seed);

enum class WeightTag { Real, Tame, Wild };
std::string to_string(WeightTag tag);

struct WeightClass {
  WeightTag tag = WeightTag::Real;
  // rigid sample index for Real, generic pair e value for Wild, 0 for Tame
  uint64_t witness = 0;
};

// classification without any indecomposability requirement
WeightClass weight_class_of(AlgebraPtr alg, const std::vector<int>& delta, int samples,
                            uint64_t seed);
WeightTag weight_tag(AlgebraPtr alg, const std::vector<int>& delta, int samples,
                     uint64_t seed);

// requires delta indecomposable (checked; NotIndecomposable otherwise)
WeightClass classify_weight(AlgebraPtr alg, const std::vector<int>& delta, int samples,
                            uint64_t seed);

}  // namespace qpres
