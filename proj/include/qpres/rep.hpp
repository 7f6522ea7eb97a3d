#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qpres/algebra.hpp"
#include "qpres/matrix.hpp"

namespace qpres {

/* Left module over a built algebra: a space per vertex, a matrix per arrow
   mapping the source space into the target space. */
struct Representation {
  AlgebraPtr alg;
  std::vector<int> dims;
  std::vector<Matrix> arrow_maps;  // target-dim x source-dim

  int total_dim() const {
    int s = 0;
    for (int d : dims) s += d;
    return s;
  }
  bool is_zero() const { return total_dim() == 0; }
  std::vector<int> dim_vector() const { return dims; }
};

// throws ValidationError if shapes are wrong, a relation fails to act by
// zero, or a full-length path acts by a nonzero matrix
void check_representation(const Representation& m);

Representation rep_zero(AlgebraPtr alg);
Representation rep_simple(AlgebraPtr alg, int vertex);
Representation rep_projective(AlgebraPtr alg, int vertex);
// dual of the opposite projective; op must be opposite_algebra of alg's spec
Representation rep_injective(AlgebraPtr alg, AlgebraPtr op, int vertex);

// action of a basis class: product of arrow matrices along the path
Matrix class_action(const Representation& m, int basis_class);

Representation direct_sum(const Representation& m, const Representation& n);
// transpose-dual over the opposite algebra
Representation dual(const Representation& m, AlgebraPtr op);

struct HomBasis {
  int dim = 0;
  std::vector<std::vector<Matrix>> mats;  // element k, vertex v: N_v x M_v
};

// intertwiner space {phi : N_a phi_src = phi_tgt M_a for all arrows a}
HomBasis hom_rep(const Representation& m, const Representation& n);

struct Cover {
  std::vector<int> mult;      // projective multiplicities (top dimensions)
  Representation proj;        // the covering projective
  std::vector<Matrix> epi;    // proj -> m, surjective at every vertex
  Representation omega;       // kernel of the cover
  std::vector<Matrix> incl;   // omega -> proj, injective at every vertex
};

Cover projective_cover(const Representation& m);

int ext1(const Representation& m, const Representation& n);

// pushout of n <- omega(m) -> proj(m) along the cocycle; dims add up
Representation extension_with_cocycle(const Representation& m, const Representation& n,
                                      const Cover& cover,
                                      const std::vector<Matrix>& cocycle);
// nonsplit extension 0 -> n -> E -> m -> 0 chosen by seed;
// throws NoNontrivialExtension when ext1(m, n) = 0
Representation extension_middle(const Representation& m, const Representation& n,
                                uint64_t seed);

struct Submodule {
  std::vector<Matrix> bases;  // per vertex, columns span the subspace
  std::vector<int> dims;
};

// all submodules: cyclic closures of every nonzero vector, then sum closure;
// throws EnumerationCapExceeded outside the small-field cap
std::vector<Submodule> list_submodules(const Representation& m);
std::vector<std::vector<int>> submodule_dimvectors(const Representation& m);

Representation submodule_rep(const Representation& m, const Submodule& s);
Representation quotient_rep(const Representation& m, const Submodule& s);

// true iff some combination of the hom basis is invertible at every vertex
bool iso_test(const Representation& m, const Representation& n, uint64_t seed,
              int trials);

// re-express a small-field representation over the target algebra's field by
// choosing signed integer lifts of the entries so the relations hold exactly
Representation lift_representation(const Representation& m, AlgebraPtr target);

}  // namespace qpres
