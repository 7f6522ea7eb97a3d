#pragma once

#include <cstdint>
#include <vector>

#include "qpres/algebra.hpp"
#include "qpres/rep.hpp"
#include "qpres/rng.hpp"

namespace qpres {

/* Map between direct sums of projectives, written in block form.  neg lists
   the domain multiplicities per vertex, pos the codomain multiplicities.
   Copies are flattened vertex-major; block (r, c) is an element of
   Hom(P_{vertex of column c}, P_{vertex of row r}) as coefficients over the
   algebra's hom basis.  A projective presentation is exactly such a map, with
   weight pos - neg; the same struct also carries the maps s, t used in
   homotopy and endomorphism systems. */
struct Presentation {
  AlgebraPtr alg;
  std::vector<int> neg, pos;
  std::vector<std::vector<std::vector<uint32_t>>> blocks;  // [row][col][coeff]

  std::vector<int> weight() const {
    std::vector<int> w(pos.size());
    for (size_t i = 0; i < pos.size(); ++i) w[i] = pos[i] - neg[i];
    return w;
  }
};

// vertex of each flattened copy, vertex-major
std::vector<int> copies_of(const std::vector<int>& mult);

Presentation zero_map(AlgebraPtr alg, std::vector<int> neg, std::vector<int> pos);
Presentation identity_map(AlgebraPtr alg, const std::vector<int>& mult);
// every block coefficient drawn uniformly
Presentation random_map(AlgebraPtr alg, std::vector<int> neg, std::vector<int> pos,
                        Rng& rng);
// reduced split delta = pos - neg with disjoint supports, uniform coefficients
Presentation sample_presentation(AlgebraPtr alg, const std::vector<int>& delta,
                                 uint64_t seed);

// x after y; y's codomain must match x's domain
Presentation compose_maps(const Presentation& x, const Presentation& y);
Presentation map_sub(const Presentation& x, const Presentation& y);

// total coefficient count of all blocks, and flattening in block order
int map_coords(const Presentation& x);
std::vector<uint32_t> flatten_map(const Presentation& x);
Presentation unflatten_map(AlgebraPtr alg, const std::vector<int>& neg,
                           const std::vector<int>& pos,
                           const std::vector<uint32_t>& coords);

struct Realized {
  Representation source, target;
  std::vector<Matrix> maps;  // per vertex: target-dim x source-dim
};

// concrete matrices of the map between realized projectives
Realized realize(const Presentation& d);

Representation cokernel(const Presentation& d);

struct HomEPair {
  int hom = 0, e = 0;
};

// kernel and cokernel dimensions of Hom(P+, M) -> Hom(P-, M), phi -> phi after d
HomEPair hom_e_fixed(const Presentation& d, const Representation& m);
// componentwise minimum over independent samples
HomEPair hom_e_generic(AlgebraPtr alg, const std::vector<int>& delta,
                       const Representation& m, int samples, uint64_t seed);

/* Linear system over the pair space (s, t) with s: neg_d -> neg_e and
   t: pos_d -> pos_e, sending (s, t) to e_pres after s minus t after d, in the
   flattened coordinates of Hom(P-_d, P+_e).  Rank gives the homotopy quotient;
   with e_pres = d its kernel is the endomorphism pair algebra. */
struct PairSystem {
  Matrix mat;  // rows: target coordinates; columns: s coords then t coords
  int s_coords = 0, t_coords = 0;
};

PairSystem homotopy_system(const Presentation& d, const Presentation& e_pres);

// dim Hom(P-_d, P+_e) minus the rank of the homotopy system
int E_hom(const Presentation& d, const Presentation& e_pres);

// min over sample pairs of hom_e_fixed(d, cokernel(g)).e
int e_generic_pair(AlgebraPtr alg, const std::vector<int>& delta,
                   const std::vector<int>& eta, int samples, uint64_t seed);

// injective-side pair via the opposite algebra and transpose duality
HomEPair dual_hom_e(AlgebraPtr alg, const Representation& m,
                    const std::vector<int>& delta_check, int samples, uint64_t seed);

}  // namespace qpres
