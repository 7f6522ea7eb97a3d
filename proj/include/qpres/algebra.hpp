#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "qpres/fp.hpp"
#include "qpres/matrix.hpp"

namespace qpres {

/* Input description of a bound quiver algebra.  Relation paths are written in
   traversal order: the path [a, b] means "walk a, then walk b", so consecutive
   arrows must chain head to tail.  Internally products compose right to left
   (mul(x, y) = "first y, then x"), and the loader performs the flip. */
struct SpecArrow {
  std::string name, from, to;
};
struct SpecRelTerm {
  long long coef = 1;
  std::vector<std::string> path;  // arrow names, traversal order
};
struct AlgebraSpec {
  uint32_t field_char = 1009;
  std::vector<std::string> vertices;
  std::vector<SpecArrow> arrows;
  std::vector<std::vector<SpecRelTerm>> relations;
  int nilpotency_bound = 2;
};

inline bool operator==(const SpecArrow& x, const SpecArrow& y) {
  return x.name == y.name && x.from == y.from && x.to == y.to;
}
inline bool operator==(const SpecRelTerm& x, const SpecRelTerm& y) {
  return x.coef == y.coef && x.path == y.path;
}
inline bool operator==(const AlgebraSpec& x, const AlgebraSpec& y) {
  return x.field_char == y.field_char && x.vertices == y.vertices &&
         x.arrows == y.arrows && x.relations == y.relations &&
         x.nilpotency_bound == y.nilpotency_bound;
}

struct Arrow {
  std::string name;
  int from, to;
};

struct RelTerm {
  uint32_t coef;
  std::vector<int> arrows;  // traversal order
};
using Relation = std::vector<RelTerm>;

struct PathInfo {
  int source, target, length;
  std::vector<int> arrows;  // traversal order
};

/* Finite-dimensional quotient of a path algebra.

   The basis consists of classes of paths of length < L that survive reduction
   modulo the two-sided span of the relations, truncated at length L.  The
   constructor verifies that every path of length exactly L reduces to zero;
   otherwise the nilpotency bound is rejected.  Conventions used throughout:

     - left modules; the projective P_i is spanned by paths with source i
     - Hom(P_i, P_j) has basis the classes with source j and target i, acting
       by right multiplication
     - mul(x, y) is "apply y first, then x"
*/
class Algebra {
 public:
  AlgebraSpec spec;  // retained for opposite construction and hashing
  std::vector<std::string> vertex_labels;
  std::vector<Arrow> arrows;
  std::vector<Relation> relations;
  int nilpotency;
  Fp fp;

  std::vector<PathInfo> paths;      // all paths of length <= L
  std::vector<int> basis;           // surviving path ids, sorted by (length, id)
  std::vector<int> basis_index_of;  // path id -> basis position or -1

  int num_vertices() const { return static_cast<int>(vertex_labels.size()); }
  int dim() const { return static_cast<int>(basis.size()); }

  int source_of(int b) const { return paths[basis[b]].source; }
  int target_of(int b) const { return paths[basis[b]].target; }
  int length_of(int b) const { return paths[basis[b]].length; }
  const std::vector<int>& arrows_of(int b) const { return paths[basis[b]].arrows; }

  int vertex_unit(int v) const { return unit_[v]; }
  // basis position of the class of a single arrow (arrows always survive)
  int arrow_class(int a) const { return arrow_class_[a]; }

  // basis of Hom(P_domain, P_codomain): classes with source codomain, target domain
  const std::vector<int>& hom_basis(int domain, int codomain) const {
    return by_st_[codomain * num_vertices() + domain];
  }
  // basis classes with the given source and target
  const std::vector<int>& basis_with(int source, int target) const {
    return by_st_[source * num_vertices() + target];
  }

  // product of basis classes, coefficients over the basis; mul(x,y) = "y then x"
  std::vector<uint32_t> mul_basis(int bx, int by) const;
  // product of arbitrary elements given as coefficient vectors over the basis
  std::vector<uint32_t> mul_elems(const std::vector<uint32_t>& x,
                                  const std::vector<uint32_t>& y) const;

  std::string basis_name(int b) const;

  friend std::shared_ptr<const Algebra> build_algebra(const AlgebraSpec& spec);

 private:
  Algebra() : fp(2) {}
  std::vector<int> unit_;                       // vertex -> basis position of e_v
  std::vector<std::vector<int>> by_st_;         // (source, target) -> basis positions
  std::vector<std::vector<uint32_t>> pathred_;  // path id -> coefficients over basis
  std::map<std::vector<int>, int> pid_by_arrows_;
  std::vector<int> arrow_class_;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

// validates, enumerates paths, reduces, certifies the nilpotency bound
AlgebraPtr build_algebra(const AlgebraSpec& spec);

// same vertices, arrows reversed, relation paths reversed
AlgebraSpec opposite_spec(const AlgebraSpec& spec);
AlgebraPtr opposite_algebra(const Algebra& alg);

// basis positions spanning Hom(P_i, P_j); see Algebra::hom_basis
std::vector<int> proj_hom_basis(const Algebra& alg, int i, int j);

}  // namespace qpres
