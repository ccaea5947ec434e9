#pragma once

#include <string>
#include <vector>

#include "valuator/matroid.hpp"
#include "valuator/polytope.hpp"
#include "valuator/qmatrix.hpp"

namespace valuator {

// A decomposition of the base polytope P(target) into matroid base
// polytopes.  `faces` lists every cell of the polyhedral complex (maximal
// cells and all of their faces; the target itself appears in the list only
// for the trivial decomposition).  Internality is inferred, never declared.
class Decomposition {
 public:
  // Structural validation: matching ground sets, bases contained in the
  // target's bases, no duplicates, closure under taking faces.
  static Decomposition build(const Matroid& target, const std::vector<Matroid>& faces);

  const Matroid& target() const { return target_; }
  const std::vector<Matroid>& faces() const { return faces_; }
  int d() const { return d_; }

  bool is_internal(std::size_t face_idx) const { return internal_[face_idx]; }
  int dim(std::size_t face_idx) const { return dims_[face_idx]; }
  // Indices of internal faces of dimension k, 0 <= k <= d.
  std::vector<std::size_t> internal_of_dim(int k) const;
  std::vector<std::size_t> maximal_cells() const;  // faces of dimension d

  // Full geometric validation: pairwise intersections of maximal cells and
  // internal faces are common faces, samples of P(target) are covered by
  // maximal cells, the signed indicator identity holds at every sample, and
  // the internal-face adjacency graphs are as required (each internal
  // (k-1)/(k+1) sandwich contains exactly two internal k-faces, and the cell
  // graph over each internal face is connected).  Throws ValidationError
  // with a description on failure.
  void validate(unsigned seed = 2027, int random_samples = 64) const;

 private:
  explicit Decomposition(const Matroid& target) : target_(target) {}

  Matroid target_;
  std::vector<Matroid> faces_;
  std::vector<bool> internal_;
  std::vector<int> dims_;
  int d_ = 0;
};

// Exact membership of a rational point in P(m).
bool contains_point(const Matroid& m, const Vec& x);

// A bounded chain complex of formal sums of matroid polytopes with signed
// incidence differentials.  Degree k holds the internal k-dimensional faces
// for 0 <= k <= d, and degree d+1 holds the target.  diff[k] maps degree k
// to degree k-1; entries are +-1.  d^2 = 0 is asserted at construction.
struct SignedComplex {
  Matroid target;
  int top = 0;  // = d(target) + 1, the degree of the target summand
  std::vector<std::vector<Matroid>> cells;  // size top+1
  std::vector<QMatrix> diff;                // size top+1; diff[k] for k >= 1

  explicit SignedComplex(const Matroid& t) : target(t) {}
  void assert_square_zero() const;
};

// Builds the signed complex of a decomposition with the deterministic
// default orientation (lexicographically greedy basis of each face's
// direction space).
SignedComplex build_complex(const Decomposition& dec);

// Homology dimensions of the complex under the tautological assignment
// (each cell contributes one dimension); index k in [0, top].
std::vector<int> tau_homology(const SignedComplex& c);

// --- relaxation ---

// F must be a flat of m; stressed means both the restriction to F and the
// contraction by F are uniform.
bool is_stressed(const Matroid& m, Mask f);

// The k-subsets meeting F in exactly rk(F)+1 elements (k = rank of m).
std::vector<Mask> cusp(const Matroid& m, Mask f);

// Relaxation of the stressed flat F: adds cusp(F) to the bases.
Matroid relax(const Matroid& m, Mask f);

// The matroid U_{k-r, E-F} + U_{r, F} on the ground set of m, where
// r = rk(F) and k = rk(m).
Matroid pi_matroid(const Matroid& m, Mask f);
// Relaxation of pi_matroid at F.
Matroid lambda_matroid(const Matroid& m, Mask f);

// The decomposition {P(m), P(lambda)} of P(relax(m, f)), with all faces.
// Requires m != pi_matroid(m, f) (otherwise the decomposition degenerates
// to the trivial one of lambda, which is what gets returned).
Decomposition relax_decomposition(const Matroid& m, Mask f);

// Simultaneous relaxation of an orbit of stressed flats with pairwise
// non-nested supports: the target gains every cusp, the cells are P(m)
// together with one P(lambda_G) per flat G.
Decomposition relax_decomposition_orbit(const Matroid& m, const std::vector<Mask>& orbit);

// --- face projection ---

// Applies the psi-maximization projection to a signed complex: every cell is
// replaced by its psi-maximal face, and a differential entry survives iff
// both endpoints attain the same maximum of psi.  d^2 = 0 is re-asserted.
SignedComplex project_complex(const SignedComplex& c, const Vec& psi);

// The induced decomposition of the psi-maximal face of the target: all faces
// of the decomposition contained in it.
Decomposition face_decomposition(const Decomposition& dec, const Vec& psi);

}  // namespace valuator
