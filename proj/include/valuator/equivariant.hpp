#pragma once

#include <map>
#include <string>
#include <vector>

#include "valuator/decomp.hpp"
#include "valuator/functors.hpp"
#include "valuator/matroid.hpp"

namespace valuator {

// --- permutations -----------------------------------------------------------

// Composition (a after b): (a*b)[i] = a[b[i]].
std::vector<int> perm_compose(const std::vector<int>& a, const std::vector<int>& b);
std::vector<int> perm_inverse(const std::vector<int>& a);

// Cycle type as a partition of n (cycle lengths, descending).
std::vector<int> cycle_type(const std::vector<int>& perm);
// Cycle type of the restriction to an invariant subset (throws if not
// invariant); partition of |support|.
std::vector<int> cycle_type_on(const std::vector<int>& perm, Mask support);
std::string cycle_type_string(const std::vector<int>& type);  // "3+2+1"

// A finite permutation group on n symbols, enumerated exhaustively (at most
// 10^5 elements).  The identity is always elements[0].
struct PermGroup {
  int n = 0;
  std::vector<std::vector<int>> elements;

  static PermGroup trivial(int n);
  static PermGroup generate(int n, const std::vector<std::vector<int>>& gens);
  static PermGroup symmetric_on(int n, Mask support);  // S(support), fixing the rest
  static PermGroup full_automorphisms(const Matroid& m);

  std::size_t size() const { return elements.size(); }
  // One representative index per conjugacy class, in enumeration order.
  std::vector<std::size_t> conjugacy_class_reps() const;
  std::vector<std::size_t> conjugacy_class_sizes() const;  // aligned with reps
  PermGroup stabilizer_of(Mask f) const;
  // Every distinct subgroup; only for groups of order <= 16.
  std::vector<PermGroup> subgroups() const;
  bool preserves(const Matroid& m) const;
};

// --- characters -------------------------------------------------------------

// Determinant of gamma acting on the direction space of P(m): +1 or -1.
// Throws ValidationError if gamma does not preserve m.
int det_character(const Matroid& m, const std::vector<int>& gamma);

// Trace of gamma on each graded piece of f(m).  f must be equivariant;
// traces of permutation-basis functors are asserted to be integers.
std::map<Deg, Rat> trace_on(const FunctorSpec& f, const Matroid& m,
                            const std::vector<int>& gamma);

struct CharReport {
  bool pass = true;
  std::string detail;  // first failure, or empty
};

// Fixed-face character identity on the complex of a decomposition: for every
// group element and every degree,
//   sum_k (-1)^k sum_{cells N of position k fixed by gamma}
//       trace(f, N, gamma) * det_character(N, gamma)  ==  0.
// Throws ValidationError if the group does not permute the cells.
CharReport character_identity_check(const SignedComplex& c, const PermGroup& g,
                                    const FunctorSpec& f);

// Virtual relaxation identity for the g-orbit of the stressed flat f of m:
// with mt the orbit relaxation, for every gamma and degree,
//   trace(phi, mt, gamma) == trace(phi, m, gamma)
//     + sum_{G in orbit fixed by gamma} [ trace(phi, lambda(m,G), gamma)
//                                        - trace(phi, pi(m,G), gamma) ].
CharReport virtual_identity_check(const Matroid& m, Mask f, const PermGroup& g,
                                  const FunctorSpec& phi);

// The orbit relaxation itself (bases of m plus every cusp in the orbit).
Matroid relax_orbit(const Matroid& m, const std::vector<Mask>& orbit);

// --- skew characters --------------------------------------------------------

using Partition = std::vector<int>;  // weakly decreasing positive parts

struct SkewShape {
  Partition outer, inner;  // inner contained in outer
  int size() const;
};

// Number of standard Young tableaux of the skew shape (corner recursion).
long long syt_count(const SkewShape& s);

// Murnaghan-Nakayama border-strip recursion; rho must be a partition of
// size(s).
Rat mn_skew_character(const SkewShape& s, const Partition& rho);

// --- equivariant Kazhdan-Lusztig --------------------------------------------

// Coefficient of t^i of the equivariant KL polynomial as a trace:
// sum_j (-1)^j tr(gamma | KL^{i,j}(m)).
Rat eq_kl_coeff(const Matroid& m, const std::vector<int>& gamma, int i);

// The hyperplane pair on E = {1..h+1}: pi = U(1,{h+1}) + U(k-1,{1..h}) and
// lambda = relax(pi, {1..h}) = U(k,h+1), with S_h acting on {1..h}.
struct HyperplanePair {
  Matroid pi, lambda;
  Mask h_mask = 0;
  PermGroup sym;
  HyperplanePair(Matroid p, Matroid l) : pi(std::move(p)), lambda(std::move(l)) {}
};
HyperplanePair hyperplane_pair(int k, int h);

// The skew shape attached to degree i of the hyperplane-relaxation KL
// difference: [h-2i+1,(k-2i+1)^i] / [k-2i,(k-2i-1)^{i-1}].
SkewShape kl_correction_shape(int i, int k, int h);

// Exact check, per conjugacy class of S_h and per t-degree, of
//   P_lambda(t) - P_pi(t) == sum_{0<i<k/2} chi_{shape(i)} t^i.
CharReport kl_correction_check(int k, int h);

// Exponent resolution for the graded OS difference OS(lambda) - OS(pi):
// which exterior power of the standard representation matches in degrees
// k-1 and k.
struct OsExponentReport {
  bool matches_km1 = true;  // wedge^{k-1}
  bool matches_k = true;    // wedge^{k}
  std::string detail;
};
OsExponentReport os_correction_report(int k, int h);

}  // namespace valuator
