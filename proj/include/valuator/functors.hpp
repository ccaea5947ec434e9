#pragma once

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "valuator/matroid.hpp"
#include "valuator/qmatrix.hpp"

namespace valuator {

// Multidegree (single-graded spaces use (i, 0)).
using Deg = std::pair<int, int>;

// A finite-dimensional (bi)graded vector space with an explicit ordered basis
// in every degree.  Basis labels are distinct within a degree.
struct GradedSpace {
  std::map<Deg, std::vector<std::string>> basis;

  void add(Deg d, std::string label) { basis[d].push_back(std::move(label)); }
  int dim(Deg d) const {
    auto it = basis.find(d);
    return it == basis.end() ? 0 : static_cast<int>(it->second.size());
  }
  int total_dim() const {
    int t = 0;
    for (const auto& [d, b] : basis) t += static_cast<int>(b.size());
    return t;
  }
  std::map<Deg, int> dims() const {
    std::map<Deg, int> r;
    for (const auto& [d, b] : basis)
      if (!b.empty()) r[d] = static_cast<int>(b.size());
    return r;
  }
};

// Degree-preserving linear map, one block per degree; absent degrees are
// zero maps.  Each block has shape dim(dst, d) x dim(src, d).
using MorBlocks = std::map<Deg, QMatrix>;

// A functor from matroids (with weak maps) to graded vector spaces.
// `equivariant` marks functors that accept weak maps with a nontrivial
// ground-set relabelling; the others throw ValidationError on such maps.
struct FunctorSpec {
  std::string name;
  bool equivariant = false;
  std::function<GradedSpace(const Matroid&)> obj;
  std::function<MorBlocks(const WeakMap&)> mor;
};

// The trivial functor: one dimension in degree (0,0) for every matroid,
// identity on every morphism.
FunctorSpec tau();

// [f]_k: f on matroids of rank k, zero otherwise.
FunctorSpec restrict_rank(const FunctorSpec& f, int k);

// Associated-graded Orlik-Solomon: basis indexed by nbc sets in degree
// (|S|, 0); a morphism sends u_S to u_S when S is nbc downstairs and to 0
// otherwise.  Identity relabellings only.
FunctorSpec gros();

// Orlik-Solomon: same basis as gros; morphisms act by e_S -> e_{phi(S)}
// followed by straightening into the nbc basis via circuit relations.
FunctorSpec os();

// Whitney functor for a strictly increasing tuple of ranks: basis = flags of
// flats with those ranks, all in degree (0,0).  The empty tuple gives tau.
FunctorSpec whitney(const std::vector<int>& ranks);

// Indicator of a specific flag: one dimension iff sets[i] is a flat of rank
// ranks[i] for every i.  Sets are given by ground labels.  Identity
// relabellings only.
FunctorSpec psi_flag(const std::vector<int>& ranks,
                     const std::vector<std::vector<std::string>>& sets);

// Chow functor: chain basis x_{F_1}^{m_1}...x_{F_r}^{m_r} graded by
// (sum m_i, 0); zero on matroids with loops.  Morphisms map a chain to the
// chain of closures when every rank is preserved, else to zero.
FunctorSpec chow();

// Augmented Chow functor: chains y_{F_0} x_{F_1}^{m_1}... graded by
// (rk F_0 + sum m_i, 0); defined for every matroid.
FunctorSpec aug_chow();

// Kazhdan-Lusztig functor: tau in degree (0,0) plus, for every admissible
// (i, a-chain, R), the flag space of the derived rank tuple in degree
// (i, |R|).  Zero on matroids with loops.
FunctorSpec kl_bigraded();

// Z functor: direct sum over flats F of kl_bigraded on the contraction,
// shifted to (i + rk F, j).
FunctorSpec sigma_bigraded();

// Convolution along the splitting E = E1 (by labels) and its complement:
// obj(M) = f(M restricted to E1) tensor g(M contracted by E1), degrees
// added; morphisms are tensor products when rk(E1) is preserved, else zero.
// Identity relabellings only.
FunctorSpec convolve(const FunctorSpec& f, const FunctorSpec& g,
                     const std::vector<std::string>& e1_labels);

// Bigraded dimensions as a polynomial-style map (exposed for decategorified
// cross-checks).
std::map<Deg, int> graded_dims(const FunctorSpec& f, const Matroid& m);

}  // namespace valuator
