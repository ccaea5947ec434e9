#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "valuator/matroid.hpp"
#include "valuator/polynomial.hpp"

namespace valuator {

// Poincare polynomial of the graded algebra on nbc sets: sum of t^|S| over
// nbc sets S.  Zero for matroids with loops.
UPoly poincare_poly(const Matroid& m);

// Chow polynomial: Hilbert series of the chain basis x_{F_1}^{m_1} ...
// x_{F_r}^{m_r} with nested flats of increasing rank and
// 0 < m_i < rk F_i - rk F_{i-1} (ranks measured from rk F_0 = 0).  Zero for
// matroids with loops.
UPoly chow_poly(const Matroid& m);

// Augmented Chow polynomial: chains y_{F_0} x_{F_1}^{m_1} ... with F_0 any
// flat, graded by rk F_0 + sum m_i.  Defined for every matroid.
UPoly aug_chow_poly(const Matroid& m);

// Kazhdan-Lusztig polynomial from the defining recursion: P = 0 on matroids
// with loops, P = 1 in rank 0, deg P < rk/2, and
// t^rk P(1/t) - P(t) = sum over nonempty flats F of chi_{M^F}(t) P_{M/F}(t).
// Internally memoized; throws logic_error if the recursion is inconsistent.
UPoly kl_poly(const Matroid& m);

// Z-polynomial: sum over flats F of t^{rk F} P_{M/F}(t).
UPoly z_poly(const Matroid& m);

// Derksen's G-invariant: for every ordering of the ground set, the word whose
// j-th letter is increment_letter when the rank of the first j elements
// exceeds the rank of the first j-1, and the other letter otherwise.
// Defaults: increment 'y', non-increment 'x'.  Ground sets up to 8 elements.
std::map<std::string, long long> g_invariant(const Matroid& m, bool increment_is_y = true);

// A cone of the stellahedral fan: an independence part I and a chain of
// proper subsets S_1 < ... < S_r < E with I contained in S_1 (no chain
// constraint when r = 0).
struct BergmanCone {
  Mask indep = 0;
  std::vector<Mask> chain;
  auto operator<=>(const BergmanCone&) const = default;
};

// The cones of the augmented Bergman fan of m: stellahedral cones whose I is
// independent in m and whose S_j are all flats of m.  Ground sets up to 7
// elements.
std::vector<BergmanCone> bergman_cones(const Matroid& m);

// All stellahedral cones on an n-element ground set (the augmented Bergman
// fan of the Boolean matroid).
std::vector<BergmanCone> stellahedral_cones(const Matroid& boolean_reference);

}  // namespace valuator
