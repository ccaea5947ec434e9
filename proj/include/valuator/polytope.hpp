#pragma once

#include <vector>

#include "valuator/matroid.hpp"
#include "valuator/qmatrix.hpp"
#include "valuator/rat.hpp"

namespace valuator {

// The base polytope P(M) of a matroid lives in Q^E: it is the convex hull of
// the indicator vectors of the bases.  Faces of P(M) are again base polytopes
// of matroids on the same ground set, and are represented that way.

Vec vertex_of(const Matroid& m, Mask basis);
Vec barycenter(const Matroid& m);

// Indicator functional of S: delta_S(x) = sum_{e in S} x_e.
Vec delta(const Matroid& m, Mask s);

Rat max_value(const Matroid& m, const Vec& psi);

// The face of P(M) on which psi is maximized, as a matroid on the same
// ground set (its bases are the psi-maximal bases of M).
Matroid maximize(const Matroid& m, const Vec& psi);

// Basis (as matrix columns) of V(M) = span{x - y : x, y in P(M)}; the column
// count equals d(M).
QMatrix vspace_basis(const Matroid& m);

// All faces of P(M), including P(M) itself, discovered by iterated facet
// passes; deterministic order (sorted by basis lists).
std::vector<Matroid> all_faces(const Matroid& m);

// True when P(face) is a face of the polytope P(m).  Both matroids must share
// the ground set and bases(face) must be a subset of bases(m); the
// separating functional is found by exact linear programming.
bool is_face_of(const Matroid& face, const Matroid& m);

// True when P(q) is not contained in the boundary of P(m).  Exact test on
// the barycenter of P(q): an interior point of P(q) lies in the relative
// interior of P(m) iff every inequality of P(m) that is not identically
// tight stays strict at it.
bool is_internal_face(const Matroid& q, const Matroid& m);

}  // namespace valuator
