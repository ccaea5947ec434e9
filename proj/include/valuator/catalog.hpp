#pragma once

#include <string>
#include <utility>
#include <vector>

#include "valuator/decomp.hpp"
#include "valuator/matroid.hpp"

namespace valuator {

struct CatalogEntry {
  std::string name;
  Matroid m;
};

// Graphic matroid of an edge list on vertices 0..nv-1; element labels are
// "1".."m" in edge order.  Bases are the spanning forests of maximal size.
Matroid graphic_matroid(int nv, const std::vector<std::pair<int, int>>& edges);

// The complete graph on four vertices: edges 1=ab, 2=ac, 3=ad, 4=bc, 5=bd,
// 6=cd.
Matroid graphic_k4();

// The wheel with `spokes` rim vertices and one hub: rim edges "1".."n",
// spokes "n+1".."2n"; rank = spokes.
Matroid wheel(int spokes);

// A (matroid, stressed flat) pair eligible for relaxation: F is stressed,
// cusp(m, F) is nonempty and m != pi_matroid(m, F), so relax_decomposition
// is nondegenerate.
struct StressedPair {
  std::string name;  // "<entry>@{labels}"
  Matroid m;
  Mask flat;
};

// The named test corpus: uniforms U(k,n) for n <= 7 and all k, the graphic
// matroids K4, W3, W4, the pi/lambda companions of every stressed pair of
// those, and all single relaxations of everything listed, deduplicated.
const std::vector<CatalogEntry>& catalog();

// All eligible stressed pairs across the full catalog, in catalog order.
std::vector<StressedPair> stressed_pairs();

// Eligible stressed pairs of a single matroid.
std::vector<Mask> eligible_stressed_flats(const Matroid& m);

// The automorphism group of m: permutations p of internal indices (element i
// maps to element p[i]) with relabel(p) == m.  Brute force over S_n.
std::vector<std::vector<int>> automorphisms(const Matroid& m);

// Image of a subset under a permutation of internal indices.
Mask apply_perm(Mask s, const std::vector<int>& perm);

// Orbit of a subset under a set of permutations, sorted.
std::vector<Mask> orbit_of(Mask f, const std::vector<std::vector<int>>& perms);

// Deterministic weak-map test pairs: single-basis drops across the catalog,
// relaxation inclusions relax(m,F) -> m and lambda -> pi, and cell -> face
// inclusions from the octahedron decomposition.  At least min_count pairs.
std::vector<WeakMap> weak_map_pairs(std::size_t min_count);

// The decomposition of P(U(2,4)) into the two pyramids obtained by relaxing
// the circuit hyperplane {3,4} of the lower pyramid.
Decomposition octahedron_decomposition();

}  // namespace valuator
