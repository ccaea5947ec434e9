#include "doctest.h"

#include <set>

#include "valuator/catalog.hpp"
#include "test_common.hpp"

using namespace valuator;
using namespace testutil;

TEST_CASE("graphic matroids") {
  CHECK(graphic_k4() == k4());
  const Matroid w3 = wheel(3);
  CHECK(w3.rank() == 3);
  CHECK(w3.n() == 6);
  CHECK(w3.bases().size() == 16);  // spanning trees of the wheel = K4
  CHECK(w3 != graphic_k4());      // same structure, different edge labelling
  const Matroid w4 = wheel(4);
  CHECK(w4.rank() == 4);
  CHECK(w4.n() == 8);
  CHECK(w4.bases().size() == 45);  // spanning trees of W4
}

TEST_CASE("catalog contents") {
  const auto& cat = catalog();
  std::set<std::string> names;
  std::set<Matroid> matroids;
  for (const auto& e : cat) {
    CHECK(names.insert(e.name).second);
    CHECK(matroids.insert(e.m).second);  // deduplicated
  }
  for (const char* want : {"U(0,0)", "U(2,4)", "U(3,7)", "K4", "W3", "W4"})
    CHECK(names.count(want) == 1);
  // 36 uniforms + 3 graphic + derived families
  CHECK(cat.size() > 39);
  bool has_pi = false, has_lambda = false, has_relax = false;
  for (const auto& e : cat) {
    has_pi |= e.name.rfind("pi(", 0) == 0;
    has_lambda |= e.name.rfind("lambda(", 0) == 0;
    has_relax |= e.name.rfind("relax(", 0) == 0;
  }
  CHECK(has_pi);
  CHECK(has_lambda);
  CHECK(has_relax);
}

TEST_CASE("stressed pairs of the base families") {
  auto count_for = [](const Matroid& m) { return eligible_stressed_flats(m).size(); };
  CHECK(count_for(graphic_k4()) == 4);  // the four triangles
  CHECK(count_for(wheel(3)) == 4);      // rim + three rim-pair/spoke triangles
  CHECK(count_for(wheel(4)) == 1);      // only the rim
  CHECK(count_for(u24()) == 0);         // uniform: every cusp is empty
  // Relaxing the W4 rim gives a rank-4 matroid on 8 elements with one more basis.
  const Mask rim = 0b1111;
  CHECK(is_stressed(wheel(4), rim));
  CHECK(relax(wheel(4), rim).bases().size() == 46);
  const auto pairs = stressed_pairs();
  CHECK(pairs.size() >= 9);
  for (const auto& p : pairs) {
    CHECK(is_stressed(p.m, p.flat));
    CHECK(!cusp(p.m, p.flat).empty());
    CHECK(p.m != pi_matroid(p.m, p.flat));
  }
}

TEST_CASE("automorphism groups") {
  CHECK(automorphisms(u24()).size() == 24);        // S4
  CHECK(automorphisms(graphic_k4()).size() == 24); // vertex permutations of K4
  CHECK(automorphisms(square_nn()).size() == 8);   // dihedral: swaps within and between classes
  CHECK(automorphisms(wheel(4)).size() == 8);      // dihedral symmetry of the wheel

  // Orbit of one K4 triangle under the full group is all four triangles.
  const auto auts = automorphisms(graphic_k4());
  const auto orbit = orbit_of(0b001011, auts);  // {1,2,4}
  CHECK(orbit == std::vector<Mask>{0b001011, 0b010101, 0b100110, 0b111000});
}

TEST_CASE("octahedron decomposition from relaxation") {
  const Decomposition d = octahedron_decomposition();
  CHECK(d.target() == u24());
  CHECK(d.faces().size() == 29);
  const Decomposition hand = octahedron();
  CHECK(d.target() == hand.target());
  std::set<Matroid> a(d.faces().begin(), d.faces().end());
  std::set<Matroid> b(hand.faces().begin(), hand.faces().end());
  CHECK(a == b);
}

TEST_CASE("weak map pair generator") {
  const auto pairs = weak_map_pairs(200);
  CHECK(pairs.size() >= 200);
  for (const auto& w : pairs) {
    CHECK(w.src.rank() == w.dst.rank());
    CHECK(w.is_identity_relabel());
  }
}
