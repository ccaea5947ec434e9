#include <algorithm>
#include <map>
#include <string>

#include "doctest.h"
#include "test_common.hpp"
#include "valuator/decomp.hpp"
#include "valuator/invariants.hpp"
#include "valuator/matroid.hpp"
#include "valuator/polynomial.hpp"

using namespace valuator;
using testutil::k4;
using testutil::loop_coloop;
using testutil::pyr_n;
using testutil::pyr_np;
using testutil::square_nn;
using testutil::u24;

namespace {

UPoly upoly(std::initializer_list<long> coeffs) {
  UPoly p;
  int d = 0;
  for (long c : coeffs) p.add_coeff(d++, c);
  return p;
}

}  // namespace

TEST_CASE("graded dimensions of the reduced cohomology ring") {
  CHECK(poincare_poly(u24()) == upoly({1, 4, 3}));
  CHECK(poincare_poly(Matroid::uniform_kn(1, 3)) == upoly({1, 1}));
  CHECK(poincare_poly(Matroid::uniform_kn(3, 3)) == upoly({1, 3, 3, 1}));
  CHECK(poincare_poly(loop_coloop()).is_zero());  // a loop's broken circuit is empty
  CHECK(poincare_poly(k4()) == upoly({1, 6, 11, 6}));
  // One-element deletion identity on a uniform matroid: nbc count of
  // U_{2,4} restricted away from element 4 equals that of U_{2,3}.
  CHECK(poincare_poly(u24().restriction(u24().mask_of({"1", "2", "3"}))) ==
        poincare_poly(Matroid::uniform_kn(2, 3)));
}

TEST_CASE("Chow polynomials: small closed forms") {
  CHECK(chow_poly(u24()) == upoly({1, 1}));
  // Boolean matroids give the Eulerian polynomials.
  CHECK(chow_poly(Matroid::uniform_kn(2, 2)) == upoly({1, 1}));
  CHECK(chow_poly(Matroid::uniform_kn(3, 3)) == upoly({1, 4, 1}));
  CHECK(chow_poly(Matroid::uniform_kn(1, 3)) == upoly({1}));
  CHECK(chow_poly(loop_coloop()).is_zero());
  CHECK(chow_poly(Matroid::uniform_kn(3, 4)) == upoly({1, 7, 1}));
  // U_{3,6}: flats are the empty set, 6 points, 15 lines, the whole thing.
  CHECK(chow_poly(Matroid::uniform_kn(3, 6)) == upoly({1, 16, 1}));
}

TEST_CASE("augmented Chow polynomials: small closed forms") {
  CHECK(aug_chow_poly(u24()) == upoly({1, 5, 1}));
  CHECK(aug_chow_poly(Matroid::uniform_kn(2, 2)) == upoly({1, 3, 1}));
  CHECK(aug_chow_poly(loop_coloop()) == upoly({1, 1}));
  CHECK(aug_chow_poly(Matroid::uniform_kn(0, 0)) == upoly({1}));
}

TEST_CASE("augmented Chow decomposes over flats into reduced Chow pieces") {
  for (const Matroid& m : {u24(), Matroid::uniform_kn(1, 3), k4(), loop_coloop(), pyr_n()}) {
    UPoly sum;
    for (Mask f : m.flats())
      sum = sum + UPoly::monomial(m.rk(f), 1) * chow_poly(m.contraction(f));
    CHECK(sum == aug_chow_poly(m));
  }
}

TEST_CASE("Kazhdan-Lusztig polynomials via the defect recursion") {
  CHECK(kl_poly(u24()) == upoly({1}));
  CHECK(kl_poly(Matroid::uniform_kn(3, 3)) == upoly({1}));
  CHECK(kl_poly(Matroid::uniform_kn(3, 6)) == upoly({1, 9}));
  CHECK(kl_poly(Matroid::uniform_kn(3, 5)) == upoly({1, 5}));
  // Rank 2 forces degree zero.
  CHECK(kl_poly(Matroid::uniform_kn(2, 6)) == upoly({1}));
  CHECK(kl_poly(loop_coloop()).is_zero());
  CHECK(kl_poly(Matroid::uniform_kn(0, 0)) == upoly({1}));
  // Graphic: the complete graph on four vertices.
  CHECK(kl_poly(k4()) == upoly({1, 1}));
}

TEST_CASE("Z polynomials and palindromy") {
  CHECK(z_poly(u24()) == upoly({1, 4, 1}));
  CHECK(z_poly(Matroid::uniform_kn(1, 1)) == upoly({1, 1}));
  for (const Matroid& m :
       {u24(), Matroid::uniform_kn(2, 5), Matroid::uniform_kn(3, 6), k4(), pyr_n()}) {
    const UPoly z = z_poly(m);
    CHECK(z.palindromic(m.rank()));
    // Z sums the KL polynomials of all contractions by flats.
    UPoly sum;
    for (Mask f : m.flats()) sum = sum + UPoly::monomial(m.rk(f), 1) * kl_poly(m.contraction(f));
    CHECK(z == sum);
  }
}

TEST_CASE("numeric invariants are valuative on the octahedron decomposition") {
  const Matroid m = u24(), n = pyr_n(), np = pyr_np(), sq = square_nn();
  auto check_val = [&](auto&& inv) { CHECK(inv(m) + inv(sq) == inv(n) + inv(np)); };
  check_val([](const Matroid& x) { return poincare_poly(x); });
  check_val([](const Matroid& x) { return chow_poly(x); });
  check_val([](const Matroid& x) { return aug_chow_poly(x); });
  check_val([](const Matroid& x) { return kl_poly(x); });
  check_val([](const Matroid& x) { return z_poly(x); });
}

TEST_CASE("rank-word invariant") {
  const auto g = g_invariant(u24());
  REQUIRE(g.size() == 1);
  CHECK(g.begin()->second == 24);
  const std::string w = g.begin()->first;
  CHECK(w.size() == 4);
  CHECK(std::count(w.begin(), w.end(), 'y') == 2);
  CHECK(std::count(w.begin(), w.end(), 'x') == 2);

  const auto gb = g_invariant(Matroid::uniform_kn(2, 2));
  REQUIRE(gb.size() == 1);
  CHECK(gb.at("yy") == 2);

  // The flipped letter convention mirrors the default one.
  const auto gf = g_invariant(u24(), false);
  REQUIRE(gf.size() == 1);
  std::string flipped = w;
  for (char& c : flipped) c = (c == 'y') ? 'x' : 'y';
  CHECK(gf.begin()->first == flipped);

  // K4 distinguishes orderings: ranks can stall at different positions.
  const auto gk = g_invariant(k4());
  long long total = 0;
  for (const auto& [word, mult] : gk) {
    CHECK(word.size() == 6);
    CHECK(std::count(word.begin(), word.end(), 'y') == 3);
    total += mult;
  }
  CHECK(total == 720);
}

TEST_CASE("rank-word invariant is valuative on the octahedron decomposition") {
  std::map<std::string, long long> lhs, rhs;
  for (const auto& [w, c] : g_invariant(u24())) lhs[w] += c;
  for (const auto& [w, c] : g_invariant(square_nn())) lhs[w] += c;
  for (const auto& [w, c] : g_invariant(pyr_n())) rhs[w] += c;
  for (const auto& [w, c] : g_invariant(pyr_np())) rhs[w] += c;
  CHECK(lhs == rhs);
}

TEST_CASE("Bergman cone counts") {
  // U_{1,2}: flats are the empty set and the whole ground set; independent
  // sets are the empty set and the two singletons.
  const auto cones = bergman_cones(Matroid::uniform_kn(1, 2));
  CHECK(cones.size() == 4);

  // The stellahedral reference fan on the same ground set ranges over all
  // subsets: 4 choices of I with no chain, plus chains from each of the
  // three proper subsets and their refinements.
  const auto stell = stellahedral_cones(Matroid::uniform_kn(2, 2));
  // I in {0,1,2,12} (4 cones with empty chain); chains over proper subsets:
  // [0],[1],[2],[0<1],[0<2] with I constrained to lie inside the first set:
  // [0]:1, [1]:2, [2]:2, [0<1]:1, [0<2]:1.
  CHECK(stell.size() == 4 + 1 + 2 + 2 + 1 + 1);
}

TEST_CASE("Bergman cone signature is valuative on the octahedron decomposition") {
  std::map<BergmanCone, int> counts;
  auto tally = [&counts](const Matroid& m, int sign) {
    for (const auto& c : bergman_cones(m)) counts[c] += sign;
  };
  tally(u24(), +1);
  tally(square_nn(), +1);
  tally(pyr_n(), -1);
  tally(pyr_np(), -1);
  for (const auto& [cone, c] : counts) CHECK(c == 0);
}
