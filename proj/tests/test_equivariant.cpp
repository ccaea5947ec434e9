#include "doctest.h"

#include <algorithm>
#include <utility>
#include <vector>

#include "test_common.hpp"
#include "valuator/catalog.hpp"
#include "valuator/decomp.hpp"
#include "valuator/equivariant.hpp"
#include "valuator/functors.hpp"
#include "valuator/matroid.hpp"

using namespace valuator;

namespace {

// gamma = (12): swaps the first two of four symbols.
const std::vector<int> kSwap12{1, 0, 2, 3};
// gamma = (13)(24): the half-turn of the square 1-3 / 2-4.
const std::vector<int> kHalfTurn{2, 3, 0, 1};

PermGroup dihedral4() { return PermGroup::generate(4, {kSwap12, kHalfTurn}); }

Rat total_trace(const FunctorSpec& f, const Matroid& m, const std::vector<int>& g,
                int first_degree = -1) {
  Rat acc(0);
  for (const auto& [d, t] : trace_on(f, m, g))
    if (first_degree < 0 || d.first == first_degree) acc += t;
  return acc;
}

Rat mn(std::vector<int> outer, std::vector<int> inner, std::vector<int> rho) {
  return mn_skew_character(SkewShape{std::move(outer), std::move(inner)},
                           std::move(rho));
}

}  // namespace

TEST_CASE("permutation helpers") {
  const auto c = perm_compose(kSwap12, kHalfTurn);
  CHECK(c == std::vector<int>({2, 3, 1, 0}));  // the 4-cycle 1->3->2->4->1
  CHECK(perm_compose(c, perm_inverse(c)) == std::vector<int>({0, 1, 2, 3}));

  CHECK(cycle_type(c) == Partition({4}));
  CHECK(cycle_type(kHalfTurn) == Partition({2, 2}));
  CHECK(cycle_type(perm_inverse(c)) == Partition({4}));
  const std::vector<int> id4{0, 1, 2, 3};
  CHECK(cycle_type(id4) == Partition({1, 1, 1, 1}));
  CHECK(cycle_type_string(Partition({3, 2, 1})) == "3+2+1");

  CHECK(cycle_type_on(kHalfTurn, 0b0101) == Partition({2}));   // {1,3} invariant
  CHECK(cycle_type_on(kSwap12, 0b1100) == Partition({1, 1}));  // {3,4} fixed pointwise
  CHECK_THROWS_AS(cycle_type_on(kHalfTurn, 0b0011), ValidationError);
}

TEST_CASE("permutation groups") {
  const PermGroup d4 = dihedral4();
  CHECK(d4.size() == 8);
  CHECK(d4.elements[0] == std::vector<int>({0, 1, 2, 3}));

  const auto reps = d4.conjugacy_class_reps();
  const auto sizes = d4.conjugacy_class_sizes();
  REQUIRE(reps.size() == 5);
  REQUIRE(sizes.size() == 5);
  std::size_t total = 0;
  for (auto s : sizes) total += s;
  CHECK(total == 8);

  CHECK(PermGroup::trivial(4).size() == 1);
  CHECK(PermGroup::symmetric_on(4, 0b0111).size() == 6);
  CHECK(PermGroup::full_automorphisms(testutil::u24()).size() == 24);
  CHECK(PermGroup::full_automorphisms(testutil::square_nn()).size() == 8);

  // D4 is exactly the symmetry group of the square with diagonals {1,3},{2,4}.
  CHECK(d4.preserves(testutil::square_nn()));
  CHECK(d4.preserves(testutil::u24()));
  CHECK_FALSE(PermGroup::symmetric_on(4, 0b1111).preserves(testutil::square_nn()));

  // {1,3} is an edge of the square 1-3-2-4: fixed only by e and the half-turn's
  // reflection partner (13)(24).  {1,2} is a diagonal: fixed by a four-group.
  CHECK(d4.stabilizer_of(0b0101).size() == 2);
  CHECK(d4.stabilizer_of(0b0011).size() == 4);

  const auto subs = d4.subgroups();
  CHECK(subs.size() == 10);  // the classical count for the dihedral group of order 8
  std::vector<std::size_t> orders;
  for (const auto& s : subs) orders.push_back(s.size());
  std::sort(orders.begin(), orders.end());
  CHECK(orders == std::vector<std::size_t>({1, 2, 2, 2, 2, 2, 4, 4, 4, 8}));
}

TEST_CASE("determinant character on direction spaces") {
  const Matroid oct = testutil::u24();
  const Matroid sq = testutil::square_nn();
  const std::vector<int> id4{0, 1, 2, 3};

  CHECK(det_character(oct, id4) == 1);
  CHECK(det_character(oct, kHalfTurn) == 1);
  CHECK(det_character(sq, kHalfTurn) == -1);  // the half-turn flips the square
  CHECK(det_character(sq, kSwap12) == -1);    // (12) reflects across a diagonal
  CHECK(det_character(oct, kSwap12) == -1);   // one flipped coordinate pair

  // Multiplicative on Aut(square).
  const PermGroup d4 = dihedral4();
  for (const auto& a : d4.elements)
    for (const auto& b : d4.elements)
      CHECK(det_character(sq, perm_compose(a, b)) ==
            det_character(sq, a) * det_character(sq, b));

  // The half-turn does not preserve the upper pyramid.
  CHECK_THROWS_AS(det_character(testutil::pyr_n(), kHalfTurn), ValidationError);
}

TEST_CASE("graded traces") {
  const Matroid oct = testutil::u24();
  const Matroid sq = testutil::square_nn();
  const std::vector<int> id4{0, 1, 2, 3};

  // Rank-1 flats of U(2,4) are the four singletons; the half-turn fixes none.
  CHECK(total_trace(whitney({1}), oct, kHalfTurn) == 0);
  CHECK(total_trace(whitney({1}), oct, id4) == 4);

  // Traces at the identity are dimensions.
  for (const FunctorSpec& f : {tau(), os(), chow(), aug_chow(), kl_bigraded()}) {
    const auto tr = trace_on(f, oct, id4);
    const auto dims = f.obj(oct).dims();
    REQUIRE(tr.size() == dims.size());
    for (const auto& [d, n] : dims) CHECK(tr.at(d) == Rat(n));
  }

  // Degree-1 Orlik-Solomon trace of the swap on the square: the span of
  // e1,...,e4 modulo the two parallelisms is 2-dimensional and (12) acts
  // trivially on it.
  CHECK(total_trace(os(), sq, kSwap12, 1) == 2);
  CHECK(total_trace(os(), sq, id4, 1) == 2);
  CHECK(total_trace(os(), sq, kHalfTurn, 1) == 0);

  // Class function + inverse symmetry on Aut(U(2,4)).
  const PermGroup s4 = PermGroup::full_automorphisms(oct);
  const FunctorSpec f = chow();
  for (const auto& g : s4.elements) {
    const auto base = trace_on(f, oct, g);
    CHECK(trace_on(f, oct, perm_inverse(g)) == base);
    for (const auto& h : s4.elements)
      CHECK(trace_on(f, oct, perm_compose(perm_compose(h, g), perm_inverse(h))) ==
            base);
  }

  // Non-equivariant functors are refused.
  CHECK_THROWS_AS(trace_on(gros(), oct, id4), ValidationError);
}

TEST_CASE("character identity on the octahedron complex") {
  const SignedComplex c = build_complex(testutil::octahedron());
  const PermGroup d4 = dihedral4();

  const std::vector<FunctorSpec> functors{tau(),  os(),          whitney({1}),
                                          chow(), kl_bigraded(), whitney({1, 2})};
  for (const auto& f : functors) {
    const CharReport full = character_identity_check(c, d4, f);
    INFO(f.name << ": " << full.detail);
    CHECK(full.pass);
    for (const auto& sub : d4.subgroups()) {
      const CharReport r = character_identity_check(c, sub, f);
      INFO(f.name << " subgroup of order " << sub.size() << ": " << r.detail);
      CHECK(r.pass);
    }
  }

  // A group that moves cells outside the complex is rejected.
  const PermGroup bad = PermGroup::generate(4, {std::vector<int>{0, 2, 1, 3}});
  CHECK_THROWS_AS(character_identity_check(c, bad, tau()), ValidationError);
}

TEST_CASE("orbit relaxation and the virtual identity") {
  const Matroid k4 = testutil::k4();
  const auto auts = automorphisms(k4);
  REQUIRE(auts.size() == 24);

  const Mask triangle = 0b001011;  // {1,2,4}
  const auto orbit = orbit_of(triangle, auts);
  REQUIRE(orbit.size() == 4);

  // Relaxing all four triangles of K4 yields U(3,6).
  const Matroid relaxed = relax_orbit(k4, orbit);
  CHECK(relaxed == Matroid::uniform(3, k4.ground()));

  const PermGroup full = PermGroup::full_automorphisms(k4);
  const PermGroup stab = full.stabilizer_of(triangle);
  CHECK(stab.size() == 6);

  for (const FunctorSpec& f : {tau(), os(), chow(), kl_bigraded()}) {
    for (const PermGroup* g : {&full, &stab}) {
      const CharReport r = virtual_identity_check(k4, triangle, *g, f);
      INFO(f.name << " under group of order " << g->size() << ": " << r.detail);
      CHECK(r.pass);
    }
    const CharReport triv = virtual_identity_check(k4, triangle, PermGroup::trivial(6), f);
    INFO(f.name << " (trivial group): " << triv.detail);
    CHECK(triv.pass);
  }

  // A second family: the rim of the 3-wheel under its full automorphisms.
  const Matroid w3 = wheel(3);
  const Mask rim = 0b000111;
  const PermGroup aw3 = PermGroup::full_automorphisms(w3);
  for (const FunctorSpec& f : {tau(), chow()}) {
    const CharReport r = virtual_identity_check(w3, rim, aw3, f);
    INFO(f.name << ": " << r.detail);
    CHECK(r.pass);
  }
}

TEST_CASE("standard tableaux and Murnaghan-Nakayama") {
  CHECK(syt_count(SkewShape{{3, 2}, {1}}) == 5);
  CHECK(syt_count(SkewShape{{2, 1}, {}}) == 2);
  CHECK(syt_count(SkewShape{{5}, {}}) == 1);
  CHECK(syt_count(SkewShape{{2, 2}, {1}}) == 2);
  CHECK(syt_count(SkewShape{{1, 1, 1}, {}}) == 1);

  // Identity column of the character equals the tableau count.
  for (const SkewShape s :
       {SkewShape{{3, 2}, {1}}, SkewShape{{2, 2}, {1}}, SkewShape{{4, 2}, {1}}}) {
    const Partition ones(static_cast<std::size_t>(s.size()), 1);
    CHECK(mn_skew_character(s, ones) == Rat(syt_count(s)));
  }

  // chi^{(h)} is the trivial character.
  CHECK(mn({4}, {}, {4}) == 1);
  CHECK(mn({4}, {}, {2, 2}) == 1);
  CHECK(mn({4}, {}, {2, 1, 1}) == 1);

  // chi^{(1,1)} is the sign character of S2.
  CHECK(mn({1, 1}, {}, {2}) == -1);
  CHECK(mn({1, 1}, {}, {1, 1}) == 1);

  // The standard character of S3: 2, 0, -1.
  CHECK(mn({2, 1}, {}, {1, 1, 1}) == 2);
  CHECK(mn({2, 1}, {}, {2, 1}) == 0);
  CHECK(mn({2, 1}, {}, {3}) == -1);

  // Disconnected skew shape: two free cells give the regular character of S2.
  CHECK(mn({2, 1}, {1}, {1, 1}) == 2);
  CHECK(mn({2, 1}, {1}, {2}) == 0);

  CHECK_THROWS_AS(mn({2, 1}, {}, {2, 2}), ValidationError);
}

TEST_CASE("equivariant Kazhdan-Lusztig coefficients") {
  const Matroid k4 = testutil::k4();
  const std::vector<int> id6{0, 1, 2, 3, 4, 5};
  CHECK(eq_kl_coeff(k4, id6, 0) == 1);
  CHECK(eq_kl_coeff(k4, id6, 1) == 1);  // P_{K4} = 1 + t
  // The degree-0 piece always carries the trivial character.
  for (const auto& g : automorphisms(k4)) CHECK(eq_kl_coeff(k4, g, 0) == 1);

  const Matroid u36 = Matroid::uniform(3, k4.ground());
  CHECK(eq_kl_coeff(u36, id6, 1) == 9);
}

TEST_CASE("hyperplane relaxation pairs") {
  const HyperplanePair hp = hyperplane_pair(3, 4);
  CHECK(hp.h_mask == 0b01111);
  CHECK(hp.sym.size() == 24);
  CHECK(hp.pi.n() == 5);
  CHECK(hp.pi.rank() == 3);
  CHECK(hp.pi.bases().size() == 6);  // 1 * C(4,2)
  CHECK(hp.lambda == Matroid::uniform(3, hp.pi.ground()));
  CHECK_THROWS_AS(hyperplane_pair(4, 2), ValidationError);

  // Shape bookkeeping: i=1, k=3, h=4 gives [3,2]/[1] with 5 tableaux.
  const SkewShape s = kl_correction_shape(1, 3, 4);
  CHECK(s.outer == Partition({3, 2}));
  CHECK(s.inner == Partition({1}));
  CHECK(syt_count(s) == 5);
}

TEST_CASE("Kazhdan-Lusztig correction for hyperplane relaxations") {
  const std::vector<std::pair<int, int>> cases{{2, 2}, {2, 3}, {3, 3}, {3, 4}, {4, 4}};
  for (const auto& [k, h] : cases) {
    const CharReport r = kl_correction_check(k, h);
    INFO("k=" << k << " h=" << h << ": " << r.detail);
    CHECK(r.pass);
  }
}

TEST_CASE("Orlik-Solomon correction exponent") {
  // The graded difference matches the (k-1)-st exterior power of the standard
  // representation; for k=2,h=2 the k-th power is refuted.
  const OsExponentReport r22 = os_correction_report(2, 2);
  INFO(r22.detail);
  CHECK(r22.matches_km1);
  CHECK_FALSE(r22.matches_k);

  const std::vector<std::pair<int, int>> cases{{2, 3}, {3, 3}, {3, 4}};
  for (const auto& [k, h] : cases) {
    const OsExponentReport r = os_correction_report(k, h);
    INFO("k=" << k << " h=" << h << ": " << r.detail);
    CHECK(r.matches_km1);
  }
}
