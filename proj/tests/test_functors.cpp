#include <map>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "test_common.hpp"
#include "valuator/decomp.hpp"
#include "valuator/functors.hpp"
#include "valuator/homcheck.hpp"
#include "valuator/invariants.hpp"
#include "valuator/polynomial.hpp"

using namespace valuator;
using testutil::k4;
using testutil::loop_coloop;
using testutil::octahedron;
using testutil::pyr_n;
using testutil::pyr_np;
using testutil::square_nn;
using testutil::u24;

namespace {

BPoly bpoly_of(const std::map<Deg, int>& dims) {
  BPoly p;
  for (const auto& [d, n] : dims) p.add_coeff(d.first, d.second, n);
  return p;
}

UPoly upoly_of(const std::map<Deg, int>& dims) {
  UPoly p;
  for (const auto& [d, n] : dims) {
    REQUIRE(d.second == 0);
    p.add_coeff(d.first, n);
  }
  return p;
}

// The block for degree d, materialized as a zero matrix when absent.
QMatrix dense(const MorBlocks& b, Deg d, const GradedSpace& dst, const GradedSpace& src) {
  auto it = b.find(d);
  return it != b.end() ? it->second : QMatrix(dst.dim(d), src.dim(d));
}

int index_in(const GradedSpace& g, Deg d, const std::string& label) {
  const auto& v = g.basis.at(d);
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] == label) return static_cast<int>(i);
  FAIL("label not found: ", label);
  return -1;
}

void check_functorial(const FunctorSpec& f, const Matroid& a, const Matroid& b, const Matroid& c) {
  const GradedSpace ga = f.obj(a), gb = f.obj(b), gc = f.obj(c);
  const MorBlocks ab = f.mor(WeakMap::identity_map(a, b));
  const MorBlocks bc = f.mor(WeakMap::identity_map(b, c));
  const MorBlocks ac = f.mor(WeakMap::identity_map(a, c));
  std::set<Deg> degs;
  for (const auto& [d, labels] : ga.basis) degs.insert(d);
  for (const auto& [d, labels] : gc.basis) degs.insert(d);
  for (Deg d : degs)
    CHECK(dense(ac, d, gc, ga) == dense(bc, d, gc, gb) * dense(ab, d, gb, ga));
  // Identity morphisms act as the identity matrix.
  const MorBlocks id = f.mor(WeakMap::identity_map(a, a));
  for (const auto& [d, labels] : ga.basis)
    CHECK(dense(id, d, ga, ga) == QMatrix::identity(static_cast<int>(labels.size())));
}

}  // namespace

TEST_CASE("tau and rank restriction") {
  CHECK(graded_dims(tau(), u24()) == std::map<Deg, int>{{{0, 0}, 1}});
  CHECK(graded_dims(restrict_rank(tau(), 2), u24()) == std::map<Deg, int>{{{0, 0}, 1}});
  CHECK(graded_dims(restrict_rank(tau(), 1), u24()).empty());
}

TEST_CASE("graded Orlik-Solomon spaces and the nbc gate") {
  const FunctorSpec f = gros();
  CHECK(upoly_of(graded_dims(f, u24())) == poincare_poly(u24()));
  const GradedSpace src = f.obj(u24()), dst = f.obj(pyr_n());
  const MorBlocks blocks = f.mor(WeakMap::identity_map(u24(), pyr_n()));
  // Degree 2: {1,2} and {1,3} survive, {1,4} dies (broken circuit {4}).
  const QMatrix m = dense(blocks, {2, 0}, dst, src);
  REQUIRE(m.rows() == 2);
  REQUIRE(m.cols() == 3);
  CHECK(m.at(index_in(dst, {2, 0}, "u{1,2}"), index_in(src, {2, 0}, "u{1,2}")) == 1);
  CHECK(m.at(index_in(dst, {2, 0}, "u{1,3}"), index_in(src, {2, 0}, "u{1,3}")) == 1);
  const int c14 = index_in(src, {2, 0}, "u{1,4}");
  CHECK(m.at(0, c14) == 0);
  CHECK(m.at(1, c14) == 0);
}

TEST_CASE("Orlik-Solomon morphisms straighten against circuit relations") {
  const FunctorSpec f = os();
  for (const Matroid& m : {u24(), pyr_n(), square_nn(), k4()})
    CHECK(f.obj(m).dims() == gros().obj(m).dims());

  // Identity inclusion into the pyramid: u_{1,4} = u_{1,3} in OS(N) since
  // 3 and 4 are parallel there.
  const GradedSpace src = f.obj(u24()), dst = f.obj(pyr_n());
  const MorBlocks blocks = f.mor(WeakMap::identity_map(u24(), pyr_n()));
  const QMatrix m2 = dense(blocks, {2, 0}, dst, src);
  const int c14 = index_in(src, {2, 0}, "u{1,4}");
  CHECK(m2.at(index_in(dst, {2, 0}, "u{1,3}"), c14) == 1);
  CHECK(m2.at(index_in(dst, {2, 0}, "u{1,2}"), c14) == 0);

  // Relabelling 1 <-> 2 sends u_{1,3} to u_{2,3}, which straightens to
  // u_{1,3} - u_{1,2} via the relation from circuit {1,2,3}.
  const WeakMap swap12 = WeakMap::with_perm(u24(), pyr_n(), {1, 0, 2, 3});
  const QMatrix s2 = dense(f.mor(swap12), {2, 0}, dst, src);
  const int c13 = index_in(src, {2, 0}, "u{1,3}");
  CHECK(s2.at(index_in(dst, {2, 0}, "u{1,3}"), c13) == 1);
  CHECK(s2.at(index_in(dst, {2, 0}, "u{1,2}"), c13) == -1);

  // Degreewise ranks of the straightened map agree with the graded map.
  const GradedSpace gsrc = gros().obj(u24()), gdst = gros().obj(pyr_n());
  const MorBlocks gb = gros().mor(WeakMap::identity_map(u24(), pyr_n()));
  for (const auto& [d, labels] : src.basis)
    CHECK(dense(blocks, d, dst, src).rank() == dense(gb, d, gdst, gsrc).rank());
}

TEST_CASE("flag functors") {
  CHECK(whitney({1}).obj(u24()).total_dim() == 4);
  CHECK(whitney({1, 2}).obj(u24()).total_dim() == 4);  // the top flat is forced
  CHECK(whitney({}).obj(u24()).total_dim() == 1);
  CHECK(whitney({2}).obj(pyr_n()).total_dim() == 1);

  // Points of U_{2,4} map onto the rank-1 flats of the pyramid; 3 and 4
  // both land on the flat {3,4}.
  const FunctorSpec f = whitney({1});
  const GradedSpace src = f.obj(u24()), dst = f.obj(pyr_n());
  const QMatrix m = dense(f.mor(WeakMap::identity_map(u24(), pyr_n())), {0, 0}, dst, src);
  REQUIRE(m.rows() == 3);
  REQUIRE(m.cols() == 4);
  CHECK(m.at(index_in(dst, {0, 0}, "{3,4}"), index_in(src, {0, 0}, "{3}")) == 1);
  CHECK(m.at(index_in(dst, {0, 0}, "{3,4}"), index_in(src, {0, 0}, "{4}")) == 1);
  CHECK(m.rank() == 3);  // surjective

  // Flag functors on a fixed labelled flag: {1} is a flat of U_{2,4} and of
  // the pyramid, but not of the square, where its closure is {1,2}.
  const FunctorSpec psi = psi_flag({1}, {{"1"}});
  CHECK(psi.obj(u24()).total_dim() == 1);
  CHECK(psi.obj(pyr_n()).total_dim() == 1);
  CHECK(psi.obj(square_nn()).total_dim() == 0);
  CHECK(psi.mor(WeakMap::identity_map(u24(), pyr_n())).at({0, 0}) == QMatrix::identity(1));
  CHECK(psi.mor(WeakMap::identity_map(u24(), square_nn())).empty());
}

TEST_CASE("Chow functors match the numeric polynomials") {
  for (const Matroid& m : {u24(), Matroid::uniform_kn(3, 3), Matroid::uniform_kn(3, 6), k4(),
                           pyr_n(), square_nn(), loop_coloop()}) {
    CHECK(upoly_of(graded_dims(chow(), m)) == chow_poly(m));
    CHECK(upoly_of(graded_dims(aug_chow(), m)) == aug_chow_poly(m));
  }
}

TEST_CASE("bigraded KL and Z functors match the recursion oracles") {
  for (const Matroid& m : {u24(), Matroid::uniform_kn(3, 5), Matroid::uniform_kn(3, 6), k4(),
                           pyr_n(), square_nn(), loop_coloop(), Matroid::uniform_kn(1, 1)}) {
    CHECK(bpoly_of(graded_dims(kl_bigraded(), m)).eval_u(-1) == kl_poly(m));
    CHECK(bpoly_of(graded_dims(sigma_bigraded(), m)).eval_u(-1) == z_poly(m));
  }
  // U_{3,6}: 15 lines in bidegree (1,0), 6 points in bidegree (1,1).
  const auto dims = graded_dims(kl_bigraded(), Matroid::uniform_kn(3, 6));
  CHECK(dims == std::map<Deg, int>{{{0, 0}, 1}, {{1, 0}, 15}, {{1, 1}, 6}});
}

TEST_CASE("functoriality: composition and identities") {
  const std::vector<FunctorSpec> specs = {gros(),     os(),  whitney({1}), whitney({1, 2}),
                                          chow(),     aug_chow(), kl_bigraded(),
                                          sigma_bigraded()};
  for (const FunctorSpec& f : specs) {
    CAPTURE(f.name);
    check_functorial(f, u24(), pyr_n(), square_nn());
  }
  // Composition through a relabelling automorphism.
  const WeakMap rot = WeakMap::with_perm(u24(), u24(), {1, 2, 3, 0});
  for (const FunctorSpec& f : {os(), chow(), kl_bigraded(), sigma_bigraded()}) {
    CAPTURE(f.name);
    const GradedSpace g = f.obj(u24()), gd = f.obj(pyr_n());
    const MorBlocks then_incl = f.mor(WeakMap::with_perm(u24(), pyr_n(), rot.phi));
    const MorBlocks idm = f.mor(WeakMap::identity_map(u24(), pyr_n()));
    const MorBlocks rotm = f.mor(rot);
    for (const auto& [d, labels] : g.basis)
      CHECK(dense(then_incl, d, gd, g) == dense(idm, d, gd, g) * dense(rotm, d, g, g));
  }
}

TEST_CASE("every functor sends the octahedron complex to an exact sequence") {
  const SignedComplex c = build_complex(octahedron());
  const std::vector<FunctorSpec> specs = {tau(),      gros(),     os(),
                                          whitney({1}), whitney({1, 2}), chow(),
                                          aug_chow(), kl_bigraded(),   sigma_bigraded()};
  for (const FunctorSpec& f : specs) {
    CAPTURE(f.name);
    const HomologyReport rep = functor_homology(c, f);
    CHECK(rep.exact);
  }
  // Orlik-Solomon degree 2 gives the sequence 0 -> 3 -> 4 -> 1 -> 0.
  const HomologyReport rep = functor_homology(c, os());
  CHECK(rep.dims.at({2, 0}) == std::vector<int>{0, 0, 1, 4, 3});
}

TEST_CASE("the relaxed K4 orbit complex is exact under the heavier functors") {
  std::vector<Mask> triangles;
  const Matroid m = k4();
  for (Mask f : m.flats())
    if (m.rk(f) == 2 && popcount(f) == 3) triangles.push_back(f);
  REQUIRE(triangles.size() == 4);
  const SignedComplex c = build_complex(relax_decomposition_orbit(m, triangles));
  for (const FunctorSpec& f : {os(), chow(), aug_chow(), kl_bigraded(), sigma_bigraded()}) {
    CAPTURE(f.name);
    CHECK(functor_homology(c, f).exact);
  }
}

TEST_CASE("convolution: rank gates and valuativity") {
  const std::vector<std::string> e1 = {"1", "2"};
  const FunctorSpec t1 = restrict_rank(tau(), 1);
  const FunctorSpec conv11 = convolve(t1, t1, e1);
  // The split of U_{2,4} at {1,2} has ranks (2,0); the square splits (1,1).
  CHECK(conv11.obj(u24()).total_dim() == 0);
  CHECK(conv11.obj(square_nn()).total_dim() == 1);
  CHECK(conv11.obj(pyr_n()).total_dim() == 0);
  CHECK(conv11.mor(WeakMap::identity_map(u24(), square_nn())).empty());

  const FunctorSpec conv20 = convolve(restrict_rank(tau(), 2), restrict_rank(tau(), 0), e1);
  CHECK(conv20.obj(u24()).total_dim() == 1);
  CHECK(conv20.obj(square_nn()).total_dim() == 0);

  // Tensor-degree bookkeeping: grOS x grOS on the square has the dims of a
  // product of two segments.
  const FunctorSpec gg = convolve(gros(), gros(), e1);
  CHECK(upoly_of(graded_dims(gg, square_nn())) == upoly_of(graded_dims(gros(), square_nn())));

  const SignedComplex c = build_complex(octahedron());
  const std::vector<FunctorSpec> pairs = {
      convolve(tau(), tau(), e1),      conv11,
      conv20,                          convolve(gros(), tau(), e1),
      convolve(tau(), gros(), e1),     convolve(whitney({1}), t1, e1),
      convolve(gros(), gros(), e1)};
  for (const FunctorSpec& f : pairs) {
    CAPTURE(f.name);
    CHECK(functor_homology(c, f).exact);
  }
}
