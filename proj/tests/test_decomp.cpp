#include <set>

#include "doctest.h"
#include "test_common.hpp"
#include "valuator/decomp.hpp"
#include "valuator/matroid.hpp"
#include "valuator/polytope.hpp"

using namespace valuator;
using testutil::drop_basis;
using testutil::k4;
using testutil::octahedron;
using testutil::pyr_n;
using testutil::pyr_np;
using testutil::u24;

TEST_CASE("octahedron decomposition: structure and validation") {
  Decomposition dec = octahedron();
  CHECK(dec.faces().size() == 29);  // 19 + 19 faces of the pyramids, 9 shared
  CHECK(dec.d() == 3);
  CHECK(dec.maximal_cells().size() == 2);
  CHECK(dec.internal_of_dim(3).size() == 2);
  CHECK(dec.internal_of_dim(2).size() == 1);
  CHECK(dec.internal_of_dim(1).empty());
  CHECK(dec.internal_of_dim(0).empty());
  CHECK_NOTHROW(dec.validate());
}

TEST_CASE("invalid decompositions are rejected") {
  // Only half of the octahedron: covering fails.
  Decomposition half = Decomposition::build(u24(), all_faces(pyr_n()));
  CHECK_THROWS_AS(half.validate(), ValidationError);
  // A maximal cell properly overlapping another: the pairwise test fails.
  {
    std::set<std::vector<Mask>> seen;
    std::vector<Matroid> faces;
    for (const Matroid& cell : {u24(), pyr_n()})
      for (const Matroid& f : all_faces(cell))
        if (seen.insert(f.bases()).second) faces.push_back(f);
    Decomposition overlap = Decomposition::build(u24(), faces);
    CHECK_THROWS_AS(overlap.validate(), ValidationError);
  }
  // Dropping an interior face breaks closure already at build time.
  {
    Decomposition oct = octahedron();
    std::vector<Matroid> faces;
    for (const Matroid& f : oct.faces())
      if (f.bases().size() != 4) faces.push_back(f);  // removes the square
    CHECK_THROWS_AS(Decomposition::build(u24(), faces), ValidationError);
  }
}

TEST_CASE("octahedron signed complex") {
  SignedComplex c = build_complex(octahedron());
  CHECK(c.top == 4);
  CHECK(c.cells[4].size() == 1);
  CHECK(c.cells[3].size() == 2);
  CHECK(c.cells[2].size() == 1);
  CHECK(c.cells[1].empty());
  CHECK(c.cells[0].empty());
  // All incidence entries are +-1 and the squares vanish (asserted at build
  // time as well).
  for (int q = 0; q < 2; ++q) {
    const Rat top = c.diff[4].at(q, 0);
    const Rat mid = c.diff[3].at(0, q);
    CHECK((top == 1 || top == -1));
    CHECK((mid == 1 || mid == -1));
  }
  CHECK(c.diff[4].at(0, 0) * c.diff[3].at(0, 0) + c.diff[4].at(1, 0) * c.diff[3].at(0, 1) == 0);
  auto h = tau_homology(c);
  for (int x : h) CHECK(x == 0);
}

TEST_CASE("trivial decomposition complex is exact") {
  Decomposition triv = Decomposition::build(u24(), all_faces(u24()));
  CHECK(triv.internal_of_dim(3).size() == 1);
  CHECK(triv.internal_of_dim(2).empty());
  CHECK_NOTHROW(triv.validate());
  SignedComplex c = build_complex(triv);
  for (int x : tau_homology(c)) CHECK(x == 0);
}

TEST_CASE("stressed flats and relaxation on the pyramid") {
  Matroid n = pyr_n();
  const Mask f = n.mask_of({"3", "4"});
  CHECK(n.is_flat(f));
  CHECK(is_stressed(n, f));
  CHECK(cusp(n, f).size() == 1);
  CHECK(relax(n, f) == u24());
  CHECK(pi_matroid(n, f) == Matroid::uniform(1, {"1", "2"}).direct_sum(Matroid::uniform(1, {"3", "4"})));
  CHECK(lambda_matroid(n, f) == pyr_np());
  // Uniform matroids have no relaxation: every cusp is empty or the flat is
  // not proper.
  Matroid u = u24();
  for (Mask g : u.flats())
    if (g != 0 && g != u.full_mask()) CHECK(cusp(u, g).empty());
}

TEST_CASE("relaxation decomposition recovers the octahedron") {
  Matroid n = pyr_n();
  const Mask f = n.mask_of({"3", "4"});
  Decomposition dec = relax_decomposition(n, f);
  CHECK(dec.target() == u24());
  CHECK(dec.faces().size() == 29);
  // Internal faces are exactly M, Lambda, Pi.
  std::set<std::vector<Mask>> internal;
  for (std::size_t i = 0; i < dec.faces().size(); ++i)
    if (dec.is_internal(i)) internal.insert(dec.faces()[i].bases());
  CHECK(internal.size() == 3);
  CHECK(internal.count(n.bases()));
  CHECK(internal.count(pyr_np().bases()));
  CHECK(internal.count(pi_matroid(n, f).bases()));
  CHECK_NOTHROW(dec.validate());
  // Dimension bookkeeping.
  CHECK(dec.target().d() == n.d());
  CHECK(lambda_matroid(n, f).d() == n.d());
  CHECK(pi_matroid(n, f).d() == n.d() - 1);
  // Pi is the face of M maximizing delta_F and the face of Lambda maximizing
  // delta_{E-F}.
  CHECK(maximize(n, delta(n, f)) == pi_matroid(n, f));
  CHECK(maximize(lambda_matroid(n, f), delta(n, n.full_mask() & ~f)) == pi_matroid(n, f));
}

TEST_CASE("degenerate relaxation: M equals Pi") {
  Matroid sq = pi_matroid(pyr_n(), pyr_n().mask_of({"3", "4"}));
  const Mask f = sq.mask_of({"3", "4"});
  CHECK(is_stressed(sq, f));
  Decomposition dec = relax_decomposition(sq, f);
  CHECK(dec.target() == pyr_np());
  CHECK(dec.maximal_cells().size() == 1);
  CHECK_NOTHROW(dec.validate());
}

TEST_CASE("relaxing all triangles of K4 yields U_{3,6}") {
  Matroid m = k4();
  std::vector<Mask> triangles;
  for (Mask f : m.flats())
    if (m.rk(f) == 2 && popcount(f) == 3 && is_stressed(m, f) && !cusp(m, f).empty())
      triangles.push_back(f);
  CHECK(triangles.size() == 4);
  // Single relaxation first.
  Decomposition one = relax_decomposition(m, triangles[0]);
  CHECK(one.target().bases().size() == 17);
  CHECK_NOTHROW(one.validate(2027, 32));
  // All four at once.
  Decomposition all = relax_decomposition_orbit(m, triangles);
  CHECK(all.target() == Matroid::uniform_kn(3, 6));
  std::size_t internal = 0;
  for (std::size_t i = 0; i < all.faces().size(); ++i)
    if (all.is_internal(i)) ++internal;
  CHECK(internal == 9);  // M, four Lambdas, four Pis
  CHECK_NOTHROW(all.validate(2027, 32));
  SignedComplex c = build_complex(all);
  for (int x : tau_homology(c)) CHECK(x == 0);
}

TEST_CASE("psi-projection of the octahedron complex") {
  SignedComplex c = build_complex(octahedron());
  Matroid u = u24();

  // psi = delta_{1}: the target projects to a triangle, both pyramids see
  // the same maximum.
  SignedComplex p1 = project_complex(c, delta(u, u.mask_of({"1"})));
  CHECK(p1.cells[4][0].bases().size() == 3);
  for (int x : tau_homology(p1)) CHECK(x == 0);

  // psi = delta_{1,2}: the target projects to a vertex; one pyramid drops
  // out of the surviving summand, the other contributes a null pair.
  SignedComplex p2 = project_complex(c, delta(u, u.mask_of({"1", "2"})));
  CHECK(p2.cells[4][0].bases().size() == 1);
  CHECK(p2.diff[4].at(0, 0) * p2.diff[4].at(0, 0) + p2.diff[4].at(1, 0) * p2.diff[4].at(1, 0) == 1);
  for (int x : tau_homology(p2)) CHECK(x == 0);

  // Compare with the decomposition induced on the psi-face, up to the degree
  // shift d(P) - d(P_psi).
  for (Mask s : std::vector<Mask>{u.mask_of({"1"}), u.mask_of({"1", "2"}), u.mask_of({"1", "2", "3"})}) {
    SignedComplex proj = project_complex(c, delta(u, s));
    Decomposition face = face_decomposition(octahedron(), delta(u, s));
    SignedComplex fc = build_complex(face);
    const int shift = u.d() - face.target().d();
    auto hp = tau_homology(proj);
    auto hf = tau_homology(fc);
    for (int k = 0; k <= proj.top; ++k) {
      const int expect = (k - shift >= 0 && k - shift <= fc.top) ? hf[k - shift] : 0;
      CHECK(hp[k] == expect);
    }
  }
}

TEST_CASE("point in polytope") {
  Matroid u = u24();
  CHECK(contains_point(u, barycenter(u)));
  CHECK(contains_point(pyr_n(), barycenter(pyr_n())));
  CHECK(!contains_point(pyr_n(), vertex_of(u, u.mask_of({"3", "4"}))));
  Vec outside(4, Rat(1) / 4);
  outside[0] = 2;
  CHECK(!contains_point(u, outside));
}
