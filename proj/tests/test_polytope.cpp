#include <set>

#include "doctest.h"
#include "valuator/matroid.hpp"
#include "valuator/polytope.hpp"

using namespace valuator;

namespace {

// The rank-2 matroid on {1,2,3,4} whose bases are all pairs except {3,4}:
// one of the two square pyramids in the octahedron decomposition.
Matroid pyramid_n() {
  Matroid u24 = Matroid::uniform_kn(2, 4);
  std::vector<Mask> bases;
  for (Mask b : u24.bases())
    if (b != u24.mask_of({"3", "4"})) bases.push_back(b);
  return Matroid::from_masks(u24.ground(), bases);
}

Matroid square_n2() {
  return Matroid::uniform(1, {"1", "2"}).direct_sum(Matroid::uniform(1, {"3", "4"}));
}

}  // namespace

TEST_CASE("vertices and barycenter") {
  Matroid u24 = Matroid::uniform_kn(2, 4);
  Vec v = vertex_of(u24, u24.mask_of({"1", "3"}));
  CHECK(v == Vec{Rat(1), Rat(0), Rat(1), Rat(0)});
  Vec b = barycenter(u24);
  for (const Rat& x : b) CHECK(x == Rat(1) / 2);
}

TEST_CASE("maximize") {
  Matroid u24 = Matroid::uniform_kn(2, 4);
  // A single-element functional picks out the triangle of bases through it.
  Matroid tri = maximize(u24, delta(u24, u24.mask_of({"1"})));
  CHECK(tri.bases().size() == 3);
  CHECK(tri.rank() == 2);
  // A pair functional picks out one vertex.
  Matroid vert = maximize(u24, delta(u24, u24.mask_of({"1", "2"})));
  CHECK(vert.bases().size() == 1);
  CHECK(max_value(u24, delta(u24, u24.mask_of({"1", "2"}))) == 2);
  // The whole-ground functional is constant.
  CHECK(maximize(u24, delta(u24, u24.full_mask())) == u24);
}

TEST_CASE("vspace dimensions match d") {
  for (const Matroid& m : {Matroid::uniform_kn(2, 4), pyramid_n(), square_n2(), Matroid::uniform_kn(4, 4),
                           Matroid::uniform_kn(3, 6)}) {
    CHECK(vspace_basis(m).cols() == m.d());
  }
}

TEST_CASE("face lattice of the octahedron") {
  Matroid u24 = Matroid::uniform_kn(2, 4);
  auto faces = all_faces(u24);
  // Octahedron: 1 + 8 triangles + 12 edges + 6 vertices.
  CHECK(faces.size() == 27);
  int by_dim[4] = {0, 0, 0, 0};
  for (const Matroid& f : faces) ++by_dim[f.d()];
  CHECK(by_dim[0] == 6);
  CHECK(by_dim[1] == 12);
  CHECK(by_dim[2] == 8);
  CHECK(by_dim[3] == 1);
}

TEST_CASE("is_face_of") {
  Matroid u24 = Matroid::uniform_kn(2, 4);
  Matroid vert = maximize(u24, delta(u24, u24.mask_of({"1", "2"})));
  CHECK(is_face_of(vert, u24));
  CHECK(is_face_of(u24, u24));
  Matroid n = pyramid_n();
  CHECK(!is_face_of(n, u24));  // half of the octahedron, not a face
  CHECK(is_face_of(square_n2(), n));  // the square base of the pyramid
  CHECK(!is_face_of(square_n2(), u24));
  for (const Matroid& f : all_faces(u24)) CHECK(is_face_of(f, u24));
}

TEST_CASE("internality inside the octahedron") {
  Matroid u24 = Matroid::uniform_kn(2, 4);
  Matroid n = pyramid_n();
  CHECK(is_internal_face(n, u24));           // 3-dimensional cell
  CHECK(is_internal_face(square_n2(), u24));  // the internal square
  CHECK(is_internal_face(u24, u24));
  // Triangle faces of the pyramid lie on the boundary of the octahedron.
  Matroid tri = maximize(n, delta(u24, u24.mask_of({"1"})));
  CHECK(tri.bases().size() == 3);
  CHECK(!is_internal_face(tri, u24));
  // Vertices are never internal (for positive-dimensional P).
  Matroid vert = maximize(u24, delta(u24, u24.mask_of({"1", "2"})));
  CHECK(!is_internal_face(vert, u24));
}

TEST_CASE("faces of a face are faces") {
  Matroid n = pyramid_n();
  auto faces = all_faces(n);
  // Square pyramid: 1 + 5 facets + 8 edges + 5 vertices.
  CHECK(faces.size() == 19);
  for (const Matroid& f : faces) CHECK(is_face_of(f, n));
}
