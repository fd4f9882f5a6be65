#include "doctest.h"

#include <algorithm>

#include "fixtures.hpp"
#include "mop/errors.hpp"
#include "mop/face_partition.hpp"
#include "mop/geometry.hpp"
#include "mop/oracle.hpp"
#include "random.hpp"

using namespace mop;
using namespace mop::testing;

namespace {

HPolyhedron plane_system(std::size_t n) {
  HPolyhedron H;
  for (std::size_t i = 0; i < n; ++i) H.coordinates.push_back("x" + std::to_string(i));
  return H;
}

void add_ineq(HPolyhedron& H, std::vector<Rational> coeffs, Rational rhs) {
  H.inequalities.push_back(LinearRow{std::move(coeffs), std::move(rhs)});
}

HPolyhedron unit_square() {
  return h_representation(regularize(redundant_square()).poset);
}

}  // namespace

TEST_CASE("maximize") {
  HPolyhedron H = plane_system(2);
  add_ineq(H, {1, 0}, 0);
  add_ineq(H, {0, 1}, 0);
  add_ineq(H, {-1, -1}, -3);
  const auto best = oracle::maximize(H, {1, 2});
  REQUIRE(best.status == oracle::LpStatus::Optimal);
  CHECK(best.value == 6);
  CHECK(best.point == point({0, 3}));
  CHECK(oracle::maximize(H, {-1, 0}).value == 0);

  HPolyhedron open = plane_system(1);
  add_ineq(open, {1}, 0);
  CHECK(oracle::maximize(open, {1}).status == oracle::LpStatus::Unbounded);
  add_ineq(open, {-1}, 1);
  CHECK(oracle::maximize(open, {1}).status == oracle::LpStatus::Infeasible);
}

TEST_CASE("lp_feasible") {
  const HPolyhedron H = h_representation(pentagon());
  const auto any = oracle::lp_feasible(H);
  REQUIRE(any);
  CHECK(H.contains(*any));

  std::vector<std::size_t> all(H.inequalities.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  const auto inner = oracle::lp_feasible(H, all);
  REQUIRE(inner);
  CHECK(H.contains(*inner));
  for (const auto& row : H.inequalities) CHECK(row.evaluate(inner->coords) > row.rhs);

  HPolyhedron bad = plane_system(1);
  add_ineq(bad, {1}, 0);
  add_ineq(bad, {-1}, 1);
  CHECK_FALSE(oracle::lp_feasible(bad));

  // x >= 0 and -x >= 0: feasible, but not strictly.
  HPolyhedron pinched = plane_system(1);
  add_ineq(pinched, {1}, 0);
  add_ineq(pinched, {-1}, 0);
  CHECK(oracle::lp_feasible(pinched));
  CHECK_FALSE(oracle::lp_feasible(pinched, {0}));
}

TEST_CASE("affine_dimension") {
  CHECK(oracle::affine_dimension(h_representation(pentagon())) == 2);
  HPolyhedron pt = plane_system(2);
  pt.equations.push_back(LinearRow{{1, 0}, 3});
  pt.equations.push_back(LinearRow{{1, 1}, 1});
  CHECK(oracle::affine_dimension(pt) == 0);
  CHECK(oracle::affine_dimension(plane_system(2)) == 2);
  pt.equations.push_back(LinearRow{{0, 1}, 0});
  CHECK(oracle::affine_dimension(pt) == -1);
  CHECK(oracle::affine_dimension(plane_system(0)) == 0);
}

TEST_CASE("relative_interior finds implicit equalities") {
  HPolyhedron H = plane_system(2);
  add_ineq(H, {1, 0}, 0);
  add_ineq(H, {-1, 0}, 0);
  add_ineq(H, {0, 1}, 0);
  const auto face = oracle::relative_interior(H);
  REQUIRE(face);
  CHECK(face->active == std::vector<std::size_t>{0, 1});
  CHECK(face->affine_dim == 1);
  CHECK(face->witness[0] == 0);
  CHECK(face->witness[1] > 0);
}

TEST_CASE("enumerate_faces") {
  const auto pent = oracle::enumerate_faces(h_representation(pentagon()));
  CHECK(pent.size() == 11);
  std::vector<std::size_t> f(3, 0);
  for (const auto& face : pent) ++f[face.affine_dim];
  CHECK(f == std::vector<std::size_t>{5, 5, 1});

  CHECK(oracle::enumerate_faces(unit_square()).size() == 9);

  HPolyhedron half = plane_system(2);
  add_ineq(half, {1, 0}, 0);
  CHECK(oracle::enumerate_faces(half).size() == 2);

  HPolyhedron empty = plane_system(1);
  add_ineq(empty, {1}, 1);
  add_ineq(empty, {-1}, 0);
  CHECK(oracle::enumerate_faces(empty).empty());

  HPolyhedron wide = plane_system(1);
  for (int i = 0; i < 25; ++i) add_ineq(wide, {1}, -i);
  CHECK_THROWS_AS(oracle::enumerate_faces(wide), SizeLimitError);
}

TEST_CASE("facets") {
  CHECK(oracle::facets(h_representation(pentagon())).size() == 5);
  CHECK(oracle::facets(unit_square()).size() == 4);
  CHECK(oracle::facets(h_representation(redundant_square())).size() == 4);
}

TEST_CASE("enumerate_vertices_and_rays") {
  const auto pent = oracle::enumerate_vertices_and_rays(h_representation(pentagon()));
  CHECK(pent.pointed);
  CHECK(pent.vertices.size() == 5);
  CHECK(pent.rays.empty());

  const MarkedPoset chain = make_marked_poset(Poset::build({"p", "q"}, {{"p", "q"}}), Marking{});
  const auto cone = oracle::enumerate_vertices_and_rays(h_representation(chain));
  CHECK_FALSE(cone.pointed);
  CHECK(cone.vertices.empty());
  CHECK(cone.lineality == std::vector<RationalPoint>{point({1, 1})});
  CHECK(cone.rays == std::vector<RationalPoint>{point({-1, 1})});
  CHECK(cone.section_points == std::vector<RationalPoint>{point({0, 0})});

  const auto rec = oracle::enumerate_vertices_and_rays(h_representation(recession_cone(pentagon())));
  CHECK(rec.vertices == std::vector<RationalPoint>{point({0, 0, 0, 0, 0, 0})});
}

TEST_CASE("minimal_face_dimension") {
  const HPolyhedron H = h_representation(pentagon());
  CHECK(oracle::minimal_face_dimension(H, point({0, q(1, 2), 2, 4, 1, 3})) == 2);
  CHECK(oracle::minimal_face_dimension(H, point({0, 0, 2, 4, 1, 3})) == 1);
  CHECK(oracle::minimal_face_dimension(H, point({0, 0, 1, 4, 1, 3})) == 0);
  CHECK_THROWS_AS(oracle::minimal_face_dimension(H, point({0, 4, 4, 4, 1, 3})), NotInPolyhedronError);
}

TEST_CASE("convex hull helpers") {
  const std::vector<RationalPoint> square{point({0, 0}), point({2, 0}), point({0, 2}), point({2, 2}),
                                         point({1, 1}), point({1, 0}), point({2, 2})};
  CHECK(oracle::extreme_points(square) == sorted({point({0, 0}), point({2, 0}), point({0, 2}), point({2, 2})}));
  CHECK(oracle::in_convex_hull(square, point({q(1, 2), q(3, 2)})));
  CHECK_FALSE(oracle::in_convex_hull(square, point({3, 0})));
  CHECK(oracle::extreme_points({point({5})}) == std::vector<RationalPoint>{point({5})});
}

TEST_CASE("rank and primitive_direction") {
  CHECK(oracle::rank({{1, 2, 3}, {2, 4, 6}, {0, 1, 0}}) == 2);
  CHECK(oracle::rank({}) == 0);
  CHECK(oracle::primitive_direction(point({q(1, 2), q(-3, 4)})) == point({2, -3}));
  CHECK(oracle::primitive_direction(point({0, 6, 9})) == point({0, 2, 3}));
}

TEST_CASE("face witnesses classify rows exactly as declared") {
  Rng rng(42);
  for (int trial = 0; trial < 20; ++trial) {
    const MarkedPoset M = random_marked_poset(rng, {1, 6, 40}, {40, 3, false});
    const HPolyhedron H = h_representation(M);
    for (const auto& face : oracle::enumerate_faces(H)) {
      CHECK(H.contains(face.witness));
      for (std::size_t i = 0; i < H.inequalities.size(); ++i) {
        const bool active = std::binary_search(face.active.begin(), face.active.end(), i);
        const Rational slack = H.inequalities[i].evaluate(face.witness.coords) - H.inequalities[i].rhs;
        CHECK(active == (slack == 0));
      }
    }
  }
}

TEST_CASE("oracle faces and vertices agree with the combinatorial side on random strict posets") {
  Rng rng(77);
  for (int trial = 0; trial < 30; ++trial) {
    const MarkedPoset M = random_marked_poset(rng, {1, 6, 40}, {50, 3, true});
    const HPolyhedron H = h_representation(M);
    CHECK(oracle::enumerate_faces(H).size() == enumerate_face_partitions(M).nodes.size());
    if (is_pointed(M)) CHECK(oracle::enumerate_vertices_and_rays(H).vertices == vertices(M));
  }
}
