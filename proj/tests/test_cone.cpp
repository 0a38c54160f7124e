#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "loctrop/cone.hpp"
#include "loctrop/fan.hpp"

using namespace loctrop;

namespace {

RationalCone cone2(std::vector<std::vector<int>> eqs, std::vector<std::vector<int>> ineqs,
                   int ambient = 2) {
  RationalCone c;
  c.ambient = ambient;
  for (auto& r : eqs) c.eq.push_back(int_row(r));
  for (auto& r : ineqs) c.ineq.push_back(int_row(r));
  return c;
}

std::vector<Rat> pt(std::vector<int> v) { return std::vector<Rat>(v.begin(), v.end()); }

}  // namespace

TEST_CASE("canonicalize promotes implied equalities") {
  // {u1>=0, u2>=0, u1-u2>=0, u2-u1>=0} is the diagonal ray.
  RationalCone c = canonicalize(cone2({}, {{1, 0}, {0, 1}, {1, -1}, {-1, 1}}));
  REQUIRE(c.eq.size() == 1);
  CHECK(c.eq[0] == int_row({1, -1}));
  REQUIRE(c.ineq.size() == 1);
  CHECK(c.promoted_equalities);
  CHECK(cone_dim(c) == 1);
}

TEST_CASE("canonicalize keeps the full orthant irredundant") {
  RationalCone c = canonicalize(cone2({}, {{1, 0}, {0, 1}, {1, 1}, {2, 3}}));
  CHECK(c.eq.empty());
  CHECK(c.ineq == std::vector<std::vector<Int>>{int_row({0, 1}), int_row({1, 0})});
  CHECK_FALSE(c.promoted_equalities);
}

TEST_CASE("antisymmetric pair becomes an equality") {
  RationalCone c = canonicalize(cone2({}, {{1, 0}, {-1, 0}}));
  REQUIRE(c.eq.size() == 1);
  CHECK(c.eq[0] == int_row({1, 0}));
  CHECK(c.ineq.empty());
  CHECK(cone_dim(c) == 1);
}

TEST_CASE("canonicalize is idempotent") {
  std::mt19937_64 rng(3);
  for (int it = 0; it < 40; ++it) {
    std::vector<std::vector<int>> ineqs;
    int m = 2 + int(rng() % 4);
    for (int i = 0; i < m; ++i)
      ineqs.push_back({int(rng() % 7) - 3, int(rng() % 7) - 3, int(rng() % 7) - 3});
    RationalCone a = canonicalize(cone2({}, ineqs, 3));
    RationalCone b = canonicalize(a);
    CHECK(a.eq == b.eq);
    CHECK(a.ineq == b.ineq);
  }
}

TEST_CASE("intersect is commutative and matches examples") {
  RationalCone orthant = cone2({}, {{1, 0}, {0, 1}});
  RationalCone diag_space = cone2({{1, -1}}, {});
  RationalCone a = intersect(orthant, diag_space);
  CHECK(cone_dim(a) == 1);
  CHECK(cone_contains(a, pt({2, 2})));
  CHECK_FALSE(cone_contains(a, pt({1, 2})));
  CHECK(cone_equal(a, intersect(diag_space, orthant)));

  RationalCone x0 = cone2({{1, 0}}, {});
  RationalCone y0 = cone2({{0, 1}}, {});
  CHECK(cone_dim(intersect(x0, y0)) == 0);

  // ray(1,1) vs ray(1,2): only the origin in common.
  RationalCone r1 = cone2({{1, -1}}, {{1, 0}});
  RationalCone r2 = cone2({{2, -1}}, {{1, 0}});
  CHECK(cone_dim(intersect(r1, r2)) == 0);
}

TEST_CASE("intersect is associative and idempotent up to canonical form") {
  RationalCone a = cone2({}, {{1, 0}, {0, 1}});
  RationalCone b = cone2({}, {{1, -1}});
  RationalCone c = cone2({}, {{-1, 2}});
  CHECK(cone_equal(intersect(intersect(a, b), c), intersect(a, intersect(b, c))));
  CHECK(cone_equal(intersect(a, a), canonicalize(a)));
}

TEST_CASE("relative interior points satisfy everything strictly") {
  RationalCone diag = intersect(cone2({}, {{1, 0}, {0, 1}}), cone2({{1, -1}}, {}));
  std::vector<Rat> p = relative_interior_point(diag);
  CHECK(p[0] == p[1]);
  CHECK(p[0] > 0);

  std::vector<Rat> q = relative_interior_point(cone2({}, {{1, 0}, {0, 1}}));
  CHECK(q[0] > 0);
  CHECK(q[1] > 0);

  std::vector<Rat> r = relative_interior_point(cone2({{1, 0}}, {{0, 1}}));
  CHECK(r[0] == 0);
  CHECK(r[1] > 0);

  RationalCone origin = cone2({{1, 0}, {0, 1}}, {});
  CHECK_THROWS_AS(relative_interior_point(origin), OriginOnlyError);
}

TEST_CASE("relative interior of random canonical cones is strict") {
  std::mt19937_64 rng(17);
  for (int it = 0; it < 60; ++it) {
    std::vector<std::vector<int>> ineqs = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    int m = int(rng() % 3);
    for (int i = 0; i < m; ++i)
      ineqs.push_back({int(rng() % 9) - 4, int(rng() % 9) - 4, int(rng() % 9) - 4});
    RationalCone c = canonicalize(cone2({}, ineqs, 3));
    if (cone_dim(c) == 0) continue;
    std::vector<Rat> p = relative_interior_point(c);
    for (const auto& e : c.eq) CHECK(lin::dot_rat(e, p) == 0);
    for (const auto& b : c.ineq) CHECK(lin::dot_rat(b, p) > 0);
  }
}

TEST_CASE("canonical forms agree iff the cones agree pointwise on samples") {
  // Same diagonal ray, two descriptions.
  RationalCone a = canonicalize(cone2({}, {{1, 0}, {0, 1}, {1, -1}, {-1, 1}}));
  RationalCone b = canonicalize(cone2({{2, -2}}, {{3, 3}}));
  CHECK(cone_equal(a, b));
}

TEST_CASE("faces and rays of the orthant") {
  RationalCone orthant = canonicalize(cone2({}, {{1, 0}, {0, 1}}));
  auto faces = all_faces(orthant);
  CHECK(faces.size() == 4);  // orthant, two axes, origin
  auto rays = cone_rays(orthant);
  REQUIRE(rays.size() == 2);
  CHECK(rays[0] == int_row({0, 1}));
  CHECK(rays[1] == int_row({1, 0}));
}

TEST_CASE("validate_fan accepts the paper fan and rejects a non-fan") {
  RationalCone diag = intersect(cone2({}, {{1, 0}, {0, 1}}), cone2({{1, -1}}, {}));
  RationalCone origin = cone2({{1, 0}, {0, 1}}, {});
  FanValidation good = validate_fan({diag, origin}, 2);
  CHECK(good.ok);
  CHECK(good.fan.cones.size() == 2);

  RationalCone orthant = cone2({}, {{1, 0}, {0, 1}});
  FanValidation bad = validate_fan({orthant, diag}, 2);
  CHECK_FALSE(bad.ok);
  REQUIRE(bad.offending.has_value());

  FanValidation empty = validate_fan({}, 2);
  CHECK(empty.ok);
  CHECK(empty.fan.cones.empty());
}

TEST_CASE("fan of orthant subdivision along the diagonal is valid") {
  RationalCone lower = cone2({}, {{0, 1}, {1, -1}});   // 0 <= u2 <= u1
  RationalCone upper = cone2({}, {{1, 0}, {-1, 1}});   // 0 <= u1 <= u2
  FanValidation v = validate_fan({lower, upper}, 2);
  CHECK(v.ok);
  // orthant split: 2 maximal cones, diagonal, 2 axes, origin
  CHECK(v.fan.cones.size() == 6);
}
