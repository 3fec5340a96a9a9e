#include <doctest.h>

#include <chrono>

#include "segre/exact/parse.hpp"
#include "segre/projective/projective.hpp"
#include "../support/rng.hpp"

using namespace segre;
using namespace segre::exact;
using namespace segre::projective;

namespace {

const std::vector<std::string> kX6 = {"x0", "x1", "x2", "x3", "x4", "x5"};
const std::vector<std::string> kX5 = {"x0", "x1", "x2", "x3", "x4"};

Polynomial segre5() { return parse_polynomial("x0^3+x1^3+x2^3+x3^3+x4^3-(x0+x1+x2+x3+x4)^3", kX5); }
Polynomial igusa6() {
  return parse_polynomial("(x0^2+x1^2+x2^2+x3^2+x4^2+x5^2)^2 - 4*(x0^4+x1^4+x2^4+x3^4+x4^4+x5^4)", kX6);
}

}  // namespace

TEST_CASE("projective points are canonical") {
  auto a = ProjectivePoint::from_ints({0, 2, -4});
  auto b = ProjectivePoint::from_ints({0, -1, 2});
  CHECK(a == b);
  CHECK(a.to_string() == "(0:1:-2)");
  auto c = ProjectivePoint(Vector{Scalar(mpq_class(1, 2)), Scalar(mpq_class(1, 3))});
  CHECK(c.to_string() == "(3:2)");
  CHECK_THROWS(ProjectivePoint::from_ints({0, 0}));
  CHECK(a.in(Field::prime(7)).to_string() == "(0:1:5)");
}

TEST_CASE("linear subspace membership and annihilator") {
  LinearSubspace plane(Matrix::from_ints({{1, -1, 0, 0, 0, 0}, {0, 0, 1, -1, 0, 0}, {0, 0, 0, 0, 1, -1}}));
  CHECK(plane.projective_dim() == 2);
  CHECK(plane.contains(ProjectivePoint::from_ints({1, -1, 1, -1, 0, 0})));
  CHECK_FALSE(plane.contains(ProjectivePoint::from_ints({1, 1, 0, 0, 0, 0})));
  auto ann = plane.annihilator();
  CHECK(ann.vector_dim() == 3);
  CHECK(ann.contains(ProjectivePoint::from_ints({1, 1, 2, 2, 3, 3})));
}

TEST_CASE("Segre cubic singular locus over F_11") {
  const Field f = Field::prime(11);
  auto pts = singular_locus_scan(Hypersurface(segre5()).in(f), f);
  CHECK(pts.size() == 10);
  for (const auto& p : pts) {
    // Lifted to six coordinates, every node has entries +-1 with three of each sign.
    Vector v = lift_traceless(p.coords());
    int plus = 0, minus = 0;
    for (const auto& c : v) {
      if (c == f.one()) ++plus;
      else if (c == -f.one()) ++minus;
    }
    CHECK(plus + minus == 6);
  }
}

TEST_CASE("scan of the traceless presentation agrees with the restricted one") {
  const Field f = Field::prime(13);
  auto cube = parse_polynomial("x0^3+x1^3+x2^3+x3^3+x4^3+x5^3", kX6);
  auto pts = singular_locus_scan(Hypersurface(cube, true).in(f), f);
  CHECK(pts.size() == 10);
  for (const auto& p : pts) CHECK(is_traceless(p.coords()));
}

TEST_CASE("Igusa quartic singular locus over F_11 has 150 points") {
  const Field f = Field::prime(11);
  auto pts = singular_locus_scan(Hypersurface(igusa6(), true).in(f), f);
  CHECK(pts.size() == 150);
}

TEST_CASE("smooth quadric has no singular points") {
  const Field f = Field::prime(7);
  auto q = parse_polynomial("x0^2+x1^2+x2^2+x3^2+x4^2", kX5);
  CHECK(singular_locus_scan(Hypersurface(q).in(f), f).empty());
  CHECK_THROWS_AS(singular_locus_scan(Hypersurface(q), f), ModulusMismatch);
}

TEST_CASE("scan matches brute-force enumeration on a small example") {
  const Field f = Field::prime(7);
  auto q = parse_polynomial("x0^2*x1 + x2^3 - x0*x1*x2 + 3*x1^3", {"x0", "x1", "x2"}).in(f);
  Hypersurface hs(q);
  std::vector<ProjectivePoint> brute;
  for (int a = 0; a < 7; ++a)
    for (int b = 0; b < 7; ++b)
      for (int c = 0; c < 7; ++c) {
        if (!a && !b && !c) continue;
        ProjectivePoint pt = ProjectivePoint::from_ints({a, b, c}, f);
        if (pt.coords() != ProjectivePoint::from_ints({a, b, c}, f).coords()) continue;
        if (is_singular_at(hs, pt) && std::find(brute.begin(), brute.end(), pt) == brute.end()) brute.push_back(pt);
      }
  std::sort(brute.begin(), brute.end());
  CHECK(singular_locus_scan(hs, f) == brute);
}

TEST_CASE("is_singular_at examples") {
  Hypersurface s(segre5());
  CHECK(is_singular_at(s, ProjectivePoint::from_ints({1, 1, 1, -1, -1})));
  // Smooth point on the plane x0+x1 = x2+x3 = x4+x5 = 0: (1,-1,2,-2,3), last = -3.
  CHECK(on_hypersurface(s, ProjectivePoint::from_ints({1, -1, 2, -2, 3})));
  CHECK_FALSE(is_singular_at(s, ProjectivePoint::from_ints({1, -1, 2, -2, 3})));
  CHECK_FALSE(is_singular_at(s, ProjectivePoint::from_ints({1, 0, 0, 0, 0})));
}

TEST_CASE("tangent hyperplane examples") {
  auto cube = parse_polynomial("x0^3+x1^3+x2^3+x3^3+x4^3+x5^3", kX6);
  Hypersurface s(cube, true);
  auto x = ProjectivePoint::from_ints({1, -1, 2, -2, 3, -3});
  auto y = tangent_hyperplane(s, x);
  // 6 x_i^2 - sum x_j^2 with sum = 28.
  CHECK(y == ProjectivePoint::from_ints({6 - 28, 6 - 28, 24 - 28, 24 - 28, 54 - 28, 54 - 28}));
  Scalar pairing = 0;
  for (std::size_t i = 0; i < 6; ++i) pairing += x.coords()[i] * y.coords()[i];
  CHECK(pairing.is_zero());
  Hypersurface quad(parse_polynomial("x0^2+x1^2+x2^2", {"x0", "x1", "x2"}));
  CHECK_THROWS(tangent_hyperplane(quad, ProjectivePoint::from_ints({1, 0, 0})));
  Hypersurface quad2(parse_polynomial("x0^2+x1^2-x2^2", {"x0", "x1", "x2"}));
  CHECK(tangent_hyperplane(quad2, ProjectivePoint::from_ints({1, 0, 1})) == ProjectivePoint::from_ints({1, 0, -1}));
  CHECK_THROWS(tangent_hyperplane(s, ProjectivePoint::from_ints({1, 1, 1, -1, -1, -1})));
}

TEST_CASE("Hessian corank examples") {
  Hypersurface s(segre5());
  CHECK(hessian_corank_at(s, ProjectivePoint::from_ints({1, 1, 1, -1, -1})) == 0);
  Hypersurface cone(parse_polynomial("x0^2+x1^2+x2^2", {"x0", "x1", "x2", "x3"}));
  CHECK(hessian_corank_at(cone, ProjectivePoint::from_ints({0, 0, 0, 1})) == 0);
  Hypersurface pair(parse_polynomial("x0^2+x1^2", {"x0", "x1", "x2", "x3"}));
  CHECK(hessian_corank_at(pair, ProjectivePoint::from_ints({0, 0, 1, 1})) == 1);
  // Cubic surface with an A2 point at (0:0:0:1): x3*(x0^2 + x1^2) + x2^3 has quadratic part of rank 2.
  Hypersurface a2(parse_polynomial("x3*(x0^2+x1^2) + x2^3", {"x0", "x1", "x2", "x3"}));
  CHECK(hessian_corank_at(a2, ProjectivePoint::from_ints({0, 0, 0, 1})) == 1);
  CHECK_THROWS(hessian_corank_at(s, ProjectivePoint::from_ints({1, -1, 2, -2, 3})));
}

TEST_CASE("contains_subspace examples") {
  auto cube = parse_polynomial("x0^3+x1^3+x2^3+x3^3+x4^3+x5^3", kX6);
  Hypersurface s(cube, true);
  CHECK(contains_subspace(s, LinearSubspace(Matrix::from_ints({{1, -1, 0, 0, 0, 0}, {0, 0, 1, -1, 0, 0}, {0, 0, 0, 0, 1, -1}}))));
  CHECK_FALSE(contains_subspace(s, LinearSubspace(Matrix::from_ints({{1, 2, 0, 0, -3, 0}, {0, 1, 1, 1, 0, -3}, {1, 0, 1, 0, 0, -2}}))));
  CHECK(contains_subspace(s, LinearSubspace(Matrix::from_ints({{1, -1, 2, -2, 3, -3}}))));
}

TEST_CASE("node projection parametrization") {
  Hypersurface s(segre5());
  auto node = ProjectivePoint::from_ints({1, 1, 1, -1, -1});
  auto x = node_projection_parametrization(s, node);
  REQUIRE(x.size() == 5);
  CHECK(x.front().nvars() == 4);
  for (const auto& xi : x) CHECK(xi.degree() == 3);
  CHECK(compose(s.form(), x).is_zero());
  // Another nodal cubic: the Cayley cubic surface.
  Hypersurface cayley(parse_polynomial("x1*x2*x3 + x0*x2*x3 + x0*x1*x3 + x0*x1*x2", {"x0", "x1", "x2", "x3"}));
  auto y = node_projection_parametrization(cayley, ProjectivePoint::from_ints({1, 0, 0, 0}));
  CHECK(compose(cayley.form(), y).is_zero());
  // Sampled over F_101.
  const Field f = Field::prime(101);
  auto xf = node_projection_parametrization(s.in(f), node.in(f));
  test::Rng rng(5);
  for (int t = 0; t < 20; ++t) {
    Vector v;
    for (int i = 0; i < 4; ++i) v.push_back(f.from_int(rng.uniform(0, 100)));
    Vector pt;
    for (const auto& xi : xf) pt.push_back(evaluate(xi, v));
    CHECK(evaluate(s.form().in(f), pt).is_zero());
  }
  CHECK_THROWS(node_projection_parametrization(s, ProjectivePoint::from_ints({1, -1, 2, -2, 3})));
}

TEST_CASE("scan output is stable under coordinate permutations preserving the form") {
  const Field f = Field::prime(11);
  auto pts = singular_locus_scan(Hypersurface(igusa6(), true).in(f), f);
  std::vector<std::vector<int>> perms = {{1, 0, 2, 3, 4, 5}, {1, 2, 3, 4, 5, 0}, {5, 3, 1, 0, 2, 4}};
  for (const auto& perm : perms) {
    std::vector<ProjectivePoint> moved;
    for (const auto& p : pts) {
      Vector v(6);
      for (std::size_t i = 0; i < 6; ++i) v[static_cast<std::size_t>(perm[i])] = p.coords()[i];
      moved.emplace_back(v);
    }
    std::sort(moved.begin(), moved.end());
    CHECK(moved == pts);
  }
}

TEST_CASE("Segre scan over F_101 finishes quickly") {
  const Field f = Field::prime(101);
  auto start = std::chrono::steady_clock::now();
  auto pts = singular_locus_scan(Hypersurface(segre5()).in(f), f);
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  MESSAGE("F_101 Segre scan: " << ms << " ms");
  CHECK(pts.size() == 10);
}
