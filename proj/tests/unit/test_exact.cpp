#include <doctest.h>

#include "segre/exact/parse.hpp"
#include "segre/exact/polynomial.hpp"
#include "../support/rng.hpp"

using namespace segre;
using namespace segre::exact;

namespace {

const std::vector<std::string> kX6 = {"x0", "x1", "x2", "x3", "x4", "x5"};

Polynomial random_poly(test::Rng& rng, std::size_t n, int max_deg, int terms, Field f = Field::rationals()) {
  Polynomial p(n, f);
  for (int t = 0; t < terms; ++t) {
    Exponents e(n, 0);
    int budget = static_cast<int>(rng.uniform(0, max_deg));
    for (int k = 0; k < budget; ++k) ++e[static_cast<std::size_t>(rng.uniform(0, static_cast<long long>(n) - 1))];
    Scalar c = f.is_rational() ? Scalar(mpz_class(rng.uniform(-9, 9)), mpz_class(rng.uniform(1, 4)))
                               : f.from_int(rng.uniform(0, 1000));
    p.add_term(e, c);
  }
  return p;
}

Vector random_vec(test::Rng& rng, std::size_t n, Field f = Field::rationals()) {
  Vector v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(f.from_int(rng.uniform(-7, 7)));
  return v;
}

}  // namespace

TEST_CASE("scalar arithmetic keeps rationals reduced and residues in range") {
  Scalar a(mpz_class(6), mpz_class(-4));
  CHECK(a.to_string() == "-3/2");
  const Field f = Field::prime(11);
  Scalar r = Scalar::residue(-1, f);
  CHECK(r.residue_value() == 10);
  CHECK((r * r).is_one());
  CHECK((Scalar(mpq_class(1, 2)).in(f) * f.from_int(2)).is_one());
  CHECK_THROWS_AS(r + Scalar(1), ModulusMismatch);
  CHECK_THROWS_AS(r + Scalar::residue(1, Field::prime(13)), ModulusMismatch);
  CHECK_THROWS(Field::prime(5));
  CHECK_THROWS(Field::prime(21));
  CHECK_THROWS(Scalar(mpq_class(1, 11)).in(f));
}

TEST_CASE("parse examples") {
  auto p = parse_polynomial("x0^3 + x1^3", {"x0", "x1"});
  CHECK(p.terms().size() == 2);
  auto q = parse_polynomial("(x0+x1)^2 - x0^2 - 2*x0*x1", {"x0", "x1"});
  CHECK(q == parse_polynomial("x1^2", {"x0", "x1"}));
  CHECK_THROWS_AS(parse_polynomial("x0 + y0", {"x0", "x1"}), ParseError);
  CHECK_THROWS_AS(parse_polynomial("2x0", {"x0"}), ParseError);
  CHECK_THROWS_AS(parse_polynomial("x0 x0", {"x0"}), ParseError);
  CHECK_THROWS_AS(parse_polynomial("x0/2", {"x0"}), ParseError);
  CHECK_THROWS_AS(parse_polynomial("(x0", {"x0"}), ParseError);
  CHECK(parse_polynomial("-x0^2", {"x0"}) == parse_polynomial("-(x0^2)", {"x0"}));
  CHECK(parse_polynomial("1/2*x0 - -x0", {"x0"}).to_string() == "3/2*x0");
  try {
    parse_polynomial("x0 + q", {"x0"});
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 5);
  }
}

TEST_CASE("printing follows graded lexicographic order") {
  auto p = parse_polynomial("x2 + x0*x1 - x1^2 + 3 + x0^2", {"x0", "x1", "x2"});
  CHECK(p.to_string() == "x0^2 + x0*x1 - x1^2 + x2 + 3");
}

TEST_CASE("evaluate examples") {
  auto cube = parse_polynomial("x0^3+x1^3+x2^3+x3^3+x4^3+x5^3", kX6);
  auto lin = parse_polynomial("x0+x1+x2+x3+x4+x5", kX6);
  Vector v = {1, 1, 1, -1, -1, -1};
  CHECK(evaluate(cube, v).is_zero());
  CHECK(evaluate(lin, v).is_zero());
  auto igusa = parse_polynomial("(x0^2+x1^2+x2^2+x3^2+x4^2+x5^2)^2 - 4*(x0^4+x1^4+x2^4+x3^4+x4^4+x5^4)", kX6);
  CHECK(evaluate(igusa, v) == Scalar(12));
  CHECK_THROWS_AS(evaluate(cube, Vector{1, 2}), DimensionMismatch);
  CHECK_THROWS_AS(evaluate(cube.in(Field::prime(7)), v), ModulusMismatch);
}

TEST_CASE("gradient and Euler identity") {
  auto cube = parse_polynomial("x0^3+x1^3+x2^3+x3^3+x4^3+x5^3", kX6);
  auto g = gradient(cube);
  for (std::size_t i = 0; i < 6; ++i) CHECK(g[i] == Polynomial::variable(6, i).pow(2) * Scalar(3));
  for (const auto& d : gradient(Polynomial::constant(3, Scalar(5)))) CHECK(d.is_zero());
  auto igusa = parse_polynomial("(x0^2+x1^2+x2^2+x3^2+x4^2+x5^2)^2 - 4*(x0^4+x1^4+x2^4+x3^4+x4^4+x5^4)", kX6);
  test::Rng rng(7);
  for (int trial = 0; trial < 5; ++trial) {
    Vector v = random_vec(rng, 6);
    v[2] = Scalar(mpq_class(rng.uniform(-30, 30), 7));
    Scalar euler = 0;
    auto gi = gradient(igusa);
    for (std::size_t i = 0; i < 6; ++i) euler += v[i] * evaluate(gi[i], v);
    CHECK(euler == Scalar(4) * evaluate(igusa, v));
  }
}

TEST_CASE("substitute_linear examples") {
  auto lin = parse_polynomial("x0+x1+x2+x3+x4+x5", kX6);
  auto cube = parse_polynomial("x0^3+x1^3+x2^3+x3^3+x4^3+x5^3", kX6);
  CHECK(substitute_linear(cube, Matrix::identity(6)) == cube);
  Matrix m(6, 5);
  for (std::size_t i = 0; i < 5; ++i) {
    m.at(i, i) = 1;
    m.at(5, i) = -1;
  }
  CHECK(substitute_linear(lin, m).is_zero());
  auto restricted = substitute_linear(cube, m);
  CHECK(restricted == parse_polynomial("x0^3+x1^3+x2^3+x3^3+x4^3-(x0+x1+x2+x3+x4)^3", {"x0", "x1", "x2", "x3", "x4"}));
  CHECK(restricted.nvars() == 5);
  CHECK_THROWS_AS(substitute_linear(cube, Matrix(5, 5)), DimensionMismatch);
}

TEST_CASE("ring axioms on random inputs") {
  test::Rng rng(11);
  for (const Field f : {Field::rationals(), Field::prime(101)}) {
    for (int trial = 0; trial < 20; ++trial) {
      auto a = random_poly(rng, 3, 3, 4, f), b = random_poly(rng, 3, 3, 4, f), c = random_poly(rng, 3, 3, 4, f);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a + b == b + a);
      CHECK((a - a).is_zero());
      Vector v = random_vec(rng, 3, f);
      CHECK(evaluate(a * b, v) == evaluate(a, v) * evaluate(b, v));
    }
  }
}

TEST_CASE("homogeneous scaling and substitution commute with evaluation") {
  test::Rng rng(13);
  auto igusa = parse_polynomial("(x0^2+x1^2+x2^2+x3^2+x4^2+x5^2)^2 - 4*(x0^4+x1^4+x2^4+x3^4+x4^4+x5^4)", kX6);
  for (int trial = 0; trial < 10; ++trial) {
    Vector v = random_vec(rng, 6);
    Scalar t(mpq_class(rng.uniform(-9, 9), rng.uniform(1, 5)));
    Vector tv;
    for (auto& x : v) tv.push_back(t * x);
    CHECK(evaluate(igusa, tv) == t.pow(4) * evaluate(igusa, v));
    Matrix m(6, 3);
    for (std::size_t i = 0; i < 6; ++i)
      for (std::size_t j = 0; j < 3; ++j) m.at(i, j) = rng.uniform(-3, 3);
    Vector w = random_vec(rng, 3);
    CHECK(evaluate(substitute_linear(igusa, m), w) == evaluate(igusa, m * w));
  }
}

TEST_CASE("square root examples") {
  auto sq = polynomial_square_root(parse_polynomial("(x+y)^2", {"x", "y"}));
  REQUIRE(sq);
  CHECK(sq->root * sq->root == parse_polynomial("(x+y)^2", {"x", "y"}) * sq->scale);
  CHECK((sq->root == parse_polynomial("x+y", {"x", "y"}) || sq->root == parse_polynomial("-x-y", {"x", "y"})));
  CHECK_FALSE(polynomial_square_root(parse_polynomial("x^2+y^2", {"x", "y"})));
  CHECK_FALSE(polynomial_square_root(parse_polynomial("x*y", {"x", "y"})));
}

TEST_CASE("square root recovers 100 random quadrics up to sign") {
  test::Rng rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    Polynomial q(4);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = i; j < 4; ++j) {
        Exponents e(4, 0);
        ++e[i];
        ++e[j];
        q.add_term(e, Scalar(rng.uniform(-6, 6)));
      }
    if (q.is_zero()) continue;
    auto r = polynomial_square_root(q * q);
    REQUIRE(r);
    CHECK(r->scale == Scalar(1));
    CHECK((r->root == q || r->root == -q));
  }
}

TEST_CASE("kernel and rank") {
  CHECK(kernel(Matrix::identity(4)).rows() == 0);
  auto k = kernel(Matrix(2, 3));
  CHECK(k.rows() == 3);
  CHECK(k == Matrix::identity(3));
  // Segre plane {x0+x1 = x2+x3 = x4+x5 = 0}.
  auto planes = Matrix::from_ints({{1, 1, 0, 0, 0, 0}, {0, 0, 1, 1, 0, 0}, {0, 0, 0, 0, 1, 1}});
  auto kp = kernel(planes);
  CHECK(kp.rows() == 3);
  CHECK(rank(planes) + kp.rows() == 6);
  CHECK((planes * kp.transpose()) == Matrix(3, 3));
  test::Rng rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    Matrix m(3, 5);
    for (std::size_t r = 0; r < 3; ++r)
      for (std::size_t c = 0; c < 5; ++c) m.at(r, c) = rng.uniform(-2, 2);
    m.at(2, 0) = m.at(0, 0) + m.at(1, 0);
    auto ker = kernel(m);
    CHECK(rank(m) + ker.rows() == 5);
    CHECK(rref(ker) == ker);
    if (ker.rows()) CHECK(m * ker.transpose() == Matrix(3, ker.rows()));
  }
}

TEST_CASE("determinant and inverse") {
  auto m = Matrix::from_ints({{2, 1}, {7, 4}});
  CHECK(determinant(m) == Scalar(1));
  auto inv = inverse(m);
  REQUIRE(inv);
  CHECK(*inv * m == Matrix::identity(2));
  CHECK_FALSE(inverse(Matrix::from_ints({{1, 2}, {2, 4}})));
}
