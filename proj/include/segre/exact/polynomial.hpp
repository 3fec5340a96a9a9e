#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "segre/exact/matrix.hpp"
#include "segre/exact/scalar.hpp"

namespace segre::exact {

using Exponents = std::vector<std::uint16_t>;

// Graded lexicographic order with x0 > x1 > ...; sorts larger monomials first.
struct GrlexGreater {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

class Polynomial {
 public:
  using TermMap = std::map<Exponents, Scalar, GrlexGreater>;

  explicit Polynomial(std::size_t nvars = 0, Field f = Field::rationals());
  static Polynomial constant(std::size_t nvars, const Scalar& c);
  static Polynomial variable(std::size_t nvars, std::size_t i, Field f = Field::rationals());
  static Polynomial monomial(const Exponents& e, const Scalar& c);
  // Linear form sum_i coeffs[i] * x_i.
  static Polynomial linear(const Vector& coeffs, Field f = Field::rationals());

  std::size_t nvars() const noexcept { return nvars_; }
  const Field& field() const noexcept { return field_; }
  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  // -1 for the zero polynomial.
  int degree() const noexcept { return degree_; }
  bool is_homogeneous() const;
  Scalar coefficient(const Exponents& e) const;
  // Largest term in graded lexicographic order; the polynomial must be nonzero.
  const std::pair<const Exponents, Scalar>& leading_term() const;

  Polynomial in(const Field& f) const;
  // Adds c * x^e.
  void add_term(const Exponents& e, const Scalar& c);

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Scalar& c);
  Polynomial operator-() const;
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Scalar& c) { return a *= c; }
  friend Polynomial operator*(const Scalar& c, Polynomial a) { return a *= c; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial pow(unsigned e) const;
  bool operator==(const Polynomial& o) const;

  // Default names are x0, x1, ...
  std::string to_string(const std::vector<std::string>& names = {}) const;

 private:
  void check_compatible(const Polynomial& o) const;
  void refresh_degree();

  std::size_t nvars_;
  Field field_;
  TermMap terms_;
  int degree_ = -1;
};

Scalar evaluate(const Polynomial& p, const Vector& point);
Polynomial derivative(const Polynomial& p, std::size_t var);
std::vector<Polynomial> gradient(const Polynomial& p);
// Substitutes images[i] for x_i; all images share a variable count.
Polynomial compose(const Polynomial& p, const std::vector<Polynomial>& images);
// map is n_old x n_new; old x_i becomes sum_j map(i, j) * new_j, so that
// evaluate(substitute_linear(p, M), v) == evaluate(p, M v).
Polynomial substitute_linear(const Polynomial& p, const Matrix& map);

struct SquareRoot {
  Polynomial root;
  Scalar scale;  // root^2 == scale * p
};
// Square root up to a nonzero scalar factor; std::nullopt when none exists.
std::optional<SquareRoot> polynomial_square_root(const Polynomial& p);

}  // namespace segre::exact
