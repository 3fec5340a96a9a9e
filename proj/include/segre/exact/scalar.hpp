#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "segre/exact/error.hpp"

namespace segre::exact {

class Scalar;

// Either the rationals (modulus 0) or a prime field F_p with 7 <= p < 2^31.
class Field {
 public:
  constexpr Field() = default;
  static Field rationals() noexcept { return Field(); }
  static Field prime(std::uint64_t p);

  bool is_rational() const noexcept { return p_ == 0; }
  std::uint64_t modulus() const noexcept { return p_; }

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(long long n) const;
  Scalar from_rational(const mpq_class& q) const;

  std::string name() const;
  bool operator==(const Field&) const = default;

 private:
  friend class Scalar;
  explicit constexpr Field(std::uint64_t p) : p_(p) {}
  std::uint64_t p_ = 0;
};

bool is_prime(std::uint64_t n) noexcept;

class Scalar {
 public:
  Scalar() = default;
  Scalar(int n) : q_(n) {}
  Scalar(long n) : q_(n) {}
  Scalar(long long n);
  explicit Scalar(mpq_class q);
  Scalar(const mpz_class& num, const mpz_class& den);

  // Residue of n modulo the field's prime; the field must be a prime field.
  static Scalar residue(long long n, const Field& f);

  Field field() const;
  bool is_rational() const noexcept { return p_ == 0; }
  std::uint64_t modulus() const noexcept { return p_; }
  bool is_zero() const noexcept;
  bool is_one() const noexcept;

  const mpq_class& rational() const;
  std::uint64_t residue_value() const;

  // Image in the given field; a rational maps to F_p when p does not divide its denominator.
  Scalar in(const Field& f) const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  Scalar operator-() const;
  Scalar inverse() const;
  Scalar pow(long long e) const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  // Equality across domains is false rather than an error, so scalars can key containers.
  bool operator==(const Scalar& o) const;
  // Total order: residues before rationals, then by value.
  bool operator<(const Scalar& o) const;

  std::string to_string() const;

 private:
  void check_same(const Scalar& o) const;

  mpq_class q_;
  std::uint64_t v_ = 0;
  std::uint64_t p_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace segre::exact
