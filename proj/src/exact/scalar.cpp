#include "segre/exact/scalar.hpp"

#include <ostream>

namespace segre::exact {

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

Field Field::prime(std::uint64_t p) {
  if (p < 7 || p >= (1ull << 31) || !is_prime(p))
    throw Error("modulus must be a prime with 7 <= p < 2^31, got " + std::to_string(p));
  return Field(p);
}

Scalar Field::zero() const { return from_int(0); }
Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(long long n) const {
  if (is_rational()) return Scalar(n);
  return Scalar::residue(n, *this);
}

Scalar Field::from_rational(const mpq_class& q) const { return Scalar(q).in(*this); }

std::string Field::name() const { return is_rational() ? "Q" : "F_" + std::to_string(p_); }

Scalar::Scalar(long long n) {
  mpz_class z;
  mpz_set_si(z.get_mpz_t(), static_cast<long>(n));
  q_ = mpq_class(z);
}

Scalar::Scalar(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

Scalar::Scalar(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw Error("zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Scalar Scalar::residue(long long n, const Field& f) {
  if (f.is_rational()) throw Error("residue requested in the rational field");
  Scalar s;
  const auto p = static_cast<long long>(f.modulus());
  long long r = n % p;
  if (r < 0) r += p;
  s.v_ = static_cast<std::uint64_t>(r);
  s.p_ = f.modulus();
  return s;
}


Field Scalar::field() const { return Field(p_); }

bool Scalar::is_zero() const noexcept { return p_ == 0 ? sgn(q_) == 0 : v_ == 0; }
bool Scalar::is_one() const noexcept { return p_ == 0 ? q_ == 1 : v_ == 1; }

const mpq_class& Scalar::rational() const {
  if (p_ != 0) throw ModulusMismatch("rational value requested from a residue");
  return q_;
}

std::uint64_t Scalar::residue_value() const {
  if (p_ == 0) throw ModulusMismatch("residue value requested from a rational");
  return v_;
}

static std::uint64_t mod_of(const mpz_class& z, std::uint64_t p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), p);
  return r.get_ui();
}

static std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

Scalar Scalar::in(const Field& f) const {
  if (f.modulus() == p_) return *this;
  if (p_ != 0) throw ModulusMismatch("cannot map a residue mod " + std::to_string(p_) + " into " + f.name());
  const std::uint64_t p = f.modulus();
  std::uint64_t den = mod_of(q_.get_den(), p);
  if (den == 0) throw Error("prime " + std::to_string(p) + " divides the denominator of " + to_string());
  Scalar s;
  s.p_ = p;
  s.v_ = mod_of(q_.get_num(), p) * pow_mod(den, p - 2, p) % p;
  return s;
}

void Scalar::check_same(const Scalar& o) const {
  if (p_ != o.p_)
    throw ModulusMismatch("arithmetic mixes " + (p_ ? "F_" + std::to_string(p_) : std::string("Q")) + " and " +
                          (o.p_ ? "F_" + std::to_string(o.p_) : std::string("Q")));
}

Scalar& Scalar::operator+=(const Scalar& o) {
  check_same(o);
  if (p_ == 0) q_ += o.q_;
  else v_ = (v_ + o.v_) % p_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  check_same(o);
  if (p_ == 0) q_ -= o.q_;
  else v_ = (v_ + p_ - o.v_) % p_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  check_same(o);
  if (p_ == 0) q_ *= o.q_;
  else v_ = v_ * o.v_ % p_;
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

Scalar Scalar::operator-() const {
  Scalar s = *this;
  if (p_ == 0) s.q_ = -q_;
  else s.v_ = (p_ - v_) % p_;
  return s;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error("division by zero");
  Scalar s = *this;
  if (p_ == 0) s.q_ = 1 / q_;
  else s.v_ = pow_mod(v_, p_ - 2, p_);
  return s;
}

Scalar Scalar::pow(long long e) const {
  if (e < 0) return inverse().pow(-e);
  Scalar r = field().one();
  Scalar b = *this;
  while (e) {
    if (e & 1) r *= b;
    e >>= 1;
    if (e) b *= b;
  }
  return r;
}

bool Scalar::operator==(const Scalar& o) const {
  if (p_ != o.p_) return false;
  return p_ == 0 ? q_ == o.q_ : v_ == o.v_;
}

bool Scalar::operator<(const Scalar& o) const {
  if (p_ != o.p_) return p_ > o.p_;
  return p_ == 0 ? q_ < o.q_ : v_ < o.v_;
}

std::string Scalar::to_string() const { return p_ == 0 ? q_.get_str() : std::to_string(v_); }

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace segre::exact
