#include "segre/exact/polynomial.hpp"

#include <numeric>
#include <sstream>

namespace segre::exact {

namespace {

unsigned total(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0u); }

Exponents add(const Exponents& a, const Exponents& b) {
  Exponents r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = static_cast<std::uint16_t>(a[i] + b[i]);
  return r;
}

}  // namespace

bool GrlexGreater::operator()(const Exponents& a, const Exponents& b) const {
  const unsigned da = total(a), db = total(b);
  if (da != db) return da > db;
  return a > b;
}

Polynomial::Polynomial(std::size_t nvars, Field f) : nvars_(nvars), field_(f) {}

Polynomial Polynomial::constant(std::size_t nvars, const Scalar& c) {
  Polynomial p(nvars, c.field());
  p.add_term(Exponents(nvars, 0), c);
  return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t i, Field f) {
  if (i >= nvars) throw DimensionMismatch("variable index out of range");
  Exponents e(nvars, 0);
  e[i] = 1;
  Polynomial p(nvars, f);
  p.add_term(e, f.one());
  return p;
}

Polynomial Polynomial::monomial(const Exponents& e, const Scalar& c) {
  Polynomial p(e.size(), c.field());
  p.add_term(e, c);
  return p;
}

Polynomial Polynomial::linear(const Vector& coeffs, Field f) {
  Polynomial p(coeffs.size(), f);
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    Exponents e(coeffs.size(), 0);
    e[i] = 1;
    p.add_term(e, coeffs[i].in(f));
  }
  return p;
}

bool Polynomial::is_homogeneous() const {
  for (const auto& [e, c] : terms_)
    if (static_cast<int>(total(e)) != degree_) return false;
  return true;
}

Scalar Polynomial::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? field_.zero() : it->second;
}

const std::pair<const Exponents, Scalar>& Polynomial::leading_term() const {
  if (terms_.empty()) throw Error("leading term of the zero polynomial");
  return *terms_.begin();
}

Polynomial Polynomial::in(const Field& f) const {
  Polynomial p(nvars_, f);
  for (const auto& [e, c] : terms_) p.add_term(e, c.in(f));
  return p;
}

void Polynomial::add_term(const Exponents& e, const Scalar& c) {
  if (e.size() != nvars_) throw DimensionMismatch("exponent vector length differs from variable count");
  if (c.modulus() != field_.modulus()) throw ModulusMismatch("coefficient from another field");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) {
      terms_.erase(it);
      refresh_degree();
      return;
    }
  }
  degree_ = std::max(degree_, static_cast<int>(total(e)));
}

void Polynomial::refresh_degree() { degree_ = terms_.empty() ? -1 : static_cast<int>(total(terms_.begin()->first)); }

void Polynomial::check_compatible(const Polynomial& o) const {
  if (nvars_ != o.nvars_) throw DimensionMismatch("polynomials in different variable counts");
  if (field_ != o.field_) throw ModulusMismatch("polynomials over different fields");
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  check_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  check_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Scalar& c) {
  if (c.modulus() != field_.modulus()) throw ModulusMismatch("scalar from another field");
  if (c.is_zero()) {
    terms_.clear();
    degree_ = -1;
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (auto& [e, v] : p.terms_) v = -v;
  return p;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_compatible(b);
  Polynomial r(a.nvars_, a.field_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      auto [it, inserted] = r.terms_.try_emplace(add(ea, eb), ca * cb);
      if (!inserted) it->second += ca * cb;
    }
  for (auto it = r.terms_.begin(); it != r.terms_.end();) it = it->second.is_zero() ? r.terms_.erase(it) : std::next(it);
  r.refresh_degree();
  return r;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial r = constant(nvars_, field_.one());
  Polynomial b = *this;
  while (e) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

bool Polynomial::operator==(const Polynomial& o) const {
  return nvars_ == o.nvars_ && field_ == o.field_ && terms_ == o.terms_;
}

std::string Polynomial::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  auto name = [&](std::size_t i) { return i < names.size() ? names[i] : "x" + std::to_string(i); };
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    std::string coeff = c.to_string();
    bool negative = c.is_rational() && sgn(c.rational()) < 0;
    if (negative) coeff = coeff.substr(1);
    os << (first ? (negative ? "-" : "") : (negative ? " - " : " + "));
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (!e[i]) continue;
      if (!mono.empty()) mono += "*";
      mono += name(i);
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) os << coeff;
    else if (coeff == "1") os << mono;
    else os << coeff << "*" << mono;
  }
  return os.str();
}

Scalar evaluate(const Polynomial& p, const Vector& point) {
  if (point.size() != p.nvars()) throw DimensionMismatch("point length differs from variable count");
  for (const auto& s : point)
    if (s.modulus() != p.field().modulus()) throw ModulusMismatch("point and polynomial over different fields");
  // Power tables per variable.
  std::vector<std::vector<Scalar>> powers(point.size());
  const int d = std::max(p.degree(), 0);
  for (std::size_t i = 0; i < point.size(); ++i) {
    powers[i].reserve(static_cast<std::size_t>(d) + 1);
    powers[i].push_back(p.field().one());
    for (int k = 1; k <= d; ++k) powers[i].push_back(powers[i].back() * point[i]);
  }
  Scalar acc = p.field().zero();
  for (const auto& [e, c] : p.terms()) {
    Scalar t = c;
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i]) t *= powers[i][e[i]];
    acc += t;
  }
  return acc;
}

Polynomial derivative(const Polynomial& p, std::size_t var) {
  if (var >= p.nvars()) throw DimensionMismatch("derivative variable out of range");
  Polynomial d(p.nvars(), p.field());
  for (const auto& [e, c] : p.terms()) {
    if (!e[var]) continue;
    Exponents f = e;
    --f[var];
    d.add_term(f, c * p.field().from_int(e[var]));
  }
  return d;
}

std::vector<Polynomial> gradient(const Polynomial& p) {
  std::vector<Polynomial> g;
  g.reserve(p.nvars());
  for (std::size_t i = 0; i < p.nvars(); ++i) g.push_back(derivative(p, i));
  return g;
}

Polynomial compose(const Polynomial& p, const std::vector<Polynomial>& images) {
  if (images.size() != p.nvars()) throw DimensionMismatch("one image per variable required");
  if (images.empty()) return p;
  const std::size_t n = images.front().nvars();
  for (const auto& q : images) {
    if (q.nvars() != n) throw DimensionMismatch("images in different variable counts");
    if (q.field() != p.field()) throw ModulusMismatch("images over a different field");
  }
  std::vector<std::vector<Polynomial>> powers(images.size());
  auto power = [&](std::size_t i, unsigned k) -> const Polynomial& {
    auto& tab = powers[i];
    if (tab.empty()) tab.push_back(Polynomial::constant(n, p.field().one()));
    while (tab.size() <= k) tab.push_back(tab.back() * images[i]);
    return tab[k];
  };
  Polynomial r(n, p.field());
  for (const auto& [e, c] : p.terms()) {
    Polynomial t = Polynomial::constant(n, c);
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i]) t = t * power(i, e[i]);
    r += t;
  }
  return r;
}

Polynomial substitute_linear(const Polynomial& p, const Matrix& map) {
  if (map.rows() != p.nvars()) throw DimensionMismatch("substitution matrix rows must equal the variable count");
  std::vector<Polynomial> images;
  images.reserve(map.rows());
  for (std::size_t i = 0; i < map.rows(); ++i) images.push_back(Polynomial::linear(map.row(i), p.field()));
  if (images.empty()) return p;
  return compose(p, images);
}

namespace {

bool perfect_square(const mpz_class& z, mpz_class& root) {
  if (sgn(z) < 0 || !mpz_perfect_square_p(z.get_mpz_t())) return false;
  mpz_sqrt(root.get_mpz_t(), z.get_mpz_t());
  return true;
}

}  // namespace

std::optional<SquareRoot> polynomial_square_root(const Polynomial& p) {
  const Field f = p.field();
  if (p.is_zero()) return SquareRoot{p, f.one()};
  const Scalar lc = p.leading_term().second;
  Polynomial monic = p * lc.inverse();
  const Exponents& lead = monic.leading_term().first;
  Exponents half(lead.size());
  for (std::size_t i = 0; i < lead.size(); ++i) {
    if (lead[i] % 2) return std::nullopt;
    half[i] = static_cast<std::uint16_t>(lead[i] / 2);
  }
  Polynomial q = Polynomial::monomial(half, f.one());
  const Scalar two_inv = f.from_int(2).inverse();
  Polynomial rem = monic - q * q;
  while (!rem.is_zero()) {
    const auto& [e, c] = rem.leading_term();
    Exponents t(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] < half[i]) return std::nullopt;
      t[i] = static_cast<std::uint16_t>(e[i] - half[i]);
    }
    // The candidate term must stay below the root's leading monomial.
    if (!GrlexGreater{}(half, t)) return std::nullopt;
    Polynomial term = Polynomial::monomial(t, c * two_inv);
    rem -= term * (q + q + term);
    q += term;
  }
  SquareRoot out{q, lc.inverse()};
  if (f.is_rational()) {
    mpz_class rn, rd;
    const mpq_class& v = lc.rational();
    if (perfect_square(v.get_num(), rn) && perfect_square(v.get_den(), rd)) {
      out.root *= Scalar(rn, rd);
      out.scale = f.one();
    }
  }
  return out;
}

}  // namespace segre::exact
