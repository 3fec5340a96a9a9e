#include "segre/sections/invariants.hpp"

#include <algorithm>
#include <array>
#include <random>

#include "segre/exact/matrix.hpp"

namespace segre::sections {

using exact::Exponents;
using exact::Field;

namespace {

using Tensor = std::array<std::array<std::array<mpz_class, 3>, 3>, 3>;

// The six permutations of (0,1,2) with their signs.
struct Perm {
  std::array<int, 3> p;
  int sign;
};
const std::array<Perm, 6> kPerms = {{{{0, 1, 2}, 1}, {{1, 2, 0}, 1}, {{2, 0, 1}, 1},
                                     {{0, 2, 1}, -1}, {{2, 1, 0}, -1}, {{1, 0, 2}, -1}}};

mpz_class denominator_lcm(const Polynomial& f) {
  mpz_class l = 1;
  for (const auto& [e, c] : f.terms()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.rational().get_den().get_mpz_t());
  return l;
}

// 6 L f_ijk as integers, with L clearing the coefficient denominators.
Tensor cubic_tensor(const Polynomial& f, mpz_class& scale) {
  if (f.nvars() != 3 || f.degree() != 3 || !f.is_homogeneous()) throw Error("expected a ternary cubic form");
  const mpz_class l = denominator_lcm(f);
  Tensor t;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) {
        Exponents e(3, 0);
        ++e[static_cast<std::size_t>(i)];
        ++e[static_cast<std::size_t>(j)];
        ++e[static_cast<std::size_t>(k)];
        int mult = 6;
        for (auto x : e) mult /= (x == 3 ? 6 : x == 2 ? 2 : 1);
        const mpq_class c = f.coefficient(e).rational() * l * 6 / mult;
        t[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)][static_cast<std::size_t>(k)] = c.get_num();
      }
  scale = 6 * l;
  return t;
}

const mpz_class& at(const Tensor& t, int a, int b, int c) {
  return t[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)][static_cast<std::size_t>(c)];
}

mpq_class rational_coeff(const Polynomial& f, const Exponents& e) { return f.coefficient(e).rational(); }

// Univariate polynomials over Q, coefficients low to high.
using QPoly = std::vector<mpq_class>;

void trim(QPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

QPoly qmod(QPoly a, const QPoly& b) {
  trim(a);
  while (a.size() >= b.size() && !a.empty()) {
    const mpq_class f = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    trim(a);
  }
  return a;
}

QPoly qgcd(QPoly a, QPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    QPoly r = qmod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// Univariate polynomials over F_P, coefficients low to high.
struct Fp {
  std::uint64_t p;
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p); }
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const { return (a + b) % p; }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return (a + p - b) % p; }
  std::uint64_t pow(std::uint64_t b, std::uint64_t e) const {
    std::uint64_t r = 1;
    while (e) {
      if (e & 1) r = mul(r, b);
      b = mul(b, b);
      e >>= 1;
    }
    return r;
  }
  std::uint64_t inv(std::uint64_t a) const { return pow(a, p - 2); }
};

using PPoly = std::vector<std::uint64_t>;

void trim(PPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

PPoly pmod(PPoly a, const PPoly& b, const Fp& F) {
  trim(a);
  const std::uint64_t inv = F.inv(b.back());
  while (a.size() >= b.size() && !a.empty()) {
    const std::uint64_t f = F.mul(a.back(), inv);
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = F.sub(a[shift + i], F.mul(f, b[i]));
    trim(a);
  }
  return a;
}

PPoly pgcd(PPoly a, PPoly b, const Fp& F) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    PPoly r = pmod(a, b, F);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// Resultant of two univariate polynomials given with their formal degrees.
std::uint64_t presultant(PPoly a, PPoly b, const Fp& F) {
  trim(a);
  trim(b);
  if (a.empty() || b.empty()) return 0;
  std::uint64_t acc = 1;
  while (true) {
    const std::size_t m = a.size() - 1, n = b.size() - 1;
    if (n == 0) return F.mul(acc, F.pow(b[0], m));
    PPoly r = pmod(a, b, F);
    if (r.empty()) return 0;
    const std::size_t k = r.size() - 1;
    if ((m * n) % 2) acc = F.sub(0, acc);
    acc = F.mul(acc, F.pow(b.back(), m - k));
    a = std::move(b);
    b = std::move(r);
  }
}

// Interpolates values at x = 0..n-1.
PPoly interpolate(const std::vector<std::uint64_t>& ys, const Fp& F) {
  const std::size_t n = ys.size();
  PPoly result(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    PPoly basis{1};
    std::uint64_t denom = 1;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      PPoly next(basis.size() + 1, 0);
      for (std::size_t k = 0; k < basis.size(); ++k) {
        next[k + 1] = F.add(next[k + 1], basis[k]);
        next[k] = F.sub(next[k], F.mul(basis[k], j % F.p));
      }
      basis = std::move(next);
      denom = F.mul(denom, F.sub(i % F.p, j % F.p));
    }
    const std::uint64_t f = F.mul(ys[i], F.inv(denom));
    for (std::size_t k = 0; k < basis.size(); ++k) result[k] = F.add(result[k], F.mul(f, basis[k]));
  }
  trim(result);
  return result;
}

// Bivariate slice: coefficients of y^k of g(x0, y, z0) for a ternary form over F_P.
PPoly slice_y(const Polynomial& g, std::uint64_t x0, std::uint64_t z0, const Fp& F) {
  PPoly out(static_cast<std::size_t>(std::max(g.degree(), 0)) + 1, 0);
  for (const auto& [e, c] : g.terms()) {
    std::uint64_t v = F.mul(c.residue_value(), F.mul(F.pow(x0, e[0]), F.pow(z0, e[2])));
    out[e[1]] = F.add(out[e[1]], v);
  }
  return out;
}

// Binary slice on the line z = 0 dehomogenised at y = 1: polynomial in x.
PPoly line_at_infinity(const Polynomial& g, const Fp& F) {
  PPoly out(static_cast<std::size_t>(std::max(g.degree(), 0)) + 1, 0);
  for (const auto& [e, c] : g.terms())
    if (e[2] == 0) out[e[0]] = F.add(out[e[0]], c.residue_value());
  return out;
}

constexpr std::uint64_t kCertificatePrime = 1000003;

}  // namespace

AronholdInvariants aronhold_invariants(const Polynomial& f) {
  mpz_class scale;
  const Tensor t = cubic_tensor(f, scale);
  mpz_class S = 0, T = 0, term;
  // S = e(a1 b1 c1) e(a2 b2 d1) e(a3 c2 d2) e(b3 c3 d3)
  for (const auto& p1 : kPerms)
    for (const auto& p2 : kPerms)
      for (const auto& p3 : kPerms)
        for (const auto& p4 : kPerms) {
          const int a1 = p1.p[0], b1 = p1.p[1], c1 = p1.p[2];
          const int a2 = p2.p[0], b2 = p2.p[1], d1 = p2.p[2];
          const int a3 = p3.p[0], c2 = p3.p[1], d2 = p3.p[2];
          const int b3 = p4.p[0], c3 = p4.p[1], d3 = p4.p[2];
          term = at(t, a1, a2, a3) * at(t, b1, b2, b3);
          if (term == 0) continue;
          term *= at(t, c1, c2, c3);
          term *= at(t, d1, d2, d3);
          if (p1.sign * p2.sign * p3.sign * p4.sign > 0) S += term;
          else S -= term;
        }
  // T = e(a1 b1 c1) e(a2 b2 d1) e(a3 c2 e1) e(b3 c3 f1) e(d2 e2 f2) e(d3 e3 f3)
  for (const auto& p1 : kPerms)
    for (const auto& p2 : kPerms)
      for (const auto& p3 : kPerms)
        for (const auto& p4 : kPerms) {
          const int a1 = p1.p[0], b1 = p1.p[1], c1 = p1.p[2];
          const int a2 = p2.p[0], b2 = p2.p[1], d1 = p2.p[2];
          const int a3 = p3.p[0], c2 = p3.p[1], e1 = p3.p[2];
          const int b3 = p4.p[0], c3 = p4.p[1], f1 = p4.p[2];
          mpz_class abc = at(t, a1, a2, a3) * at(t, b1, b2, b3);
          if (abc == 0) continue;
          abc *= at(t, c1, c2, c3);
          if (abc == 0) continue;
          const int sign4 = p1.sign * p2.sign * p3.sign * p4.sign;
          for (const auto& p5 : kPerms)
            for (const auto& p6 : kPerms) {
              const int d2 = p5.p[0], e2 = p5.p[1], f2 = p5.p[2];
              const int d3 = p6.p[0], e3 = p6.p[1], f3 = p6.p[2];
              term = at(t, d1, d2, d3) * at(t, e1, e2, e3);
              if (term == 0) continue;
              term *= at(t, f1, f2, f3);
              term *= abc;
              if (sign4 * p5.sign * p6.sign > 0) T += term;
              else T -= term;
            }
        }
  mpz_class s4, s6;
  mpz_pow_ui(s4.get_mpz_t(), scale.get_mpz_t(), 4);
  mpz_pow_ui(s6.get_mpz_t(), scale.get_mpz_t(), 6);
  AronholdInvariants out{mpq_class(S, s4), mpq_class(T, s6)};
  out.S.canonicalize();
  out.T.canonicalize();
  return out;
}

mpq_class aronhold_discriminant(const AronholdInvariants& inv) { return inv.S * inv.S * inv.S - 6 * inv.T * inv.T; }

mpq_class plane_cubic_j(const Polynomial& f) {
  const auto inv = aronhold_invariants(f);
  const mpq_class disc = aronhold_discriminant(inv);
  if (disc == 0) throw Error("j-invariant undefined: the plane cubic is singular");
  return 1728 * inv.S * inv.S * inv.S / disc;
}

BinaryQuarticInvariants binary_quartic_invariants(const Polynomial& f) {
  if (f.nvars() != 2 || f.degree() != 4 || !f.is_homogeneous()) throw Error("expected a binary quartic form");
  const mpq_class a = rational_coeff(f, {4, 0}), b = rational_coeff(f, {3, 1}), c = rational_coeff(f, {2, 2}),
                  d = rational_coeff(f, {1, 3}), e = rational_coeff(f, {0, 4});
  return {12 * a * e - 3 * b * d + c * c, 72 * a * c * e + 9 * b * c * d - 27 * a * d * d - 27 * e * b * b - 2 * c * c * c};
}

mpq_class binary_quartic_j(const Polynomial& f) {
  const auto [I, J] = binary_quartic_invariants(f);
  const mpq_class disc = 4 * I * I * I - J * J;
  if (disc == 0) throw Error("j-invariant undefined: branch points coincide");
  return 6912 * I * I * I / disc;
}

mpq_class cross_ratio_j(const mpq_class& l) {
  if (l == 0 || l == 1) throw Error("degenerate cross-ratio");
  const mpq_class n = l * l - l + 1;
  return 256 * n * n * n / (l * l * (l - 1) * (l - 1));
}

bool binary_form_squarefree(const Polynomial& f) {
  if (f.nvars() != 2 || f.is_zero() || !f.is_homogeneous()) throw Error("expected a nonzero binary form");
  const int d = f.degree();
  QPoly g(static_cast<std::size_t>(d) + 1);
  for (const auto& [e, c] : f.terms()) g[e[0]] = c.rational();
  trim(g);
  const int at_infinity = d - (static_cast<int>(g.size()) - 1);  // multiplicity of (0:1)... root y = 0
  if (at_infinity >= 2) return false;
  QPoly dg;
  for (std::size_t i = 1; i < g.size(); ++i) dg.push_back(g[i] * static_cast<long>(i));
  return qgcd(g, dg).size() <= 1;
}

std::size_t binary_form_fp_roots(const Polynomial& f) {
  if (f.field().is_rational()) throw Error("expected a form over a prime field");
  const Field F = f.field();
  std::size_t roots = 0;
  for (std::uint64_t t = 0; t <= F.modulus(); ++t) {
    exact::Vector pt = t == F.modulus() ? exact::Vector{F.one(), F.zero()} : exact::Vector{F.from_int(static_cast<long long>(t)), F.one()};
    if (exact::evaluate(f, pt).is_zero()) ++roots;
  }
  return roots;
}

std::optional<bool> plane_curve_smooth_certificate(const Polynomial& form, std::uint64_t seed) {
  if (form.nvars() != 3 || form.is_zero() || !form.is_homogeneous()) throw Error("expected a nonzero ternary form");
  const int d = form.degree();
  if (d < 1) return std::nullopt;
  const Field P = Field::prime(kCertificatePrime);
  const Fp F{kCertificatePrime};
  Polynomial reduced = (form * Scalar(mpq_class(denominator_lcm(form)))).in(P);
  if (reduced.degree() != d) return std::nullopt;
  std::mt19937_64 gen(seed);
  for (int attempt = 0; attempt < 8; ++attempt) {
    exact::Matrix g(3, 3, P);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) g.at(i, j) = P.from_int(static_cast<long long>(gen() % 2001) - 1000);
    if (exact::determinant(g).is_zero()) continue;
    const Polynomial h = exact::substitute_linear(reduced, g);
    const auto grad = exact::gradient(h);
    const std::size_t lead = static_cast<std::size_t>(d - 1);
    bool leads_ok = true;
    for (const auto& gi : grad)
      if (gi.coefficient({0, static_cast<std::uint16_t>(lead), 0}).is_zero()) leads_ok = false;
    if (!leads_ok) continue;
    // Affine chart z = 1: resultants in y, interpolated in x.
    const std::size_t npts = lead * lead + 1;
    std::vector<std::uint64_t> r1(npts), r2(npts);
    for (std::size_t x = 0; x < npts; ++x) {
      const PPoly a = slice_y(grad[0], x, 1, F), b = slice_y(grad[1], x, 1, F), c = slice_y(grad[2], x, 1, F);
      r1[x] = presultant(a, b, F);
      r2[x] = presultant(a, c, F);
    }
    const PPoly R1 = interpolate(r1, F), R2 = interpolate(r2, F);
    if (R1.empty() || R2.empty()) continue;
    if (pgcd(R1, R2, F).size() > 1) continue;
    // Line z = 0: points (x:1:0), then (1:0:0).
    PPoly common = pgcd(pgcd(line_at_infinity(grad[0], F), line_at_infinity(grad[1], F), F), line_at_infinity(grad[2], F), F);
    if (common.size() > 1) continue;
    bool corner = true;
    for (const auto& gi : grad)
      if (!gi.coefficient({static_cast<std::uint16_t>(lead), 0, 0}).is_zero()) corner = false;
    if (corner) continue;
    return true;
  }
  return std::nullopt;
}

}  // namespace segre::sections
