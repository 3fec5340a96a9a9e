#include "segre/ktheory/classes.hpp"

#include <cstdlib>
#include <sstream>


namespace segre::ktheory {

namespace {

// V = U_2^v = p_* O(s), det V = O(-K).
SurfaceKClass V() { return SurfaceKClass::u2_dual(); }
SurfaceKClass detV() { return SurfaceKClass::line_bundle(-PicClass::canonical()); }

long binom2(long n) { return n * (n - 1) / 2; }
long binom3(long n) { return n * (n - 1) * (n - 2) / 6; }

// chi(O(D)) on X' for D = aH - sum b_i E_i.
long chi_line(const BlowupClass::Divisor& d) {
  long r = binom3(d[0] + 3);
  for (std::size_t i = 1; i < 6; ++i) r -= binom3(d[i] + 2);
  return r;
}

BlowupClass::Divisor minus(const BlowupClass::Divisor& x, const BlowupClass::Divisor& y) {
  BlowupClass::Divisor r;
  for (std::size_t i = 0; i < 6; ++i) r[i] = x[i] - y[i];
  return r;
}

}  // namespace

BundleXClass BundleXClass::operator*(const BundleXClass& o) const {
  // xi^2 = V xi - det V.
  const SurfaceKClass bd = B * o.B;
  return {A * o.A - bd * detV(), A * o.B + B * o.A + bd * V()};
}

BundleXClass BundleXClass::xi_power(long k) {
  BundleXClass r = pullback(SurfaceKClass::structure_sheaf());
  // xi^-1 = (V - xi) (x) O(K).
  const SurfaceKClass oK = SurfaceKClass::line_bundle(PicClass::canonical());
  const BundleXClass step = k >= 0 ? BundleXClass{{}, SurfaceKClass::structure_sheaf()} : BundleXClass{V() * oK, -oK};
  for (long i = 0; i < std::labs(k); ++i) r = r * step;
  return r;
}

BundleXClass BundleXClass::line_bundle(const PicClass& d, long k) {
  return pullback(SurfaceKClass::line_bundle(d)) * xi_power(k);
}

BundleXClass BundleXClass::dual() const {
  return pullback(A.dual()) + pullback(B.dual()) * xi_power(-1);
}

SurfaceKClass BundleXClass::pushforward() const { return A + B * V(); }

std::string BundleXClass::to_string() const { return A.to_string() + " + " + B.to_string() + " xi"; }

long chi_bundle(const BundleXClass& e, const BundleXClass& f) { return chi_surface((e.dual() * f).pushforward()); }

BlowupClass BlowupClass::line_bundle(const Divisor& d) {
  BlowupClass c;
  c.ambient[d] = 1;
  return c;
}

BlowupClass BlowupClass::exceptional_sheaf(int i, long k) {
  if (i < 1 || i > 5) throw Error("exceptional divisor index must be in 1..5");
  BlowupClass c;
  c.divisor[{i, k}] = 1;
  return c;
}

BlowupClass BlowupClass::operator+(const BlowupClass& o) const {
  BlowupClass r = *this;
  for (const auto& [k, v] : o.ambient)
    if ((r.ambient[k] += v) == 0) r.ambient.erase(k);
  for (const auto& [k, v] : o.divisor)
    if ((r.divisor[k] += v) == 0) r.divisor.erase(k);
  return r;
}

BlowupClass BlowupClass::operator*(long k) const {
  BlowupClass r;
  if (k == 0) return r;
  for (const auto& [d, v] : ambient) r.ambient[d] = v * k;
  for (const auto& [d, v] : divisor) r.divisor[d] = v * k;
  return r;
}

BlowupClass BlowupClass::twist(const Divisor& t) const {
  BlowupClass r;
  for (const auto& [d, v] : ambient) {
    Divisor s;
    for (std::size_t i = 0; i < 6; ++i) s[i] = d[i] + t[i];
    r.ambient[s] += v;
  }
  // O(D')|_{E_i} = O_{E_i}(-b'_i E_i).
  for (const auto& [key, v] : divisor) r.divisor[{key.first, key.second - t[static_cast<std::size_t>(key.first)]}] += v;
  return r;
}

std::string BlowupClass::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [d, v] : ambient) {
    os << (first ? "" : " + ") << v << "*O(" << d[0] << "H";
    for (std::size_t i = 1; i < 6; ++i)
      if (d[i]) os << (d[i] > 0 ? "-" : "+") << std::labs(d[i]) << "E" << i;
    os << ")";
    first = false;
  }
  for (const auto& [k, v] : divisor) {
    os << (first ? "" : " + ") << v << "*O_E" << k.first << "(" << k.second << "E)";
    first = false;
  }
  return first ? "0" : os.str();
}

long chi_blowup(const BlowupClass& e, const BlowupClass& f) {
  long r = 0;
  for (const auto& [d1, v1] : e.ambient) {
    for (const auto& [d2, v2] : f.ambient) r += v1 * v2 * chi_line(minus(d2, d1));
    // chi(O(D), O_{E_i}(kE)) = chi_{P^2}(O(-b_i - k)).
    for (const auto& [k2, v2] : f.divisor) r += v1 * v2 * binom2(-d1[static_cast<std::size_t>(k2.first)] - k2.second + 2);
  }
  for (const auto& [k1, v1] : e.divisor) {
    for (const auto& [d2, v2] : f.ambient) r -= v1 * v2 * binom2(d2[static_cast<std::size_t>(k1.first)] + k1.second + 1);
    for (const auto& [k2, v2] : f.divisor)
      if (k1.first == k2.first) r += v1 * v2 * (k1.second - k2.second + 1);
  }
  return r;
}

std::string ambient_name(Ambient a) {
  switch (a) {
    case Ambient::Surface: return "S";
    case Ambient::BundleX: return "X";
    case Ambient::BlowupX: return "X'";
  }
  return "?";
}

Ambient ambient_of(const KClass& c) { return static_cast<Ambient>(c.index()); }

namespace {

void require_same(const KClass& x, const KClass& y) {
  if (x.index() != y.index())
    throw Error("mixed ambients: " + ambient_name(ambient_of(x)) + " and " + ambient_name(ambient_of(y)));
}

const BlowupClass::Divisor kCanonicalBlowup{-4, -2, -2, -2, -2, -2};
const BlowupClass::Divisor kPolarisationBlowup{2, 1, 1, 1, 1, 1};

// Orlov basis of X', used to read off numerical coordinates.
const std::vector<BlowupClass>& blowup_basis() {
  static const std::vector<BlowupClass> basis = [] {
    std::vector<BlowupClass> b;
    for (long a = 0; a < 4; ++a) b.push_back(BlowupClass::line_bundle({a, 0, 0, 0, 0, 0}));
    for (int i = 1; i <= 5; ++i) {
      b.push_back(BlowupClass::exceptional_sheaf(i, 0));
      b.push_back(BlowupClass::exceptional_sheaf(i, -1));
    }
    return b;
  }();
  return basis;
}

}  // namespace

long chi(const KClass& e, const KClass& f) {
  require_same(e, f);
  switch (ambient_of(e)) {
    case Ambient::Surface: return chi_surface(std::get<SurfaceKClass>(e), std::get<SurfaceKClass>(f));
    case Ambient::BundleX: return chi_bundle(std::get<BundleXClass>(e), std::get<BundleXClass>(f));
    case Ambient::BlowupX: return chi_blowup(std::get<BlowupClass>(e), std::get<BlowupClass>(f));
  }
  return 0;
}

KClass add(const KClass& x, const KClass& y) {
  require_same(x, y);
  return std::visit([&](const auto& a) -> KClass { return a + std::get<std::decay_t<decltype(a)>>(y); }, x);
}

KClass scale(const KClass& x, long k) {
  return std::visit([&](const auto& a) -> KClass { return a * k; }, x);
}

KClass serre_twist(const KClass& x) {
  switch (ambient_of(x)) {
    case Ambient::Surface:
      return std::get<SurfaceKClass>(x) * SurfaceKClass::line_bundle(PicClass::canonical());
    case Ambient::BundleX:
      return std::get<BundleXClass>(x) * BundleXClass::xi_power(-2);
    case Ambient::BlowupX:
      return std::get<BlowupClass>(x).twist(kCanonicalBlowup);
  }
  return x;
}

int serre_sign(Ambient a) { return a == Ambient::Surface ? 1 : -1; }

KClass polarisation_twist(const KClass& x, long times) {
  switch (ambient_of(x)) {
    case Ambient::Surface: return x;
    case Ambient::BundleX: return std::get<BundleXClass>(x) * BundleXClass::xi_power(times);
    case Ambient::BlowupX: {
      BlowupClass::Divisor t;
      for (std::size_t i = 0; i < 6; ++i) t[i] = kPolarisationBlowup[i] * times;
      return std::get<BlowupClass>(x).twist(t);
    }
  }
  return x;
}

std::vector<long> numerical_coordinates(const KClass& x) {
  auto flat = [](const SurfaceKClass& s, std::vector<long>& out) {
    out.push_back(s.rank);
    out.push_back(s.c1.a);
    for (long b : s.c1.b) out.push_back(b);
    out.push_back(s.ch2_twice);
  };
  std::vector<long> out;
  switch (ambient_of(x)) {
    case Ambient::Surface: flat(std::get<SurfaceKClass>(x), out); break;
    case Ambient::BundleX:
      flat(std::get<BundleXClass>(x).A, out);
      flat(std::get<BundleXClass>(x).B, out);
      break;
    case Ambient::BlowupX:
      // The pairing against a full exceptional basis determines a numerical class.
      for (const auto& b : blowup_basis()) out.push_back(chi_blowup(b, std::get<BlowupClass>(x)));
      break;
  }
  return out;
}

bool numerically_equal(const KClass& x, const KClass& y) {
  return x.index() == y.index() && numerical_coordinates(x) == numerical_coordinates(y);
}

bool equal_up_to_sign(const KClass& x, const KClass& y) {
  return numerically_equal(x, y) || numerically_equal(x, scale(y, -1));
}

std::string to_string(const KClass& x) {
  return std::visit([](const auto& a) { return a.to_string(); }, x);
}

}  // namespace segre::ktheory
