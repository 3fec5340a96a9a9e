#pragma once

#include <array>
#include <map>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "segre/exact/error.hpp"

namespace segre::ktheory {

// a h - sum b_i e_i on the quintic del Pezzo surface.
struct PicClass {
  long a = 0;
  std::array<long, 4> b{};

  static PicClass h() { return {1, {0, 0, 0, 0}}; }
  static PicClass e(int i);  // exceptional class e_i, i in 1..4
  static PicClass e_sum() { return {0, {-1, -1, -1, -1}}; }
  static PicClass canonical() { return {-3, {-1, -1, -1, -1}}; }

  PicClass operator+(const PicClass& o) const;
  PicClass operator-(const PicClass& o) const;
  PicClass operator-() const;
  PicClass operator*(long k) const;
  bool operator==(const PicClass&) const = default;
  auto operator<=>(const PicClass&) const = default;
  std::string to_string() const;
};

long dot(const PicClass& x, const PicClass& y);

// Numerical K-class on the surface: rank, c1, and twice ch2.
struct SurfaceKClass {
  long rank = 0;
  PicClass c1;
  long ch2_twice = 0;

  static SurfaceKClass line_bundle(const PicClass& d);
  static SurfaceKClass structure_sheaf() { return line_bundle({}); }
  // O_{e_i}(k) for the (-1)-curve e_i.
  static SurfaceKClass curve_sheaf(int i, long k);
  static SurfaceKClass u2();
  static SurfaceKClass u2_dual();
  static SurfaceKClass u3();
  static SurfaceKClass q3();

  SurfaceKClass operator+(const SurfaceKClass& o) const;
  SurfaceKClass operator-(const SurfaceKClass& o) const;
  SurfaceKClass operator-() const;
  SurfaceKClass operator*(long k) const;
  SurfaceKClass operator*(const SurfaceKClass& o) const;  // tensor product
  SurfaceKClass dual() const;
  bool is_zero() const { return rank == 0 && c1 == PicClass{} && ch2_twice == 0; }
  bool operator==(const SurfaceKClass&) const = default;
  std::string to_string() const;
};

long chi_surface(const SurfaceKClass& e, const SurfaceKClass& f);
long chi_surface(const SurfaceKClass& f);

// A + B xi on X = P_S(U_2), xi = [O(s)], p_* O(s) = U_2^v.
struct BundleXClass {
  SurfaceKClass A, B;

  static BundleXClass pullback(const SurfaceKClass& a) { return {a, {}}; }
  static BundleXClass xi_power(long k);
  static BundleXClass line_bundle(const PicClass& d, long k);  // O(d + k s)

  BundleXClass operator+(const BundleXClass& o) const { return {A + o.A, B + o.B}; }
  BundleXClass operator-(const BundleXClass& o) const { return {A - o.A, B - o.B}; }
  BundleXClass operator-() const { return {-A, -B}; }
  BundleXClass operator*(long k) const { return {A * k, B * k}; }
  BundleXClass operator*(const BundleXClass& o) const;
  BundleXClass dual() const;
  SurfaceKClass pushforward() const;
  bool operator==(const BundleXClass&) const = default;
  std::string to_string() const;
};

long chi_bundle(const BundleXClass& e, const BundleXClass& f);

// Classes on X' = Bl_5 P^3: line bundles O(aH - sum b_i E_i) and sheaves O_{E_i}(k E_i).
struct BlowupClass {
  using Divisor = std::array<long, 6>;  // (a, b_1..b_5)
  std::map<Divisor, long> ambient;
  std::map<std::pair<int, long>, long> divisor;  // (i in 1..5, k) -> coefficient

  static BlowupClass line_bundle(const Divisor& d);
  static BlowupClass exceptional_sheaf(int i, long k);

  BlowupClass operator+(const BlowupClass& o) const;
  BlowupClass operator-(const BlowupClass& o) const { return *this + o * -1; }
  BlowupClass operator*(long k) const;
  BlowupClass twist(const Divisor& d) const;
  std::string to_string() const;
};

long chi_blowup(const BlowupClass& e, const BlowupClass& f);

enum class Ambient { Surface, BundleX, BlowupX };
std::string ambient_name(Ambient a);

using KClass = std::variant<SurfaceKClass, BundleXClass, BlowupClass>;

Ambient ambient_of(const KClass& c);
// Euler pairing; throws segre::Error on mixed ambients.
long chi(const KClass& e, const KClass& f);
KClass add(const KClass& x, const KClass& y);
KClass scale(const KClass& x, long k);
// Tensor with the canonical bundle.
KClass serre_twist(const KClass& x);
// (-1)^dim: + on the surface, - on the threefolds.
int serre_sign(Ambient a);
// Tensor with the Lefschetz polarisation: O(s) on X, O(2H - E) on X'; identity on the surface.
KClass polarisation_twist(const KClass& x, long times = 1);
// Numerical coordinates: pairing vector against a fixed full exceptional basis of the ambient.
std::vector<long> numerical_coordinates(const KClass& x);
bool numerically_equal(const KClass& x, const KClass& y);
bool equal_up_to_sign(const KClass& x, const KClass& y);
std::string to_string(const KClass& x);

}  // namespace segre::ktheory
