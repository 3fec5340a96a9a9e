#include "segre/ktheory/classes.hpp"

#include <cstdlib>
#include <sstream>

namespace segre::ktheory {

PicClass PicClass::e(int i) {
  if (i < 1 || i > 4) throw Error("exceptional class index must be in 1..4");
  PicClass c;
  c.b[static_cast<std::size_t>(i - 1)] = -1;
  return c;
}

PicClass PicClass::operator+(const PicClass& o) const {
  PicClass r{a + o.a, {}};
  for (std::size_t i = 0; i < 4; ++i) r.b[i] = b[i] + o.b[i];
  return r;
}

PicClass PicClass::operator-(const PicClass& o) const { return *this + -o; }
PicClass PicClass::operator-() const { return *this * -1; }

PicClass PicClass::operator*(long k) const {
  PicClass r{a * k, {}};
  for (std::size_t i = 0; i < 4; ++i) r.b[i] = b[i] * k;
  return r;
}

std::string PicClass::to_string() const {
  std::ostringstream os;
  os << a << "h";
  for (std::size_t i = 0; i < 4; ++i)
    if (b[i]) os << (b[i] > 0 ? "-" : "+") << (std::labs(b[i]) == 1 ? "" : std::to_string(std::labs(b[i]))) << "e" << i + 1;
  return os.str();
}

long dot(const PicClass& x, const PicClass& y) {
  long r = x.a * y.a;
  for (std::size_t i = 0; i < 4; ++i) r -= x.b[i] * y.b[i];
  return r;
}

SurfaceKClass SurfaceKClass::line_bundle(const PicClass& d) { return {1, d, dot(d, d)}; }

SurfaceKClass SurfaceKClass::curve_sheaf(int i, long k) {
  // O_e(k) = O(e) - O(e - ... ): from 0 -> O(-e) -> O -> O_e -> 0 and O(e)|_e = O(-1).
  const PicClass e = PicClass::e(i);
  const SurfaceKClass oe = structure_sheaf() - line_bundle(-e);
  return oe * line_bundle(e * (-k));
}

SurfaceKClass SurfaceKClass::u2_dual() { return {2, -PicClass::canonical(), 1}; }
SurfaceKClass SurfaceKClass::u2() { return u2_dual().dual(); }
SurfaceKClass SurfaceKClass::q3() { return structure_sheaf() * 5 - u2(); }
SurfaceKClass SurfaceKClass::u3() { return q3().dual(); }

SurfaceKClass SurfaceKClass::operator+(const SurfaceKClass& o) const { return {rank + o.rank, c1 + o.c1, ch2_twice + o.ch2_twice}; }
SurfaceKClass SurfaceKClass::operator-(const SurfaceKClass& o) const { return *this + -o; }
SurfaceKClass SurfaceKClass::operator-() const { return *this * -1; }
SurfaceKClass SurfaceKClass::operator*(long k) const { return {rank * k, c1 * k, ch2_twice * k}; }

SurfaceKClass SurfaceKClass::operator*(const SurfaceKClass& o) const {
  return {rank * o.rank, o.c1 * rank + c1 * o.rank, rank * o.ch2_twice + o.rank * ch2_twice + 2 * dot(c1, o.c1)};
}

SurfaceKClass SurfaceKClass::dual() const { return {rank, -c1, ch2_twice}; }

std::string SurfaceKClass::to_string() const {
  std::ostringstream os;
  os << "(" << rank << "; " << c1.to_string() << "; " << ch2_twice << "/2)";
  return os.str();
}

long chi_surface(const SurfaceKClass& f) {
  // td(S) = 1 - K/2 + pt, so 2 chi = 2 rank - c1.K + 2 ch2.
  const long twice = 2 * f.rank - dot(f.c1, PicClass::canonical()) + f.ch2_twice;
  if (twice % 2) throw Error("non-integral Euler characteristic for " + f.to_string());
  return twice / 2;
}

long chi_surface(const SurfaceKClass& e, const SurfaceKClass& f) { return chi_surface(e.dual() * f); }

}  // namespace segre::ktheory
