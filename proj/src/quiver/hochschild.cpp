#include "segre/quiver/algebra.hpp"

namespace segre::quiver {

namespace {

// Index of basis paths of the parallel spaces attached to a list of (source, target) slots.
struct Slots {
  std::vector<std::vector<Path>> basis;
  std::vector<std::size_t> offset;
  std::size_t total = 0;
};

Slots make_slots(const GradedQuiverAlgebra& a, const std::vector<std::pair<int, int>>& ends) {
  Slots s;
  for (const auto& [i, j] : ends) {
    s.offset.push_back(s.total);
    s.basis.push_back(a.parallel_basis(i, j));
    s.total += s.basis.back().size();
  }
  return s;
}

// Writes a reduced element into the slot's coordinates.
void scatter(const Slots& s, std::size_t slot, const GradedQuiverAlgebra::Element& x, exact::Matrix& m, std::size_t col) {
  for (const auto& [p, c] : x) {
    const auto& b = s.basis[slot];
    for (std::size_t k = 0; k < b.size(); ++k)
      if (b[k] == p) {
        m.at(s.offset[slot] + k, col) += c;
        break;
      }
  }
}

GradedQuiverAlgebra::Element single(const Path& p) { return {{p, Scalar(1)}}; }

}  // namespace

HochschildDims hochschild_dims(const GradedQuiverAlgebra& a) {
  if (a.overlap_dimension() != 0)
    throw Error("minimal resolution of " + a.name() + " does not stop after step 2");
  const Quiver& q = a.quiver();
  std::vector<std::pair<int, int>> e0, e1, e2;
  for (std::size_t v = 0; v < q.vertices; ++v) e0.push_back({static_cast<int>(v), static_cast<int>(v)});
  for (const auto& ar : q.arrows) e1.push_back({ar.source, ar.target});
  for (const auto& r : a.relations()) e2.push_back({a.source(r.front().second), a.target(r.front().second)});
  const Slots c0 = make_slots(a, e0), c1 = make_slots(a, e1), c2 = make_slots(a, e2);

  // d0(z)_alpha = z_{s(alpha)} alpha - alpha z_{t(alpha)}.
  exact::Matrix d0(c1.total, c0.total);
  for (std::size_t v = 0; v < e0.size(); ++v)
    for (std::size_t k = 0; k < c0.basis[v].size(); ++k) {
      const auto z = single(c0.basis[v][k]);
      for (std::size_t al = 0; al < q.arrows.size(); ++al) {
        const auto arrow = single({static_cast<int>(al)});
        auto x = a.multiply(z, arrow);
        for (const auto& [p, c] : a.multiply(arrow, z)) x[p] -= c;
        scatter(c1, al, a.reduce(x), d0, c0.offset[v] + k);
      }
    }

  // d1(f)_r = sum c (f(a1) a2 + a1 f(a2)) over the terms c a1 a2 of r.
  exact::Matrix d1(c2.total, c1.total);
  for (std::size_t al = 0; al < q.arrows.size(); ++al)
    for (std::size_t k = 0; k < c1.basis[al].size(); ++k) {
      const auto f = single(c1.basis[al][k]);
      for (std::size_t r = 0; r < a.relations().size(); ++r) {
        GradedQuiverAlgebra::Element x;
        for (const auto& [c, p] : a.relations()[r]) {
          if (p[0] == static_cast<int>(al))
            for (const auto& [t, v] : a.multiply(f, single({p[1]}))) x[t] += c * v;
          if (p[1] == static_cast<int>(al))
            for (const auto& [t, v] : a.multiply(single({p[0]}), f)) x[t] += c * v;
        }
        scatter(c2, r, a.reduce(x), d1, c1.offset[al] + k);
      }
    }

  const std::size_t r0 = c1.total && c0.total ? exact::rank(d0) : 0;
  const std::size_t r1 = c2.total && c1.total ? exact::rank(d1) : 0;
  return {c0.total - r0, c1.total - r1 - r0, c2.total - r1};
}

}  // namespace segre::quiver
