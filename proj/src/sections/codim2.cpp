#include "segre/sections/classifier.hpp"

#include <random>
#include <sstream>

namespace segre::sections {

using exact::Vector;

namespace {

void require_traceless_rows(const LinearSubspace& l) {
  if (l.ambient_size() != 6) throw DimensionMismatch("subspace must live in six coordinates");
  if (!l.field().is_rational()) throw Error("subspace must be defined over the rationals");
  for (std::size_t r = 0; r < l.vector_dim(); ++r)
    if (!projective::is_traceless(l.basis().row(r))) throw Error("subspace is not traceless");
}

}  // namespace

LinearSubspace traceless_complement(const LinearSubspace& l) {
  Matrix ones(1, 6, l.field());
  for (std::size_t j = 0; j < 6; ++j) ones.at(0, j) = l.field().one();
  return LinearSubspace(exact::kernel(exact::stack(l.basis(), ones)));
}

LinearSubspace random_traceless_subspace(std::size_t dim, long bound, std::uint64_t seed) {
  if (dim == 0 || dim > 5) throw Error("traceless subspaces have dimension 1 to 5");
  std::mt19937_64 gen(seed);
  std::uniform_int_distribution<long> dist(-bound, bound);
  while (true) {
    Matrix m(dim, 6);
    for (std::size_t r = 0; r < dim; ++r) {
      long v[6], sum = 0;
      for (auto& x : v) sum += (x = dist(gen));
      for (std::size_t j = 0; j < 6; ++j) m.at(r, j) = Scalar(6 * v[j] - sum);
    }
    if (exact::rank(m) == dim) return LinearSubspace(m);
  }
}

std::string Codim2Report::to_string() const {
  std::ostringstream os;
  os << "dim " << dim << ": " << segre_side << " | " << igusa_side;
  if (exceptional_rank) os << " | " << topological_euler << " = " << exceptional_rank;
  os << (matches_table ? " | generic pattern" : " | non-generic");
  return os.str();
}

Codim2Report codim2_profile(const SegreIgusaData& d, const LinearSubspace& l, const Field& p) {
  require_traceless_rows(l);
  Codim2Report rep;
  rep.dim = l.vector_dim();
  if (rep.dim < 2 || rep.dim > 4) throw Error("codimension-two profiles need a subspace of dimension 2, 3 or 4");
  const LinearSubspace perp = traceless_complement(l);
  const Polynomial cubic = geometry::restrict_form(d.segre6.form(), l.basis());
  const Polynomial quartic = geometry::restrict_form(d.igusa6.form(), perp.basis());

  if (rep.dim == 2) {
    const bool points = !cubic.is_zero() && binary_form_squarefree(cubic);
    const bool smooth = !quartic.is_zero() && plane_curve_smooth_certificate(quartic).value_or(false);
    rep.segre_side = points ? "3 distinct points" : "degenerate point set";
    rep.igusa_side = smooth ? "smooth plane quartic" : "quartic not certified smooth";
    rep.generic = points && smooth;
    const long g = (quartic.degree() - 1) * (quartic.degree() - 2) / 2;
    // Double plane branched along the quartic: 2 chi(P^2) - chi(C).
    rep.topological_euler = 2 * 3 - (2 - 2 * g);
    rep.exceptional_rank = 7 + cubic.degree();
    rep.oracle_points = quartic.is_zero() ? 0 : projective::singular_locus_scan(projective::Hypersurface(quartic.in(p)), p).size();
  } else if (rep.dim == 3) {
    const bool smooth = !cubic.is_zero() && aronhold_discriminant(aronhold_invariants(cubic)) != 0;
    const bool branch = !quartic.is_zero() && binary_form_squarefree(quartic);
    rep.segre_side = smooth ? "smooth plane cubic" : "singular plane cubic";
    rep.igusa_side = branch ? "4 distinct branch points" : "coincident branch points";
    rep.generic = smooth && branch;
    rep.oracle_points = binary_form_fp_roots(quartic.in(p));
  } else {
    const ProjectivePoint h(perp.basis().row(0));
    const bool smooth = classify_hyperplane(d, h).kind == SectionKind::SmoothCubic;
    const bool empty = dual_fiber(d, h) == DualFiberType::TwoPoints;
    rep.segre_side = smooth ? "smooth cubic surface" : "singular cubic surface";
    rep.igusa_side = empty ? "empty (2 points in the double cover)" : "point on the quartic";
    rep.generic = smooth && empty;
    // Blowup of P^2 in six points.
    rep.topological_euler = 3 + 6;
    rep.exceptional_rank = 7 + (empty ? 2 : 1);
    rep.oracle_points = projective::singular_locus_scan(projective::Hypersurface(cubic.in(p)), p).size();
  }
  rep.matches_table = rep.generic && (rep.dim == 3 || rep.topological_euler == rep.exceptional_rank);
  return rep;
}

EllipticMatch elliptic_j_match(const SegreIgusaData& d, const LinearSubspace& l) {
  require_traceless_rows(l);
  if (l.vector_dim() != 3) throw Error("elliptic_j_match needs a subspace of dimension 3");
  const Polynomial cubic = geometry::restrict_form(d.segre6.form(), l.basis());
  const Polynomial quartic = geometry::restrict_form(d.igusa6.form(), traceless_complement(l).basis());
  EllipticMatch m;
  m.j1 = plane_cubic_j(cubic);
  m.j2 = binary_quartic_j(quartic);
  m.equal = m.j1 == m.j2;
  return m;
}

}  // namespace segre::sections
