#include "segre/sections/classifier.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace segre::sections {

using exact::Vector;
using geometry::pairing;

namespace {

std::string join_nodes(const SegreIgusaData& d, const std::vector<int>& nodes) {
  std::string s = "{";
  for (std::size_t i = 0; i < nodes.size(); ++i) s += (i ? "," : "") + d.node_label(static_cast<std::size_t>(nodes[i]));
  return s + "}";
}

std::string cr_label(const SegreIgusaData& d, int k) {
  return "q" + geometry::pair_label(d.h_planes[static_cast<std::size_t>(k)].pair);
}

void require_rational_traceless(const ProjectivePoint& h) {
  if (!h.field().is_rational()) throw Error("hyperplane must be given over the rationals");
  if (h.size() != 6) throw DimensionMismatch("hyperplane must have six coordinates");
  if (!projective::is_traceless(h.coords())) throw Error("hyperplane " + h.to_string() + " is not traceless");
}

ProjectivePoint reduce(const ProjectivePoint& h, const Field& p) {
  Vector v;
  bool zero = true;
  for (const auto& z : h.integer_coords()) {
    v.push_back(Scalar(mpq_class(z)).in(p));
    zero = zero && v.back().is_zero();
  }
  if (zero) throw Error(p.name() + " divides every coordinate of " + h.to_string());
  return ProjectivePoint(v);
}

SectionFeatures features_over(const SegreIgusaData& d, const ProjectivePoint& h, const Field& f) {
  SectionFeatures out;
  for (std::size_t i = 0; i < d.nodes.size(); ++i)
    if (pairing(h.coords(), d.nodes[i].in(f).coords()).is_zero()) out.nodes_on.push_back(static_cast<int>(i));
  out.on_igusa = exact::evaluate(d.igusa6.form().in(f), h.coords()).is_zero();
  for (std::size_t k = 0; k < d.dual_lines.size(); ++k)
    if (d.dual_lines[k].in(f).contains(h)) out.dual_lines.push_back(static_cast<int>(k));
  for (std::size_t k = 0; k < d.cr_points.size(); ++k)
    if (d.cr_points[k].in(f) == h) out.cr_point = static_cast<int>(k);
  return out;
}

// Basis (rows) of the hyperplane {sum x = 0, <h, x> = 0} over the field of h.
Matrix section_basis(const ProjectivePoint& h) {
  const Field f = h.field();
  Matrix m(2, 6, f);
  for (std::size_t j = 0; j < 6; ++j) {
    m.at(0, j) = f.one();
    m.at(1, j) = h.coords()[j];
  }
  return exact::kernel(m);
}

SingularProfile scan_profile(const Polynomial& form, const Field& p) {
  projective::Hypersurface section(form);
  const auto pts = projective::singular_locus_scan(section, p);
  SingularProfile out{pts.size(), {}};
  for (const auto& pt : pts) out.coranks.push_back(projective::hessian_corank_at(section, pt));
  std::sort(out.coranks.begin(), out.coranks.end());
  return out;
}

}  // namespace

std::string SectionFeatures::to_string() const {
  std::ostringstream os;
  os << "S={";
  for (std::size_t i = 0; i < nodes_on.size(); ++i) os << (i ? "," : "") << "p" << nodes_on[i] + 1;
  os << "},g=" << (on_igusa ? 1 : 0) << ",lines=" << dual_lines.size() << ",triple=" << (cr_point ? 1 : 0);
  return os.str();
}

SectionFeatures section_features(const SegreIgusaData& d, const ProjectivePoint& h) {
  require_rational_traceless(h);
  return features_over(d, h, Field::rationals());
}

SectionFeatures section_features_mod(const SegreIgusaData& d, const ProjectivePoint& h, const Field& p) {
  require_rational_traceless(h);
  return features_over(d, reduce(h, p), p);
}

std::string kind_name(SectionKind k) {
  switch (k) {
    case SectionKind::SmoothCubic: return "SmoothCubic";
    case SectionKind::OneNodalAtNode: return "OneNodalAtNode";
    case SectionKind::OneNodalTangency: return "OneNodalTangency";
    case SectionKind::RNodal: return "RNodal";
    case SectionKind::A2AtNode: return "A2AtNode";
    case SectionKind::PlanePlusQuadric: return "PlanePlusQuadric";
    case SectionKind::ThreeSegrePlanes: return "ThreeSegrePlanes";
    case SectionKind::Unclassified: return "Unclassified";
  }
  return "?";
}

std::string HyperplaneSectionType::to_string() const {
  const auto& d = geometry::data();
  switch (kind) {
    case SectionKind::OneNodalAtNode:
    case SectionKind::A2AtNode:
      return kind_name(kind) + "(" + d.node_label(static_cast<std::size_t>(nodes.front())) + ")";
    case SectionKind::RNodal:
      return "RNodal(" + std::to_string(r()) + "," + join_nodes(d, nodes) + ")";
    case SectionKind::PlanePlusQuadric:
    case SectionKind::ThreeSegrePlanes:
      return kind_name(kind) + "(" + label + ")";
    case SectionKind::Unclassified:
      return "Unclassified(" + features.to_string() + ")";
    default:
      return kind_name(kind);
  }
}

HyperplaneSectionType classify_from_features(const SegreIgusaData& d, const SectionFeatures& f) {
  HyperplaneSectionType t;
  t.features = f;
  const bool sing = !f.dual_lines.empty();
  const std::size_t s = f.nodes_on.size();
  if (sing && f.cr_point) {
    t.kind = SectionKind::ThreeSegrePlanes;
    t.label = cr_label(d, *f.cr_point);
  } else if (sing) {
    if (f.dual_lines.size() == 1) {
      t.kind = SectionKind::PlanePlusQuadric;
      t.label = d.segre_planes[static_cast<std::size_t>(f.dual_lines.front())].label;
    }
  } else if (!f.on_igusa && s == 0) {
    t.kind = SectionKind::SmoothCubic;
  } else if (!f.on_igusa && s == 1) {
    t.kind = SectionKind::OneNodalAtNode;
    t.nodes = f.nodes_on;
  } else if (!f.on_igusa && s <= 4) {
    t.kind = SectionKind::RNodal;
    t.nodes = f.nodes_on;
  } else if (f.on_igusa && s == 0) {
    t.kind = SectionKind::OneNodalTangency;
  } else if (f.on_igusa && s == 1) {
    t.kind = SectionKind::A2AtNode;
    t.nodes = f.nodes_on;
  }
  return t;
}

HyperplaneSectionType classify_hyperplane(const SegreIgusaData& d, const ProjectivePoint& h) {
  return classify_from_features(d, section_features(d, h));
}

std::string SingularProfile::to_string() const {
  std::string s = "(" + std::to_string(count) + ",[";
  for (std::size_t i = 0; i < coranks.size(); ++i) s += (i ? "," : "") + std::to_string(coranks[i]);
  return s + "])";
}

bool ImpliedProfile::matches(const SingularProfile& observed) const {
  return lower_bound ? observed.count >= min_count : observed == exact;
}

ImpliedProfile implied_profile(const HyperplaneSectionType& t, std::uint64_t p) {
  ImpliedProfile out;
  switch (t.kind) {
    case SectionKind::SmoothCubic:
      break;
    case SectionKind::OneNodalAtNode:
    case SectionKind::OneNodalTangency:
      out.exact = {1, {0}};
      break;
    case SectionKind::RNodal:
      out.exact = {t.nodes.size(), std::vector<int>(t.nodes.size(), 0)};
      break;
    case SectionKind::A2AtNode:
      out.exact = {1, {1}};
      break;
    case SectionKind::ThreeSegrePlanes:
      // Three planes meet pairwise in three concurrent lines.
      out.exact.count = 3 * p + 1;
      out.min_count = 3 * p + 1;
      out.lower_bound = true;
      break;
    case SectionKind::PlanePlusQuadric:
      out.min_count = p + 1;
      out.lower_bound = true;
      break;
    case SectionKind::Unclassified:
      out.min_count = 0;
      out.lower_bound = true;
      break;
  }
  return out;
}

SingularProfile oracle_singular_profile(const SegreIgusaData& d, const ProjectivePoint& h, const Field& p) {
  require_rational_traceless(h);
  const ProjectivePoint hp = reduce(h, p);
  return scan_profile(geometry::restrict_form(d.segre6.form().in(p), section_basis(hp)), p);
}

std::size_t AgreementReport::unexplained() const {
  return static_cast<std::size_t>(std::count_if(entries.begin(), entries.end(), [](const auto& e) { return !e.unexplained_primes.empty(); }));
}

std::size_t AgreementReport::without_majority() const {
  return static_cast<std::size_t>(std::count_if(entries.begin(), entries.end(), [](const auto& e) { return !e.majority(); }));
}

AgreementEntry check_agreement(const SegreIgusaData& d, const ProjectivePoint& h, const std::vector<std::uint64_t>& primes) {
  AgreementEntry e{h, classify_hyperplane(d, h), {}, {}, {}};
  for (const auto p : primes) {
    const Field f = Field::prime(p);
    const auto observed = oracle_singular_profile(d, h, f);
    if (implied_profile(e.type, p).matches(observed)) {
      e.agreeing_primes.push_back(p);
      continue;
    }
    const auto reduced = classify_from_features(d, section_features_mod(d, h, f));
    if (reduced.kind != SectionKind::Unclassified && implied_profile(reduced, p).matches(observed))
      e.bad_reduction_primes.push_back(p);
    else
      e.unexplained_primes.push_back(p);
  }
  return e;
}

std::vector<ProjectivePoint> random_hyperplanes(std::size_t count, long bound, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::uniform_int_distribution<long> dist(-bound, bound);
  std::vector<ProjectivePoint> out;
  while (out.size() < count) {
    Vector v;
    long sum = 0;
    for (int i = 0; i < 5; ++i) {
      const long x = dist(gen);
      sum += x;
      v.push_back(Scalar(x));
    }
    if (sum < -bound || sum > bound) continue;
    v.push_back(Scalar(-sum));
    if (std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); })) continue;
    out.emplace_back(v);
  }
  return out;
}

AgreementReport agreement_suite(const SegreIgusaData& d, std::size_t count, std::uint64_t seed,
                                const std::vector<std::uint64_t>& primes) {
  AgreementReport rep;
  for (const auto& h : random_hyperplanes(count, 20, seed)) rep.entries.push_back(check_agreement(d, h, primes));
  return rep;
}

namespace {

// Random integer combination of the rows of a basis, as a traceless point.
std::optional<ProjectivePoint> combination(const Matrix& basis, std::mt19937_64& gen, long bound) {
  std::uniform_int_distribution<long> dist(-bound, bound);
  Vector v(basis.cols(), Scalar(0));
  for (std::size_t r = 0; r < basis.rows(); ++r) {
    const Scalar c(dist(gen));
    for (std::size_t j = 0; j < basis.cols(); ++j) v[j] += c * basis.at(r, j);
  }
  if (std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); })) return std::nullopt;
  return ProjectivePoint(v);
}

// Traceless vectors orthogonal to the given nodes.
Matrix orthogonal_to_nodes(const SegreIgusaData& d, const std::vector<int>& nodes) {
  Matrix m(nodes.size() + 1, 6);
  for (std::size_t j = 0; j < 6; ++j) m.at(0, j) = 1;
  for (std::size_t i = 0; i < nodes.size(); ++i)
    for (std::size_t j = 0; j < 6; ++j) m.at(i + 1, j) = d.nodes[static_cast<std::size_t>(nodes[i])].coords()[j];
  return exact::kernel(m);
}

bool same_nodes(const HyperplaneSectionType& t, const std::vector<int>& nodes) {
  auto a = t.nodes;
  auto b = nodes;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

}  // namespace

std::vector<Witness> section_type_witnesses(const SegreIgusaData& d, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::vector<Witness> out;
  auto add = [&](std::string row, const ProjectivePoint& h) { out.push_back({std::move(row), h, classify_hyperplane(d, h)}); };
  auto search = [&](const std::string& row, const Matrix& basis, SectionKind kind, const std::vector<int>& nodes) {
    for (int attempt = 0; attempt < 1000; ++attempt) {
      auto h = combination(basis, gen, 10);
      if (!h) continue;
      const auto t = classify_hyperplane(d, *h);
      if (t.kind == kind && (nodes.empty() || same_nodes(t, nodes))) {
        add(row, *h);
        return;
      }
    }
    throw Error("no witness found for " + row);
  };

  search("SmoothCubic", orthogonal_to_nodes(d, {}), SectionKind::SmoothCubic, {});
  search("OneNodalAtNode", orthogonal_to_nodes(d, {0}), SectionKind::OneNodalAtNode, {0});
  search("RNodal(2)", orthogonal_to_nodes(d, {0, 1}), SectionKind::RNodal, {0, 1});
  bool found3 = false;
  for (int a = 0; a < 10 && !found3; ++a)
    for (int b = a + 1; b < 10 && !found3; ++b)
      for (int c = b + 1; c < 10 && !found3; ++c) {
        const Matrix basis = orthogonal_to_nodes(d, {a, b, c});
        for (int attempt = 0; attempt < 20 && !found3; ++attempt) {
          auto h = combination(basis, gen, 10);
          if (!h) continue;
          const auto t = classify_hyperplane(d, *h);
          if (t.kind == SectionKind::RNodal && t.r() == 3) {
            add("RNodal(3)", *h);
            found3 = true;
          }
        }
      }
  if (!found3) throw Error("no witness found for RNodal(3)");
  add("RNodal(4)", ProjectivePoint::from_ints({1, -1, 0, 0, 0, 0}));

  // Tangent hyperplane at a point of the Segre cubic away from the planes.
  const auto param = projective::node_projection_parametrization(d.segre6, d.nodes.front());
  std::uniform_int_distribution<long> dist(-30, 30);
  for (int attempt = 0;; ++attempt) {
    if (attempt == 1000) throw Error("no witness found for OneNodalTangency");
    Vector v;
    for (int i = 0; i < 4; ++i) v.push_back(Scalar(dist(gen)));
    Vector x;
    for (const auto& c : param) x.push_back(exact::evaluate(c, v));
    if (std::all_of(x.begin(), x.end(), [](const Scalar& s) { return s.is_zero(); })) continue;
    const ProjectivePoint pt(x);
    if (projective::is_singular_at(d.segre6, pt)) continue;
    const auto h = geometry::duality_map(d, pt);
    if (classify_hyperplane(d, h).kind == SectionKind::OneNodalTangency) {
      add("OneNodalTangency", h);
      break;
    }
  }

  // A2: the quadric cut on P_1 by the Igusa quartic, searched over small combinations.
  {
    const Matrix basis = orthogonal_to_nodes(d, {0});
    bool found = false;
    for (long a = -3; a <= 3 && !found; ++a)
      for (long b = -3; b <= 3 && !found; ++b)
        for (long c = -3; c <= 3 && !found; ++c)
          for (long e = -3; e <= 3 && !found; ++e) {
            const long coeff[4] = {a, b, c, e};
            Vector v(6, Scalar(0));
            for (std::size_t r = 0; r < 4; ++r)
              for (std::size_t j = 0; j < 6; ++j) v[j] += Scalar(coeff[r]) * basis.at(r, j);
            if (std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); })) continue;
            const ProjectivePoint h(v);
            if (!exact::evaluate(d.igusa6.form(), h.coords()).is_zero()) continue;
            if (classify_hyperplane(d, h).kind == SectionKind::A2AtNode) {
              add("A2AtNode", h);
              found = true;
            }
          }
    if (!found) throw Error("no witness found for A2AtNode");
  }

  add("PlanePlusQuadric", ProjectivePoint::from_ints({1, 1, 2, 2, -3, -3}));
  add("ThreeSegrePlanes", ProjectivePoint::from_ints({2, 2, -1, -1, -1, -1}));
  return out;
}

std::string to_string(DualFiberType t) {
  switch (t) {
    case DualFiberType::TwoPoints: return "TwoPoints";
    case DualFiberType::DoublePoint: return "DoublePoint";
    case DualFiberType::ExcessFiber: return "ExcessFiber";
  }
  return "?";
}

DualFiberType dual_fiber(const SegreIgusaData& d, const ProjectivePoint& h) {
  require_rational_traceless(h);
  for (const auto& l : d.dual_lines)
    if (l.contains(h)) return DualFiberType::ExcessFiber;
  return exact::evaluate(d.igusa6.form(), h.coords()).is_zero() ? DualFiberType::DoublePoint : DualFiberType::TwoPoints;
}

std::string DualHyperplaneSectionType::to_string() const {
  switch (kind) {
    case DualSectionKind::Generic15Nodal: return "Generic15Nodal";
    case DualSectionKind::Kummer16Tangent: return "Kummer16Tangent";
    case DualSectionKind::NonReducedQuadric: return "NonReducedQuadric(p" + std::to_string(node + 1) + ")";
    case DualSectionKind::ContainsSingularLine: return "ContainsSingularLine";
    case DualSectionKind::ThroughCRPoint: return "ThroughCRPoint";
    case DualSectionKind::Unclassified: return "Unclassified(" + diagnostics + ")";
  }
  return "?";
}

DualHyperplaneSectionType classify_dual_hyperplane(const SegreIgusaData& d, const ProjectivePoint& h) {
  require_rational_traceless(h);
  DualHyperplaneSectionType t;
  for (std::size_t i = 0; i < d.nodes.size(); ++i)
    if (d.nodes[i] == h) {
      t.kind = DualSectionKind::NonReducedQuadric;
      t.node = static_cast<int>(i);
      return t;
    }
  for (const auto& pl : d.segre_planes)
    if (pl.plane.contains(h)) {
      t.kind = DualSectionKind::ContainsSingularLine;
      return t;
    }
  for (const auto& q : d.cr_points)
    if (pairing(q.coords(), h.coords()).is_zero()) {
      t.kind = DualSectionKind::ThroughCRPoint;
      return t;
    }
  if (!exact::evaluate(d.segre6.form(), h.coords()).is_zero()) {
    t.kind = DualSectionKind::Generic15Nodal;
    return t;
  }
  if (!projective::is_singular_at(d.segre6, h)) {
    t.kind = DualSectionKind::Kummer16Tangent;
    return t;
  }
  t.diagnostics = "segre=0,singular=1";
  return t;
}

DualProfile oracle_dual_profile(const SegreIgusaData& d, const ProjectivePoint& h, const Field& p) {
  require_rational_traceless(h);
  const Matrix basis = section_basis(reduce(h, p));
  const Polynomial quartic = geometry::restrict_form(d.igusa6.form().in(p), basis);
  DualProfile out;
  out.singular_count = projective::singular_locus_scan(projective::Hypersurface(quartic), p).size();
  out.perfect_square = exact::polynomial_square_root(quartic).has_value();
  return out;
}

std::string DerivedFiber::to_string() const {
  if (kind == Kind::Empty) return "Empty";
  return std::string("FormalDualNumbers(|e|=") + std::to_string(generator_degree) + (singular_point ? ",singular)" : ")");
}

DerivedFiber derived_point_fiber(const SegreIgusaData& d, const ProjectivePoint& h, FiberSide side) {
  const auto& hs = side == FiberSide::Segre ? d.segre6 : d.igusa6;
  DerivedFiber f;
  if (exact::evaluate(hs.form().in(h.field()), h.coords()).is_zero()) {
    f.kind = DerivedFiber::Kind::FormalDualNumbers;
    f.singular_point = projective::is_singular_at(hs.in(h.field()), h);
  }
  return f;
}

}  // namespace segre::sections
