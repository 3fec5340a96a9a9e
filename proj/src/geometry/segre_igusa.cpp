#include "segre/geometry/segre_igusa.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "segre/exact/parse.hpp"

namespace segre::geometry {

using exact::Matrix;
using projective::is_traceless;

namespace {

const std::vector<std::string> kNames = {"x0", "x1", "x2", "x3", "x4", "x5"};

std::vector<PairPartition> all_partitions() {
  std::vector<PairPartition> out;
  for (int b = 1; b < 6; ++b) {
    std::vector<int> rest;
    for (int i = 1; i < 6; ++i)
      if (i != b) rest.push_back(i);
    for (int k = 1; k < 4; ++k) {
      std::vector<int> r2;
      for (int j = 1; j < 4; ++j)
        if (j != k) r2.push_back(rest[static_cast<std::size_t>(j)]);
      out.push_back({Pair{0, b}, Pair{rest[0], rest[static_cast<std::size_t>(k)]}, Pair{r2[0], r2[1]}});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Vector unit(int i, long long s = 1) {
  Vector v(6, Scalar(0));
  v[static_cast<std::size_t>(i)] = Scalar(s);
  return v;
}

Vector add(const Vector& a, const Vector& b) {
  Vector v;
  for (std::size_t i = 0; i < a.size(); ++i) v.push_back(a[i] + b[i]);
  return v;
}

Matrix ones_row() { return Matrix::from_ints({{1, 1, 1, 1, 1, 1}}); }

// {x : <x, w> = 0, sum x = 0}.
LinearSubspace traceless_annihilator(const Vector& w) {
  Matrix m = exact::stack(ones_row(), Matrix::from_rows({w}, 6));
  return LinearSubspace(exact::kernel(m));
}

[[noreturn]] void invariant_failure(const std::string& what) { throw Error("construction invariant failed: " + what); }

}  // namespace

std::string pair_label(const Pair& p) { return std::to_string(p.first) + std::to_string(p.second); }

std::string partition_label(const PairPartition& p) {
  return "{" + pair_label(p[0]) + "|" + pair_label(p[1]) + "|" + pair_label(p[2]) + "}";
}

Scalar pairing(const Vector& x, const Vector& y) {
  if (x.size() != y.size()) throw DimensionMismatch("pairing vectors of different lengths");
  Scalar s = x.front().field().zero();
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

Polynomial restrict_form(const Polynomial& form, const Matrix& basis) {
  return exact::substitute_linear(form, basis.in(form.field()).transpose());
}

Matrix quadric_matrix(const Polynomial& q) {
  const Field f = q.field();
  Matrix m(q.nvars(), q.nvars(), f);
  const Scalar half = f.from_int(2).inverse();
  for (const auto& [e, c] : q.terms()) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < e.size(); ++i)
      for (int k = 0; k < e[i]; ++k) idx.push_back(i);
    if (idx.size() != 2) throw Error("not a quadratic form");
    if (idx[0] == idx[1]) {
      m.at(idx[0], idx[0]) += c;
    } else {
      m.at(idx[0], idx[1]) += c * half;
      m.at(idx[1], idx[0]) += c * half;
    }
  }
  return m;
}

SegreIgusaData build_all() {
  const Polynomial cube = exact::parse_polynomial("x0^3+x1^3+x2^3+x3^3+x4^3+x5^3", kNames);
  const Polynomial quartic = exact::parse_polynomial(
      "(x0^2+x1^2+x2^2+x3^2+x4^2+x5^2)^2 - 4*(x0^4+x1^4+x2^4+x3^4+x4^4+x5^4)", kNames);
  const Hypersurface segre6(cube, true), igusa6(quartic, true);

  std::vector<ProjectivePoint> nodes;
  for (int a = 1; a < 6; ++a)
    for (int b = a + 1; b < 6; ++b) {
      std::vector<long long> v(6, -1);
      v[0] = v[static_cast<std::size_t>(a)] = v[static_cast<std::size_t>(b)] = 1;
      nodes.push_back(ProjectivePoint::from_ints(v));
    }
  std::sort(nodes.begin(), nodes.end(), [](const auto& x, const auto& y) { return y < x; });

  std::vector<SegrePlane> planes;
  std::vector<LinearSubspace> lines;
  for (const auto& part : all_partitions()) {
    std::vector<Vector> rows;
    for (const auto& [a, b] : part) rows.push_back(add(unit(a), unit(b, -1)));
    LinearSubspace plane(Matrix::from_rows(rows, 6));
    planes.push_back({part, partition_label(part), plane});
    lines.push_back(LinearSubspace(exact::kernel(exact::stack(plane.basis(), ones_row()))));
  }

  std::vector<LabeledHyperplane> t_planes, h_planes;
  std::vector<ProjectivePoint> cr_points;
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j) {
      const Vector t = add(unit(i), unit(j, -1));
      t_planes.push_back({{i, j}, "T" + pair_label({i, j}), traceless_annihilator(t), ProjectivePoint(t)});
      const Vector h = add(unit(i), unit(j));
      ProjectivePoint q(projective::traceless_projection(h));
      cr_points.push_back(q);
      h_planes.push_back({{i, j}, "H" + pair_label({i, j}), traceless_annihilator(h), q});
    }

  std::vector<LinearSubspace> p_hyperplanes;
  for (const auto& n : nodes) p_hyperplanes.push_back(traceless_annihilator(n.coords()));

  SegreIgusaData d{segre6, segre6.restricted(), igusa6, igusa6.restricted(), nodes, planes, t_planes, h_planes,
                   p_hyperplanes, lines, cr_points};

  for (std::size_t i = 0; i < d.nodes.size(); ++i) {
    if (!is_traceless(d.nodes[i].coords())) invariant_failure(d.node_label(i) + " is not traceless");
    if (!projective::is_singular_at(d.segre6, d.nodes[i])) invariant_failure(d.node_label(i) + " is not singular");
  }
  for (const auto& pl : d.segre_planes)
    if (!projective::contains_subspace(d.segre6, pl.plane)) invariant_failure("plane " + pl.label + " not on the cubic");
  const auto grad = exact::gradient(d.igusa6.form());
  for (std::size_t k = 0; k < d.dual_lines.size(); ++k) {
    const auto& basis = d.dual_lines[k].basis();
    // Singular along the line: the traceless part of the gradient vanishes identically.
    std::vector<Polynomial> g;
    for (const auto& gi : grad) g.push_back(restrict_form(gi, basis));
    Polynomial mean(g.front().nvars());
    for (const auto& gi : g) mean += gi;
    mean *= Scalar(mpq_class(1, 6));
    for (const auto& gi : g)
      if (!(gi - mean).is_zero()) invariant_failure("dual line of " + d.segre_planes[k].label + " is not singular");
    if (!restrict_form(d.igusa6.form(), basis).is_zero())
      invariant_failure("dual line of " + d.segre_planes[k].label + " is not on the quartic");
  }
  std::vector<int> per_point(d.cr_points.size(), 0);
  for (std::size_t k = 0; k < d.dual_lines.size(); ++k) {
    int on = 0;
    for (std::size_t q = 0; q < d.cr_points.size(); ++q)
      if (d.dual_lines[k].contains(d.cr_points[q])) {
        ++on;
        ++per_point[q];
      }
    if (on != 3) invariant_failure("dual line of " + d.segre_planes[k].label + " meets " + std::to_string(on) + " points");
  }
  for (std::size_t q = 0; q < per_point.size(); ++q)
    if (per_point[q] != 3) invariant_failure("point q" + pair_label(d.h_planes[q].pair) + " lies on the wrong number of lines");
  return d;
}

const SegreIgusaData& data() {
  static const SegreIgusaData instance = build_all();
  return instance;
}

std::string IncidenceReport::signature() const {
  auto uniform = [](const std::vector<int>& v) { return !v.empty() && std::all_of(v.begin(), v.end(), [&](int x) { return x == v[0]; }); };
  auto part = [&](const std::vector<int>& v) {
    return std::to_string(v.size()) + "_" + (uniform(v) ? std::to_string(v[0]) : std::string("?"));
  };
  return "(" + part(row_sums) + "," + part(col_sums) + ")";
}

std::string IncidenceReport::expected_signature() const {
  return "(" + std::to_string(row_labels.size()) + "_" + std::to_string(expected_row_sum) + "," +
         std::to_string(col_labels.size()) + "_" + std::to_string(expected_col_sum) + ")";
}

IncidenceReport make_incidence_report(std::string name, std::vector<std::string> rows, std::vector<std::string> cols,
                                      std::vector<std::vector<int>> incidence, int expected_row, int expected_col) {
  IncidenceReport r;
  r.name = std::move(name);
  r.row_labels = std::move(rows);
  r.col_labels = std::move(cols);
  r.incidence = std::move(incidence);
  r.expected_row_sum = expected_row;
  r.expected_col_sum = expected_col;
  r.col_sums.assign(r.col_labels.size(), 0);
  for (std::size_t i = 0; i < r.incidence.size(); ++i) {
    int s = 0;
    for (std::size_t j = 0; j < r.incidence[i].size(); ++j) {
      s += r.incidence[i][j];
      r.col_sums[j] += r.incidence[i][j];
    }
    r.row_sums.push_back(s);
    if (s != expected_row) r.failures.push_back("row " + r.row_labels[i] + " has " + std::to_string(s));
  }
  for (std::size_t j = 0; j < r.col_sums.size(); ++j)
    if (r.col_sums[j] != expected_col) r.failures.push_back("column " + r.col_labels[j] + " has " + std::to_string(r.col_sums[j]));
  r.pass = r.failures.empty();
  return r;
}

IncidenceReport planes_nodes_report(const std::vector<SegrePlane>& planes, const std::vector<ProjectivePoint>& nodes) {
  std::vector<std::string> rows, cols;
  std::vector<std::vector<int>> m;
  for (const auto& pl : planes) {
    rows.push_back(pl.label);
    std::vector<int> r;
    for (const auto& n : nodes) r.push_back(pl.plane.contains(n) ? 1 : 0);
    m.push_back(r);
  }
  for (std::size_t i = 0; i < nodes.size(); ++i) cols.push_back("p" + std::to_string(i + 1));
  return make_incidence_report("segre planes x nodes", rows, cols, m, 4, 6);
}

IncidenceReport lines_points_report(const std::vector<LinearSubspace>& lines, const std::vector<ProjectivePoint>& points) {
  std::vector<std::string> rows, cols;
  std::vector<std::vector<int>> m;
  for (std::size_t k = 0; k < lines.size(); ++k) {
    rows.push_back("l" + std::to_string(k + 1));
    std::vector<int> r;
    for (const auto& q : points) r.push_back(lines[k].contains(q) ? 1 : 0);
    m.push_back(r);
  }
  for (std::size_t i = 0; i < points.size(); ++i) cols.push_back("q" + std::to_string(i + 1));
  return make_incidence_report("dual lines x cr points", rows, cols, m, 3, 3);
}

std::pair<IncidenceReport, IncidenceReport> verify_incidences(const SegreIgusaData& d) {
  auto a = planes_nodes_report(d.segre_planes, d.nodes);
  std::vector<std::string> cols;
  for (std::size_t i = 0; i < d.nodes.size(); ++i) cols.push_back(d.node_label(i));
  a.col_labels = cols;
  auto b = lines_points_report(d.dual_lines, d.cr_points);
  for (std::size_t k = 0; k < d.segre_planes.size(); ++k) b.row_labels[k] = "l" + d.segre_planes[k].label;
  for (std::size_t q = 0; q < d.h_planes.size(); ++q) b.col_labels[q] = "q" + pair_label(d.h_planes[q].pair);
  return {a, b};
}

ProjectivePoint duality_map(const SegreIgusaData& d, const ProjectivePoint& x) {
  const Hypersurface s = d.segre6.in(x.field());
  if (!projective::on_hypersurface(s, x)) throw Error("point " + x.to_string() + " is not on the Segre cubic");
  if (projective::is_singular_at(s, x)) throw Error("point " + x.to_string() + " is a node of the Segre cubic");
  return projective::tangent_hyperplane(s, x);
}

namespace {

// Traceless gradient of the cubic composed with the parametrization from p1.
std::vector<Polynomial> gauss_image(const SegreIgusaData& d, const Field& f) {
  const Hypersurface s = d.segre6.in(f);
  const auto x = projective::node_projection_parametrization(s, d.nodes.front().in(f));
  std::vector<Polynomial> y;
  for (const auto& g : exact::gradient(s.form())) y.push_back(exact::compose(g, x));
  Polynomial mean(y.front().nvars(), f);
  for (const auto& yi : y) mean += yi;
  mean *= f.from_int(6).inverse();
  for (auto& yi : y) yi -= mean;
  return y;
}

}  // namespace

bool verify_duality_identity(const SegreIgusaData& d, const std::optional<Polynomial>& quartic) {
  const Polynomial& q = quartic ? *quartic : d.igusa6.form();
  if (q.nvars() != 6) throw DimensionMismatch("the quartic must be in six variables");
  return exact::compose(q, gauss_image(d, q.field())).is_zero();
}

std::size_t duality_identity_samples(const SegreIgusaData& d, const Field& p, std::size_t samples, std::uint64_t seed) {
  const Hypersurface s = d.segre6.in(p);
  const auto x = projective::node_projection_parametrization(s, d.nodes.front().in(p));
  const auto grad = exact::gradient(s.form());
  const Polynomial q = d.igusa6.form().in(p);
  std::mt19937_64 gen(seed);
  std::size_t zeros = 0;
  for (std::size_t k = 0; k < samples; ++k) {
    Vector v;
    for (int i = 0; i < 4; ++i) v.push_back(Scalar::residue(static_cast<long long>(gen() % p.modulus()), p));
    Vector pt, y;
    for (const auto& xi : x) pt.push_back(exact::evaluate(xi, v));
    for (const auto& g : grad) y.push_back(exact::evaluate(g, pt));
    if (exact::evaluate(q, projective::traceless_projection(y)).is_zero()) ++zeros;
  }
  return zeros;
}

bool SpecialSectionsReport::pass() const {
  auto ok = [](const auto& v) { return std::all_of(v.begin(), v.end(), [](const auto& e) { return e.pass; }); };
  return t_sections.size() == 15 && h_sections.size() == 15 && p_sections.size() == 10 && ok(t_sections) &&
         ok(h_sections) && ok(p_sections);
}

SpecialSectionsReport verify_special_sections(const SegreIgusaData& d, const Field& p) {
  SpecialSectionsReport rep;
  for (const auto& t : d.t_planes) {
    const auto basis = t.hyperplane.in(p).basis();
    Hypersurface section(restrict_form(d.segre6.form().in(p), basis));
    auto pts = projective::singular_locus_scan(section, p);
    std::vector<int> cor;
    for (const auto& pt : pts) cor.push_back(projective::hessian_corank_at(section, pt));
    const bool ok = pts.size() == 4 && std::all_of(cor.begin(), cor.end(), [](int c) { return c == 0; });
    rep.t_sections.push_back({t.label, pts.size(), cor, ok});
  }
  for (const auto& h : d.h_planes) {
    const auto& basis = h.hyperplane.basis();
    const Polynomial cubic = restrict_form(d.segre6.form(), basis);
    Polynomial product = Polynomial::constant(basis.rows(), Scalar(1));
    std::vector<std::string> names;
    for (const auto& pl : d.segre_planes) {
      auto it = std::find(pl.pairs.begin(), pl.pairs.end(), h.pair);
      if (it == pl.pairs.end()) continue;
      names.push_back(pl.label);
      // Inside H the plane is cut by x_a + x_b for the next pair of the partition.
      const Pair other = pl.pairs[(static_cast<std::size_t>(it - pl.pairs.begin()) + 1) % 3];
      Vector w(6, Scalar(0));
      w[static_cast<std::size_t>(other.first)] = 1;
      w[static_cast<std::size_t>(other.second)] = 1;
      product = product * restrict_form(Polynomial::linear(w), basis);
    }
    Scalar factor = 0;
    bool ok = names.size() == 3 && !cubic.is_zero() && !product.is_zero();
    if (ok) {
      factor = cubic.leading_term().second / product.coefficient(cubic.leading_term().first);
      ok = !product.coefficient(cubic.leading_term().first).is_zero() && cubic == product * factor;
    }
    rep.h_sections.push_back({h.label, names, factor, ok});
  }
  for (std::size_t i = 0; i < d.p_hyperplanes.size(); ++i) {
    const Polynomial quartic = restrict_form(d.igusa6.form(), d.p_hyperplanes[i].basis());
    auto root = exact::polynomial_square_root(quartic);
    SpecialSectionsReport::PEntry e{"P" + std::to_string(i + 1), Polynomial(4), Scalar(0), 0, false};
    if (root) {
      e.root = root->root;
      e.scale = root->scale;
      e.quadric_rank = exact::rank(quadric_matrix(root->root));
      e.pass = root->root * root->root == quartic * root->scale && e.quadric_rank == 4;
    }
    rep.p_sections.push_back(e);
  }
  return rep;
}

long long plucker_teissier_degree(long long d, long long n, long long m) {
  if (d < 2 || n < 2 || m < 0) throw Error("Plucker-Teissier formula needs d >= 2, n >= 2, m >= 0");
  long long v = d;
  for (long long k = 1; k < n; ++k) v *= d - 1;
  v -= 2 * m;
  if (v < 0) throw Error("invalid input combination: negative dual degree");
  return v;
}

}  // namespace segre::geometry
