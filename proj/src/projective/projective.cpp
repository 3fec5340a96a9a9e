#include "segre/projective/projective.hpp"

#include <algorithm>
#include <sstream>

namespace segre::projective {

ProjectivePoint::ProjectivePoint(const Vector& coords) : coords_(coords) {
  if (coords_.empty()) throw Error("projective point with no coordinates");
  const std::uint64_t p = coords_.front().modulus();
  for (const auto& c : coords_)
    if (c.modulus() != p) throw ModulusMismatch("point coordinates over different fields");
  auto lead = std::find_if(coords_.begin(), coords_.end(), [](const Scalar& s) { return !s.is_zero(); });
  if (lead == coords_.end()) throw Error("the zero vector is not a projective point");
  const Scalar inv = lead->inverse();
  for (auto& c : coords_) c *= inv;
}

ProjectivePoint ProjectivePoint::from_ints(const std::vector<long long>& coords, Field f) {
  Vector v;
  for (long long c : coords) v.push_back(f.from_int(c));
  return ProjectivePoint(v);
}

std::vector<mpz_class> ProjectivePoint::integer_coords() const {
  mpz_class l = 1;
  for (const auto& c : coords_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.rational().get_den().get_mpz_t());
  std::vector<mpz_class> out;
  for (const auto& c : coords_) out.push_back(mpz_class(c.rational() * l));
  return out;
}

ProjectivePoint ProjectivePoint::in(const Field& f) const {
  if (f.modulus() == field().modulus()) return *this;
  Vector v;
  for (const auto& z : integer_coords()) v.push_back(Scalar(mpq_class(z)).in(f));
  return ProjectivePoint(v);
}

bool ProjectivePoint::operator<(const ProjectivePoint& o) const {
  if (field().is_rational() && o.field().is_rational()) return integer_coords() < o.integer_coords();
  return coords_ < o.coords_;
}

std::string ProjectivePoint::to_string() const {
  std::ostringstream os;
  os << "(";
  if (field().is_rational()) {
    auto z = integer_coords();
    for (std::size_t i = 0; i < z.size(); ++i) os << (i ? ":" : "") << z[i].get_str();
  } else {
    for (std::size_t i = 0; i < coords_.size(); ++i) os << (i ? ":" : "") << coords_[i];
  }
  os << ")";
  return os.str();
}

LinearSubspace::LinearSubspace(const Matrix& spanning) : basis_(exact::row_basis(spanning)) {
  if (basis_.rows() == 0) throw Error("linear subspace spanned by zero vectors");
}

LinearSubspace LinearSubspace::of_points(const std::vector<ProjectivePoint>& pts) {
  if (pts.empty()) throw Error("no points given");
  std::vector<Vector> rows;
  for (const auto& p : pts) rows.push_back(p.coords());
  return LinearSubspace(Matrix::from_rows(rows, pts.front().size(), pts.front().field()));
}

bool LinearSubspace::contains(const Vector& v) const {
  if (v.size() != ambient_size()) throw DimensionMismatch("vector length differs from the ambient dimension");
  Matrix row = Matrix::from_rows({v}, v.size(), field());
  return exact::rank(exact::stack(basis_, row)) == basis_.rows();
}

bool LinearSubspace::contains(const LinearSubspace& other) const {
  if (other.ambient_size() != ambient_size()) throw DimensionMismatch("subspaces in different ambients");
  return exact::rank(exact::stack(basis_, other.basis_.in(field()))) == basis_.rows();
}

LinearSubspace LinearSubspace::annihilator() const { return LinearSubspace(exact::kernel(basis_)); }

LinearSubspace LinearSubspace::in(const Field& f) const {
  if (f == field()) return *this;
  // Clear denominators row by row before reducing.
  Matrix m(basis_.rows(), basis_.cols(), f);
  for (std::size_t r = 0; r < basis_.rows(); ++r) {
    mpz_class l = 1;
    for (std::size_t c = 0; c < basis_.cols(); ++c)
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), basis_.at(r, c).rational().get_den().get_mpz_t());
    for (std::size_t c = 0; c < basis_.cols(); ++c) m.at(r, c) = Scalar(basis_.at(r, c).rational() * l).in(f);
  }
  return LinearSubspace(m);
}

std::size_t LinearSubspace::intersection_dim(const LinearSubspace& other) const {
  const std::size_t sum = exact::rank(exact::stack(basis_, other.basis_.in(field())));
  return basis_.rows() + other.basis_.rows() - sum;
}

Hypersurface::Hypersurface(Polynomial form, bool traceless) : form_(std::move(form)), traceless_(traceless) {
  if (form_.is_zero()) throw Error("hypersurface with zero equation");
  if (form_.degree() < 1 || !form_.is_homogeneous()) throw Error("hypersurface equation must be homogeneous of positive degree");
  if (traceless_ && form_.nvars() < 3) throw Error("traceless hypersurface needs at least three variables");
}

Hypersurface Hypersurface::restricted() const {
  if (!traceless_) return *this;
  return Hypersurface(exact::substitute_linear(form_, traceless_lift_map(form_.nvars(), form_.field())));
}

Hypersurface Hypersurface::in(const Field& f) const { return Hypersurface(form_.in(f), traceless_); }

Matrix traceless_lift_map(std::size_t n, Field f) {
  Matrix m(n, n - 1, f);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    m.at(i, i) = f.one();
    m.at(n - 1, i) = -f.one();
  }
  return m;
}

Vector lift_traceless(const Vector& restricted) {
  Vector v = restricted;
  Scalar s = restricted.front().field().zero();
  for (const auto& c : restricted) s += c;
  v.push_back(-s);
  return v;
}

bool is_traceless(const Vector& v) {
  Scalar s = v.front().field().zero();
  for (const auto& c : v) s += c;
  return s.is_zero();
}

Vector traceless_projection(const Vector& v) {
  const Field f = v.front().field();
  Scalar mean = f.zero();
  for (const auto& c : v) mean += c;
  mean /= f.from_int(static_cast<long long>(v.size()));
  Vector out;
  for (const auto& c : v) out.push_back(c - mean);
  return out;
}

namespace {

void check_same_field(const Hypersurface& hs, const ProjectivePoint& pt) {
  if (hs.field() != pt.field()) throw ModulusMismatch("hypersurface and point over different fields");
  if (hs.nvars() != pt.size()) throw DimensionMismatch("point length differs from the variable count");
}

Vector values(const std::vector<Polynomial>& fs, const Vector& v) {
  Vector out;
  for (const auto& f : fs) out.push_back(exact::evaluate(f, v));
  return out;
}

bool all_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

// Restricted coordinates of a traceless point.
ProjectivePoint drop_last(const ProjectivePoint& pt) {
  Vector v(pt.coords().begin(), pt.coords().end() - 1);
  return ProjectivePoint(v);
}

}  // namespace

bool on_hypersurface(const Hypersurface& hs, const ProjectivePoint& pt) {
  check_same_field(hs, pt);
  if (hs.traceless() && !is_traceless(pt.coords())) return false;
  return exact::evaluate(hs.form(), pt.coords()).is_zero();
}

std::vector<ProjectivePoint> singular_locus_scan(const Hypersurface& hs, const Field& p, unsigned threads) {
  if (p.is_rational()) throw Error("singular-locus scans run over a prime field");
  if (hs.field() != p) throw ModulusMismatch("hypersurface is not reduced modulo " + std::to_string(p.modulus()));
  if (static_cast<std::uint64_t>(hs.degree()) % p.modulus() == 0)
    throw Error("the prime divides the degree of the hypersurface");
  const Hypersurface base = hs.restricted();
  std::vector<FpForm> forms;
  for (const auto& d : exact::gradient(base.form())) forms.push_back(compile_fp(d));
  forms.push_back(compile_fp(base.form()));
  std::vector<ProjectivePoint> out;
  for (const auto& z : common_projective_zeros(forms, threads)) {
    Vector v;
    for (auto c : z) v.push_back(Scalar::residue(static_cast<long long>(c), p));
    out.emplace_back(hs.traceless() ? lift_traceless(v) : v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_singular_at(const Hypersurface& hs, const ProjectivePoint& pt) {
  check_same_field(hs, pt);
  if (hs.traceless()) {
    if (!is_traceless(pt.coords())) return false;
    return is_singular_at(hs.restricted(), drop_last(pt));
  }
  if (!exact::evaluate(hs.form(), pt.coords()).is_zero()) return false;
  return all_zero(values(exact::gradient(hs.form()), pt.coords()));
}

ProjectivePoint tangent_hyperplane(const Hypersurface& hs, const ProjectivePoint& pt) {
  check_same_field(hs, pt);
  if (!on_hypersurface(hs, pt)) throw Error("point " + pt.to_string() + " is not on the hypersurface");
  Vector g = values(exact::gradient(hs.form()), pt.coords());
  if (hs.traceless()) g = traceless_projection(g);
  if (all_zero(g)) throw Error("tangent hyperplane undefined at the singular point " + pt.to_string());
  return ProjectivePoint(g);
}

int hessian_corank_at(const Hypersurface& hs, const ProjectivePoint& pt) {
  check_same_field(hs, pt);
  if (hs.traceless()) {
    if (!is_singular_at(hs, pt)) throw Error("point " + pt.to_string() + " is not singular");
    return hessian_corank_at(hs.restricted(), drop_last(pt));
  }
  if (!is_singular_at(hs, pt)) throw Error("point " + pt.to_string() + " is not singular");
  const std::size_t n = hs.nvars();
  const auto grad = exact::gradient(hs.form());
  Matrix h(n, n, hs.field());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) h.at(i, j) = exact::evaluate(exact::derivative(grad[i], j), pt.coords());
  auto chart_corank = [&](std::size_t k) {
    Matrix m(n - 1, n - 1, hs.field());
    for (std::size_t i = 0, r = 0; i < n; ++i) {
      if (i == k) continue;
      for (std::size_t j = 0, c = 0; j < n; ++j) {
        if (j == k) continue;
        m.at(r, c++) = h.at(i, j);
      }
      ++r;
    }
    return static_cast<int>(n - 1 - exact::rank(m));
  };
  std::vector<std::size_t> charts;
  for (std::size_t i = 0; i < n; ++i)
    if (!pt.coords()[i].is_zero()) charts.push_back(i);
  const int corank = chart_corank(charts.front());
  if (charts.size() > 1 && chart_corank(charts[1]) != corank)
    throw std::logic_error("Hessian corank depends on the chart at " + pt.to_string());
  return corank;
}

bool contains_subspace(const Hypersurface& hs, const LinearSubspace& sub) {
  if (sub.ambient_size() != hs.nvars()) throw DimensionMismatch("subspace and hypersurface in different ambients");
  const LinearSubspace s = sub.in(hs.field());
  if (hs.traceless())
    for (std::size_t r = 0; r < s.vector_dim(); ++r)
      if (!is_traceless(s.basis().row(r))) return false;
  return exact::substitute_linear(hs.form(), s.basis().transpose()).is_zero();
}

std::vector<Polynomial> node_projection_parametrization(const Hypersurface& hs, const ProjectivePoint& node) {
  check_same_field(hs, node);
  if (hs.degree() != 3) throw Error("projection from a node needs a cubic");
  if (hs.traceless()) {
    auto inner = node_projection_parametrization(hs.restricted(), drop_last(node));
    Polynomial last(inner.front().nvars(), hs.field());
    for (const auto& x : inner) last -= x;
    inner.push_back(last);
    return inner;
  }
  if (!on_hypersurface(hs, node)) throw Error("node " + node.to_string() + " is not on the cubic");
  if (!is_singular_at(hs, node)) throw Error("point " + node.to_string() + " is not singular");
  const std::size_t n = hs.nvars();
  const Field f = hs.field();
  const auto& a = node.coords();
  const std::size_t k = static_cast<std::size_t>(
      std::find_if(a.begin(), a.end(), [](const Scalar& s) { return !s.is_zero(); }) - a.begin());
  // Parameters v (n-1 of them) and an auxiliary variable s at index n-1.
  std::vector<Polynomial> v(n, Polynomial(n, f)), images;
  for (std::size_t i = 0, j = 0; i < n; ++i)
    if (i != k) v[i] = Polynomial::variable(n, j++, f);
  const Polynomial s = Polynomial::variable(n, n - 1, f);
  for (std::size_t i = 0; i < n; ++i) images.push_back(s * a[i] + v[i]);
  const Polynomial g = exact::compose(hs.form(), images);
  Polynomial q(n - 1, f), c(n - 1, f);
  for (const auto& [e, coeff] : g.terms()) {
    exact::Exponents short_e(e.begin(), e.end() - 1);
    if (e.back() == 1) q.add_term(short_e, coeff);
    else if (e.back() == 0) c.add_term(short_e, coeff);
    else throw std::logic_error("cubic does not vanish to order two at the node");
  }
  std::vector<Polynomial> out;
  for (std::size_t i = 0; i < n; ++i) {
    Polynomial vi(n - 1, f);
    for (const auto& [e, coeff] : v[i].terms()) vi.add_term(exact::Exponents(e.begin(), e.end() - 1), coeff);
    out.push_back(c * a[i] - q * vi);
  }
  return out;
}

}  // namespace segre::projective
