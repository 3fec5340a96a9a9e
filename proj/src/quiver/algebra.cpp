#include "segre/quiver/algebra.hpp"

#include <algorithm>

namespace segre::quiver {

using exact::Field;
using exact::Vector;

GradedQuiverAlgebra::GradedQuiverAlgebra(Quiver q, std::vector<Relation> relations, std::string name)
    : name_(std::move(name)), quiver_(std::move(q)), relations_(std::move(relations)) {
  quiver_.validate();
  if (!quiver_.is_acyclic()) throw Error("quiver of " + name_ + " has an oriented cycle");
  for (const auto& r : relations_) {
    if (r.empty()) throw Error("empty relation");
    for (const auto& [c, p] : r) {
      if (p.size() != 2 || p[0] < 0 || p[1] < 0 || static_cast<std::size_t>(p[0]) >= quiver_.arrows.size() ||
          static_cast<std::size_t>(p[1]) >= quiver_.arrows.size())
        throw Error("relations must combine paths of length 2");
      if (quiver_.arrows[static_cast<std::size_t>(p[0])].target != quiver_.arrows[static_cast<std::size_t>(p[1])].source)
        throw Error("relation term is not a path");
      if (source(p) != source(r.front().second) || target(p) != target(r.front().second))
        throw Error("inconsistent relation: terms are not parallel");
    }
  }

  Degree d0;
  for (std::size_t v = 0; v < quiver_.vertices; ++v) d0.paths.push_back(trivial_path(static_cast<int>(v)));
  Degree d1;
  for (std::size_t a = 0; a < quiver_.arrows.size(); ++a) d1.paths.push_back({static_cast<int>(a)});
  degrees_.push_back(std::move(d0));
  if (!d1.paths.empty()) degrees_.push_back(std::move(d1));
  for (auto& d : degrees_) {
    for (std::size_t i = 0; i < d.paths.size(); ++i) d.index[d.paths[i]] = i;
    d.basis = d.paths;
  }

  std::vector<Vector> previous;  // ideal rows of the previous degree, over its paths
  while (degrees_.size() >= 2) {
    const Degree& last = degrees_.back();
    Degree next;
    next.paths = extend(last.paths);
    if (next.paths.empty()) break;
    for (std::size_t i = 0; i < next.paths.size(); ++i) next.index[next.paths[i]] = i;
    std::vector<Vector> rows;
    const std::size_t n = next.paths.size();
    if (degrees_.size() == 2) {
      for (const auto& r : relations_) {
        Vector v(n, Scalar(0));
        for (const auto& [c, p] : r) v[next.index.at(p)] += c;
        rows.push_back(v);
      }
    } else {
      const Degree& prev = degrees_.back();
      for (const auto& row : previous)
        for (std::size_t a = 0; a < quiver_.arrows.size(); ++a) {
          Vector right(n, Scalar(0)), left(n, Scalar(0));
          bool any_r = false, any_l = false;
          for (std::size_t k = 0; k < row.size(); ++k) {
            if (row[k].is_zero()) continue;
            Path pr = prev.paths[k];
            pr.push_back(static_cast<int>(a));
            if (auto it = next.index.find(pr); it != next.index.end()) {
              right[it->second] += row[k];
              any_r = true;
            }
            Path pl{static_cast<int>(a)};
            pl.insert(pl.end(), prev.paths[k].begin(), prev.paths[k].end());
            if (auto it = next.index.find(pl); it != next.index.end()) {
              left[it->second] += row[k];
              any_l = true;
            }
          }
          if (any_r) rows.push_back(right);
          if (any_l) rows.push_back(left);
        }
    }
    if (rows.empty()) {
      next.ideal = Matrix(0, n);
    } else {
      next.ideal = exact::rref(Matrix::from_rows(rows, n), &next.pivots);
      next.ideal = exact::row_basis(next.ideal);
      next.pivots.resize(next.ideal.rows());
    }
    for (std::size_t i = 0; i < n; ++i)
      if (std::find(next.pivots.begin(), next.pivots.end(), i) == next.pivots.end()) next.basis.push_back(next.paths[i]);
    previous.clear();
    for (std::size_t r = 0; r < next.ideal.rows(); ++r) previous.push_back(next.ideal.row(r));
    degrees_.push_back(std::move(next));
  }
  // Trailing degrees with an empty quotient carry no information.
  while (degrees_.size() > 1 && degrees_.back().basis.empty()) degrees_.pop_back();
}

std::vector<Path> GradedQuiverAlgebra::extend(const std::vector<Path>& paths) const {
  std::vector<Path> out;
  for (const auto& p : paths)
    for (std::size_t a = 0; a < quiver_.arrows.size(); ++a)
      if (quiver_.arrows[a].source == target(p)) {
        Path q = p;
        q.push_back(static_cast<int>(a));
        out.push_back(q);
      }
  return out;
}

int GradedQuiverAlgebra::source(const Path& p) const {
  return is_trivial(p) ? -1 - p[0] : quiver_.arrows[static_cast<std::size_t>(p.front())].source;
}

int GradedQuiverAlgebra::target(const Path& p) const {
  return is_trivial(p) ? -1 - p[0] : quiver_.arrows[static_cast<std::size_t>(p.back())].target;
}

std::vector<std::size_t> GradedQuiverAlgebra::graded_dimensions() const {
  std::vector<std::size_t> out;
  for (const auto& d : degrees_) out.push_back(d.basis.size());
  return out;
}

std::size_t GradedQuiverAlgebra::dimension() const {
  std::size_t n = 0;
  for (const auto& d : degrees_) n += d.basis.size();
  return n;
}

const std::vector<Path>& GradedQuiverAlgebra::basis(std::size_t degree) const {
  static const std::vector<Path> empty;
  return degree < degrees_.size() ? degrees_[degree].basis : empty;
}

std::vector<Path> GradedQuiverAlgebra::parallel_basis(int i, int j) const {
  std::vector<Path> out;
  for (const auto& d : degrees_)
    for (const auto& p : d.basis)
      if (source(p) == i && target(p) == j) out.push_back(p);
  return out;
}

GradedQuiverAlgebra::Element GradedQuiverAlgebra::reduce(const Element& x) const {
  Element out;
  std::map<std::size_t, Vector> by_degree;
  for (const auto& [p, c] : x) {
    if (c.is_zero()) continue;
    const std::size_t deg = path_length(p);
    if (deg >= degrees_.size()) continue;  // beyond the top degree everything lies in the ideal
    const Degree& d = degrees_[deg];
    auto& v = by_degree[deg];
    if (v.empty()) v.assign(d.paths.size(), Scalar(0));
    v[d.index.at(p)] += c;
  }
  for (auto& [deg, v] : by_degree) {
    const Degree& d = degrees_[deg];
    for (std::size_t r = 0; r < d.ideal.rows(); ++r) {
      const Scalar f = v[d.pivots[r]];
      if (f.is_zero()) continue;
      for (std::size_t k = 0; k < v.size(); ++k) v[k] -= f * d.ideal.at(r, k);
    }
    for (std::size_t k = 0; k < v.size(); ++k)
      if (!v[k].is_zero()) out[d.paths[k]] = v[k];
  }
  return out;
}

GradedQuiverAlgebra::Element GradedQuiverAlgebra::multiply(const Element& x, const Element& y) const {
  Element raw;
  for (const auto& [p, a] : x)
    for (const auto& [q, b] : y) {
      if (target(p) != source(q)) continue;
      Path r;
      if (is_trivial(p)) r = q;
      else if (is_trivial(q)) r = p;
      else {
        r = p;
        r.insert(r.end(), q.begin(), q.end());
      }
      raw[r] += a * b;
    }
  return reduce(raw);
}

std::size_t GradedQuiverAlgebra::overlap_dimension() const {
  if (relations_.empty()) return 0;
  std::vector<Path> p2;
  for (std::size_t a = 0; a < quiver_.arrows.size(); ++a) p2.push_back({static_cast<int>(a)});
  const auto p3 = extend(extend(p2));
  if (p3.empty()) return 0;
  std::map<Path, std::size_t> index;
  for (std::size_t i = 0; i < p3.size(); ++i) index[p3[i]] = i;
  std::vector<Vector> right, left;
  for (const auto& r : relations_)
    for (std::size_t a = 0; a < quiver_.arrows.size(); ++a) {
      Vector vr(p3.size(), Scalar(0)), vl(p3.size(), Scalar(0));
      bool any_r = false, any_l = false;
      for (const auto& [c, p] : r) {
        Path pr = p;
        pr.push_back(static_cast<int>(a));
        if (auto it = index.find(pr); it != index.end()) vr[it->second] += c, any_r = true;
        Path pl{static_cast<int>(a), p[0], p[1]};
        if (auto it = index.find(pl); it != index.end()) vl[it->second] += c, any_l = true;
      }
      if (any_r) right.push_back(vr);
      if (any_l) left.push_back(vl);
    }
  if (right.empty() || left.empty()) return 0;
  const Matrix R = Matrix::from_rows(right, p3.size()), L = Matrix::from_rows(left, p3.size());
  return exact::rank(R) + exact::rank(L) - exact::rank(exact::stack(R, L));
}

namespace {

Quiver subspace_quiver(std::size_t n) {
  Quiver q{n + 1, {}, {}};
  for (std::size_t i = 0; i < n; ++i) {
    q.arrows.push_back({static_cast<int>(i), static_cast<int>(n), "a" + std::to_string(i + 1)});
    q.vertex_labels.push_back(std::to_string(i + 1));
  }
  q.vertex_labels.push_back("t");
  return q;
}

}  // namespace

std::vector<std::string> builtin_algebra_names() { return {"single_vertex", "subspace5", "subspace6", "quotient5", "blowup_A"}; }

GradedQuiverAlgebra builtin_algebra(const std::string& name) {
  if (name == "single_vertex") return GradedQuiverAlgebra(Quiver{1, {}, {"1"}}, {}, name);
  if (name == "subspace5") return GradedQuiverAlgebra(subspace_quiver(5), {}, name);
  if (name == "subspace6" || name == "6-subspace") return GradedQuiverAlgebra(subspace_quiver(6), {}, "subspace6");
  if (name == "quotient5") {
    Quiver q{6, {}, {"1", "2", "3", "4", "5", "s"}};
    for (int i = 0; i < 5; ++i) q.arrows.push_back({5, i, "b" + std::to_string(i + 1)});
    return GradedQuiverAlgebra(q, {}, name);
  }
  if (name == "blowup_A") {
    // Vertices a, b, c1..c5; arrows w, x, y, z: a -> b and a, b, c, d, e: b -> c_k.
    Quiver q{7, {}, {"a", "b", "c1", "c2", "c3", "c4", "c5"}};
    for (const char* l : {"w", "x", "y", "z"}) q.arrows.push_back({0, 1, l});
    const char* outs[] = {"a", "b", "c", "d", "e"};
    for (int k = 0; k < 5; ++k) q.arrows.push_back({1, 2 + k, outs[k]});
    auto arrow = [&](char first, char second) {
      return Path{static_cast<int>(std::string("wxyz").find(first)), 4 + static_cast<int>(std::string("abcde").find(second))};
    };
    std::vector<Relation> rel;
    for (const char* r : {"xa", "ya", "za", "wb", "yb", "zb", "wc", "xc", "zc", "wd", "xd", "yd"})
      rel.push_back({{Scalar(1), arrow(r[0], r[1])}});
    for (const char* r : {"wx", "xy", "yz"}) rel.push_back({{Scalar(1), arrow(r[0], 'e')}, {Scalar(-1), arrow(r[1], 'e')}});
    return GradedQuiverAlgebra(q, rel, name);
  }
  throw Error("unknown algebra '" + name + "'");
}

IntMatrix cartan_matrix(const GradedQuiverAlgebra& a) {
  const std::size_t n = a.quiver().vertices;
  IntMatrix c(n, std::vector<long>(n, 0));
  for (std::size_t d = 0; d < a.graded_dimensions().size(); ++d)
    for (const auto& p : a.basis(d)) ++c[static_cast<std::size_t>(a.source(p))][static_cast<std::size_t>(a.target(p))];
  return c;
}

IntMatrix projective_gram(const GradedQuiverAlgebra& a) { return cartan_matrix(a); }

namespace {

Matrix to_matrix(const IntMatrix& m) {
  std::vector<std::vector<long long>> rows;
  for (const auto& r : m) rows.emplace_back(r.begin(), r.end());
  return Matrix::from_ints(rows);
}

IntMatrix to_ints(const Matrix& m) {
  IntMatrix out(m.rows(), std::vector<long>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const mpq_class& q = m.at(i, j).rational();
      if (q.get_den() != 1 || !q.get_num().fits_slong_p()) throw Error("matrix entry is not a machine integer");
      out[i][j] = q.get_num().get_si();
    }
  return out;
}

}  // namespace

IntMatrix euler_matrix(const GradedQuiverAlgebra& a) {
  const auto inv = exact::inverse(to_matrix(cartan_matrix(a)));
  if (!inv) throw Error("singular Cartan matrix");
  return to_ints(*inv);
}

long euler_form(const Quiver& q, const DimVector& d, const DimVector& e) {
  if (d.size() != q.vertices || e.size() != q.vertices) throw DimensionMismatch("dimension vector length mismatch");
  long r = 0;
  for (std::size_t v = 0; v < q.vertices; ++v) r += d[v] * e[v];
  for (const auto& a : q.arrows) r -= d[static_cast<std::size_t>(a.source)] * e[static_cast<std::size_t>(a.target)];
  return r;
}

IntMatrix hereditary_euler_matrix(const Quiver& q) {
  IntMatrix m(q.vertices, std::vector<long>(q.vertices, 0));
  for (std::size_t v = 0; v < q.vertices; ++v) m[v][v] = 1;
  for (const auto& a : q.arrows) --m[static_cast<std::size_t>(a.source)][static_cast<std::size_t>(a.target)];
  return m;
}

std::vector<long> coxeter_polynomial(const IntMatrix& cartan) {
  const Matrix c = to_matrix(cartan);
  const auto inv = exact::inverse(c);
  if (!inv) throw Error("singular Cartan matrix");
  Matrix phi = inv->transpose() * c;
  const std::size_t n = phi.rows();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) phi.at(i, j) = -phi.at(i, j);
  // Faddeev-LeVerrier.
  std::vector<Scalar> coeff(n + 1, Scalar(0));
  coeff[n] = 1;
  Matrix m(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    Matrix next = phi * m;
    for (std::size_t i = 0; i < n; ++i) next.at(i, i) += coeff[n - k + 1];
    m = next;
    const Matrix pm = phi * m;
    Scalar tr(0);
    for (std::size_t i = 0; i < n; ++i) tr += pm.at(i, i);
    coeff[n - k] = -tr / Scalar(static_cast<long>(k));
  }
  std::vector<long> out;
  for (const auto& s : coeff) {
    if (s.rational().get_den() != 1) throw Error("non-integral Coxeter polynomial");
    out.push_back(s.rational().get_num().get_si());
  }
  return out;
}

std::vector<long> coxeter_polynomial(const GradedQuiverAlgebra& a) { return coxeter_polynomial(cartan_matrix(a)); }

std::string polynomial_to_string(const std::vector<long>& c) {
  std::string s;
  for (std::size_t k = c.size(); k-- > 0;) {
    if (c[k] == 0) continue;
    const long a = std::labs(c[k]);
    if (!s.empty()) s += c[k] < 0 ? " - " : " + ";
    else if (c[k] < 0) s += "-";
    if (a != 1 || k == 0) s += std::to_string(a);
    if (k > 0) s += k == 1 ? "t" : "t^" + std::to_string(k);
  }
  return s.empty() ? "0" : s;
}

}  // namespace segre::quiver
