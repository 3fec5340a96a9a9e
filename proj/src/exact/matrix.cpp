#include "segre/exact/matrix.hpp"

#include <sstream>

namespace segre::exact {

Matrix::Matrix(std::size_t rows, std::size_t cols, Field f)
    : rows_(rows), cols_(cols), field_(f), data_(rows * cols, f.zero()) {}

Matrix Matrix::identity(std::size_t n, Field f) {
  Matrix m(n, n, f);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = f.one();
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols, Field f) {
  Matrix m(rows.size(), cols, f);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DimensionMismatch("row length differs from column count");
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = rows[r][c].in(f);
  }
  return m;
}

Matrix Matrix::from_ints(const std::vector<std::vector<long long>>& rows, Field f) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  Matrix m(rows.size(), cols, f);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DimensionMismatch("ragged integer matrix");
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = f.from_int(rows[r][c]);
  }
  return m;
}

Vector Matrix::row(std::size_t r) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector Matrix::column(std::size_t c) const {
  Vector v;
  v.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v.push_back(at(r, c));
  return v;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_, field_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

Matrix Matrix::in(const Field& f) const {
  Matrix m(rows_, cols_, f);
  for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] = data_[i].in(f);
  return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw DimensionMismatch("matrix product shape mismatch");
  Matrix m(rows_, o.cols_, field_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = at(r, k);
      if (a.is_zero()) continue;
      for (std::size_t c = 0; c < o.cols_; ++c) m.at(r, c) += a * o.at(k, c);
    }
  return m;
}

Vector Matrix::operator*(const Vector& v) const {
  if (v.size() != cols_) throw DimensionMismatch("matrix-vector shape mismatch");
  Vector out(rows_, field_.zero());
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (!at(r, c).is_zero()) out[r] += at(r, c) * v[c];
  return out;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  for (std::size_t r = 0; r < rows_; ++r) {
    os << "[";
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? ", " : "") << at(r, c);
    os << "]\n";
  }
  return os.str();
}

Matrix rref(const Matrix& input, std::vector<std::size_t>* pivots) {
  Matrix m = input;
  std::vector<std::size_t> piv;
  std::size_t lead_row = 0;
  for (std::size_t c = 0; c < m.cols() && lead_row < m.rows(); ++c) {
    std::size_t r = lead_row;
    while (r < m.rows() && m.at(r, c).is_zero()) ++r;
    if (r == m.rows()) continue;
    if (r != lead_row)
      for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m.at(r, k), m.at(lead_row, k));
    const Scalar inv = m.at(lead_row, c).inverse();
    for (std::size_t k = c; k < m.cols(); ++k) m.at(lead_row, k) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == lead_row || m.at(i, c).is_zero()) continue;
      const Scalar f = m.at(i, c);
      for (std::size_t k = c; k < m.cols(); ++k)
        if (!m.at(lead_row, k).is_zero()) m.at(i, k) -= f * m.at(lead_row, k);
    }
    piv.push_back(c);
    ++lead_row;
  }
  if (pivots) *pivots = std::move(piv);
  return m;
}

std::size_t rank(const Matrix& m) {
  std::vector<std::size_t> piv;
  rref(m, &piv);
  return piv.size();
}

Matrix row_basis(const Matrix& m) {
  std::vector<std::size_t> piv;
  Matrix r = rref(m, &piv);
  Matrix out(piv.size(), m.cols(), m.field());
  for (std::size_t i = 0; i < piv.size(); ++i)
    for (std::size_t c = 0; c < m.cols(); ++c) out.at(i, c) = r.at(i, c);
  return out;
}

Matrix kernel(const Matrix& m) {
  std::vector<std::size_t> piv;
  Matrix r = rref(m, &piv);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : piv) is_pivot[c] = true;
  const Field f = m.field();
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(m.cols(), f.zero());
    v[free] = f.one();
    for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -r.at(i, free);
    basis.push_back(std::move(v));
  }
  if (basis.empty()) return Matrix(0, m.cols(), f);
  return row_basis(Matrix::from_rows(basis, m.cols(), f));
}

Scalar determinant(const Matrix& input) {
  if (input.rows() != input.cols()) throw DimensionMismatch("determinant of a non-square matrix");
  Matrix m = input;
  const std::size_t n = m.rows();
  Scalar det = m.field().one();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t r = c;
    while (r < n && m.at(r, c).is_zero()) ++r;
    if (r == n) return m.field().zero();
    if (r != c) {
      for (std::size_t k = 0; k < n; ++k) std::swap(m.at(r, k), m.at(c, k));
      det = -det;
    }
    det *= m.at(c, c);
    const Scalar inv = m.at(c, c).inverse();
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m.at(i, c).is_zero()) continue;
      const Scalar f = m.at(i, c) * inv;
      for (std::size_t k = c; k < n; ++k) m.at(i, k) -= f * m.at(c, k);
    }
  }
  return det;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix aug(n, 2 * n, m.field());
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug.at(r, c) = m.at(r, c);
    aug.at(r, n + r) = m.field().one();
  }
  std::vector<std::size_t> piv;
  Matrix red = rref(aug, &piv);
  if (piv.size() < n || piv[n - 1] != n - 1) return std::nullopt;
  Matrix inv(n, n, m.field());
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv.at(r, c) = red.at(r, n + c);
  return inv;
}

Matrix stack(const Matrix& top, const Matrix& bottom) {
  if (top.cols() != bottom.cols()) throw DimensionMismatch("stacking matrices of different widths");
  Matrix m(top.rows() + bottom.rows(), top.cols(), top.field());
  for (std::size_t r = 0; r < top.rows(); ++r)
    for (std::size_t c = 0; c < top.cols(); ++c) m.at(r, c) = top.at(r, c);
  for (std::size_t r = 0; r < bottom.rows(); ++r)
    for (std::size_t c = 0; c < top.cols(); ++c) m.at(top.rows() + r, c) = bottom.at(r, c);
  return m;
}

}  // namespace segre::exact
