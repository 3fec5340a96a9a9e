#include <algorithm>
#include <numeric>

#include "segre/quiver/algebra.hpp"

namespace segre::quiver {

std::vector<long> canonical_weight() { return {1, 1, 1, 1, 1, 1, -3}; }

bool king_semistable(const std::vector<exact::Vector>& images, const std::vector<long>& theta) {
  if (images.size() != 6 || theta.size() != 7) throw DimensionMismatch("expected dimension vector (1,1,1,1,1,1;2)");
  for (const auto& v : images)
    if (v.size() != 2) throw DimensionMismatch("expected dimension vector (1,1,1,1,1,1;2)");
  if (std::accumulate(theta.begin(), theta.end() - 1, 0L) + 2 * theta[6] != 0) throw Error("weight not orthogonal to d");

  // Candidate sink subspaces: 0, each image line, the plane.
  std::vector<exact::Matrix> subspaces{exact::Matrix(0, 2)};
  for (const auto& v : images)
    if (!(v[0].is_zero() && v[1].is_zero())) subspaces.push_back(exact::Matrix::from_rows({v}, 2));
  subspaces.push_back(exact::Matrix::identity(2));

  for (const auto& u : subspaces) {
    const std::size_t dim_u = u.rows();
    std::vector<std::size_t> allowed;  // sources whose image lies in U
    for (std::size_t i = 0; i < 6; ++i) {
      const bool zero = images[i][0].is_zero() && images[i][1].is_zero();
      if (dim_u == 2 || zero || (dim_u == 1 && exact::rank(exact::stack(u, exact::Matrix::from_rows({images[i]}, 2))) == 1))
        allowed.push_back(i);
    }
    for (std::size_t mask = 0; mask < (std::size_t{1} << allowed.size()); ++mask) {
      const auto count = static_cast<std::size_t>(__builtin_popcountll(mask));
      if ((dim_u == 0 && count == 0) || (dim_u == 2 && count == 6)) continue;
      long value = theta[6] * static_cast<long>(dim_u);
      for (std::size_t k = 0; k < allowed.size(); ++k)
        if (mask >> k & 1) value += theta[allowed[k]];
      if (value > 0) return false;
    }
  }
  return true;
}

long moduli_dimension(const Quiver& q, const DimVector& d) { return 1 - euler_form(q, d, d); }

DimVector projective_dimvector(const GradedQuiverAlgebra& a, int vertex) {
  const auto c = cartan_matrix(a);
  return c.at(static_cast<std::size_t>(vertex));
}

DimVector nakayama(const GradedQuiverAlgebra& a, int vertex) {
  const auto c = cartan_matrix(a);
  DimVector out;
  for (const auto& row : c) out.push_back(row.at(static_cast<std::size_t>(vertex)));
  return out;
}

DimVector reflect_at_sink(const Quiver& q, const DimVector& d, int vertex) {
  if (d.size() != q.vertices) throw DimensionMismatch("dimension vector length mismatch");
  long neighbours = 0;
  for (const auto& a : q.arrows) {
    if (a.source == vertex) throw Error("vertex " + std::to_string(vertex) + " is not a sink");
    if (a.target == vertex) neighbours += d[static_cast<std::size_t>(a.source)];
  }
  DimVector out = d;
  out[static_cast<std::size_t>(vertex)] = neighbours - d[static_cast<std::size_t>(vertex)];
  return out;
}

IntMatrix one_point_extend(const IntMatrix& cartan, const DimVector& m) {
  if (m.size() != cartan.size()) throw DimensionMismatch("module dimension vector length mismatch");
  const std::size_t n = cartan.size();
  IntMatrix out(n + 1, std::vector<long>(n + 1, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out[i][j] = cartan[i][j];
  for (std::size_t j = 0; j < n; ++j) out[n][j] = m[j];
  out[n][n] = 1;
  return out;
}

bool permutation_equivalent(const IntMatrix& a, const IntMatrix& b) {
  if (a.size() != b.size()) return false;
  std::vector<std::size_t> p(a.size());
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (std::size_t i = 0; i < a.size() && ok; ++i)
      for (std::size_t j = 0; j < a.size() && ok; ++j) ok = a[p[i]][p[j]] == b[i][j];
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

long hook_length_dim(const std::vector<int>& partition) {
  if (partition.empty()) throw Error("empty partition");
  for (std::size_t i = 0; i < partition.size(); ++i)
    if (partition[i] <= 0 || (i && partition[i] > partition[i - 1])) throw Error("not a partition");
  long n = std::accumulate(partition.begin(), partition.end(), 0L);
  long num = 1;
  for (long k = 2; k <= n; ++k) num *= k;
  long hooks = 1;
  for (std::size_t i = 0; i < partition.size(); ++i)
    for (int j = 0; j < partition[i]; ++j) {
      long below = 0;
      for (std::size_t k = i + 1; k < partition.size() && partition[k] > j; ++k) ++below;
      hooks *= (partition[i] - j - 1) + below + 1;
    }
  return num / hooks;
}

}  // namespace segre::quiver
