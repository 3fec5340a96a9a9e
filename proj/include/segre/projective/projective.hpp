#pragma once

#include <string>
#include <vector>

#include "segre/exact/matrix.hpp"
#include "segre/exact/polynomial.hpp"
#include "segre/projective/fp_scan.hpp"

namespace segre::projective {

using exact::Field;
using exact::Matrix;
using exact::Polynomial;
using exact::Scalar;
using exact::Vector;

class ProjectivePoint {
 public:
  // Scales so the first nonzero coordinate is 1; throws on the zero vector.
  explicit ProjectivePoint(const Vector& coords);
  static ProjectivePoint from_ints(const std::vector<long long>& coords, Field f = Field::rationals());

  const Vector& coords() const noexcept { return coords_; }
  std::size_t size() const noexcept { return coords_.size(); }
  Field field() const { return coords_.front().field(); }
  // Primitive integer representative with positive first nonzero entry (rational points only).
  std::vector<mpz_class> integer_coords() const;
  ProjectivePoint in(const Field& f) const;

  bool operator==(const ProjectivePoint& o) const { return coords_ == o.coords_; }
  bool operator<(const ProjectivePoint& o) const;
  std::string to_string() const;

 private:
  Vector coords_;
};

class LinearSubspace {
 public:
  // Rows span the subspace; reduced to row echelon form, zero rows dropped.
  explicit LinearSubspace(const Matrix& spanning);
  static LinearSubspace of_points(const std::vector<ProjectivePoint>& pts);

  const Matrix& basis() const noexcept { return basis_; }
  std::size_t ambient_size() const noexcept { return basis_.cols(); }
  std::size_t vector_dim() const noexcept { return basis_.rows(); }
  int projective_dim() const noexcept { return static_cast<int>(basis_.rows()) - 1; }
  Field field() const { return basis_.field(); }

  bool contains(const Vector& v) const;
  bool contains(const ProjectivePoint& pt) const { return contains(pt.coords()); }
  bool contains(const LinearSubspace& other) const;
  // Vectors pairing to zero with every basis row; std::nullopt-free: throws if that space is zero.
  LinearSubspace annihilator() const;
  LinearSubspace in(const Field& f) const;
  // Vector-space dimension of the intersection.
  std::size_t intersection_dim(const LinearSubspace& other) const;

  bool operator==(const LinearSubspace& o) const { return basis_ == o.basis_; }

 private:
  Matrix basis_;
};

// A hypersurface {form = 0}. When traceless is set, the ambient space is the hyperplane
// sum x_i = 0 inside P^{n-1} and dual points use traceless representatives.
class Hypersurface {
 public:
  explicit Hypersurface(Polynomial form, bool traceless = false);

  const Polynomial& form() const noexcept { return form_; }
  bool traceless() const noexcept { return traceless_; }
  int degree() const noexcept { return form_.degree(); }
  std::size_t nvars() const noexcept { return form_.nvars(); }
  int ambient_dim() const noexcept { return static_cast<int>(form_.nvars()) - (traceless_ ? 2 : 1); }
  Field field() const { return form_.field(); }

  // Same hypersurface written in the first n-1 coordinates, last = -(sum of the others).
  Hypersurface restricted() const;
  Hypersurface in(const Field& f) const;

 private:
  Polynomial form_;
  bool traceless_;
};

// Matrix sending the first n-1 coordinates to the traceless hyperplane (last = -sum).
Matrix traceless_lift_map(std::size_t n, Field f = Field::rationals());
Vector lift_traceless(const Vector& restricted);
bool is_traceless(const Vector& v);
// Projection along (1,...,1) onto sum x_i = 0.
Vector traceless_projection(const Vector& v);

std::vector<ProjectivePoint> singular_locus_scan(const Hypersurface& hs, const Field& p, unsigned threads = 0);
bool is_singular_at(const Hypersurface& hs, const ProjectivePoint& pt);
ProjectivePoint tangent_hyperplane(const Hypersurface& hs, const ProjectivePoint& pt);
int hessian_corank_at(const Hypersurface& hs, const ProjectivePoint& pt);
bool contains_subspace(const Hypersurface& hs, const LinearSubspace& sub);
// x(v) = c(v) node - q(v) v, where f(s node + v) = s q(v) + c(v) with v_k = 0 at the node's
// first nonzero coordinate k; returns one polynomial per coordinate in n-1 parameters.
std::vector<Polynomial> node_projection_parametrization(const Hypersurface& hs, const ProjectivePoint& node);

bool on_hypersurface(const Hypersurface& hs, const ProjectivePoint& pt);

}  // namespace segre::projective
