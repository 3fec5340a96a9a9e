#pragma once

#include "segre/quiver/quiver.hpp"

namespace segre::quiver {

// kQ/I with I generated by homogeneous length-2 relations, graded by path length.
class GradedQuiverAlgebra {
 public:
  // Throws segre::Error for cyclic quivers or relations that are not combinations of parallel length-2 paths.
  GradedQuiverAlgebra(Quiver q, std::vector<Relation> relations, std::string name = "");

  const std::string& name() const noexcept { return name_; }
  const Quiver& quiver() const noexcept { return quiver_; }
  const std::vector<Relation>& relations() const noexcept { return relations_; }
  // Dimensions of the graded pieces, degree 0 first.
  std::vector<std::size_t> graded_dimensions() const;
  std::size_t dimension() const;
  // Paths of the quotient basis in degree d (standard monomials).
  const std::vector<Path>& basis(std::size_t degree) const;
  // Basis paths from i to j, all degrees.
  std::vector<Path> parallel_basis(int i, int j) const;
  int source(const Path& p) const;
  int target(const Path& p) const;

  // Linear combination of paths; reduce() returns the normal form over the quotient basis.
  using Element = std::map<Path, Scalar>;
  Element reduce(const Element& x) const;
  Element multiply(const Element& x, const Element& y) const;

  // Dimension of the third term of the minimal bimodule resolution: the overlaps (I (x) Q_1) meet (Q_1 (x) I).
  std::size_t overlap_dimension() const;

 private:
  struct Degree {
    std::vector<Path> paths;              // all paths of this length
    std::map<Path, std::size_t> index;
    Matrix ideal;                         // reduced echelon rows spanning I in this degree
    std::vector<std::size_t> pivots;
    std::vector<Path> basis;              // non-pivot paths
  };
  std::vector<Path> extend(const std::vector<Path>& paths) const;

  std::string name_;
  Quiver quiver_;
  std::vector<Relation> relations_;
  std::vector<Degree> degrees_;
};

std::vector<std::string> builtin_algebra_names();
// Names: single_vertex, subspace5, subspace6, quotient5, blowup_A (alias 6-subspace for subspace6).
GradedQuiverAlgebra builtin_algebra(const std::string& name);

// C[i][j] = dim of paths i -> j modulo relations (= dim Hom(P_i, P_j) for P_i spanned by paths ending at i).
IntMatrix cartan_matrix(const GradedQuiverAlgebra& a);
// Euler form on dimension vectors, C^{-1}; throws if not integral.
IntMatrix euler_matrix(const GradedQuiverAlgebra& a);
// Euler form on the indecomposable projectives, equal to the Cartan matrix.
IntMatrix projective_gram(const GradedQuiverAlgebra& a);
// <d, e> = sum d_v e_v - sum_{a: i -> j} d_i e_j.
long euler_form(const Quiver& q, const DimVector& d, const DimVector& e);
IntMatrix hereditary_euler_matrix(const Quiver& q);
// Characteristic polynomial of -C^{-T} C, coefficients from the constant term up, monic.
std::vector<long> coxeter_polynomial(const IntMatrix& cartan);
std::vector<long> coxeter_polynomial(const GradedQuiverAlgebra& a);
std::string polynomial_to_string(const std::vector<long>& coeffs);

struct HochschildDims {
  std::size_t hh0 = 0, hh1 = 0, hh2 = 0;
  bool operator==(const HochschildDims&) const = default;
};
// Throws segre::Error when the minimal resolution does not stop after step 2.
HochschildDims hochschild_dims(const GradedQuiverAlgebra& a);

// King semistability for the 6-subspace quiver with d = (1^6; 2): images are the six vectors in k^2.
std::vector<long> canonical_weight();  // (1,1,1,1,1,1;-3)
bool king_semistable(const std::vector<exact::Vector>& images, const std::vector<long>& theta = canonical_weight());
long moduli_dimension(const Quiver& q, const DimVector& d);

// Dimension vector of the injective at v, for the projective at v.
DimVector nakayama(const GradedQuiverAlgebra& a, int vertex);
DimVector projective_dimvector(const GradedQuiverAlgebra& a, int vertex);
// Reflection at a sink; throws if the vertex has outgoing arrows.
DimVector reflect_at_sink(const Quiver& q, const DimVector& d, int vertex);
// Cartan matrix of the one-point extension by a module of dimension vector m; the new vertex is last
// and paths from it to v number m_v.
IntMatrix one_point_extend(const IntMatrix& cartan, const DimVector& m);
// True when b = P a P^T for some permutation P.
bool permutation_equivalent(const IntMatrix& a, const IntMatrix& b);

// n! / product of hook lengths; throws unless the input is a partition.
long hook_length_dim(const std::vector<int>& partition);

}  // namespace segre::quiver
