#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "segre/geometry/segre_igusa.hpp"
#include "segre/sections/invariants.hpp"

namespace segre::sections {

using exact::Field;
using exact::Matrix;
using geometry::SegreIgusaData;
using projective::LinearSubspace;
using projective::ProjectivePoint;

// Decision features of a hyperplane h (a traceless point of the dual space).
struct SectionFeatures {
  std::vector<int> nodes_on;           // indices i with <h, p_i> = 0
  bool on_igusa = false;               // Igusa(h) = 0
  std::vector<int> dual_lines;         // indices k with h on the k-th dual line
  std::optional<int> cr_point;         // index of the cr point equal to h
  std::string to_string() const;
};

// Features over the rationals, or over F_p after reducing a primitive integer representative.
SectionFeatures section_features(const SegreIgusaData& d, const ProjectivePoint& h);
SectionFeatures section_features_mod(const SegreIgusaData& d, const ProjectivePoint& h, const Field& p);

enum class SectionKind {
  SmoothCubic,
  OneNodalAtNode,
  OneNodalTangency,
  RNodal,
  A2AtNode,
  PlanePlusQuadric,
  ThreeSegrePlanes,
  Unclassified
};

struct HyperplaneSectionType {
  SectionKind kind = SectionKind::Unclassified;
  std::vector<int> nodes;  // node indices: one for OneNodalAtNode and A2AtNode, r for RNodal
  std::string label;       // plane label or cr point label
  SectionFeatures features;

  int r() const { return static_cast<int>(nodes.size()); }
  std::string to_string() const;
  bool operator==(const HyperplaneSectionType& o) const {
    return kind == o.kind && nodes == o.nodes && label == o.label;
  }
};

std::string kind_name(SectionKind k);

HyperplaneSectionType classify_from_features(const SegreIgusaData& d, const SectionFeatures& f);
// Throws on the zero vector, non-traceless input or a point over a prime field.
HyperplaneSectionType classify_hyperplane(const SegreIgusaData& d, const ProjectivePoint& h);

struct SingularProfile {
  std::size_t count = 0;
  std::vector<int> coranks;  // sorted
  bool operator==(const SingularProfile&) const = default;
  std::string to_string() const;
};

// Profile the type predicts for the F_p-points of the singular locus.
struct ImpliedProfile {
  SingularProfile exact;     // used when not a lower bound
  std::size_t min_count = 0; // reducible types: at least this many points
  bool lower_bound = false;
  bool matches(const SingularProfile& observed) const;
};
ImpliedProfile implied_profile(const HyperplaneSectionType& t, std::uint64_t p);

// Brute force over F_p: singular points and Hessian coranks of the cubic surface cut by h.
// Throws when h reduces to zero modulo p.
SingularProfile oracle_singular_profile(const SegreIgusaData& d, const ProjectivePoint& h, const Field& p);

// Agreement between the exact classifier and the oracle over several primes.
struct AgreementEntry {
  ProjectivePoint h;
  HyperplaneSectionType type;
  std::vector<std::uint64_t> agreeing_primes;
  std::vector<std::uint64_t> bad_reduction_primes;  // disagreement explained by the reduced features
  std::vector<std::uint64_t> unexplained_primes;
  bool majority() const { return agreeing_primes.size() * 2 > agreeing_primes.size() + bad_reduction_primes.size() + unexplained_primes.size(); }
};
struct AgreementReport {
  std::vector<AgreementEntry> entries;
  std::size_t unexplained() const;
  std::size_t without_majority() const;
  bool pass() const { return unexplained() == 0 && without_majority() == 0; }
};
AgreementEntry check_agreement(const SegreIgusaData& d, const ProjectivePoint& h, const std::vector<std::uint64_t>& primes);
// Seeded traceless integer points with every coordinate in [-bound, bound].
std::vector<ProjectivePoint> random_hyperplanes(std::size_t count, long bound, std::uint64_t seed);
AgreementReport agreement_suite(const SegreIgusaData& d, std::size_t count, std::uint64_t seed,
                                const std::vector<std::uint64_t>& primes = {11, 31, 101});

// One explicit witness per type of the hyperplane table.
struct Witness {
  std::string row;
  ProjectivePoint h;
  HyperplaneSectionType type;
};
std::vector<Witness> section_type_witnesses(const SegreIgusaData& d, std::uint64_t seed);

enum class DualFiberType { TwoPoints, DoublePoint, ExcessFiber };
std::string to_string(DualFiberType t);
DualFiberType dual_fiber(const SegreIgusaData& d, const ProjectivePoint& h);

enum class DualSectionKind {
  Generic15Nodal,
  Kummer16Tangent,
  NonReducedQuadric,
  ContainsSingularLine,
  ThroughCRPoint,
  Unclassified
};
struct DualHyperplaneSectionType {
  DualSectionKind kind = DualSectionKind::Unclassified;
  int node = -1;            // NonReducedQuadric
  std::string diagnostics;  // Unclassified
  std::string to_string() const;
};
DualHyperplaneSectionType classify_dual_hyperplane(const SegreIgusaData& d, const ProjectivePoint& h);

struct DualProfile {
  std::size_t singular_count = 0;
  bool perfect_square = false;  // the restricted quartic is a scalar times a square
};
// Restricts the Igusa quartic to the hyperplane dual to h and scans its singular points over F_p.
DualProfile oracle_dual_profile(const SegreIgusaData& d, const ProjectivePoint& h, const Field& p);

enum class FiberSide { Segre, Igusa };
struct DerivedFiber {
  enum class Kind { Empty, FormalDualNumbers } kind = Kind::Empty;
  int generator_degree = -1;  // degree of epsilon when FormalDualNumbers
  bool singular_point = false;
  std::string to_string() const;
};
DerivedFiber derived_point_fiber(const SegreIgusaData& d, const ProjectivePoint& h, FiberSide side);

// Traceless annihilator of a subspace of traceless vectors.
LinearSubspace traceless_complement(const LinearSubspace& l);
// Seeded subspace spanned by dim random traceless integer vectors.
LinearSubspace random_traceless_subspace(std::size_t dim, long bound, std::uint64_t seed);

struct Codim2Report {
  std::size_t dim = 0;
  std::string segre_side;   // description of P(L) meet Segre
  std::string igusa_side;   // description of P(L^perp) meet Igusa
  bool generic = false;     // genericity conditions hold
  bool matches_table = false;
  long topological_euler = 0;  // of the Segre side (dim 3, 4) or of the double cover (dim 2)
  long exceptional_rank = 0;   // 7 + the excess count
  std::size_t oracle_points = 0;  // F_p-points or singular points used as cross-check
  std::string to_string() const;
};
// Throws for dimensions other than 2, 3, 4 or non-traceless input.
Codim2Report codim2_profile(const SegreIgusaData& d, const LinearSubspace& l, const Field& p = Field::prime(101));

struct EllipticMatch {
  mpq_class j1, j2;
  bool equal = false;
};
// Throws when the plane cubic is singular or branch points coincide.
EllipticMatch elliptic_j_match(const SegreIgusaData& d, const LinearSubspace& l);

}  // namespace segre::sections
