#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "segre/projective/projective.hpp"

namespace segre::geometry {

using exact::Field;
using exact::Polynomial;
using exact::Scalar;
using exact::Vector;
using projective::Hypersurface;
using projective::LinearSubspace;
using projective::ProjectivePoint;

using Pair = std::pair<int, int>;
using PairPartition = std::array<Pair, 3>;

struct SegrePlane {
  PairPartition pairs;
  std::string label;  // e.g. "{01|23|45}"
  LinearSubspace plane;
};

// A hyperplane of the traceless P^4 together with its traceless dual point.
struct LabeledHyperplane {
  Pair pair;
  std::string label;
  LinearSubspace hyperplane;
  ProjectivePoint dual_point;
};

struct SegreIgusaData {
  Hypersurface segre6, segre5, igusa6, igusa5;
  std::vector<ProjectivePoint> nodes;           // six coordinates, p1 = (1:1:1:-1:-1:-1) first
  std::vector<SegrePlane> segre_planes;         // 15, sorted by pair partition
  std::vector<LabeledHyperplane> t_planes;      // x_i - x_j = 0, dual point e_i - e_j
  std::vector<LabeledHyperplane> h_planes;      // x_i + x_j = 0, dual point = cr_points[k]
  std::vector<LinearSubspace> p_hyperplanes;    // P_i = annihilator of node i inside sum = 0
  std::vector<LinearSubspace> dual_lines;       // dual of segre_planes[k]
  std::vector<ProjectivePoint> cr_points;       // traceless lift of e_i + e_j

  std::string node_label(std::size_t i) const { return "p" + std::to_string(i + 1); }
};

// Builds everything over the rationals and validates the structural invariants;
// throws segre::Error naming the failing object otherwise.
SegreIgusaData build_all();
// Cached instance (built once, immutable).
const SegreIgusaData& data();

std::string pair_label(const Pair& p);
std::string partition_label(const PairPartition& p);
Scalar pairing(const Vector& x, const Vector& y);

struct IncidenceReport {
  std::string name;
  std::vector<std::string> row_labels, col_labels;
  std::vector<std::vector<int>> incidence;
  std::vector<int> row_sums, col_sums;
  int expected_row_sum = 0, expected_col_sum = 0;
  bool pass = false;
  std::vector<std::string> failures;  // offending rows and columns
  std::string signature() const;      // observed, e.g. "(15_4,10_6)"
  std::string expected_signature() const;
};

IncidenceReport make_incidence_report(std::string name, std::vector<std::string> rows, std::vector<std::string> cols,
                                      std::vector<std::vector<int>> incidence, int expected_row, int expected_col);
IncidenceReport planes_nodes_report(const std::vector<SegrePlane>& planes, const std::vector<ProjectivePoint>& nodes);
IncidenceReport lines_points_report(const std::vector<LinearSubspace>& lines, const std::vector<ProjectivePoint>& points);
std::pair<IncidenceReport, IncidenceReport> verify_incidences(const SegreIgusaData& d);

// Traceless tangent hyperplane of the Segre cubic at x, proportional to 6x_i^2 - sum x_j^2.
ProjectivePoint duality_map(const SegreIgusaData& d, const ProjectivePoint& x);

// Pulls the quartic (the Igusa form unless replaced) back along the Gauss map composed with the
// projection from p1; true iff the result is the zero polynomial in 4 parameters.
bool verify_duality_identity(const SegreIgusaData& d, const std::optional<Polynomial>& quartic = std::nullopt);
// Same pipeline evaluated numerically at seeded random parameters over F_p; counts zeros.
std::size_t duality_identity_samples(const SegreIgusaData& d, const Field& p, std::size_t samples, std::uint64_t seed);

struct SpecialSectionsReport {
  struct TEntry {
    std::string label;
    std::size_t count;
    std::vector<int> coranks;
    bool pass;
  };
  struct HEntry {
    std::string label;
    std::vector<std::string> planes;  // the three contained Segre planes
    Scalar factor;                     // cubic = factor * product of the three linear forms
    bool pass;
  };
  struct PEntry {
    std::string label;
    Polynomial root;     // q with q^2 = scale * restriction
    Scalar scale;
    std::size_t quadric_rank;
    bool pass;
  };
  std::vector<TEntry> t_sections;
  std::vector<HEntry> h_sections;
  std::vector<PEntry> p_sections;
  bool pass() const;
};

SpecialSectionsReport verify_special_sections(const SegreIgusaData& d, const Field& p);

// d (d-1)^{n-1} - 2m; throws on invalid input or a negative result.
long long plucker_teissier_degree(long long d, long long n, long long m);

// Restriction of a six-variable form to the row space of basis (k x 6): k variables.
Polynomial restrict_form(const Polynomial& form, const exact::Matrix& basis);
// Symmetric matrix of a quadratic form.
exact::Matrix quadric_matrix(const Polynomial& q);

}  // namespace segre::geometry
