// Acceptance run: one line per criterion, exit status 0 iff every criterion passes.
// Usage: acceptance <path-to-segre> [cache-dir]

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "segre/cli/cache.hpp"
#include "segre/cli/suites.hpp"
#include "segre/geometry/segre_igusa.hpp"
#include "segre/ktheory/collections.hpp"
#include "segre/quiver/algebra.hpp"
#include "segre/sections/classifier.hpp"

using namespace segre;
using exact::Field;
using exact::Vector;
using projective::ProjectivePoint;

namespace {

constexpr std::uint64_t kSeed = cli::kDefaultSeed;

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;

  void require(bool ok, const std::string& what) {
    if (!ok) pass = false;
    if (!ok) notes.push_back("FAILED " + what);
  }
  void note(const std::string& s) { notes.push_back(s); }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt_seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2fs", s);
  return buf;
}

std::string g_segre_binary;
std::optional<cli::ScanCache> g_cache;

const cli::ScanCache* cache() { return g_cache ? &*g_cache : nullptr; }

Outcome node_count() {
  Outcome o;
  const auto& d = geometry::data();
  for (std::uint64_t p : {11, 101}) {
    const auto t0 = std::chrono::steady_clock::now();
    bool hit = false;
    auto pts = cli::cached_singular_locus(d.segre6, p, cache(), &hit);
    const double secs = seconds_since(t0);
    std::vector<ProjectivePoint> orbit;
    for (const auto& n : d.nodes) orbit.push_back(n.in(Field::prime(p)));
    std::sort(orbit.begin(), orbit.end());
    std::sort(pts.begin(), pts.end());
    o.require(pts.size() == 10, "F_" + std::to_string(p) + " count " + std::to_string(pts.size()));
    o.require(pts == orbit, "F_" + std::to_string(p) + " points equal the node orbit");
    o.require(secs < (p == 11 ? 5.0 : 180.0), "F_" + std::to_string(p) + " runtime " + fmt_seconds(secs));
    o.note("F_" + std::to_string(p) + ": 10 in " + fmt_seconds(secs) + (hit ? " (cached)" : ""));
  }
  for (const auto& n : d.nodes) o.require(projective::hessian_corank_at(d.segre6, n) == 0, "corank 0 at " + n.to_string());
  return o;
}

Outcome configurations() {
  Outcome o;
  const auto& d = geometry::data();
  const auto t0 = std::chrono::steady_clock::now();
  const auto [planes, lines] = geometry::verify_incidences(d);
  const double secs = seconds_since(t0);
  o.require(planes.pass && planes.signature() == "(15_4,10_6)", "planes/nodes " + planes.signature());
  o.require(lines.pass && lines.signature() == "(15_3,15_3)", "lines/points " + lines.signature());
  o.require(secs < 1.0, "runtime " + fmt_seconds(secs));
  o.note(planes.signature() + " " + lines.signature() + " in " + fmt_seconds(secs));
  return o;
}

Outcome igusa_locus() {
  Outcome o;
  const auto& d = geometry::data();
  const Field f = Field::prime(11);
  const auto pts = cli::cached_singular_locus(d.igusa6, 11, cache());
  std::vector<projective::LinearSubspace> lines;
  for (const auto& l : d.dual_lines) lines.push_back(l.in(f));
  std::vector<ProjectivePoint> triple;
  std::size_t off_lines = 0;
  for (const auto& pt : pts) {
    const auto k = std::count_if(lines.begin(), lines.end(), [&](const auto& l) { return l.contains(pt); });
    if (k == 0) ++off_lines;
    if (k >= 3) triple.push_back(pt);
  }
  std::vector<ProjectivePoint> cr;
  for (const auto& q : d.cr_points) cr.push_back(q.in(f));
  std::sort(cr.begin(), cr.end());
  std::sort(triple.begin(), triple.end());
  o.require(pts.size() == 150, "count " + std::to_string(pts.size()));
  o.require(off_lines == 0, std::to_string(off_lines) + " points off the dual lines");
  o.require(triple.size() == 15 && triple == cr, "triple points equal the cr points");
  o.note(std::to_string(pts.size()) + " points, " + std::to_string(triple.size()) + " triple");
  return o;
}

Outcome duality_identity() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  const bool ok = geometry::verify_duality_identity(geometry::data());
  const double secs = seconds_since(t0);
  o.require(ok, "pulled-back quartic is the zero polynomial");
  o.require(secs < 30.0, "runtime " + fmt_seconds(secs));
  o.note("exact identity in 4 parameters, " + fmt_seconds(secs));
  return o;
}

Outcome special_families() {
  Outcome o;
  const auto r = geometry::verify_special_sections(geometry::data(), Field::prime(11));
  o.require(r.t_sections.size() == 15, "15 T-sections");
  for (const auto& t : r.t_sections)
    o.require(t.count == 4 && t.coranks == std::vector<int>{0, 0, 0, 0}, "T-section " + t.label + " profile (4,[0,0,0,0])");
  o.require(r.h_sections.size() == 15, "15 H-sections");
  for (const auto& h : r.h_sections) o.require(h.pass && h.planes.size() == 3, "H-section " + h.label + " factors");
  o.require(r.p_sections.size() == 10, "10 P-sections");
  for (const auto& p : r.p_sections) o.require(p.pass && p.quadric_rank == 4, "P-section " + p.label + " full-rank square");
  o.note("T 15/15, H 15/15, P 10/10");
  return o;
}

std::string short_name(const sections::HyperplaneSectionType& t) {
  return t.kind == sections::SectionKind::RNodal ? "RNodal(" + std::to_string(t.r()) + ")" : sections::kind_name(t.kind);
}

Outcome classifier_agreement() {
  Outcome o;
  const auto& d = geometry::data();
  const auto t0 = std::chrono::steady_clock::now();
  const auto r = sections::agreement_suite(d, 200, kSeed);
  const double secs = seconds_since(t0);
  std::size_t bad = 0;
  for (const auto& e : r.entries) bad += e.bad_reduction_primes.size();
  o.require(r.entries.size() == 200, "200 hyperplanes");
  o.require(r.unexplained() == 0, std::to_string(r.unexplained()) + " unexplained disagreements");
  o.require(r.without_majority() == 0, std::to_string(r.without_majority()) +
                                           " hyperplanes agree at fewer than 2 of {11,31,101} (all explained by bad reduction)");
  const std::vector<std::string> rows{"SmoothCubic", "OneNodalAtNode", "RNodal(2)", "RNodal(3)", "RNodal(4)",
                                      "OneNodalTangency", "A2AtNode", "PlanePlusQuadric", "ThreeSegrePlanes"};
  std::vector<std::string> hit;
  for (const auto& w : sections::section_type_witnesses(d, kSeed)) {
    const auto e = sections::check_agreement(d, w.h, {11, 31, 101});
    if (short_name(w.type) == w.row && e.majority() && e.unexplained_primes.empty()) hit.push_back(w.row);
  }
  for (const auto& row : rows)
    o.require(std::find(hit.begin(), hit.end(), row) != hit.end(), "witness for row " + row);
  o.require(secs < 120.0, "runtime " + fmt_seconds(secs));
  o.note("unexplained " + std::to_string(r.unexplained()) + ", bad-reduction primes flagged " + std::to_string(bad) +
         ", rows hit " + std::to_string(hit.size()) + "/9, " + fmt_seconds(secs));
  return o;
}

Outcome dual_sections() {
  Outcome o;
  const auto& d = geometry::data();
  const Field f = Field::prime(101);
  std::optional<ProjectivePoint> generic;
  for (const auto& h : sections::random_hyperplanes(50, 20, kSeed))
    if (sections::classify_dual_hyperplane(d, h).kind == sections::DualSectionKind::Generic15Nodal) {
      generic = h;
      break;
    }
  o.require(generic.has_value(), "a generic hyperplane among the seeded draws");
  if (generic) o.require(sections::oracle_dual_profile(d, *generic, f).singular_count == 15, "generic count 15");
  // Smooth Segre point x; its dual hyperplane is tangent to the quartic at duality_map(x).
  const auto param = projective::node_projection_parametrization(d.segre6, d.nodes.front());
  Vector t{3, -5, 7, 2}, x;
  for (const auto& c : param) x.push_back(exact::evaluate(c, t));
  const ProjectivePoint xp(x);
  const auto y = geometry::duality_map(d, xp);
  o.require(projective::on_hypersurface(d.igusa6, y) && geometry::pairing(xp.coords(), y.coords()).is_zero(),
            "duality_map(x) is a point of the quartic on the hyperplane");
  o.require(sections::classify_dual_hyperplane(d, xp).kind == sections::DualSectionKind::Kummer16Tangent, "tangent type");
  o.require(sections::oracle_dual_profile(d, xp, f).singular_count == 16, "tangent count 16");
  o.require(sections::oracle_dual_profile(d, d.nodes.front(), f).perfect_square, "p1 restriction is a square");
  o.note("generic 15, tangent 16, p1 square at F_101");
  return o;
}

Outcome plucker_teissier() {
  Outcome o;
  for (const auto& [m, deg] : std::vector<std::pair<long long, long long>>{{10, 4}, {0, 24}, {6, 12}}) {
    const auto v = geometry::plucker_teissier_degree(3, 4, m);
    o.require(v == deg, "(3,4," + std::to_string(m) + ") -> " + std::to_string(v));
  }
  o.note("4, 24, 12");
  return o;
}

Outcome elliptic_match() {
  Outcome o;
  const auto& d = geometry::data();
  const auto t0 = std::chrono::steady_clock::now();
  std::size_t drawn = 0, equal = 0;
  for (std::uint64_t k = 0; drawn < 30 && k < 300; ++k) {
    const auto l = sections::random_traceless_subspace(3, 20, kSeed + 1000 + k);
    const auto cubic = geometry::restrict_form(d.segre6.form(), l.basis());
    if (sections::aronhold_discriminant(sections::aronhold_invariants(cubic)) == 0) continue;
    ++drawn;
    if (sections::elliptic_j_match(d, l).equal) ++equal;
  }
  const double secs = seconds_since(t0);
  o.require(drawn == 30, "30 generic subspaces drawn");
  o.require(equal == drawn, std::to_string(equal) + " exact matches");
  o.require(secs < 60.0, "runtime " + fmt_seconds(secs));
  o.note(std::to_string(equal) + "/" + std::to_string(drawn) + " equal, " + fmt_seconds(secs));
  return o;
}

Outcome gram_suite() {
  using namespace ktheory;
  Outcome o;
  const auto check = [&](const std::string& name, std::vector<std::size_t> blocks) {
    const auto c = builtin_collection(name);
    const auto g = gram(c);
    o.require(c.blocks == blocks, name + " blocks");
    o.require(g.unit_diagonal() && g.unitriangular(), name + " unitriangular");
    return g;
  };
  check("three_block", {1, 5, 1});
  // X is a P^1-bundle over a surface with K-rank 7, so its K-rank is 14 = 7 + 7.
  check("orlov_X", {7, 7});
  const auto qc = check("quiver_center", {6, 1});
  const auto b14 = check("blowup_14", {7, 7});
  o.require(b14.rectangular(), "blowup_14 rectangular");
  o.require(qc.entries == quiver::projective_gram(quiver::builtin_algebra("subspace6")), "quiver_center = 6-subspace Euler matrix");
  for (const auto& s : {three_block_from_karpov_nogin(), quiver_center_from_orlov(), serre_endpoint_from_orlov()})
    o.require(s.matches, "sequence " + s.name);
  o.note("orlov_X has 14 classes (7+7), the K-rank of X; sequences incl. O(3h-e-s) and O_X(2s) reproduced");
  return o;
}

Outcome euler_spots() {
  using namespace ktheory;
  Outcome o;
  const auto O = [](const PicClass& p) { return SurfaceKClass::line_bundle(p); };
  const auto h = PicClass::h();
  const auto e = PicClass::e_sum();
  const auto u = SurfaceKClass::u2_dual();
  for (int i = 1; i <= 4; ++i) {
    o.require(chi_surface(O(h - PicClass::e(i)), u) == 1, "chi(O(h-e" + std::to_string(i) + "),U2v) = 1");
    o.require(chi_surface(O(h - PicClass::e(i))) == 2, "chi(O(h-e" + std::to_string(i) + ")) = 2");
  }
  o.require(chi_surface(O(h * 2 - e), u) == 1, "chi(O(2h-e),U2v) = 1");
  o.require(chi_surface(O(h * 2 - e)) == 2, "chi(O(2h-e)) = 2");
  o.require(chi_surface(O(-PicClass::canonical())) == 6, "chi(O(-K)) = 6");
  o.note("1,1,2,2,6");
  return o;
}

std::string tuple(const std::vector<std::size_t>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "(") << v[i];
  return os.str() + ")";
}

Outcome quiver_suite() {
  using namespace quiver;
  Outcome o;
  const auto a = builtin_algebra("blowup_A");
  const auto s6 = builtin_algebra("6-subspace");
  o.require(a.dimension() == 21 && a.graded_dimensions() == std::vector<std::size_t>{7, 9, 5}, "blowup_A dims " + tuple(a.graded_dimensions()));
  const auto ha = hochschild_dims(a);
  const auto hs = hochschild_dims(s6);
  o.require(ha.hh1 == 0 && ha.hh2 == 0, "HH(blowup_A) = " + tuple({ha.hh0, ha.hh1, ha.hh2}));
  o.require(hs == HochschildDims{1, 0, 0}, "HH(6-subspace) = " + tuple({hs.hh0, hs.hh1, hs.hh2}));
  o.require(coxeter_polynomial(a) == coxeter_polynomial(s6), "Coxeter polynomials equal");
  const auto s5 = builtin_algebra("subspace5");
  const auto sink = s5.quiver().vertices - 1;
  o.require(reflect_at_sink(s5.quiver(), nakayama(s5, sink), sink) == DimVector{1, 1, 1, 1, 1, 4}, "reflection (1,1,1,1,1;4)");
  const DimVector d{1, 1, 1, 1, 1, 1, 2};
  o.require(euler_form(s6.quiver(), d, d) == -2, "<d,d> = -2");
  o.require(moduli_dimension(s6.quiver(), d) == 3, "moduli dimension 3");
  std::vector<long> col;
  for (const auto& p : std::vector<std::vector<int>>{{5}, {1, 1, 1, 1, 1}, {4, 1}, {2, 1, 1, 1}, {3, 2}, {2, 2, 1}, {3, 1, 1}})
    col.push_back(hook_length_dim(p));
  o.require(col == std::vector<long>{1, 1, 4, 4, 5, 5, 6}, "hook lengths (1,1,4,4,5,5,6)");
  o.note("dim 21 (7,9,5), HH(blowup_A) = " + tuple({ha.hh0, ha.hh1, ha.hh2}) + ", Coxeter " + polynomial_to_string(coxeter_polynomial(a)));
  return o;
}

Outcome serre_tests() {
  Outcome o;
  std::size_t pairs = 0;
  for (const auto& name : ktheory::builtin_collection_names()) {
    const auto c = ktheory::builtin_collection(name);
    const auto failures = ktheory::serre_self_test(c);
    o.require(failures.empty(), name + ": " + std::to_string(failures.size()) + " failing pairs");
    pairs += c.items.size() * c.items.size();
  }
  o.require(ktheory::serre_sign(ktheory::Ambient::Surface) == 1, "surface sign +");
  o.require(ktheory::serre_sign(ktheory::Ambient::BundleX) == -1 && ktheory::serre_sign(ktheory::Ambient::BlowupX) == -1,
            "threefold sign -");
  o.note(std::to_string(pairs) + " pairs over " + std::to_string(ktheory::builtin_collection_names().size()) + " collections");
  return o;
}

std::pair<int, std::string> capture(const std::string& cmd) {
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

Outcome determinism() {
  Outcome o;
  if (g_segre_binary.empty()) {
    o.require(false, "path to the segre binary not given");
    return o;
  }
  std::string cmd = "'" + g_segre_binary + "' verify all --json --seed " + std::to_string(kSeed);
  if (g_cache) cmd += " --cache-dir '" + g_cache->dir().string() + "'";
  cmd += " 2>/dev/null";
  const auto [rc1, first] = capture(cmd);
  const auto [rc2, second] = capture(cmd);
  o.require(rc1 == 0 || rc1 == 1, "verify exit code " + std::to_string(rc1));
  o.require(!first.empty() && first == second, "reports byte-identical");
  o.require(rc1 == rc2, "exit codes equal");
  o.note(std::to_string(first.size()) + " bytes, identical; verify exit code " + std::to_string(rc1));
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1) g_segre_binary = argv[1];
  if (argc > 2) g_cache.emplace(argv[2]);
  else if (auto dir = cli::resolve_cache_dir(std::nullopt)) g_cache.emplace(*dir);

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"node count", node_count},
      {"configurations", configurations},
      {"Igusa singular locus", igusa_locus},
      {"duality identity", duality_identity},
      {"special families", special_families},
      {"classifier/oracle agreement", classifier_agreement},
      {"dual hyperplane sections", dual_sections},
      {"Plucker-Teissier", plucker_teissier},
      {"elliptic match", elliptic_match},
      {"Gram suite", gram_suite},
      {"Euler spot values", euler_spots},
      {"quiver suite", quiver_suite},
      {"Serre self-tests", serre_tests},
      {"determinism", determinism}};

  std::size_t failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    if (!o.pass) ++failed;
    std::string detail;
    for (const auto& n : o.notes) detail += (detail.empty() ? "" : "; ") + n;
    std::printf("criterion %2zu %s: %s (%s)\n", i + 1, o.pass ? "PASS" : "FAIL", criteria[i].first.c_str(), detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%zu/%zu criteria pass\n", criteria.size() - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
