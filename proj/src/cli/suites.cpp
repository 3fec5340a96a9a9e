#include "segre/cli/suites.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <sstream>

#include "segre/exact/error.hpp"
#include "segre/geometry/segre_igusa.hpp"
#include "segre/ktheory/collections.hpp"
#include "segre/quiver/algebra.hpp"
#include "segre/sections/classifier.hpp"

namespace segre::cli {

namespace {

using exact::Field;
using exact::Scalar;
using exact::Vector;
using projective::ProjectivePoint;

template <class T>
std::string join(const std::vector<T>& xs, const std::string& open = "[", const std::string& close = "]") {
  std::ostringstream os;
  os << open;
  for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? "," : "") << xs[i];
  os << close;
  return os.str();
}

std::string yes(bool b) { return b ? "true" : "false"; }

class Runner {
 public:
  Runner(std::string suite, const SuiteOptions& opts, Report& out) : suite_(std::move(suite)), opts_(opts), out_(out) {}

  const SuiteOptions& opts() const { return opts_; }
  const ScanCache* cache() const { return opts_.cache ? &*opts_.cache : nullptr; }

  // Runs compute for the actual value; pass iff it equals expected. Exceptions become failures.
  void check(const std::string& name, const std::string& expected, const std::function<std::string()>& compute,
             std::optional<std::uint64_t> prime = std::nullopt) {
    CheckResult r{suite_, suite_ + "." + name, Status::Fail, expected, "", prime, 0};
    const auto t0 = std::chrono::steady_clock::now();
    try {
      r.actual = compute();
      r.status = r.actual == expected ? Status::Pass : Status::Fail;
    } catch (const std::exception& e) {
      r.actual = std::string("error: ") + e.what();
    }
    finish(r, t0);
  }

  // Informational entry that never fails the run.
  void flag(const std::string& name, const std::string& expected, const std::string& actual,
            std::optional<std::uint64_t> prime = std::nullopt) {
    out_.checks.push_back({suite_, suite_ + "." + name, Status::Flagged, expected, actual, prime, 0});
  }

 private:
  void finish(CheckResult& r, std::chrono::steady_clock::time_point t0) {
    if (opts_.timing)
      r.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
    out_.checks.push_back(std::move(r));
  }

  std::string suite_;
  const SuiteOptions& opts_;
  Report& out_;
};

// Reductions of the nodes, sorted, compared with a scan.
std::string node_scan_actual(const geometry::SegreIgusaData& d, std::uint64_t p, const ScanCache* cache) {
  const auto f = Field::prime(p);
  auto pts = cached_singular_locus(d.segre6, p, cache);
  std::vector<ProjectivePoint> expected;
  for (const auto& n : d.nodes) expected.push_back(n.in(f));
  std::sort(expected.begin(), expected.end());
  std::sort(pts.begin(), pts.end());
  return std::to_string(pts.size()) + (pts == expected ? " = node orbit" : " != node orbit");
}

std::string igusa_scan_actual(const geometry::SegreIgusaData& d, std::uint64_t p, const ScanCache* cache) {
  const auto f = Field::prime(p);
  const auto pts = cached_singular_locus(d.igusa6, p, cache);
  std::vector<projective::LinearSubspace> lines;
  for (const auto& l : d.dual_lines) lines.push_back(l.in(f));
  std::size_t on_line = 0;
  std::vector<ProjectivePoint> triple;
  for (const auto& pt : pts) {
    const auto k = std::count_if(lines.begin(), lines.end(), [&](const auto& l) { return l.contains(pt); });
    if (k > 0) ++on_line;
    if (k >= 3) triple.push_back(pt);
  }
  std::vector<ProjectivePoint> cr;
  for (const auto& q : d.cr_points) cr.push_back(q.in(f));
  std::sort(cr.begin(), cr.end());
  std::sort(triple.begin(), triple.end());
  std::ostringstream os;
  os << pts.size() << " points, " << on_line << " on dual lines, " << triple.size() << " triple"
     << (triple == cr ? " = cr points" : " != cr points");
  return os.str();
}

std::string igusa_expected(std::uint64_t p) {
  const auto n = 15 * (p + 1) - 30;
  return std::to_string(n) + " points, " + std::to_string(n) + " on dual lines, 15 triple = cr points";
}

void configuration_suite(Runner& run) {
  const auto& d = geometry::data();
  for (std::uint64_t p : {11, 101})
    run.check("segre_nodes", "10 = node orbit", [&] { return node_scan_actual(d, p, run.cache()); }, p);
  if (const auto p = run.opts().prime; p && *p != 11 && *p != 101)
    run.check("segre_nodes", "10 = node orbit", [&] { return node_scan_actual(d, *p, run.cache()); }, *p);
  run.check("node_hessian_coranks", join(std::vector<int>(10, 0)), [&] {
    std::vector<int> c;
    for (const auto& n : d.nodes) c.push_back(projective::hessian_corank_at(d.segre6, n));
    return join(c);
  });
  const auto [planes, lines] = geometry::verify_incidences(d);
  for (const auto& [key, r] : {std::pair{"planes_nodes_incidence", &planes}, std::pair{"lines_points_incidence", &lines}})
    run.check(key, r->expected_signature(), [&] {
      return r->signature() + (r->failures.empty() ? "" : " " + join(r->failures));
    });
  run.check("igusa_singular", igusa_expected(11), [&] { return igusa_scan_actual(d, 11, run.cache()); }, 11);
  if (const auto p = run.opts().prime; p && *p != 11)
    run.check("igusa_singular", igusa_expected(*p), [&] { return igusa_scan_actual(d, *p, run.cache()); }, *p);
}

ProjectivePoint segre_point(const geometry::SegreIgusaData& d, const std::vector<long>& params) {
  const auto param = projective::node_projection_parametrization(d.segre6, d.nodes.front());
  Vector v(params.begin(), params.end());
  Vector out;
  for (const auto& c : param) out.push_back(exact::evaluate(c, v));
  return ProjectivePoint(out);
}

void duality_suite(Runner& run) {
  const auto& d = geometry::data();
  const auto f101 = Field::prime(101);
  run.check("duality_identity", "true", [&] { return yes(geometry::verify_duality_identity(d)); });
  run.check("duality_samples", "20/20", [&] {
    return std::to_string(geometry::duality_identity_samples(d, f101, 20, run.opts().seed)) + "/20";
  }, 101);
  const auto special = geometry::verify_special_sections(d, Field::prime(11));
  const auto passing = [](const auto& entries) {
    return std::to_string(std::count_if(entries.begin(), entries.end(), [](const auto& e) { return e.pass; })) + "/" +
           std::to_string(entries.size());
  };
  run.check("t_sections_4_nodal", "15/15", [&] { return passing(special.t_sections); }, 11);
  run.check("h_sections_three_planes", "15/15", [&] { return passing(special.h_sections); });
  run.check("p_sections_double_quadric", "10/10", [&] { return passing(special.p_sections); });
  for (const auto& [m, deg] : std::vector<std::pair<long long, long long>>{{10, 4}, {0, 24}, {6, 12}})
    run.check("plucker_teissier(3,4," + std::to_string(m) + ")", std::to_string(deg),
              [&] { return std::to_string(geometry::plucker_teissier_degree(3, 4, m)); });

  run.check("dual_generic_15_nodal", "Generic15Nodal, 15", [&] {
    for (const auto& h : sections::random_hyperplanes(50, 20, run.opts().seed)) {
      const auto t = sections::classify_dual_hyperplane(d, h);
      if (t.kind != sections::DualSectionKind::Generic15Nodal) continue;
      return t.to_string() + ", " + std::to_string(sections::oracle_dual_profile(d, h, f101).singular_count);
    }
    return std::string("no generic hyperplane drawn");
  }, 101);
  run.check("dual_tangent_16", "Kummer16Tangent, 16", [&] {
    const auto x = segre_point(d, {3, -5, 7, 2});
    return sections::classify_dual_hyperplane(d, x).to_string() + ", " +
           std::to_string(sections::oracle_dual_profile(d, x, f101).singular_count);
  }, 101);
  run.check("dual_node_square", "NonReducedQuadric(p1), square", [&] {
    const auto& p1 = d.nodes.front();
    return sections::classify_dual_hyperplane(d, p1).to_string() +
           (sections::oracle_dual_profile(d, p1, f101).perfect_square ? ", square" : ", not square");
  }, 101);
}

std::string short_name(const sections::HyperplaneSectionType& t) {
  return t.kind == sections::SectionKind::RNodal ? "RNodal(" + std::to_string(t.r()) + ")" : sections::kind_name(t.kind);
}

void sections_suite(Runner& run) {
  const auto& d = geometry::data();
  const auto seed = run.opts().seed;
  const auto report = sections::agreement_suite(d, 200, seed);
  run.check("agreement_unexplained", "0", [&] { return std::to_string(report.unexplained()); });
  run.check("agreement_majority", "200/200", [&] {
    return std::to_string(report.entries.size() - report.without_majority()) + "/" + std::to_string(report.entries.size());
  });
  for (const auto& e : report.entries) {
    for (auto p : e.bad_reduction_primes)
      run.flag("bad_reduction", e.type.to_string(), e.h.to_string() + " reduces to " +
               sections::classify_from_features(d, sections::section_features_mod(d, e.h, Field::prime(p))).to_string(), p);
    if (e.type.kind == sections::SectionKind::Unclassified)
      run.flag("unclassified_section", "classified type", e.h.to_string() + " " + e.type.features.to_string());
  }

  for (const auto& w : sections::section_type_witnesses(d, seed)) {
    const auto e = sections::check_agreement(d, w.h, {11, 31, 101});
    run.check("witness." + w.row, w.row + ", oracle majority", [&] {
      return short_name(w.type) + (e.majority() ? ", oracle majority" : ", agrees at " + join(e.agreeing_primes));
    });
    for (auto p : e.bad_reduction_primes) run.flag("witness_bad_reduction." + w.row, w.type.to_string(), w.h.to_string(), p);
  }
  for (const auto& [coords, expected] : std::vector<std::pair<std::vector<long long>, std::string>>{
           {{2, 2, -1, -1, -1, -1}, "ThreeSegrePlanes"}, {{1, -1, 0, 0, 0, 0}, "RNodal(4)"}}) {
    const auto h = ProjectivePoint::from_ints(coords);
    run.check("classify" + h.to_string(), expected, [&] { return short_name(sections::classify_hyperplane(d, h)); });
  }
  run.check("point_fiber_node", "FormalDualNumbers(|e|=-1,singular)", [&] {
    const auto f = sections::derived_point_fiber(d, d.nodes.front(), sections::FiberSide::Segre);
    return f.to_string();
  });

  for (std::size_t dim : {2, 3, 4}) {
    run.check("codim2_dim" + std::to_string(dim), "generic, matches table", [&] {
      for (std::uint64_t k = 0; k < 20; ++k) {
        const auto l = sections::random_traceless_subspace(dim, 20, seed + 40 + dim + 100 * k);
        const auto r = sections::codim2_profile(d, l);
        if (!r.generic) continue;
        return std::string("generic, ") + (r.matches_table ? "matches table" : "mismatch: " + r.to_string());
      }
      return std::string("no generic subspace drawn");
    }, 101);
  }
  run.check("elliptic_j_match", "30/30", [&] {
    std::size_t equal = 0, drawn = 0;
    for (std::uint64_t k = 0; drawn < 30 && k < 300; ++k) {
      const auto l = sections::random_traceless_subspace(3, 20, seed + 1000 + k);
      const auto cubic = geometry::restrict_form(d.segre6.form(), l.basis());
      if (sections::aronhold_discriminant(sections::aronhold_invariants(cubic)) == 0) continue;
      ++drawn;
      if (sections::elliptic_j_match(d, l).equal) ++equal;
    }
    return std::to_string(equal) + "/" + std::to_string(drawn);
  });
}

void ktheory_suite(Runner& run) {
  using namespace ktheory;
  for (const auto& name : builtin_collection_names()) {
    const auto c = builtin_collection(name);
    const auto g = gram(c);
    run.check("gram." + name + ".unitriangular", "true", [&] { return yes(g.unit_diagonal() && g.unitriangular()); });
    run.check("serre." + name, "0 failures (sign " + std::to_string(serre_sign(c.ambient)) + ")", [&] {
      return std::to_string(serre_self_test(c).size()) + " failures (sign " + std::to_string(serre_sign(c.ambient)) + ")";
    });
    if (c.blocks.size() == 2 && c.blocks[0] == c.blocks[1])
      run.check("gram." + name + ".rectangular", "true", [&] { return yes(g.rectangular()); });
  }
  run.check("gram.three_block.blocks", "[1,5,1]", [&] { return join(builtin_collection("three_block").blocks); });
  run.check("gram.quiver_center.size", "7", [&] { return std::to_string(builtin_collection("quiver_center").items.size()); });
  run.check("gram.quiver_center_vs_6_subspace", "equal", [&] {
    const auto q = quiver::projective_gram(quiver::builtin_algebra("subspace6"));
    return gram(builtin_collection("quiver_center")).entries == q ? std::string("equal") : std::string("different");
  });
  for (const auto& seq : {three_block_from_karpov_nogin(), quiver_center_from_orlov(), serre_endpoint_from_orlov()})
    run.check("sequence." + seq.name, "endpoint reproduced",
              [&] { return seq.matches ? std::string("endpoint reproduced") : "mismatch " + join(seq.notes); });

  const auto O = [](const PicClass& p) { return SurfaceKClass::line_bundle(p); };
  const auto h = PicClass::h();
  const auto e = PicClass::e_sum();
  const auto u = SurfaceKClass::u2_dual();
  for (int i = 1; i <= 4; ++i) {
    const auto l = O(h - PicClass::e(i));
    const auto tag = "(O(h-e" + std::to_string(i) + ")";
    run.check("euler" + std::string(tag) + ",U2v)", "1", [&] { return std::to_string(chi_surface(l, u)); });
    run.check("euler" + std::string(tag) + ")", "2", [&] { return std::to_string(chi_surface(l)); });
  }
  run.check("euler(O(2h-e),U2v)", "1", [&] { return std::to_string(chi_surface(O(h * 2 - e), u)); });
  run.check("euler(O(2h-e))", "2", [&] { return std::to_string(chi_surface(O(h * 2 - e))); });
  run.check("euler(O(-K))", "6", [&] { return std::to_string(chi_surface(O(-PicClass::canonical()))); });
  run.check("euler(O(3h-e-s),p*U2v)", "1", [&] {
    return std::to_string(chi_bundle(BundleXClass::line_bundle(h * 3 - e, -1), BundleXClass::pullback(u)));
  });
  run.flag("euler(O(3h-e-s),p*U2v).higher_ext", "Ext^{>0} = 0", "not visible from chi; only the Euler characteristic is checked");
  for (const auto& [name, ok] : consistency_checks().checks) run.check("consistency." + name, "true", [ok = ok] { return yes(ok); });
}

std::string dims_string(const std::vector<std::size_t>& v) { return join(v, "(", ")"); }

void quiver_suite(Runner& run) {
  using namespace quiver;
  const auto a = builtin_algebra("blowup_A");
  const auto s6 = builtin_algebra("subspace6");
  run.check("blowup_A.graded_dims", "(7,9,5)", [&] { return dims_string(a.graded_dimensions()); });
  run.check("blowup_A.dimension", "21", [&] { return std::to_string(a.dimension()); });
  const auto hh = [](const GradedQuiverAlgebra& alg) {
    const auto h = hochschild_dims(alg);
    return dims_string({h.hh0, h.hh1, h.hh2});
  };
  const auto ha = hochschild_dims(a);
  run.check("hochschild.blowup_A", "(hh0,0,0)", [&] { return "(hh0," + std::to_string(ha.hh1) + "," + std::to_string(ha.hh2) + ")"; });
  run.flag("hochschild.blowup_A.hh0", "recorded", std::to_string(ha.hh0));
  run.check("hochschild.subspace6", "(1,0,0)", [&] { return hh(s6); });
  run.check("coxeter.blowup_A_vs_subspace6", polynomial_to_string(coxeter_polynomial(s6)),
            [&] { return polynomial_to_string(coxeter_polynomial(a)); });
  const auto s5 = builtin_algebra("subspace5");
  run.check("reflection", "(1,1,1,1,1;4)", [&] {
    const auto sink = s5.quiver().vertices - 1;
    const auto v = reflect_at_sink(s5.quiver(), nakayama(s5, sink), sink);
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i == 0 ? "" : i + 1 == v.size() ? ";" : ",") << v[i];
    os << ")";
    return os.str();
  });
  run.check("one_point_extension", "permutation-equivalent to blowup_A", [&] {
    const auto ext = one_point_extend(cartan_matrix(builtin_algebra("quotient5")), {1, 1, 1, 1, 1, 4});
    return permutation_equivalent(ext, cartan_matrix(a)) ? std::string("permutation-equivalent to blowup_A")
                                                         : std::string("different");
  });
  const DimVector d{1, 1, 1, 1, 1, 1, 2};
  run.check("euler_form(d,d)", "-2", [&] { return std::to_string(euler_form(s6.quiver(), d, d)); });
  run.check("moduli_dimension", "3", [&] { return std::to_string(moduli_dimension(s6.quiver(), d)); });
  run.check("king.distinct_lines", "true", [&] {
    std::vector<Vector> v{{1, 0}, {0, 1}, {1, 1}, {1, 2}, {1, 3}, {2, 1}};
    return yes(king_semistable(v));
  });
  run.check("king.four_on_a_line", "false", [&] {
    std::vector<Vector> v{{1, 0}, {2, 0}, {3, 0}, {-1, 0}, {0, 1}, {1, 1}};
    return yes(king_semistable(v));
  });
  run.check("hook_lengths", "[1,1,4,4,5,5,6]", [&] {
    std::vector<long> col;
    for (const auto& p : std::vector<std::vector<int>>{{5}, {1, 1, 1, 1, 1}, {4, 1}, {2, 1, 1, 1}, {3, 2}, {2, 2, 1}, {3, 1, 1}})
      col.push_back(hook_length_dim(p));
    return join(col);
  });
}

const std::map<std::string, void (*)(Runner&)>& registry() {
  static const std::map<std::string, void (*)(Runner&)> r{{"configuration", configuration_suite},
                                                          {"duality", duality_suite},
                                                          {"sections", sections_suite},
                                                          {"ktheory", ktheory_suite},
                                                          {"quiver", quiver_suite}};
  return r;
}

}  // namespace

std::vector<std::string> suite_names() { return {"configuration", "duality", "sections", "ktheory", "quiver"}; }

Report run_suite(const std::string& name, const SuiteOptions& opts) {
  Report report{name, {}};
  std::vector<std::string> order;
  if (name == "all") {
    order = suite_names();
  } else if (registry().count(name)) {
    order = {name};
  } else {
    throw Error("unknown suite '" + name + "' (expected all, " + join(suite_names(), "", "") + ")");
  }
  for (const auto& s : order) {
    Runner run(s, opts, report);
    registry().at(s)(run);
  }
  return report;
}

}  // namespace segre::cli
