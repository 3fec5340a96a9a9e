#include "segre/cli/commands.hpp"

#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "segre/cli/suites.hpp"
#include "segre/exact/error.hpp"
#include "segre/exact/parse.hpp"
#include "segre/geometry/segre_igusa.hpp"
#include "segre/ktheory/collections.hpp"
#include "segre/quiver/algebra.hpp"
#include "segre/sections/classifier.hpp"

namespace segre::cli {

namespace {

using json = nlohmann::ordered_json;
using exact::Field;
using exact::Scalar;
using exact::Vector;
using projective::ProjectivePoint;

struct UsageError : Error {
  using Error::Error;
};

struct Globals {
  std::optional<std::uint64_t> prime;
  std::uint64_t seed = kDefaultSeed;
  bool json = false;
  bool timing = false;
  std::optional<std::string> cache_dir;
};

Field checked_prime(std::uint64_t p) {
  if (!exact::is_prime(p)) throw UsageError("--prime " + std::to_string(p) + " is not prime");
  return Field::prime(p);
}

std::string vector_string(const Vector& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i].to_string();
  return os.str();
}

struct Projected {
  ProjectivePoint point;
  bool changed;
};

Projected traceless_point(const std::string& text) {
  const auto q = parse_coordinates(text);
  if (q.size() != 6) throw UsageError("expected 6 coordinates, got " + std::to_string(q.size()));
  Vector v;
  for (const auto& x : q) v.push_back(Scalar(x));
  const Vector t = projective::traceless_projection(v);
  if (std::all_of(t.begin(), t.end(), [](const Scalar& s) { return s.is_zero(); }))
    throw UsageError("coordinates project to the zero vector of the traceless hyperplane");
  return {ProjectivePoint(t), t != v};
}

void emit(const Globals& g, std::ostream& out, const json& j, const std::string& text) {
  if (g.json)
    out << j.dump(2) << "\n";
  else
    out << text;
}

int classify(const Globals& g, const std::string& kind, const std::string& coords, bool oracle, const std::string& side,
             std::ostream& out) {
  const auto& d = geometry::data();
  const Field p = checked_prime(g.prime.value_or(101));
  json j;
  j["kind"] = kind;
  std::ostringstream os;
  if (kind == "plane") {
    std::vector<Vector> rows;
    std::stringstream ss(coords);
    std::string row;
    while (std::getline(ss, row, ';')) {
      const auto q = parse_coordinates(row);
      if (q.size() != 6) throw UsageError("each row needs 6 coordinates");
      Vector v;
      for (const auto& x : q) v.push_back(Scalar(x));
      rows.push_back(projective::traceless_projection(v));
    }
    const projective::LinearSubspace l(exact::Matrix::from_rows(rows, 6));
    if (l.vector_dim() < 2 || l.vector_dim() > 4)
      throw UsageError("rows span a subspace of dimension " + std::to_string(l.vector_dim()) + ", expected 2, 3 or 4");
    const auto r = sections::codim2_profile(d, l, p);
    j["dimension"] = r.dim;
    j["segre_side"] = r.segre_side;
    j["igusa_side"] = r.igusa_side;
    j["generic"] = r.generic;
    j["matches_table"] = r.matches_table;
    j["topological_euler"] = r.topological_euler;
    j["exceptional_rank"] = r.exceptional_rank;
    j["prime"] = p.modulus();
    j["oracle_points"] = r.oracle_points;
    os << r.to_string() << "\n";
    if (l.vector_dim() == 3 && r.generic) {
      const auto m = sections::elliptic_j_match(d, l);
      j["j_segre"] = m.j1.get_str();
      j["j_igusa"] = m.j2.get_str();
      j["j_equal"] = m.equal;
      os << "j(segre side) = " << m.j1.get_str() << ", j(igusa side) = " << m.j2.get_str() << (m.equal ? " (equal)" : " (differ)") << "\n";
    }
    emit(g, out, j, os.str());
    return 0;
  }

  const auto [h, changed] = traceless_point(coords);
  j["point"] = vector_string(h.coords());
  j["projected"] = changed;
  if (changed) os << "projected to the traceless hyperplane: " << h.to_string() << "\n";
  if (kind == "hyperplane") {
    const auto t = sections::classify_hyperplane(d, h);
    j["type"] = t.to_string();
    j["features"] = t.features.to_string();
    os << t.to_string() << "\n" << t.features.to_string() << "\n";
    if (oracle) {
      const auto prof = sections::oracle_singular_profile(d, h, p);
      const bool ok = sections::implied_profile(t, p.modulus()).matches(prof);
      j["oracle"] = {{"prime", p.modulus()}, {"profile", prof.to_string()}, {"agrees", ok}};
      os << "oracle F_" << p.modulus() << ": " << prof.to_string() << (ok ? " (agrees)" : " (disagrees)") << "\n";
    }
  } else if (kind == "dual-hyperplane") {
    const auto t = sections::classify_dual_hyperplane(d, h);
    j["type"] = t.to_string();
    j["dual_fiber"] = sections::to_string(sections::dual_fiber(d, h));
    os << t.to_string() << "\nfiber of the dual map: " << sections::to_string(sections::dual_fiber(d, h)) << "\n";
    if (oracle) {
      const auto prof = sections::oracle_dual_profile(d, h, p);
      j["oracle"] = {{"prime", p.modulus()}, {"singular_count", prof.singular_count}, {"perfect_square", prof.perfect_square}};
      os << "oracle F_" << p.modulus() << ": " << prof.singular_count << " singular points"
         << (prof.perfect_square ? ", restriction is a square" : "") << "\n";
    }
  } else if (kind == "point-fiber") {
    if (side != "segre" && side != "igusa") throw UsageError("--side must be segre or igusa");
    const auto f = sections::derived_point_fiber(d, h, side == "segre" ? sections::FiberSide::Segre : sections::FiberSide::Igusa);
    j["side"] = side;
    j["fiber"] = f.to_string();
    os << f.to_string() << "\n";
  } else {
    throw UsageError("unknown classify kind '" + kind + "' (hyperplane, dual-hyperplane, plane, point-fiber)");
  }
  emit(g, out, j, os.str());
  return 0;
}

json gram_json(const ktheory::GramMatrix& m) {
  return {{"labels", m.labels},
          {"entries", m.entries},
          {"blocks", m.blocks},
          {"unitriangular", m.unit_diagonal() && m.unitriangular()}};
}

ktheory::Collection collection(const std::string& name) {
  const auto names = ktheory::builtin_collection_names();
  if (std::find(names.begin(), names.end(), name) == names.end()) {
    std::string all;
    for (const auto& n : names) all += (all.empty() ? "" : ", ") + n;
    throw UsageError("unknown collection '" + name + "' (" + all + ")");
  }
  return ktheory::builtin_collection(name);
}

int gram_command(const Globals& g, const std::string& name, std::ostream& out) {
  const auto c = collection(name);
  const auto m = ktheory::gram(c);
  json j{{"collection", name}, {"ambient", ktheory::ambient_name(c.ambient)}};
  j.update(gram_json(m));
  std::ostringstream os;
  os << name << " on " << ktheory::ambient_name(c.ambient) << "\n" << m.to_string()
     << "unitriangular: " << (m.unit_diagonal() && m.unitriangular() ? "yes" : "no") << "\n";
  emit(g, out, j, os.str());
  return 0;
}

int mutate_command(const Globals& g, const std::string& name, std::size_t index, const std::string& dir, std::ostream& out) {
  if (dir != "left" && dir != "right") throw UsageError("direction must be left or right");
  const auto c = collection(name);
  if (index + 1 >= c.items.size())
    throw UsageError("index " + std::to_string(index) + " out of range (0.." + std::to_string(c.items.size() - 2) + ")");
  const auto m = ktheory::mutate(c, index, dir == "left" ? ktheory::Direction::Left : ktheory::Direction::Right);
  const auto gm = ktheory::gram(m);
  json classes = json::array();
  std::ostringstream os;
  for (const auto& it : m.items) {
    classes.push_back({{"label", it.label}, {"class", ktheory::to_string(it.cls)}});
    os << it.label << " = " << ktheory::to_string(it.cls) << "\n";
  }
  os << gm.to_string();
  json j{{"collection", name}, {"index", index}, {"direction", dir}, {"classes", classes}};
  j.update(gram_json(gm));
  emit(g, out, j, os.str());
  return 0;
}

int hochschild_command(const Globals& g, const std::string& name, std::ostream& out) {
  const auto names = quiver::builtin_algebra_names();
  if (std::find(names.begin(), names.end(), name) == names.end() && name != "6-subspace")
    throw UsageError("unknown algebra '" + name + "'");
  const auto a = quiver::builtin_algebra(name);
  const auto h = quiver::hochschild_dims(a);
  const auto dims = a.graded_dimensions();
  json j{{"algebra", a.name()}, {"dimension", a.dimension()}, {"graded_dimensions", dims},
         {"hh0", h.hh0}, {"hh1", h.hh1}, {"hh2", h.hh2},
         {"coxeter_polynomial", quiver::polynomial_to_string(quiver::coxeter_polynomial(a))}};
  std::ostringstream os;
  os << a.name() << ": dim " << a.dimension() << ", HH^0..2 = (" << h.hh0 << "," << h.hh1 << "," << h.hh2 << ")\n"
     << "coxeter polynomial " << quiver::polynomial_to_string(quiver::coxeter_polynomial(a)) << "\n";
  emit(g, out, j, os.str());
  return 0;
}

int scan_command(const Globals& g, const std::string& which, std::ostream& out, std::ostream& err) {
  if (!g.prime) throw UsageError("scan needs --prime");
  if (which != "segre" && which != "igusa") throw UsageError("scan target must be segre or igusa");
  const Field p = checked_prime(*g.prime);
  const auto& d = geometry::data();
  const auto& hs = which == "segre" ? d.segre6 : d.igusa6;
  const auto dir = resolve_cache_dir(g.cache_dir);
  std::optional<ScanCache> cache;
  if (dir) cache.emplace(*dir);
  err << "scanning " << which << " over F_" << p.modulus() << " (" << projective::projective_point_count(5, p.modulus())
      << " points)" << (cache ? ", cache " + cache->dir().string() : "") << "\n";
  bool hit = false;
  const auto pts = cached_singular_locus(hs, p.modulus(), cache ? &*cache : nullptr, &hit);
  err << (hit ? "read from cache" : "scan complete") << "\n";
  json list = json::array();
  std::ostringstream os;
  for (const auto& pt : pts) {
    list.push_back(vector_string(pt.coords()));
    os << pt.to_string() << "\n";
  }
  os << pts.size() << " singular points\n";
  emit(g, out, json{{"form", which}, {"prime", p.modulus()}, {"hash", form_hash(hs)}, {"count", pts.size()}, {"points", list}},
       os.str());
  return 0;
}

}  // namespace

std::vector<mpq_class> parse_coordinates(const std::string& text) {
  std::vector<mpq_class> out;
  std::stringstream ss(text);
  std::string item;
  std::size_t offset = 0;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(exact::parse_rational(item));
    } catch (const ParseError& e) {
      throw ParseError("coordinate '" + item + "' is not a rational number", offset + e.position());
    }
    offset += item.size() + 1;
  }
  if (out.empty()) throw ParseError("no coordinates given", 0);
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Segre cubic / Igusa quartic verification toolkit", "segre"};
  app.fallthrough();
  app.require_subcommand(1);
  Globals g;
  app.add_option("--prime", g.prime, "prime field for scans and oracle checks");
  app.add_option("--seed", g.seed, "seed for randomized checks")->capture_default_str();
  app.add_flag("--json", g.json, "machine-readable output");
  app.add_flag("--timing", g.timing, "record runtime_ms in reports");
  app.add_option("--cache-dir", g.cache_dir, "scan cache directory (default: $SEGRE_CACHE_DIR)");

  std::string suite, kind, coords, side = "segre", name, dir, target;
  std::size_t index = 0;
  bool oracle = false;
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", suite, "all, configuration, duality, sections, ktheory, quiver")->required();
  auto* cls = app.add_subcommand("classify", "classify a section or point");
  cls->add_option("kind", kind, "hyperplane, dual-hyperplane, plane, point-fiber")->required();
  cls->add_option("coords", coords, "a,b,c,d,e,f  (plane: rows separated by ';')")->required();
  cls->add_flag("--oracle", oracle, "cross-check against the F_p singular-locus oracle");
  cls->add_option("--side", side, "segre or igusa (point-fiber)");
  auto* gr = app.add_subcommand("gram", "Gram matrix of a builtin collection");
  gr->add_option("collection", name)->required();
  auto* mu = app.add_subcommand("mutate", "mutate a builtin collection at a position");
  mu->add_option("collection", name)->required();
  mu->add_option("index", index, "0-based position of the left object of the pair")->required();
  mu->add_option("direction", dir, "left or right")->required();
  auto* hh = app.add_subcommand("hochschild", "Hochschild dimensions of a builtin algebra");
  hh->add_option("algebra", name)->required();
  auto* sc = app.add_subcommand("scan", "singular locus over F_p");
  sc->add_option("form", target, "segre or igusa")->required();

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << "run with --help for usage\n";
    return 2;
  }

  try {
    if (verify->parsed()) {
      SuiteOptions opts;
      opts.seed = g.seed;
      opts.prime = g.prime;
      if (g.prime) checked_prime(*g.prime);
      opts.timing = g.timing;
      if (const auto d = resolve_cache_dir(g.cache_dir)) opts.cache.emplace(*d);
      const auto names = suite_names();
      if (suite != "all" && std::find(names.begin(), names.end(), suite) == names.end())
        throw UsageError("unknown suite '" + suite + "'");
      const Report r = run_suite(suite, opts);
      out << (g.json ? render_json(r) : render_text(r));
      return r.exit_code();
    }
    if (cls->parsed()) return classify(g, kind, coords, oracle, side, out);
    if (gr->parsed()) return gram_command(g, name, out);
    if (mu->parsed()) return mutate_command(g, name, index, dir, out);
    if (hh->parsed()) return hochschild_command(g, name, out);
    if (sc->parsed()) return scan_command(g, target, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace segre::cli
