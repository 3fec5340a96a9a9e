#include "segre/cli/cache.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "segre/exact/error.hpp"

namespace segre::cli {

namespace fs = std::filesystem;
using projective::FpPoint;

std::string form_hash(const projective::Hypersurface& hs) {
  std::uint64_t h = 1469598103934665603ULL;
  const std::string text = hs.form().to_string() + (hs.traceless() ? "|traceless" : "");
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

fs::path ScanCache::file_for(const std::string& hash, std::uint64_t p) const {
  return dir_ / (hash + "_p" + std::to_string(p) + ".txt");
}

std::optional<std::vector<FpPoint>> ScanCache::load(const std::string& hash, std::uint64_t p) const {
  const auto path = file_for(hash, p);
  std::error_code ec;
  if (!fs::exists(path, ec)) return std::nullopt;
  std::ifstream in(path);
  if (!in) throw Error("cannot read cache file " + path.string());
  std::string line;
  std::getline(in, line);
  std::size_t count = 0;
  {
    std::istringstream hs(line);
    std::string mark, form, prime, cnt;
    hs >> mark >> form >> prime >> cnt;
    if (mark != "#" || form != "form=" + hash || prime != "p=" + std::to_string(p) || cnt.rfind("count=", 0) != 0)
      throw Error("malformed cache header in " + path.string());
    try {
      count = std::stoul(cnt.substr(6));
    } catch (const std::exception&) {
      throw Error("malformed cache header in " + path.string());
    }
  }
  std::vector<FpPoint> points;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    FpPoint pt;
    std::istringstream ls(line);
    std::string field;
    while (std::getline(ls, field, ',')) {
      try {
        const auto v = std::stoull(field);
        if (v >= p) throw Error("");
        pt.push_back(v);
      } catch (const std::exception&) {
        throw Error("malformed residue '" + field + "' in " + path.string());
      }
    }
    points.push_back(std::move(pt));
  }
  if (points.size() != count) throw Error("cache file " + path.string() + " lists " + std::to_string(points.size()) +
                                          " points but its header says " + std::to_string(count));
  return points;
}

void ScanCache::store(const std::string& hash, std::uint64_t p, const std::vector<FpPoint>& points) const {
  std::error_code ec;
  fs::create_directories(dir_, ec);
  if (ec) throw Error("cannot create cache directory " + dir_.string() + ": " + ec.message());
  const auto path = file_for(hash, p);
  const auto tmp = fs::path(path.string() + ".tmp");
  {
    std::ofstream out(tmp);
    if (!out) throw Error("cannot write cache file " + tmp.string());
    out << "# form=" << hash << " p=" << p << " count=" << points.size() << "\n";
    for (const auto& pt : points) {
      for (std::size_t i = 0; i < pt.size(); ++i) out << (i ? "," : "") << pt[i];
      out << "\n";
    }
    if (!out) throw Error("cannot write cache file " + tmp.string());
  }
  fs::rename(tmp, path, ec);
  if (ec) throw Error("cannot move " + tmp.string() + " to " + path.string() + ": " + ec.message());
}

std::optional<fs::path> resolve_cache_dir(const std::optional<std::string>& flag) {
  if (flag && !flag->empty()) return fs::path(*flag);
  if (const char* env = std::getenv("SEGRE_CACHE_DIR"); env && *env) return fs::path(env);
  return std::nullopt;
}

std::vector<projective::ProjectivePoint> cached_singular_locus(const projective::Hypersurface& hs, std::uint64_t p,
                                                               const ScanCache* cache, bool* hit) {
  const auto f = exact::Field::prime(p);
  const auto to_points = [&](const std::vector<FpPoint>& raw) {
    std::vector<projective::ProjectivePoint> out;
    for (const auto& r : raw) {
      exact::Vector v;
      for (auto x : r) v.push_back(exact::Scalar::residue(static_cast<long long>(x), f));
      out.emplace_back(v);
    }
    return out;
  };
  const std::string hash = form_hash(hs);
  if (hit) *hit = false;
  if (cache) {
    if (auto raw = cache->load(hash, p)) {
      if (hit) *hit = true;
      return to_points(*raw);
    }
  }
  auto pts = projective::singular_locus_scan(hs.in(f), f);
  std::vector<FpPoint> raw;
  for (const auto& pt : pts) {
    FpPoint r;
    for (const auto& c : pt.coords()) r.push_back(c.residue_value());
    raw.push_back(std::move(r));
  }
  std::sort(raw.begin(), raw.end());
  if (cache) cache->store(hash, p, raw);
  return to_points(raw);
}

}  // namespace segre::cli
