#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "segre/projective/projective.hpp"

namespace segre::cli {

// Stable 64-bit FNV-1a digest of the canonical form text, as 16 hex digits.
std::string form_hash(const projective::Hypersurface& hs);

// Directory of scan results, one file per (form hash, p):
//   # form=<hash> p=<p> count=<n>
//   r0,r1,...,r5        (canonical residues, sorted)
class ScanCache {
 public:
  explicit ScanCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

  const std::filesystem::path& dir() const { return dir_; }
  std::filesystem::path file_for(const std::string& hash, std::uint64_t p) const;
  // std::nullopt when absent; throws segre::Error naming the file when it is unreadable or malformed.
  std::optional<std::vector<projective::FpPoint>> load(const std::string& hash, std::uint64_t p) const;
  void store(const std::string& hash, std::uint64_t p, const std::vector<projective::FpPoint>& points) const;

 private:
  std::filesystem::path dir_;
};

// Flag, then SEGRE_CACHE_DIR, then none.
std::optional<std::filesystem::path> resolve_cache_dir(const std::optional<std::string>& flag);

// singular_locus_scan over F_p of the rational hypersurface, reading and filling the cache when given.
std::vector<projective::ProjectivePoint> cached_singular_locus(const projective::Hypersurface& hs, std::uint64_t p,
                                                               const ScanCache* cache, bool* hit = nullptr);

}  // namespace segre::cli
