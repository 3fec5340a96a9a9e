#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "segre/cli/cache.hpp"
#include "segre/cli/report.hpp"

namespace segre::cli {

inline constexpr std::uint64_t kDefaultSeed = 20240607;

struct SuiteOptions {
  std::uint64_t seed = kDefaultSeed;
  std::optional<std::uint64_t> prime;  // extra scan prime for the configuration suite
  std::optional<ScanCache> cache;
  bool timing = false;                 // record runtime_ms (off keeps reports byte-identical)
};

// configuration, duality, sections, ktheory, quiver; "all" runs them in this order.
std::vector<std::string> suite_names();
// Throws segre::Error on an unknown name.
Report run_suite(const std::string& name, const SuiteOptions& opts);

}  // namespace segre::cli
