#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace segre::cli {

enum class Status { Pass, Fail, Flagged };
std::string status_name(Status s);

struct CheckResult {
  std::string suite;
  std::string name;
  Status status = Status::Fail;
  std::string expected;
  std::string actual;
  std::optional<std::uint64_t> prime;
  long runtime_ms = 0;
};

struct Report {
  std::string suite;
  std::vector<CheckResult> checks;

  std::size_t count(Status s) const;
  // 0 when nothing failed; flagged checks do not count as failures.
  int exit_code() const { return count(Status::Fail) == 0 ? 0 : 1; }
};

std::string render_json(const Report& r);
std::string render_text(const Report& r);

}  // namespace segre::cli
