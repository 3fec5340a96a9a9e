#include "segre/cli/report.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace segre::cli {

std::string status_name(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Flagged: return "flagged";
  }
  return "fail";
}

std::size_t Report::count(Status s) const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [&](const CheckResult& c) { return c.status == s; }));
}

std::string render_json(const Report& r) {
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (const auto& c : r.checks) {
    nlohmann::ordered_json j;
    j["name"] = c.name;
    j["status"] = status_name(c.status);
    j["expected"] = c.expected;
    j["actual"] = c.actual;
    j["prime"] = c.prime ? nlohmann::ordered_json(*c.prime) : nlohmann::ordered_json(nullptr);
    j["runtime_ms"] = c.runtime_ms;
    checks.push_back(std::move(j));
  }
  nlohmann::ordered_json out;
  out["suite"] = r.suite;
  out["checks"] = std::move(checks);
  return out.dump(2) + "\n";
}

std::string render_text(const Report& r) {
  std::ostringstream os;
  for (const auto& c : r.checks) {
    os << "[" << status_name(c.status) << "] " << c.name;
    if (c.prime) os << " (p=" << *c.prime << ")";
    os << ": " << c.actual;
    if (c.status != Status::Pass) os << " (expected " << c.expected << ")";
    if (c.runtime_ms) os << " [" << c.runtime_ms << " ms]";
    os << "\n";
  }
  os << r.suite << ": " << r.count(Status::Pass) << " pass, " << r.count(Status::Fail) << " fail, "
     << r.count(Status::Flagged) << " flagged\n";
  return os.str();
}

}  // namespace segre::cli
