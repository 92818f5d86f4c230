#include "spw/report.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace spw {

int Report::failed() const {
  int k = 0;
  for (const auto& c : checks)
    if (!c.pass) ++k;
  return k;
}

void Report::sort_canonical() {
  std::sort(checks.begin(), checks.end(),
            [](const CheckRecord& a, const CheckRecord& b) {
              if (a.suite != b.suite) return a.suite < b.suite;
              return a.id < b.id;
            });
}

namespace {

std::string suites_str(const RunConfig& c) {
  if (c.suites.empty()) return "all";
  std::string s;
  for (size_t i = 0; i < c.suites.size(); ++i) {
    if (i) s += ",";
    s += c.suites[i];
  }
  return s;
}

}  // namespace

std::string Report::to_text() const {
  std::ostringstream os;
  os << "spw-report v1 n=" << config.n << " seed=" << config.seed
     << " suites=" << suites_str(config) << " max-degree=" << config.max_degree
     << " window-radius=" << config.window_radius << "\n";
  for (const auto& c : checks) {
    os << (c.pass ? "[PASS] " : "[FAIL] ") << c.suite << "/" << c.id;
    if (!c.detail.empty()) os << " -- " << c.detail;
    if (config.timings) os << " (" << c.micros << "us)";
    os << "\n";
  }
  os << "summary: " << checks.size() << " checks, " << failed() << " failed\n";
  return os.str();
}

std::string Report::to_json() const {
  nlohmann::ordered_json j;
  j["schema"] = "spw-report/1";
  j["config"] = {{"n", config.n},
                 {"suites", suites_str(config)},
                 {"max_degree", config.max_degree},
                 {"window_radius", config.window_radius},
                 {"seed", config.seed}};
  auto arr = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    nlohmann::ordered_json r = {{"suite", c.suite},
                                {"id", c.id},
                                {"status", c.pass ? "pass" : "fail"},
                                {"detail", c.detail}};
    if (config.timings) r["micros"] = c.micros;
    arr.push_back(std::move(r));
  }
  j["checks"] = std::move(arr);
  j["summary"] = {{"total", checks.size()}, {"failed", failed()}};
  return j.dump(2) + "\n";
}

}  // namespace spw
