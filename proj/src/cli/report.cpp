#include "qwb/cli/report.hpp"

#include "qwb/scalar.hpp"

namespace qwb::cli {

RunConfig RunConfig::fast_defaults() {
  RunConfig c;
  c.fast = true;
  c.tolerance = 1e-4;
  c.cutoff = 6;
  c.grid_points = 61;
  c.sphere_resolution = 8;
  c.zeta_cutoff = 100000;
  c.zeta_primes = 10000;
  c.random_samples = 40;
  return c;
}

nlohmann::json RunConfig::to_json() const {
  nlohmann::json j{{"hbar", rational_string(hbar)},
                   {"seed", seed},
                   {"cutoff", cutoff},
                   {"grid_points", grid_points},
                   {"grid_half_width", grid_half_width},
                   {"sphere_resolution", sphere_resolution},
                   {"zeta_cutoff", zeta_cutoff},
                   {"zeta_primes", zeta_primes},
                   {"random_samples", random_samples},
                   {"fast", fast}};
  j["tolerance"] = tolerance ? nlohmann::json(*tolerance) : nlohmann::json("pinned");
  return j;
}

bool SuiteReport::passed() const {
  for (const auto& c : checks) {
    if (!c.passed) return false;
  }
  return true;
}

bool RunReport::passed() const {
  for (const auto& s : suites) {
    if (!s.passed()) return false;
  }
  return true;
}

nlohmann::json RunReport::to_json() const {
  nlohmann::json suites_json = nlohmann::json::array();
  std::size_t total = 0;
  std::size_t failed = 0;
  for (const auto& s : suites) {
    nlohmann::json checks = nlohmann::json::array();
    std::size_t sfailed = 0;
    for (const auto& c : s.checks) {
      nlohmann::json j{{"id", c.id},
                       {"name", c.name},
                       {"anchor", c.anchor},
                       {"status", c.passed ? "pass" : "fail"},
                       {"witness", c.witness}};
      j["tolerance"] = c.tolerance ? nlohmann::json(*c.tolerance) : nlohmann::json("exact");
      if (config.timings) j["runtime_ms"] = c.runtime_ms;
      checks.push_back(std::move(j));
      if (!c.passed) ++sfailed;
    }
    total += s.checks.size();
    failed += sfailed;
    suites_json.push_back({{"name", s.name},
                           {"checks", std::move(checks)},
                           {"passed", s.checks.size() - sfailed},
                           {"failed", sfailed}});
  }
  return {{"suite", suite},
          {"config", config.to_json()},
          {"suites", std::move(suites_json)},
          {"total", total},
          {"failed", failed},
          {"status", failed == 0 ? "pass" : "fail"}};
}

std::string RunReport::serialize() const { return to_json().dump(2) + "\n"; }

}  // namespace qwb::cli
