#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace spw {

struct RunConfig {
  int n = 2;
  std::vector<std::string> suites;  // empty = all
  int max_degree = 2;
  int window_radius = 3;
  std::uint64_t seed = 1;
  std::string format = "text";  // text | json
  std::string out_path;         // empty = stdout
  int jobs = 1;
  bool timings = false;  // wall times are opt-in so reports stay byte-identical

  // Negative-control hooks (test mode): corrupt one cached structure
  // constant, indexed into the (a, b, target) grid, or one scalar of the
  // one-dimensional module, indexed into the label list.
  std::optional<int> corrupt_bracket;
  std::optional<int> corrupt_onedim;
};

struct CheckRecord {
  std::string suite;
  std::string id;
  bool pass = false;
  std::string detail;  // witness / counterexample / exact values
  long long micros = 0;
};

struct Report {
  RunConfig config;
  std::vector<CheckRecord> checks;

  int failed() const;
  bool all_pass() const { return failed() == 0; }

  // Canonical record order: by suite, then check id; independent of
  // scheduling.
  void sort_canonical();

  std::string to_text() const;
  std::string to_json() const;
};

std::vector<std::string> known_suites();

// Executes the selected suites (all when the selection is empty), up to
// config.jobs of them concurrently.  Throws std::invalid_argument on a
// bad configuration.
Report run_suites(const RunConfig& cfg);

// splitmix64: tiny deterministic generator so reports do not depend on
// the standard library's distribution implementations.
struct Rng {
  std::uint64_t state;
  explicit Rng(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  std::uint64_t below(std::uint64_t k) { return k ? next() % k : 0; }
  int range(int lo, int hi) {  // inclusive bounds
    return lo + (int)below((std::uint64_t)(hi - lo + 1));
  }
};

}  // namespace spw
