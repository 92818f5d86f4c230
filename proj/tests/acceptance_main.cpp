// Acceptance gate: every criterion below must hold exactly (the engine
// is integer/rational arithmetic throughout, so there are no tolerances
// to tune).  One line is printed per criterion; the exit status is the
// number of failed criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "spw/cuspidal.hpp"
#include "spw/report.hpp"

using namespace spw;

namespace {

int failures = 0;

void criterion(int id, const std::string& name,
               const std::function<std::string()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  std::string problem;
  try {
    problem = body();
  } catch (const std::exception& e) {
    problem = std::string("exception: ") + e.what();
  }
  const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
  if (problem.empty()) {
    std::printf("[PASS] criterion %02d: %s (%lldms)\n", id, name.c_str(),
                (long long)ms);
  } else {
    ++failures;
    std::printf("[FAIL] criterion %02d: %s -- %s (%lldms)\n", id, name.c_str(),
                problem.c_str(), (long long)ms);
  }
  std::fflush(stdout);
}

// Runs the named suite and reports the first failing record, optionally
// restricted to ids with one of the given prefixes.
std::string run_filtered(RunConfig cfg, const std::string& suite,
                         const std::vector<std::string>& id_prefixes = {}) {
  cfg.suites = {suite};
  Report rep = run_suites(cfg);
  for (const auto& r : rep.checks) {
    if (!id_prefixes.empty()) {
      bool match = false;
      for (const auto& p : id_prefixes)
        if (r.id.rfind(p, 0) == 0) match = true;
      if (!match) continue;
    }
    if (!r.pass)
      return "n=" + std::to_string(cfg.n) + " " + r.suite + "/" + r.id +
             (r.detail.empty() ? "" : " -- " + r.detail);
  }
  return "";
}

std::string over_ranks(int lo, int hi,
                       const std::function<std::string(int)>& body) {
  for (int n = lo; n <= hi; ++n) {
    std::string p = body(n);
    if (!p.empty()) return p;
  }
  return "";
}

}  // namespace

int main() {
  RunConfig base;
  base.seed = 20250810;

  criterion(1, "lie structure exhaustive, n=2..4", [&] {
    return over_ranks(2, 4, [&](int n) {
      RunConfig cfg = base;
      cfg.n = n;
      return run_filtered(cfg, "lie",
                          {"antisymmetry", "jacobi", "closure",
                           "grading-additive", "ad-s-cubed", "basis-count",
                           "form-minus1", "theta-values"});
    });
  });

  criterion(2, "phi is a homomorphism on all basis pairs, n=2..4", [&] {
    return over_ranks(2, 4, [&](int n) {
      RunConfig cfg = base;
      cfg.n = n;
      return run_filtered(cfg, "phi");
    });
  });

  criterion(3, "sigma pinned to the printed twist values, n=2..4", [&] {
    return over_ranks(2, 4, [&](int n) {
      RunConfig cfg = base;
      cfg.n = n;
      return run_filtered(cfg, "lie", {"sigma-pins", "sigma-bracket"});
    });
  });

  criterion(4, "centralizer lemma for every A-label, n=2,3", [&] {
    return over_ranks(2, 3, [&](int n) {
      RunConfig cfg = base;
      cfg.n = n;
      return run_filtered(cfg, "centralizer");
    });
  });

  criterion(5, "inversion identities reconstruct every X_alpha, n=2,3", [&] {
    return over_ranks(2, 3, [&](int n) {
      RunConfig cfg = base;
      cfg.n = n;
      return run_filtered(cfg, "inversion");
    });
  });

  criterion(6, "factorization round-trip on 300 random elements", [&] {
    return over_ranks(2, 3, [&](int n) {
      RunConfig cfg = base;
      cfg.n = n;
      return run_filtered(cfg, "factorize");
    });
  });

  criterion(7, "PBW independence of A-monomials to degree 2, n=2,3", [&] {
    return over_ranks(2, 3, [&](int n) {
      RunConfig cfg = base;
      cfg.n = n;
      cfg.max_degree = 2;
      return run_filtered(cfg, "pbw");
    });
  });

  criterion(8, "one-dimensional module scalar table, n=2,3", [&] {
    std::string p = over_ranks(2, 3, [&](int n) {
      RunConfig cfg = base;
      cfg.n = n;
      return run_filtered(cfg, "onedim");
    });
    if (!p.empty()) return p;
    // The displayed corner value -n^2 + 1/4.
    for (int n = 2; n <= 3; ++n) {
      LieAlgebra L(n);
      UsAlgebra U(L);
      WAlgebra W(U);
      Rational want = n == 2 ? rat(-15, 4) : rat(-35, 4);
      if (one_dim_rep(W).scalars.at({AKind::Neg11, 0, 0}) != want)
        return std::string("A(-2e1) scalar wrong at n=") + std::to_string(n);
    }
    return std::string();
  });

  criterion(9, "Whittaker structure of Q_e^sigma and P^tau", [&] {
    return over_ranks(2, 3, [&](int n) {
      RunConfig cfg = base;
      cfg.n = n;
      return run_filtered(cfg, "qe-whittaker");
    });
  });

  criterion(10, "cuspidal windows: relations, injectivity, weights", [&] {
    std::string p;
    {
      RunConfig cfg = base;
      cfg.n = 2;
      cfg.window_radius = 3;
      p = run_filtered(cfg, "cuspidal");
    }
    if (!p.empty()) return p;
    RunConfig cfg = base;
    cfg.n = 3;
    cfg.window_radius = 2;
    return run_filtered(cfg, "cuspidal");
  });

  criterion(11, "intertwiner G_{a+1/2}(V_{-1/2}) ~ N(a), 5 random a", [&] {
    RunConfig cfg = base;
    cfg.n = 2;
    cfg.window_radius = 3;
    return run_filtered(cfg, "intertwiner");
  });

  criterion(12, "negative controls: every single mutation is caught", [&] {
    // Structure constants: every entry of the (a, b, target) grid.
    const int d = 2 * (2 * 2 + 1);
    for (int idx = 0; idx < d * d * d; ++idx) {
      RunConfig cfg = base;
      cfg.n = 2;
      cfg.suites = {"lie"};
      cfg.corrupt_bracket = idx;
      Report rep = run_suites(cfg);
      if (rep.failed() == 0)
        return "bracket mutation " + std::to_string(idx) + " undetected";
      bool witnessed = false;
      for (const auto& r : rep.checks)
        if (!r.pass && !r.detail.empty()) witnessed = true;
      if (!witnessed)
        return "bracket mutation " + std::to_string(idx) + " has no witness";
    }
    // One-dimensional scalars: every label.
    for (int idx = 0; idx < 6; ++idx) {
      RunConfig cfg = base;
      cfg.n = 2;
      cfg.suites = {"onedim"};
      cfg.corrupt_onedim = idx;
      Report rep = run_suites(cfg);
      if (rep.failed() == 0)
        return "one-dim mutation " + std::to_string(idx) + " undetected";
    }
    return std::string();
  });

  std::printf("%s: %d of 12 criteria failed\n",
              failures ? "FAILURE" : "SUCCESS", failures);
  return failures;
}
