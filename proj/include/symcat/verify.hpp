#pragma once

#include <string>
#include <vector>

namespace symcat::verify {

enum class Suite { all, poincare, curvature, oracle };

Suite parse_suite(const std::string& name);

struct Failure {
  std::string space;
  std::string check;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  int spaces = 0;
  long checks = 0;
  std::vector<Failure> failures;
  double seconds = 0;

  bool ok() const { return failures.empty(); }
};

/// χ(t) invariants over enumerate(max_dim): integrality, degree, b₀, duality,
/// Euler characteristic both ways, b₂/b₃ characterizations, closed-form identities.
SuiteReport poincare_suite(int max_dim);

/// Spectrum invariants, trace identity, theorem 1-3 checks and formula overlaps.
SuiteReport curvature_suite(int max_dim);

/// Killing constants, oracle spectra for in-scope spaces with dim ≤ min(max_dim, max_dim_p),
/// and the S³×S³ fixture.
SuiteReport oracle_suite(int max_dim, double tol = 1e-8, int max_dim_p = 60);

std::vector<SuiteReport> run(Suite suite, int max_dim, double tol = 1e-8, int max_dim_p = 60);

/// Per-suite counts plus the first max_failures failures in full.
std::string summary(const std::vector<SuiteReport>& reports, std::size_t max_failures = 10);

}  // namespace symcat::verify
