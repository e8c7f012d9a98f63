#include "symcat/verify.hpp"

#include <chrono>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "symcat/catalog.hpp"
#include "symcat/curvature.hpp"
#include "symcat/oracle.hpp"
#include "symcat/poincare.hpp"

namespace symcat::verify {

namespace {

class Recorder {
 public:
  explicit Recorder(std::string suite) : start_(std::chrono::steady_clock::now()) { report_.suite = std::move(suite); }

  void space() { ++report_.spaces; }

  void check(bool ok, const SpaceDescriptor& s, const std::string& what, const std::string& detail = "") {
    check(ok, space_id(s), what, detail);
  }

  void check(bool ok, const std::string& where, const std::string& what, const std::string& detail = "") {
    ++report_.checks;
    if (!ok) report_.failures.push_back({where, what, detail});
  }

  SuiteReport finish() {
    report_.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    return std::move(report_);
  }

 private:
  SuiteReport report_;
  std::chrono::steady_clock::time_point start_;
};

bool palindromic_betti(const PoincareResult& r) {
  for (std::size_t i = 0, j = r.betti.size() - 1; i < j; ++i, --j)
    if (r.betti[i] != r.betti[j]) return false;
  return true;
}

}  // namespace

Suite parse_suite(const std::string& name) {
  if (name == "all") return Suite::all;
  if (name == "poincare") return Suite::poincare;
  if (name == "curvature") return Suite::curvature;
  if (name == "oracle") return Suite::oracle;
  throw std::invalid_argument("unknown suite '" + name + "' (expected all, poincare, curvature, oracle)");
}

SuiteReport poincare_suite(int max_dim) {
  Recorder rec("poincare");
  for (const auto& s : enumerate(max_dim)) {
    rec.space();
    PoincareResult r;
    try {
      r = poincare(s);
    } catch (const std::exception& e) {
      rec.check(false, s, "poincare", e.what());
      continue;
    }
    const auto flags = classify(s);
    const int dim = dimension(s);
    rec.check(has_nonnegative_integer_coefficients(r.chi_t), s, "nonnegative integer coefficients");
    rec.check(r.chi_t.degree() == static_cast<std::size_t>(dim), s, "degree = dim");
    rec.check(r.b(0) == 1, s, "b0 = 1");
    rec.check(palindromic_betti(r), s, "Poincaré duality");

    const auto [euler, wang] = euler_both_ways(s);
    const bool unequal = s.family == Family::TypeII || !degree_data(s).equal_rank();
    if (unequal) {
      rec.check(euler == 0, s, "χ = 0 for unequal rank", std::to_string(euler));
    } else {
      rec.check(wang.has_value() && *wang == euler, s, "χ(-1) = degree ratio",
                std::to_string(euler) + " vs " + (wang ? std::to_string(*wang) : "none"));
    }

    if (flags.is_semisimple) {
      rec.check((r.b(2) == 1) == flags.is_hermitian && r.b(2) <= 1, s, "b2 = 1 iff Hermitian",
                "b2 = " + std::to_string(r.b(2)));
      rec.check((r.b(3) != 0) == flags.is_type_ii, s, "b3 != 0 iff type II", "b3 = " + std::to_string(r.b(3)));
      if (flags.is_type_ii) rec.check(r.b(3) == 1, s, "b3 = 1 for a simple group");
    }

    if (s.family == Family::RealGrassDEven)
      rec.check(deven_closed_form(s.a, s.b) == r.chi_t, s, "even real Grassmannian closed form");
    if (s.family == Family::RealGrassB && s.a == 1)
      rec.check(quantum_number(2L * s.b + 2, 2) == r.chi_t, s, "odd quadric = [2m+2]_{t^2}");
    if (s.family == Family::RealGrassDEven && s.a == 1)
      rec.check(quantum_number(s.b + 1, 2) * quantum_number(2, 2L * s.b) == r.chi_t, s,
                "even quadric = [m+1]_{t^2}[2]_{t^{2m}}");
    if (s.family == Family::RealGrassDEven && s.a == 2) {
      const QPoly q = quantum_number(s.b + 1, 4);
      rec.check(q * (q + QPoly::monomial(2 * static_cast<std::size_t>(s.b))) == r.chi_t, s,
                "SO(4+2l)/(SO(4)×SO(2l)) identity");
    }
  }
  return rec.finish();
}

SuiteReport curvature_suite(int max_dim) {
  Recorder rec("curvature");
  for (const auto& s : enumerate(max_dim)) {
    rec.space();
    const auto flags = classify(s);
    const auto iso = isotropy(s);
    const long dim_m = dimension(s);
    Spectrum sp;
    try {
      sp = spectrum(s);
    } catch (const std::exception& e) {
      rec.check(false, s, "spectrum", e.what());
      continue;
    }
    rec.check(sp.total_multiplicity() == iso.total_dim(), s, "Σ mult = dim h");
    rec.check(sp.zero_multiplicity == dim_m * (dim_m - 1) / 2 - iso.total_dim(), s, "zero mult = C(dim M,2) - dim h");

    const auto t1 = theorem1_check(s);
    rec.check(t1.in_range, s, "eigenvalues in [0, 1/2]");
    rec.check(t1.ok, s, "theorem 1", std::to_string(t1.distinct_nonzero) + " distinct nonzero eigenvalues");
    rec.check(trace_check(s), s, "trace identity");
    rec.check(theorem2_check(s), s, "theorem 2");
    rec.check(theorem3_check(s), s, "theorem 3");

    if (flags.is_semisimple) {
      bool quarter = true;
      for (const auto& e : sp.entries) quarter = quarter && e.value == make_rational(1, 4);
      if (flags.is_type_ii) rec.check(quarter, s, "type II: λ = 1/4");
      if (flags.is_simple_isotropy)
        rec.check(quarter == (dim_m == iso.total_dim()), s, "simple isotropy: λ = 1/4 only for groups");
    }

    std::string detail;
    for (const auto& d : overlap_discrepancies(s)) detail += d + "; ";
    rec.check(detail.empty(), s, "formula overlap consistency", detail);
  }
  for (const auto& s : hermitian_quadruple_coincidence()) {
    const auto values = spectrum(s).distinct_nonzero();
    rec.check(values == std::vector<Rational>{make_rational(1, 6), make_rational(1, 2)}, s,
              "Hermitian spaces with spectrum {1/2, 1/6}");
  }
  return rec.finish();
}

SuiteReport oracle_suite(int max_dim, double tol, int max_dim_p) {
  Recorder rec("oracle");
  using oracle::AlgebraKind;
  const struct {
    AlgebraKind kind;
    int from, to;
  } families[] = {{AlgebraKind::so, 3, 12}, {AlgebraKind::su, 2, 8}, {AlgebraKind::sp, 1, 5}};
  for (const auto& f : families)
    for (int n = f.from; n <= f.to; ++n) {
      const std::string name = oracle::kind_name(f.kind) + "(" + std::to_string(n) + ")";
      const double expected = f.kind == AlgebraKind::so ? n - 2 : f.kind == AlgebraKind::su ? 2 * n : 2 * (n + 1);
      try {
        const auto fit = oracle::killing_constant(oracle::build_algebra(f.kind, n));
        rec.check(std::abs(fit.standard() - expected) < 1e-8 * expected, name, "Killing constant",
                  std::to_string(fit.standard()) + " vs " + std::to_string(expected));
      } catch (const std::exception& e) {
        rec.check(false, name, "Killing constant", e.what());
      }
    }

  for (const auto& s : enumerate(std::min(max_dim, max_dim_p))) {
    if (!oracle::in_scope(s)) continue;
    rec.space();
    try {
      const auto r = oracle::compare(s, tol, max_dim_p, false);
      rec.check(r.match, s, "oracle spectrum", r.diff);
    } catch (const std::exception& e) {
      rec.check(false, s, "oracle spectrum", e.what());
    }
  }

  const auto nk = oracle::nearly_kahler_s3s3(tol);
  rec.check(nk.match, "S3xS3", "nearly-Kähler spectrum {7/24×3, 1/12×7, -1/24×5}");
  rec.check(nk.recognized.size() == 3 && nk.recognized.back().value < make_rational(5, 12) &&
                std::abs(nk.ricci - 5.0 / 12.0) < tol,
            "S3xS3", "max eigenvalue below the Einstein constant 5/12");
  return rec.finish();
}

std::vector<SuiteReport> run(Suite suite, int max_dim, double tol, int max_dim_p) {
  std::vector<SuiteReport> out;
  if (suite == Suite::all || suite == Suite::poincare) out.push_back(poincare_suite(max_dim));
  if (suite == Suite::all || suite == Suite::curvature) out.push_back(curvature_suite(max_dim));
  if (suite == Suite::all || suite == Suite::oracle) out.push_back(oracle_suite(max_dim, tol, max_dim_p));
  return out;
}

std::string summary(const std::vector<SuiteReport>& reports, std::size_t max_failures) {
  std::ostringstream out;
  std::size_t shown = 0, total = 0;
  for (const auto& r : reports) {
    out << r.suite << ": " << r.spaces << " spaces, " << r.checks << " checks, " << r.failures.size()
        << " failures (" << std::fixed;
    out.precision(2);
    out << r.seconds << " s)\n";
    total += r.failures.size();
  }
  for (const auto& r : reports)
    for (const auto& f : r.failures) {
      if (shown++ >= max_failures) break;
      out << "  FAIL [" << r.suite << "] " << f.space << ": " << f.check << (f.detail.empty() ? "" : " -- " + f.detail)
          << "\n";
    }
  if (total > max_failures) out << "  ... " << total - max_failures << " more\n";
  out << (total == 0 ? "all checks passed\n" : "verification FAILED\n");
  return out.str();
}

}  // namespace symcat::verify
