// Acceptance criteria AC1-AC6. One line per criterion; nonzero exit on any failure.
#include <chrono>
#include <cstdio>
#include <functional>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include "qpoly_properties.hpp"
#include "symcat/catalog.hpp"
#include "symcat/curvature.hpp"
#include "symcat/oracle.hpp"
#include "symcat/poincare.hpp"
#include "symcat/verify.hpp"

using namespace symcat;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
  std::vector<std::string> problems;

  void fail(const std::string& what) {
    ok = false;
    if (problems.size() < 8) problems.push_back(what);
  }
  void expect(bool cond, const std::string& what) {
    if (!cond) fail(what);
  }
};

struct Eig {
  long num, den, mult;
};

struct Row {
  const char* id;
  int dim;
  long euler;
  std::vector<Eig> spectrum;
  std::vector<int> dg;  // equal rank: degrees of G
  std::vector<int> dh;  //             degrees of H
  std::function<QPoly()> unequal;  // otherwise the expected χ(t)
};

QPoly one_minus(long e) { return QPoly::constant(1) - QPoly::monomial(static_cast<std::size_t>(e)); }

QPoly equal_rank_poly(const std::vector<int>& dg, const std::vector<int>& dh) {
  QPoly num = QPoly::constant(1), den = QPoly::constant(1);
  for (int d : dg) num = num * one_minus(2 * d);
  for (int d : dh) den = den * one_minus(2 * d);
  return exact_div(num, den);
}

QPoly product(std::initializer_list<QPoly> fs) {
  QPoly p = QPoly::constant(1);
  for (const auto& f : fs) p = p * f;
  return p;
}

std::vector<Row> exceptional_rows() {
  const std::vector<int> e6{2, 5, 6, 8, 9, 12}, e7{2, 6, 8, 10, 12, 14, 18},
      e8{2, 8, 12, 14, 18, 20, 24, 30}, f4{2, 6, 8, 12}, g2{2, 6};
  const auto cat = [](std::vector<int> a, std::initializer_list<int> b) {
    a.insert(a.end(), b);
    return a;
  };
  return {
      {"E6-I", 42, 0, {{7, 24, 36}}, {}, {},
       [] { return product({quantum_number(3, 8), one_plus_power(9), one_plus_power(17)}); }},
      {"E6-IV", 26, 0, {{1, 8, 52}}, {}, {}, [] { return product({one_plus_power(9), one_plus_power(17)}); }},
      {"E7-V", 70, 72, {{5, 18, 63}}, e7, {2, 3, 4, 5, 6, 7, 8}, nullptr},
      {"E8-VIII", 128, 135, {{4, 15, 120}}, e8, {2, 4, 6, 8, 10, 12, 14, 8}, nullptr},
      {"F4-II", 16, 3, {{1, 9, 36}}, f4, {2, 4, 6, 8}, nullptr},
      {"E6-III", 32, 27, {{1, 6, 45}, {1, 2, 1}}, e6, {2, 4, 6, 8, 5, 1}, nullptr},
      {"E7-VII", 54, 56, {{1, 6, 78}, {1, 2, 1}}, e7, cat(e6, {1}), nullptr},
      {"E6-II", 40, 36, {{5, 12, 3}, {1, 4, 35}}, e6, {2, 2, 3, 4, 5, 6}, nullptr},
      {"E7-VI", 64, 63, {{4, 9, 3}, {2, 9, 66}}, e7, {2, 2, 4, 6, 8, 10, 6}, nullptr},
      {"E8-IX", 112, 120, {{7, 15, 3}, {1, 5, 133}}, e8, cat(e7, {2}), nullptr},
      {"F4-I", 28, 12, {{7, 18, 3}, {5, 18, 21}}, f4, {2, 2, 4, 6}, nullptr},
      {"G2-I", 8, 3, {{1, 4, 3}, {5, 12, 3}}, g2, {2, 2}, nullptr},
  };
}

Outcome ac1() {
  Outcome o;
  const auto rows = exceptional_rows();
  for (const auto& r : rows) {
    const std::string id = r.id;
    try {
      const auto s = parse_space_id(id);
      o.expect(dimension(s) == r.dim, id + ": dim " + std::to_string(dimension(s)));

      const auto sp = spectrum(s);
      long total = 0;
      for (const auto& e : r.spectrum) {
        const Rational v = make_rational(e.num, e.den);
        o.expect(sp.multiplicity_of(v) == e.mult, id + ": multiplicity of " + to_string(v));
        total += e.mult;
      }
      o.expect(sp.total_multiplicity() == total, id + ": extra eigenvalues");
      o.expect(sp.distinct_nonzero().size() == r.spectrum.size(), id + ": distinct count");

      const auto pr = poincare(s);
      o.expect(pr.euler == r.euler, id + ": euler " + std::to_string(pr.euler));
      const QPoly expected = r.unequal ? r.unequal() : equal_rank_poly(r.dg, r.dh);
      o.expect(pr.chi_t == expected, id + ": chi(t) = " + to_string(pr.chi_t));
      o.expect(expected.degree() == static_cast<std::size_t>(r.dim), id + ": expected degree");
    } catch (const std::exception& e) {
      o.fail(id + ": " + e.what());
    }
  }
  o.detail = std::to_string(rows.size()) + " exceptional spaces: dim, spectrum, chi, chi(t)";
  return o;
}

Outcome from_suite(const verify::SuiteReport& r) {
  Outcome o;
  for (const auto& f : r.failures) o.fail(f.space + " " + f.check + ": " + f.detail);
  std::ostringstream s;
  s << r.spaces << " spaces, " << r.checks << " checks, " << r.failures.size() << " failures";
  o.detail = s.str();
  return o;
}

Outcome ac2() { return from_suite(verify::poincare_suite(128)); }

Outcome ac3() {
  Outcome o = from_suite(verify::curvature_suite(128));
  // The four Hermitian spaces sharing the spectrum {1/6, 1/2}.
  const auto quad = hermitian_quadruple_coincidence();
  o.expect(quad.size() == 4, "hermitian quadruple has " + std::to_string(quad.size()) + " members");
  for (const auto& s : quad) {
    const auto d = spectrum(s).distinct_nonzero();
    o.expect(d == std::vector<Rational>{make_rational(1, 6), make_rational(1, 2)}, space_id(s) + ": quadruple spectrum");
  }
  return o;
}

Outcome ac4() {
  Outcome o = from_suite(verify::oracle_suite(60, 1e-8, 60));
  for (const char* id : {"group-A1", "group-A2", "group-B2"}) {
    try {
      const auto r = oracle::compare(parse_space_id(id), 1e-8, 60, false);
      o.expect(r.match, std::string(id) + ": " + r.diff);
      o.expect(spectrum(parse_space_id(id)).distinct_nonzero() == std::vector<Rational>{make_rational(1, 4)},
               std::string(id) + ": type II value");
    } catch (const std::exception& e) {
      o.fail(std::string(id) + ": " + e.what());
    }
  }
  o.detail += "; type II su(2), su(3), so(5)";
  return o;
}

Outcome ac5() {
  Outcome o;
  const auto r = oracle::nearly_kahler_s3s3(1e-8);
  o.expect(r.match, "report mismatch");
  const std::vector<std::pair<Rational, long>> want{
      {make_rational(-1, 24), 5}, {make_rational(1, 12), 7}, {make_rational(7, 24), 3}};
  std::vector<std::pair<Rational, long>> got;
  for (const auto& v : r.recognized)
    if (v.value != 0) got.emplace_back(v.value, v.mult);
  o.expect(got == want, "recognized spectrum differs");
  o.expect(r.recognized_trace == make_rational(5, 4), "trace " + to_string(r.recognized_trace));
  o.expect(std::abs(r.ricci - 5.0 / 12.0) < 1e-8 && r.ricci_spread < 1e-8, "Ricci not 5/12 g");
  o.expect(r.symmetry_residual < 1e-10, "curvature matrix not symmetric");
  std::ostringstream s;
  s << "S3xS3 spectrum {7/24 x3, 1/12 x7, -1/24 x5}, max dev " << r.max_dev;
  o.detail = s.str();
  return o;
}

Outcome ac6() {
  Outcome o;
  const auto r = qprops::run(10000);
  for (const auto& f : r.first) o.fail(f);
  o.expect(r.checks == 10000, "ran " + std::to_string(r.checks) + " checks");
  o.detail = std::to_string(r.checks) + " randomized quantum-number checks, " + std::to_string(r.failures) + " failures";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    double budget;
    Outcome (*run)();
  };
  const Criterion all[] = {{"AC1", 5, ac1},  {"AC2", 30, ac2}, {"AC3", 30, ac3},
                           {"AC4", 60, ac4}, {"AC5", 10, ac5}, {"AC6", 10, ac6}};
  int failed = 0;
  for (const auto& c : all) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("threw: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > c.budget) o.fail("over time budget of " + std::to_string(static_cast<int>(c.budget)) + " s");
    std::printf("%s %s  %s (%.2f s)\n", c.name, o.ok ? "PASS" : "FAIL", o.detail.c_str(), secs);
    for (const auto& p : o.problems) std::printf("    %s\n", p.c_str());
    if (!o.ok) ++failed;
  }
  std::fflush(stdout);
  return failed == 0 ? 0 : 1;
}
