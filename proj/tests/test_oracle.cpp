#include <doctest.h>

#include <cmath>
#include <map>

#include "symcat/errors.hpp"
#include "symcat/oracle.hpp"

using namespace symcat;
using namespace symcat::oracle;

TEST_CASE("matrix algebras") {
  CHECK(build_algebra(AlgebraKind::so, 3).dim() == 3);
  CHECK(build_algebra(AlgebraKind::su, 2).dim() == 3);
  CHECK(build_algebra(AlgebraKind::sp, 2).dim() == 10);
  CHECK(build_algebra(AlgebraKind::u, 3).dim() == 9);
  CHECK(build_algebra(AlgebraKind::sp, 2).ambient_dim == 8);
  CHECK_THROWS_AS(build_algebra(AlgebraKind::sp, 33), std::invalid_argument);
  CHECK_THROWS_AS(build_algebra(AlgebraKind::so, 1), std::invalid_argument);

  for (auto [k, n] : {std::pair{AlgebraKind::so, 5}, {AlgebraKind::su, 3}, {AlgebraKind::sp, 2}, {AlgebraKind::u, 2}}) {
    const auto rep = check_closure(build_algebra(k, n));
    CAPTURE(kind_name(k));
    CHECK(rep.closure_residual < 1e-10);
    CHECK(rep.antisymmetry_residual < 1e-10);
    CHECK(rep.jacobi_residual < 1e-10);
  }
}

TEST_CASE("so(3) structure constants are the Levi-Civita symbol") {
  const auto a = build_algebra(AlgebraKind::so, 3);
  const auto c = structure_constants(a);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      double row = 0;
      for (int k = 0; k < 3; ++k) row += std::abs(c[(i * 3 + j) * 3 + k]);
      CHECK(row == doctest::Approx(i == j ? 0.0 : 1.0));
    }
}

TEST_CASE("Killing constants") {
  CHECK(killing_constant(build_algebra(AlgebraKind::so, 5)).standard() == doctest::Approx(3));
  CHECK(killing_constant(build_algebra(AlgebraKind::su, 3)).standard() == doctest::Approx(6));
  CHECK(killing_constant(build_algebra(AlgebraKind::sp, 2)).standard() == doctest::Approx(6));
  CHECK(killing_constant(build_algebra(AlgebraKind::sp, 1)).standard() == doctest::Approx(4));
  CHECK_THROWS_AS(killing_constant(build_algebra(AlgebraKind::u, 3)), NonProportional);
}

TEST_CASE("symmetric pairs") {
  const auto s4 = symmetric_pair(sphere(4));
  CHECK(s4.h.size() == 6);
  CHECK(s4.p.size() == 4);
  const auto ai3 = symmetric_pair(ai(3));
  CHECK(ai3.h.size() == 3);
  CHECK(ai3.p.size() == 5);
  const auto g = symmetric_pair(type_ii(make_group(Series::A, 1)));
  CHECK(g.p.size() == 3);
  for (const auto& s : {sphere(4), ai(3), aii(2), cn_i(2), dn_iii(3), cpx_grass(1, 2), quat_grass(1, 2),
                        real_grass_d_odd(1, 1), type_ii(make_group(Series::C, 3))}) {
    CAPTURE(space_id(s));
    CHECK(check_cartan(symmetric_pair(s)).max() < 1e-10);
  }
  CHECK_THROWS_AS(symmetric_pair(exceptional(Family::G2I)), UnsupportedFamily);
  CHECK_THROWS_AS(symmetric_pair(type_ii(make_group(Series::U, 2))), UnsupportedFamily);
  CHECK_THROWS_AS(symmetric_pair(sphere(61)), UnsupportedFamily);
}

TEST_CASE("curvature matrices") {
  const auto m = curvature_matrix(symmetric_pair(sphere(5)));
  CHECK(m.rows() == 10);
  CHECK((m - m.transpose()).cwiseAbs().maxCoeff() < 1e-12);
  for (double x : symmetric_eigenvalues(m)) CHECK(x == doctest::Approx(1.0 / 8));

  const auto su2 = symmetric_eigenvalues(curvature_matrix(symmetric_pair(type_ii(make_group(Series::A, 1)))));
  for (double x : su2) CHECK(x == doctest::Approx(0.25));

  const auto ai4 = symmetric_eigenvalues(curvature_matrix(symmetric_pair(ai(4))));
  REQUIRE(ai4.size() == 36);
  int zeros = 0, nonzero = 0;
  for (double x : ai4) {
    if (std::abs(x) < 1e-9) ++zeros;
    else if (std::abs(x - 0.375) < 1e-9) ++nonzero;
  }
  CHECK(zeros == 30);
  CHECK(nonzero == 6);
  CHECK(ai4.front() > -1e-12);  // positive semidefinite
}

TEST_CASE("P route agrees with the bracket route") {
  for (const auto& s : {cpx_grass(2, 3), quat_grass(1, 2), real_grass_b(2, 1), ai(5), dn_iii(4)}) {
    CAPTURE(space_id(s));
    const auto pair = symmetric_pair(s);
    auto p = symmetric_eigenvalues(p_route_matrix(pair));
    const auto ns = numeric_spectrum(pair);
    REQUIRE(p.size() == ns.eigenvalues.size());
    for (std::size_t i = 0; i < p.size(); ++i) CHECK(p[i] == doctest::Approx(ns.eigenvalues[i]).epsilon(1e-9));
    for (double x : p) {
      CHECK(x >= -1e-12);
      CHECK(x <= 0.5 + 1e-12);
    }
  }
}

TEST_CASE("rational recognition") {
  CHECK(*recognize(0.375) == make_rational(3, 8));
  CHECK(*recognize(-1.0 / 24) == make_rational(-1, 24));
  CHECK(*recognize(1e-12) == 0);
  CHECK(*recognize(2.0) == 2);
  CHECK(*recognize(999.0 / 1000) == make_rational(999, 1000));
  CHECK_FALSE(recognize(M_PI).has_value());
  CHECK_FALSE(recognize(1.0 / 1009).has_value());
  const auto ns = recognize_spectrum({0.25, 0.25 + 1e-12, 5.0 / 12}, 4);
  REQUIRE(ns.recognized.size() == 3);
  CHECK(ns.recognized[0].mult == 4);
  CHECK(ns.recognized[1].mult == 2);
}

TEST_CASE("comparison against closed forms") {
  const auto r = compare(cpx_grass(2, 3));
  CHECK(r.match);
  std::map<Rational, long> got;
  for (const auto& g : r.numeric.recognized) got[g.value] = g.mult;
  const std::map<Rational, long> want{{make_rational(1, 2), 1}, {make_rational(3, 10), 3}, {make_rational(1, 5), 8},
                                      {Rational(0), 66 - 12}};
  CHECK(got == want);
  CHECK(compare(quaternionic_projective(2)).match);
  CHECK(compare(real_grass_d_even(2, 2)).numeric.recognized.size() == 2);
  CHECK(r.numeric.max_dev < 1e-8);
}

TEST_CASE("nearly-Kähler S3xS3") {
  const auto r = nearly_kahler_s3s3();
  CHECK(r.match);
  CHECK(r.matrix.rows() == 15);
  CHECK(r.symmetry_residual < 1e-12);
  REQUIRE(r.recognized.size() == 3);
  CHECK(r.recognized[0].value == make_rational(-1, 24));
  CHECK(r.recognized[0].mult == 5);
  CHECK(r.recognized[1].value == make_rational(1, 12));
  CHECK(r.recognized[1].mult == 7);
  CHECK(r.recognized[2].value == make_rational(7, 24));
  CHECK(r.recognized[2].mult == 3);
  CHECK(r.matrix_trace == doctest::Approx(5.0 / 4));
  CHECK(r.recognized_trace == make_rational(5, 4));
  CHECK(r.ricci == doctest::Approx(5.0 / 12));
  CHECK(r.ricci_spread < 1e-12);
  CHECK(r.recognized[2].value < make_rational(5, 12));
}
