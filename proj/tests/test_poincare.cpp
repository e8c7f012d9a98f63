#include <doctest.h>

#include "symcat/errors.hpp"
#include "symcat/poincare.hpp"

using namespace symcat;

namespace {
QPoly qn(long n, long step) { return quantum_number(n, step); }
QPoly odd(long e) { return one_plus_power(e); }
}  // namespace

TEST_CASE("group polynomials") {
  CHECK(group_poincare(make_group(Series::G2)) == odd(3) * odd(11));
  CHECK(group_poincare(make_group(Series::SO2)) == odd(1));
  CHECK(group_poincare(make_group(Series::U, 3)) == odd(1) * odd(3) * odd(5));
}

TEST_CASE("Borel quotients") {
  CHECK(borel_poincare(degree_data(complex_projective(5))) == qn(6, 2));
  for (int k = 1; k <= 3; ++k)
    for (int l = 1; l <= 3; ++l)
      CHECK(borel_poincare(degree_data(real_grass_b(k, l))) == gaussian_binomial(k, l, 4) * qn(2, 2 * k));
  for (int m = 2; m <= 5; ++m)
    CHECK(borel_poincare(degree_data(real_grass_d_even(1, m))) == qn(m + 1, 2) * qn(2, 2 * m));
  CHECK_THROWS_AS(borel_poincare(degree_data(ai(3))), RankMismatch);
  DegreeData bad{{2, 3}, {2}, {}, {2, 3}};
  CHECK_THROWS_AS(borel_poincare(bad), RankMismatch);
  DegreeData not_poly{{2, 3}, {2, 2}, {}, {2, 3}};
  CHECK_THROWS_AS(borel_poincare(not_poly), NonExactDivision);
}

TEST_CASE("Takeuchi quotients") {
  for (int m = 1; m <= 4; ++m) {
    QPoly expected = QPoly::constant(1);
    for (int i = 1; i <= m; ++i) expected = expected * odd(4 * i + 1);
    CHECK(takeuchi_poincare(degree_data(ai(2 * m + 1))) == expected);
  }
  for (int m = 2; m <= 4; ++m) {
    QPoly expected = qn(2, 2 * m);
    for (int i = 1; i <= m - 1; ++i) expected = expected * odd(4 * i + 1);
    CHECK(takeuchi_poincare(degree_data(ai(2 * m))) == expected);
  }
  CHECK(takeuchi_poincare(degree_data(exceptional(Family::E6I))) == qn(3, 8) * odd(9) * odd(17));
  const auto cp = degree_data(cpx_grass(2, 3));
  CHECK(takeuchi_poincare(cp) == borel_poincare(cp));
}

TEST_CASE("full results") {
  const auto r = poincare(ai(4));
  CHECK(r.chi_t == odd(4) * odd(5));
  CHECK(r.betti == std::vector<std::int64_t>{1, 0, 0, 0, 1, 1, 0, 0, 0, 1});
  CHECK(r.euler == 0);
  CHECK(r.total_betti == 4);
  for (int n = 2; n <= 12; ++n) CHECK(poincare(sphere(n)).chi_t == odd(n));
  const auto e8ix = poincare(exceptional(Family::E8IX));
  CHECK(e8ix.chi_t == qn(15, 4) * qn(4, 12) * qn(2, 20));
  CHECK(e8ix.factored == "[15]_{t^4}[4]_{t^12}[2]_{t^20}");
  CHECK(e8ix.euler == 120);
  CHECK(poincare(exceptional(Family::E6I)).factored == "[3]_{t^8}(1+t^9)(1+t^17)");
  CHECK(poincare(sphere(3)).factored == "(1+t^3)");
  CHECK(poincare(type_ii(make_group(Series::G2))).factored == "(1+t^3)(1+t^11)");
}

TEST_CASE("Euler characteristic both ways") {
  CHECK(euler_both_ways(exceptional(Family::E7V)) == std::pair<std::int64_t, std::optional<std::int64_t>>{72, 72});
  const auto odd_grass = euler_both_ways(real_grass_d_odd(1, 2));
  CHECK(odd_grass.first == 0);
  CHECK_FALSE(odd_grass.second.has_value());
  const std::int64_t binom[] = {1, 2, 6, 20, 70};
  for (int p = 1; p <= 4; ++p) {
    const auto e = euler_both_ways(cpx_grass(p, p));
    CHECK(e.first == binom[p]);
    CHECK(e.second == binom[p]);
  }
  CHECK(euler_both_ways(type_ii(make_group(Series::A, 2))).first == 0);
}

TEST_CASE("even real Grassmannian closed form") {
  for (int k = 1; k <= 4; ++k)
    for (int l = std::max(k, 3 - k); l <= 5; ++l) {
      CAPTURE(k);
      CAPTURE(l);
      CHECK(deven_closed_form(k, l) == poincare(real_grass_d_even(k, l)).chi_t);
    }
  for (int l = 2; l <= 5; ++l) {
    const QPoly q = qn(l + 1, 4);
    CHECK(poincare(real_grass_d_even(2, l)).chi_t == q * (q + QPoly::monomial(2 * l)));
  }
  for (int m = 1; m <= 5; ++m) CHECK(poincare(real_grass_b(1, m)).chi_t == qn(2 * m + 2, 2));
}
