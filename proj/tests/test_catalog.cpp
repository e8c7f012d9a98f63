#include <doctest.h>

#include <algorithm>

#include "symcat/catalog.hpp"
#include "symcat/errors.hpp"

using namespace symcat;

TEST_CASE("degree table") {
  using V = std::vector<int>;
  CHECK(degrees(make_group(Series::A, 3)) == V{2, 3, 4});
  CHECK(degrees(make_group(Series::U, 3)) == V{1, 2, 3});
  CHECK(degrees(make_group(Series::B, 3)) == V{2, 4, 6});
  CHECK(degrees(make_group(Series::C, 2)) == V{2, 4});
  CHECK(degrees(make_group(Series::D, 4)) == V{4, 2, 4, 6});
  CHECK(degrees(make_group(Series::D, 1)) == V{1});
  CHECK(degrees(make_group(Series::D, 2)) == V{2, 2});
  CHECK(degrees(make_group(Series::G2)) == V{2, 6});
  CHECK(degrees(make_group(Series::E8)) == V{2, 8, 12, 14, 18, 20, 24, 30});
  CHECK(degrees(make_group(Series::SO2)) == V{1});
  // dim G = Σ (2k - 1)
  for (Series s : {Series::A, Series::B, Series::C, Series::D, Series::U})
    for (int n = 1; n <= 8; ++n) {
      const auto g = make_group(s, n);
      int sum = 0;
      for (int k : degrees(g)) sum += 2 * k - 1;
      CHECK(sum == group_dimension(g));
    }
  for (Series s : {Series::E6, Series::E7, Series::E8, Series::F4, Series::G2}) {
    int sum = 0;
    for (int k : degrees(make_group(s))) sum += 2 * k - 1;
    CHECK(sum == group_dimension(make_group(s)));
  }
  CHECK_THROWS_AS(make_group(Series::A, 0), InvalidDescriptor);
}

TEST_CASE("exceptional dimensions and isotropy") {
  const std::pair<Family, int> dims[] = {{Family::E6I, 42},   {Family::E6IV, 26}, {Family::E7V, 70},
                                         {Family::E8VIII, 128}, {Family::F4II, 16}, {Family::E6III, 32},
                                         {Family::E7VII, 54}, {Family::E6II, 40}, {Family::E7VI, 64},
                                         {Family::E8IX, 112}, {Family::F4I, 28},  {Family::G2I, 8}};
  for (auto [f, d] : dims) {
    CAPTURE(family_tag(f));
    CHECK(dimension(exceptional(f)) == d);
  }
  const auto iso = isotropy(exceptional(Family::E7VII));
  REQUIRE(iso.factors.size() == 2);
  CHECK(iso.factors[0].kind == FactorKind::center_u1);
  CHECK(iso.factors[1].dim == 78);
  CHECK_THROWS_AS(exceptional(Family::AI), InvalidDescriptor);
}

TEST_CASE("classical dimensions") {
  CHECK(dimension(sphere(7)) == 7);
  CHECK(dimension(cpx_grass(2, 3)) == 12);
  CHECK(dimension(quat_grass(2, 3)) == 24);
  CHECK(dimension(real_grass_b(2, 3)) == 28);
  CHECK(dimension(real_grass_d_odd(1, 2)) == 15);
  CHECK(dimension(real_grass_d_even(2, 2)) == 16);
  CHECK(dimension(ai(4)) == 9);
  CHECK(dimension(ai(5)) == 14);
  CHECK(dimension(aii(3)) == 14);
  CHECK(dimension(cn_i(3)) == 12);
  CHECK(dimension(dn_iii(5)) == 20);
  CHECK(dimension(type_ii(make_group(Series::E8))) == 248);
  CHECK(dimension(type_ii(make_group(Series::U, 3))) == 9);
  CHECK(isotropy(real_grass_d_even(2, 2)).factors.size() == 4);
  CHECK(isotropy(ai(4)).factors.size() == 2);
}

TEST_CASE("parameter bounds") {
  CHECK_THROWS_AS(sphere(1), InvalidDescriptor);
  CHECK_THROWS_AS(cpx_grass(3, 2), InvalidDescriptor);
  CHECK_THROWS_AS(real_grass_d_even(1, 1), InvalidDescriptor);
  CHECK_THROWS_AS(real_grass_d_odd(2, 1), InvalidDescriptor);
  CHECK_THROWS_AS(ai(2), InvalidDescriptor);
  CHECK_THROWS_AS(aii(1), InvalidDescriptor);
  CHECK_THROWS_AS(dn_iii(2), InvalidDescriptor);
  CHECK_THROWS_AS(type_ii(make_group(Series::D, 2)), InvalidDescriptor);
  CHECK_THROWS_AS(type_ii(make_group(Series::C, 2)), InvalidDescriptor);
  CHECK_NOTHROW(type_ii(make_group(Series::U, 1)));
  CHECK_NOTHROW(cn_i(1));
}

TEST_CASE("space ids round-trip") {
  for (const auto& s : enumerate(80)) {
    CAPTURE(space_id(s));
    CHECK(parse_space_id(space_id(s)) == s);
  }
  CHECK(parse_space_id("E6-I") == exceptional(Family::E6I));
  CHECK(parse_space_id("e6-i") == exceptional(Family::E6I));
  CHECK(parse_space_id("A4-III-p1") == complex_projective(4));
  CHECK(parse_space_id("A4-III-p2") == cpx_grass(2, 3));
  CHECK(parse_space_id("C5-II-p2") == quat_grass(2, 3));
  CHECK(parse_space_id("A5-II") == aii(3));
  CHECK(parse_space_id("group-SO2") == type_ii(make_group(Series::SO2)));
  CHECK(space_id(sphere(7)) == "sphere-7");
  CHECK(space_id(real_grass_b(2, 3)) == "B-grass-k2-l3");
}

TEST_CASE("unknown ids carry suggestions") {
  try {
    parse_space_id("sphere-1");
    FAIL("expected UnknownSpace");
  } catch (const UnknownSpace& e) {
    CHECK(e.id() == "sphere-1");
    CHECK_FALSE(e.suggestions().empty());
  }
  CHECK_THROWS_AS(parse_space_id("E9-I"), UnknownSpace);
  CHECK_THROWS_AS(parse_space_id("A4-II"), UnknownSpace);
  CHECK_THROWS_AS(parse_space_id("sphere-99999999999"), UnknownSpace);
}

TEST_CASE("class flags") {
  CHECK(classify(sphere(3)).is_type_ii);
  CHECK(classify(sphere(2)).is_hermitian);
  CHECK(classify(cpx_grass(2, 5)).is_wolf);
  CHECK(classify(cpx_grass(2, 5)).is_hermitian);
  CHECK_FALSE(classify(cpx_grass(3, 5)).is_wolf);
  CHECK(classify(quaternionic_projective(3)).is_wolf);
  CHECK(classify(real_grass_b(2, 1)).is_wolf);
  CHECK(classify(real_grass_d_even(1, 2)).is_wolf);
  CHECK(classify(exceptional(Family::G2I)).is_wolf);
  CHECK_FALSE(classify(exceptional(Family::F4II)).is_wolf);
  CHECK(classify(exceptional(Family::F4II)).is_simple_isotropy);
  CHECK_FALSE(classify(type_ii(make_group(Series::U, 4))).is_semisimple);
  CHECK_FALSE(classify(ai(4)).is_simple_isotropy);
}

TEST_CASE("table membership") {
  CHECK(in_table(exceptional(Family::E7VII), TableClass::hermitian));
  CHECK(in_table(real_grass_b(1, 3), TableClass::hermitian));
  CHECK_FALSE(in_table(real_grass_b(2, 3), TableClass::hermitian));
  CHECK(in_table(ai(4), TableClass::simple_isotropy));
  CHECK(in_table(type_ii(make_group(Series::G2)), TableClass::groups));
  CHECK(parse_table_class("simple-isotropy") == TableClass::simple_isotropy);
  CHECK_THROWS_AS(parse_table_class("nope"), std::invalid_argument);
}

TEST_CASE("degree data is consistent") {
  for (const auto& s : enumerate(128)) {
    CAPTURE(space_id(s));
    const auto d = degree_data(s);
    CHECK(d.d_g1.size() == d.d_h.size());
    CHECK(d.d_g1.size() + d.d_g0.size() == d.d_g.size());
    // dim M = Σ_{D_G}(2k-1) - Σ_{D_H}(2l-1)
    int sum = 0;
    for (int k : d.d_g) sum += 2 * k - 1;
    for (int l : d.d_h) sum -= 2 * l - 1;
    CHECK(sum == dimension(s));
  }
}

TEST_CASE("enumeration") {
  CHECK(enumerate(1).empty());
  const auto all = enumerate(128);
  CHECK(std::is_sorted(all.begin(), all.end()));
  CHECK(std::adjacent_find(all.begin(), all.end()) == all.end());
  CHECK(all.size() > 300);
  for (const auto& s : all) CHECK(dimension(s) <= 128);
  const auto e7vii = exceptional(Family::E7VII);
  CHECK(std::find(all.begin(), all.end(), e7vii) != all.end());
  const auto small = enumerate(53);
  CHECK(std::find(small.begin(), small.end(), e7vii) == small.end());
}
