#include "symcat/catalog.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <regex>
#include <stdexcept>

#include "symcat/errors.hpp"

namespace symcat {

namespace {

std::vector<int> range_step(int from, int to, int step) {
  std::vector<int> v;
  for (int x = from; x <= to; x += step) v.push_back(x);
  return v;
}

std::vector<int> concat(std::vector<int> a, const std::vector<int>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

// Multiset difference, removing one occurrence per element of b.
std::vector<int> minus(std::vector<int> a, const std::vector<int>& b) {
  for (int x : b) {
    auto it = std::find(a.begin(), a.end(), x);
    if (it == a.end()) throw std::logic_error("degree split: element missing from D_G");
    a.erase(it);
  }
  return a;
}

int dim_su(int n) { return n * n - 1; }
int dim_so(int n) { return n * (n - 1) / 2; }
int dim_sp(int n) { return n * (2 * n + 1); }

std::string str(int n) { return std::to_string(n); }

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  return s;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw InvalidDescriptor(what);
}

GroupType A(int n) { return make_group(Series::A, n); }
GroupType B(int n) { return make_group(Series::B, n); }
GroupType C(int n) { return make_group(Series::C, n); }
GroupType D(int n) { return make_group(Series::D, n); }
GroupType U(int n) { return make_group(Series::U, n); }

// Simple factors of so(n); so(2) is the center and so(4) splits in two.
std::vector<IsotropyFactor> so_factors(int n) {
  if (n <= 1) return {};
  if (n == 2) return {{FactorKind::center_u1, "so(2)", 1}};
  if (n == 4) return {{FactorKind::simple, "so(4)+", 3}, {FactorKind::simple, "so(4)-", 3}};
  return {{FactorKind::simple, "so(" + str(n) + ")", dim_so(n)}};
}

std::vector<IsotropyFactor> su_factors(int n) {
  if (n <= 1) return {};
  return {{FactorKind::simple, "su(" + str(n) + ")", dim_su(n)}};
}

IsotropyFactor sp_factor(int n) { return {FactorKind::simple, "sp(" + str(n) + ")", dim_sp(n)}; }

std::vector<IsotropyFactor> join(std::vector<IsotropyFactor> a, const std::vector<IsotropyFactor>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

struct ExceptionalInfo {
  Family family;
  const char* id;
  const char* label;
  Series group;
  const char* subgroup;
};

constexpr std::array<ExceptionalInfo, 12> kExceptional{{
    {Family::E6I, "E6-I", "E6 I", Series::E6, "Sp(4)/{±I}"},
    {Family::E6IV, "E6-IV", "E6 IV", Series::E6, "F4"},
    {Family::E7V, "E7-V", "E7 V", Series::E7, "SU(8)/{±I}"},
    {Family::E8VIII, "E8-VIII", "E8 VIII", Series::E8, "Spin(16)/{±vol}"},
    {Family::F4II, "F4-II", "F4 II", Series::F4, "Spin(9)"},
    {Family::E6III, "E6-III", "E6 III", Series::E6, "(SO(2)×Spin(10))/Z4"},
    {Family::E7VII, "E7-VII", "E7 VII", Series::E7, "(SO(2)×E6)/Z3"},
    {Family::E6II, "E6-II", "E6 II", Series::E6, "(SU(2)×SU(6))/Z2"},
    {Family::E7VI, "E7-VI", "E7 VI", Series::E7, "(SU(2)×Spin(12))/Z2"},
    {Family::E8IX, "E8-IX", "E8 IX", Series::E8, "(SU(2)×E7)/Z2"},
    {Family::F4I, "F4-I", "F4 I", Series::F4, "(SU(2)×Sp(3))/Z2"},
    {Family::G2I, "G2-I", "G2 I", Series::G2, "SO(4)"},
}};

const ExceptionalInfo& exceptional_info(Family f) {
  for (const auto& e : kExceptional)
    if (e.family == f) return e;
  throw std::logic_error("not an exceptional family");
}

// Group G with M = G/H (type II: the group itself).
GroupType transitive_group(const SpaceDescriptor& s) {
  switch (s.family) {
    case Family::TypeII: return s.group;
    case Family::Sphere: return s.a % 2 == 0 ? B(s.a / 2) : D((s.a + 1) / 2);
    case Family::CpxGrass: return A(s.a + s.b - 1);
    case Family::QuatGrass: return C(s.a + s.b);
    case Family::RealGrassB: return B(s.a + s.b);
    case Family::RealGrassDOdd: return D(s.a + s.b + 1);
    case Family::RealGrassDEven: return D(s.a + s.b);
    case Family::AI: return A(s.a - 1);
    case Family::AII: return A(2 * s.a - 1);
    case Family::CnI: return C(s.a);
    case Family::DnIII: return D(s.a);
    default: return make_group(exceptional_info(s.family).group);
  }
}

}  // namespace

GroupType make_group(Series series, int rank) {
  switch (series) {
    case Series::A:
    case Series::B:
    case Series::C:
    case Series::D:
    case Series::U:
      if (rank < 1) throw InvalidDescriptor("group rank must be >= 1");
      return {series, rank};
    case Series::E6: return {series, 6};
    case Series::E7: return {series, 7};
    case Series::E8: return {series, 8};
    case Series::F4: return {series, 4};
    case Series::G2: return {series, 2};
    case Series::SO2: return {series, 1};
  }
  throw std::logic_error("unhandled series");
}

std::vector<int> degrees(const GroupType& g) {
  const int n = g.rank;
  switch (g.series) {
    case Series::A: return range_step(2, n + 1, 1);
    case Series::U: return range_step(1, n, 1);
    case Series::B:
    case Series::C: return range_step(2, 2 * n, 2);
    case Series::D: return concat({n}, range_step(2, 2 * (n - 1), 2));
    case Series::SO2: return {1};
    case Series::E6: return {2, 5, 6, 8, 9, 12};
    case Series::E7: return {2, 6, 8, 10, 12, 14, 18};
    case Series::E8: return {2, 8, 12, 14, 18, 20, 24, 30};
    case Series::F4: return {2, 6, 8, 12};
    case Series::G2: return {2, 6};
  }
  throw std::logic_error("unhandled series");
}

int group_dimension(const GroupType& g) {
  const int n = g.rank;
  switch (g.series) {
    case Series::A: return n * (n + 2);
    case Series::B:
    case Series::C: return n * (2 * n + 1);
    case Series::D: return n * (2 * n - 1);
    case Series::U: return n * n;
    case Series::SO2: return 1;
    case Series::E6: return 78;
    case Series::E7: return 133;
    case Series::E8: return 248;
    case Series::F4: return 52;
    case Series::G2: return 14;
  }
  throw std::logic_error("unhandled series");
}

std::string group_name(const GroupType& g) {
  const int n = g.rank;
  switch (g.series) {
    case Series::A: return "SU(" + str(n + 1) + ")";
    case Series::B: return "SO(" + str(2 * n + 1) + ")";
    case Series::C: return "Sp(" + str(n) + ")";
    case Series::D: return "SO(" + str(2 * n) + ")";
    case Series::U: return "U(" + str(n) + ")";
    case Series::SO2: return "SO(2)";
    case Series::E6: return "E6";
    case Series::E7: return "E7";
    case Series::E8: return "E8";
    case Series::F4: return "F4";
    case Series::G2: return "G2";
  }
  throw std::logic_error("unhandled series");
}

std::string algebra_name(const GroupType& g) {
  std::string name = lower(group_name(g));
  return name;
}

std::string cartan_name(const GroupType& g) {
  switch (g.series) {
    case Series::A: return "A" + str(g.rank);
    case Series::B: return "B" + str(g.rank);
    case Series::C: return "C" + str(g.rank);
    case Series::D: return "D" + str(g.rank);
    case Series::U: return "U" + str(g.rank);
    case Series::SO2: return "SO2";
    default: return group_name(g);
  }
}

// ---------------------------------------------------------------------------
// Descriptors

bool is_exceptional(Family f) {
  switch (f) {
    case Family::E6I:
    case Family::E6IV:
    case Family::E7V:
    case Family::E8VIII:
    case Family::F4II:
    case Family::E6III:
    case Family::E7VII:
    case Family::E6II:
    case Family::E7VI:
    case Family::E8IX:
    case Family::F4I:
    case Family::G2I: return true;
    default: return false;
  }
}

void validate(const SpaceDescriptor& s) {
  const int a = s.a, b = s.b;
  switch (s.family) {
    case Family::TypeII: {
      const auto& g = s.group;
      switch (g.series) {
        case Series::A:
        case Series::U: require(g.rank >= 1, "type II: rank must be >= 1"); break;
        case Series::B: require(g.rank >= 2, "type II: B_n needs n >= 2 (B1 is A1)"); break;
        case Series::C: require(g.rank >= 3, "type II: C_n needs n >= 3 (C1 is A1, C2 is B2)"); break;
        case Series::D: require(g.rank >= 3, "type II: D_n needs n >= 3 (D1 is SO(2), D2 is not simple)"); break;
        default: break;
      }
      return;
    }
    case Family::Sphere: require(a >= 2, "sphere: n >= 2"); return;
    case Family::CpxGrass:
    case Family::QuatGrass: require(a >= 1 && a <= b, "Grassmannian: need 1 <= p <= q"); return;
    case Family::RealGrassB: require(a >= 1 && b >= 1, "B-Grassmannian: need k >= 1, l >= 1"); return;
    case Family::RealGrassDOdd: require(a >= 1 && a <= b, "odd D-Grassmannian: need 1 <= k <= l"); return;
    case Family::RealGrassDEven:
      require(a >= 1 && a <= b && a + b >= 3, "even D-Grassmannian: need 1 <= k <= l, k + l >= 3");
      return;
    case Family::AI: require(a >= 3, "SU(n)/SO(n): n >= 3"); return;
    case Family::AII: require(a >= 2, "SU(2n)/Sp(n): n >= 2"); return;
    case Family::CnI: require(a >= 1, "Sp(n)/U(n): n >= 1"); return;
    case Family::DnIII: require(a >= 3, "SO(2n)/U(n): n >= 3"); return;
    default: require(a == 0 && b == 0, "exceptional spaces take no parameters"); return;
  }
}

namespace {
SpaceDescriptor checked(SpaceDescriptor s) {
  validate(s);
  return s;
}
}  // namespace

SpaceDescriptor type_ii(const GroupType& g) { return checked({Family::TypeII, g, 0, 0}); }
SpaceDescriptor sphere(int n) { return checked({Family::Sphere, {}, n, 0}); }
SpaceDescriptor cpx_grass(int p, int q) { return checked({Family::CpxGrass, {}, p, q}); }
SpaceDescriptor complex_projective(int n) { return cpx_grass(1, n); }
SpaceDescriptor quat_grass(int p, int q) { return checked({Family::QuatGrass, {}, p, q}); }
SpaceDescriptor quaternionic_projective(int n) { return quat_grass(1, n); }
SpaceDescriptor real_grass_b(int k, int l) { return checked({Family::RealGrassB, {}, k, l}); }
SpaceDescriptor real_grass_d_odd(int k, int l) { return checked({Family::RealGrassDOdd, {}, k, l}); }
SpaceDescriptor real_grass_d_even(int k, int l) { return checked({Family::RealGrassDEven, {}, k, l}); }
SpaceDescriptor ai(int n) { return checked({Family::AI, {}, n, 0}); }
SpaceDescriptor aii(int n) { return checked({Family::AII, {}, n, 0}); }
SpaceDescriptor cn_i(int n) { return checked({Family::CnI, {}, n, 0}); }
SpaceDescriptor dn_iii(int n) { return checked({Family::DnIII, {}, n, 0}); }

SpaceDescriptor exceptional(Family f) {
  if (!is_exceptional(f)) throw InvalidDescriptor("not an exceptional family: " + family_tag(f));
  return {f, {}, 0, 0};
}

std::string family_tag(Family f) {
  switch (f) {
    case Family::TypeII: return "TypeII";
    case Family::Sphere: return "Sphere";
    case Family::CpxGrass: return "CpxGrass";
    case Family::QuatGrass: return "QuatGrass";
    case Family::RealGrassB: return "RealGrassB";
    case Family::RealGrassDOdd: return "RealGrassDOdd";
    case Family::RealGrassDEven: return "RealGrassDEven";
    case Family::AI: return "AI";
    case Family::AII: return "AII";
    case Family::E6I: return "E6I";
    case Family::E6IV: return "E6IV";
    case Family::E7V: return "E7V";
    case Family::E8VIII: return "E8VIII";
    case Family::F4II: return "F4II";
    case Family::CnI: return "CnI";
    case Family::DnIII: return "DnIII";
    case Family::E6III: return "E6III";
    case Family::E7VII: return "E7VII";
    case Family::E6II: return "E6II";
    case Family::E7VI: return "E7VI";
    case Family::E8IX: return "E8IX";
    case Family::F4I: return "F4I";
    case Family::G2I: return "G2I";
  }
  throw std::logic_error("unhandled family");
}

std::string space_id(const SpaceDescriptor& s) {
  const int a = s.a, b = s.b;
  switch (s.family) {
    case Family::TypeII: return "group-" + cartan_name(s.group);
    case Family::Sphere: return "sphere-" + str(a);
    case Family::CpxGrass:
      return a == 1 ? "cp-" + str(b) : "A" + str(a + b - 1) + "-III-p" + str(a);
    case Family::QuatGrass:
      return a == 1 ? "hp-" + str(b) : "C" + str(a + b) + "-II-p" + str(a);
    case Family::RealGrassB: return "B-grass-k" + str(a) + "-l" + str(b);
    case Family::RealGrassDOdd: return "Dodd-grass-k" + str(a) + "-l" + str(b);
    case Family::RealGrassDEven: return "Deven-grass-k" + str(a) + "-l" + str(b);
    case Family::AI: return "A" + str(a - 1) + "-I";
    case Family::AII: return "A" + str(2 * a - 1) + "-II";
    case Family::CnI: return "C" + str(a) + "-I";
    case Family::DnIII: return "D" + str(a) + "-III";
    default: return exceptional_info(s.family).id;
  }
}

namespace {

std::size_t edit_distance(const std::string& x, const std::string& y) {
  std::vector<std::size_t> prev(y.size() + 1), cur(y.size() + 1);
  for (std::size_t j = 0; j <= y.size(); ++j) prev[j] = j;
  for (std::size_t i = 1; i <= x.size(); ++i) {
    cur[0] = i;
    for (std::size_t j = 1; j <= y.size(); ++j) {
      std::size_t sub = prev[j - 1] + (x[i - 1] == y[j - 1] ? 0 : 1);
      cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, sub});
    }
    std::swap(prev, cur);
  }
  return prev[y.size()];
}

std::string suggestions_for(const std::string& id) {
  std::vector<std::pair<std::size_t, std::string>> scored;
  const std::string key = lower(id);
  for (const auto& s : enumerate(64)) {
    std::string cand = space_id(s);
    scored.emplace_back(edit_distance(key, lower(cand)), cand);
  }
  std::stable_sort(scored.begin(), scored.end(),
                   [](const auto& l, const auto& r) { return l.first < r.first; });
  std::string out;
  for (std::size_t i = 0; i < scored.size() && i < 3; ++i) {
    if (!out.empty()) out += ", ";
    out += scored[i].second;
  }
  return out;
}

SpaceDescriptor parse_or_throw(const std::string& raw) {
  const std::string id = lower(raw);
  std::smatch m;
  auto num = [&](int i) { return std::stoi(m[i].str()); };
  auto match = [&](const char* pattern) { return std::regex_match(id, m, std::regex(pattern)); };

  if (match("group-(a|b|c|d|u)([0-9]{1,3})")) {
    const char c = m[1].str()[0];
    const Series series = c == 'a' ? Series::A
                          : c == 'b' ? Series::B
                          : c == 'c' ? Series::C
                          : c == 'd' ? Series::D
                                     : Series::U;
    return type_ii(make_group(series, num(2)));
  }
  if (match("group-(e6|e7|e8|f4|g2|so2)")) {
    const std::string g = m[1].str();
    const Series series = g == "e6"   ? Series::E6
                          : g == "e7" ? Series::E7
                          : g == "e8" ? Series::E8
                          : g == "f4" ? Series::F4
                          : g == "g2" ? Series::G2
                                      : Series::SO2;
    return type_ii(make_group(series));
  }
  if (match("sphere-([0-9]{1,4})")) return sphere(num(1));
  if (match("cp-([0-9]{1,4})")) return complex_projective(num(1));
  if (match("hp-([0-9]{1,4})")) return quaternionic_projective(num(1));
  if (match("a([0-9]{1,4})-iii-p([0-9]{1,4})")) return cpx_grass(num(2), num(1) + 1 - num(2));
  if (match("c([0-9]{1,4})-ii-p([0-9]{1,4})")) return quat_grass(num(2), num(1) - num(2));
  if (match("b-grass-k([0-9]{1,4})-l([0-9]{1,4})")) return real_grass_b(num(1), num(2));
  if (match("dodd-grass-k([0-9]{1,4})-l([0-9]{1,4})")) return real_grass_d_odd(num(1), num(2));
  if (match("deven-grass-k([0-9]{1,4})-l([0-9]{1,4})")) return real_grass_d_even(num(1), num(2));
  if (match("a([0-9]{1,4})-i")) return ai(num(1) + 1);
  if (match("a([0-9]{1,4})-ii")) {
    if (num(1) % 2 == 0) throw InvalidDescriptor("A_{2n-1} II needs an odd index");
    return aii((num(1) + 1) / 2);
  }
  if (match("c([0-9]{1,4})-i")) return cn_i(num(1));
  if (match("d([0-9]{1,4})-iii")) return dn_iii(num(1));
  for (const auto& e : kExceptional)
    if (id == lower(e.id)) return exceptional(e.family);
  throw InvalidDescriptor("unrecognized space id");
}

}  // namespace

SpaceDescriptor parse_space_id(const std::string& id) {
  try {
    return parse_or_throw(id);
  } catch (const InvalidDescriptor&) {
    throw UnknownSpace(id, suggestions_for(id));
  } catch (const std::out_of_range&) {
    throw UnknownSpace(id, suggestions_for(id));
  }
}

std::string display_name(const SpaceDescriptor& s) {
  const int a = s.a, b = s.b;
  auto grass = [](const std::string& g, int n, const std::string& h, int x, int y) {
    return g + "(" + str(n) + ")/(" + h + "(" + str(x) + ")×" + h + "(" + str(y) + "))";
  };
  switch (s.family) {
    case Family::TypeII: return group_name(s.group);
    case Family::Sphere: return "S^" + str(a);
    case Family::CpxGrass: return a == 1 ? "CP^" + str(b) : grass("U", a + b, "U", a, b);
    case Family::QuatGrass: return a == 1 ? "HP^" + str(b) : grass("Sp", a + b, "Sp", a, b);
    case Family::RealGrassB: return grass("SO", 2 * a + 2 * b + 1, "SO", 2 * a, 2 * b + 1);
    case Family::RealGrassDOdd: return grass("SO", 2 * a + 2 * b + 2, "SO", 2 * a + 1, 2 * b + 1);
    case Family::RealGrassDEven: return grass("SO", 2 * a + 2 * b, "SO", 2 * a, 2 * b);
    case Family::AI: return "SU(" + str(a) + ")/SO(" + str(a) + ")";
    case Family::AII: return "SU(" + str(2 * a) + ")/Sp(" + str(a) + ")";
    case Family::CnI: return "Sp(" + str(a) + ")/U(" + str(a) + ")";
    case Family::DnIII: return "SO(" + str(2 * a) + ")/U(" + str(a) + ")";
    default: {
      const auto& e = exceptional_info(s.family);
      std::string sub = e.subgroup;
      const bool wrap = sub.find('/') != std::string::npos;
      return group_name(make_group(e.group)) + "/" + (wrap ? "(" + sub + ")" : sub);
    }
  }
}

std::string cartan_label(const SpaceDescriptor& s) {
  const int a = s.a, b = s.b;
  switch (s.family) {
    case Family::TypeII: return cartan_name(s.group);
    case Family::Sphere: return "";
    case Family::CpxGrass: return "A" + str(a + b - 1) + " III" + str(a);
    case Family::QuatGrass: return "C" + str(a + b) + " II" + str(a);
    case Family::RealGrassB: return "B" + str(a + b) + " I" + str(2 * a);
    case Family::RealGrassDOdd: return "D" + str(a + b + 1) + " I" + str(2 * a + 1);
    case Family::RealGrassDEven: return "D" + str(a + b) + " I" + str(2 * a);
    case Family::AI: return "A" + str(a - 1) + " I";
    case Family::AII: return "A" + str(2 * a - 1) + " II";
    case Family::CnI: return "C" + str(a) + " I";
    case Family::DnIII: return "D" + str(a) + " III";
    default: return exceptional_info(s.family).label;
  }
}

std::vector<std::pair<std::string, int>> parameters(const SpaceDescriptor& s) {
  switch (s.family) {
    case Family::TypeII: return {{"rank", s.group.rank}};
    case Family::Sphere:
    case Family::AI:
    case Family::AII:
    case Family::CnI:
    case Family::DnIII: return {{"n", s.a}};
    case Family::CpxGrass:
    case Family::QuatGrass: return {{"p", s.a}, {"q", s.b}};
    case Family::RealGrassB:
    case Family::RealGrassDOdd:
    case Family::RealGrassDEven: return {{"k", s.a}, {"l", s.b}};
    default: return {};
  }
}

// ---------------------------------------------------------------------------
// Degree data, isotropy, dimensions

DegreeData degree_data(const SpaceDescriptor& s) {
  validate(s);
  const int a = s.a, b = s.b;
  DegreeData d;
  auto equal_rank = [&](std::vector<int> g, std::vector<int> h) {
    d.d_g = std::move(g);
    d.d_h = std::move(h);
    d.d_g1 = d.d_g;
  };
  auto split = [&](std::vector<int> g, std::vector<int> h, std::vector<int> vanishing) {
    d.d_g = std::move(g);
    d.d_h = std::move(h);
    d.d_g1 = minus(d.d_g, vanishing);
    d.d_g0 = std::move(vanishing);
  };
  auto odds = [](int from, int to) { return range_step(from, to, 2); };

  switch (s.family) {
    case Family::TypeII: {
      auto dg = degrees(s.group);
      d.d_g = concat(dg, dg);
      d.d_h = dg;
      d.d_g0 = dg;
      d.d_g1 = dg;
      break;
    }
    case Family::Sphere:
      if (a % 2 == 0) {
        equal_rank(degrees(B(a / 2)), degrees(D(a / 2)));
      } else {
        const int m = (a - 1) / 2;
        split(degrees(D(m + 1)), degrees(B(m)), {m + 1});
      }
      break;
    case Family::CpxGrass: equal_rank(degrees(U(a + b)), concat(degrees(U(a)), degrees(U(b)))); break;
    case Family::QuatGrass: equal_rank(degrees(C(a + b)), concat(degrees(C(a)), degrees(C(b)))); break;
    case Family::RealGrassB: equal_rank(degrees(B(a + b)), concat(degrees(D(a)), degrees(B(b)))); break;
    case Family::RealGrassDOdd:
      split(degrees(D(a + b + 1)), concat(degrees(B(a)), degrees(B(b))), {a + b + 1});
      break;
    case Family::RealGrassDEven: equal_rank(degrees(D(a + b)), concat(degrees(D(a)), degrees(D(b)))); break;
    case Family::AI:
      if (a % 2 == 1) {
        split(degrees(A(a - 1)), degrees(B((a - 1) / 2)), odds(3, a));
      } else {
        split(degrees(A(a - 1)), degrees(D(a / 2)), odds(3, a - 1));
      }
      break;
    case Family::AII: split(degrees(A(2 * a - 1)), degrees(C(a)), odds(3, 2 * a - 1)); break;
    case Family::CnI: equal_rank(degrees(C(a)), degrees(U(a))); break;
    case Family::DnIII: equal_rank(degrees(D(a)), degrees(U(a))); break;
    case Family::E6I: split(degrees(make_group(Series::E6)), degrees(C(4)), {5, 9}); break;
    case Family::E6IV:
      split(degrees(make_group(Series::E6)), degrees(make_group(Series::F4)), {5, 9});
      break;
    case Family::E7V: equal_rank(degrees(make_group(Series::E7)), degrees(A(7))); break;
    case Family::E8VIII: equal_rank(degrees(make_group(Series::E8)), degrees(D(8))); break;
    case Family::F4II: equal_rank(degrees(make_group(Series::F4)), degrees(B(4))); break;
    case Family::E6III: equal_rank(degrees(make_group(Series::E6)), concat({1}, degrees(D(5)))); break;
    case Family::E7VII:
      equal_rank(degrees(make_group(Series::E7)), concat({1}, degrees(make_group(Series::E6))));
      break;
    case Family::E6II: equal_rank(degrees(make_group(Series::E6)), concat(degrees(A(1)), degrees(A(5)))); break;
    case Family::E7VI: equal_rank(degrees(make_group(Series::E7)), concat(degrees(A(1)), degrees(D(6)))); break;
    case Family::E8IX:
      equal_rank(degrees(make_group(Series::E8)), concat(degrees(A(1)), degrees(make_group(Series::E7))));
      break;
    case Family::F4I: equal_rank(degrees(make_group(Series::F4)), concat(degrees(A(1)), degrees(C(3)))); break;
    case Family::G2I: equal_rank(degrees(make_group(Series::G2)), degrees(D(2))); break;
  }
  return d;
}

int IsotropyDecomposition::total_dim() const {
  int t = 0;
  for (const auto& f : factors) t += f.dim;
  return t;
}

bool IsotropyDecomposition::has_center() const {
  return std::any_of(factors.begin(), factors.end(),
                     [](const IsotropyFactor& f) { return f.kind == FactorKind::center_u1; });
}

IsotropyDecomposition isotropy(const SpaceDescriptor& s) {
  validate(s);
  const int a = s.a, b = s.b;
  IsotropyDecomposition iso;
  const IsotropyFactor u1{FactorKind::center_u1, "u(1)", 1};
  const IsotropyFactor so2{FactorKind::center_u1, "so(2)", 1};
  auto simple = [](const std::string& name, int dim) { return IsotropyFactor{FactorKind::simple, name, dim}; };

  switch (s.family) {
    case Family::TypeII: {
      const auto& g = s.group;
      if (g.series == Series::SO2) {
        iso.factors = {so2};
      } else if (g.series == Series::U) {
        iso.factors = join({u1}, su_factors(g.rank));
      } else {
        iso.factors = {simple(algebra_name(g), group_dimension(g))};
      }
      iso.subgroup = "Δ" + group_name(g);
      break;
    }
    case Family::Sphere:
      iso.factors = so_factors(a);
      iso.subgroup = "SO(" + str(a) + ")";
      break;
    case Family::CpxGrass:
      iso.factors = join(join({u1}, su_factors(a)), su_factors(b));
      iso.subgroup = "U(" + str(a) + ")×U(" + str(b) + ")";
      break;
    case Family::QuatGrass:
      iso.factors = {sp_factor(a), sp_factor(b)};
      iso.subgroup = "Sp(" + str(a) + ")×Sp(" + str(b) + ")";
      break;
    case Family::RealGrassB:
      iso.factors = join(so_factors(2 * a), so_factors(2 * b + 1));
      iso.subgroup = "SO(" + str(2 * a) + ")×SO(" + str(2 * b + 1) + ")";
      break;
    case Family::RealGrassDOdd:
      iso.factors = join(so_factors(2 * a + 1), so_factors(2 * b + 1));
      iso.subgroup = "SO(" + str(2 * a + 1) + ")×SO(" + str(2 * b + 1) + ")";
      break;
    case Family::RealGrassDEven: {
      auto first = so_factors(2 * a);
      auto second = so_factors(2 * b);
      // Two so(4) factors when k = l = 2: keep labels distinct.
      if (a == b)
        for (auto& f : second) f.name += "'";
      iso.factors = join(first, second);
      iso.subgroup = "SO(" + str(2 * a) + ")×SO(" + str(2 * b) + ")";
      break;
    }
    case Family::AI:
      iso.factors = so_factors(a);
      iso.subgroup = "SO(" + str(a) + ")";
      break;
    case Family::AII:
      iso.factors = {sp_factor(a)};
      iso.subgroup = "Sp(" + str(a) + ")";
      break;
    case Family::CnI:
    case Family::DnIII:
      iso.factors = join({u1}, su_factors(a));
      iso.subgroup = "U(" + str(a) + ")";
      break;
    case Family::E6I: iso.factors = {sp_factor(4)}; break;
    case Family::E6IV: iso.factors = {simple("f4", 52)}; break;
    case Family::E7V: iso.factors = {simple("su(8)", 63)}; break;
    case Family::E8VIII: iso.factors = {simple("so(16)", 120)}; break;
    case Family::F4II: iso.factors = {simple("so(9)", 36)}; break;
    case Family::E6III: iso.factors = {so2, simple("so(10)", 45)}; break;
    case Family::E7VII: iso.factors = {so2, simple("e6", 78)}; break;
    case Family::E6II: iso.factors = {simple("su(2)", 3), simple("su(6)", 35)}; break;
    case Family::E7VI: iso.factors = {simple("su(2)", 3), simple("so(12)", 66)}; break;
    case Family::E8IX: iso.factors = {simple("su(2)", 3), simple("e7", 133)}; break;
    case Family::F4I: iso.factors = {simple("su(2)", 3), simple("sp(3)", 21)}; break;
    case Family::G2I: iso.factors = {simple("sp(1)", 3), simple("su(2)", 3)}; break;
  }
  if (is_exceptional(s.family)) iso.subgroup = exceptional_info(s.family).subgroup;
  return iso;
}

int ambient_dimension(const SpaceDescriptor& s) {
  validate(s);
  const int g = group_dimension(transitive_group(s));
  return s.family == Family::TypeII ? 2 * g : g;
}

int dimension(const SpaceDescriptor& s) { return ambient_dimension(s) - isotropy(s).total_dim(); }

ClassFlags classify(const SpaceDescriptor& s) {
  validate(s);
  const auto iso = isotropy(s);
  const int a = s.a, b = s.b;
  ClassFlags f;
  f.is_type_ii = s.family == Family::TypeII || (s.family == Family::Sphere && a == 3);
  f.is_semisimple = !(s.family == Family::TypeII &&
                      (s.group.series == Series::U || s.group.series == Series::SO2));
  f.is_hermitian = s.family != Family::TypeII && iso.has_center();
  f.is_simple_isotropy = iso.factors.size() == 1 && iso.factors[0].kind == FactorKind::simple;
  f.is_grassmannian = s.family == Family::Sphere || s.family == Family::CpxGrass ||
                      s.family == Family::QuatGrass || s.family == Family::RealGrassB ||
                      s.family == Family::RealGrassDOdd || s.family == Family::RealGrassDEven;
  switch (s.family) {
    case Family::QuatGrass: f.is_wolf = a == 1; break;
    case Family::CpxGrass: f.is_wolf = a == 2; break;
    case Family::RealGrassB: f.is_wolf = a == 2; break;
    case Family::RealGrassDEven: f.is_wolf = a == 2 || (a == 1 && b == 2); break;
    case Family::E6II:
    case Family::E7VI:
    case Family::E8IX:
    case Family::F4I:
    case Family::G2I: f.is_wolf = true; break;
    default: break;
  }
  return f;
}

std::string table_class_name(TableClass c) {
  switch (c) {
    case TableClass::groups: return "groups";
    case TableClass::grassmannians: return "grassmannians";
    case TableClass::simple_isotropy: return "simple-isotropy";
    case TableClass::hermitian: return "hermitian";
    case TableClass::wolf: return "wolf";
  }
  throw std::logic_error("unhandled table class");
}

TableClass parse_table_class(const std::string& name) {
  const std::string n = lower(name);
  if (n == "groups" || n == "group" || n == "type-ii" || n == "typeii") return TableClass::groups;
  if (n == "grassmannians" || n == "grassmannian") return TableClass::grassmannians;
  if (n == "simple-isotropy" || n == "simple") return TableClass::simple_isotropy;
  if (n == "hermitian") return TableClass::hermitian;
  if (n == "wolf") return TableClass::wolf;
  throw std::invalid_argument("unknown class '" + name +
                              "' (expected groups, grassmannians, simple-isotropy, hermitian, wolf)");
}

bool in_table(const SpaceDescriptor& s, TableClass c) {
  const auto f = classify(s);
  switch (c) {
    case TableClass::groups: return s.family == Family::TypeII;
    case TableClass::grassmannians: return f.is_grassmannian;
    case TableClass::simple_isotropy:
      return s.family == Family::AI || s.family == Family::AII || s.family == Family::E6I ||
             s.family == Family::E6IV || s.family == Family::E7V || s.family == Family::E8VIII ||
             s.family == Family::F4II;
    case TableClass::hermitian:
      return s.family == Family::CpxGrass || (s.family == Family::RealGrassB && s.a == 1) ||
             (s.family == Family::RealGrassDEven && s.a == 1) || s.family == Family::CnI ||
             s.family == Family::DnIII || s.family == Family::E6III || s.family == Family::E7VII;
    case TableClass::wolf: return f.is_wolf;
  }
  return false;
}

std::vector<SpaceDescriptor> enumerate(int max_dim) {
  std::vector<SpaceDescriptor> out;
  auto fits = [&](const SpaceDescriptor& s) {
    const int d = dimension(s);
    return d >= 2 && d <= max_dim;
  };
  auto push = [&](const SpaceDescriptor& s) {
    if (fits(s)) out.push_back(s);
  };

  const std::array<std::pair<Series, int>, 5> classical{
      {{Series::A, 1}, {Series::B, 2}, {Series::C, 3}, {Series::D, 3}, {Series::U, 2}}};
  for (auto [series, first] : classical)
    for (int n = first; group_dimension(make_group(series, n)) <= max_dim; ++n)
      push(type_ii(make_group(series, n)));
  for (Series x : {Series::E6, Series::E7, Series::E8, Series::F4, Series::G2})
    push(type_ii(make_group(x)));

  for (int n = 2; n <= max_dim; ++n) push(sphere(n));
  for (int p = 1; 2 * p * p <= max_dim; ++p)
    for (int q = p; 2 * p * q <= max_dim; ++q) push(cpx_grass(p, q));
  for (int p = 1; 4 * p * p <= max_dim; ++p)
    for (int q = p; 4 * p * q <= max_dim; ++q) push(quat_grass(p, q));
  for (int k = 1; 2 * k * 3 <= max_dim; ++k)
    for (int l = 1; 2 * k * (2 * l + 1) <= max_dim; ++l) push(real_grass_b(k, l));
  for (int k = 1; (2 * k + 1) * (2 * k + 1) <= max_dim; ++k)
    for (int l = k; (2 * k + 1) * (2 * l + 1) <= max_dim; ++l) push(real_grass_d_odd(k, l));
  for (int k = 1; 4 * k * k <= max_dim; ++k)
    for (int l = std::max(k, 3 - k); 4 * k * l <= max_dim; ++l) push(real_grass_d_even(k, l));
  for (int n = 3; (n - 1) * (n + 2) / 2 <= max_dim; ++n) push(ai(n));
  for (int n = 2; (n - 1) * (2 * n + 1) <= max_dim; ++n) push(aii(n));
  for (int n = 1; n * (n + 1) <= max_dim; ++n) push(cn_i(n));
  for (int n = 3; n * (n - 1) <= max_dim; ++n) push(dn_iii(n));
  for (const auto& e : kExceptional) push(exceptional(e.family));

  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace symcat
