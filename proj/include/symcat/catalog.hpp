#pragma once

#include <compare>
#include <string>
#include <utility>
#include <vector>

namespace symcat {

enum class Series { A, B, C, D, E6, E7, E8, F4, G2, U, SO2 };

/// A compact Lie group by Cartan series. `rank` is n in A_n, B_n, C_n, D_n
/// and U(n); it is fixed for the exceptional series and for SO(2).
struct GroupType {
  Series series = Series::A;
  int rank = 1;

  friend auto operator<=>(const GroupType&, const GroupType&) = default;
};

/// Accepts every rank the degree table is defined for: A,B,C n>=1, D n>=1
/// (D_1 is SO(2)), U n>=1. Exceptional ranks are filled in.
GroupType make_group(Series series, int rank = 0);

/// Degrees of the basic invariant polynomials, in table order
/// (D_n lists n first).
std::vector<int> degrees(const GroupType& g);
int group_dimension(const GroupType& g);
std::string group_name(const GroupType& g);    // "SU(4)", "SO(7)", "E6", "U(3)"
std::string algebra_name(const GroupType& g);  // "su(4)", "so(7)", "e6", "u(3)"
std::string cartan_name(const GroupType& g);   // "A3", "B2", "E6", "U3", "SO2"

enum class Family {
  TypeII,
  Sphere,
  CpxGrass,
  QuatGrass,
  RealGrassB,
  RealGrassDOdd,
  RealGrassDEven,
  AI,
  AII,
  E6I,
  E6IV,
  E7V,
  E8VIII,
  F4II,
  CnI,
  DnIII,
  E6III,
  E7VII,
  E6II,
  E7VI,
  E8IX,
  F4I,
  G2I,
};

/// A compact irreducible symmetric space: family tag plus integer parameters.
///
/// Parameter meaning per family:
///   TypeII          group
///   Sphere          a = n                       S^n = SO(n+1)/SO(n)
///   CpxGrass        a = p, b = q  (p <= q)      U(p+q)/(U(p)×U(q)); p = 1 is CP^q
///   QuatGrass       a = p, b = q  (p <= q)      Sp(p+q)/(Sp(p)×Sp(q)); p = 1 is HP^q
///   RealGrassB      a = k, b = l                SO(2k+2l+1)/(SO(2k)×SO(2l+1))
///   RealGrassDOdd   a = k, b = l  (k <= l)      SO(2k+2l+2)/(SO(2k+1)×SO(2l+1))
///   RealGrassDEven  a = k, b = l  (k <= l)      SO(2k+2l)/(SO(2k)×SO(2l))
///   AI              a = n                       SU(n)/SO(n)
///   AII             a = n                       SU(2n)/Sp(n)
///   CnI             a = n                       Sp(n)/U(n)
///   DnIII           a = n                       SO(2n)/U(n)
/// Exceptional families carry no parameters.
struct SpaceDescriptor {
  Family family = Family::Sphere;
  GroupType group{};
  int a = 0;
  int b = 0;

  friend auto operator<=>(const SpaceDescriptor&, const SpaceDescriptor&) = default;
};

// Constructors validate parameter bounds and throw InvalidDescriptor.
SpaceDescriptor type_ii(const GroupType& g);
SpaceDescriptor sphere(int n);
SpaceDescriptor cpx_grass(int p, int q);
SpaceDescriptor complex_projective(int n);
SpaceDescriptor quat_grass(int p, int q);
SpaceDescriptor quaternionic_projective(int n);
SpaceDescriptor real_grass_b(int k, int l);
SpaceDescriptor real_grass_d_odd(int k, int l);
SpaceDescriptor real_grass_d_even(int k, int l);
SpaceDescriptor ai(int n);
SpaceDescriptor aii(int n);
SpaceDescriptor cn_i(int n);
SpaceDescriptor dn_iii(int n);
SpaceDescriptor exceptional(Family f);

bool is_exceptional(Family f);
void validate(const SpaceDescriptor& s);

/// Canonical CLI id, e.g. "sphere-7", "A3-III-p2", "B-grass-k2-l3", "E6-I".
std::string space_id(const SpaceDescriptor& s);
/// Case-insensitive inverse of space_id; also accepts "A{n}-III-p1".
/// Throws UnknownSpace (with suggestions) on anything unparseable or out of bounds.
SpaceDescriptor parse_space_id(const std::string& id);

std::string family_tag(Family f);                      // "CpxGrass", "E6I", ...
std::string display_name(const SpaceDescriptor& s);    // "U(5)/(U(2)×U(3))"
std::string cartan_label(const SpaceDescriptor& s);    // "A4 III2", "E6 I", "A3"
std::vector<std::pair<std::string, int>> parameters(const SpaceDescriptor& s);

struct DegreeData {
  std::vector<int> d_g;
  std::vector<int> d_h;
  std::vector<int> d_g0;
  std::vector<int> d_g1;

  bool equal_rank() const { return d_g0.empty(); }
};

/// D_G, D_H and the split D_G = D_G^1 ⊔ D_G^0. Type II spaces (G×G)/ΔG use
/// D_G ⊎ D_G with one copy in D_G^0. Complex Grassmannians, Sp(n)/U(n) and
/// SO(2n)/U(n) use unitary groups so that Borel's formula applies.
DegreeData degree_data(const SpaceDescriptor& s);

enum class FactorKind { center_u1, simple };

struct IsotropyFactor {
  FactorKind kind = FactorKind::simple;
  std::string name;  // "u(1)", "so(2)", "su(3)", "so(4)+", "e6", ...
  int dim = 0;
};

struct IsotropyDecomposition {
  std::vector<IsotropyFactor> factors;
  std::string subgroup;  // Group-level name, quotients as metadata only.

  int total_dim() const;
  bool has_center() const;
};

IsotropyDecomposition isotropy(const SpaceDescriptor& s);

int ambient_dimension(const SpaceDescriptor& s);  // dim g
int dimension(const SpaceDescriptor& s);          // dim g - dim h

struct ClassFlags {
  bool is_type_ii = false;
  bool is_hermitian = false;
  bool is_wolf = false;
  bool is_simple_isotropy = false;
  bool is_grassmannian = false;
  // False only for the non-semisimple groups U(n) and SO(2).
  bool is_semisimple = true;
};

ClassFlags classify(const SpaceDescriptor& s);

enum class TableClass { groups, grassmannians, simple_isotropy, hermitian, wolf };

std::string table_class_name(TableClass c);  // "groups", "simple-isotropy", ...
TableClass parse_table_class(const std::string& name);
bool in_table(const SpaceDescriptor& s, TableClass c);

/// Every catalog space with 2 <= dim <= max_dim, ordered by family tag then
/// parameters. The one-dimensional groups SO(2) and U(1) are never listed.
std::vector<SpaceDescriptor> enumerate(int max_dim);

}  // namespace symcat
