#include "symcat/curvature.hpp"

#include <algorithm>
#include <stdexcept>

#include "symcat/poincare.hpp"

namespace symcat {

namespace {

// Number of isotropy factors contributed by so(n).
std::size_t so_factor_count(int n) { return n <= 1 ? 0 : n == 4 ? 2 : 1; }

const Rational kHalf = make_rational(1, 2);

bool hermitian_formula_applies(const SpaceDescriptor& s) {
  switch (s.family) {
    case Family::CpxGrass: return s.a == 1;
    case Family::RealGrassB:
    case Family::RealGrassDEven: return s.a == 1;
    case Family::CnI: return s.a >= 2;
    case Family::DnIII:
    case Family::E6III:
    case Family::E7VII: return true;
    default: return false;
  }
}

// Index of the factor playing the role of sp(1) in a Wolf space.
std::size_t wolf_sp1_index(const IsotropyDecomposition& iso) {
  for (std::size_t i = 0; i < iso.factors.size(); ++i)
    if (iso.factors[i].kind == FactorKind::simple && iso.factors[i].dim == 3) return i;
  throw std::logic_error("Wolf space without a three-dimensional factor");
}

}  // namespace

int Spectrum::total_multiplicity() const {
  int t = 0;
  for (const auto& e : entries) t += e.mult;
  return t;
}

std::vector<Rational> Spectrum::distinct_nonzero() const {
  std::vector<Rational> v;
  for (const auto& e : entries)
    if (e.value != 0) v.push_back(e.value);
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

Rational Spectrum::max_value() const {
  Rational m = 0;
  for (const auto& e : entries) m = std::max(m, e.value);
  return m;
}

int Spectrum::multiplicity_of(const Rational& v) const {
  int t = 0;
  for (const auto& e : entries)
    if (e.value == v) t += e.mult;
  return t;
}

Spectrum spectrum(const SpaceDescriptor& s) {
  validate(s);
  const auto iso = isotropy(s);
  const long dim_m = dimension(s);
  const long dim_h = iso.total_dim();
  Spectrum sp;
  sp.space = s;

  std::size_t next = 0;
  auto take = [&](std::size_t count, long num, long den) {
    for (std::size_t k = 0; k < count; ++k) {
      const auto& f = iso.factors.at(next++);
      sp.entries.push_back({make_rational(num, den), num, den, f.dim, f.name});
    }
  };
  auto grassmannian = [&](int p, int q) {
    const long den = 2L * (p + q - 2);
    take(so_factor_count(p), q, den);
    take(so_factor_count(q), p, den);
  };
  const int a = s.a, b = s.b;

  switch (s.family) {
    case Family::TypeII:
      for (const auto& f : iso.factors) {
        if (f.kind == FactorKind::center_u1)
          take(1, 0, 1);
        else
          take(1, 1, 4);
      }
      break;
    case Family::Sphere: take(iso.factors.size(), 1, 2L * (a - 1)); break;
    case Family::CpxGrass:
      take(1, 1, 2);
      take(a >= 2 ? 1 : 0, b, 2L * (a + b));
      take(b >= 2 ? 1 : 0, a, 2L * (a + b));
      break;
    case Family::QuatGrass:
      take(1, b, 2L * (a + b + 1));
      take(1, a, 2L * (a + b + 1));
      break;
    case Family::RealGrassB: grassmannian(2 * a, 2 * b + 1); break;
    case Family::RealGrassDOdd: grassmannian(2 * a + 1, 2 * b + 1); break;
    case Family::RealGrassDEven: grassmannian(2 * a, 2 * b); break;
    case Family::AI:
    case Family::AII:
    case Family::E6I:
    case Family::E6IV:
    case Family::E7V:
    case Family::E8VIII:
    case Family::F4II: take(iso.factors.size(), dim_m, 4 * dim_h); break;
    case Family::CnI:
    case Family::DnIII:
    case Family::E6III:
    case Family::E7VII:
      take(1, 1, 2);
      if (dim_h > 1) take(iso.factors.size() - 1, dim_m - 2, 4 * (dim_h - 1));
      break;
    case Family::E6II:
    case Family::E7VI:
    case Family::E8IX:
    case Family::F4I: {
      const long n = dim_m / 4;
      take(1, n, 2 * (n + 2));
      take(1, n * (2 * n + 1), 2 * (n + 2) * iso.factors[1].dim);
      break;
    }
    case Family::G2I:
      take(1, 1, 4);
      take(1, 5, 12);
      break;
  }
  if (next != iso.factors.size()) throw std::logic_error(space_id(s) + ": spectrum misses a factor");
  sp.zero_multiplicity = std::max(0L, dim_m * (dim_m - 1) / 2 - dim_h);
  return sp;
}

bool trace_check(const SpaceDescriptor& s) {
  if (!classify(s).is_semisimple) return true;
  const auto sp = spectrum(s);
  Rational sum = 0;
  for (const auto& e : sp.entries) sum += 2 * e.value * e.mult;
  return sum == Rational(dimension(s)) / 2;
}

Theorem1Report theorem1_check(const SpaceDescriptor& s) {
  const auto sp = spectrum(s);
  Theorem1Report r;
  for (const auto& e : sp.entries)
    if (e.value < 0 || e.value > kHalf) r.in_range = false;
  r.distinct_nonzero = static_cast<int>(sp.distinct_nonzero().size());
  const bool three_expected = s.family == Family::CpxGrass && s.a >= 2 && s.a < s.b;
  const bool count_ok = !classify(s).is_semisimple ||
                        (r.distinct_nonzero >= 1 && r.distinct_nonzero <= 3 &&
                         (r.distinct_nonzero == 3) == three_expected);
  r.ok = r.in_range && r.rational && count_ok;
  return r;
}

bool theorem2_check(const SpaceDescriptor& s) {
  const auto flags = classify(s);
  if (!flags.is_semisimple) return true;
  const auto sp = spectrum(s);
  const auto pr = poincare(s);
  const bool max_half = sp.max_value() == kHalf;
  const bool b2_one = pr.b(2) == 1;
  if (max_half != flags.is_hermitian || b2_one != flags.is_hermitian) return false;
  if (flags.is_hermitian && sp.multiplicity_of(kHalf) != 1) return false;
  return pr.b(2) <= 1;
}

bool theorem3_check(const SpaceDescriptor& s) {
  const auto flags = classify(s);
  if (!flags.is_simple_isotropy || !flags.is_semisimple) return true;
  const auto sp = spectrum(s);
  const auto pr = poincare(s);
  const long dim_m = dimension(s);
  const long dim_h = isotropy(s).total_dim();
  if (sp.entries.size() != 1 || sp.entries[0].value != make_rational(dim_m, 4 * dim_h)) return false;
  if (dim_m == dim_h) return pr.b(3) == 1;
  return pr.b(2) == 0 && pr.b(3) == 0 && pr.b(4) == 0;
}

std::vector<SpaceDescriptor> hermitian_quadruple_coincidence() {
  return {complex_projective(2), real_grass_d_even(1, 3), exceptional(Family::E6III),
          exceptional(Family::E7VII)};
}

std::vector<std::string> overlap_discrepancies(const SpaceDescriptor& s) {
  std::vector<std::string> out;
  const auto sp = spectrum(s);
  const auto iso = isotropy(s);
  const long dim_m = dimension(s);
  const std::string id = space_id(s);

  if (hermitian_formula_applies(s) && iso.total_dim() > 1) {
    const long dim_h1 = iso.total_dim() - 1;
    const Rational expected = make_rational(dim_m - 2, 4 * dim_h1);
    for (const auto& e : sp.entries) {
      const Rational want = e.factor == "u(1)" || e.factor == "so(2)" ? kHalf : expected;
      if (e.value != want)
        out.push_back(id + ": Hermitian formula gives " + to_string(want) + " on " + e.factor +
                      ", spectrum has " + to_string(e.value));
    }
  }

  if (classify(s).is_wolf) {
    const long n = dim_m / 4;
    const std::size_t k = wolf_sp1_index(iso);
    const Rational sp1 = make_rational(n, 2 * (n + 2));
    if (sp.entries[k].value != sp1)
      out.push_back(id + ": Wolf formula gives " + to_string(sp1) + " on " + sp.entries[k].factor +
                    ", spectrum has " + to_string(sp.entries[k].value));
    if (iso.factors.size() == 2) {
      const std::size_t j = 1 - k;
      const Rational h2 = make_rational(n * (2 * n + 1), 2 * (n + 2) * iso.factors[j].dim);
      if (sp.entries[j].value != h2)
        out.push_back(id + ": Wolf formula gives " + to_string(h2) + " on " + sp.entries[j].factor +
                      ", spectrum has " + to_string(sp.entries[j].value));
    }
  }
  return out;
}

}  // namespace symcat
