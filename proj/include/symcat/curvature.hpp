#pragma once

#include <string>
#include <vector>

#include "symcat/catalog.hpp"
#include "symcat/rational.hpp"

namespace symcat {

struct SpectrumEntry {
  Rational value;        // reduced
  long raw_num = 0;      // the fraction as the formula produces it, e.g. 9/24
  long raw_den = 1;
  int mult = 0;          // dimension of the isotropy factor
  std::string factor;    // isotropy factor name

  std::string raw() const { return std::to_string(raw_num) + "/" + std::to_string(raw_den); }
};

/// Nonzero spectrum of the curvature operator of the normal metric on Λ²p,
/// one entry per isotropy factor, plus the kernel size C(dim M, 2) - dim h.
/// The abelian factor of U(n) and SO(2) acts trivially and is listed with value 0.
struct Spectrum {
  SpaceDescriptor space;
  std::vector<SpectrumEntry> entries;
  long zero_multiplicity = 0;

  int total_multiplicity() const;
  std::vector<Rational> distinct_nonzero() const;  // ascending
  Rational max_value() const;
  int multiplicity_of(const Rational& v) const;
};

Spectrum spectrum(const SpaceDescriptor& s);

/// ½ dim M = Σ 2 λ_i dim h_i (the center counts with λ = ½).
/// Vacuously true for the non-semisimple groups.
bool trace_check(const SpaceDescriptor& s);

struct Theorem1Report {
  bool in_range = true;      // all eigenvalues in [0, ½]
  int distinct_nonzero = 0;
  bool rational = true;
  bool ok = true;            // 1..3 distinct values; 3 only for CpxGrass(p,q), 2 <= p < q
};

Theorem1Report theorem1_check(const SpaceDescriptor& s);

/// max λ = ½  ⟺  Hermitian  ⟺  b₂ = 1, with ½ of multiplicity 1.
bool theorem2_check(const SpaceDescriptor& s);

/// For a simple isotropy algebra: λ = ¼ dim M / dim h, and b₃ = 1 when
/// dim M = dim h, otherwise b₂ = b₃ = b₄ = 0. True for other spaces.
bool theorem3_check(const SpaceDescriptor& s);

/// CP², SO(8)/(SO(2)×SO(6)), E6 III, E7 VII: each has nonzero spectrum {½, 1/6}.
std::vector<SpaceDescriptor> hermitian_quadruple_coincidence();

/// Re-evaluates the Hermitian and Wolf formulas where they also apply and
/// returns one message per disagreement with spectrum(s).
std::vector<std::string> overlap_discrepancies(const SpaceDescriptor& s);

}  // namespace symcat
