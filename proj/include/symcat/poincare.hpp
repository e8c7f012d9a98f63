#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "symcat/catalog.hpp"
#include "symcat/qpoly.hpp"

namespace symcat {

struct PoincareResult {
  QPoly chi_t;
  std::vector<std::int64_t> betti;  // betti[i] = coefficient of t^i, up to dim M
  std::int64_t euler = 0;           // chi_t(-1)
  std::int64_t total_betti = 0;     // chi_t(1)
  std::string factored;             // quantum-number form, e.g. "[3]_{t^8}(1+t^9)(1+t^17)"

  std::int64_t b(std::size_t i) const { return i < betti.size() ? betti[i] : 0; }
};

/// ∏_{k ∈ degrees(g)} (1 + t^{2k-1}).
QPoly group_poincare(const GroupType& g);

/// ∏_{D_G}[k]_{t²} / ∏_{D_H}[l]_{t²}. Equal rank only: throws RankMismatch
/// when D_G^0 is nonempty or |D_G| != |D_H|, NonExactDivision when the
/// quotient is not a polynomial with nonnegative integer coefficients.
QPoly borel_poincare(const DegreeData& d);

/// (∏_{D_G^1}[k]_{t²} / ∏_{D_H}[l]_{t²}) · ∏_{D_G^0}(1 + t^{2k-1}).
QPoly takeuchi_poincare(const DegreeData& d);

PoincareResult poincare(const SpaceDescriptor& s);

/// (chi(-1), ∏k/∏l). The ratio is only defined for equal rank.
std::pair<std::int64_t, std::optional<std::int64_t>> euler_both_ways(const SpaceDescriptor& s);

/// [2]_{t^{2k}} [2]_{t^{2l}} / [2]_{t^{2k+2l}} · binom(k+l,k)_{t^4}, the
/// closed form for SO(2k+2l)/(SO(2k)×SO(2l)).
QPoly deven_closed_form(int k, int l);

/// Factored display: common quantum numbers cancelled, the rest paired as
/// [n]_{t²}/[m]_{t²} = [n/m]_{t^{2m}} when m | n.
std::string factored_form(const SpaceDescriptor& s);

}  // namespace symcat
