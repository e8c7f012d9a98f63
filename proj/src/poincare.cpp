#include "symcat/poincare.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "symcat/errors.hpp"

namespace symcat {

namespace {

// Removes elements common to both multisets.
void cancel_common(std::vector<int>& num, std::vector<int>& den) {
  std::sort(num.begin(), num.end());
  std::sort(den.begin(), den.end());
  std::vector<int> n2, d2;
  std::set_difference(num.begin(), num.end(), den.begin(), den.end(), std::back_inserter(n2));
  std::set_difference(den.begin(), den.end(), num.begin(), num.end(), std::back_inserter(d2));
  num = std::move(n2);
  den = std::move(d2);
}

QPoly quantum_product(const std::vector<int>& ks) {
  QPoly acc = QPoly::constant(1);
  for (int k : ks) acc = multiply_by_quantum(acc, k, 2);
  return acc;
}

QPoly quantum_quotient(std::vector<int> num, std::vector<int> den) {
  if (num.size() != den.size())
    throw RankMismatch("degree multisets differ in size: " + std::to_string(num.size()) + " vs " +
                       std::to_string(den.size()));
  cancel_common(num, den);
  QPoly q = exact_div(quantum_product(num), quantum_product(den));
  if (!has_nonnegative_integer_coefficients(q))
    throw NonExactDivision("quotient has a negative or non-integer coefficient");
  return q;
}

QPoly odd_product(const std::vector<int>& ks) {
  QPoly acc = QPoly::constant(1);
  for (int k : ks) acc = acc * one_plus_power(2 * k - 1);
  return acc;
}

std::string quantum_text(int n, int step) {
  return "[" + std::to_string(n) + "]_{t^" + std::to_string(step) + "}";
}

std::string odd_text(const std::vector<int>& ks) {
  std::string out;
  std::vector<int> sorted = ks;
  std::sort(sorted.begin(), sorted.end());
  for (int k : sorted) {
    const int e = 2 * k - 1;
    out += e == 1 ? "(1+t)" : "(1+t^" + std::to_string(e) + ")";
  }
  return out;
}

// Pairs each numerator with a distinct divisor from the denominator.
std::optional<std::vector<std::pair<int, int>>> pair_divisors(std::vector<int> num, std::vector<int> den) {
  std::sort(num.rbegin(), num.rend());
  std::sort(den.begin(), den.end());
  std::vector<bool> used(den.size(), false);
  std::vector<std::pair<int, int>> chosen;
  std::function<bool(std::size_t)> go = [&](std::size_t i) {
    if (i == num.size()) return true;
    for (std::size_t j = 0; j < den.size(); ++j) {
      if (used[j] || num[i] % den[j] != 0) continue;
      used[j] = true;
      chosen.emplace_back(num[i], den[j]);
      if (go(i + 1)) return true;
      chosen.pop_back();
      used[j] = false;
    }
    return false;
  };
  if (num.size() != den.size() || !go(0)) return std::nullopt;
  return chosen;
}

}  // namespace

QPoly group_poincare(const GroupType& g) { return odd_product(degrees(g)); }

QPoly borel_poincare(const DegreeData& d) {
  if (!d.equal_rank()) throw RankMismatch("Borel's formula needs rank G = rank H");
  return quantum_quotient(d.d_g, d.d_h);
}

QPoly takeuchi_poincare(const DegreeData& d) {
  return quantum_quotient(d.d_g1, d.d_h) * odd_product(d.d_g0);
}

PoincareResult poincare(const SpaceDescriptor& s) {
  PoincareResult r;
  r.chi_t = s.family == Family::TypeII ? group_poincare(s.group) : takeuchi_poincare(degree_data(s));
  const int dim = dimension(s);
  if (r.chi_t.degree() != static_cast<std::size_t>(dim))
    throw std::logic_error(space_id(s) + ": Poincaré polynomial degree differs from dimension");
  r.betti.reserve(static_cast<std::size_t>(dim) + 1);
  for (const auto& c : r.chi_t.coefficients()) r.betti.push_back(to_int64(c.get_num()));
  r.euler = to_int64(evaluate(r.chi_t, -1).get_num());
  r.total_betti = to_int64(evaluate(r.chi_t, 1).get_num());
  r.factored = factored_form(s);
  return r;
}

std::pair<std::int64_t, std::optional<std::int64_t>> euler_both_ways(const SpaceDescriptor& s) {
  const std::int64_t at_minus_one = poincare(s).euler;
  if (s.family == Family::TypeII) return {at_minus_one, std::nullopt};
  const auto d = degree_data(s);
  if (!d.equal_rank()) return {at_minus_one, std::nullopt};
  BigInt num = 1, den = 1;
  for (int k : d.d_g) num *= k;
  for (int l : d.d_h) den *= l;
  if (num % den != 0) throw NonExactDivision("degree product ratio is not an integer");
  return {at_minus_one, to_int64(BigInt(num / den))};
}

QPoly deven_closed_form(int k, int l) {
  QPoly num = quantum_number(2, 2L * k) * quantum_number(2, 2L * l) * gaussian_binomial(k, l, 4);
  return exact_div(num, quantum_number(2, 2L * (k + l)));
}

std::string factored_form(const SpaceDescriptor& s) {
  if (s.family == Family::TypeII) return odd_text(degrees(s.group));
  const auto d = degree_data(s);
  std::vector<int> num = d.d_g1, den = d.d_h;
  cancel_common(num, den);
  std::string out;
  if (auto pairs = pair_divisors(num, den)) {
    std::vector<std::pair<int, int>> q;  // (n, step)
    for (auto [n, m] : *pairs) q.emplace_back(n / m, 2 * m);
    std::sort(q.begin(), q.end(), [](auto a, auto b) { return a.second < b.second; });
    for (auto [n, step] : q) out += quantum_text(n, step);
  } else {
    std::string top, bottom;
    for (int n : num) top += quantum_text(n, 2);
    for (int m : den) bottom += quantum_text(m, 2);
    out = top + "/(" + bottom + ")";
  }
  out += odd_text(d.d_g0);
  return out.empty() ? "1" : out;
}

}  // namespace symcat
