#include "symcat/qpoly.hpp"

#include <stdexcept>
#include <vector>

namespace symcat {

Rational parse_rational(const std::string& text) {
  Rational r;
  if (r.set_str(text, 10) != 0) throw std::invalid_argument("not a rational: '" + text + "'");
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
  r.canonicalize();
  return r;
}

std::int64_t to_int64(const BigInt& z) {
  if (!z.fits_slong_p()) throw std::overflow_error("integer does not fit in 64 bits: " + z.get_str());
  return z.get_si();
}

QPoly quantum_number(long n, long step) {
  if (n < 1) throw std::invalid_argument("quantum_number: n must be >= 1");
  if (step < 1) throw std::invalid_argument("quantum_number: step must be >= 1");
  std::vector<Rational> c(static_cast<std::size_t>(step * (n - 1) + 1), Rational(0));
  for (long j = 0; j < n; ++j) c[static_cast<std::size_t>(j * step)] = 1;
  return QPoly(std::move(c));
}

QPoly gaussian_binomial(long k, long l, long step) {
  if (k < 0 || l < 0) throw std::invalid_argument("gaussian_binomial: k, l must be >= 0");
  if (step < 1) throw std::invalid_argument("gaussian_binomial: step must be >= 1");
  // row[j] holds binom(i+j, i) for the current i.
  std::vector<QPoly> row(static_cast<std::size_t>(l + 1), QPoly::constant(1));
  for (long i = 1; i <= k; ++i) {
    std::vector<QPoly> next(row.size());
    next[0] = QPoly::constant(1);
    const QPoly shift = QPoly::monomial(static_cast<std::size_t>(i));
    for (std::size_t j = 1; j < row.size(); ++j) next[j] = shift * next[j - 1] + row[j];
    row = std::move(next);
  }
  return step == 1 ? row.back() : substitute_power(row.back(), static_cast<std::size_t>(step));
}

QPoly multiply_by_quantum(const QPoly& a, long n, long step) {
  if (n < 1 || step < 1) throw std::invalid_argument("multiply_by_quantum: n, step must be >= 1");
  if (a.is_zero()) return {};
  auto ca = a.coefficients();
  const std::size_t s = static_cast<std::size_t>(step);
  const std::size_t span = s * static_cast<std::size_t>(n);
  const std::size_t size = ca.size() + span - s;
  std::vector<Rational> out(size, Rational(0));
  for (std::size_t i = 0; i < size; ++i) {
    Rational v = i < ca.size() ? ca[i] : Rational(0);
    if (i >= s) v += out[i - s];
    if (i >= span && i - span < ca.size()) v -= ca[i - span];
    out[i] = std::move(v);
  }
  return QPoly(std::move(out));
}

QPoly one_plus_power(long e) {
  if (e < 1) throw std::invalid_argument("one_plus_power: exponent must be >= 1");
  return QPoly::constant(1) + QPoly::monomial(static_cast<std::size_t>(e));
}

bool has_nonnegative_integer_coefficients(const QPoly& p) {
  for (const auto& c : p.coefficients())
    if (!is_integer(c) || sgn(c) < 0) return false;
  return true;
}

std::string to_string(const QPoly& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::string out;
  auto c = p.coefficients();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    Rational mag = abs(c[i]);
    const bool neg = sgn(c[i]) < 0;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    const bool unit = mag == 1;
    if (i == 0 || !unit) out += to_string(mag);
    if (i > 0) {
      out += var;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

}  // namespace symcat
