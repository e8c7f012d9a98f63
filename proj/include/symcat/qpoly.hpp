#pragma once

#include <string>

#include "symcat/polynomial.hpp"
#include "symcat/rational.hpp"

namespace symcat {

using QPoly = Polynomial<Rational>;

/// [n]_{q^step} = 1 + q^step + ... + q^{step(n-1)}.
/// Throws std::invalid_argument for n < 1 or step < 1.
QPoly quantum_number(long n, long step = 1);

/// Gaussian binomial binom(k+l, k) in q^step, built from the recurrence
///   binom(k+l,k) = q^k binom(k+l-1,k) + binom(k+l-1,k-1).
QPoly gaussian_binomial(long k, long l, long step = 1);

/// a · [n]_{q^step} in O(deg a) via a strided running sum.
QPoly multiply_by_quantum(const QPoly& a, long n, long step);

/// 1 + q^e.
QPoly one_plus_power(long e);

/// True when every coefficient is a nonnegative integer.
bool has_nonnegative_integer_coefficients(const QPoly& p);

/// Expanded text form, lowest degree first, e.g. "1 + t^4 + t^5 + t^9".
std::string to_string(const QPoly& p, const std::string& var = "t");

}  // namespace symcat
