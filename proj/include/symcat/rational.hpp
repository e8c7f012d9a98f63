#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace symcat {

// mpq_class keeps every value canonical: lowest terms, positive denominator.
using BigInt = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(long num, long den) {
  if (den == 0) throw std::domain_error("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// "p/q", or "p" when the denominator is 1.
inline std::string to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline std::string to_string(const BigInt& z) { return z.get_str(); }

// Parses "p", "-p" or "p/q".
Rational parse_rational(const std::string& text);

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

// Throws std::overflow_error when the value does not fit.
std::int64_t to_int64(const BigInt& z);

}  // namespace symcat
