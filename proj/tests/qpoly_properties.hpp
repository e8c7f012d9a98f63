// Randomized algebraic identities for quantum numbers and exact division.
// Shared by the unit tests and the acceptance binary.
#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "symcat/errors.hpp"
#include "symcat/qpoly.hpp"

namespace qprops {

using symcat::QPoly;
using symcat::Rational;

struct Result {
  long checks = 0;
  long failures = 0;
  std::vector<std::string> first;
};

class Runner {
 public:
  explicit Runner(std::uint64_t seed) : rng_(seed) {}

  long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

  Rational small_rational() {
    return symcat::make_rational(uniform(-9, 9), uniform(1, 6));
  }

  QPoly random_poly(long max_deg, bool nonzero) {
    for (;;) {
      std::vector<Rational> c(static_cast<std::size_t>(uniform(0, max_deg) + 1));
      for (auto& x : c) x = uniform(0, 2) == 0 ? Rational(0) : small_rational();
      QPoly p(std::move(c));
      if (!nonzero || !p.is_zero()) return p;
    }
  }

  void record(Result& r, bool ok, const std::string& what) {
    ++r.checks;
    if (ok) return;
    ++r.failures;
    if (r.first.size() < 10) r.first.push_back(what);
  }

 private:
  std::mt19937_64 rng_;
};

inline QPoly product_binomial(long k, long l, long step) {
  QPoly num = QPoly::constant(1), den = QPoly::constant(1);
  for (long i = 1; i <= k; ++i) {
    num = num * symcat::quantum_number(l + i, step);
    den = den * symcat::quantum_number(i, step);
  }
  return symcat::exact_div(num, den);
}

inline Result run(long total, std::uint64_t seed = 0x5eed2026) {
  Runner g(seed);
  Result r;
  using symcat::quantum_number;
  for (long i = 0; i < total; ++i) {
    const std::string tag = "#" + std::to_string(i) + " ";
    try {
      switch (i % 6) {
        case 0: {  // recurrence ≡ product definition
          const long k = g.uniform(0, 7), l = g.uniform(0, 7), s = g.uniform(1, 3);
          g.record(r, symcat::gaussian_binomial(k, l, s) == product_binomial(k, l, s),
                   tag + "binomial k=" + std::to_string(k) + " l=" + std::to_string(l));
          break;
        }
        case 1: {  // [n]/[m] = [n/m]_{q^m}
          const long m = g.uniform(1, 12), q = g.uniform(1, 10), s = g.uniform(1, 3);
          g.record(r, symcat::exact_div(quantum_number(m * q, s), quantum_number(m, s)) == quantum_number(q, m * s),
                   tag + "[n]/[m] m=" + std::to_string(m) + " n=" + std::to_string(m * q));
          break;
        }
        case 2: {  // [n]_{t^m} / [m]_{t^n} = [n/m]_{t^m}
          const long m = g.uniform(1, 9), n = m * g.uniform(1, 9);
          g.record(r, symcat::exact_div(quantum_number(n, m), quantum_number(m, n)) == quantum_number(n / m, m),
                   tag + "quirky m=" + std::to_string(m) + " n=" + std::to_string(n));
          break;
        }
        case 3: {  // exact_div(a·b, b) = a
          const QPoly a = g.random_poly(10, false), b = g.random_poly(8, true);
          g.record(r, symcat::exact_div(a * b, b) == a, tag + "round-trip");
          break;
        }
        case 4: {  // a nonzero remainder is never truncated
          const QPoly b = g.random_poly(6, true);
          if (*b.degree() == 0) {
            g.record(r, true, tag);
            break;
          }
          QPoly rem = g.random_poly(*b.degree() - 1, true);
          const QPoly a = g.random_poly(8, false) * b + rem;
          bool threw = false;
          try {
            (void)symcat::exact_div(a, b);
          } catch (const symcat::NonExactDivision&) {
            threw = true;
          }
          g.record(r, threw, tag + "remainder detection");
          break;
        }
        case 5: {  // symmetry, value at 1, strided product
          const long k = g.uniform(0, 8), l = g.uniform(0, 8), s = g.uniform(1, 4);
          const QPoly b = symcat::gaussian_binomial(k, l, s);
          mpz_class c;
          mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(k + l), static_cast<unsigned long>(k));
          const QPoly a = g.random_poly(9, false);
          const long n = g.uniform(1, 9);
          g.record(r,
                   b == symcat::gaussian_binomial(l, k, s) && symcat::evaluate(b, 1) == Rational(c) &&
                       b.degree() == static_cast<std::size_t>(s * k * l) &&
                       symcat::multiply_by_quantum(a, n, s) == a * quantum_number(n, s),
                   tag + "symmetry/evaluation");
          break;
        }
      }
    } catch (const std::exception& e) {
      g.record(r, false, tag + "threw: " + e.what());
    }
  }
  return r;
}

}  // namespace qprops
