#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "symcat/errors.hpp"

namespace symcat {

/// Dense univariate polynomial, coefficients indexed by degree.
///
/// The zero polynomial has no coefficients and no degree. Every other value
/// keeps a nonzero leading coefficient. Division is only meaningful for
/// exact scalar types: a remainder is tested against Scalar(0) exactly.
template <class Scalar>
class Polynomial {
 public:
  Polynomial() = default;

  explicit Polynomial(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  Polynomial(std::initializer_list<Scalar> coeffs) : coeffs_(coeffs) { trim(); }

  static Polynomial constant(const Scalar& c) { return Polynomial(std::vector<Scalar>{c}); }

  static Polynomial monomial(std::size_t degree, const Scalar& c = Scalar(1)) {
    std::vector<Scalar> v(degree + 1, Scalar(0));
    v[degree] = c;
    return Polynomial(std::move(v));
  }

  std::optional<std::size_t> degree() const {
    if (coeffs_.empty()) return std::nullopt;
    return coeffs_.size() - 1;
  }

  bool is_zero() const { return coeffs_.empty(); }

  // Coefficient of x^i; zero past the degree.
  Scalar coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Scalar(0); }

  std::span<const Scalar> coefficients() const { return coeffs_; }

  const Scalar& leading() const { return coeffs_.back(); }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Scalar(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }

  Polynomial& operator-=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Scalar(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
  }

  Polynomial& operator*=(const Scalar& s) {
    for (auto& c : coeffs_) c *= s;
    trim();
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) { return mul(a, b); }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == Scalar(0)) coeffs_.pop_back();
  }

  std::vector<Scalar> coeffs_;
};

// Convolution product. Zero coefficients of the sparser operand are skipped,
// which matters for the quantum numbers q^{step·j} that dominate the catalog.
template <class Scalar>
Polynomial<Scalar> mul(const Polynomial<Scalar>& a, const Polynomial<Scalar>& b) {
  if (a.is_zero() || b.is_zero()) return {};
  auto ca = a.coefficients();
  auto cb = b.coefficients();
  std::vector<Scalar> out(ca.size() + cb.size() - 1, Scalar(0));
  for (std::size_t j = 0; j < cb.size(); ++j) {
    if (cb[j] == Scalar(0)) continue;
    for (std::size_t i = 0; i < ca.size(); ++i) {
      if (ca[i] == Scalar(0)) continue;
      out[i + j] += ca[i] * cb[j];
    }
  }
  return Polynomial<Scalar>(std::move(out));
}

/// Classical long division; returns q with a = b·q.
/// Throws NonExactDivision on a nonzero remainder and std::domain_error on b = 0.
template <class Scalar>
Polynomial<Scalar> exact_div(const Polynomial<Scalar>& a, const Polynomial<Scalar>& b) {
  if (b.is_zero()) throw std::domain_error("exact_div: division by the zero polynomial");
  if (a.is_zero()) return {};
  const std::size_t db = *b.degree();
  if (*a.degree() < db) throw NonExactDivision("exact_div: divisor degree exceeds dividend degree");

  std::vector<Scalar> rem(a.coefficients().begin(), a.coefficients().end());
  auto cb = b.coefficients();
  const Scalar& lead = b.leading();
  const std::size_t dq = *a.degree() - db;
  std::vector<Scalar> quot(dq + 1, Scalar(0));

  for (std::size_t k = dq + 1; k-- > 0;) {
    Scalar& top = rem[k + db];
    if (top == Scalar(0)) continue;
    Scalar c = top / lead;
    quot[k] = c;
    for (std::size_t j = 0; j <= db; ++j) {
      if (cb[j] == Scalar(0)) continue;
      rem[k + j] -= c * cb[j];
    }
  }
  for (std::size_t i = 0; i < db; ++i) {
    if (rem[i] != Scalar(0)) throw NonExactDivision("exact_div: nonzero remainder");
  }
  return Polynomial<Scalar>(std::move(quot));
}

// p(x) -> p(x^m).
template <class Scalar>
Polynomial<Scalar> substitute_power(const Polynomial<Scalar>& a, std::size_t m) {
  if (m == 0) throw std::domain_error("substitute_power: exponent must be positive");
  if (a.is_zero()) return {};
  auto ca = a.coefficients();
  std::vector<Scalar> out((ca.size() - 1) * m + 1, Scalar(0));
  for (std::size_t i = 0; i < ca.size(); ++i) out[i * m] = ca[i];
  return Polynomial<Scalar>(std::move(out));
}

// Horner evaluation.
template <class Scalar, class Arg>
Scalar evaluate(const Polynomial<Scalar>& a, const Arg& x) {
  Scalar acc(0);
  auto ca = a.coefficients();
  for (std::size_t i = ca.size(); i-- > 0;) acc = acc * Scalar(x) + ca[i];
  return acc;
}

template <class Scalar>
bool is_palindromic(const Polynomial<Scalar>& a) {
  auto ca = a.coefficients();
  return std::equal(ca.begin(), ca.begin() + ca.size() / 2, ca.rbegin());
}

}  // namespace symcat
