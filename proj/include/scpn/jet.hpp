#pragma once

#include <gmpxx.h>

#include <optional>
#include <utility>
#include <vector>

#include "scpn/gaussian_rational.hpp"

namespace scpn {

// Truncated Taylor series in two commuting variables (s, t) with
// Gaussian-rational coefficients, valid for total degree <= order().
//
// Storage is fraction-free: Gaussian-integer numerators over one positive
// common denominator, reduced so the content gcd is 1. Coefficients are laid
// out by total degree, so lowering the order is a prefix truncation.
class Jet {
 public:
  Jet() = default;
  explicit Jet(int order);

  static Jet constant(int order, const GaussianRational& c);
  // Builds from coefficients in index() layout; missing entries are zero.
  static Jet from_coefficients(int order, const std::vector<GaussianRational>& c);

  static std::size_t size_for(int order) {
    return static_cast<std::size_t>(order + 1) * (order + 2) / 2;
  }
  static std::size_t index(int i, int j) {
    std::size_t d = i + j;
    return d * (d + 1) / 2 + j;
  }
  static std::pair<int, int> exponents(std::size_t idx);

  int order() const { return order_; }
  bool is_zero() const;
  GaussianRational coefficient(int i, int j) const;
  GaussianRational at(std::size_t idx) const;
  GaussianRational constant_term() const { return at(0); }
  // First nonzero coefficient in index() order.
  std::optional<std::pair<std::size_t, GaussianRational>> leading_term() const;

  Jet truncated(int order) const;

  Jet& operator+=(const Jet& o);
  Jet& operator-=(const Jet& o);
  Jet operator-() const;
  friend Jet operator+(Jet a, const Jet& b) { return a += b; }
  friend Jet operator-(Jet a, const Jet& b) { return a -= b; }
  friend Jet operator*(const Jet& a, const Jet& b);
  Jet scaled(const GaussianRational& c) const;

  // d/ds (dir = +) or d/dt (dir = -); lowers the order by one.
  Jet derivative_s() const;
  Jet derivative_t() const;
  // Coefficient-wise conjugate with s and t exchanged.
  Jet conj_swap() const;
  // 1/f; requires a nonzero constant term.
  Jet reciprocal() const;

  // Potential f with f(0,0) = 0, d f/ds = ds_part, d f/dt = dt_part.
  // Assumes the pair is compatible; order is one more than the inputs' min.
  static Jet integrate(const Jet& ds_part, const Jet& dt_part);

  friend bool operator==(const Jet& a, const Jet& b);

 private:
  void normalize();
  std::size_t n() const { return re_.size(); }

  int order_ = 0;
  std::vector<mpz_class> re_ = std::vector<mpz_class>(1);
  std::vector<mpz_class> im_ = std::vector<mpz_class>(1);
  mpz_class den_ = 1;
};

}  // namespace scpn
