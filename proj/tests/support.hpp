#pragma once

// Test-only helpers: seeded random generators and brute-force oracles that
// do not share code paths with the library.

#include <algorithm>
#include <random>
#include <vector>

#include "doctest.h"
#include "scpn/grassmann.hpp"
#include "scpn/linalg.hpp"
#include "scpn/superfield.hpp"

namespace scpn::testing {

inline GaussianRational q(long num, long den = 1) { return GaussianRational(mpq_class(num, den)); }
inline GaussianRational cq(long re_num, long re_den, long im_num, long im_den) {
  return GaussianRational(mpq_class(re_num, re_den), mpq_class(im_num, im_den));
}
inline GaussianRational I() { return GaussianRational::i(); }

class Rng {
 public:
  explicit Rng(unsigned seed) : gen_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen_); }

  GaussianRational scalar() {
    return GaussianRational(mpq_class(uniform(-4, 4), uniform(1, 3)),
                            mpq_class(uniform(-4, 4), uniform(1, 3)));
  }

  // Random element with roughly `density` of all monomials populated.
  GrassmannElement element(const TablePtr& table, int max_terms = 5) {
    std::vector<GrassmannElement::Term> terms;
    Mask full = (Mask{1} << table->size()) - 1;
    int n = uniform(1, max_terms);
    for (int k = 0; k < n; ++k) {
      terms.emplace_back(static_cast<Mask>(uniform(0, static_cast<int>(full))), scalar());
    }
    return GrassmannElement::from_terms(table, std::move(terms));
  }

  GrassmannElement element_of_parity(const TablePtr& table, bool odd) {
    std::vector<GrassmannElement::Term> terms;
    GrassmannElement source = element(table, 6);
    for (const auto& [m, c] : source.terms()) {
      if ((mask::degree(m) & 1) == static_cast<int>(odd)) terms.emplace_back(m, c);
    }
    if (terms.empty()) terms.emplace_back(odd ? Mask{1} : Mask{0}, scalar());
    return GrassmannElement::from_terms(table, std::move(terms));
  }

  // Random polynomial superfield of low degree; parity 0 even, 1 odd, -1 any.
  Superfield superfield(const SpacePtr& space, int order, int parity = -1, int degree = 2) {
    std::vector<PolyTerm> terms;
    int n = uniform(1, 4);
    for (int k = 0; k < n; ++k) {
      GrassmannElement c = parity < 0 ? element(space->table, 3)
                                      : element_of_parity(space->table, parity == 1);
      terms.push_back({c, uniform(0, degree), uniform(0, degree)});
    }
    return Superfield::polynomial(space, order, terms);
  }

  // Even superfield whose body constant is nonzero.
  Superfield invertible_even(const SpacePtr& space, int order) {
    Superfield f = superfield(space, order, 0);
    GaussianRational c = f.component(0).constant_term();
    GaussianRational shift = scalar() + q(5);
    return f + Superfield::constant(space, order, shift - c);
  }

  SuperMatrix matrix(const SpacePtr& space, int order, int n, int parity = -1) {
    SuperMatrix m(n, n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) m(i, j) = superfield(space, order, parity, 1);
    }
    return m;
  }

 private:
  std::mt19937 gen_;
};

// Product of two monomials given as index lists, by explicit bubble sort.
// Returns sign 0 when a generator repeats.
inline std::pair<int, std::vector<int>> oracle_monomial_product(std::vector<int> a,
                                                               const std::vector<int>& b) {
  a.insert(a.end(), b.begin(), b.end());
  int sign = 1;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j + 1 < a.size() - i; ++j) {
      if (a[j] == a[j + 1]) return {0, {}};
      if (a[j] > a[j + 1]) {
        std::swap(a[j], a[j + 1]);
        sign = -sign;
      }
    }
  }
  for (std::size_t j = 0; j + 1 < a.size(); ++j) {
    if (a[j] == a[j + 1]) return {0, {}};
  }
  return {sign, a};
}

inline std::vector<int> indices_of(Mask m) {
  std::vector<int> v;
  for (int g = 0; g < 64; ++g) {
    if (m >> g & 1) v.push_back(g);
  }
  return v;
}

inline Mask mask_of(const std::vector<int>& v) {
  Mask m = 0;
  for (int g : v) m |= Mask{1} << g;
  return m;
}

// Grassmann product computed with the bubble-sort oracle.
inline GrassmannElement oracle_product(const GrassmannElement& a, const GrassmannElement& b) {
  std::vector<GrassmannElement::Term> terms;
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      auto [sign, idx] = oracle_monomial_product(indices_of(ma), indices_of(mb));
      if (sign == 0) continue;
      GaussianRational v = ca * cb;
      terms.emplace_back(mask_of(idx), sign > 0 ? v : -v);
    }
  }
  return GrassmannElement::from_terms(a.table() ? a.table() : b.table(), std::move(terms));
}

// Dagger by explicit reversal: the product of partner generators in reverse
// order, multiplied out with the oracle product.
inline GrassmannElement oracle_dagger(const GrassmannElement& a) {
  const auto& table = a.table();
  GrassmannElement out(GaussianRational(0), table);
  for (const auto& [m, c] : a.terms()) {
    GrassmannElement term(c.conj(), table);
    std::vector<int> idx = indices_of(m);
    std::reverse(idx.begin(), idx.end());
    for (int g : idx) {
      term = oracle_product(term, GrassmannElement::monomial(table, Mask{1} << table->partner(g)));
    }
    out += term;
  }
  return out;
}

// h with f h = g, by direct coefficient recursion on the scalar jets.
inline Jet oracle_divide(const Jet& g, const Jet& f) {
  int order = std::min(g.order(), f.order());
  std::vector<GaussianRational> h(Jet::size_for(order));
  GaussianRational inv = f.coefficient(0, 0).inverse();
  for (int d = 0; d <= order; ++d) {
    for (int j = 0; j <= d; ++j) {
      int i = d - j;
      GaussianRational acc = g.coefficient(i, j);
      for (int k = 0; k <= i; ++k) {
        for (int l = 0; l <= j; ++l) {
          if (k == 0 && l == 0) continue;
          acc -= f.coefficient(k, l) * h[Jet::index(i - k, j - l)];
        }
      }
      h[Jet::index(i, j)] = acc * inv;
    }
  }
  return Jet::from_coefficients(order, h);
}

}  // namespace scpn::testing

namespace doctest {
template <>
struct StringMaker<scpn::GaussianRational> {
  static String convert(const scpn::GaussianRational& z) { return z.to_string().c_str(); }
};
template <>
struct StringMaker<scpn::GrassmannElement> {
  static String convert(const scpn::GrassmannElement& e) { return e.to_string().c_str(); }
};
template <>
struct StringMaker<scpn::Superfield> {
  static String convert(const scpn::Superfield& f) { return f.leading_term().c_str(); }
};
template <>
struct StringMaker<scpn::SuperMatrix> {
  static String convert(const scpn::SuperMatrix& m) { return m.leading_term().c_str(); }
};
}  // namespace doctest
