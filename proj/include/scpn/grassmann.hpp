#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "scpn/gaussian_rational.hpp"

namespace scpn {

// A canonical monomial: the set bits are the generator indices, ascending.
using Mask = std::uint64_t;

inline constexpr int kMaxGenerators = 64;

enum class Parity { kEven, kOdd, kMixed };

std::string_view to_string(Parity p);

// Ordered odd generators with the dagger involution. theta+ and theta- are
// distinguished because the superderivatives act on them.
class GeneratorTable {
 public:
  struct Pair {
    std::string plus;
    std::string minus;
  };

  // The first pair is (theta+, theta-); every generator is paired with a
  // distinct partner.
  static std::shared_ptr<const GeneratorTable> create(std::vector<Pair> pairs);

  // theta+, theta- followed by `eta_pairs` pairs eta+/eta-, eta2+/eta2-, ...
  static std::shared_ptr<const GeneratorTable> standard(int eta_pairs);

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(int index) const { return names_.at(index); }
  int partner(int index) const { return partner_.at(index); }
  int theta_plus() const { return 0; }
  int theta_minus() const { return 1; }
  Mask theta_mask() const { return Mask{3}; }
  int index_of(const std::string& name) const;
  const std::vector<Pair>& pairs() const { return pairs_; }

  bool operator==(const GeneratorTable& other) const {
    return names_ == other.names_ && partner_ == other.partner_;
  }

 private:
  GeneratorTable() = default;

  std::vector<std::string> names_;
  std::vector<int> partner_;
  std::vector<Pair> pairs_;
};

using TablePtr = std::shared_ptr<const GeneratorTable>;

// Throws kTableMismatch unless the tables are compatible; returns the
// non-null one (either may be null for pure scalars).
TablePtr unify_tables(const TablePtr& a, const TablePtr& b);

namespace mask {

inline int degree(Mask m) { return __builtin_popcountll(m); }

// Sign of reordering g_a * g_b into canonical order; a and b are disjoint.
int product_sign(Mask a, Mask b);

// (g_{i1}...g_{ik})^dagger = g_{s(ik)}...g_{s(i1)}, recanonicalized.
std::pair<int, Mask> dagger(Mask m, const GeneratorTable& table);

// Left derivative with respect to generator g; sign 0 if g is absent.
std::pair<int, Mask> berezin(Mask m, int g);

}  // namespace mask

// Element of the finite exterior algebra with Gaussian-rational coefficients.
// Terms are kept sorted by mask with zero coefficients pruned.
class GrassmannElement {
 public:
  using Term = std::pair<Mask, GaussianRational>;

  GrassmannElement() = default;
  GrassmannElement(GaussianRational scalar, TablePtr table = nullptr);  // NOLINT
  static GrassmannElement monomial(TablePtr table, Mask m,
                                   GaussianRational coeff = 1);
  static GrassmannElement generator(const TablePtr& table,
                                    const std::string& name);
  static GrassmannElement from_terms(TablePtr table, std::vector<Term> terms);

  const TablePtr& table() const { return table_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  GaussianRational coefficient(Mask m) const;
  GaussianRational body() const { return coefficient(0); }

  Parity parity() const;
  bool is_even() const { return parity() == Parity::kEven; }
  // Zero counts as odd as well as even.
  bool is_odd() const { return is_zero() || parity() == Parity::kOdd; }

  GrassmannElement dagger() const;
  GrassmannElement berezin(int generator) const;
  // The grading automorphism: odd monomials change sign.
  GrassmannElement twist() const;

  GrassmannElement& operator+=(const GrassmannElement& o);
  GrassmannElement& operator-=(const GrassmannElement& o);
  GrassmannElement& operator*=(const GaussianRational& c);

  friend GrassmannElement operator+(GrassmannElement a, const GrassmannElement& b) { return a += b; }
  friend GrassmannElement operator-(GrassmannElement a, const GrassmannElement& b) { return a -= b; }
  friend GrassmannElement operator*(const GrassmannElement& a, const GrassmannElement& b);
  friend GrassmannElement operator*(GrassmannElement a, const GaussianRational& c) { return a *= c; }
  friend GrassmannElement operator*(const GaussianRational& c, GrassmannElement a) { return a *= c; }
  GrassmannElement operator-() const;

  friend bool operator==(const GrassmannElement& a, const GrassmannElement& b) {
    return a.terms_ == b.terms_;
  }

  // e.g. "1 + 2*theta+ - 1/3*i*theta+theta-"
  std::string to_string() const;

 private:
  void normalize();

  TablePtr table_;
  std::vector<Term> terms_;
};

}  // namespace scpn
