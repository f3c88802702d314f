#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "scpn/grassmann.hpp"
#include "scpn/jet.hpp"

namespace scpn {

enum class Dir { kPlus, kMinus };

inline Dir opposite(Dir d) { return d == Dir::kPlus ? Dir::kMinus : Dir::kPlus; }

// Generator table plus the base point (x+, x-) = (p, conj(p)) of the jets.
struct Space {
  TablePtr table;
  GaussianRational base_point;

  static std::shared_ptr<const Space> create(TablePtr table, GaussianRational p);
};

using SpacePtr = std::shared_ptr<const Space>;

// One term of a polynomial superfield: coeff * x+^plus_power * x-^minus_power.
struct PolyTerm {
  GrassmannElement coeff;
  int plus_power = 0;
  int minus_power = 0;
};

// Left-theta monomials used by extract_theta.
enum class ThetaPart : Mask { kOne = 0, kPlus = 1, kMinus = 2, kPlusMinus = 3 };

// A function on superspace as a jet at the base point: sum over Grassmann
// monomials e_m of e_m * J_m(s, t), s = x+ - p, t = x- - conj(p).
// Every component jet carries the same order (the remaining derivative
// budget).
class Superfield {
 public:
  using Term = std::pair<Mask, Jet>;

  // Order of the default-constructed exact zero, which adapts to whatever
  // it is combined with.
  static constexpr int kUnboundedOrder = 1 << 30;

  Superfield() = default;
  Superfield(SpacePtr space, int order);

  static Superfield constant(SpacePtr space, int order, const GrassmannElement& c);
  static Superfield constant(SpacePtr space, int order, const GaussianRational& c);
  static Superfield from_jet(SpacePtr space, Mask m, Jet jet);
  static Superfield polynomial(SpacePtr space, int order,
                               const std::vector<PolyTerm>& terms);
  // x+ - p and x- - conj(p).
  static Superfield s(SpacePtr space, int order);
  static Superfield t(SpacePtr space, int order);
  static Superfield generator(SpacePtr space, int order, const std::string& name);

  const SpacePtr& space() const { return space_; }
  const TablePtr& table() const { return space_->table; }
  int order() const { return order_; }
  const std::vector<Term>& terms() const { return terms_; }
  Jet component(Mask m) const;
  GrassmannElement coefficient(int i, int j) const;

  bool is_zero() const { return terms_.empty(); }
  Parity parity() const;
  bool is_even() const { return is_zero() || parity() == Parity::kEven; }
  bool is_odd() const { return is_zero() || parity() == Parity::kOdd; }
  // No x- dependence and no theta- content.
  bool is_holomorphic() const;

  Superfield& operator+=(const Superfield& o);
  Superfield& operator-=(const Superfield& o);
  Superfield operator-() const;
  friend Superfield operator+(Superfield a, const Superfield& b) { return a += b; }
  friend Superfield operator-(Superfield a, const Superfield& b) { return a -= b; }
  friend Superfield operator*(const Superfield& a, const Superfield& b);
  friend Superfield operator*(const GaussianRational& c, const Superfield& f);
  friend Superfield operator*(const Superfield& f, const GaussianRational& c) { return c * f; }
  friend Superfield operator*(const GrassmannElement& c, const Superfield& f);
  friend Superfield operator*(const Superfield& f, const GrassmannElement& c);

  Superfield truncated(int order) const;
  Superfield x_derivative(Dir dir) const;
  Superfield berezin(int generator) const;
  Superfield super_derivative(Dir dir) const;
  Superfield dagger() const;
  Superfield twist() const;
  Superfield even_part() const;
  Superfield odd_part() const;
  // theta_dir * f.
  Superfield times_theta(Dir dir) const;

  Superfield invert_even() const;
  // f^{-1} * super_derivative(f, dir); the super-gradient of log f.
  Superfield log_derivative(Dir dir) const;

  // Coefficient of the left theta-monomial, theta's removed (no prefactors
  // stripped).
  Superfield extract_theta(ThetaPart part) const;
  // Algebra homomorphism theta+ -> e, theta- -> e^dagger.
  Superfield substitute_theta(const GrassmannElement& e) const;

  // Lexicographically first nonzero coefficient, e.g. "s^1 t^0 [theta+]: 3/4".
  std::string leading_term() const;

  friend bool operator==(const Superfield& a, const Superfield& b);

 private:
  void normalize();

  SpacePtr space_;
  int order_ = kUnboundedOrder;
  std::vector<Term> terms_;
};

// Checks operand compatibility; throws on base-point or table mismatch.
SpacePtr unify_spaces(const SpacePtr& a, const SpacePtr& b);

}  // namespace scpn
