#pragma once

#include <array>
#include <string>

#include "scpn/linalg.hpp"

namespace scpn {

// alpha = A+ aP + A- aM + Pi+ piP + Pi- piM, coefficients on the right.
struct OneSuperform {
  SuperMatrix aP;
  SuperMatrix aM;
  SuperMatrix piP;
  SuperMatrix piM;

  static OneSuperform zero(int n);
  bool is_zero() const;
};

// Coefficients on the reduced basis, in this order.
enum class Basis2 { kApAm, kApPp, kApPm, kAmPp, kAmPm, kPpPp, kPmPm, kPpPm };
inline constexpr int kBasis2Size = 8;
std::string_view to_string(Basis2 b);

struct TwoSuperform {
  std::array<SuperMatrix, kBasis2Size> c;

  static TwoSuperform zero(int n);
  SuperMatrix& operator[](Basis2 b) { return c[static_cast<int>(b)]; }
  const SuperMatrix& operator[](Basis2 b) const { return c[static_cast<int>(b)]; }
  bool is_zero() const;
  // First nonzero coefficient with its basis label, or "0".
  std::string leading_term() const;
  friend TwoSuperform operator+(const TwoSuperform& a, const TwoSuperform& b);
  friend TwoSuperform operator-(const TwoSuperform& a, const TwoSuperform& b);
};

// Term-by-term expansion of d alpha; a's even, pi's odd.
TwoSuperform exterior_d(const OneSuperform& alpha);
// Term-by-term expansion of alpha ^ alpha.
TwoSuperform wedge_square(const OneSuperform& alpha);

// d alpha from first principles: rewrite alpha over dx, dtheta, apply d
// generator by generator, and rewrite the result over A, Pi.
TwoSuperform d_oracle(const OneSuperform& alpha);
// alpha ^ beta with generic reordering signs.
TwoSuperform wedge(const OneSuperform& alpha, const OneSuperform& beta);

// df = A+ d+f + A- d-f + Pi+ D+f + Pi- D-f.
OneSuperform exact_form(const SuperMatrix& f);

// aM = -aP^dagger, piM = -piP^dagger, all traces zero.
bool is_suN(const OneSuperform& alpha);
// d alpha = 0.
bool is_closed(const OneSuperform& alpha);
// aP - i D+ piP and D- piP - D+ piP^dagger.
std::array<SuperMatrix, 2> closed_conditions(const OneSuperform& alpha);

// f with df = alpha and zero constant term; kNotClosed otherwise.
SuperMatrix integrate_closed(const OneSuperform& alpha);

TwoSuperform mc_defect(const OneSuperform& alpha);
// Residuals of the five first-order equations in aP, piP.
std::array<SuperMatrix, 5> mc_system_defects(const SuperMatrix& aP, const SuperMatrix& piP);

// su(N) form from aP, piP.
OneSuperform su_form(const SuperMatrix& aP, const SuperMatrix& piP);

struct AlphaLambda {
  OneSuperform alpha;
  // aP - i(D+ piP + piP^2)
  SuperMatrix consistency;
};
// |lambda|^2 = 1 required (kOffCircle).
AlphaLambda build_alpha_lambda(const SuperMatrix& p, const GaussianRational& lambda);

struct AlphaMinusOne {
  OneSuperform alpha;
  SuperMatrix frame;                   // Q (2P - I)
  SuperMatrix unitarity;               // F^dagger F - I
  std::array<SuperMatrix, 4> pullback; // F^{-1} dF - alpha, per component
  Superfield determinant;              // det(2P - I) - (-1)^{N-1}
};
// kNonProjector unless P^2 = P = P^dagger; Q must be constant unitary.
AlphaMinusOne alpha_minus_one(const SuperMatrix& p, const SuperMatrix* q = nullptr);

}  // namespace scpn
