#include "scpn/forms.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "scpn/error.hpp"

namespace scpn {

namespace {

const GaussianRational kI = GaussianRational::i();

int dim(const OneSuperform& a) { return a.aP.rows(); }

void require_shape(const OneSuperform& a) {
  int n = a.aP.rows();
  for (const auto* m : {&a.aP, &a.aM, &a.piP, &a.piM}) {
    if (m->rows() != n || m->cols() != n) {
      throw Error(ErrorCode::kShapeMismatch, "1-superform coefficients must be square and equal-sized");
    }
  }
}

void require_grading(const OneSuperform& a) {
  if (!a.aP.is_even() || !a.aM.is_even() || !a.piP.is_odd() || !a.piM.is_odd()) {
    throw Error(ErrorCode::kParity, "1-superform needs even a-coefficients and odd pi-coefficients");
  }
}

// ---- generic graded exterior algebra on four 1-form generators ----
// Raw: 0 = dx+, 1 = dx-, 2 = dtheta+, 3 = dtheta-.
// Reduced: 0 = A+, 1 = A-, 2 = Pi+, 3 = Pi-. Generators 2, 3 are odd.

bool odd_generator(int g) { return g >= 2; }

using OneWords = std::array<SuperMatrix, 4>;
using TwoWords = std::map<std::pair<int, int>, SuperMatrix>;

void add(TwoWords& out, int i, int j, const SuperMatrix& c) {
  if (c.is_zero()) return;
  if (i == j && !odd_generator(i)) return;
  if (i > j) {
    std::swap(i, j);
    if (!(odd_generator(i) && odd_generator(j))) {
      add(out, i, j, -c);
      return;
    }
  }
  auto it = out.find({i, j});
  if (it == out.end()) {
    out.emplace(std::make_pair(i, j), c);
  } else {
    it->second += c;
  }
}

// Expansion of a generator in the other basis: sum of (target, function on
// the right).
using Expansion = std::array<std::vector<std::pair<int, Superfield>>, 4>;

Expansion reduced_in_raw(const SpacePtr& space, int order) {
  Superfield one = Superfield::constant(space, order, 1);
  Superfield tp = Superfield::generator(space, order, space->table->name(0));
  Superfield tm = Superfield::generator(space, order, space->table->name(1));
  // A = dx - i dtheta theta, Pi = i dtheta
  return {{{{0, one}, {2, -kI * tp}},
           {{1, one}, {3, -kI * tm}},
           {{2, kI * one}},
           {{3, kI * one}}}};
}

Expansion raw_in_reduced(const SpacePtr& space, int order) {
  Superfield one = Superfield::constant(space, order, 1);
  Superfield tp = Superfield::generator(space, order, space->table->name(0));
  Superfield tm = Superfield::generator(space, order, space->table->name(1));
  // dx = A + Pi theta, dtheta = -i Pi
  return {{{{0, one}, {2, tp}},
           {{1, one}, {3, tm}},
           {{2, -kI * one}},
           {{3, -kI * one}}}};
}

// u h = h twist^{|h|}(u) for a function u and a generator h.
Superfield past(const Superfield& u, int h) { return odd_generator(h) ? u.twist() : u; }
SuperMatrix past(const SuperMatrix& u, int h) { return odd_generator(h) ? u.twist() : u; }

OneWords rewrite(const OneWords& in, const Expansion& e, int n) {
  OneWords out;
  for (auto& m : out) m = SuperMatrix(n, n);
  for (int g = 0; g < 4; ++g) {
    if (in[g].is_zero()) continue;
    for (const auto& [h, u] : e[g]) out[h] += u * in[g];
  }
  return out;
}

TwoWords rewrite(const TwoWords& in, const Expansion& e) {
  TwoWords out;
  for (const auto& [gen, c] : in) {
    auto [g1, g2] = gen;
    for (const auto& [h1, u1] : e[g1]) {
      for (const auto& [h2, u2] : e[g2]) add(out, h1, h2, (past(u1, h2) * u2) * c);
    }
  }
  return out;
}

TwoWords raw_d(const OneWords& in, int n) {
  // d(G c) = -G ^ dc, dc = sum_H H d_H c with the left theta-derivative.
  TwoWords out;
  for (int g = 0; g < 4; ++g) {
    if (in[g].is_zero()) continue;
    std::array<SuperMatrix, 4> partial{in[g].x_derivative(Dir::kPlus), in[g].x_derivative(Dir::kMinus),
                                       in[g].berezin(0), in[g].berezin(1)};
    for (int h = 0; h < 4; ++h) add(out, g, h, -partial[h]);
  }
  (void)n;
  return out;
}

TwoWords wedge_words(const OneWords& a, const OneWords& b) {
  TwoWords out;
  for (int g = 0; g < 4; ++g) {
    if (a[g].is_zero()) continue;
    for (int h = 0; h < 4; ++h) {
      if (b[h].is_zero()) continue;
      add(out, g, h, past(a[g], h) * b[h]);
    }
  }
  return out;
}

OneWords words(const OneSuperform& a) { return {a.aP, a.aM, a.piP, a.piM}; }

constexpr std::array<std::pair<int, int>, kBasis2Size> kPairs{
    {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 2}, {3, 3}, {2, 3}}};

TwoSuperform to_form(const TwoWords& w, int n) {
  TwoSuperform out = TwoSuperform::zero(n);
  for (int b = 0; b < kBasis2Size; ++b) {
    auto it = w.find(kPairs[b]);
    if (it != w.end()) out.c[b] = it->second;
  }
  return out;
}

// Space and order shared by the coefficients, or null when all vanish.
std::pair<SpacePtr, int> frame_of(const OneSuperform& a) {
  SpacePtr space;
  int order = Superfield::kUnboundedOrder;
  for (const auto* m : {&a.aP, &a.aM, &a.piP, &a.piM}) {
    for (int i = 0; i < m->rows(); ++i) {
      for (int j = 0; j < m->cols(); ++j) {
        const Superfield& f = (*m)(i, j);
        if (f.space()) {
          space = f.space();
          order = std::min(order, f.order());
        }
      }
    }
  }
  return {space, order};
}

SuperMatrix require_constant_unitary(const SuperMatrix& q, int n) {
  if (q.rows() != n || q.cols() != n) throw Error(ErrorCode::kShapeMismatch, "Q has the wrong size");
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const Superfield& e = q(i, j);
      for (const auto& [m, jet] : e.terms()) {
        if (m != 0 || !(jet == Jet::constant(jet.order(), jet.constant_term()))) {
          throw Error(ErrorCode::kInvalidArgument, "Q must be a constant numeric matrix");
        }
      }
    }
  }
  return q;
}

}  // namespace

std::string_view to_string(Basis2 b) {
  static constexpr std::array<std::string_view, kBasis2Size> kNames{
      "A+^A-", "A+^Pi+", "A+^Pi-", "A-^Pi+", "A-^Pi-", "Pi+^Pi+", "Pi-^Pi-", "Pi+^Pi-"};
  return kNames[static_cast<int>(b)];
}

OneSuperform OneSuperform::zero(int n) {
  return {SuperMatrix(n, n), SuperMatrix(n, n), SuperMatrix(n, n), SuperMatrix(n, n)};
}

bool OneSuperform::is_zero() const {
  return aP.is_zero() && aM.is_zero() && piP.is_zero() && piM.is_zero();
}

TwoSuperform TwoSuperform::zero(int n) {
  TwoSuperform out;
  for (auto& m : out.c) m = SuperMatrix(n, n);
  return out;
}

bool TwoSuperform::is_zero() const {
  for (const auto& m : c) {
    if (!m.is_zero()) return false;
  }
  return true;
}

std::string TwoSuperform::leading_term() const {
  for (int b = 0; b < kBasis2Size; ++b) {
    if (!c[b].is_zero()) return std::string(to_string(static_cast<Basis2>(b))) + " " + c[b].leading_term();
  }
  return "0";
}

TwoSuperform operator+(const TwoSuperform& a, const TwoSuperform& b) {
  TwoSuperform out = a;
  for (int k = 0; k < kBasis2Size; ++k) out.c[k] += b.c[k];
  return out;
}

TwoSuperform operator-(const TwoSuperform& a, const TwoSuperform& b) {
  TwoSuperform out = a;
  for (int k = 0; k < kBasis2Size; ++k) out.c[k] -= b.c[k];
  return out;
}

TwoSuperform exterior_d(const OneSuperform& alpha) {
  require_shape(alpha);
  require_grading(alpha);
  const auto& [ap, am, pp, pm] = alpha;
  TwoSuperform out = TwoSuperform::zero(dim(alpha));
  out[Basis2::kPpPp] = -(kI * ap + pp.super_derivative(Dir::kPlus));
  out[Basis2::kPmPm] = -(kI * am + pm.super_derivative(Dir::kMinus));
  out[Basis2::kPpPm] = -(pm.super_derivative(Dir::kPlus) + pp.super_derivative(Dir::kMinus));
  out[Basis2::kApAm] = am.x_derivative(Dir::kPlus) - ap.x_derivative(Dir::kMinus);
  out[Basis2::kApPp] = -(ap.super_derivative(Dir::kPlus) - pp.x_derivative(Dir::kPlus));
  out[Basis2::kApPm] = -(ap.super_derivative(Dir::kMinus) - pm.x_derivative(Dir::kPlus));
  out[Basis2::kAmPm] = -(am.super_derivative(Dir::kMinus) - pm.x_derivative(Dir::kMinus));
  out[Basis2::kAmPp] = -(am.super_derivative(Dir::kPlus) - pp.x_derivative(Dir::kMinus));
  return out;
}

TwoSuperform wedge_square(const OneSuperform& alpha) {
  require_shape(alpha);
  const auto& [ap, am, pp, pm] = alpha;
  TwoSuperform out = TwoSuperform::zero(dim(alpha));
  out[Basis2::kApPp] = -commutator(pp, ap);
  out[Basis2::kApPm] = -commutator(pm, ap);
  out[Basis2::kAmPm] = -commutator(pm, am);
  out[Basis2::kAmPp] = -commutator(pp, am);
  out[Basis2::kPpPp] = -(pp * pp);
  out[Basis2::kPmPm] = -(pm * pm);
  out[Basis2::kPpPm] = -anticommutator(pp, pm);
  out[Basis2::kApAm] = commutator(ap, am);
  return out;
}

TwoSuperform d_oracle(const OneSuperform& alpha) {
  require_shape(alpha);
  int n = dim(alpha);
  auto [space, order] = frame_of(alpha);
  if (!space) return TwoSuperform::zero(n);
  OneWords raw = rewrite(words(alpha), reduced_in_raw(space, order), n);
  return to_form(rewrite(raw_d(raw, n), raw_in_reduced(space, order)), n);
}

TwoSuperform wedge(const OneSuperform& alpha, const OneSuperform& beta) {
  require_shape(alpha);
  require_shape(beta);
  if (dim(alpha) != dim(beta)) throw Error(ErrorCode::kShapeMismatch, "wedge of different sizes");
  return to_form(wedge_words(words(alpha), words(beta)), dim(alpha));
}

OneSuperform exact_form(const SuperMatrix& f) {
  return {f.x_derivative(Dir::kPlus), f.x_derivative(Dir::kMinus), f.super_derivative(Dir::kPlus),
          f.super_derivative(Dir::kMinus)};
}

bool is_suN(const OneSuperform& alpha) {
  require_shape(alpha);
  if (!(alpha.aM + alpha.aP.dagger()).is_zero()) return false;
  if (!(alpha.piM + alpha.piP.dagger()).is_zero()) return false;
  for (const auto* m : {&alpha.aP, &alpha.aM, &alpha.piP, &alpha.piM}) {
    if (!m->trace().is_zero()) return false;
  }
  return true;
}

bool is_closed(const OneSuperform& alpha) { return exterior_d(alpha).is_zero(); }

std::array<SuperMatrix, 2> closed_conditions(const OneSuperform& alpha) {
  const SuperMatrix& pp = alpha.piP;
  return {alpha.aP - kI * pp.super_derivative(Dir::kPlus),
          pp.super_derivative(Dir::kMinus) - pp.dagger().super_derivative(Dir::kPlus)};
}

SuperMatrix integrate_closed(const OneSuperform& alpha) {
  require_shape(alpha);
  if (!is_closed(alpha)) throw Error(ErrorCode::kNotClosed, "1-superform is not closed");
  int n = dim(alpha);
  auto [space, order] = frame_of(alpha);
  SuperMatrix f(n, n);
  if (!space) return f;
  // d_theta f = i(D f - theta d f)
  SuperMatrix dtp = kI * (alpha.piP - alpha.aP.times_theta(Dir::kPlus));
  SuperMatrix dtm = kI * (alpha.piM - alpha.aM.times_theta(Dir::kMinus));
  SuperMatrix body_p = alpha.aP.extract_theta(ThetaPart::kOne);
  SuperMatrix body_m = alpha.aM.extract_theta(ThetaPart::kOne);
  auto tp = GrassmannElement::monomial(space->table, Mask{1});
  auto tm = GrassmannElement::monomial(space->table, Mask{2});
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      Superfield body;
      const Superfield& up = body_p(i, j);
      const Superfield& um = body_m(i, j);
      std::vector<Mask> masks;
      for (const auto& [m, jet] : up.terms()) masks.push_back(m);
      for (const auto& [m, jet] : um.terms()) masks.push_back(m);
      std::sort(masks.begin(), masks.end());
      masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
      int o = std::min(up.order(), um.order());
      if (o == Superfield::kUnboundedOrder) o = order;
      for (Mask m : masks) {
        body += Superfield::from_jet(space, m, Jet::integrate(up.component(m).truncated(o),
                                                             um.component(m).truncated(o)));
      }
      Superfield plus = dtp(i, j).extract_theta(ThetaPart::kOne);
      Superfield minus = dtm(i, j).extract_theta(ThetaPart::kOne);
      Superfield both = dtp(i, j).extract_theta(ThetaPart::kMinus);
      f(i, j) = body + tp * plus + tm * minus + (tp * tm) * both;
    }
  }
  OneSuperform check = exact_form(f);
  for (const auto& [got, want] : {std::pair{&check.aP, &alpha.aP}, {&check.aM, &alpha.aM},
                                  {&check.piP, &alpha.piP}, {&check.piM, &alpha.piM}}) {
    if (!(*got - *want).is_zero()) {
      throw Error(ErrorCode::kNotClosed, "no potential reproduces the 1-superform");
    }
  }
  return f;
}

TwoSuperform mc_defect(const OneSuperform& alpha) { return exterior_d(alpha) + wedge_square(alpha); }

std::array<SuperMatrix, 5> mc_system_defects(const SuperMatrix& ap, const SuperMatrix& pp) {
  SuperMatrix apd = ap.dagger();
  SuperMatrix ppd = pp.dagger();
  return {kI * ap + pp.super_derivative(Dir::kPlus) + pp * pp,
          pp.super_derivative(Dir::kMinus) - ppd.super_derivative(Dir::kPlus) - anticommutator(pp, ppd),
          apd.x_derivative(Dir::kPlus) + ap.x_derivative(Dir::kMinus) + commutator(ap, apd),
          pp.x_derivative(Dir::kPlus) - ap.super_derivative(Dir::kPlus) + commutator(ap, pp),
          ppd.x_derivative(Dir::kPlus) + ap.super_derivative(Dir::kMinus) + commutator(ap, ppd)};
}

OneSuperform su_form(const SuperMatrix& ap, const SuperMatrix& pp) {
  return {ap, -ap.dagger(), pp, -pp.dagger()};
}

AlphaLambda build_alpha_lambda(const SuperMatrix& p, const GaussianRational& lambda) {
  if (lambda.norm2() != 1) {
    throw Error(ErrorCode::kOffCircle, "lambda must lie on the unit circle: " + lambda.to_string());
  }
  SuperMatrix dp = p.super_derivative(Dir::kPlus);
  SuperMatrix ap = (lambda - 1) * commutator(p.x_derivative(Dir::kPlus), p) -
                   (kI * (lambda * lambda - 1)) * (dp * dp);
  SuperMatrix pp = (lambda - 1) * commutator(dp, p);
  SuperMatrix consistency = ap - kI * (pp.super_derivative(Dir::kPlus) + pp * pp);
  return {su_form(ap, pp), consistency};
}

AlphaMinusOne alpha_minus_one(const SuperMatrix& p, const SuperMatrix* q) {
  int n = p.rows();
  if (p.cols() != n) throw Error(ErrorCode::kShapeMismatch, "projector must be square");
  if (!(p * p - p).is_zero() || !(p.dagger() - p).is_zero()) {
    throw Error(ErrorCode::kNonProjector, "input is not a hermitian projector");
  }
  SpacePtr space;
  for (int i = 0; i < n && !space; ++i) {
    for (int j = 0; j < n && !space; ++j) space = p(i, j).space();
  }
  if (!space) throw Error(ErrorCode::kNonProjector, "zero matrix is not a rank-one projector");
  int order = p.order();
  SuperMatrix id = SuperMatrix::identity(space, order, n);
  SuperMatrix qm = q ? require_constant_unitary(*q, n) : id;
  if (!(qm.dagger() * qm - id).is_zero()) throw Error(ErrorCode::kInvalidArgument, "Q is not unitary");

  AlphaMinusOne out;
  // alpha = 2[P, dP], P moved past Pi with the grading twist
  std::array<SuperMatrix, 4> dp{p.x_derivative(Dir::kPlus), p.x_derivative(Dir::kMinus),
                                p.super_derivative(Dir::kPlus), p.super_derivative(Dir::kMinus)};
  std::array<SuperMatrix, 4> comp;
  for (int g = 0; g < 4; ++g) {
    const SuperMatrix& left = g >= 2 ? p.twist() : p;
    comp[g] = GaussianRational(2) * (left * dp[g] - dp[g] * p);
  }
  out.alpha = {comp[0], comp[1], comp[2], comp[3]};

  SuperMatrix reflect = GaussianRational(2) * p - id;
  out.frame = qm * reflect;
  out.unitarity = out.frame.dagger() * out.frame - id;
  SuperMatrix inverse = reflect * qm.dagger();
  std::array<SuperMatrix, 4> dframe{out.frame.x_derivative(Dir::kPlus), out.frame.x_derivative(Dir::kMinus),
                                    out.frame.super_derivative(Dir::kPlus),
                                    out.frame.super_derivative(Dir::kMinus)};
  for (int g = 0; g < 4; ++g) {
    const SuperMatrix& left = g >= 2 ? inverse.twist() : inverse;
    out.pullback[g] = left * dframe[g] - comp[g];
  }
  Superfield sign = Superfield::constant(space, order, n % 2 == 1 ? 1 : -1);
  out.determinant = determinant(reflect) - sign;
  return out;
}

}  // namespace scpn
