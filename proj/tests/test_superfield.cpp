#include "doctest.h"
#include "support.hpp"

#include "scpn/error.hpp"

using namespace scpn;
using namespace scpn::testing;

namespace {

constexpr int kOrder = 5;

SpacePtr space(int eta_pairs = 1) {
  return Space::create(GeneratorTable::standard(eta_pairs), cq(1, 2, 1, 3));
}

Superfield power(const Superfield& f, int n, int order) {
  Superfield out = Superfield::constant(f.space(), order, 1);
  for (int k = 0; k < n; ++k) out = out * f;
  return out;
}

int sign_of(const Superfield& f) { return f.is_even() ? 1 : -1; }

}  // namespace

TEST_CASE("polynomial construction matches repeated products") {
  auto sp = space();
  GaussianRational p = sp->base_point;
  Superfield xp = Superfield::s(sp, kOrder) + Superfield::constant(sp, kOrder, p);
  Superfield xm = Superfield::t(sp, kOrder) + Superfield::constant(sp, kOrder, p.conj());
  auto eta = GrassmannElement::generator(sp->table, "eta+");
  for (int n = 0; n <= 3; ++n) {
    for (int m = 0; m <= 2; ++m) {
      Superfield poly = Superfield::polynomial(sp, kOrder, {{eta, n, m}});
      Superfield direct = eta * (power(xp, n, kOrder) * power(xm, m, kOrder));
      CHECK(poly == direct);
    }
  }
}

TEST_CASE("superfield coefficient access and holomorphy") {
  auto sp = space();
  auto tp = GrassmannElement::generator(sp->table, "theta+");
  auto tm = GrassmannElement::generator(sp->table, "theta-");
  Superfield f = Superfield::polynomial(sp, kOrder, {{tp, 2, 0}});
  CHECK(f.is_holomorphic());
  CHECK(f.is_odd());
  CHECK(f.coefficient(1, 0) == 2 * sp->base_point * tp);
  CHECK_FALSE(Superfield::polynomial(sp, kOrder, {{tp, 0, 1}}).is_holomorphic());
  CHECK_FALSE(Superfield::constant(sp, kOrder, tm).is_holomorphic());
  CHECK(Superfield().is_zero());
  CHECK((Superfield() + f) == f);
}

TEST_CASE("superderivative squares to minus i times the derivative") {
  auto sp = space();
  Rng rng(31);
  for (int trial = 0; trial < 30; ++trial) {
    Superfield f = rng.superfield(sp, kOrder);
    for (Dir d : {Dir::kPlus, Dir::kMinus}) {
      Superfield lhs = f.super_derivative(d).super_derivative(d);
      Superfield rhs = -I() * f.x_derivative(d);
      REQUIRE((lhs - rhs).is_zero());
    }
    Superfield anti = f.super_derivative(Dir::kPlus).super_derivative(Dir::kMinus) +
                      f.super_derivative(Dir::kMinus).super_derivative(Dir::kPlus);
    REQUIRE(anti.is_zero());
  }
}

TEST_CASE("superderivative of the coordinates") {
  auto sp = space();
  auto tp = GrassmannElement::generator(sp->table, "theta+");
  Superfield theta = Superfield::constant(sp, kOrder, tp);
  CHECK(theta.super_derivative(Dir::kPlus) == Superfield::constant(sp, kOrder - 1, -I()));
  CHECK(theta.super_derivative(Dir::kMinus).is_zero());
  Superfield s = Superfield::s(sp, kOrder);
  CHECK(s.super_derivative(Dir::kPlus) == Superfield::constant(sp, kOrder - 1, tp));
}

TEST_CASE("property: graded Leibniz rule") {
  auto sp = space();
  Rng rng(32);
  for (int trial = 0; trial < 30; ++trial) {
    Superfield f = rng.superfield(sp, kOrder, rng.uniform(0, 1));
    Superfield g = rng.superfield(sp, kOrder);
    for (Dir d : {Dir::kPlus, Dir::kMinus}) {
      Superfield lhs = (f * g).super_derivative(d);
      Superfield rhs = f.super_derivative(d) * g + sign_of(f) * (f * g.super_derivative(d));
      REQUIRE((lhs - rhs).is_zero());
    }
  }
}

TEST_CASE("property: conjugation exchanges superderivatives with grading sign") {
  auto sp = space();
  Rng rng(33);
  for (int trial = 0; trial < 30; ++trial) {
    Superfield f = rng.superfield(sp, kOrder, rng.uniform(0, 1));
    Superfield lhs = f.super_derivative(Dir::kPlus).dagger();
    Superfield rhs = sign_of(f) * f.dagger().super_derivative(Dir::kMinus);
    REQUIRE((lhs - rhs).is_zero());
  }
}

TEST_CASE("property: dagger is an involutive anti-homomorphism") {
  auto sp = space();
  Rng rng(34);
  for (int trial = 0; trial < 30; ++trial) {
    Superfield f = rng.superfield(sp, kOrder);
    Superfield g = rng.superfield(sp, kOrder);
    REQUIRE(f.dagger().dagger() == f);
    REQUIRE(((f * g).dagger() - g.dagger() * f.dagger()).is_zero());
    REQUIRE(((f * g) * f - f * (g * f)).is_zero());
  }
}

TEST_CASE("property: even inverse and log-derivative") {
  auto sp = space();
  Rng rng(35);
  for (int trial = 0; trial < 20; ++trial) {
    Superfield f = rng.invertible_even(sp, kOrder);
    Superfield g = rng.invertible_even(sp, kOrder);
    Superfield one = Superfield::constant(sp, kOrder, 1);
    REQUIRE(f * f.invert_even() == one);
    REQUIRE(f.invert_even() * f == one);
    for (Dir d : {Dir::kPlus, Dir::kMinus}) {
      Superfield sum = f.log_derivative(d) + g.log_derivative(d);
      REQUIRE(((f * g).log_derivative(d) - sum).is_zero());
    }
  }
}

TEST_CASE("log-derivative of a bosonic function against scalar division") {
  auto sp = space();
  Rng rng(36);
  auto tp = GrassmannElement::generator(sp->table, "theta+");
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<PolyTerm> terms;
    for (int k = 0; k < 3; ++k) {
      terms.push_back({GrassmannElement(rng.scalar(), sp->table), rng.uniform(0, 3), rng.uniform(0, 2)});
    }
    terms.push_back({GrassmannElement(q(4), sp->table), 0, 0});
    Superfield f = Superfield::polynomial(sp, kOrder, terms);
    if (f.component(0).constant_term().is_zero()) continue;
    Jet body = f.component(0);
    Jet ratio = oracle_divide(body.derivative_s(), body.truncated(kOrder - 1));
    Superfield expected = tp * Superfield::from_jet(sp, 0, ratio);
    REQUIRE(f.log_derivative(Dir::kPlus) == expected);
  }
}

TEST_CASE("invert_even rejects odd or singular input") {
  auto sp = space();
  auto tp = GrassmannElement::generator(sp->table, "theta+");
  CHECK_THROWS_AS(Superfield::constant(sp, kOrder, tp).invert_even(), Error);
  try {
    Superfield::s(sp, kOrder).invert_even();
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kSingularBody);
  }
}

TEST_CASE("derivative order underflow and base point mismatch") {
  auto sp = space();
  Superfield c = Superfield::constant(sp, 0, q(2));
  CHECK_THROWS_AS(c.x_derivative(Dir::kPlus), Error);
  auto other = Space::create(sp->table, q(1));
  CHECK_THROWS_AS(Superfield::s(sp, 2) + Superfield::s(other, 2), Error);
}

TEST_CASE("property: theta decomposition recomposes") {
  auto sp = space();
  Rng rng(37);
  auto tp = GrassmannElement::generator(sp->table, "theta+");
  auto tm = GrassmannElement::generator(sp->table, "theta-");
  for (int trial = 0; trial < 20; ++trial) {
    Superfield f = rng.superfield(sp, kOrder);
    Superfield back = f.extract_theta(ThetaPart::kOne) + tp * f.extract_theta(ThetaPart::kPlus) +
                      tm * f.extract_theta(ThetaPart::kMinus) +
                      (tp * tm) * f.extract_theta(ThetaPart::kPlusMinus);
    REQUIRE(back == f);
    REQUIRE(f.times_theta(Dir::kPlus) == tp * f);
  }
}

TEST_CASE("property: theta substitution is a homomorphism") {
  auto sp = space(2);
  Rng rng(38);
  auto ep = GrassmannElement::generator(sp->table, "eta+");
  auto e2m = GrassmannElement::generator(sp->table, "eta2-");
  GrassmannElement e = ep + cq(1, 2, 1, 1) * e2m;
  for (int trial = 0; trial < 20; ++trial) {
    Superfield f = rng.superfield(sp, kOrder);
    Superfield g = rng.superfield(sp, kOrder);
    REQUIRE(((f * g).substitute_theta(e) - f.substitute_theta(e) * g.substitute_theta(e)).is_zero());
  }
  auto tp = GrassmannElement::generator(sp->table, "theta+");
  Superfield f = Superfield::constant(sp, kOrder, tp);
  CHECK_THROWS_AS(f.substitute_theta(tp), Error);
  CHECK_THROWS_AS(f.substitute_theta(ep * e2m), Error);
  CHECK(f.substitute_theta(ep) == Superfield::constant(sp, kOrder, ep));
  GaussianRational c = cq(2, 3, -1, 2);
  auto tm = GrassmannElement::generator(sp->table, "theta-");
  auto em = GrassmannElement::generator(sp->table, "eta-");
  Superfield pair = Superfield::constant(sp, kOrder, tp * tm);
  CHECK(pair.substitute_theta(c * ep) == Superfield::constant(sp, kOrder, c * c.conj() * (ep * em)));
  Superfield free = Superfield::polynomial(sp, kOrder, {{ep * em, 2, 1}});
  CHECK(free.substitute_theta(c * ep) == free);
}
