#include "doctest.h"
#include "support.hpp"

#include "scpn/error.hpp"
#include "scpn/forms.hpp"
#include "scpn/model.hpp"

using namespace scpn;
using namespace scpn::testing;

namespace {

constexpr int kOrder = 4;

SpacePtr space() { return Space::create(GeneratorTable::standard(1), cq(1, 2, 1, 3)); }

OneSuperform random_form(Rng& rng, const SpacePtr& sp, int n) {
  return {rng.matrix(sp, kOrder, n, 0), rng.matrix(sp, kOrder, n, 0), rng.matrix(sp, kOrder, n, 1),
          rng.matrix(sp, kOrder, n, 1)};
}

bool all_zero(const auto& ms) {
  for (const auto& m : ms) {
    if (!m.is_zero()) return false;
  }
  return true;
}

std::vector<ModelData> models() {
  auto sp0 = Space::create(GeneratorTable::standard(0), cq(1, 2, 1, 3));
  auto sp1 = space();
  std::vector<ModelData> out;
  out.emplace_back(realize(sp0, 8, veronese_polynomials(sp0->table, 2)));
  out.emplace_back(realize(sp1, 8, eta_cp1_polynomials(sp1->table)));
  return out;
}

}  // namespace

TEST_CASE("zero form") {
  auto z = OneSuperform::zero(2);
  CHECK(exterior_d(z).is_zero());
  CHECK(wedge_square(z).is_zero());
  CHECK(d_oracle(z).is_zero());
}

TEST_CASE("constant coefficients keep only algebraic terms") {
  auto sp = space();
  auto c = SuperMatrix::constant(sp, kOrder, {{1, 2}, {0, -1}});
  OneSuperform alpha = OneSuperform::zero(2);
  alpha.aP = GaussianRational::i() * c;
  TwoSuperform d = exterior_d(alpha);
  CHECK(d[Basis2::kPpPp] == -(GaussianRational::i() * alpha.aP));
  for (auto b : {Basis2::kApAm, Basis2::kApPp, Basis2::kApPm, Basis2::kAmPp, Basis2::kAmPm, Basis2::kPmPm,
                 Basis2::kPpPm}) {
    CHECK(d[b].is_zero());
  }
  CHECK((d_oracle(alpha) - d).is_zero());
}

TEST_CASE("scalar coefficients commute in the A+^A- term") {
  Rng rng(51);
  auto sp = space();
  OneSuperform alpha = random_form(rng, sp, 1);
  CHECK(wedge_square(alpha)[Basis2::kApAm].is_zero());
}

TEST_CASE("square-zero odd coefficient") {
  auto sp = space();
  auto eta = GrassmannElement::generator(sp->table, "eta+");
  OneSuperform alpha = OneSuperform::zero(2);
  alpha.piP = SuperMatrix(2, 2);
  alpha.piP(0, 1) = Superfield::constant(sp, kOrder, eta);
  alpha.piP(1, 1) = Superfield::polynomial(sp, kOrder, {{eta, 1, 0}});
  CHECK((alpha.piP * alpha.piP).is_zero());
  CHECK(wedge_square(alpha)[Basis2::kPpPp].is_zero());
}

TEST_CASE("property: closed-form d and wedge agree with first principles") {
  Rng rng(52);
  auto sp = space();
  for (int trial = 0; trial < 10; ++trial) {
    OneSuperform alpha = random_form(rng, sp, 2);
    REQUIRE((exterior_d(alpha) - d_oracle(alpha)).is_zero());
    REQUIRE((wedge_square(alpha) - wedge(alpha, alpha)).is_zero());
  }
}

TEST_CASE("grading is enforced") {
  Rng rng(53);
  auto sp = space();
  OneSuperform alpha = random_form(rng, sp, 2);
  std::swap(alpha.aP, alpha.piP);
  CHECK_THROWS_AS(exterior_d(alpha), Error);
  OneSuperform bad = OneSuperform::zero(2);
  bad.aM = SuperMatrix(3, 3);
  CHECK_THROWS_AS(wedge_square(bad), Error);
}

TEST_CASE("property: exact forms are closed and integrate back") {
  Rng rng(54);
  auto sp = space();
  for (int trial = 0; trial < 10; ++trial) {
    SuperMatrix f = rng.matrix(sp, kOrder, 2, 0);
    OneSuperform alpha = exact_form(f);
    REQUIRE(is_closed(alpha));
    REQUIRE((d_oracle(alpha)).is_zero());
    SuperMatrix g = integrate_closed(alpha);
    SuperMatrix diff = f.truncated(g.order()) - g;
    // the difference is a constant matrix
    REQUIRE(exact_form(diff).is_zero());
    REQUIRE(exterior_d(exact_form(g)).is_zero());
  }
  CHECK(integrate_closed(OneSuperform::zero(2)).is_zero());
}

TEST_CASE("closed su(N) forms satisfy the two closedness conditions") {
  Rng rng(55);
  auto sp = space();
  for (int trial = 0; trial < 5; ++trial) {
    SuperMatrix h = rng.matrix(sp, kOrder, 2, 0);
    SuperMatrix f = h - h.dagger();  // anti-hermitian potential
    OneSuperform alpha = exact_form(f);
    CHECK((alpha.aM + alpha.aP.dagger()).is_zero());
    CHECK(all_zero(closed_conditions(alpha)));
  }
}

TEST_CASE("non-closed forms") {
  Rng rng(56);
  auto sp = space();
  OneSuperform alpha = random_form(rng, sp, 2);
  CHECK_FALSE(is_closed(alpha));
  CHECK_FALSE(is_suN(alpha));
  CHECK_THROWS_AS(integrate_closed(alpha), Error);
  OneSuperform flat = OneSuperform::zero(1);
  flat.aP = SuperMatrix::constant(sp, 0, {{1}});
  flat.aM = SuperMatrix::constant(sp, 0, {{1}});
  CHECK_THROWS_AS(integrate_closed(flat), Error);
}

TEST_CASE("lambda family") {
  auto ms = models();
  std::vector<GaussianRational> lambdas{cq(3, 5, 4, 5), cq(5, 13, 12, 13), -1};
  for (const auto& m : ms) {
    for (int k = 0; k < m.n(); ++k) {
      for (const auto& lambda : lambdas) {
        AlphaLambda a = build_alpha_lambda(m.projector(k), lambda);
        CHECK(is_suN(a.alpha));
        CHECK(a.consistency.is_zero());
        CHECK(mc_defect(a.alpha).is_zero());
        CHECK(all_zero(mc_system_defects(a.alpha.aP, a.alpha.piP)));
      }
    }
  }
  const auto& p = ms[0].projector(1);
  CHECK(build_alpha_lambda(p, 1).alpha.is_zero());
  CHECK_THROWS_AS(build_alpha_lambda(p, 2), Error);
  AlphaLambda minus = build_alpha_lambda(p, -1);
  CHECK(minus.alpha.aP == GaussianRational(-2) * commutator(p.x_derivative(Dir::kPlus), p));
  CHECK(minus.alpha.piP == GaussianRational(-2) * commutator(p.super_derivative(Dir::kPlus), p));
  GaussianRational gamma = cq(3, 5, 4, 5) - 1;
  CHECK((gamma + gamma.conj() + gamma * gamma.conj()).is_zero());
}

TEST_CASE("generic forms fail Maurer-Cartan") {
  Rng rng(57);
  auto sp = space();
  SuperMatrix ap = rng.matrix(sp, kOrder, 2, 0);
  SuperMatrix pp = rng.matrix(sp, kOrder, 2, 1);
  CHECK_FALSE(mc_defect(su_form(ap, pp)).is_zero());
  CHECK_FALSE(all_zero(mc_system_defects(ap, pp)));
}

TEST_CASE("lambda = -1 frame") {
  for (const auto& m : models()) {
    auto sp = m.space();
    for (int k = 0; k < m.n(); ++k) {
      AlphaMinusOne r = alpha_minus_one(m.projector(k));
      CHECK(r.unitarity.is_zero());
      CHECK(all_zero(r.pullback));
      CHECK(r.determinant.is_zero());
      OneSuperform ref = build_alpha_lambda(m.projector(k), -1).alpha;
      CHECK((r.alpha.aP - ref.aP).is_zero());
      CHECK((r.alpha.piM - ref.piM).is_zero());
    }
  }
  auto sp = Space::create(GeneratorTable::standard(0), cq(1, 2, 1, 3));
  ModelData m(realize(sp, 7, veronese_polynomials(sp->table, 1)));
  SuperMatrix q = SuperMatrix::constant(sp, 7, {{cq(3, 5, 0, 1), cq(0, 1, 4, 5)}, {cq(0, 1, 4, 5), cq(3, 5, 0, 1)}});
  AlphaMinusOne r = alpha_minus_one(m.projector(0), &q);
  CHECK(r.unitarity.is_zero());
  CHECK(all_zero(r.pullback));
  CHECK_THROWS_AS(alpha_minus_one(SuperMatrix::identity(sp, 4, 2) + SuperMatrix::identity(sp, 4, 2)), Error);
}
