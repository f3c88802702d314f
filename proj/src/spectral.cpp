#include "scpn/spectral.hpp"

#include "scpn/error.hpp"
#include "scpn/forms.hpp"

namespace scpn {

namespace {

const GaussianRational kI = GaussianRational::i();

void require_sector(const ModelData& model, int k) {
  if (k < 0 || k >= model.n()) throw Error(ErrorCode::kInvalidArgument, "sector index out of range");
}

SuperMatrix sum_below(const ModelData& model, int k) {
  SuperMatrix s(model.n(), model.n());
  for (int j = 0; j < k; ++j) s += model.projector(j);
  return s;
}

GaussianRational power(const GaussianRational& z, int n) {
  GaussianRational out(1);
  for (int i = 0; i < n; ++i) out *= z;
  return out;
}

}  // namespace

Betas solve_betas(const GaussianRational& lambda, int k) {
  if (k < 0) throw Error(ErrorCode::kInvalidArgument, "sector index must be >= 0");
  Betas out;
  out.values.assign(k + 1, 0);
  out.values[k] = lambda - 1;
  if (k >= 1) out.values[k - 1] = (out.values[k] + 1) * (lambda - 1) + out.values[k];
  for (int m = k - 1; m >= 1; --m) out.values[m - 1] = out.values[m];
  for (int j = 0; j <= k; ++j) {
    if (out.values[j] == GaussianRational(-1)) {
      throw Error(ErrorCode::kNonInvertibleAnsatz, "beta_" + std::to_string(j) + " = -1");
    }
  }
  out.matches_closed_form = out.values[k] == lambda - 1;
  for (int m = 0; m < k; ++m) {
    out.matches_closed_form = out.matches_closed_form && out.values[m] == lambda * lambda - 1;
  }
  return out;
}

SpectralFrame frame_from_betas(const ModelData& model, int k, const GaussianRational& lambda,
                               const std::vector<GaussianRational>& betas, const SuperMatrix* q) {
  require_sector(model, k);
  if (static_cast<int>(betas.size()) != k + 1) {
    throw Error(ErrorCode::kShapeMismatch, "need k + 1 betas");
  }
  int n = model.n();
  SuperMatrix id = SuperMatrix::identity(model.space(), model.order(), n);
  SpectralFrame out;
  out.space = model.space();
  out.k = k;
  out.lambda = lambda;
  out.betas = betas;
  out.q = q ? *q : id;
  SuperMatrix below = sum_below(model, k);
  out.c0 = id - below - model.projector(k);
  out.c1 = model.projector(k);
  out.c2 = below;
  SuperMatrix ansatz = id;
  SuperMatrix inv = id;
  for (int j = 0; j <= k; ++j) {
    if (betas[j] == GaussianRational(-1)) {
      throw Error(ErrorCode::kNonInvertibleAnsatz, "beta_" + std::to_string(j) + " = -1");
    }
    ansatz += betas[j] * model.projector(j);
    inv -= (betas[j] / (betas[j] + 1)) * model.projector(j);
  }
  out.f = out.q * ansatz;
  out.f_inverse = inv * out.q.dagger();
  return out;
}

SpectralFrame assemble_F(const ModelData& model, int k, const GaussianRational& lambda, const SuperMatrix* q) {
  return frame_from_betas(model, k, lambda, solve_betas(lambda, k).values, q);
}

SpectralFrame build_F(const ModelData& model, int k, const GaussianRational& lambda, const SuperMatrix* q) {
  if (lambda.norm2() != 1) {
    throw Error(ErrorCode::kOffCircle, "lambda must lie on the unit circle: " + lambda.to_string());
  }
  return assemble_F(model, k, lambda, q);
}

SuperMatrix inverse_defect(const SpectralFrame& frame) {
  int n = frame.f.rows();
  return frame.f * frame.f_inverse - SuperMatrix::identity(frame.space, frame.f.order(), n);
}

SuperMatrix unitarity_defect(const SpectralFrame& frame) {
  int n = frame.f.rows();
  return frame.f.dagger() * frame.f - SuperMatrix::identity(frame.space, frame.f.order(), n);
}

SuperMatrix predicted_unitarity_defect(const ModelData& model, int k, const GaussianRational& lambda) {
  require_sector(model, k);
  GaussianRational mod2(lambda.norm2());
  return (mod2 * mod2 - 1) * sum_below(model, k) + (mod2 - 1) * model.projector(k);
}

std::array<SuperMatrix, 2> linear_problem_defects(const SpectralFrame& frame, const ModelData& model) {
  SuperMatrix pi = build_alpha_lambda(model.projector(frame.k), frame.lambda).alpha.piP;
  return {frame.f.super_derivative(Dir::kPlus) - frame.f * pi,
          frame.f.super_derivative(Dir::kMinus) + frame.f * pi.dagger()};
}

SuperMatrix sym_tafel_Y(const ModelData& model, int k) {
  require_sector(model, k);
  return model.projector(k) + GaussianRational(2) * sum_below(model, k);
}

SymTafelDefects sym_tafel_defects(const SpectralFrame& frame, const ModelData& model) {
  SuperMatrix y = sym_tafel_Y(model, frame.k);
  SuperMatrix dlambda = frame.q * (frame.c1 + (GaussianRational(2) * frame.lambda) * frame.c2);
  SymTafelDefects out;
  out.frame_identity = y - frame.lambda * (frame.f_inverse * dlambda);
  out.trace = y.trace() - Superfield::constant(model.space(), model.order(), 1 + 2 * frame.k);
  return out;
}

SuperMatrix surface_X(const ModelData& model, int k) {
  int n = model.n();
  GaussianRational ratio(mpq_class(1 + 2 * k, n));
  SuperMatrix id = SuperMatrix::identity(model.space(), model.order(), n);
  return kI * (ratio * id - sym_tafel_Y(model, k));
}

SurfaceDefects surface_defects(const ModelData& model, int k) {
  const SuperMatrix& p = model.projector(k);
  SurfaceDefects out;
  out.x = surface_X(model, k);
  SuperMatrix dpp = p.super_derivative(Dir::kPlus);
  SuperMatrix dpm = p.super_derivative(Dir::kMinus);
  out.plus_equation = out.x.super_derivative(Dir::kPlus) + kI * commutator(dpp, p);
  out.minus_equation = out.x.super_derivative(Dir::kMinus) - kI * commutator(dpm, p);
  out.antihermitian = out.x.dagger() + out.x;
  out.trace = out.x.trace();
  out.compatibility = out.x.super_derivative(Dir::kMinus).super_derivative(Dir::kPlus) +
                      out.x.super_derivative(Dir::kPlus).super_derivative(Dir::kMinus);
  SuperMatrix pi = build_alpha_lambda(p, -1).alpha.piP;
  out.pi_relation = pi + GaussianRational(2) * sym_tafel_Y(model, k).super_derivative(Dir::kPlus);
  return out;
}

SuperMatrix special_unitary_gauge(const ModelData& model, int k, const GaussianRational& lambda) {
  require_sector(model, k);
  if (lambda.norm2() != 1) {
    throw Error(ErrorCode::kOffCircle, "lambda must lie on the unit circle: " + lambda.to_string());
  }
  int n = model.n();
  std::vector<std::vector<GaussianRational>> rows(n, std::vector<GaussianRational>(n));
  for (int i = 0; i < n; ++i) rows[i][i] = 1;
  rows[0][0] = power(lambda.conj(), 2 * k + 1);
  return SuperMatrix::constant(model.space(), model.order(), rows);
}

}  // namespace scpn
