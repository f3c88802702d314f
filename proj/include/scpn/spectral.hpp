#pragma once

#include <vector>

#include "scpn/model.hpp"

namespace scpn {

struct Betas {
  std::vector<GaussianRational> values;  // beta_0 .. beta_k
  bool matches_closed_form = false;      // beta_k = lambda - 1, others lambda^2 - 1
};
// Iterates the recurrence from beta_k down; kNonInvertibleAnsatz on beta = -1.
Betas solve_betas(const GaussianRational& lambda, int k);

struct SpectralFrame {
  SpacePtr space;
  int k = 0;
  GaussianRational lambda;
  SuperMatrix q;
  std::vector<GaussianRational> betas;
  // F = Q (c0 + lambda c1 + lambda^2 c2)
  SuperMatrix c0;
  SuperMatrix c1;
  SuperMatrix c2;
  SuperMatrix f;
  SuperMatrix f_inverse;  // (I - sum beta/(beta+1) P_j) Q^dagger
};

// F = Q (I + sum_{j<=k} beta_j P_j) for arbitrary betas; no circle check.
SpectralFrame frame_from_betas(const ModelData& model, int k, const GaussianRational& lambda,
                               const std::vector<GaussianRational>& betas, const SuperMatrix* q = nullptr);
// kOffCircle unless |lambda|^2 = 1.
SpectralFrame build_F(const ModelData& model, int k, const GaussianRational& lambda,
                      const SuperMatrix* q = nullptr);
// Same frame without the circle check, for off-circle controls.
SpectralFrame assemble_F(const ModelData& model, int k, const GaussianRational& lambda,
                         const SuperMatrix* q = nullptr);

SuperMatrix inverse_defect(const SpectralFrame& frame);    // F F^{-1} - I
SuperMatrix unitarity_defect(const SpectralFrame& frame);  // F^dagger F - I
// (|lambda|^4 - 1) sum_{j<k} P_j + (|lambda|^2 - 1) P_k
SuperMatrix predicted_unitarity_defect(const ModelData& model, int k, const GaussianRational& lambda);

// D+ F - F pi and D- F + F pi^dagger with pi = piP of the lambda-family at P_k.
std::array<SuperMatrix, 2> linear_problem_defects(const SpectralFrame& frame, const ModelData& model);

// P_k + 2 sum_{j<k} P_j.
SuperMatrix sym_tafel_Y(const ModelData& model, int k);
struct SymTafelDefects {
  SuperMatrix frame_identity;  // Y - lambda F^{-1} dF/dlambda
  Superfield trace;            // Tr Y - (1 + 2k)
};
SymTafelDefects sym_tafel_defects(const SpectralFrame& frame, const ModelData& model);

struct SurfaceDefects {
  SuperMatrix x;
  SuperMatrix plus_equation;   // D+ X + i[D+ P, P]
  SuperMatrix minus_equation;  // D- X - i[D- P, P]
  SuperMatrix antihermitian;   // X^dagger + X
  Superfield trace;            // Tr X
  SuperMatrix compatibility;   // {D+, D-} X
  SuperMatrix pi_relation;     // pi^{-1,k} + 2 D+ Y
};
// X_k = i((1 + 2k)/N I - Y_k).
SuperMatrix surface_X(const ModelData& model, int k);
SurfaceDefects surface_defects(const ModelData& model, int k);

// diag(lambda^{-(2k+1)}, 1, ..., 1), so det F = 1.
SuperMatrix special_unitary_gauge(const ModelData& model, int k, const GaussianRational& lambda);

}  // namespace scpn
