#pragma once

#include <array>
#include <string>
#include <vector>

#include "scpn/model.hpp"

namespace scpn {

// Coordinate labels for the supermetric.
enum class Coord { kPlus, kMinus, kThetaPlus, kThetaMinus };
std::string_view to_string(Coord c);

struct MetricTable {
  SuperMatrix phi;       // i[P, D+ P]
  SuperMatrix m_plus;    // i D+ phi
  SuperMatrix rho_plus;  // theta+ D+ phi + i phi
  std::array<std::array<Superfield, 4>, 4> g;
  // Closed-form dX coefficients on dx+, dx-, dtheta+, dtheta- minus the raw
  // derivatives of X.
  std::array<SuperMatrix, 4> dx_defects;
  // Each symmetry relation checked against an independently evaluated
  // swapped inner product.
  std::vector<std::pair<std::string, Superfield>> symmetry_defects;

  const Superfield& operator()(Coord a, Coord b) const {
    return g[static_cast<int>(a)][static_cast<int>(b)];
  }
};
MetricTable metric_components(const ModelData& model, int k);

// rho - D+(phi theta+) and rho - (i xi0 - theta- A-).
std::array<SuperMatrix, 2> rho_identity(const ModelData& model, int k);

struct XiADefects {
  SuperMatrix xi0;       // extracted minus closed form
  SuperMatrix a_minus;   // extracted minus closed form
  std::vector<Superfield> u_orthogonality;
  std::vector<SuperMatrix> reduced_projectors;  // Pc_i Pc_j - delta_ij Pc_i
};
XiADefects xi_A_formulas(const ModelData& model, int j);

// g_{theta+ theta-}^j minus its closed form in u's and fermionic epsilon parts.
Superfield g_theta_theta_formula(const ModelData& model, int j);

// theta+ -> c+ eta+ + c- eta- applied to g_{theta+ theta-}^j, minus the
// one-pair closed form. kUnsupportedReduction unless exactly one eta pair.
Superfield eta_reduction(const ModelData& model, int j, const GaussianRational& c_plus,
                         const GaussianRational& c_minus);

}  // namespace scpn
