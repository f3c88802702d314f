#pragma once

#include <vector>

#include "scpn/linalg.hpp"

namespace scpn {

// Polynomial description of a holomorphic chain: psi[j][component] and
// epsilon[j-1] as lists of terms.
struct ChainPolynomials {
  int n = 0;
  std::vector<std::vector<std::vector<PolyTerm>>> psi;
  std::vector<std::vector<PolyTerm>> epsilon;
};

// psi_j = d+^j (1, x+, ..., x+^n), epsilon_j = theta+; N = n + 1.
ChainPolynomials veronese_polynomials(const TablePtr& table, int n);
// N = 2 chain dressed by the first eta pair:
// psi_0 = (1, x+) + theta+ eta+ (0, 1), epsilon_1 = -i eta+ + theta+, psi_1 = (0, 1).
ChainPolynomials eta_cp1_polynomials(const TablePtr& table);
// V = (1, x+, ..., x+^n), zeta = c1 eta+ + c2 eta-:
// psi_0 = V + theta+ zeta V', epsilon_1 = -i zeta + theta+,
// psi_j = V^(j), epsilon_j = theta+ for j >= 2.
ChainPolynomials eta_dressed_polynomials(const TablePtr& table, int n, const GaussianRational& c1,
                                         const GaussianRational& c2);

struct Chain {
  std::vector<SuperVector> psis;
  std::vector<Superfield> epsilons;  // epsilon_1 .. epsilon_{N-1}
};

Chain realize(const SpacePtr& space, int order, const ChainPolynomials& poly);

// epsilon_j psi_j - d+ psi_{j-1} for j = 1..N-1. Throws kNonHolomorphic on
// t- or theta- dependence and kParity on a non-odd epsilon.
std::vector<SuperVector> verify_chain(const std::vector<SuperVector>& psis,
                                      const std::vector<Superfield>& epsilons);

// z_0 = psi_0, z_j = (I - sum_{k<j} P_k) psi_j. kDegenerateSeed on a
// singular norm.
std::vector<SuperVector> gram_schmidt(const std::vector<SuperVector>& psis);

class ModelData {
 public:
  explicit ModelData(Chain chain);

  int n() const { return static_cast<int>(psis_.size()); }
  const SpacePtr& space() const { return psis_.front()[0].space(); }
  int order() const;
  const std::vector<SuperVector>& psis() const { return psis_; }
  const std::vector<SuperVector>& zs() const { return zs_; }
  const std::vector<SuperMatrix>& projectors() const { return projectors_; }
  const SuperMatrix& projector(int k) const { return projectors_.at(k); }
  const SuperVector& z(int k) const { return zs_.at(k); }
  // |z_k|^2, with |z_{-1}|^2 = 1.
  Superfield norm(int k) const;
  Superfield inverse_norm(int k) const;
  // epsilon_j with epsilon_0 = epsilon_N = 0.
  Superfield epsilon(int j) const;
  const std::vector<Superfield>& epsilons() const { return epsilons_; }

 private:
  std::vector<SuperVector> psis_;
  std::vector<Superfield> epsilons_;
  std::vector<SuperVector> zs_;
  std::vector<SuperMatrix> projectors_;
  std::vector<Superfield> norms_;
  std::vector<Superfield> inverse_norms_;
};

// [d+ d- P, P].
SuperMatrix el_defect(const SuperMatrix& p);
// d- phi - d+ phi^dagger with phi = i[P, d+ P].
SuperMatrix conservation_defect(const SuperMatrix& p);
// phi+ = i[P, d+ P].
SuperMatrix current(const SuperMatrix& p);

struct PropzDefects {
  SuperVector raising;
  SuperVector lowering;
};
std::vector<PropzDefects> propz_defects(const ModelData& model);

struct Densities {
  Superfield lagrangian;
  Superfield topological;
};
Densities densities(const ModelData& model, int k);

// d- d+ log|z_k|^2 - Q_k / 2 and the product-form counterpart for L_k.
struct DensityLogDefects {
  Superfield topological;
  Superfield lagrangian;
};
DensityLogDefects density_log_identities(const ModelData& model, int k);

struct SumRuleDefects {
  Superfield topological_sum;
  Superfield log_gradient_plus;
  Superfield log_gradient_minus;
  std::vector<Superfield> xi_defects;
};
SumRuleDefects sum_rules(const ModelData& model);

}  // namespace scpn
