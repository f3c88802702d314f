#include "scpn/model.hpp"

#include "scpn/error.hpp"

namespace scpn {

namespace {

long falling_factorial(int m, int j) {
  long out = 1;
  for (int k = 0; k < j; ++k) out *= m - k;
  return out;
}

GrassmannElement one(const TablePtr& table) { return GrassmannElement(1, table); }

Superfield inverse_or_degenerate(const Superfield& norm, int k) {
  try {
    return norm.invert_even();
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kSingularBody) throw;
    throw Error(ErrorCode::kDegenerateSeed,
                "|z_" + std::to_string(k) + "|^2 has a vanishing body");
  }
}

void require_holomorphic(const Superfield& f, const char* what) {
  if (!f.is_holomorphic()) {
    throw Error(ErrorCode::kNonHolomorphic, std::string(what) + " depends on x- or theta-");
  }
}

}  // namespace

ChainPolynomials veronese_polynomials(const TablePtr& table, int n) {
  if (n < 1) throw Error(ErrorCode::kInvalidArgument, "veronese degree must be >= 1");
  ChainPolynomials out;
  out.n = n + 1;
  for (int j = 0; j <= n; ++j) {
    std::vector<std::vector<PolyTerm>> psi(n + 1);
    for (int m = j; m <= n; ++m) {
      psi[m].push_back({one(table) * GaussianRational(falling_factorial(m, j)), m - j, 0});
    }
    out.psi.push_back(std::move(psi));
  }
  auto theta = GrassmannElement::monomial(table, Mask{1} << table->theta_plus());
  for (int j = 1; j <= n; ++j) out.epsilon.push_back({{theta, 0, 0}});
  return out;
}

ChainPolynomials eta_cp1_polynomials(const TablePtr& table) {
  return eta_dressed_polynomials(table, 1, 1, 0);
}

ChainPolynomials eta_dressed_polynomials(const TablePtr& table, int n, const GaussianRational& c1,
                                         const GaussianRational& c2) {
  if (table->pairs().size() < 2) {
    throw Error(ErrorCode::kInvalidArgument, "eta-dressed chain needs one eta pair");
  }
  ChainPolynomials out = veronese_polynomials(table, n);
  auto theta = GrassmannElement::monomial(table, Mask{1} << table->theta_plus());
  GrassmannElement zeta = c1 * GrassmannElement::monomial(table, Mask{1} << 2) +
                          c2 * GrassmannElement::monomial(table, Mask{1} << 3);
  // psi_1 = V' supplies the dressing term of psi_0
  for (int m = 0; m <= n; ++m) {
    for (const auto& term : out.psi[1][m]) {
      out.psi[0][m].push_back({theta * zeta * term.coeff, term.plus_power, term.minus_power});
    }
  }
  out.epsilon[0] = {{-GaussianRational::i() * zeta, 0, 0}, {theta, 0, 0}};
  return out;
}

Chain realize(const SpacePtr& space, int order, const ChainPolynomials& poly) {
  Chain chain;
  for (const auto& psi : poly.psi) {
    std::vector<Superfield> entries;
    for (const auto& comp : psi) entries.push_back(Superfield::polynomial(space, order, comp));
    chain.psis.emplace_back(std::move(entries));
  }
  for (const auto& eps : poly.epsilon) {
    chain.epsilons.push_back(Superfield::polynomial(space, order, eps));
  }
  return chain;
}

std::vector<SuperVector> verify_chain(const std::vector<SuperVector>& psis,
                                      const std::vector<Superfield>& epsilons) {
  if (psis.empty() || epsilons.size() + 1 != psis.size()) {
    throw Error(ErrorCode::kShapeMismatch, "chain needs N psi vectors and N-1 epsilons");
  }
  for (const auto& psi : psis) {
    if (psi.size() != psis.front().size()) {
      throw Error(ErrorCode::kShapeMismatch, "psi vectors differ in length");
    }
    for (const auto& f : psi.entries()) require_holomorphic(f, "psi");
  }
  for (const auto& eps : epsilons) {
    require_holomorphic(eps, "epsilon");
    if (!eps.is_odd()) throw Error(ErrorCode::kParity, "epsilon must be odd");
  }
  std::vector<SuperVector> defects;
  for (std::size_t j = 1; j < psis.size(); ++j) {
    defects.push_back(epsilons[j - 1] * psis[j] - psis[j - 1].super_derivative(Dir::kPlus));
  }
  return defects;
}

std::vector<SuperVector> gram_schmidt(const std::vector<SuperVector>& psis) {
  std::vector<SuperVector> zs;
  std::vector<Superfield> inverse_norms;
  for (std::size_t j = 0; j < psis.size(); ++j) {
    SuperVector z = psis[j];
    for (std::size_t k = 0; k < j; ++k) {
      z -= zs[k] * (inner(zs[k], psis[j]) * inverse_norms[k]);
    }
    inverse_norms.push_back(inverse_or_degenerate(inner(z, z), static_cast<int>(j)));
    zs.push_back(std::move(z));
  }
  return zs;
}

ModelData::ModelData(Chain chain)
    : psis_(std::move(chain.psis)), epsilons_(std::move(chain.epsilons)) {
  verify_chain(psis_, epsilons_);
  zs_ = gram_schmidt(psis_);
  for (std::size_t k = 0; k < zs_.size(); ++k) {
    norms_.push_back(inner(zs_[k], zs_[k]));
    inverse_norms_.push_back(inverse_or_degenerate(norms_.back(), static_cast<int>(k)));
    projectors_.push_back(outer(zs_[k], zs_[k]) * inverse_norms_.back());
  }
}

int ModelData::order() const { return zs_.front().order(); }

Superfield ModelData::norm(int k) const {
  if (k < 0) return Superfield::constant(space(), order(), 1);
  return norms_.at(k);
}

Superfield ModelData::inverse_norm(int k) const {
  if (k < 0) return Superfield::constant(space(), order(), 1);
  return inverse_norms_.at(k);
}

Superfield ModelData::epsilon(int j) const {
  if (j <= 0 || j >= n()) return Superfield();
  return epsilons_.at(j - 1);
}

SuperMatrix el_defect(const SuperMatrix& p) {
  return commutator(p.super_derivative(Dir::kMinus).super_derivative(Dir::kPlus), p);
}

SuperMatrix current(const SuperMatrix& p) {
  return GaussianRational::i() * commutator(p, p.super_derivative(Dir::kPlus));
}

SuperMatrix conservation_defect(const SuperMatrix& p) {
  SuperMatrix phi = current(p);
  return phi.super_derivative(Dir::kMinus) - phi.dagger().super_derivative(Dir::kPlus);
}

std::vector<PropzDefects> propz_defects(const ModelData& model) {
  std::vector<PropzDefects> out;
  int n = model.n();
  for (int j = 0; j < n; ++j) {
    PropzDefects d;
    Superfield inv = model.inverse_norm(j);
    d.raising = (model.z(j) * inv).super_derivative(Dir::kPlus);
    if (j + 1 < n) d.raising -= model.epsilon(j + 1) * (model.z(j + 1) * inv);
    d.lowering = model.z(j).super_derivative(Dir::kMinus);
    if (j > 0) {
      Superfield ratio = model.norm(j) * model.inverse_norm(j - 1);
      d.lowering += (model.epsilon(j).dagger() * ratio) * model.z(j - 1);
    }
    out.push_back(std::move(d));
  }
  return out;
}

namespace {

// |epsilon_{k+1}|^2 |z_{k+1}|^2 / |z_k|^2, zero past the end of the chain.
Superfield raising_weight(const ModelData& model, int k) {
  if (k < 0 || k + 1 >= model.n()) return Superfield::constant(model.space(), model.order(), 0);
  Superfield eps = model.epsilon(k + 1);
  return (eps.dagger() * eps) * model.norm(k + 1) * model.inverse_norm(k);
}

}  // namespace

Densities densities(const ModelData& model, int k) {
  if (k < 0 || k >= model.n()) throw Error(ErrorCode::kInvalidArgument, "sector index out of range");
  Superfield up = raising_weight(model, k);
  Superfield down = raising_weight(model, k - 1);
  return {GaussianRational(2) * (up + down), GaussianRational(2) * (up - down)};
}

DensityLogDefects density_log_identities(const ModelData& model, int k) {
  Densities dens = densities(model, k);
  GaussianRational half(mpq_class(1, 2));
  Superfield own = model.norm(k).log_derivative(Dir::kPlus);
  // |z_k|^2 |z_{k-1}|^4 ... |z_0|^4
  Superfield product = model.norm(k);
  for (int i = 0; i < k; ++i) product = product * model.norm(i) * model.norm(i);
  Superfield product_gradient = product.log_derivative(Dir::kPlus);
  return {own.super_derivative(Dir::kMinus) - half * dens.topological,
          product_gradient.super_derivative(Dir::kMinus) - half * dens.lagrangian};
}

SumRuleDefects sum_rules(const ModelData& model) {
  int n = model.n();
  std::vector<Superfield> q;
  for (int k = 0; k < n; ++k) q.push_back(densities(model, k).topological);
  SumRuleDefects out;
  for (int k = 0; k < n; ++k) {
    out.topological_sum += q[k];
    out.log_gradient_plus += model.norm(k).log_derivative(Dir::kPlus);
    out.log_gradient_minus += model.norm(k).log_derivative(Dir::kMinus);
  }
  for (int k = 0; k < n; ++k) {
    Superfield xi_plus;
    Superfield xi_minus;
    for (int i = 0; i < k; ++i) xi_plus += q[i] - q[k];
    for (int i = k + 1; i < n; ++i) xi_minus += q[k] - q[i];
    out.xi_defects.push_back(xi_plus - xi_minus + GaussianRational(n) * q[k]);
  }
  return out;
}

}  // namespace scpn
