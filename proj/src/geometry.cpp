#include "scpn/geometry.hpp"

#include "scpn/error.hpp"
#include "scpn/forms.hpp"
#include "scpn/spectral.hpp"

namespace scpn {

namespace {

const GaussianRational kI = GaussianRational::i();

void require_sector(const ModelData& model, int k) {
  if (k < 0 || k >= model.n()) throw Error(ErrorCode::kInvalidArgument, "sector index out of range");
}

Superfield theta(const ModelData& model, Dir d) {
  const auto& t = model.space()->table;
  return Superfield::generator(model.space(), model.order(), t->name(d == Dir::kPlus ? 0 : 1));
}

// theta-free data of the chain: u_k, fermionic epsilon parts, norms.
struct Reduced {
  std::vector<SuperVector> u;
  std::vector<Superfield> u_norm;
  std::vector<Superfield> u_inverse;
  std::vector<Superfield> eps_f;  // index j holds epsilon_j^f; 0 and N are zero
  std::vector<SuperMatrix> projector;

  Superfield norm(int k, const ModelData& m) const {
    return k < 0 ? Superfield::constant(m.space(), m.order(), 1) : u_norm.at(k);
  }
  Superfield inverse(int k, const ModelData& m) const {
    return k < 0 ? Superfield::constant(m.space(), m.order(), 1) : u_inverse.at(k);
  }
  SuperMatrix proj(int k, int n) const {
    return (k < 0 || k >= static_cast<int>(projector.size())) ? SuperMatrix(n, n) : projector[k];
  }
  // |eps_{k+1}^f|^2 |u_{k+1}|^2 / |u_k|^2
  Superfield weight(int k, const ModelData& m) const {
    int n = static_cast<int>(u.size());
    if (k < -1 || k + 1 >= n || k + 1 <= 0) return Superfield::constant(m.space(), m.order(), 0);
    const Superfield& e = eps_f[k + 1];
    return (e.dagger() * e) * u_norm[k + 1] * inverse(k, m);
  }
};

Reduced reduce(const ModelData& model) {
  Reduced r;
  int n = model.n();
  for (int k = 0; k < n; ++k) {
    r.u.push_back(model.z(k).extract_theta(ThetaPart::kOne));
    r.u_norm.push_back(inner(r.u.back(), r.u.back()));
    r.u_inverse.push_back(r.u_norm.back().invert_even());
    r.projector.push_back(outer(r.u.back(), r.u.back()) * r.u_inverse.back());
  }
  r.eps_f.assign(n + 1, Superfield());
  for (int k = 1; k < n; ++k) r.eps_f[k] = model.epsilon(k).extract_theta(ThetaPart::kOne);
  return r;
}

}  // namespace

std::string_view to_string(Coord c) {
  switch (c) {
    case Coord::kPlus: return "+";
    case Coord::kMinus: return "-";
    case Coord::kThetaPlus: return "theta+";
    case Coord::kThetaMinus: return "theta-";
  }
  return "?";
}

MetricTable metric_components(const ModelData& model, int k) {
  require_sector(model, k);
  MetricTable t;
  t.phi = current(model.projector(k));
  SuperMatrix dphi = t.phi.super_derivative(Dir::kPlus);
  t.m_plus = kI * dphi;
  t.rho_plus = dphi.times_theta(Dir::kPlus) + kI * t.phi;
  SuperMatrix md = t.m_plus.dagger();
  SuperMatrix rd = t.rho_plus.dagger();
  const SuperMatrix& m = t.m_plus;
  const SuperMatrix& r = t.rho_plus;

  auto set = [&t](Coord a, Coord b, Superfield v) { t.g[static_cast<int>(a)][static_cast<int>(b)] = std::move(v); };
  using C = Coord;
  set(C::kPlus, C::kPlus, su_inner(m, m));
  set(C::kMinus, C::kMinus, su_inner(md, md));
  set(C::kPlus, C::kMinus, su_inner(m, md));
  set(C::kThetaPlus, C::kThetaMinus, su_inner(rd, r));
  set(C::kPlus, C::kThetaPlus, su_inner(m, r));
  set(C::kPlus, C::kThetaMinus, su_inner(m, rd));
  set(C::kMinus, C::kThetaPlus, -su_inner(md, r));
  set(C::kMinus, C::kThetaMinus, su_inner(md, rd));
  set(C::kThetaPlus, C::kThetaPlus, su_inner(r, r));
  set(C::kThetaMinus, C::kThetaMinus, su_inner(rd, rd));
  // remaining entries by the symmetry relations
  set(C::kMinus, C::kPlus, t(C::kPlus, C::kMinus));
  set(C::kThetaPlus, C::kPlus, t(C::kPlus, C::kThetaPlus));
  set(C::kThetaMinus, C::kPlus, t(C::kPlus, C::kThetaMinus));
  set(C::kThetaPlus, C::kMinus, t(C::kMinus, C::kThetaPlus));
  set(C::kThetaMinus, C::kMinus, t(C::kMinus, C::kThetaMinus));
  set(C::kThetaMinus, C::kThetaPlus, -t(C::kThetaPlus, C::kThetaMinus));

  auto& s = t.symmetry_defects;
  s.emplace_back("g(-,+) - g(+,-)", su_inner(md, m) - t(C::kPlus, C::kMinus));
  s.emplace_back("g(theta+,+) - g(+,theta+)", su_inner(r, m) - t(C::kPlus, C::kThetaPlus));
  s.emplace_back("g(theta-,+) - g(+,theta-)", su_inner(rd, m) - t(C::kPlus, C::kThetaMinus));
  s.emplace_back("g(theta+,-) - g(-,theta+)", -su_inner(r, md) - t(C::kMinus, C::kThetaPlus));
  s.emplace_back("g(theta-,-) - g(-,theta-)", su_inner(rd, md) - t(C::kMinus, C::kThetaMinus));
  s.emplace_back("g(theta-,theta+) + g(theta+,theta-)", su_inner(r, rd) + t(C::kThetaPlus, C::kThetaMinus));
  s.emplace_back("g(theta+,theta+) + g(theta+,theta+)", su_inner(r, r) + t(C::kThetaPlus, C::kThetaPlus));
  s.emplace_back("g(theta-,theta-) + g(theta-,theta-)", su_inner(rd, rd) + t(C::kThetaMinus, C::kThetaMinus));

  // dX = i dx+ D+phi - i dx- D-phi^dagger + dtheta+ rho - dtheta- (theta- D-phi^dagger + i phi^dagger)
  SuperMatrix x = surface_X(model, k);
  SuperMatrix phid = t.phi.dagger();
  SuperMatrix dphid = phid.super_derivative(Dir::kMinus);
  t.dx_defects = {m - x.x_derivative(Dir::kPlus),
                  -(kI * dphid) - x.x_derivative(Dir::kMinus),
                  r - x.berezin(0),
                  -(dphid.times_theta(Dir::kMinus) + kI * phid) - x.berezin(1)};
  return t;
}

std::array<SuperMatrix, 2> rho_identity(const ModelData& model, int k) {
  require_sector(model, k);
  SuperMatrix phi = current(model.projector(k));
  SuperMatrix rho = phi.super_derivative(Dir::kPlus).times_theta(Dir::kPlus) + kI * phi;
  SuperMatrix via_theta = (phi * theta(model, Dir::kPlus)).super_derivative(Dir::kPlus);
  SuperMatrix xi0 = phi.extract_theta(ThetaPart::kOne);
  SuperMatrix a_minus = phi.super_derivative(Dir::kMinus).extract_theta(ThetaPart::kOne);
  SuperMatrix taylor = kI * xi0 - a_minus.times_theta(Dir::kMinus);
  return {rho - via_theta, rho - taylor};
}

XiADefects xi_A_formulas(const ModelData& model, int j) {
  require_sector(model, j);
  int n = model.n();
  Reduced r = reduce(model);
  XiADefects out;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (a != b) out.u_orthogonality.push_back(inner(r.u[a], r.u[b]));
      SuperMatrix prod = r.projector[a] * r.projector[b];
      out.reduced_projectors.push_back(a == b ? prod - r.projector[a] : prod);
    }
  }
  SuperMatrix phi = current(model.projector(j));
  SuperMatrix xi0 = phi.extract_theta(ThetaPart::kOne);
  SuperMatrix a_minus = phi.super_derivative(Dir::kMinus).extract_theta(ThetaPart::kOne);

  SuperMatrix xi_closed(n, n);
  if (j + 1 < n) xi_closed += r.eps_f[j + 1] * (outer(r.u[j + 1], r.u[j]) * r.u_inverse[j]);
  if (j > 0) xi_closed += r.eps_f[j] * (outer(r.u[j], r.u[j - 1]) * r.u_inverse[j - 1]);
  xi_closed = -kI * xi_closed;

  SuperMatrix a_closed = kI * r.weight(j, model) * (r.proj(j, n) - r.proj(j + 1, n));
  if (j > 0) a_closed += kI * r.weight(j - 1, model) * (r.proj(j - 1, n) - r.proj(j, n));

  out.xi0 = xi0 - xi_closed;
  out.a_minus = a_minus - a_closed;
  return out;
}

Superfield g_theta_theta_formula(const ModelData& model, int j) {
  require_sector(model, j);
  Reduced r = reduce(model);
  int n = model.n();
  GaussianRational half(mpq_class(-1, 2));
  Superfield closed = half * (r.weight(j, model) + r.weight(j - 1, model));
  if (j > 0 && j + 1 < n) {
    Superfield tp = theta(model, Dir::kPlus);
    Superfield tm = theta(model, Dir::kMinus);
    const Superfield& lo = r.eps_f[j];
    const Superfield& hi = r.eps_f[j + 1];
    closed += (tp * tm) * (lo.dagger() * lo) * (hi.dagger() * hi) * r.u_norm[j + 1] * r.inverse(j - 1, model);
  }
  MetricTable t = metric_components(model, j);
  return t(Coord::kThetaPlus, Coord::kThetaMinus) - closed;
}

Superfield eta_reduction(const ModelData& model, int j, const GaussianRational& c_plus,
                         const GaussianRational& c_minus) {
  require_sector(model, j);
  const auto& table = model.space()->table;
  if (table->pairs().size() != 2) {
    throw Error(ErrorCode::kUnsupportedReduction, "reduction needs exactly one eta pair");
  }
  int n = model.n();
  Mask eta_p = Mask{1} << 2;
  Mask eta_m = Mask{1} << 3;
  auto ep = GrassmannElement::monomial(table, eta_p);
  auto em = GrassmannElement::monomial(table, eta_m);
  GrassmannElement e = c_plus * ep + c_minus * em;
  Superfield lhs = metric_components(model, j)(Coord::kThetaPlus, Coord::kThetaMinus).substitute_theta(e);

  Reduced r = reduce(model);
  auto scalar = [&](const Jet& jet) { return Superfield::from_jet(model.space(), 0, jet); };
  // (|a_k^+|^2 - |a_k^-|^2) for epsilon_k^f = a^+ eta+ + a^- eta-
  auto asym = [&](int k) {
    const Superfield& f = r.eps_f[k];
    Superfield ap = scalar(f.component(eta_p));
    Superfield am = scalar(f.component(eta_m));
    return ap.dagger() * ap - am.dagger() * am;
  };
  auto body_norm = [&](int k) {
    if (k < 0) return Superfield::constant(model.space(), model.order(), 1);
    SuperVector b = r.u[k];
    for (int i = 0; i < b.size(); ++i) b[i] = scalar(b[i].component(0));
    return inner(b, b);
  };
  Superfield bracket;
  if (j + 1 < n) bracket += asym(j + 1) * body_norm(j + 1) * body_norm(j).invert_even();
  if (j > 0) bracket += asym(j) * body_norm(j) * body_norm(j - 1).invert_even();
  Superfield rhs = GaussianRational(mpq_class(1, 2)) * (ep * em) * bracket;
  return lhs - rhs;
}

}  // namespace scpn
