#include "scpn/superfield.hpp"

#include <algorithm>
#include <map>

#include "scpn/error.hpp"

namespace scpn {

std::shared_ptr<const Space> Space::create(TablePtr table, GaussianRational p) {
  if (!table) throw Error(ErrorCode::kInvalidArgument, "space needs a generator table");
  return std::make_shared<const Space>(Space{std::move(table), std::move(p)});
}

SpacePtr unify_spaces(const SpacePtr& a, const SpacePtr& b) {
  if (!a) return b;
  if (!b || a == b) return a;
  if (!(a->base_point == b->base_point)) {
    throw Error(ErrorCode::kBasePointMismatch, "superfields expanded at different base points");
  }
  unify_tables(a->table, b->table);
  return a;
}

namespace {

mpz_class binomial(int n, int k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

GaussianRational power(const GaussianRational& z, int n) {
  GaussianRational r(1);
  for (int k = 0; k < n; ++k) r *= z;
  return r;
}

// Jet of (p + s)^n (conj(p) + t)^m.
Jet monomial_jet(int order, const GaussianRational& p, int n, int m) {
  std::vector<GaussianRational> c(Jet::size_for(order));
  GaussianRational pc = p.conj();
  for (int a = 0; a <= n; ++a) {
    for (int b = 0; b <= m; ++b) {
      if (a + b > order) continue;
      GaussianRational v = power(p, n - a) * power(pc, m - b);
      v *= GaussianRational(mpq_class(binomial(n, a) * binomial(m, b)));
      c[Jet::index(a, b)] = v;
    }
  }
  return Jet::from_coefficients(order, c);
}

}  // namespace

Superfield::Superfield(SpacePtr space, int order)
    : space_(std::move(space)), order_(order) {
  if (order < 0) throw Error(ErrorCode::kOrderUnderflow, "negative superfield order");
}

void Superfield::normalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return a.first < b.first; });
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().first == t.first) {
      out.back().second += t.second;
    } else {
      out.push_back(std::move(t));
    }
  }
  std::erase_if(out, [](const Term& t) { return t.second.is_zero(); });
  terms_ = std::move(out);
}

Superfield Superfield::constant(SpacePtr space, int order, const GrassmannElement& c) {
  unify_tables(space->table, c.table());
  Superfield f(std::move(space), order);
  for (const auto& [m, v] : c.terms()) f.terms_.emplace_back(m, Jet::constant(order, v));
  return f;
}

Superfield Superfield::constant(SpacePtr space, int order, const GaussianRational& c) {
  Superfield f(std::move(space), order);
  if (!c.is_zero()) f.terms_.emplace_back(0, Jet::constant(order, c));
  return f;
}

Superfield Superfield::from_jet(SpacePtr space, Mask m, Jet jet) {
  Superfield f(std::move(space), jet.order());
  if (!jet.is_zero()) f.terms_.emplace_back(m, std::move(jet));
  return f;
}

Superfield Superfield::polynomial(SpacePtr space, int order,
                                  const std::vector<PolyTerm>& terms) {
  Superfield f(space, order);
  for (const auto& term : terms) {
    if (term.plus_power < 0 || term.minus_power < 0) {
      throw Error(ErrorCode::kInvalidArgument, "negative power in polynomial term");
    }
    unify_tables(space->table, term.coeff.table());
    Jet base = monomial_jet(order, space->base_point, term.plus_power, term.minus_power);
    for (const auto& [m, c] : term.coeff.terms()) {
      f.terms_.emplace_back(m, base.scaled(c));
    }
  }
  f.normalize();
  return f;
}

Superfield Superfield::s(SpacePtr space, int order) {
  std::vector<GaussianRational> c(Jet::size_for(order));
  if (order >= 1) c[Jet::index(1, 0)] = 1;
  return from_jet(std::move(space), 0, Jet::from_coefficients(order, c));
}

Superfield Superfield::t(SpacePtr space, int order) {
  std::vector<GaussianRational> c(Jet::size_for(order));
  if (order >= 1) c[Jet::index(0, 1)] = 1;
  return from_jet(std::move(space), 0, Jet::from_coefficients(order, c));
}

Superfield Superfield::generator(SpacePtr space, int order, const std::string& name) {
  int g = space->table->index_of(name);
  return from_jet(std::move(space), Mask{1} << g, Jet::constant(order, 1));
}

Jet Superfield::component(Mask m) const {
  for (const auto& [k, j] : terms_) {
    if (k == m) return j;
  }
  return Jet(order_);
}

GrassmannElement Superfield::coefficient(int i, int j) const {
  std::vector<GrassmannElement::Term> out;
  for (const auto& [m, jet] : terms_) out.emplace_back(m, jet.coefficient(i, j));
  return GrassmannElement::from_terms(space_ ? space_->table : nullptr, std::move(out));
}

Parity Superfield::parity() const {
  bool even = false;
  bool odd = false;
  for (const auto& [m, j] : terms_) (mask::degree(m) & 1 ? odd : even) = true;
  if (even && odd) return Parity::kMixed;
  return odd ? Parity::kOdd : Parity::kEven;
}

bool Superfield::is_holomorphic() const {
  if (terms_.empty()) return true;
  Mask theta_minus = Mask{1} << table()->theta_minus();
  for (const auto& [m, jet] : terms_) {
    if (m & theta_minus) return false;
    for (int i = 0; i <= order_; ++i) {
      for (int j = 1; i + j <= order_; ++j) {
        if (!jet.coefficient(i, j).is_zero()) return false;
      }
    }
  }
  return true;
}

Superfield& Superfield::operator+=(const Superfield& o) {
  space_ = unify_spaces(space_, o.space_);
  int order = std::min(order_, o.order_);
  if (order < order_) *this = truncated(order);
  for (const auto& [m, j] : o.terms_) terms_.emplace_back(m, j.truncated(order));
  normalize();
  return *this;
}

Superfield Superfield::operator-() const {
  Superfield out = *this;
  for (auto& [m, j] : out.terms_) j = -j;
  return out;
}

Superfield& Superfield::operator-=(const Superfield& o) { return *this += -o; }

Superfield operator*(const Superfield& a, const Superfield& b) {
  Superfield out(unify_spaces(a.space_, b.space_), std::min(a.order_, b.order_));
  for (const auto& [ma, ja] : a.terms_) {
    for (const auto& [mb, jb] : b.terms_) {
      if (ma & mb) continue;
      Jet prod = ja * jb;
      if (mask::product_sign(ma, mb) < 0) prod = -prod;
      out.terms_.emplace_back(ma | mb, std::move(prod));
    }
  }
  out.normalize();
  return out;
}

Superfield operator*(const GaussianRational& c, const Superfield& f) {
  Superfield out = f;
  if (c.is_zero()) {
    out.terms_.clear();
    return out;
  }
  for (auto& [m, j] : out.terms_) j = j.scaled(c);
  return out;
}

Superfield operator*(const GrassmannElement& c, const Superfield& f) {
  if (f.is_zero()) return f;
  return Superfield::constant(f.space_, f.order_, c) * f;
}

Superfield operator*(const Superfield& f, const GrassmannElement& c) {
  if (f.is_zero()) return f;
  return f * Superfield::constant(f.space_, f.order_, c);
}

Superfield Superfield::truncated(int order) const {
  if (order >= order_) return *this;
  Superfield out(space_, order);
  for (const auto& [m, j] : terms_) out.terms_.emplace_back(m, j.truncated(order));
  out.normalize();
  return out;
}

Superfield Superfield::x_derivative(Dir dir) const {
  if (order_ < 1) {
    throw Error(ErrorCode::kOrderUnderflow, "derivative budget exhausted");
  }
  Superfield out(space_, order_ - 1);
  for (const auto& [m, j] : terms_) {
    out.terms_.emplace_back(m, dir == Dir::kPlus ? j.derivative_s() : j.derivative_t());
  }
  out.normalize();
  return out;
}

Superfield Superfield::berezin(int generator) const {
  if (!space_) return *this;
  if (generator < 0 || generator >= table()->size()) {
    throw Error(ErrorCode::kUnknownGenerator, "berezin: generator not in table");
  }
  Superfield out(space_, order_);
  for (const auto& [m, j] : terms_) {
    auto [sign, dm] = mask::berezin(m, generator);
    if (sign == 0) continue;
    out.terms_.emplace_back(dm, sign > 0 ? j : -j);
  }
  out.normalize();
  return out;
}

Superfield Superfield::times_theta(Dir dir) const {
  if (terms_.empty()) return *this;
  int g = dir == Dir::kPlus ? table()->theta_plus() : table()->theta_minus();
  Mask bit = Mask{1} << g;
  Superfield out(space_, order_);
  for (const auto& [m, j] : terms_) {
    if (m & bit) continue;
    out.terms_.emplace_back(m | bit, mask::product_sign(bit, m) < 0 ? -j : j);
  }
  out.normalize();
  return out;
}

Superfield Superfield::super_derivative(Dir dir) const {
  if (terms_.empty()) return x_derivative(dir);
  int g = dir == Dir::kPlus ? table()->theta_plus() : table()->theta_minus();
  Superfield grad = x_derivative(dir).times_theta(dir);
  return GaussianRational(0, -1) * berezin(g) + grad;
}

Superfield Superfield::dagger() const {
  Superfield out(space_, order_);
  for (const auto& [m, j] : terms_) {
    auto [sign, dm] = m == 0 ? std::pair<int, Mask>{1, 0} : mask::dagger(m, *table());
    Jet c = j.conj_swap();
    out.terms_.emplace_back(dm, sign < 0 ? -c : c);
  }
  out.normalize();
  return out;
}

Superfield Superfield::twist() const {
  Superfield out = *this;
  for (auto& [m, j] : out.terms_) {
    if (mask::degree(m) & 1) j = -j;
  }
  return out;
}

Superfield Superfield::even_part() const {
  Superfield out = *this;
  std::erase_if(out.terms_, [](const Term& t) { return mask::degree(t.first) & 1; });
  return out;
}

Superfield Superfield::odd_part() const {
  Superfield out = *this;
  std::erase_if(out.terms_, [](const Term& t) { return !(mask::degree(t.first) & 1); });
  return out;
}

Superfield Superfield::invert_even() const {
  if (!is_even()) {
    throw Error(ErrorCode::kParity, "invert_even needs an even superfield");
  }
  Jet body = component(0);
  if (body.constant_term().is_zero()) {
    throw Error(ErrorCode::kSingularBody,
                "body vanishes at the base point; choose a different base point");
  }
  Superfield inv_body = from_jet(space_, 0, body.reciprocal());
  inv_body.order_ = order_;
  Superfield soul = *this;
  std::erase_if(soul.terms_, [](const Term& t) { return t.first == 0; });
  // f^{-1} = B sum_k (-n B)^k with B = body^{-1}; the soul n is nilpotent.
  Superfield result = inv_body;
  Superfield term = inv_body;
  for (int k = 0; k <= table()->size(); ++k) {
    term = -(term * soul * inv_body);
    if (term.is_zero()) break;
    result += term;
  }
  return result;
}

Superfield Superfield::log_derivative(Dir dir) const {
  return invert_even() * super_derivative(dir);
}

Superfield Superfield::extract_theta(ThetaPart part) const {
  if (terms_.empty()) return *this;
  // theta+ and theta- are generators 0 and 1, so theta^part e_rest is
  // already canonical.
  Mask want = static_cast<Mask>(part);
  Mask theta = table()->theta_mask();
  Superfield out(space_, order_);
  for (const auto& [m, j] : terms_) {
    if ((m & theta) == want) out.terms_.emplace_back(m & ~theta, j);
  }
  return out;
}

Superfield Superfield::substitute_theta(const GrassmannElement& e) const {
  if (terms_.empty()) return *this;
  unify_tables(table(), e.table());
  Mask theta = table()->theta_mask();
  for (const auto& [m, c] : e.terms()) {
    if (m & theta) {
      throw Error(ErrorCode::kInvalidSubstitution, "substituted element contains theta");
    }
  }
  if (!e.is_odd()) {
    throw Error(ErrorCode::kInvalidSubstitution, "substituted element must be odd");
  }
  GrassmannElement ed = e.dagger();
  // Needed for theta+ -> e, theta- -> e^dagger to extend to a homomorphism.
  if (!(e * e).is_zero() || !(e * ed + ed * e).is_zero()) {
    throw Error(ErrorCode::kInvalidSubstitution,
                "substitution must square to zero and anticommute with its dagger");
  }
  return extract_theta(ThetaPart::kOne) + e * extract_theta(ThetaPart::kPlus) +
         ed * extract_theta(ThetaPart::kMinus) +
         (e * ed) * extract_theta(ThetaPart::kPlusMinus);
}

std::string Superfield::leading_term() const {
  if (terms_.empty()) return "0";
  // Order by jet index first, then by monomial.
  std::size_t best_idx = Jet::size_for(order_);
  Mask best_mask = 0;
  GaussianRational best_val;
  for (const auto& [m, j] : terms_) {
    auto lt = j.leading_term();
    if (!lt) continue;
    if (lt->first < best_idx || (lt->first == best_idx && m < best_mask)) {
      best_idx = lt->first;
      best_mask = m;
      best_val = lt->second;
    }
  }
  auto [i, j] = Jet::exponents(best_idx);
  std::string mono;
  for (Mask r = best_mask; r; r &= r - 1) mono += table()->name(__builtin_ctzll(r));
  if (mono.empty()) mono = "1";
  return "s^" + std::to_string(i) + " t^" + std::to_string(j) + " [" + mono +
         "]: " + best_val.to_string();
}

bool operator==(const Superfield& a, const Superfield& b) {
  if (a.order_ != b.order_ || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t k = 0; k < a.terms_.size(); ++k) {
    if (a.terms_[k].first != b.terms_[k].first ||
        !(a.terms_[k].second == b.terms_[k].second)) {
      return false;
    }
  }
  return true;
}

}  // namespace scpn
