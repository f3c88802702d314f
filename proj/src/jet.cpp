#include "scpn/jet.hpp"

#include "scpn/error.hpp"

namespace scpn {

namespace {

void require_order(int order) {
  if (order < 0) throw Error(ErrorCode::kOrderUnderflow, "negative jet order");
}

}  // namespace

Jet::Jet(int order) : order_(order) {
  require_order(order);
  re_.assign(size_for(order), mpz_class(0));
  im_.assign(size_for(order), mpz_class(0));
}

std::pair<int, int> Jet::exponents(std::size_t idx) {
  int d = 0;
  while (static_cast<std::size_t>(d + 1) * (d + 2) / 2 <= idx) ++d;
  int j = static_cast<int>(idx - static_cast<std::size_t>(d) * (d + 1) / 2);
  return {d - j, j};
}

Jet Jet::constant(int order, const GaussianRational& c) {
  Jet out(order);
  mpz_lcm(out.den_.get_mpz_t(), c.re().get_den_mpz_t(), c.im().get_den_mpz_t());
  out.re_[0] = c.re().get_num() * (out.den_ / c.re().get_den());
  out.im_[0] = c.im().get_num() * (out.den_ / c.im().get_den());
  out.normalize();
  return out;
}

Jet Jet::from_coefficients(int order, const std::vector<GaussianRational>& c) {
  Jet out(order);
  std::size_t m = std::min(c.size(), out.n());
  mpz_class den = 1;
  for (std::size_t k = 0; k < m; ++k) {
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c[k].re().get_den_mpz_t());
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c[k].im().get_den_mpz_t());
  }
  out.den_ = den;
  for (std::size_t k = 0; k < m; ++k) {
    out.re_[k] = c[k].re().get_num() * (den / c[k].re().get_den());
    out.im_[k] = c[k].im().get_num() * (den / c[k].im().get_den());
  }
  out.normalize();
  return out;
}

void Jet::normalize() {
  mpz_class g = den_;
  for (std::size_t k = 0; k < n() && g != 1; ++k) {
    if (sgn(re_[k]) != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), re_[k].get_mpz_t());
    if (sgn(im_[k]) != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), im_[k].get_mpz_t());
  }
  if (g == 1) return;
  for (std::size_t k = 0; k < n(); ++k) {
    if (sgn(re_[k]) != 0) mpz_divexact(re_[k].get_mpz_t(), re_[k].get_mpz_t(), g.get_mpz_t());
    if (sgn(im_[k]) != 0) mpz_divexact(im_[k].get_mpz_t(), im_[k].get_mpz_t(), g.get_mpz_t());
  }
  mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
}

bool Jet::is_zero() const {
  for (std::size_t k = 0; k < n(); ++k) {
    if (sgn(re_[k]) != 0 || sgn(im_[k]) != 0) return false;
  }
  return true;
}

GaussianRational Jet::at(std::size_t idx) const {
  if (idx >= n()) return {};
  mpq_class re(re_[idx], den_);
  mpq_class im(im_[idx], den_);
  re.canonicalize();
  im.canonicalize();
  return {std::move(re), std::move(im)};
}

GaussianRational Jet::coefficient(int i, int j) const {
  if (i < 0 || j < 0 || i + j > order_) return {};
  return at(index(i, j));
}

std::optional<std::pair<std::size_t, GaussianRational>> Jet::leading_term() const {
  for (std::size_t k = 0; k < n(); ++k) {
    if (sgn(re_[k]) != 0 || sgn(im_[k]) != 0) return std::make_pair(k, at(k));
  }
  return std::nullopt;
}

Jet Jet::truncated(int order) const {
  require_order(order);
  if (order >= order_) return *this;
  Jet out = *this;
  out.order_ = order;
  out.re_.resize(size_for(order));
  out.im_.resize(size_for(order));
  out.normalize();
  return out;
}

Jet& Jet::operator+=(const Jet& o) {
  int order = std::min(order_, o.order_);
  std::size_t m = size_for(order);
  re_.resize(m);
  im_.resize(m);
  order_ = order;
  if (den_ == o.den_) {
    for (std::size_t k = 0; k < m; ++k) {
      re_[k] += o.re_[k];
      im_[k] += o.im_[k];
    }
  } else {
    mpz_class l;
    mpz_lcm(l.get_mpz_t(), den_.get_mpz_t(), o.den_.get_mpz_t());
    mpz_class fa = l / den_;
    mpz_class fb = l / o.den_;
    for (std::size_t k = 0; k < m; ++k) {
      re_[k] *= fa;
      mpz_addmul(re_[k].get_mpz_t(), o.re_[k].get_mpz_t(), fb.get_mpz_t());
      im_[k] *= fa;
      mpz_addmul(im_[k].get_mpz_t(), o.im_[k].get_mpz_t(), fb.get_mpz_t());
    }
    den_ = l;
  }
  normalize();
  return *this;
}

Jet Jet::operator-() const {
  Jet out = *this;
  for (std::size_t k = 0; k < n(); ++k) {
    out.re_[k] = -re_[k];
    out.im_[k] = -im_[k];
  }
  return out;
}

Jet& Jet::operator-=(const Jet& o) { return *this += -o; }

Jet operator*(const Jet& a, const Jet& b) {
  int order = std::min(a.order_, b.order_);
  Jet out(order);
  std::size_t m = Jet::size_for(order);
  struct Entry {
    int i, j, deg;
    const mpz_class* re;
    const mpz_class* im;
  };
  auto collect = [m](const Jet& x) {
    std::vector<Entry> v;
    for (std::size_t k = 0; k < m; ++k) {
      if (sgn(x.re_[k]) == 0 && sgn(x.im_[k]) == 0) continue;
      auto [i, j] = Jet::exponents(k);
      v.push_back({i, j, i + j, &x.re_[k], &x.im_[k]});
    }
    return v;
  };
  std::vector<Entry> ea = collect(a);
  std::vector<Entry> eb = collect(b);
  if (ea.empty() || eb.empty()) return out;
  for (const Entry& x : ea) {
    for (const Entry& y : eb) {
      if (x.deg + y.deg > order) break;  // eb is in degree order
      std::size_t k = Jet::index(x.i + y.i, x.j + y.j);
      mpz_ptr re = out.re_[k].get_mpz_t();
      mpz_ptr im = out.im_[k].get_mpz_t();
      mpz_addmul(re, x.re->get_mpz_t(), y.re->get_mpz_t());
      mpz_submul(re, x.im->get_mpz_t(), y.im->get_mpz_t());
      mpz_addmul(im, x.re->get_mpz_t(), y.im->get_mpz_t());
      mpz_addmul(im, x.im->get_mpz_t(), y.re->get_mpz_t());
    }
  }
  out.den_ = a.den_ * b.den_;
  out.normalize();
  return out;
}

Jet Jet::scaled(const GaussianRational& c) const {
  if (c.is_zero()) return Jet(order_);
  // c = (p + q i) / r with integer p, q, r.
  mpz_class r;
  mpz_lcm(r.get_mpz_t(), c.re().get_den_mpz_t(), c.im().get_den_mpz_t());
  mpz_class p = c.re().get_num() * (r / c.re().get_den());
  mpz_class q = c.im().get_num() * (r / c.im().get_den());
  Jet out(order_);
  for (std::size_t k = 0; k < n(); ++k) {
    out.re_[k] = re_[k] * p - im_[k] * q;
    out.im_[k] = re_[k] * q + im_[k] * p;
  }
  out.den_ = den_ * r;
  out.normalize();
  return out;
}

Jet Jet::derivative_s() const {
  if (order_ < 1) throw Error(ErrorCode::kOrderUnderflow, "x-derivative of an order-0 jet");
  Jet out(order_ - 1);
  for (std::size_t k = 0; k < out.n(); ++k) {
    auto [i, j] = exponents(k);
    std::size_t src = index(i + 1, j);
    out.re_[k] = re_[src] * (i + 1);
    out.im_[k] = im_[src] * (i + 1);
  }
  out.den_ = den_;
  out.normalize();
  return out;
}

Jet Jet::derivative_t() const {
  if (order_ < 1) throw Error(ErrorCode::kOrderUnderflow, "x-derivative of an order-0 jet");
  Jet out(order_ - 1);
  for (std::size_t k = 0; k < out.n(); ++k) {
    auto [i, j] = exponents(k);
    std::size_t src = index(i, j + 1);
    out.re_[k] = re_[src] * (j + 1);
    out.im_[k] = im_[src] * (j + 1);
  }
  out.den_ = den_;
  out.normalize();
  return out;
}

Jet Jet::conj_swap() const {
  Jet out(order_);
  for (std::size_t k = 0; k < n(); ++k) {
    auto [i, j] = exponents(k);
    std::size_t dst = index(j, i);
    out.re_[dst] = re_[k];
    out.im_[dst] = -im_[k];
  }
  out.den_ = den_;
  return out;
}

Jet Jet::reciprocal() const {
  // f = F / d with Gaussian-integer F. Writing G = 1/F, the numbers
  // H_ij = F00^(deg+1) G_ij are Gaussian integers obeying
  //   H_ij = -sum_{(a,b) != 0} F_ab F00^(a+b-1) H_{i-a, j-b}.
  const mpz_class& c_re = re_[0];
  const mpz_class& c_im = im_[0];
  if (sgn(c_re) == 0 && sgn(c_im) == 0) {
    throw Error(ErrorCode::kSingularBody, "reciprocal of a jet with zero constant term");
  }
  auto gmul = [](const mpz_class& ar, const mpz_class& ai, const mpz_class& br,
                 const mpz_class& bi, mpz_class& outr, mpz_class& outi) {
    mpz_class r = ar * br - ai * bi;
    mpz_class i = ar * bi + ai * br;
    outr = std::move(r);
    outi = std::move(i);
  };
  // Powers of F00.
  std::vector<mpz_class> pr(order_ + 2), pi(order_ + 2);
  pr[0] = 1;
  pi[0] = 0;
  for (int k = 1; k <= order_ + 1; ++k) gmul(pr[k - 1], pi[k - 1], c_re, c_im, pr[k], pi[k]);

  std::vector<mpz_class> hr(n()), hi(n());
  hr[0] = 1;
  hi[0] = 0;
  mpz_class tr, ti, ur, ui;
  for (std::size_t k = 1; k < n(); ++k) {
    auto [i, j] = exponents(k);
    mpz_class sr = 0, si = 0;
    for (int a = 0; a <= i; ++a) {
      for (int b = 0; b <= j; ++b) {
        if (a == 0 && b == 0) continue;
        std::size_t fk = index(a, b);
        if (sgn(re_[fk]) == 0 && sgn(im_[fk]) == 0) continue;
        std::size_t hk = index(i - a, j - b);
        gmul(re_[fk], im_[fk], pr[a + b - 1], pi[a + b - 1], tr, ti);
        gmul(tr, ti, hr[hk], hi[hk], ur, ui);
        sr += ur;
        si += ui;
      }
    }
    hr[k] = -sr;
    hi[k] = -si;
  }
  // G_ij = H_ij conj(F00)^(deg+1) / N^(deg+1), N = |F00|^2; then 1/f = d G.
  mpz_class norm = c_re * c_re + c_im * c_im;
  std::vector<mpz_class> npow(order_ + 2);
  npow[0] = 1;
  for (int k = 1; k <= order_ + 1; ++k) npow[k] = npow[k - 1] * norm;
  std::vector<mpz_class> cr(order_ + 2), ci(order_ + 2);
  cr[0] = 1;
  ci[0] = 0;
  for (int k = 1; k <= order_ + 1; ++k) gmul(cr[k - 1], ci[k - 1], c_re, mpz_class(-c_im), cr[k], ci[k]);

  Jet out(order_);
  for (std::size_t k = 0; k < n(); ++k) {
    auto [i, j] = exponents(k);
    int deg = i + j;
    gmul(hr[k], hi[k], cr[deg + 1], ci[deg + 1], tr, ti);
    mpz_class scale = npow[order_ - deg] * den_;
    out.re_[k] = tr * scale;
    out.im_[k] = ti * scale;
  }
  out.den_ = npow[order_ + 1];
  out.normalize();
  return out;
}

Jet Jet::integrate(const Jet& ds_part, const Jet& dt_part) {
  int order = std::min(ds_part.order_, dt_part.order_) + 1;
  std::vector<GaussianRational> c(size_for(order));
  for (std::size_t k = 1; k < c.size(); ++k) {
    auto [i, j] = exponents(k);
    if (i > 0) {
      c[k] = ds_part.coefficient(i - 1, j) * GaussianRational(mpq_class(1, i));
    } else {
      c[k] = dt_part.coefficient(0, j - 1) * GaussianRational(mpq_class(1, j));
    }
  }
  return from_coefficients(order, c);
}

bool operator==(const Jet& a, const Jet& b) {
  return a.order_ == b.order_ && a.den_ == b.den_ && a.re_ == b.re_ && a.im_ == b.im_;
}

}  // namespace scpn
