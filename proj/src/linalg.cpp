#include "scpn/linalg.hpp"

#include <algorithm>
#include <numeric>

#include "scpn/error.hpp"

namespace scpn {

namespace {

void require_same_size(int a, int b, const char* what) {
  if (a != b) {
    throw Error(ErrorCode::kShapeMismatch,
                std::string(what) + ": dimension mismatch " + std::to_string(a) +
                    " vs " + std::to_string(b));
  }
}

}  // namespace

SuperVector SuperVector::unit(SpacePtr space, int order, int n, int k) {
  std::vector<Superfield> e(n);
  e.at(k) = Superfield::constant(space, order, GaussianRational(1));
  return SuperVector(std::move(e));
}

bool SuperVector::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const Superfield& f) { return f.is_zero(); });
}

int SuperVector::order() const {
  int o = Superfield::kUnboundedOrder;
  for (const auto& f : entries_) o = std::min(o, f.order());
  return o;
}

SuperVector& SuperVector::operator+=(const SuperVector& o) {
  require_same_size(size(), o.size(), "vector sum");
  for (int i = 0; i < size(); ++i) entries_[i] += o.entries_[i];
  return *this;
}

SuperVector& SuperVector::operator-=(const SuperVector& o) {
  require_same_size(size(), o.size(), "vector difference");
  for (int i = 0; i < size(); ++i) entries_[i] -= o.entries_[i];
  return *this;
}

SuperVector operator*(const Superfield& c, const SuperVector& v) {
  SuperVector out = v;
  for (auto& e : out.entries_) e = c * e;
  return out;
}

SuperVector operator*(const SuperVector& v, const Superfield& c) {
  SuperVector out = v;
  for (auto& e : out.entries_) e = e * c;
  return out;
}

SuperVector SuperVector::super_derivative(Dir dir) const {
  SuperVector out = *this;
  for (auto& e : out.entries_) e = e.super_derivative(dir);
  return out;
}

SuperVector SuperVector::extract_theta(ThetaPart part) const {
  SuperVector out = *this;
  for (auto& e : out.entries_) e = e.extract_theta(part);
  return out;
}

Superfield inner(const SuperVector& v, const SuperVector& w) {
  require_same_size(v.size(), w.size(), "inner");
  Superfield acc;
  for (int i = 0; i < v.size(); ++i) acc += v[i].dagger() * w[i];
  return acc;
}

SuperMatrix outer(const SuperVector& v, const SuperVector& w) {
  SuperMatrix m(v.size(), w.size());
  for (int j = 0; j < w.size(); ++j) {
    Superfield wd = w[j].dagger();
    for (int i = 0; i < v.size(); ++i) m(i, j) = v[i] * wd;
  }
  return m;
}

SuperMatrix::SuperMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), entries_(static_cast<std::size_t>(rows) * cols) {}

SuperMatrix SuperMatrix::identity(SpacePtr space, int order, int n) {
  SuperMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = Superfield::constant(space, order, GaussianRational(1));
  return m;
}

SuperMatrix SuperMatrix::constant(SpacePtr space, int order,
                                  const std::vector<std::vector<GaussianRational>>& rows) {
  int r = static_cast<int>(rows.size());
  int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
  SuperMatrix m(r, c);
  for (int i = 0; i < r; ++i) {
    require_same_size(c, static_cast<int>(rows[i].size()), "constant matrix row");
    for (int j = 0; j < c; ++j) m(i, j) = Superfield::constant(space, order, rows[i][j]);
  }
  return m;
}

bool SuperMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const Superfield& f) { return f.is_zero(); });
}

int SuperMatrix::order() const {
  int o = Superfield::kUnboundedOrder;
  for (const auto& f : entries_) o = std::min(o, f.order());
  return o;
}

std::string SuperMatrix::leading_term() const {
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) {
      const Superfield& f = (*this)(i, j);
      if (!f.is_zero()) {
        return "(" + std::to_string(i) + "," + std::to_string(j) + ") " + f.leading_term();
      }
    }
  }
  return "0";
}

SuperMatrix& SuperMatrix::operator+=(const SuperMatrix& o) {
  require_same_size(rows_, o.rows_, "matrix sum rows");
  require_same_size(cols_, o.cols_, "matrix sum cols");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += o.entries_[k];
  return *this;
}

SuperMatrix& SuperMatrix::operator-=(const SuperMatrix& o) {
  require_same_size(rows_, o.rows_, "matrix difference rows");
  require_same_size(cols_, o.cols_, "matrix difference cols");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= o.entries_[k];
  return *this;
}

SuperMatrix SuperMatrix::operator-() const {
  SuperMatrix out = *this;
  for (auto& e : out.entries_) e = -e;
  return out;
}

SuperMatrix operator*(const SuperMatrix& a, const SuperMatrix& b) {
  require_same_size(a.cols_, b.rows_, "matrix product");
  SuperMatrix out(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i) {
    for (int j = 0; j < b.cols_; ++j) {
      Superfield acc;
      for (int k = 0; k < a.cols_; ++k) acc += a(i, k) * b(k, j);
      out(i, j) = std::move(acc);
    }
  }
  return out;
}

SuperVector operator*(const SuperMatrix& a, const SuperVector& v) {
  require_same_size(a.cols_, v.size(), "matrix-vector product");
  std::vector<Superfield> out(a.rows_);
  for (int i = 0; i < a.rows_; ++i) {
    for (int k = 0; k < a.cols_; ++k) out[i] += a(i, k) * v[k];
  }
  return SuperVector(std::move(out));
}

SuperMatrix operator*(const Superfield& c, const SuperMatrix& a) {
  SuperMatrix out = a;
  for (auto& e : out.entries_) e = c * e;
  return out;
}

SuperMatrix operator*(const SuperMatrix& a, const Superfield& c) {
  SuperMatrix out = a;
  for (auto& e : out.entries_) e = e * c;
  return out;
}

SuperMatrix operator*(const GaussianRational& c, const SuperMatrix& a) {
  SuperMatrix out = a;
  for (auto& e : out.entries_) e = c * e;
  return out;
}

SuperMatrix SuperMatrix::dagger() const {
  SuperMatrix out(cols_, rows_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j).dagger();
  }
  return out;
}

namespace {

template <typename F>
SuperMatrix map_entries(const SuperMatrix& m, F f) {
  SuperMatrix out(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) out(i, j) = f(m(i, j));
  }
  return out;
}

}  // namespace

SuperMatrix SuperMatrix::twist() const {
  return map_entries(*this, [](const Superfield& f) { return f.twist(); });
}

Superfield SuperMatrix::trace() const {
  require_same_size(rows_, cols_, "trace");
  Superfield acc;
  for (int i = 0; i < rows_; ++i) acc += (*this)(i, i);
  return acc;
}

SuperMatrix SuperMatrix::x_derivative(Dir dir) const {
  return map_entries(*this, [dir](const Superfield& f) { return f.x_derivative(dir); });
}

SuperMatrix SuperMatrix::super_derivative(Dir dir) const {
  return map_entries(*this, [dir](const Superfield& f) { return f.super_derivative(dir); });
}

SuperMatrix SuperMatrix::berezin(int generator) const {
  return map_entries(*this, [generator](const Superfield& f) { return f.berezin(generator); });
}

SuperMatrix SuperMatrix::times_theta(Dir dir) const {
  return map_entries(*this, [dir](const Superfield& f) { return f.times_theta(dir); });
}

SuperMatrix SuperMatrix::extract_theta(ThetaPart part) const {
  return map_entries(*this, [part](const Superfield& f) { return f.extract_theta(part); });
}

SuperMatrix SuperMatrix::substitute_theta(const GrassmannElement& e) const {
  return map_entries(*this, [&e](const Superfield& f) { return f.substitute_theta(e); });
}

SuperMatrix SuperMatrix::truncated(int order) const {
  return map_entries(*this, [order](const Superfield& f) { return f.truncated(order); });
}

bool SuperMatrix::is_even() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const Superfield& f) { return f.is_even(); });
}

bool SuperMatrix::is_odd() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const Superfield& f) { return f.is_odd(); });
}

bool operator==(const SuperMatrix& a, const SuperMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
  for (std::size_t k = 0; k < a.entries_.size(); ++k) {
    if (!(a.entries_[k] - b.entries_[k]).is_zero()) return false;
  }
  return true;
}

SuperMatrix commutator(const SuperMatrix& a, const SuperMatrix& b) { return a * b - b * a; }

SuperMatrix anticommutator(const SuperMatrix& a, const SuperMatrix& b) { return a * b + b * a; }

Superfield determinant(const SuperMatrix& a) {
  require_same_size(a.rows(), a.cols(), "determinant");
  int n = a.rows();
  if (n > 6) throw Error(ErrorCode::kDimensionTooLarge, "determinant supports N <= 6");
  if (!a.is_even()) {
    throw Error(ErrorCode::kParity, "determinant needs even (commuting) entries");
  }
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Superfield acc;
  do {
    int inversions = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        if (perm[i] > perm[j]) ++inversions;
      }
    }
    Superfield prod = a(perm[0], 0);
    for (int j = 1; j < n && !prod.is_zero(); ++j) prod = prod * a(perm[j], j);
    acc += (inversions & 1) ? -prod : prod;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return acc;
}

Superfield su_inner(const SuperMatrix& a, const SuperMatrix& b) {
  require_same_size(a.rows(), b.rows(), "su_inner");
  require_same_size(a.cols(), b.cols(), "su_inner");
  require_same_size(a.rows(), a.cols(), "su_inner");
  Superfield acc;
  for (int i = 0; i < a.rows(); ++i) {
    for (int k = 0; k < a.cols(); ++k) acc += a(i, k) * b(k, i);
  }
  return GaussianRational(mpq_class(-1, 2)) * acc;
}

SuperMatrix outer_projector(const SuperVector& z) {
  Superfield inv = inner(z, z).invert_even();
  return outer(z, z) * inv;
}

}  // namespace scpn
