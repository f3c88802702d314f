#pragma once

#include <cstddef>
#include <vector>

#include "scpn/superfield.hpp"

namespace scpn {

class SuperMatrix;

// Column vector of superfields.
class SuperVector {
 public:
  SuperVector() = default;
  explicit SuperVector(std::vector<Superfield> entries) : entries_(std::move(entries)) {}
  static SuperVector unit(SpacePtr space, int order, int n, int k);

  int size() const { return static_cast<int>(entries_.size()); }
  const Superfield& operator[](int i) const { return entries_.at(i); }
  Superfield& operator[](int i) { return entries_.at(i); }
  const std::vector<Superfield>& entries() const { return entries_; }

  bool is_zero() const;
  int order() const;

  SuperVector& operator+=(const SuperVector& o);
  SuperVector& operator-=(const SuperVector& o);
  friend SuperVector operator+(SuperVector a, const SuperVector& b) { return a += b; }
  friend SuperVector operator-(SuperVector a, const SuperVector& b) { return a -= b; }
  // Scalar on the left multiplies each entry from the left.
  friend SuperVector operator*(const Superfield& c, const SuperVector& v);
  friend SuperVector operator*(const SuperVector& v, const Superfield& c);

  SuperVector super_derivative(Dir dir) const;
  SuperVector extract_theta(ThetaPart part) const;

 private:
  std::vector<Superfield> entries_;
};

// sum_i (v_i)^dagger w_i.
Superfield inner(const SuperVector& v, const SuperVector& w);
// v (x) w^dagger, i.e. entries v_i (w_j)^dagger.
SuperMatrix outer(const SuperVector& v, const SuperVector& w);

// Dense square or rectangular matrix over superfields, row-major.
class SuperMatrix {
 public:
  SuperMatrix() = default;
  SuperMatrix(int rows, int cols);
  static SuperMatrix identity(SpacePtr space, int order, int n);
  static SuperMatrix constant(SpacePtr space, int order,
                              const std::vector<std::vector<GaussianRational>>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const Superfield& operator()(int i, int j) const { return entries_.at(i * cols_ + j); }
  Superfield& operator()(int i, int j) { return entries_.at(i * cols_ + j); }

  bool is_zero() const;
  int order() const;
  // Lexicographically first nonzero entry, or "0".
  std::string leading_term() const;

  SuperMatrix& operator+=(const SuperMatrix& o);
  SuperMatrix& operator-=(const SuperMatrix& o);
  SuperMatrix operator-() const;
  friend SuperMatrix operator+(SuperMatrix a, const SuperMatrix& b) { return a += b; }
  friend SuperMatrix operator-(SuperMatrix a, const SuperMatrix& b) { return a -= b; }
  friend SuperMatrix operator*(const SuperMatrix& a, const SuperMatrix& b);
  friend SuperVector operator*(const SuperMatrix& a, const SuperVector& v);
  friend SuperMatrix operator*(const Superfield& c, const SuperMatrix& a);
  friend SuperMatrix operator*(const SuperMatrix& a, const Superfield& c);
  friend SuperMatrix operator*(const GaussianRational& c, const SuperMatrix& a);

  SuperMatrix dagger() const;
  SuperMatrix twist() const;
  Superfield trace() const;
  SuperMatrix x_derivative(Dir dir) const;
  SuperMatrix super_derivative(Dir dir) const;
  SuperMatrix berezin(int generator) const;
  SuperMatrix times_theta(Dir dir) const;
  SuperMatrix extract_theta(ThetaPart part) const;
  SuperMatrix substitute_theta(const GrassmannElement& e) const;
  SuperMatrix truncated(int order) const;
  bool is_even() const;
  bool is_odd() const;

  friend bool operator==(const SuperMatrix& a, const SuperMatrix& b);

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Superfield> entries_;
};

SuperMatrix commutator(const SuperMatrix& a, const SuperMatrix& b);
SuperMatrix anticommutator(const SuperMatrix& a, const SuperMatrix& b);

// Leibniz expansion with factors in ascending column order; N <= 6 and all
// entries even.
Superfield determinant(const SuperMatrix& a);

// <A, B> = -1/2 Tr(AB).
Superfield su_inner(const SuperMatrix& a, const SuperMatrix& b);

// z z^dagger / |z|^2.
SuperMatrix outer_projector(const SuperVector& z);

}  // namespace scpn
