#pragma once

#include <optional>
#include <vector>

#include "wick/polyk.hpp"
#include "wick/rational.hpp"

namespace wick {

using Vec = std::vector<Rational>;

Vec vec_zero(size_t n);
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scale(const Vec& a, const Rational& c);
bool vec_is_zero(const Vec& a);

/// Dense exact matrix over Q. Small dimensions only (catalog algebras are <= 16-dim).
class Mat {
 public:
  Mat() = default;
  Mat(size_t rows, size_t cols) : r_(rows), c_(cols), a_(rows * cols, Rational(0)) {}
  static Mat identity(size_t n);

  size_t rows() const { return r_; }
  size_t cols() const { return c_; }
  Rational& at(size_t i, size_t j) { return a_[i * c_ + j]; }
  const Rational& at(size_t i, size_t j) const { return a_[i * c_ + j]; }

  Mat operator*(const Mat& b) const;
  Mat operator+(const Mat& b) const;
  Mat operator-(const Mat& b) const;
  Mat scale(const Rational& c) const;
  Vec apply(const Vec& v) const;
  Mat transpose() const;
  bool is_zero() const;
  friend bool operator==(const Mat& a, const Mat& b) {
    return a.r_ == b.r_ && a.c_ == b.c_ && a.a_ == b.a_;
  }

  /// Reduced row echelon form in place; returns pivot column indices.
  std::vector<size_t> rref();
  size_t rank() const;
  std::optional<Mat> inverse() const;
  /// Basis of the right nullspace, deterministic (free columns in order).
  std::vector<Vec> nullspace() const;
  /// Solve A x = b exactly; nullopt if inconsistent (least-norm not attempted).
  std::optional<Vec> solve(const Vec& b) const;

  /// Minimal polynomial of a square matrix (monic, over Q).
  PolyK min_poly() const;

 private:
  size_t r_ = 0, c_ = 0;
  std::vector<Rational> a_;
};

}  // namespace wick
