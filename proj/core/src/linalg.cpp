#include "wick/linalg.hpp"

#include "wick/error.hpp"

namespace wick {

Vec vec_zero(size_t n) { return Vec(n, Rational(0)); }

Vec vec_add(const Vec& a, const Vec& b) {
  Vec r(a);
  for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Vec vec_sub(const Vec& a, const Vec& b) {
  Vec r(a);
  for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

Vec vec_scale(const Vec& a, const Rational& c) {
  Vec r(a);
  for (auto& x : r) x *= c;
  return r;
}

bool vec_is_zero(const Vec& a) {
  for (const auto& x : a)
    if (!x.is_zero()) return false;
  return true;
}

Mat Mat::identity(size_t n) {
  Mat m(n, n);
  for (size_t i = 0; i < n; ++i) m.at(i, i) = Rational(1);
  return m;
}

Mat Mat::operator*(const Mat& b) const {
  Mat r(r_, b.c_);
  for (size_t i = 0; i < r_; ++i)
    for (size_t k = 0; k < c_; ++k) {
      const Rational& aik = at(i, k);
      if (aik.is_zero()) continue;
      for (size_t j = 0; j < b.c_; ++j) {
        if (b.at(k, j).is_zero()) continue;
        r.at(i, j) += aik * b.at(k, j);
      }
    }
  return r;
}

Mat Mat::operator+(const Mat& b) const {
  Mat r(*this);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] += b.a_[i];
  return r;
}

Mat Mat::operator-(const Mat& b) const {
  Mat r(*this);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] -= b.a_[i];
  return r;
}

Mat Mat::scale(const Rational& c) const {
  Mat r(*this);
  for (auto& x : r.a_) x *= c;
  return r;
}

Vec Mat::apply(const Vec& v) const {
  Vec r(r_, Rational(0));
  for (size_t i = 0; i < r_; ++i)
    for (size_t j = 0; j < c_; ++j)
      if (!at(i, j).is_zero() && !v[j].is_zero()) r[i] += at(i, j) * v[j];
  return r;
}

Mat Mat::transpose() const {
  Mat r(c_, r_);
  for (size_t i = 0; i < r_; ++i)
    for (size_t j = 0; j < c_; ++j) r.at(j, i) = at(i, j);
  return r;
}

bool Mat::is_zero() const {
  for (const auto& x : a_)
    if (!x.is_zero()) return false;
  return true;
}

std::vector<size_t> Mat::rref() {
  std::vector<size_t> pivots;
  size_t row = 0;
  for (size_t col = 0; col < c_ && row < r_; ++col) {
    size_t p = row;
    while (p < r_ && at(p, col).is_zero()) ++p;
    if (p == r_) continue;
    if (p != row)
      for (size_t j = 0; j < c_; ++j) std::swap(at(p, j), at(row, j));
    Rational inv = at(row, col).inv();
    for (size_t j = 0; j < c_; ++j) at(row, j) *= inv;
    for (size_t i = 0; i < r_; ++i) {
      if (i == row || at(i, col).is_zero()) continue;
      Rational f = at(i, col);
      for (size_t j = 0; j < c_; ++j) at(i, j) -= f * at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

size_t Mat::rank() const {
  Mat m(*this);
  return m.rref().size();
}

std::optional<Mat> Mat::inverse() const {
  if (r_ != c_) return std::nullopt;
  Mat aug(r_, 2 * c_);
  for (size_t i = 0; i < r_; ++i) {
    for (size_t j = 0; j < c_; ++j) aug.at(i, j) = at(i, j);
    aug.at(i, c_ + i) = Rational(1);
  }
  auto piv = aug.rref();
  if (piv.size() != r_ || piv.back() >= c_) return std::nullopt;
  Mat inv(r_, c_);
  for (size_t i = 0; i < r_; ++i)
    for (size_t j = 0; j < c_; ++j) inv.at(i, j) = aug.at(i, c_ + j);
  return inv;
}

std::vector<Vec> Mat::nullspace() const {
  Mat m(*this);
  auto piv = m.rref();
  std::vector<bool> is_pivot(c_, false);
  for (size_t p : piv) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (size_t col = 0; col < c_; ++col) {
    if (is_pivot[col]) continue;
    Vec v(c_, Rational(0));
    v[col] = Rational(1);
    for (size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -m.at(i, col);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vec> Mat::solve(const Vec& b) const {
  Mat aug(r_, c_ + 1);
  for (size_t i = 0; i < r_; ++i) {
    for (size_t j = 0; j < c_; ++j) aug.at(i, j) = at(i, j);
    aug.at(i, c_) = b[i];
  }
  auto piv = aug.rref();
  if (!piv.empty() && piv.back() == c_) return std::nullopt;  // inconsistent
  Vec x(c_, Rational(0));
  for (size_t i = 0; i < piv.size(); ++i) x[piv[i]] = aug.at(i, c_);
  return x;
}

PolyK Mat::min_poly() const {
  if (r_ != c_) fail(Errc::BadArgument, "minimal polynomial of a non-square matrix");
  size_t n = r_;
  // Stack I, M, M^2, ... as rows until linearly dependent; the first dependence
  // gives the minimal polynomial coefficients.
  std::vector<Mat> powers;
  powers.push_back(Mat::identity(n));
  for (size_t d = 1;; ++d) {
    powers.push_back(powers.back() * (*this));
    Mat sys(n * n, d);
    for (size_t p = 0; p < d; ++p)
      for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) sys.at(i * n + j, p) = powers[p].at(i, j);
    Vec rhs(n * n, Rational(0));
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) rhs[i * n + j] = -powers[d].at(i, j);
    if (auto sol = sys.solve(rhs)) {
      std::vector<Rational> coeffs(*sol);
      coeffs.push_back(Rational(1));
      return PolyK(std::move(coeffs));
    }
    if (d > n) fail(Errc::Mismatch, "minimal polynomial search exceeded dimension");
  }
}

}  // namespace wick
