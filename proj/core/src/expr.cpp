#include "wick/expr.hpp"

namespace wick {

Monomial Monomial::with_front(const Factor& f) const {
  std::vector<Factor> fs;
  fs.reserve(f_.size() + 1);
  fs.push_back(f);
  fs.insert(fs.end(), f_.begin(), f_.end());
  return Monomial(std::move(fs));
}

bool Monomial::is_sorted() const {
  for (size_t i = 1; i < f_.size(); ++i)
    if (f_[i] < f_[i - 1]) return false;
  return true;
}

size_t Monomial::count(GenKind k) const {
  size_t n = 0;
  for (const auto& f : f_)
    if (f.gen.kind == k) ++n;
  return n;
}

VAExpr VAExpr::vacuum(const Scalar& c) {
  VAExpr e;
  e.add_term(Monomial::vacuum(), c);
  return e;
}

VAExpr VAExpr::term(Monomial m, Scalar c) {
  VAExpr e;
  e.add_term(m, c);
  return e;
}

Scalar VAExpr::coeff(const Monomial& m) const {
  auto it = t_.find(m);
  return it == t_.end() ? Scalar(0) : it->second;
}

void VAExpr::add_term(const Monomial& m, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = t_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
  }
}

VAExpr& VAExpr::operator+=(const VAExpr& o) {
  for (const auto& [m, c] : o.t_) add_term(m, c);
  return *this;
}

VAExpr& VAExpr::operator-=(const VAExpr& o) {
  for (const auto& [m, c] : o.t_) add_term(m, -c);
  return *this;
}

VAExpr VAExpr::operator-() const {
  VAExpr r;
  for (const auto& [m, c] : t_) r.t_.emplace(m, -c);
  return r;
}

VAExpr VAExpr::operator*(const Scalar& c) const {
  VAExpr r;
  if (c.is_zero()) return r;
  for (const auto& [m, x] : t_) {
    Scalar y = x * c;
    if (!y.is_zero()) r.t_.emplace(m, std::move(y));
  }
  return r;
}

LambdaPoly LambdaPoly::constant(VAExpr e) {
  LambdaPoly p;
  p.set_coeff(0, std::move(e));
  return p;
}

bool LambdaPoly::is_zero() const {
  for (const auto& e : c_)
    if (!e.is_zero()) return false;
  return true;
}

int LambdaPoly::degree() const { return static_cast<int>(c_.size()) - 1; }

const VAExpr& LambdaPoly::coeff(int n) const {
  static const VAExpr kZero;
  if (n < 0 || n >= static_cast<int>(c_.size())) return kZero;
  return c_[static_cast<size_t>(n)];
}

void LambdaPoly::set_coeff(int n, VAExpr e) {
  if (n >= static_cast<int>(c_.size())) {
    if (e.is_zero()) return;
    c_.resize(static_cast<size_t>(n) + 1);
  }
  c_[static_cast<size_t>(n)] = std::move(e);
  trim();
}

void LambdaPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

LambdaPoly& LambdaPoly::operator+=(const LambdaPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

LambdaPoly LambdaPoly::operator-() const {
  LambdaPoly r;
  r.c_.reserve(c_.size());
  for (const auto& e : c_) r.c_.push_back(-e);
  return r;
}

LambdaPoly LambdaPoly::operator*(const Scalar& s) const {
  LambdaPoly r;
  if (s.is_zero()) return r;
  r.c_.reserve(c_.size());
  for (const auto& e : c_) r.c_.push_back(e * s);
  r.trim();
  return r;
}

}  // namespace wick
