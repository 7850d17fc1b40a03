#pragma once

#include <map>
#include <memory>
#include <string>

#include "wick/expr.hpp"
#include "wick/superalgebra.hpp"

namespace wick {

/// Generator signature and seed lambda-brackets for one enveloping vertex
/// algebra. The full complex has currents on all of g, charged fermions on
/// S_{>0} and neutral fermions on S_{1/2}; the free-field target keeps
/// currents on g_0 (with a shifted current form) and the neutral fermions.
/// Immutable after construction, safe to share between threads.
class Context {
 public:
  Context() = default;  // empty; assign from a factory before use

  /// Currents on all of g with [a_lambda b] = [a,b] + lambda k (a|b).
  static Context main_complex(std::shared_ptr<const SuperAlgebra> alg, Grading gr,
                              DualBases duals);
  /// Currents on the listed indices with lambda-coefficient form B;
  /// optionally no charged fermions (free-field side).
  static Context reduced(std::shared_ptr<const SuperAlgebra> alg, Grading gr, DualBases duals,
                         std::vector<size_t> currents, std::vector<std::vector<Scalar>> B,
                         bool with_charged);

  const SuperAlgebra& alg() const { return *alg_; }
  const Grading& grading() const { return gr_; }
  const DualBases& duals() const { return duals_; }
  size_t dim() const { return alg_->dim(); }
  const std::vector<size_t>& current_set() const { return currents_; }
  bool has_charged() const { return with_charged_; }

  bool valid(Generator g) const;
  int parity(Generator g) const;
  int charge(Generator g) const;
  Rational weight(Generator g) const;  // conformal weight, without derivatives

  int parity(const Monomial& m) const;
  int charge(const Monomial& m) const;
  Rational weight(const Monomial& m) const;

  /// Seed bracket of two generators (zero across distinct families).
  const LambdaPoly& gen_bracket(Generator a, Generator b) const;

  /// All generators of this signature, in a fixed order.
  std::vector<Generator> generators() const;

  // Element builders; all results are in normal form.
  VAExpr current(const Vec& v) const;
  VAExpr current(size_t i) const;
  VAExpr phi(size_t i) const;          // phi_i, i in S_{>0}
  VAExpr phi_up(size_t i) const;       // phi^i
  VAExpr phi_of(const Vec& v) const;   // phi_{p_{>0} v}
  VAExpr neutral(size_t i) const;      // Phi_i, i in S_{1/2}
  VAExpr neutral_of(const Vec& v) const;   // Phi_{p_{1/2} v}
  VAExpr neutral_dual(size_t a) const;     // Phi^i for i = grading().half[a]
  VAExpr vacuum(const Scalar& c = Scalar(1)) const { return VAExpr::vacuum(c); }

  std::string gen_name(Generator g, bool latex = false) const;

 private:
  void build_table();

  std::shared_ptr<const SuperAlgebra> alg_;
  Grading gr_;
  DualBases duals_;
  std::vector<size_t> currents_;
  std::vector<bool> current_mask_;
  bool with_charged_ = true;
  std::vector<std::vector<Scalar>> B_;  // lambda-coefficient of current brackets
  std::shared_ptr<const std::map<std::pair<Generator, Generator>, LambdaPoly>> table_;
};

}  // namespace wick
