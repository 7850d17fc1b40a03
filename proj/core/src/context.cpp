#include "wick/context.hpp"

#include "wick/error.hpp"

namespace wick {

Context Context::main_complex(std::shared_ptr<const SuperAlgebra> alg, Grading gr,
                              DualBases duals) {
  Context c;
  c.alg_ = std::move(alg);
  c.gr_ = std::move(gr);
  c.duals_ = std::move(duals);
  size_t n = c.alg_->dim();
  c.currents_.resize(n);
  for (size_t i = 0; i < n; ++i) c.currents_[i] = i;
  c.current_mask_.assign(n, true);
  c.with_charged_ = true;
  c.B_.assign(n, std::vector<Scalar>(n, Scalar(0)));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      c.B_[i][j] = Scalar::k() * Scalar(c.alg_->form.at(i, j));
  c.build_table();
  return c;
}

Context Context::reduced(std::shared_ptr<const SuperAlgebra> alg, Grading gr, DualBases duals,
                         std::vector<size_t> currents, std::vector<std::vector<Scalar>> B,
                         bool with_charged) {
  Context c;
  c.alg_ = std::move(alg);
  c.gr_ = std::move(gr);
  c.duals_ = std::move(duals);
  c.currents_ = std::move(currents);
  c.current_mask_.assign(c.alg_->dim(), false);
  for (size_t i : c.currents_) c.current_mask_[i] = true;
  c.with_charged_ = with_charged;
  c.B_ = std::move(B);
  c.build_table();
  return c;
}

bool Context::valid(Generator g) const {
  if (g.index >= dim()) return false;
  switch (g.kind) {
    case GenKind::Current: return current_mask_[g.index];
    case GenKind::PhiLower:
    case GenKind::PhiUpper:
      return with_charged_ && gr_.deg[g.index].sign() > 0;
    case GenKind::NeutralPhi: return gr_.deg[g.index] == half();
  }
  return false;
}

int Context::parity(Generator g) const {
  int p = alg_->parity[g.index];
  if (g.kind == GenKind::PhiLower || g.kind == GenKind::PhiUpper) p ^= 1;
  return p;
}

int Context::charge(Generator g) const {
  if (g.kind == GenKind::PhiLower) return 1;
  if (g.kind == GenKind::PhiUpper) return -1;
  return 0;
}

Rational Context::weight(Generator g) const {
  switch (g.kind) {
    case GenKind::Current: return Rational(1) - gr_.deg[g.index];
    case GenKind::PhiLower: return Rational(1) - gr_.deg[g.index];
    case GenKind::PhiUpper: return gr_.deg[g.index];
    case GenKind::NeutralPhi: return half();
  }
  return Rational(0);
}

int Context::parity(const Monomial& m) const {
  int p = 0;
  for (const auto& f : m.factors()) p ^= parity(f.gen);
  return p;
}

int Context::charge(const Monomial& m) const {
  int q = 0;
  for (const auto& f : m.factors()) q += charge(f.gen);
  return q;
}

Rational Context::weight(const Monomial& m) const {
  Rational w(0);
  for (const auto& f : m.factors()) w += weight(f.gen) + Rational(f.der);
  return w;
}

void Context::build_table() {
  auto table = std::make_shared<std::map<std::pair<Generator, Generator>, LambdaPoly>>();
  std::vector<Generator> gens;
  for (size_t i : currents_) gens.push_back({GenKind::Current, static_cast<uint16_t>(i)});
  if (with_charged_)
    for (size_t i : gr_.pos) {
      gens.push_back({GenKind::PhiLower, static_cast<uint16_t>(i)});
      gens.push_back({GenKind::PhiUpper, static_cast<uint16_t>(i)});
    }
  for (size_t i : gr_.half) gens.push_back({GenKind::NeutralPhi, static_cast<uint16_t>(i)});

  for (Generator a : gens)
    for (Generator b : gens) {
      LambdaPoly p;
      if (a.kind == GenKind::Current && b.kind == GenKind::Current) {
        const Vec& br = alg_->brk[a.index][b.index];
        VAExpr c0;
        for (size_t k = 0; k < br.size(); ++k)
          if (!br[k].is_zero())
            c0.add_term(Monomial::single({GenKind::Current, static_cast<uint16_t>(k)}),
                        Scalar(br[k]));
        p.set_coeff(0, std::move(c0));
        const Scalar& bform = B_[a.index][b.index];
        if (!bform.is_zero()) p.set_coeff(1, VAExpr::vacuum(bform));
      } else if (a.kind == GenKind::PhiLower && b.kind == GenKind::PhiUpper &&
                 a.index == b.index) {
        p.set_coeff(0, VAExpr::vacuum(Scalar(1)));
      } else if (a.kind == GenKind::PhiUpper && b.kind == GenKind::PhiLower &&
                 a.index == b.index) {
        p.set_coeff(0, VAExpr::vacuum(Scalar(alg_->parity[a.index] ? -1 : 1)));
      } else if (a.kind == GenKind::NeutralPhi && b.kind == GenKind::NeutralPhi) {
        Rational c = alg_->pair(alg_->f, alg_->brk[a.index][b.index]);
        if (!c.is_zero()) p.set_coeff(0, VAExpr::vacuum(Scalar(c)));
      }
      if (!p.is_zero()) table->emplace(std::make_pair(a, b), std::move(p));
    }
  table_ = std::move(table);
}

std::vector<Generator> Context::generators() const {
  std::vector<Generator> gens;
  for (size_t i : currents_) gens.push_back({GenKind::Current, static_cast<uint16_t>(i)});
  if (with_charged_)
    for (size_t i : gr_.pos) {
      gens.push_back({GenKind::PhiLower, static_cast<uint16_t>(i)});
      gens.push_back({GenKind::PhiUpper, static_cast<uint16_t>(i)});
    }
  for (size_t i : gr_.half) gens.push_back({GenKind::NeutralPhi, static_cast<uint16_t>(i)});
  return gens;
}

const LambdaPoly& Context::gen_bracket(Generator a, Generator b) const {
  static const LambdaPoly kZero;
  auto it = table_->find(std::make_pair(a, b));
  return it == table_->end() ? kZero : it->second;
}

VAExpr Context::current(const Vec& v) const {
  VAExpr e;
  for (size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    if (!current_mask_[i])
      fail(Errc::BadArgument, "current " + alg_->basis[i] + " is not in this context");
    e.add_term(Monomial::single({GenKind::Current, static_cast<uint16_t>(i)}), Scalar(v[i]));
  }
  return e;
}

VAExpr Context::current(size_t i) const { return current(alg_->basis_vec(i)); }

VAExpr Context::phi(size_t i) const {
  Generator g{GenKind::PhiLower, static_cast<uint16_t>(i)};
  if (!valid(g)) fail(Errc::BadArgument, "phi_" + alg_->basis[i] + " is not in this context");
  return VAExpr::term(Monomial::single(g), Scalar(1));
}

VAExpr Context::phi_up(size_t i) const {
  Generator g{GenKind::PhiUpper, static_cast<uint16_t>(i)};
  if (!valid(g)) fail(Errc::BadArgument, "phi^" + alg_->basis[i] + " is not in this context");
  return VAExpr::term(Monomial::single(g), Scalar(1));
}

VAExpr Context::phi_of(const Vec& v) const {
  VAExpr e;
  for (size_t i : gr_.pos)
    if (!v[i].is_zero())
      e.add_term(Monomial::single({GenKind::PhiLower, static_cast<uint16_t>(i)}), Scalar(v[i]));
  return e;
}

VAExpr Context::neutral(size_t i) const {
  Generator g{GenKind::NeutralPhi, static_cast<uint16_t>(i)};
  if (!valid(g)) fail(Errc::BadArgument, "Phi_" + alg_->basis[i] + " is not in this context");
  return VAExpr::term(Monomial::single(g), Scalar(1));
}

VAExpr Context::neutral_of(const Vec& v) const {
  VAExpr e;
  for (size_t i : gr_.half)
    if (!v[i].is_zero())
      e.add_term(Monomial::single({GenKind::NeutralPhi, static_cast<uint16_t>(i)}),
                 Scalar(v[i]));
  return e;
}

VAExpr Context::neutral_dual(size_t a) const {
  if (a >= duals_.half_dual.size()) fail(Errc::BadArgument, "neutral dual index out of range");
  return neutral_of(duals_.half_dual[a]);
}

std::string Context::gen_name(Generator g, bool latex) const {
  const std::string& nm = alg_->basis[g.index];
  switch (g.kind) {
    case GenKind::Current: return latex ? nm : nm;
    case GenKind::PhiLower: return latex ? "\\varphi_{" + nm + "}" : "φ_" + nm;
    case GenKind::PhiUpper: return latex ? "\\varphi^{" + nm + "}" : "φ^" + nm;
    case GenKind::NeutralPhi: return latex ? "\\Phi_{" + nm + "}" : "Φ_" + nm;
  }
  return nm;
}

}  // namespace wick
