#include "wick/calculus.hpp"

#include "wick/error.hpp"

namespace wick {

namespace {

Scalar binom(int n, int k) {
  Rational r(1);
  for (int i = 0; i < k; ++i) r = r * Rational(n - i) / Rational(i + 1);
  return Scalar(r);
}

Scalar inv_factorial(int n) {
  Rational r(1);
  for (int i = 2; i <= n; ++i) r = r / Rational(i);
  return Scalar(r);
}

// lambda * P in divided powers: (lambda P)_m = m * P_{m-1}.
LambdaPoly times_lambda(const LambdaPoly& p) {
  LambdaPoly q;
  for (int n = 0; n <= p.degree(); ++n)
    q.set_coeff(n + 1, p.coeff(n) * Scalar(Rational(n + 1)));
  return q;
}

struct Engine {
  const Context& ctx;

  VAExpr mul_factor_expr(const Factor& a, const VAExpr& x) {
    VAExpr r;
    for (const auto& [m, c] : x.terms()) r += mul_factor(a, m) * c;
    return r;
  }

  VAExpr nprod_expr(const VAExpr& a, const VAExpr& b) {
    VAExpr r;
    for (const auto& [ma, ca] : a.terms())
      for (const auto& [mb, cb] : b.terms()) r += nprod_mono(ma, mb) * (ca * cb);
    return r;
  }

  VAExpr derive_expr(const VAExpr& a) {
    VAExpr r;
    for (const auto& [m, c] : a.terms()) {
      for (size_t i = 0; i < m.size(); ++i) {
        std::vector<Factor> w = m.factors();
        w[i].der += 1;
        r += normalize_word(w) * c;
      }
    }
    return r;
  }

  VAExpr derive_divided_expr(const VAExpr& a, int n) {
    VAExpr r = a;
    for (int i = 0; i < n; ++i) r = derive_expr(r);
    return r * inv_factorial(n);
  }

  VAExpr normalize_word(const std::vector<Factor>& w) {
    VAExpr x = VAExpr::vacuum();
    for (auto it = w.rbegin(); it != w.rend(); ++it) x = mul_factor_expr(*it, x);
    return x;
  }

  LambdaPoly bracket_expr(const VAExpr& a, const VAExpr& b) {
    LambdaPoly r;
    for (const auto& [ma, ca] : a.terms())
      for (const auto& [mb, cb] : b.terms()) r += bracket_mono(ma, mb) * (ca * cb);
    return r;
  }

  // --- normally ordered product ---------------------------------------

  // Insert the single factor a in front of the canonical word N:
  //   :a N: with reordering by quasi-commutativity,
  //   :a (b C): = (-1)^{p(a)p(b)} :b (a C): + :(integral of [a_lambda b]) C:.
  VAExpr mul_factor(const Factor& a, const Monomial& n) {
    if (n.is_vacuum()) return VAExpr::term(Monomial::single(a.gen, a.der), Scalar(1));
    const Factor& b = n[0];
    if (a < b) return VAExpr::term(n.with_front(a), Scalar(1));
    int pa = ctx.parity(a.gen), pb = ctx.parity(b.gen);
    if (a == b) {
      if (pa == 0) return VAExpr::term(n.with_front(a), Scalar(1));
      // repeated odd factor: :a (a C): = 1/2 * correction
      return comm_correction(a, b, n.tail()) * Scalar(Rational(1, 2));
    }
    Monomial tail = n.tail();
    VAExpr inner = mul_factor(a, tail);
    VAExpr swapped = mul_factor_expr(b, inner);
    if (pa && pb) swapped = -swapped;
    return swapped + comm_correction(a, b, tail);
  }

  // :(int_{-del}^0 [a_lambda b] dlambda) C: = sum_n (-1)^n :(del^(n+1) e_n) C:
  VAExpr comm_correction(const Factor& a, const Factor& b, const Monomial& c) {
    LambdaPoly p = factor_bracket(a, b);
    VAExpr r;
    VAExpr cexpr = VAExpr::term(c, Scalar(1));
    for (int n = 0; n <= p.degree(); ++n) {
      if (p.coeff(n).is_zero()) continue;
      VAExpr dcoeff = derive_divided_expr(p.coeff(n), n + 1);
      VAExpr term = nprod_expr(dcoeff, cexpr);
      r += (n % 2) ? -term : term;
    }
    return r;
  }

  // ::a M'. N: via quasi-associativity:
  //   ::a B: C: = :a (B C): + :(int_0^del a)[B_lambda C]:
  //             + (-1)^{p(a)p(B)} :(int_0^del B)[a_lambda C]:
  VAExpr nprod_mono(const Monomial& m, const Monomial& n) {
    if (m.is_vacuum()) return VAExpr::term(n, Scalar(1));
    if (n.is_vacuum()) return VAExpr::term(m, Scalar(1));
    Factor a = m[0];
    if (m.size() == 1) return mul_factor(a, n);
    Monomial rest = m.tail();
    VAExpr t1 = mul_factor_expr(a, nprod_mono(rest, n));

    VAExpr r = t1;
    LambdaPoly pb = bracket_mono(rest, n);
    for (int j = 0; j <= pb.degree(); ++j) {
      if (pb.coeff(j).is_zero()) continue;
      VAExpr da = VAExpr::term(Monomial::single(a.gen, static_cast<uint16_t>(a.der + j + 1)),
                               inv_factorial(j + 1));
      r += nprod_expr(da, pb.coeff(j));
    }
    LambdaPoly pa = factor_bracket_mono(a, n);
    int sign = (ctx.parity(a.gen) && ctx.parity(rest)) ? -1 : 1;
    VAExpr rest_expr = VAExpr::term(rest, Scalar(1));
    for (int j = 0; j <= pa.degree(); ++j) {
      if (pa.coeff(j).is_zero()) continue;
      VAExpr db = derive_divided_expr(rest_expr, j + 1);
      VAExpr term = nprod_expr(db, pa.coeff(j));
      r += (sign < 0) ? -term : term;
    }
    return r;
  }

  // --- lambda-brackets --------------------------------------------------

  // Seed bracket of two single factors: (-lambda)^{da} (lambda+del)^{db} [g_lambda h].
  LambdaPoly factor_bracket(const Factor& a, const Factor& b) {
    LambdaPoly p = ctx.gen_bracket(a.gen, b.gen);
    if (p.is_zero()) return p;
    for (int i = 0; i < b.der; ++i) p = lambda_plus_del(p);
    for (int i = 0; i < a.der; ++i) p = -times_lambda(p);
    return p;
  }

  LambdaPoly lambda_plus_del(const LambdaPoly& p) {
    LambdaPoly q = times_lambda(p);
    for (int n = 0; n <= p.degree(); ++n) {
      if (p.coeff(n).is_zero()) continue;
      VAExpr d = derive_expr(p.coeff(n));
      if (!d.is_zero()) {
        VAExpr cur = q.coeff(n);
        cur += d;
        q.set_coeff(n, std::move(cur));
      }
    }
    return q;
  }

  // [a_lambda B] for a single factor a, by the Wick formula on the right
  // argument:
  //   [g_lambda :b B':] = :[g_lambda b] B': + (-1)^{p(g)p(b)} :b [g_lambda B']:
  //                      + int_0^lambda [[g_lambda b]_mu B'] dmu.
  LambdaPoly factor_bracket_mono(const Factor& a, const Monomial& b) {
    if (b.is_vacuum()) return {};
    if (b.size() == 1) return factor_bracket(a, b[0]);
    Factor head = b[0];
    Monomial rest = b.tail();
    VAExpr rest_expr = VAExpr::term(rest, Scalar(1));

    LambdaPoly r;
    LambdaPoly ph = factor_bracket(a, head);
    for (int n = 0; n <= ph.degree(); ++n)
      if (!ph.coeff(n).is_zero()) {
        LambdaPoly t;
        t.set_coeff(n, nprod_expr(ph.coeff(n), rest_expr));
        r += t;
      }

    LambdaPoly pr = factor_bracket_mono(a, rest);
    int sign = (ctx.parity(a.gen) && ctx.parity(head.gen)) ? -1 : 1;
    VAExpr head_expr = VAExpr::term(Monomial::single(head.gen, head.der), Scalar(1));
    for (int n = 0; n <= pr.degree(); ++n)
      if (!pr.coeff(n).is_zero()) {
        LambdaPoly t;
        VAExpr e = nprod_expr(head_expr, pr.coeff(n));
        if (sign < 0) e = -e;
        t.set_coeff(n, std::move(e));
        r += t;
      }

    // integral term: lambda^(n) lambda^(m+1) = C(n+m+1, n) lambda^(n+m+1)
    for (int n = 0; n <= ph.degree(); ++n) {
      if (ph.coeff(n).is_zero()) continue;
      LambdaPoly inner = bracket_expr(ph.coeff(n), rest_expr);
      for (int m = 0; m <= inner.degree(); ++m)
        if (!inner.coeff(m).is_zero()) {
          LambdaPoly t;
          t.set_coeff(n + m + 1, inner.coeff(m) * binom(n + m + 1, n));
          r += t;
        }
    }
    return r;
  }

  // General [A_lambda B] by the Wick formula on the left argument:
  //   [:a A':_lambda B] = :(e^{del d_lambda} a)[A'_lambda B]:
  //     + (-1)^{p(a)p(A')} :(e^{del d_lambda} A')[a_lambda B]:
  //     + (-1)^{p(a)p(A')} int_0^lambda [A'_mu [a_{lambda-mu} B]] dmu.
  LambdaPoly bracket_mono(const Monomial& a, const Monomial& b) {
    if (a.is_vacuum() || b.is_vacuum()) return {};
    if (a.size() == 1) return factor_bracket_mono(a[0], b);
    Factor head = a[0];
    Monomial rest = a.tail();
    VAExpr rest_expr = VAExpr::term(rest, Scalar(1));
    int sign = (ctx.parity(head.gen) && ctx.parity(rest)) ? -1 : 1;

    LambdaPoly r;
    LambdaPoly pr = bracket_mono(rest, b);  // [A'_lambda B]
    for (int n = 0; n <= pr.degree(); ++n) {
      if (pr.coeff(n).is_zero()) continue;
      for (int k = 0; k <= n; ++k) {
        VAExpr da = VAExpr::term(Monomial::single(head.gen, static_cast<uint16_t>(head.der + k)),
                                 inv_factorial(k));
        LambdaPoly t;
        t.set_coeff(n - k, nprod_expr(da, pr.coeff(n)));
        r += t;
      }
    }

    LambdaPoly ph = factor_bracket_mono(head, b);  // [a_lambda B]
    for (int n = 0; n <= ph.degree(); ++n) {
      if (ph.coeff(n).is_zero()) continue;
      for (int k = 0; k <= n; ++k) {
        VAExpr dr = derive_divided_expr(rest_expr, k);
        VAExpr e = nprod_expr(dr, ph.coeff(n));
        if (sign < 0) e = -e;
        LambdaPoly t;
        t.set_coeff(n - k, std::move(e));
        r += t;
      }
      // integral: [(A')_mu q_n], (lambda-mu)^(n) mu^(m) -> lambda^(n+m+1)
      LambdaPoly inner = bracket_expr(rest_expr, ph.coeff(n));
      for (int m = 0; m <= inner.degree(); ++m)
        if (!inner.coeff(m).is_zero()) {
          VAExpr e = inner.coeff(m);
          if (sign < 0) e = -e;
          LambdaPoly t;
          t.set_coeff(n + m + 1, std::move(e));
          r += t;
        }
    }
    return r;
  }
};

}  // namespace

VAExpr nprod(const Context& ctx, const VAExpr& a, const VAExpr& b) {
  return Engine{ctx}.nprod_expr(a, b);
}

VAExpr derive(const Context& ctx, const VAExpr& a) { return Engine{ctx}.derive_expr(a); }

VAExpr derive_divided(const Context& ctx, const VAExpr& a, int n) {
  return Engine{ctx}.derive_divided_expr(a, n);
}

LambdaPoly lambda_bracket(const Context& ctx, const VAExpr& a, const VAExpr& b) {
  return Engine{ctx}.bracket_expr(a, b);
}

VAExpr nth_product(const Context& ctx, const VAExpr& a, const VAExpr& b, int n) {
  return lambda_bracket(ctx, a, b).coeff(n);
}

VAExpr normalize_word(const Context& ctx, const std::vector<Factor>& word) {
  return Engine{ctx}.normalize_word(word);
}

LambdaPoly sub_minus_lambda_del(const Context& ctx, const LambdaPoly& p) {
  // sum_n (-lambda-del)^(n) e_n with del acting on e_n:
  // contributes (-1)^n lambda^(n-j) del^(j)/j! e_n for 0 <= j <= n.
  LambdaPoly r;
  Engine eng{ctx};
  for (int n = 0; n <= p.degree(); ++n) {
    if (p.coeff(n).is_zero()) continue;
    for (int j = 0; j <= n; ++j) {
      VAExpr e = eng.derive_divided_expr(p.coeff(n), j);
      if (n % 2) e = -e;
      LambdaPoly t;
      t.set_coeff(n - j, std::move(e));
      r += t;
    }
  }
  return r;
}

Lambda2Poly jacobi_residual(const Context& ctx, const VAExpr& a, const VAExpr& b,
                            const VAExpr& c) {
  Engine eng{ctx};
  auto at = [](Lambda2Poly& p, int n, int m) -> VAExpr& {
    if (static_cast<int>(p.size()) <= n) p.resize(n + 1);
    if (static_cast<int>(p[n].size()) <= m) p[n].resize(m + 1);
    return p[n][m];
  };
  Lambda2Poly res;
  // [a_lambda [b_mu c]]
  LambdaPoly bc = eng.bracket_expr(b, c);
  for (int m = 0; m <= bc.degree(); ++m) {
    LambdaPoly abc = eng.bracket_expr(a, bc.coeff(m));
    for (int n = 0; n <= abc.degree(); ++n) at(res, n, m) += abc.coeff(n);
  }
  // -(-1)^{p(a)p(b)} [b_mu [a_lambda c]]
  int sign = (parity_of(ctx, a) && parity_of(ctx, b)) ? 1 : -1;
  LambdaPoly ac = eng.bracket_expr(a, c);
  for (int n = 0; n <= ac.degree(); ++n) {
    LambdaPoly bac = eng.bracket_expr(b, ac.coeff(n));
    for (int m = 0; m <= bac.degree(); ++m) {
      VAExpr e = bac.coeff(m);
      if (sign < 0) e = -e;
      at(res, n, m) += e;
    }
  }
  // -[[a_lambda b]_{lambda+mu} c]; (lambda+mu)^(s) = sum_j lambda^(j) mu^(s-j)
  LambdaPoly ab = eng.bracket_expr(a, b);
  for (int n = 0; n <= ab.degree(); ++n) {
    LambdaPoly abl = eng.bracket_expr(ab.coeff(n), c);
    for (int s = 0; s <= abl.degree(); ++s) {
      if (abl.coeff(s).is_zero()) continue;
      for (int j = 0; j <= s; ++j) {
        // lambda^(n) * lambda^(j) = C(n+j, j) lambda^(n+j)
        at(res, n + j, s - j) -= abl.coeff(s) * binom(n + j, j);
      }
    }
  }
  return res;
}

VAExpr substitute(const Context& src, const Context& dst, const VAExpr& a,
                  const std::map<Generator, VAExpr>& images) {
  Engine eng{dst};
  for (const auto& [g, img] : images) {
    if (!img.is_zero()) {
      int p = parity_of(dst, img);
      if (p != src.parity(g))
        fail(Errc::ParityMismatch, "image of " + src.gen_name(g) + " has wrong parity");
    }
  }
  auto image_of = [&](Generator g) -> VAExpr {
    auto it = images.find(g);
    if (it != images.end()) return it->second;
    if (!dst.valid(g))
      fail(Errc::BadArgument, "generator " + src.gen_name(g) + " has no image in the target");
    return VAExpr::term(Monomial::single(g), Scalar(1));
  };
  VAExpr out;
  for (const auto& [m, c] : a.terms()) {
    VAExpr acc = VAExpr::vacuum();
    for (auto it = m.factors().rbegin(); it != m.factors().rend(); ++it) {
      VAExpr img = image_of(it->gen);
      for (int d = 0; d < it->der; ++d) img = eng.derive_expr(img);
      acc = eng.nprod_expr(img, acc);
    }
    out += acc * c;
  }
  return out;
}

namespace {

template <typename F>
bool homogeneous_value(const Context& ctx, const VAExpr& a, F&& f,
                       decltype(f(std::declval<Monomial>()))* out) {
  bool first = true;
  for (const auto& [m, c] : a.terms()) {
    auto v = f(m);
    if (first) {
      *out = v;
      first = false;
    } else if (!(*out == v)) {
      return false;
    }
  }
  return true;
}

}  // namespace

int charge_of(const Context& ctx, const VAExpr& a) {
  int q = 0;
  if (!homogeneous_value(ctx, a, [&](const Monomial& m) { return ctx.charge(m); }, &q))
    fail(Errc::BadArgument, "expression is not charge homogeneous");
  return q;
}

Rational weight_of(const Context& ctx, const VAExpr& a) {
  Rational w(0);
  if (!homogeneous_value(ctx, a, [&](const Monomial& m) { return ctx.weight(m); }, &w))
    fail(Errc::BadArgument, "expression is not weight homogeneous");
  return w;
}

int parity_of(const Context& ctx, const VAExpr& a) {
  int p = 0;
  if (!homogeneous_value(ctx, a, [&](const Monomial& m) { return ctx.parity(m); }, &p))
    fail(Errc::BadArgument, "expression is not parity homogeneous");
  return p;
}

bool is_weight_homogeneous(const Context& ctx, const VAExpr& a) {
  Rational w(0);
  return homogeneous_value(ctx, a, [&](const Monomial& m) { return ctx.weight(m); }, &w);
}

RawExpr RawExpr::generator(Generator g) {
  RawExpr e;
  e.op = Op::Gen;
  e.gen = g;
  return e;
}

RawExpr RawExpr::vacuum() { return RawExpr{}; }

RawExpr RawExpr::sum(std::vector<RawExpr> xs) {
  RawExpr e;
  e.op = Op::Sum;
  e.kids = std::move(xs);
  return e;
}

RawExpr RawExpr::scale(Scalar c, RawExpr x) {
  RawExpr e;
  e.op = Op::Scale;
  e.factor = std::move(c);
  e.kids.push_back(std::move(x));
  return e;
}

RawExpr RawExpr::der(RawExpr x) {
  RawExpr e;
  e.op = Op::Der;
  e.kids.push_back(std::move(x));
  return e;
}

RawExpr RawExpr::prod(RawExpr a, RawExpr b) {
  RawExpr e;
  e.op = Op::NProd;
  e.kids.push_back(std::move(a));
  e.kids.push_back(std::move(b));
  return e;
}

VAExpr normal_form(const Context& ctx, const RawExpr& e) {
  switch (e.op) {
    case RawExpr::Op::Gen:
      if (!ctx.valid(e.gen)) fail(Errc::BadArgument, "invalid generator in expression tree");
      return VAExpr::term(Monomial::single(e.gen), Scalar(1));
    case RawExpr::Op::Vacuum:
      return VAExpr::vacuum();
    case RawExpr::Op::Sum: {
      VAExpr r;
      for (const auto& k : e.kids) r += normal_form(ctx, k);
      return r;
    }
    case RawExpr::Op::Scale:
      return normal_form(ctx, e.kids[0]) * e.factor;
    case RawExpr::Op::Der:
      return derive(ctx, normal_form(ctx, e.kids[0]));
    case RawExpr::Op::NProd:
      return nprod(ctx, normal_form(ctx, e.kids[0]), normal_form(ctx, e.kids[1]));
  }
  return {};
}

}  // namespace wick
