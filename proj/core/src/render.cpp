#include "wick/render.hpp"

#include <algorithm>

#include "wick/error.hpp"

namespace wick {

Format parse_format(const std::string& s) {
  if (s == "text") return Format::Text;
  if (s == "json") return Format::Json;
  if (s == "latex") return Format::Latex;
  fail(Errc::BadArgument, "unknown format '" + s + "' (expected text, json or latex)");
}

namespace {

std::string latex_poly(const PolyK& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int d = p.degree(); d >= 0; --d) {
    Rational c = p.coeff(d);
    if (c.is_zero()) continue;
    if (out.empty()) {
      if (c.sign() < 0) out += "-";
    } else {
      out += (c.sign() < 0) ? " - " : " + ";
    }
    Rational a = c.abs();
    std::string cs = a.is_integer() ? a.num_str() : "\\tfrac{" + a.num_str() + "}{" + a.den_str() + "}";
    if (d == 0) {
      out += cs;
    } else {
      if (!a.is_one()) out += cs;
      out += (d == 1) ? "k" : ("k^{" + std::to_string(d) + "}");
    }
  }
  return out;
}

std::string scalar_str(const Scalar& c, Format f) {
  if (f == Format::Latex) {
    if (c.is_polynomial()) return latex_poly(c.num());
    return "\\frac{" + latex_poly(c.num()) + "}{" + latex_poly(c.den()) + "}";
  }
  return c.str();
}

std::string factor_str(const Context& ctx, const Factor& fac, Format f) {
  std::string g = ctx.gen_name(fac.gen, f == Format::Latex);
  if (fac.der == 0) return g;
  if (f == Format::Latex)
    return (fac.der == 1 ? "\\partial " : "\\partial^{" + std::to_string(fac.der) + "}") + g;
  if (fac.der == 1) return "∂" + g;
  return "∂^" + std::to_string(fac.der) + g;
}

std::string monomial_str(const Context& ctx, const Monomial& m, Format f) {
  if (m.is_vacuum()) return "1";
  if (m.size() == 1) return factor_str(ctx, m[0], f);
  std::string out = ":";
  for (size_t i = 0; i < m.size(); ++i) {
    if (i) out += " ";
    out += factor_str(ctx, m[i], f);
  }
  out += ":";
  return out;
}

}  // namespace

std::string render_scalar(const Scalar& c, Format f) { return scalar_str(c, f); }

std::string render_expr(const Context& ctx, const VAExpr& e, Format f) {
  if (e.is_zero()) return "0";
  std::vector<std::pair<const Monomial*, const Scalar*>> terms;
  for (const auto& [m, c] : e.terms()) terms.push_back({&m, &c});
  std::stable_sort(terms.begin(), terms.end(), [&](const auto& a, const auto& b) {
    Rational wa = ctx.weight(*a.first), wb = ctx.weight(*b.first);
    if (wa != wb) return wa < wb;
    return *a.first < *b.first;
  });
  std::string out;
  for (const auto& [m, c] : terms) {
    // pull the sign out of the coefficient so sums read naturally
    bool neg = c->leading_sign() < 0;
    Scalar a = neg ? -*c : *c;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    std::string ms = monomial_str(ctx, *m, f);
    if (m->is_vacuum()) {
      std::string cs = scalar_str(a, f);
      bool wrap = neg && !a.is_constant() && a.is_polynomial() && a.num().str().find(' ') != std::string::npos;
      out += wrap ? "(" + cs + ")" : cs;
      continue;
    }
    if (a.is_one()) {
      out += ms;
      continue;
    }
    std::string cs = scalar_str(a, f);
    bool simple = a.is_constant() || (f == Format::Latex);
    if (!simple && a.is_polynomial()) cs = "(" + cs + ")";
    if (f == Format::Latex) {
      out += cs + (ms[0] == ':' ? "" : " ") + ms;
    } else {
      out += cs + (ms[0] == ':' ? "" : "*") + ms;
    }
  }
  return out;
}

std::string render_lambda(const Context& ctx, const LambdaPoly& p, Format f) {
  if (p.is_zero()) return "0";
  std::string lam = (f == Format::Latex) ? "\\lambda" : "λ";
  std::string out;
  for (int n = 0; n <= p.degree(); ++n) {
    if (p.coeff(n).is_zero()) continue;
    // divided powers to plain lambda powers
    Rational invfact(1);
    for (int i = 2; i <= n; ++i) invfact = invfact / Rational(i);
    VAExpr e = p.coeff(n) * Scalar(invfact);
    std::string es = render_expr(ctx, e, f);
    if (!out.empty()) out += " + ";
    if (n == 0) {
      out += es;
      continue;
    }
    std::string pw = (n == 1) ? lam : lam + (f == Format::Latex ? "^{" + std::to_string(n) + "}"
                                                                : "^" + std::to_string(n));
    if (e.term_count() > 1)
      out += "(" + es + ")" + pw;
    else if (es == "1")
      out += pw;
    else
      out += es + (f == Format::Latex ? " " : "*") + pw;
  }
  return out;
}

}  // namespace wick
