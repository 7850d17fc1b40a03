// Command-line front end: catalog data, verification claims, central charges,
// free-field images and element display.

#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "wick/catalog.hpp"
#include "wick/error.hpp"
#include "wick/report.hpp"
#include "wick/specfile.hpp"

using namespace wick;

namespace {

constexpr int kExitVerifyFail = 1;
constexpr int kExitInput = 2;
constexpr int kExitInternal = 3;

Datum resolve_datum(const std::string& name) {
  if (is_builtin(name)) return builtin_datum(name);
  return load_datum(name);
}

std::string latex_wrap(const std::string& body) {
  return "\\documentclass{article}\n\\begin{document}\n$" + body + "$\n\\end{document}\n";
}

void emit_expr(const Context& cx, const VAExpr& e, Format fmt, const std::string& tag) {
  if (fmt == Format::Json) {
    std::cout << "{\"element\":\"" << tag << "\",\"value\":\""
              << render_expr(cx, e, Format::Text) << "\"}" << std::endl;
  } else if (fmt == Format::Latex) {
    std::cout << latex_wrap(render_expr(cx, e, Format::Latex));
  } else {
    std::cout << render_expr(cx, e, Format::Text) << std::endl;
  }
}

struct ElementRef {
  std::string tag;    // d, Jf, L, Lg, Lch, Lne, W1, W2, J, Jhat0, Jhalf, centralizer
  std::string arg;    // basis name or centralizer label
};

ElementRef parse_element(const std::string& s) {
  auto colon = s.find(':');
  if (colon == std::string::npos) return {s, ""};
  return {s.substr(0, colon), s.substr(colon + 1)};
}

int show_element(const Datum& dt, const std::string& spec, Format fmt) {
  ElementRef ref = parse_element(spec);
  const Context& cx = dt.ctx;
  if (ref.tag == "d") {
    emit_expr(cx, dt.d, fmt, spec);
  } else if (ref.tag == "Jf") {
    emit_expr(cx, J_f(dt), fmt, spec);
  } else if (ref.tag == "L" || ref.tag == "Lg" || ref.tag == "Lch" || ref.tag == "Lne") {
    Virasoro v = L_total(dt);
    const VAExpr& e = ref.tag == "L" ? v.L : ref.tag == "Lg" ? v.Lg : ref.tag == "Lch" ? v.Lch : v.Lne;
    emit_expr(cx, e, fmt, spec);
  } else if (ref.tag == "W1") {
    emit_expr(cx, witness1(dt), fmt, spec);
  } else if (ref.tag == "W2") {
    emit_expr(cx, witness2(dt), fmt, spec);
  } else if (ref.tag == "J") {
    int i = dt.alg->index_of(ref.arg);
    if (i < 0) fail(Errc::BadArgument, "no basis element named '" + ref.arg + "'");
    emit_expr(cx, J_current(dt, dt.alg->basis_vec(static_cast<size_t>(i))), fmt, spec);
  } else if (ref.tag == "Jhat0" || ref.tag == "Jhalf") {
    const Vec* v = dt.centralizer_element(ref.arg);
    if (!v) fail(Errc::BadArgument, "no centralizer element labeled '" + ref.arg + "'");
    emit_expr(cx, ref.tag == "Jhat0" ? J_hat0(dt, *v) : J_half(dt, *v), fmt, spec);
  } else if (ref.tag == "centralizer") {
    for (const auto& [label, v] : dt.gf0)
      std::cout << label << " = " << dt.alg->describe(v) << "   (degree 0)\n";
    for (const auto& [label, v] : dt.gf_half)
      std::cout << label << " = " << dt.alg->describe(v) << "   (degree -1/2)\n";
  } else {
    fail(Errc::BadArgument, "unknown element tag '" + ref.tag + "'");
  }
  return 0;
}

void emit_report(const Report& rep, Format fmt, bool timings) {
  if (fmt == Format::Json)
    std::cout << report_to_json(rep, timings);
  else if (fmt == Format::Latex)
    std::cout << report_to_latex(rep);
  else
    std::cout << report_to_text(rep);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verifier for quantum affine W-algebra complexes"};
  app.require_subcommand(1);

  std::string format = "text";
  uint64_t seed = 0;
  bool timings = false;
  app.add_option("--format", format, "output format: text, json or latex")
      ->check(CLI::IsMember({"text", "json", "latex"}));
  app.add_option("--seed", seed, "seed for the randomized property suites");
  app.add_flag("--timings", timings, "include wall times in JSON reports");

  std::string datum_name, claim = "all", element, k_value;

  auto* check = app.add_subcommand("check", "validate a datum and check d squared = 0");
  check->add_option("datum", datum_name)->required();

  auto* verify = app.add_subcommand("verify", "verify named claims");
  verify->add_option("datum", datum_name)->required();
  verify->add_option("--claim", claim,
                     "thm3.1, thm3.2, cor3.1, ope2.10, ope2.15, ope2.18, identities or all");

  auto* cc = app.add_subcommand("central-charge", "central charge, symbolic or at a level");
  cc->add_option("datum", datum_name)->required();
  cc->add_option("--k", k_value, "rational level to evaluate at");

  auto* ffr_cmd = app.add_subcommand("ffr", "free-field image of a closed element");
  ffr_cmd->add_option("datum", datum_name)->required();
  ffr_cmd->add_option("--element", element, "L, Jhat0:<label> or Jhalf:<label>")->required();

  auto* show = app.add_subcommand("show", "print a named element");
  show->add_option("datum", datum_name)->required();
  show->add_option("--element", element,
                   "d, Jf, L, Lg, Lch, Lne, W1, W2, J:<basis>, Jhat0:<label>, Jhalf:<label>, "
                   "centralizer")
      ->required();

  for (CLI::App* sub : {check, verify, cc, ffr_cmd, show}) sub->fallthrough();

  CLI11_PARSE(app, argc, argv);
  Format fmt = parse_format(format);

  try {
    Datum dt = resolve_datum(datum_name);
    if (check->parsed()) {
      Report rep = run_claims(dt, {"check"}, seed, 0);
      emit_report(rep, fmt, timings);
      return rep.all_ok() ? 0 : kExitVerifyFail;
    }
    if (verify->parsed()) {
      Report rep = run_claims(dt, {claim}, seed, 0);
      emit_report(rep, fmt, timings);
      return rep.all_ok() ? 0 : kExitVerifyFail;
    }
    if (cc->parsed()) {
      CheckResult cross = verify_central_charge(dt);
      if (!cross.ok) {
        std::cerr << "internal mismatch: " << cross.note << "\n";
        return kExitInternal;
      }
      RatFunK c = central_charge_ope(dt);
      if (!k_value.empty()) {
        Rational v = c.eval(Rational::parse(k_value));
        std::cout << v.str() << std::endl;
      } else if (fmt == Format::Latex) {
        std::cout << latex_wrap(render_scalar(c, Format::Latex));
      } else {
        std::cout << c.str() << std::endl;
      }
      return 0;
    }
    if (ffr_cmd->parsed()) {
      ElementRef ref = parse_element(element);
      VAExpr image;
      if (ref.tag == "L") {
        if (dt.mode != Mode::Standard)
          fail(Errc::BadArgument, "the free-field image of L needs the standard mode");
        image = ffr(dt, J_f(dt)) * (-(Scalar(1) / dt.level_shift()));
      } else if (ref.tag == "Jhat0" || ref.tag == "Jhalf") {
        const Vec* v = dt.centralizer_element(ref.arg);
        if (!v) fail(Errc::BadArgument, "no centralizer element labeled '" + ref.arg + "'");
        image = ffr(dt, ref.tag == "Jhat0" ? J_hat0(dt, *v) : J_half(dt, *v));
      } else {
        fail(Errc::BadArgument, "ffr elements are L, Jhat0:<label> or Jhalf:<label>");
      }
      emit_expr(dt.ffr_ctx, image, fmt, element);
      return 0;
    }
    if (show->parsed()) return show_element(dt, element, fmt);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == Errc::Mismatch ? kExitInternal : kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInternal;
  }
  return 0;
}
