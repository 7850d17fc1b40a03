// Acceptance suite: one line per criterion, every check an exact symbolic
// zero-test over Q(k). Exit status is the number of failed criteria.

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>
#include <vector>

#include "wick/catalog.hpp"
#include "wick/render.hpp"
#include "wick/specfile.hpp"

using namespace wick;

namespace {

constexpr uint64_t kSeed = 20250811;

struct Criterion {
  int id;
  std::string what;
  double budget_s;
  std::function<bool(std::ostream&)> run;
};

std::vector<Datum> load_catalog() {
  std::vector<Datum> data;
  for (const auto& name : builtin_names()) data.push_back(builtin_datum(name));
  return data;
}

bool expect(std::ostream& log, const std::string& where, const CheckResult& r) {
  if (!r.ok) log << "    " << where << ": " << r.note << "\n";
  return r.ok;
}

}  // namespace

int main(int argc, char** argv) {
  uint64_t seed = kSeed;
  if (argc > 1) seed = std::strtoull(argv[1], nullptr, 10);
  std::vector<Datum> data = load_catalog();
  auto minimal_trio = [&]() {
    std::vector<const Datum*> out;
    for (const auto& dt : data)
      if (dt.name == "sl3-minimal" || dt.name == "sl4-minimal" || dt.name == "sl21-minimal")
        out.push_back(&dt);
    return out;
  };

  std::vector<Criterion> criteria;

  criteria.push_back({1,
                      "lambda-calculus soundness (skew, Jacobi, sesquilinearity, Wick, "
                      "quasi-associative contractions) on all generators plus 100 seeded "
                      "composites per datum",
                      60.0,
                      [&](std::ostream& log) {
                        bool ok = true;
                        for (const auto& dt : data) {
                          ok &= expect(log, dt.name + " soundness",
                                       verify_lambda_soundness(dt, seed, 100));
                          for (const char* id : {"5.6", "5.7", "5.8"})
                            ok &= expect(log, dt.name + " " + id, verify_identity(dt, id, seed));
                        }
                        return ok;
                      }});

  criteria.push_back({2, "the differential squares to zero on all 7 data", 120.0,
                      [&](std::ostream& log) {
                        bool ok = true;
                        for (const auto& dt : data)
                          ok &= expect(log, dt.name, check_d_squared(dt));
                        return ok;
                      }});

  criteria.push_back({3,
                      "closed forms of the differential match term-by-term on every "
                      "generator and every dressed basis current",
                      60.0,
                      [&](std::ostream& log) {
                        bool ok = true;
                        for (const auto& dt : data)
                          ok &= expect(log, dt.name, verify_d0_closed_forms(dt));
                        return ok;
                      }});

  criteria.push_back({4,
                      "operator families: dressed-current brackets on compatible pairs, "
                      "the weight-one closed family with its level form, and the mixed "
                      "family, on the three minimal entries",
                      120.0,
                      [&](std::ostream& log) {
                        bool ok = true;
                        for (const Datum* dt : minimal_trio()) {
                          ok &= expect(log, dt->name + " currents", verify_ope_current(*dt));
                          ok &= expect(log, dt->name + " weight-one", verify_ope_gf0(*dt));
                          ok &= expect(log, dt->name + " mixed", verify_ope_mixed(*dt));
                        }
                        return ok;
                      }});

  criteria.push_back({5,
                      "the weight-2 element is closed on all 7 data (gl22-principal via "
                      "its modified element)",
                      600.0,
                      [&](std::ostream& log) {
                        bool ok = true;
                        for (const auto& dt : data) ok &= expect(log, dt.name, verify_thm31(dt));
                        return ok;
                      }});

  criteria.push_back({6,
                      "the exactness witness identity holds exactly on all 7 data, with k "
                      "in place of the shifted level for gl22-principal",
                      600.0,
                      [&](std::ostream& log) {
                        bool ok = true;
                        for (const auto& dt : data) ok &= expect(log, dt.name, verify_thm32(dt));
                        return ok;
                      }});

  criteria.push_back(
      {7,
       "central charges: the closed formula equals the lambda^3 extraction everywhere; "
       "sl2-principal gives 1 - 6(k+1)^2/(k+2) vanishing at k = -1/2; the gl22 modified "
       "Sugawara vector has no central term",
       120.0,
       [&](std::ostream& log) {
         bool ok = true;
         for (const auto& dt : data) ok &= expect(log, dt.name, verify_central_charge(dt));
         const Datum& sl2 = data[0];
         RatFunK want =
             RatFunK(1) - RatFunK(PolyK::parse("6*k^2 + 12*k + 6"), PolyK::parse("k + 2"));
         if (central_charge_ope(sl2) != want || want.eval(Rational(-1, 2)) != Rational(0)) {
           log << "    sl2-principal value mismatch\n";
           ok = false;
         }
         const Datum& gl22 = data.back();
         VAExpr lg = L_total(gl22).Lg;
         if (lambda_bracket(gl22.ctx, lg, lg).degree() > 1) {
           log << "    gl22-principal modified Sugawara has a central term\n";
           ok = false;
         }
         return ok;
       }});

  criteria.push_back(
      {8,
       "free-field images match the displayed formulas on sl3-minimal and sl21-minimal; "
       "sl2-principal reproduces the Cartan specialization; minimal entries satisfy "
       "rho_{>0} = (hvee - 1) x",
       120.0,
       [&](std::ostream& log) {
         bool ok = true;
         for (const auto& dt : data) {
           if (dt.name == "sl3-minimal" || dt.name == "sl21-minimal")
             ok &= expect(log, dt.name + " images", verify_cor31(dt));
           if (dt.name.find("minimal") != std::string::npos) {
             if (dt.rho.rho_pos != vec_scale(dt.alg->x, dt.hvee() - Rational(1))) {
               log << "    " << dt.name << ": rho_{>0} != (hvee-1) x\n";
               ok = false;
             }
           }
         }
         // sl2: image of L against the Cartan free-field specialization
         const Datum& sl2 = data[0];
         const Context& fx = sl2.ffr_ctx;
         VAExpr got = ffr(sl2, J_f(sl2)) * (-(Scalar(1) / sl2.level_shift()));
         VAExpr expect_img;
         for (size_t j : sl2.grading.zero)
           expect_img += nprod(fx, fx.current(sl2.duals.dual[j]), fx.current(j)) *
                         (Scalar(Rational(1, 2)) / sl2.level_shift());
         expect_img += derive(fx, fx.current(sl2.alg->x));
         expect_img -= derive(fx, fx.current(*sl2.rho.rho)) * (Scalar(1) / sl2.level_shift());
         if (got != expect_img) {
           log << "    sl2-principal: free-field image of L mismatch\n";
           ok = false;
         }
         return ok;
       }});

  criteria.push_back({9, "the identity catalog verifies on every applicable datum", 300.0,
                      [&](std::ostream& log) {
                        bool ok = true;
                        for (const auto& dt : data) {
                          for (const std::string& id : identity_catalog(dt)) {
                            if (id == "va.soundness") continue;  // criterion 1
                            ok &= expect(log, dt.name + " " + id,
                                         verify_identity(dt, id, seed));
                          }
                          ok &= expect(log, dt.name + " charge extraction",
                                       verify_central_charge(dt));
                        }
                        return ok;
                      }});

  criteria.push_back(
      {10,
       "fault injection: a single corrupted structure constant in sl3-minimal is caught "
       "with a nonzero residual",
       60.0,
       [&](std::ostream& log) {
         SuperAlgebra g = builtin_algebra("sl3-minimal");
         size_t e12 = static_cast<size_t>(g.index_of("e12"));
         size_t e13 = static_cast<size_t>(g.index_of("e13"));
         g.brk[e12][e13][e13] = Rational(1);
         MakeOptions opts;
         opts.run_validate = false;
         Datum bad = make_datum(std::move(g), opts);
         CheckResult r = check_d_squared(bad);
         if (r.ok || r.residual.is_zero()) {
           log << "    corrupted datum passed silently\n";
           return false;
         }
         return true;
       }});

  int failures = 0;
  for (const auto& c : criteria) {
    std::ostringstream log;
    auto t0 = std::chrono::steady_clock::now();
    bool ok = c.run(log);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool in_budget = secs < c.budget_s;
    bool pass = ok && in_budget;
    std::cout << (pass ? "[PASS]" : "[FAIL]") << " criterion " << c.id << " (" << secs
              << "s / budget " << c.budget_s << "s): " << c.what << "\n";
    if (!ok) std::cout << log.str();
    if (!in_budget) std::cout << "    exceeded the time budget\n";
    if (!pass) ++failures;
  }
  return failures;
}
