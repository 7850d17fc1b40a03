#include <doctest.h>

#include <random>

#include "wick/error.hpp"
#include "wick/ratfunk.hpp"

using namespace wick;

TEST_CASE("rational parse/format round-trips exactly") {
  for (const char* s : {"0", "7", "-3", "7/3", "-22/7", "123456789012345678901/2"}) {
    Rational r = Rational::parse(s);
    CHECK(r.str() == s);
  }
  CHECK(Rational::parse("4/6").str() == "2/3");
  CHECK(Rational::parse("-0").str() == "0");
  CHECK_THROWS_AS(Rational::parse("1/0"), Error);
  CHECK_THROWS_AS(Rational::parse("a"), Error);
  CHECK_THROWS_AS(Rational(1, 0), Error);
}

TEST_CASE("polynomial parse/format and arithmetic") {
  PolyK p = PolyK::parse("k^2 + 2*k - 3/4");
  CHECK(p.degree() == 2);
  CHECK(p.str() == "k^2 + 2*k - 3/4");
  CHECK(PolyK::parse(p.str()) == p);
  CHECK(PolyK::parse("-k").str() == "-k");
  CHECK(PolyK::parse("2k") == PolyK::parse("2*k"));
  CHECK((PolyK::k() * PolyK::k()).str() == "k^2");
  CHECK(PolyK::gcd(PolyK::parse("k^2 - 1"), PolyK::parse("k - 1")).str() == "k - 1");
  auto [q, r] = PolyK::divmod(PolyK::parse("k^3 + 1"), PolyK::parse("k + 1"));
  CHECK(q.str() == "k^2 - k + 1");
  CHECK(r.is_zero());
}

TEST_CASE("rational function normalization") {
  // (2k+2)/(2k+4) -> (k+1)/(k+2)
  RatFunK a(PolyK::parse("2*k + 2"), PolyK::parse("2*k + 4"));
  CHECK(a.num().str() == "k + 1");
  CHECK(a.den().str() == "k + 2");
  // zero numerator -> 0/1
  RatFunK z(PolyK{}, PolyK::parse("k^3 + 1"));
  CHECK(z.is_zero());
  CHECK(z.den().is_one());
  // (k^2-1)/(k-1) -> k+1
  RatFunK c(PolyK::parse("k^2 - 1"), PolyK::parse("k - 1"));
  CHECK(c.is_polynomial());
  CHECK(c.num().str() == "k + 1");
  CHECK_THROWS_AS(RatFunK(PolyK::parse("k"), PolyK{}), Error);
  // idempotence of normalization
  RatFunK again(c.num(), c.den());
  CHECK(again == c);
}

TEST_CASE("rational function arithmetic examples") {
  RatFunK kp1_over_kp2(PolyK::parse("k + 1"), PolyK::parse("k + 2"));
  RatFunK one_over_kp2(PolyK(Rational(1)), PolyK::parse("k + 2"));
  CHECK((kp1_over_kp2 + one_over_kp2).is_one());
  CHECK((RatFunK::k() * RatFunK::k().inv()).is_one());
  CHECK((RatFunK::k() - RatFunK::k()).is_zero());
  CHECK_THROWS_AS(RatFunK::k() / RatFunK(0), Error);
}

TEST_CASE("evaluation and poles") {
  // 1 - 6(k+1)^2/(k+2) at k = -1/2 is 0
  RatFunK c = RatFunK(1) - RatFunK(PolyK::parse("6*k^2 + 12*k + 6"), PolyK::parse("k + 2"));
  CHECK(c.eval(Rational(-1, 2)) == Rational(0));
  // critical level: k + 2 at k = -2 as a denominator
  RatFunK crit(PolyK(Rational(1)), PolyK::parse("k + 2"));
  CHECK_THROWS_AS(crit.eval(Rational(-2)), Error);
  CHECK(RatFunK::k().eval(Rational(7, 3)) == Rational(7, 3));
}

TEST_CASE("parse of rational functions round-trips") {
  for (const char* s : {"k + 1", "(k + 1)/(k + 2)", "0", "(k^2 - 1/2)/(k^3 + 2*k)"}) {
    RatFunK f = RatFunK::parse(s);
    CHECK(RatFunK::parse(f.str()) == f);
  }
}

namespace {

RatFunK random_ratfun(std::mt19937_64& rng) {
  auto coef = [&]() { return Rational(static_cast<long>(rng() % 7) - 3); };
  std::vector<Rational> num(1 + rng() % 4), den(1 + rng() % 4);
  for (auto& c : num) c = coef();
  for (auto& c : den) c = coef();
  PolyK d(std::move(den));
  if (d.is_zero()) d = PolyK(Rational(1));
  return RatFunK(PolyK(std::move(num)), d);
}

}  // namespace

TEST_CASE("field axioms on random samples") {
  std::mt19937_64 rng(20240811);
  for (int iter = 0; iter < 200; ++iter) {
    RatFunK a = random_ratfun(rng), b = random_ratfun(rng), c = random_ratfun(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    if (!a.is_zero()) {
      CHECK((a * a.inv()).is_one());
      CHECK(b / a * a == b);
    }
    CHECK((a - a).is_zero());
  }
}

TEST_CASE("evaluation is a homomorphism away from poles") {
  std::mt19937_64 rng(7);
  int done = 0;
  for (int iter = 0; iter < 400 && done < 100; ++iter) {
    RatFunK a = random_ratfun(rng), b = random_ratfun(rng);
    Rational k0(static_cast<long>(rng() % 21) - 10, 1 + static_cast<long>(rng() % 3));
    try {
      Rational va = a.eval(k0), vb = b.eval(k0);
      CHECK((a + b).eval(k0) == va + vb);
      CHECK((a * b).eval(k0) == va * vb);
      CHECK((a - b).eval(k0) == va - vb);
      ++done;
    } catch (const Error&) {
      // hit a pole; resample
    }
  }
  CHECK(done == 100);
}
