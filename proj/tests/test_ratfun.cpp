#include <random>

#include "doctest.h"
#include "errors.hpp"
#include "ratfun.hpp"

using namespace greenform;

namespace {

LaurentPoly L(const std::string& s) { return LaurentPoly::parse(s); }

LaurentPoly random_poly(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> exp(-5, 5);
  std::uniform_int_distribution<int> coeff(-6, 6);
  std::uniform_int_distribution<int> count(0, 4);
  LaurentPoly p;
  int n = count(rng);
  for (int i = 0; i < n; ++i)
    p += LaurentPoly::term(coeff(rng), exp(rng));
  return p;
}

RatFun random_ratfun(std::mt19937_64& rng) {
  LaurentPoly num = random_poly(rng);
  LaurentPoly den;
  while (den.is_zero()) den = random_poly(rng);
  return RatFun(num, den);
}

}  // namespace

TEST_CASE("exact quotients reduce to Laurent polynomials") {
  CHECK(RatFun(L("1 - t^2"), L("1 - t")).to_laurent() == L("1 + t"));
  CHECK(RatFun(L("1 - t^2"), L("1 - t")).is_polynomial());
  RatFun f(L("1 - t^2"), L("1 - t^3"));  // (1+t)(1-t) / (1-t^3)
  CHECK(!f.is_polynomial());
  CHECK_THROWS_AS(f.to_laurent(), Error);
  try {
    f.to_laurent();
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotPolynomial);
  }
}

TEST_CASE("multiplicative inverse") {
  RatFun inv(L("1"), L("1 + t"));
  CHECK((RatFun(L("1 + t")) * inv).is_one());
}

TEST_CASE("division by zero is rejected") {
  CHECK_THROWS_AS(RatFun(L("1"), L("0")), Error);
  RatFun x(L("1 + t"));
  CHECK_THROWS_AS(x /= RatFun(), Error);
}

TEST_CASE("canonical forms make equality structural") {
  CHECK(RatFun(L("2 + 2t"), L("2")) == RatFun(L("1 + t")));
  CHECK(RatFun(L("t^2 + t^3"), L("t")) == RatFun(L("t + t^2")));
  CHECK(RatFun(L("1 - t^2"), L("1 - t")) == RatFun(L("1 + t")));
  CHECK(RatFun(L("-1"), L("-2")) == RatFun(L("1"), L("2")));
  CHECK(RatFun(L("1"), L("t")) == RatFun(L("t^-1")));
  // denominator normalized: ordinary polynomial, positive leading coefficient
  RatFun g(L("1"), L("-t^-1 + 1"));  // 1 / (1 - t^-1) = t/(t - 1)
  CHECK(g.den() == L("-1 + t"));
  CHECK(g.num() == L("t"));
  // common factor across a numerator t-power
  RatFun h(L("t^-3 + t^-2"), L("1 + 2t + t^2"));
  CHECK(h.num() == L("t^-3"));
  CHECK(h.den() == L("1 + t"));
}

TEST_CASE("bar on rational functions") {
  RatFun f(L("1"), L("1 + t"));
  CHECK(f.bar() == RatFun(L("1"), L("1 + t^-1")));
  CHECK(f.bar() == RatFun(L("t"), L("1 + t")));
  std::mt19937_64 rng(7);
  for (int i = 0; i < 100; ++i) {
    RatFun x = random_ratfun(rng);
    CHECK(x.bar().bar() == x);
  }
}

TEST_CASE("field arithmetic") {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 150; ++i) {
    RatFun x = random_ratfun(rng), y = random_ratfun(rng);
    CHECK((x + y) - y == x);
    if (!y.is_zero()) CHECK((x * y) / y == x);
    CHECK(x * (y + RatFun::one()) == x * y + x);
  }
}

TEST_CASE("to_laurent round-trips Laurent polynomials") {
  std::mt19937_64 rng(334);
  for (int i = 0; i < 200; ++i) {
    LaurentPoly p = random_poly(rng);
    CHECK(RatFun(p).to_laurent() == p);
  }
}

TEST_CASE("rendering") {
  CHECK(RatFun(L("1 + t")).str() == "1 + t");
  CHECK(RatFun(L("1"), L("1 + t")).str() == "1/(1 + t)");
  CHECK(RatFun(L("t"), L("1 + t")).str() == "t/(1 + t)");
  CHECK(RatFun(L("-1"), L("1 + t")).str() == "(-1)/(1 + t)");
  CHECK(RatFun(L("1"), L("2")).str() == "1/2");
}
