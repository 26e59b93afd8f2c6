#include <random>

#include "doctest.h"
#include "errors.hpp"
#include "oracle.hpp"
#include "tform.hpp"

using namespace greenform;

namespace {

LaurentPoly L(const std::string& s) { return LaurentPoly::parse(s); }

RatFun random_scalar(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> exp(-3, 3);
  std::uniform_int_distribution<int> coeff(-4, 4);
  LaurentPoly num, den;
  for (int i = 0; i < 3; ++i) num += LaurentPoly::term(coeff(rng), exp(rng));
  while (den.is_zero())
    den = LaurentPoly::term(coeff(rng), exp(rng)) + LaurentPoly::one();
  return RatFun(num, den);
}

}  // namespace

TEST_CASE("objects canonicalize into the extended group") {
  CategoryPresentation d = dual_numbers_component(2);
  TElement m3 = t_object(d, d.parse_ref("C0[3]"));
  REQUIRE(m3.coeffs().size() == 1);
  CHECK(std::get<RatFun>(m3.coeffs().begin()->second) == RatFun(L("t^3")));
  CHECK(t_object(d, d.parse_ref("C0")) ==
        t_object(d, ObjectRef{0, 0}));

  CategoryPresentation u = uniserial_category(5);
  TElement v = t_object(u, u.parse_ref("V1V4[1]"));
  REQUIRE(v.coeffs().size() == 1);
  CHECK(std::get<TElement::CyclicVec>(v.coeffs().begin()->second) ==
        TElement::CyclicVec{0, 1});
  // t^2 = 1 on a period-2 orbit
  CHECK(t_object(u, ObjectRef{0, 3}) == t_object(u, ObjectRef{0, 1}));
}

TEST_CASE("the form returns stored hom polynomials on representatives") {
  CategoryPresentation d = dual_numbers_component(2);
  TElement c0 = t_object(d, d.parse_ref("C0"));
  TElement c1 = t_object(d, d.parse_ref("C1"));
  CHECK(t_form(d, c0, c0) == RatFun(L("2")));
  CHECK(t_form(d, c1, c1) == RatFun(L("t^-1 + 2 + t")));
  CHECK(t_form(d, c0, c1) == RatFun(L("t^-1 + 1")));
}

TEST_CASE("the form is refused without hypothesis 4.2") {
  CategoryPresentation u = uniserial_category(5);
  TElement v = t_object(u, u.parse_ref("V1V4"));
  try {
    t_form(u, v, v);
    FAIL("expected Hypothesis42Required");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Hypothesis42Required);
  }
}

TEST_CASE("shift rules") {
  CategoryPresentation d = dual_numbers_component(2);
  std::mt19937_64 rng(4711);
  std::uniform_int_distribution<long> shift(-5, 5);
  for (int a = 0; a < d.orbit_count(); ++a) {
    for (int b = 0; b < d.orbit_count(); ++b) {
      TElement m = t_object(d, ObjectRef{a, 0});
      TElement n = t_object(d, ObjectRef{b, 0});
      RatFun base = t_form(d, m, n);
      for (int trial = 0; trial < 8; ++trial) {
        long j = shift(rng);
        RatFun tj(L("t").shifted(j - 1));  // t^j
        CHECK(t_form(d, t_object(d, ObjectRef{a, j}), n) == tj * base);
        CHECK(t_form(d, m, t_object(d, ObjectRef{b, j})) == tj.bar() * base);
      }
    }
  }
}

TEST_CASE("sesquilinearity with rational scalars") {
  CategoryPresentation d = dual_numbers_component(2);
  std::mt19937_64 rng(31337);
  TElement x1 = t_object(d, d.parse_ref("C0"));
  TElement x2 = t_object(d, d.parse_ref("C1[2]"));
  TElement y = t_object(d, d.parse_ref("C2[-1]"));
  for (int trial = 0; trial < 40; ++trial) {
    RatFun a1 = random_scalar(rng), a2 = random_scalar(rng);
    TElement combo =
        t_add(d, t_scale(d, a1, x1), t_scale(d, a2, x2));
    CHECK(t_form(d, combo, y) ==
          a1 * t_form(d, x1, y) + a2 * t_form(d, x2, y));
    CHECK(t_form(d, y, combo) ==
          a1.bar() * t_form(d, y, x1) + a2.bar() * t_form(d, y, x2));
  }
}

TEST_CASE("torsion coefficients only admit polynomial scalars") {
  CategoryPresentation u = uniserial_category(5);
  TElement v = t_object(u, u.parse_ref("V1V4"));
  CHECK_THROWS_AS(t_scale(u, RatFun(L("1"), L("1 + t")), v), Error);
  // Polynomial scalars act cyclically: t^2 acts as the identity.
  CHECK(t_scale(u, RatFun(L("t^2")), v) == v);
}

TEST_CASE("dual elements pair as a dual basis") {
  CategoryPresentation d = dual_numbers_component(5);
  REQUIRE(d.triangles().size() == 5);
  RatFun one = RatFun::one();
  for (int n = 0; n <= 4; ++n) {
    const ARTriangle& tr = d.triangles()[static_cast<std::size_t>(n)];
    TElement dual = dual_element(d, tr);
    for (int m = 0; m <= 4; ++m) {
      TElement cm = t_object(d, ObjectRef{m, 0});
      RatFun right = t_form(d, cm, dual);
      RatFun left = t_form(d, dual, cm);
      if (m == n) {
        CHECK(right == one);
        CHECK(left == one);
      } else {
        CHECK(right.is_zero());
        CHECK(left.is_zero());
      }
    }
  }
}

TEST_CASE("raw triangle pairings") {
  CategoryPresentation d = dual_numbers_component(3);
  const ARTriangle& tr0 = d.triangles()[0];  // Z = C0
  TElement zh = z_hat_t(d, tr0);
  CHECK(t_form(d, t_object(d, d.parse_ref("C0")), zh) == RatFun(L("1 + t")));
  CHECK(t_form(d, t_object(d, d.parse_ref("C2")), zh).is_zero());
  CHECK(t_form(d, zh, t_object(d, tr0.x)) == RatFun(L("1 + t")));
  CHECK(t_form(d, zh, t_object(d, d.parse_ref("C0"))) ==
        RatFun(L("1 + t^-1")));
}

TEST_CASE("duality verification and its negative control") {
  CategoryPresentation d = dual_numbers_component(3);
  for (const ARTriangle& tr : d.triangles())
    CHECK(verify_duality(d, tr).ok());

  CategoryPresentation corrupted = d;
  corrupted.set_hom(1, 1, L("t^-1 + 3 + t"));
  bool violated = false;
  for (const ARTriangle& tr : corrupted.triangles())
    violated = violated || !verify_duality(corrupted, tr).ok();
  CHECK(violated);

  CHECK_THROWS_AS(verify_duality(uniserial_category(5),
                                 uniserial_category(5).triangles()[0]),
                  Error);
}

TEST_CASE("Hermitian check on tables") {
  CHECK(hermitian_check(dual_numbers_component(3)).ok());
  CHECK(hermitian_check(uniserial_category(6)).ok());

  CategoryPresentation skew = CategoryPresentation::parse(
      "category skew\nflag hypothesis-4.2 true\norbit A period inf\n"
      "orbit B period inf\nhom A A : 1\nhom B B : 1\n"
      "hom A B : t\nhom B A : t\n");
  HermitianReport r = hermitian_check(skew);
  CHECK(!r.ok());
  CHECK(r.failures.size() == 2);

  CategoryPresentation palindromic = CategoryPresentation::parse(
      "category pal\nflag hypothesis-4.2 true\norbit A period inf\n"
      "hom A A : t^-1 + 2 + t\n");
  CHECK(hermitian_check(palindromic).ok());
}

TEST_CASE("specialization at t = -1") {
  CategoryPresentation d = dual_numbers_component(3);
  TElement c0 = t_object(d, d.parse_ref("C0"));
  TElement c1 = t_object(d, d.parse_ref("C1"));
  CHECK(euler_specialization(d, c0, c0) == 2);
  CHECK(euler_specialization(d, c1, c1) == 0);
  // The specialization cannot see the dual elements.
  for (const ARTriangle& tr : d.triangles())
    CHECK(euler_specialization(d, t_object(d, tr.z), z_hat_t(d, tr)) == 0);
}

TEST_CASE("orbit module structure") {
  OrbitStructure u = orbit_structure(uniserial_category(5));
  CHECK(u.qt_dimension == 0);
  REQUIRE(u.lines.size() == 2);
  CHECK(u.lines[0] == "V1V4: torsion Z[t,t^-1]/(t^2 - 1)");

  OrbitStructure d = orbit_structure(dual_numbers_component(2));
  CHECK(d.qt_dimension == 3);
  CHECK(d.lines[0] == "C0: free of rank 1 over Z[t,t^-1]");

  CHECK(orbit_structure(CategoryPresentation::parse("category e\n"))
            .qt_dimension == 0);
}

TEST_CASE("element rendering") {
  CategoryPresentation d = dual_numbers_component(2);
  TElement dual = dual_element(d, d.triangles()[0]);
  CHECK(dual.str(d) == "(1) C0 + ((-1)/(1 + t)) C1");
  CHECK(TElement().str(d) == "0");
  CHECK(!dual.is_polynomial());
  CHECK(z_hat_t(d, d.triangles()[0]).is_polynomial());
}
