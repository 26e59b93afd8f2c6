#include "ratfun.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace greenform {

using boost::multiprecision::cpp_rational;
using boost::multiprecision::denominator;
using boost::multiprecision::gcd;
using boost::multiprecision::numerator;

namespace {

// Dense coefficients of an ordinary polynomial (min exponent shifted to 0).
std::vector<cpp_rational> to_dense(const LaurentPoly& p) {
  long lo = p.min_exp();
  std::vector<cpp_rational> d(static_cast<std::size_t>(p.max_exp() - lo + 1));
  for (const auto& [e, c] : p.terms())
    d[static_cast<std::size_t>(e - lo)] = cpp_rational(c);
  return d;
}

void trim(std::vector<cpp_rational>& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

// Primitive gcd in Z[t] of two nonzero Laurent polynomials considered up to
// t-powers; positive leading coefficient.
LaurentPoly primitive_gcd(const LaurentPoly& a, const LaurentPoly& b) {
  std::vector<cpp_rational> r0 = to_dense(a), r1 = to_dense(b);
  while (!r1.empty()) {
    // r0 mod r1 over Q
    while (r0.size() >= r1.size() && !r0.empty()) {
      cpp_rational q = r0.back() / r1.back();
      std::size_t off = r0.size() - r1.size();
      for (std::size_t i = 0; i < r1.size(); ++i) r0[off + i] -= q * r1[i];
      trim(r0);
    }
    std::swap(r0, r1);
    trim(r1);
  }
  // Scale r0 to a primitive integer polynomial.
  Int lcm_den = 1;
  for (const auto& c : r0) lcm_den = lcm_den / gcd(lcm_den, denominator(c)) * denominator(c);
  LaurentPoly g;
  for (std::size_t i = 0; i < r0.size(); ++i) {
    cpp_rational scaled = r0[i] * lcm_den;
    g += LaurentPoly::term(numerator(scaled), static_cast<long>(i));
  }
  Int cont = g.content();
  if (cont > 1) g = *LaurentPoly::divide(g, LaurentPoly(cont));
  if (g.coeff(g.max_exp()) < 0) g = -g;
  return g;
}

}  // namespace

RatFun::RatFun(const LaurentPoly& num, const LaurentPoly& den)
    : num_(num), den_(den) {
  canonicalize();
}

void RatFun::canonicalize() {
  if (den_.is_zero())
    fail(ErrorCode::DivisionByZero, "zero denominator in Q(t)");
  if (num_.is_zero()) {
    den_ = LaurentPoly::one();
    return;
  }
  // Shift so the denominator has minimal exponent 0 (nonzero constant term).
  long dshift = den_.min_exp();
  den_ = den_.shifted(-dshift);
  num_ = num_.shifted(-dshift);
  // Remove the common polynomial factor. The gcd is primitive with nonzero
  // constant term, so exact division keeps both parts in Z[t,t^-1] and the
  // denominator stays an ordinary polynomial.
  if (!den_.is_one()) {
    LaurentPoly g = primitive_gcd(num_, den_);
    if (g.max_exp() - g.min_exp() > 0) {
      long nmin = num_.min_exp();
      auto qn = LaurentPoly::divide(num_.shifted(-nmin), g);
      auto qd = LaurentPoly::divide(den_, g);
      if (!qn || !qd) fail(ErrorCode::Internal, "inexact gcd reduction");
      num_ = qn->shifted(nmin);
      den_ = *qd;
    }
  }
  // Coprime integer contents.
  Int k = gcd(num_.content(), den_.content());
  if (k > 1) {
    num_ = *LaurentPoly::divide(num_, LaurentPoly(k));
    den_ = *LaurentPoly::divide(den_, LaurentPoly(k));
  }
  if (den_.coeff(den_.max_exp()) < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

LaurentPoly RatFun::to_laurent() const {
  if (!den_.is_one())
    fail(ErrorCode::NotPolynomial,
         "rational function " + str() + " is not a Laurent polynomial");
  return num_;
}

RatFun RatFun::bar() const { return RatFun(num_.bar(), den_.bar()); }

RatFun RatFun::operator-() const {
  RatFun r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFun& RatFun::operator+=(const RatFun& o) {
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ = den_ * o.den_;
  canonicalize();
  return *this;
}

RatFun& RatFun::operator-=(const RatFun& o) {
  num_ = num_ * o.den_ - o.num_ * den_;
  den_ = den_ * o.den_;
  canonicalize();
  return *this;
}

RatFun& RatFun::operator*=(const RatFun& o) {
  num_ = num_ * o.num_;
  den_ = den_ * o.den_;
  canonicalize();
  return *this;
}

RatFun& RatFun::operator/=(const RatFun& o) {
  if (o.is_zero()) fail(ErrorCode::DivisionByZero, "division by zero in Q(t)");
  num_ = num_ * o.den_;
  den_ = den_ * o.num_;
  canonicalize();
  return *this;
}

RatFun operator+(RatFun a, const RatFun& b) { return a += b; }
RatFun operator-(RatFun a, const RatFun& b) { return a -= b; }
RatFun operator*(RatFun a, const RatFun& b) { return a *= b; }
RatFun operator/(RatFun a, const RatFun& b) { return a /= b; }

namespace {

std::string wrap(const LaurentPoly& p) {
  bool simple = p.term_count() == 1 && p.terms().begin()->second > 0;
  return simple ? p.str() : "(" + p.str() + ")";
}

}  // namespace

std::string RatFun::str() const {
  if (den_.is_one()) return num_.str();
  return wrap(num_) + "/" + wrap(den_);
}

}  // namespace greenform
