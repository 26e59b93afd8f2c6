#pragma once

#include <string>

#include "laurent.hpp"

namespace greenform {

// Element of Q(t) held as a reduced fraction of integer Laurent polynomials.
// Canonical form: the denominator is an ordinary polynomial (minimal exponent
// 0) with positive leading coefficient, no polynomial factor is shared with
// the numerator, and the integer contents of numerator and denominator are
// coprime. Equality is structural.
class RatFun {
 public:
  RatFun() : num_(), den_(LaurentPoly::one()) {}
  explicit RatFun(const LaurentPoly& p) : num_(p), den_(LaurentPoly::one()) {}
  explicit RatFun(long constant) : RatFun(LaurentPoly(constant)) {}
  RatFun(const LaurentPoly& num, const LaurentPoly& den);

  static RatFun one() { return RatFun(1); }

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }

  // Exact quotient in Z[t,t^-1]; throws Error(NotPolynomial) otherwise.
  LaurentPoly to_laurent() const;

  RatFun bar() const;
  RatFun operator-() const;
  RatFun& operator+=(const RatFun& o);
  RatFun& operator-=(const RatFun& o);
  RatFun& operator*=(const RatFun& o);
  RatFun& operator/=(const RatFun& o);  // throws Error(DivisionByZero)

  bool operator==(const RatFun& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }
  bool operator!=(const RatFun& o) const { return !(*this == o); }

  std::string str() const;

 private:
  LaurentPoly num_;
  LaurentPoly den_;
  void canonicalize();
};

RatFun operator+(RatFun a, const RatFun& b);
RatFun operator-(RatFun a, const RatFun& b);
RatFun operator*(RatFun a, const RatFun& b);
RatFun operator/(RatFun a, const RatFun& b);

}  // namespace greenform
