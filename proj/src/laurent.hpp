#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace greenform {

using Int = boost::multiprecision::cpp_int;

// Element of Z[t, t^-1]. Sparse map exponent -> coefficient; no zero
// coefficient is ever stored, so equality is structural.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  explicit LaurentPoly(const Int& constant);
  explicit LaurentPoly(long constant) : LaurentPoly(Int(constant)) {}

  static LaurentPoly term(const Int& coeff, long exp);
  static LaurentPoly one() { return LaurentPoly(Int(1)); }
  static LaurentPoly t() { return term(1, 1); }
  // sigma(r) = 1 + t + ... + t^r, with sigma(0) = 1.
  static LaurentPoly sigma(long r);

  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const;
  Int coeff(long exp) const;
  long min_exp() const;  // requires a nonzero polynomial
  long max_exp() const;
  const std::map<long, Int>& terms() const { return coeffs_; }
  std::size_t term_count() const { return coeffs_.size(); }

  LaurentPoly bar() const;            // the involution t -> t^-1
  LaurentPoly shifted(long k) const;  // multiply by t^k
  Int eval_minus_one() const;
  // Coefficients summed over exponent classes mod n; n >= 1.
  std::vector<Int> cyclic_reduce(long n) const;
  Int content() const;  // gcd of coefficients, nonnegative

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  LaurentPoly& operator*=(const Int& c);

  bool operator==(const LaurentPoly& o) const { return coeffs_ == o.coeffs_; }
  bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

  // Exact division in Z[t,t^-1]; nullopt when v does not divide u.
  static std::optional<LaurentPoly> divide(const LaurentPoly& u,
                                           const LaurentPoly& v);

  // Grammar: laurent := term (("+"|"-") term)*, term := int | [int] "t" ["^" signed-int].
  // Whitespace is ignored. Throws Error(ParseError) on malformed input.
  static LaurentPoly parse(const std::string& text);
  // Canonical rendering, ascending exponents, e.g. "t^-1 + 2 + t".
  std::string str() const;

 private:
  std::map<long, Int> coeffs_;
  void add_term(long exp, const Int& c);
};

LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b);
LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b);
LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly operator*(const Int& c, LaurentPoly a);

}  // namespace greenform
