#pragma once

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "category.hpp"
#include "ratfun.hpp"

namespace greenform {

// Element of the shift-extended Grothendieck group. Per orbit, the
// coefficient lives in Q(t) for an infinite orbit and in Z[t,t^-1]/(t^n - 1)
// (a vector of length n indexed by exponent) for an orbit of period n.
// An object M[i] is held as t^i times the orbit representative.
class TElement {
 public:
  using CyclicVec = std::vector<Int>;
  using Coeff = std::variant<RatFun, CyclicVec>;

  TElement() = default;

  const std::map<int, Coeff>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  // True when every coefficient lies in Z[t,t^-1]; dual elements usually
  // do not.
  bool is_polynomial() const;
  bool operator==(const TElement& o) const;

  std::string str(const CategoryPresentation& p) const;

  // Construction and arithmetic live below as free functions carrying the
  // presentation, which knows each orbit's kind.
  friend TElement t_object(const CategoryPresentation& p, const ObjectRef& r);
  friend TElement t_add(const CategoryPresentation& p, TElement a,
                        const TElement& b);
  friend TElement t_sub(const CategoryPresentation& p, TElement a,
                        const TElement& b);
  friend TElement t_scale(const CategoryPresentation& p, const RatFun& c,
                          const TElement& x);

 private:
  std::map<int, Coeff> coeffs_;
  void accumulate(const CategoryPresentation& p, int orbit, const Coeff& c,
                  bool negate);
};

TElement t_object(const CategoryPresentation& p, const ObjectRef& r);
TElement t_add(const CategoryPresentation& p, TElement a, const TElement& b);
TElement t_sub(const CategoryPresentation& p, TElement a, const TElement& b);
TElement t_scale(const CategoryPresentation& p, const RatFun& c,
                 const TElement& x);

// The sesquilinear form: linear in x, semilinear (t -> t^-1) in y. Requires
// the hypothesis-4.2 flag; throws Error(Hypothesis42Required) otherwise.
RatFun t_form(const CategoryPresentation& p, const TElement& x,
              const TElement& y);

// Z + X - Y of a triangle inside the extended group.
TElement z_hat_t(const CategoryPresentation& p, const ARTriangle& tr);

// The dual element attached to an AR triangle: pairing any object against it
// divides the plain z_hat pairing by (1+t), so it is right-dual to Z and
// left-dual to X with value exactly 1. Requires hypothesis 4.2.
TElement dual_element(const CategoryPresentation& p, const ARTriangle& tr);

struct DualityReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

// Checks <M, z_hat> = (1+t) at M = Z and 0 on other orbits, and
// <z_hat, M> = (1+t) at M = X (equivalently (1+t^-1) at X[1]) and 0 on
// other orbits.
DualityReport verify_duality(const CategoryPresentation& p,
                             const ARTriangle& tr);

struct HermitianReport {
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

// Verifies hom(A,B) = bar(hom(B,A)) over all stored orbit pairs (cyclically
// for finite windows). Table-level, so it applies whether or not the
// presentation satisfies hypothesis 4.2.
HermitianReport hermitian_check(const CategoryPresentation& p);

// Value of the form at t = -1; the coefficients must reduce to Laurent
// polynomials. Requires hypothesis 4.2.
Int euler_specialization(const CategoryPresentation& p, const TElement& x,
                         const TElement& y);

struct OrbitStructure {
  std::vector<std::string> lines;  // one description per orbit
  int qt_dimension = 0;            // number of infinite orbits
};

OrbitStructure orbit_structure(const CategoryPresentation& p);

}  // namespace greenform
