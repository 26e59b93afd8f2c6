#pragma once

#include <optional>
#include <string>
#include <vector>

#include "laurent.hpp"

namespace greenform {

// Rim data of a ZA-infinity quiver component: the self pairing of a rim
// object and optionally its pairing against the rim of a second component.
// The self form must be palindromic with nonnegative coefficients and
// constant term >= 1; violations throw Error(InvalidRim).
class RimData {
 public:
  explicit RimData(LaurentPoly self_form,
                   std::optional<LaurentPoly> cross_form = std::nullopt);

  const LaurentPoly& self_form() const { return self_form_; }
  const std::optional<LaurentPoly>& cross_form() const { return cross_form_; }
  Int a(long i) const { return self_form_.coeff(i); }

 private:
  LaurentPoly self_form_;
  std::optional<LaurentPoly> cross_form_;
};

// sigma_m * bar(sigma_n) * <C_0, D_0>^t for objects at distances m and n from
// the rims of two different components. Throws Error(MissingCrossForm).
LaurentPoly cross_component_form(const RimData& r, long m, long n);

// Same-component pairing at distances m and n: the closed form
// sigma_m * bar(sigma_n) * (self - (1+t)(1-t^mu)/(1-t^(mu+1))), mu = max(m,n),
// computed in Q(t) and reduced exactly.
LaurentPoly same_component_form(const RimData& r, long m, long n);

// Same value obtained from the apex recurrence
//   0 = (1+t) s_{n-1} - t s_n - s_{n-2}
// seeded by s_0 and s_1, with Hermitian transport to raise the first index.
LaurentPoly same_component_recurrence(const RimData& r, long m, long n);

// Cross-component pairing from the same recurrence (no correction term).
LaurentPoly cross_component_recurrence(const RimData& r, long m, long n);

// Symbolic object of a ZA-infinity component: distance from the rim + shift.
struct SymObject {
  int distance = 0;
  long shift = 0;
};

struct SymTriangle {
  SymObject x;
  std::vector<SymObject> y;
  SymObject z;
};

// AR triangles C_n[-1] -> C_{n+1}[-1] + C_{n-1} -> C_n for 0 <= n < depth;
// at the rim (n = 0) the middle term is the single summand C_1[-1].
std::vector<SymTriangle> component_triangles(int depth);

// Constant term of the self pairing at distance m, evaluated by the rim
// coefficient formula sum_j (m+1-|j|) a_j - 2m.
Int endo_constant_term(const RimData& r, long m);

struct BrickRow {
  long m = 0;
  Int endo_dim;      // constant term of <C_m, C_m>^t
  bool dim2 = false;  // a_0 = 2 and a_i = 0 for 0 < |i| <= m
};

struct BrickScan {
  std::vector<BrickRow> rows;
  bool simple_projective_stalk = false;  // a_0 = 1
  // Nonzero coefficient of t marks an object that cannot lie on the rim;
  // reported, not decided.
  bool rim_consistent = true;
};

BrickScan brick_strip_scan(const RimData& r, long max_m);

}  // namespace greenform
