#include "za.hpp"

#include <algorithm>

#include "errors.hpp"
#include "ratfun.hpp"

namespace greenform {

RimData::RimData(LaurentPoly self_form, std::optional<LaurentPoly> cross_form)
    : self_form_(std::move(self_form)), cross_form_(std::move(cross_form)) {
  if (self_form_ != self_form_.bar())
    fail(ErrorCode::InvalidRim,
         "rim self form must be palindromic (forced by the Hermitian "
         "property)");
  for (const auto& [e, c] : self_form_.terms())
    if (c < 0)
      fail(ErrorCode::InvalidRim, "rim form coefficients must be nonnegative");
  if (cross_form_) {
    for (const auto& [e, c] : cross_form_->terms())
      if (c < 0)
        fail(ErrorCode::InvalidRim,
             "rim form coefficients must be nonnegative");
  }
  if (self_form_.coeff(0) < 1)
    fail(ErrorCode::InvalidRim,
         "rim self form needs constant term >= 1 (the identity endomorphism)");
}

namespace {

LaurentPoly sigma_bar(long n) { return LaurentPoly::sigma(n).bar(); }

void check_distances(long m, long n) {
  if (m < 0 || n < 0)
    fail(ErrorCode::InvalidArgument, "rim distances must be nonnegative");
}

}  // namespace

LaurentPoly cross_component_form(const RimData& r, long m, long n) {
  check_distances(m, n);
  if (!r.cross_form())
    fail(ErrorCode::MissingCrossForm,
         "no cross-component rim pairing was supplied");
  return LaurentPoly::sigma(m) * sigma_bar(n) * *r.cross_form();
}

LaurentPoly same_component_form(const RimData& r, long m, long n) {
  check_distances(m, n);
  long mu = std::max(m, n);
  RatFun self(r.self_form());
  RatFun correction;  // (1+t)(1 - t^mu) / (1 - t^(mu+1)); zero at mu = 0
  if (mu > 0) {
    LaurentPoly one_plus_t = LaurentPoly::one() + LaurentPoly::t();
    LaurentPoly num = one_plus_t * (LaurentPoly::one() - LaurentPoly::term(1, mu));
    LaurentPoly den = LaurentPoly::one() - LaurentPoly::term(1, mu + 1);
    correction = RatFun(num, den);
  }
  RatFun value = RatFun(LaurentPoly::sigma(m)) * RatFun(sigma_bar(n)) *
                 (self - correction);
  return value.to_laurent();
}

namespace {

// s_k = <C_0, C_k>^t via the recurrence; rim = self form (with the "-1"
// rim correction) or cross form (no correction).
std::vector<LaurentPoly> apex_values(const LaurentPoly& rim, bool same_component,
                                     long upto) {
  std::vector<LaurentPoly> s;
  s.reserve(static_cast<std::size_t>(upto) + 1);
  s.push_back(rim);
  if (upto >= 1) {
    LaurentPoly seed = rim;
    if (same_component) seed -= LaurentPoly::one();
    // t^-1 (1+t) seed
    s.push_back(((LaurentPoly::one() + LaurentPoly::t()) * seed).shifted(-1));
  }
  for (long k = 2; k <= upto; ++k) {
    LaurentPoly next =
        (LaurentPoly::one() + LaurentPoly::t()) * s[k - 1] - s[k - 2];
    s.push_back(next.shifted(-1));
  }
  return s;
}

}  // namespace

LaurentPoly same_component_recurrence(const RimData& r, long m, long n) {
  check_distances(m, n);
  std::vector<LaurentPoly> s =
      apex_values(r.self_form(), true, std::max(m, n));
  if (m <= n) return LaurentPoly::sigma(m) * s[n];
  // Hermitian transport: <C_m, C_n> = bar <C_n, C_m>.
  return (LaurentPoly::sigma(n) * s[m]).bar();
}

LaurentPoly cross_component_recurrence(const RimData& r, long m, long n) {
  check_distances(m, n);
  if (!r.cross_form())
    fail(ErrorCode::MissingCrossForm,
         "no cross-component rim pairing was supplied");
  std::vector<LaurentPoly> s = apex_values(*r.cross_form(), false, n);
  return LaurentPoly::sigma(m) * s[n];
}

std::vector<SymTriangle> component_triangles(int depth) {
  if (depth < 0)
    fail(ErrorCode::InvalidArgument, "triangle depth must be nonnegative");
  std::vector<SymTriangle> out;
  for (int n = 0; n < depth; ++n) {
    SymTriangle tr;
    tr.x = SymObject{n, -1};
    tr.y.push_back(SymObject{n + 1, -1});
    if (n >= 1) tr.y.push_back(SymObject{n - 1, 0});
    tr.z = SymObject{n, 0};
    out.push_back(std::move(tr));
  }
  return out;
}

Int endo_constant_term(const RimData& r, long m) {
  if (m < 0) fail(ErrorCode::InvalidArgument, "distance must be nonnegative");
  Int total = -2 * Int(m);
  for (long j = -m; j <= m; ++j)
    total += Int(m + 1 - std::abs(j)) * r.a(j);
  return total;
}

BrickScan brick_strip_scan(const RimData& r, long max_m) {
  if (max_m < 0)
    fail(ErrorCode::InvalidArgument, "scan bound must be nonnegative");
  BrickScan scan;
  scan.simple_projective_stalk = r.a(0) == 1;
  scan.rim_consistent = r.a(1) == 0;
  bool vanish_so_far = true;
  for (long m = 0; m <= max_m; ++m) {
    if (m > 0 && r.a(m) != 0) vanish_so_far = false;
    BrickRow row;
    row.m = m;
    row.endo_dim = endo_constant_term(r, m);
    row.dim2 = (r.a(0) == 2) && vanish_so_far;
    scan.rows.push_back(std::move(row));
  }
  return scan;
}

}  // namespace greenform
