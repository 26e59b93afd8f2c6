#include "tform.hpp"

#include <sstream>

#include "errors.hpp"

namespace greenform {

namespace {

bool coeff_zero(const TElement::Coeff& c) {
  if (std::holds_alternative<RatFun>(c))
    return std::get<RatFun>(c).is_zero();
  for (const Int& v : std::get<TElement::CyclicVec>(c))
    if (v != 0) return false;
  return true;
}

LaurentPoly lift_cyclic(const TElement::CyclicVec& v) {
  LaurentPoly p;
  for (std::size_t i = 0; i < v.size(); ++i)
    p += LaurentPoly::term(v[i], static_cast<long>(i));
  return p;
}

RatFun lift_coeff(const TElement::Coeff& c) {
  if (std::holds_alternative<RatFun>(c)) return std::get<RatFun>(c);
  return RatFun(lift_cyclic(std::get<TElement::CyclicVec>(c)));
}

TElement::CyclicVec bar_cyclic(const TElement::CyclicVec& v) {
  TElement::CyclicVec out(v.size(), Int(0));
  long n = static_cast<long>(v.size());
  for (long i = 0; i < n; ++i) out[((-i % n) + n) % n] = v[i];
  return out;
}

void require_hyp42(const CategoryPresentation& p) {
  if (!p.hypothesis42())
    fail(ErrorCode::Hypothesis42Required,
         "hypothesis 4.2 required: the t-form is not defined on presentation '" +
             p.name() + "'");
}

}  // namespace

bool TElement::is_polynomial() const {
  for (const auto& [orbit, c] : coeffs_)
    if (std::holds_alternative<RatFun>(c) &&
        !std::get<RatFun>(c).is_polynomial())
      return false;
  return true;
}

bool TElement::operator==(const TElement& o) const {
  return coeffs_ == o.coeffs_;
}

std::string TElement::str(const CategoryPresentation& p) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [orbit, c] : coeffs_) {
    if (!first) os << " + ";
    first = false;
    if (std::holds_alternative<RatFun>(c)) {
      os << '(' << std::get<RatFun>(c).str() << ')';
    } else {
      // Finite-orbit coefficient, read mod t^n - 1.
      os << '(' << lift_cyclic(std::get<CyclicVec>(c)).str() << ')';
    }
    os << ' ' << p.orbit(orbit).name;
  }
  return os.str();
}

void TElement::accumulate(const CategoryPresentation&, int orbit,
                          const Coeff& c, bool negate) {
  auto it = coeffs_.find(orbit);
  if (it == coeffs_.end()) {
    Coeff v = c;
    if (negate) {
      if (std::holds_alternative<RatFun>(v)) {
        v = -std::get<RatFun>(v);
      } else {
        for (Int& x : std::get<CyclicVec>(v)) x = -x;
      }
    }
    if (!coeff_zero(v)) coeffs_.emplace(orbit, std::move(v));
    return;
  }
  if (std::holds_alternative<RatFun>(it->second)) {
    RatFun& dst = std::get<RatFun>(it->second);
    const RatFun& src = std::get<RatFun>(c);
    if (negate)
      dst -= src;
    else
      dst += src;
  } else {
    CyclicVec& dst = std::get<CyclicVec>(it->second);
    const CyclicVec& src = std::get<CyclicVec>(c);
    for (std::size_t i = 0; i < dst.size(); ++i)
      dst[i] += negate ? -src[i] : src[i];
  }
  if (coeff_zero(it->second)) coeffs_.erase(it);
}

TElement t_object(const CategoryPresentation& p, const ObjectRef& r0) {
  ObjectRef r = p.canonical(r0);
  TElement e;
  const OrbitDecl& o = p.orbit(r.orbit);
  if (o.infinite()) {
    e.coeffs_[r.orbit] = RatFun(LaurentPoly::term(1, r.shift));
  } else {
    TElement::CyclicVec v(static_cast<std::size_t>(o.period), Int(0));
    v[static_cast<std::size_t>(r.shift)] = 1;
    e.coeffs_[r.orbit] = std::move(v);
  }
  return e;
}

TElement t_add(const CategoryPresentation& p, TElement a, const TElement& b) {
  for (const auto& [orbit, c] : b.coeffs_) a.accumulate(p, orbit, c, false);
  return a;
}

TElement t_sub(const CategoryPresentation& p, TElement a, const TElement& b) {
  for (const auto& [orbit, c] : b.coeffs_) a.accumulate(p, orbit, c, true);
  return a;
}

TElement t_scale(const CategoryPresentation&, const RatFun& c,
                 const TElement& x) {
  TElement out;
  for (const auto& [orbit, coeff] : x.coeffs_) {
    if (std::holds_alternative<RatFun>(coeff)) {
      RatFun v = c * std::get<RatFun>(coeff);
      if (!v.is_zero()) out.coeffs_[orbit] = std::move(v);
    } else {
      // Torsion coefficients only admit polynomial scalars.
      if (!c.is_polynomial())
        fail(ErrorCode::InvalidArgument,
             "cannot scale a finite-orbit coefficient by a non-polynomial "
             "scalar");
      const TElement::CyclicVec& v = std::get<TElement::CyclicVec>(coeff);
      long n = static_cast<long>(v.size());
      LaurentPoly prod = c.to_laurent() * lift_cyclic(v);
      TElement::CyclicVec reduced = prod.cyclic_reduce(n);
      TElement::Coeff packed = std::move(reduced);
      if (!coeff_zero(packed)) out.coeffs_[orbit] = std::move(packed);
    }
  }
  return out;
}

RatFun t_form(const CategoryPresentation& p, const TElement& x,
              const TElement& y) {
  require_hyp42(p);
  RatFun total;
  for (const auto& [oa, ca] : x.coeffs()) {
    RatFun a = lift_coeff(ca);
    for (const auto& [ob, cb] : y.coeffs()) {
      const LaurentPoly& h = p.hom_poly(oa, ob);
      if (h.is_zero()) continue;
      RatFun b_bar = std::holds_alternative<RatFun>(cb)
                         ? std::get<RatFun>(cb).bar()
                         : RatFun(lift_cyclic(
                               bar_cyclic(std::get<TElement::CyclicVec>(cb))));
      total += a * b_bar * RatFun(h);
    }
  }
  return total;
}

TElement z_hat_t(const CategoryPresentation& p, const ARTriangle& tr) {
  TElement e = t_add(p, t_object(p, tr.z), t_object(p, tr.x));
  for (const auto& y : tr.y) e = t_sub(p, e, t_object(p, y));
  return e;
}

TElement dual_element(const CategoryPresentation& p, const ARTriangle& tr) {
  require_hyp42(p);
  // Scaling by 1/(1 + t^-1) makes the right pairing divide by (1+t) under
  // the semilinear rule, and the left pairing divide by (1+t^-1) directly.
  RatFun scale(LaurentPoly::one(),
               LaurentPoly::one() + LaurentPoly::term(1, -1));
  return t_scale(p, scale, z_hat_t(p, tr));
}

DualityReport verify_duality(const CategoryPresentation& p,
                             const ARTriangle& tr) {
  require_hyp42(p);
  DualityReport report;
  TElement zh = z_hat_t(p, tr);
  ObjectRef z = p.canonical(tr.z);
  ObjectRef x = p.canonical(tr.x);
  RatFun one_plus_t(LaurentPoly::one() + LaurentPoly::t());

  auto complain = [&](const std::string& what, const RatFun& got,
                      const RatFun& expected) {
    std::ostringstream os;
    os << "duality violation: " << what << " = " << got.str() << ", expected "
       << expected.str();
    report.violations.push_back(os.str());
  };

  for (int orbit = 0; orbit < p.orbit_count(); ++orbit) {
    TElement m = t_object(p, ObjectRef{orbit, 0});
    RatFun right = t_form(p, m, zh);
    if (orbit == z.orbit) {
      RatFun at_z = t_form(p, t_object(p, z), zh);
      if (at_z != one_plus_t)
        complain("<" + p.ref_str(z) + ", z_hat>", at_z, one_plus_t);
    } else if (!right.is_zero()) {
      complain("<" + p.orbit(orbit).name + ", z_hat>", right, RatFun());
    }
    RatFun left = t_form(p, zh, m);
    if (orbit == x.orbit) {
      // The contravariant pairing is supported on X and X[1], with
      // <z_hat, X> = 1 + t (so <z_hat, X[1]> = 1 + t^-1).
      RatFun at_x = t_form(p, zh, t_object(p, x));
      if (at_x != one_plus_t)
        complain("<z_hat, " + p.ref_str(x) + ">", at_x, one_plus_t);
    } else if (!left.is_zero()) {
      complain("<z_hat, " + p.orbit(orbit).name + ">", left, RatFun());
    }
  }
  return report;
}

HermitianReport hermitian_check(const CategoryPresentation& p) {
  return HermitianReport{hermitian_failures(p)};
}

Int euler_specialization(const CategoryPresentation& p, const TElement& x,
                         const TElement& y) {
  return t_form(p, x, y).to_laurent().eval_minus_one();
}

OrbitStructure orbit_structure(const CategoryPresentation& p) {
  OrbitStructure out;
  for (int i = 0; i < p.orbit_count(); ++i) {
    const OrbitDecl& o = p.orbit(i);
    std::ostringstream os;
    if (o.infinite()) {
      os << o.name << ": free of rank 1 over Z[t,t^-1]";
      ++out.qt_dimension;
    } else {
      os << o.name << ": torsion Z[t,t^-1]/(t^" << o.period << " - 1)";
    }
    out.lines.push_back(os.str());
  }
  return out;
}

}  // namespace greenform
