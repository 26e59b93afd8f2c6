#include "green.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <sstream>

#include "errors.hpp"

namespace greenform {

using boost::multiprecision::abs;

GreenElement GreenElement::basis(const CategoryPresentation& p,
                                 const ObjectRef& r) {
  GreenElement e;
  e.add(p, r, 1);
  return e;
}

void GreenElement::add(const CategoryPresentation& p, const ObjectRef& r,
                       const Int& c) {
  if (c == 0) return;
  ObjectRef key = p.canonical(r);
  auto [it, inserted] = terms_.emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

GreenElement& GreenElement::operator+=(const GreenElement& o) {
  for (const auto& [r, c] : o.terms_) {
    auto [it, inserted] = terms_.emplace(r, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

GreenElement& GreenElement::operator-=(const GreenElement& o) {
  for (const auto& [r, c] : o.terms_) {
    auto [it, inserted] = terms_.emplace(r, -c);
    if (!inserted) {
      it->second -= c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

std::vector<Int> GreenElement::coordinates(
    const CategoryPresentation& p) const {
  std::vector<ObjectRef> objects = p.enumerate_objects();
  std::map<ObjectRef, std::size_t> index;
  for (std::size_t i = 0; i < objects.size(); ++i) index[objects[i]] = i;
  std::vector<Int> v(objects.size(), Int(0));
  for (const auto& [r, c] : terms_) v[index.at(r)] = c;
  return v;
}

std::string GreenElement::str(const CategoryPresentation& p) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [r, c] : terms_) {
    Int mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (mag != 1) os << mag;
    os << '[' << p.ref_str(r) << ']';
  }
  return os.str();
}

Int form(const CategoryPresentation& p, const GreenElement& x,
         const GreenElement& y) {
  Int v = 0;
  for (const auto& [rx, cx] : x.terms())
    for (const auto& [ry, cy] : y.terms()) v += cx * cy * p.hom_dim(rx, ry);
  return v;
}

IntMatrix gram_matrix(const CategoryPresentation& p) {
  std::vector<ObjectRef> objects = p.enumerate_objects();
  IntMatrix g(objects.size(), objects.size());
  for (std::size_t i = 0; i < objects.size(); ++i)
    for (std::size_t j = 0; j < objects.size(); ++j)
      g.at(i, j) = p.hom_dim(objects[i], objects[j]);
  return g;
}

GreenElement z_hat(const CategoryPresentation& p, const ARTriangle& tr) {
  GreenElement e;
  e.add(p, tr.z, 1);
  e.add(p, tr.x, 1);
  for (const auto& y : tr.y) e.add(p, y, -1);
  return e;
}

OrthogonalityReport verify_ar_orthogonality(const CategoryPresentation& p) {
  OrthogonalityReport report;
  std::vector<ObjectRef> objects = p.enumerate_objects();
  for (std::size_t ti = 0; ti < p.triangles().size(); ++ti) {
    const ARTriangle& tr = p.triangles()[ti];
    GreenElement zh = z_hat(p, tr);
    ObjectRef z = p.canonical(tr.z);
    bool shift_fixed = p.orbit(z.orbit).period == 1;
    ObjectRef z_prev = p.shifted(z, -1);
    for (const ObjectRef& w : objects) {
      Int got = form(p, GreenElement::basis(p, w), zh);
      Int expected = 0;
      if (shift_fixed) {
        if (w == z) expected = 2;
        ++report.branch_shift_fixed;
      } else {
        if (w == z || w == z_prev) expected = 1;
        ++report.branch_distinct_shift;
      }
      ++report.checks;
      if (got != expected) {
        std::ostringstream os;
        os << "triangle " << ti << " (Z = " << p.ref_str(z) << "): <"
           << p.ref_str(w) << ", z_hat> = " << got << ", expected "
           << expected;
        report.mismatches.push_back(os.str());
      }
    }
  }
  return report;
}

std::vector<GreenElement> kernel_closed_form(const CategoryPresentation& p) {
  std::vector<GreenElement> out;
  for (int i = 0; i < p.orbit_count(); ++i) {
    const OrbitDecl& o = p.orbit(i);
    if (o.infinite())
      fail(ErrorCode::InfiniteOrbit,
           "orbit '" + o.name + "' is infinite; closed-form kernel needs finite orbits");
    if (o.period % 2 != 0) continue;
    GreenElement e;
    for (long s = 0; s < o.period; ++s)
      e.add(p, ObjectRef{i, s}, (s % 2 == 0) ? 1 : -1);
    out.push_back(std::move(e));
  }
  return out;
}

KernelBases kernel_bruteforce(const CategoryPresentation& p) {
  IntMatrix g = gram_matrix(p);
  KernelBases k;
  k.right = integer_nullspace(g);
  k.left = integer_nullspace(g.transpose());
  return k;
}

std::vector<std::vector<Int>> kernel_closed_form_lattice(
    const CategoryPresentation& p) {
  std::vector<std::vector<Int>> rows;
  for (const GreenElement& e : kernel_closed_form(p))
    rows.push_back(e.coordinates(p));
  return lattice_normal_form(std::move(rows));
}

}  // namespace greenform
