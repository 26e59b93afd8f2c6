#pragma once

#include <map>
#include <string>
#include <vector>

#include "category.hpp"
#include "intmatrix.hpp"

namespace greenform {

// Element of the free abelian group on isomorphism classes of indecomposable
// objects. Keys are canonical object references; no zero coefficients.
class GreenElement {
 public:
  GreenElement() = default;
  static GreenElement basis(const CategoryPresentation& p, const ObjectRef& r);

  void add(const CategoryPresentation& p, const ObjectRef& r, const Int& c);
  const std::map<ObjectRef, Int>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  GreenElement& operator+=(const GreenElement& o);
  GreenElement& operator-=(const GreenElement& o);
  bool operator==(const GreenElement& o) const { return terms_ == o.terms_; }

  // Coordinates in the enumeration order of p (finite presentations only).
  std::vector<Int> coordinates(const CategoryPresentation& p) const;

  std::string str(const CategoryPresentation& p) const;

 private:
  std::map<ObjectRef, Int> terms_;
};

// Bilinear extension of hom_dim.
Int form(const CategoryPresentation& p, const GreenElement& x,
         const GreenElement& y);

// Matrix of the form over the enumerated objects.
IntMatrix gram_matrix(const CategoryPresentation& p);

// [Z] + [X] - sum of [Y] over the middle-term summands.
GreenElement z_hat(const CategoryPresentation& p, const ARTriangle& tr);

struct OrthogonalityReport {
  std::vector<std::string> mismatches;
  long checks = 0;
  long branch_distinct_shift = 0;  // Z not isomorphic to Z[1]
  long branch_shift_fixed = 0;     // Z isomorphic to Z[1]
  bool ok() const { return mismatches.empty(); }
};

// For every listed AR triangle and every object W, checks that <W, z_hat>
// equals 1 at W = Z and Z[-1] (or 2 at W = Z when Z = Z[1]) and vanishes
// elsewhere.
OrthogonalityReport verify_ar_orthogonality(const CategoryPresentation& p);

// One alternating-sum kernel element per even-period orbit, starting at the
// declared representative: [M] - [M[1]] + [M[2]] - ...
std::vector<GreenElement> kernel_closed_form(const CategoryPresentation& p);

struct KernelBases {
  std::vector<std::vector<Int>> left;   // saturated kernel of the transpose
  std::vector<std::vector<Int>> right;  // saturated kernel of the Gram matrix
};

KernelBases kernel_bruteforce(const CategoryPresentation& p);

// Lattice spanned by the closed-form elements, in coordinates.
std::vector<std::vector<Int>> kernel_closed_form_lattice(
    const CategoryPresentation& p);

}  // namespace greenform
