#pragma once

#include <vector>

#include "category.hpp"
#include "ratlinalg.hpp"

namespace greenform {

// Element a + b x of the dual numbers k[x]/(x^2) over exact rationals.
struct DualNum {
  Rat one;
  Rat x;
  bool is_zero() const { return one == 0 && x == 0; }
};

DualNum operator+(const DualNum& a, const DualNum& b);
DualNum operator*(const DualNum& a, const DualNum& b);

// Matrix over the dual numbers, row-major.
struct LambdaMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<DualNum> e;

  LambdaMatrix() = default;
  LambdaMatrix(int r, int c) : rows(r), cols(c), e(r * c) {}
  DualNum& at(int i, int j) { return e[i * cols + j]; }
  const DualNum& at(int i, int j) const { return e[i * cols + j]; }
};

LambdaMatrix multiply(const LambdaMatrix& a, const LambdaMatrix& b);

// Bounded complex of free modules over the dual numbers; differentials raise
// the degree by one and satisfy d.d = 0 (checked on construction helpers).
struct PerfectComplex {
  long min_deg = 0;
  std::vector<int> ranks;            // rank at degree min_deg + k
  std::vector<LambdaMatrix> diffs;   // diffs[k] : C^(min_deg+k) -> next degree

  int rank_at(long deg) const;
  const LambdaMatrix* diff_at(long deg) const;  // nullptr = zero map
  void check_valid() const;                     // shape and d.d = 0
};

PerfectComplex stalk_projective(long deg);
// P -> P -> ... -> P with m+1 terms, differential x, degrees -m..0.
PerfectComplex x_chain(int m);

// dim over the ground field of chain maps c -> d[i] modulo homotopy, by
// flattening the Lambda-linear conditions to rational linear systems.
long hom_complex_dim(const PerfectComplex& c, const PerfectComplex& d, long i);

// Stable module category of k[X]/(X^n): objects V_1..V_(n-1), shift inverse
// syzygy, hom dimensions by brute-force kernels/images over Q, AR triangles
// V_i -> V_(i-1) + V_(i+1) -> V_i. Flags: hypothesis-4.2 false, serre-trivial
// true.
CategoryPresentation uniserial_category(int n);

// A ZA-infinity component of perfect complexes over the dual numbers: orbits
// C_0..C_depth with C_m the (m+1)-term x-chain, hom entries from
// hom_complex_dim over |i| <= shift_window (0 picks the default 2*depth + 4),
// AR triangles from the component layout. Throws Error(WindowTooSmall) when
// a nonzero hom is detected at the window boundary.
CategoryPresentation dual_numbers_component(int depth, long shift_window = 0);

}  // namespace greenform
