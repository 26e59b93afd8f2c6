#pragma once

#include <vector>

#include "laurent.hpp"

namespace greenform {

// Dense matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), e_(rows * cols, Int(0)) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Int& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
  const Int& at(std::size_t i, std::size_t j) const {
    return e_[i * cols_ + j];
  }

  IntMatrix transpose() const;
  std::vector<Int> apply(const std::vector<Int>& v) const;
  bool operator==(const IntMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
  }

 private:
  std::size_t rows_, cols_;
  std::vector<Int> e_;
};

// Basis of the saturated integer kernel {v : Mv = 0}, i.e. every integer
// vector of the rational nullspace is an integer combination of the basis.
// Returned in row Hermite normal form, so the output is deterministic and
// two kernels agree iff the returned bases are identical.
std::vector<std::vector<Int>> integer_nullspace(const IntMatrix& m);

// Row Hermite normal form of the lattice spanned by the given vectors
// (positive pivots, entries above each pivot reduced into [0, pivot)).
std::vector<std::vector<Int>> lattice_normal_form(
    std::vector<std::vector<Int>> rows);

bool lattice_contains(const std::vector<std::vector<Int>>& normal_form,
                      std::vector<Int> v);

bool lattice_equal(const std::vector<std::vector<Int>>& a,
                   const std::vector<std::vector<Int>>& b);

}  // namespace greenform
