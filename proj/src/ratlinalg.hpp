#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <utility>
#include <vector>

namespace greenform {

using Rat = boost::multiprecision::cpp_rational;

// Row of a sparse matrix over Q: (column, value) pairs sorted by column,
// values nonzero.
using SparseRow = std::vector<std::pair<int, Rat>>;

// Incremental rank computation by row elimination.
class SparseRank {
 public:
  // Returns true when the row was independent of the rows added so far.
  bool add(SparseRow row);
  int rank() const { return rank_; }

 private:
  std::map<int, SparseRow> pivots_;  // leading column -> row with lead 1
  int rank_ = 0;
};

// Basis of {v : M v = 0} over Q for a small dense matrix (rows x cols).
std::vector<std::vector<Rat>> dense_nullspace(std::vector<std::vector<Rat>> m,
                                              std::size_t cols);

}  // namespace greenform
