#include "intmatrix.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>

#include "errors.hpp"

namespace greenform {

using boost::multiprecision::abs;
using boost::multiprecision::gcd;

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

std::vector<Int> IntMatrix::apply(const std::vector<Int>& v) const {
  if (v.size() != cols_)
    fail(ErrorCode::InvalidArgument, "matrix/vector size mismatch");
  std::vector<Int> out(rows_, Int(0));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out[i] += at(i, j) * v[j];
  return out;
}

namespace {

Int floordiv(const Int& a, const Int& b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

std::vector<std::vector<Int>> integer_nullspace(const IntMatrix& m) {
  const std::size_t r = m.rows(), c = m.cols();
  IntMatrix a = m;
  // Unimodular column operations tracked in u; kernel columns of a stay the
  // columns of u, which makes the resulting lattice saturated.
  IntMatrix u(c, c);
  for (std::size_t j = 0; j < c; ++j) u.at(j, j) = 1;

  auto add_col = [&](std::size_t dst, std::size_t src, const Int& q) {
    for (std::size_t i = 0; i < r; ++i) a.at(i, dst) -= q * a.at(i, src);
    for (std::size_t i = 0; i < c; ++i) u.at(i, dst) -= q * u.at(i, src);
  };
  auto swap_col = [&](std::size_t x, std::size_t y) {
    if (x == y) return;
    for (std::size_t i = 0; i < r; ++i) std::swap(a.at(i, x), a.at(i, y));
    for (std::size_t i = 0; i < c; ++i) std::swap(u.at(i, x), u.at(i, y));
  };

  std::size_t fixed = 0;
  for (std::size_t row = 0; row < r && fixed < c; ++row) {
    while (true) {
      std::size_t best = c;
      for (std::size_t j = fixed; j < c; ++j)
        if (a.at(row, j) != 0 &&
            (best == c || abs(a.at(row, j)) < abs(a.at(row, best))))
          best = j;
      if (best == c) break;  // row already zero on the free columns
      bool reduced_all = true;
      for (std::size_t j = fixed; j < c; ++j) {
        if (j == best || a.at(row, j) == 0) continue;
        add_col(j, best, a.at(row, j) / a.at(row, best));
        if (a.at(row, j) != 0) reduced_all = false;
      }
      if (reduced_all) {
        swap_col(fixed, best);
        ++fixed;
        break;
      }
    }
  }

  std::vector<std::vector<Int>> basis;
  for (std::size_t j = fixed; j < c; ++j) {
    std::vector<Int> v(c);
    for (std::size_t i = 0; i < c; ++i) v[i] = u.at(i, j);
    basis.push_back(std::move(v));
  }
  return lattice_normal_form(std::move(basis));
}

std::vector<std::vector<Int>> lattice_normal_form(
    std::vector<std::vector<Int>> rows) {
  std::vector<std::vector<Int>> pivots;  // kept sorted by leading column

  auto leading = [](const std::vector<Int>& v) {
    for (std::size_t i = 0; i < v.size(); ++i)
      if (v[i] != 0) return i;
    return v.size();
  };

  for (auto row : rows) {
    while (true) {
      std::size_t lead = leading(row);
      if (lead == row.size()) break;
      auto it = std::find_if(pivots.begin(), pivots.end(),
                             [&](const std::vector<Int>& p) {
                               return leading(p) >= lead;
                             });
      if (it == pivots.end() || leading(*it) > lead) {
        if (row[lead] < 0)
          for (auto& x : row) x = -x;
        pivots.insert(it, row);
        break;
      }
      // Combine so the pivot gains gcd lead and the row loses its lead.
      std::vector<Int>& p = *it;
      Int a = p[lead], b = row[lead];
      Int g = gcd(abs(a), abs(b));
      // Extended gcd on (a, b).
      Int x0 = 1, x1 = 0, y0 = 0, y1 = 1, r0 = a, r1 = b;
      while (r1 != 0) {
        Int q = r0 / r1;
        Int r2 = r0 - q * r1;
        Int x2 = x0 - q * x1, y2 = y0 - q * y1;
        r0 = r1; r1 = r2; x0 = x1; x1 = x2; y0 = y1; y1 = y2;
      }
      if (r0 < 0) { r0 = -r0; x0 = -x0; y0 = -y0; }
      std::vector<Int> combined(row.size()), remainder(row.size());
      for (std::size_t i = 0; i < row.size(); ++i) {
        combined[i] = x0 * p[i] + y0 * row[i];
        remainder[i] = (a / g) * row[i] - (b / g) * p[i];
      }
      p = std::move(combined);
      row = std::move(remainder);
    }
  }

  // Reduce entries above each pivot into [0, pivot).
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    for (std::size_t j = i + 1; j < pivots.size(); ++j) {
      std::size_t col = leading(pivots[j]);
      Int q = floordiv(pivots[i][col], pivots[j][col]);
      if (q == 0) continue;
      for (std::size_t k = 0; k < pivots[i].size(); ++k)
        pivots[i][k] -= q * pivots[j][k];
    }
  }
  return pivots;
}

bool lattice_contains(const std::vector<std::vector<Int>>& normal_form,
                      std::vector<Int> v) {
  for (const auto& p : normal_form) {
    std::size_t lead = 0;
    while (lead < p.size() && p[lead] == 0) ++lead;
    if (v[lead] == 0) continue;
    if (v[lead] % p[lead] != 0) return false;
    Int q = v[lead] / p[lead];
    for (std::size_t k = 0; k < v.size(); ++k) v[k] -= q * p[k];
  }
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

bool lattice_equal(const std::vector<std::vector<Int>>& a,
                   const std::vector<std::vector<Int>>& b) {
  return lattice_normal_form(a) == lattice_normal_form(b);
}

}  // namespace greenform
