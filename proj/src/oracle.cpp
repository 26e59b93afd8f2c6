#include "oracle.hpp"

#include <map>
#include <sstream>
#include <string>

#include "errors.hpp"
#include "za.hpp"

namespace greenform {

DualNum operator+(const DualNum& a, const DualNum& b) {
  return DualNum{a.one + b.one, a.x + b.x};
}

DualNum operator*(const DualNum& a, const DualNum& b) {
  return DualNum{a.one * b.one, a.one * b.x + a.x * b.one};
}

LambdaMatrix multiply(const LambdaMatrix& a, const LambdaMatrix& b) {
  if (a.cols != b.rows) fail(ErrorCode::Internal, "Lambda matrix shape mismatch");
  LambdaMatrix out(a.rows, b.cols);
  for (int i = 0; i < a.rows; ++i)
    for (int k = 0; k < a.cols; ++k) {
      const DualNum& av = a.at(i, k);
      if (av.is_zero()) continue;
      for (int j = 0; j < b.cols; ++j)
        out.at(i, j) = out.at(i, j) + av * b.at(k, j);
    }
  return out;
}

int PerfectComplex::rank_at(long deg) const {
  long k = deg - min_deg;
  if (k < 0 || k >= static_cast<long>(ranks.size())) return 0;
  return ranks[static_cast<std::size_t>(k)];
}

const LambdaMatrix* PerfectComplex::diff_at(long deg) const {
  long k = deg - min_deg;
  if (k < 0 || k >= static_cast<long>(diffs.size())) return nullptr;
  return &diffs[static_cast<std::size_t>(k)];
}

void PerfectComplex::check_valid() const {
  if (ranks.empty()) {
    if (!diffs.empty()) fail(ErrorCode::Internal, "dangling differentials");
    return;
  }
  if (diffs.size() + 1 != ranks.size())
    fail(ErrorCode::Internal, "differential count mismatch");
  for (std::size_t k = 0; k < diffs.size(); ++k)
    if (diffs[k].rows != ranks[k + 1] || diffs[k].cols != ranks[k])
      fail(ErrorCode::Internal, "differential shape mismatch");
  for (std::size_t k = 0; k + 1 < diffs.size(); ++k) {
    LambdaMatrix sq = multiply(diffs[k + 1], diffs[k]);
    for (const DualNum& v : sq.e)
      if (!v.is_zero()) fail(ErrorCode::Internal, "d.d != 0");
  }
}

PerfectComplex stalk_projective(long deg) {
  PerfectComplex c;
  c.min_deg = deg;
  c.ranks = {1};
  c.check_valid();
  return c;
}

PerfectComplex x_chain(int m) {
  if (m < 0) fail(ErrorCode::InvalidArgument, "chain length must be nonnegative");
  PerfectComplex c;
  c.min_deg = -m;
  c.ranks.assign(static_cast<std::size_t>(m) + 1, 1);
  for (int k = 0; k < m; ++k) {
    LambdaMatrix d(1, 1);
    d.at(0, 0) = DualNum{Rat(0), Rat(1)};
    c.diffs.push_back(std::move(d));
  }
  c.check_valid();
  return c;
}

namespace {

// Variable layout for the Lambda-matrix entries of the maps f^k; each entry
// carries two rational parameters (the 1 and x parts).
struct VarLayout {
  std::map<long, int> base;  // degree -> first variable index
  std::map<long, std::pair<int, int>> shape;  // degree -> (rows, cols)
  int count = 0;

  void add(long deg, int rows, int cols) {
    base[deg] = count;
    shape[deg] = {rows, cols};
    count += 2 * rows * cols;
  }
  bool has(long deg) const { return base.count(deg) != 0; }
  int index(long deg, int r, int c, int part) const {
    auto [rows, cols] = shape.at(deg);
    (void)rows;
    return base.at(deg) + 2 * (r * cols + c) + part;
  }
};

void accumulate(std::map<int, Rat>& row, int var, const Rat& v) {
  if (v == 0) return;
  Rat& slot = row[var];
  slot += v;
  if (slot == 0) row.erase(var);
}

SparseRow to_sparse(const std::map<int, Rat>& row) {
  return SparseRow(row.begin(), row.end());
}

}  // namespace

long hom_complex_dim(const PerfectComplex& c, const PerfectComplex& d,
                     long i) {
  c.check_valid();
  d.check_valid();

  VarLayout fvars;
  for (long k = c.min_deg; k < c.min_deg + static_cast<long>(c.ranks.size());
       ++k)
    if (c.rank_at(k) > 0 && d.rank_at(k + i) > 0)
      fvars.add(k, d.rank_at(k + i), c.rank_at(k));

  // Chain-map conditions: d_D f^k = f^(k+1) d_C, componentwise at each degree
  // whose target d-degree is nonzero. Global signs do not change dimensions.
  SparseRank chain_rank;
  for (long k = c.min_deg - 1;
       k <= c.min_deg + static_cast<long>(c.ranks.size()); ++k) {
    int src = c.rank_at(k);
    int dst = d.rank_at(k + i + 1);
    if (src == 0 || dst == 0) continue;
    const LambdaMatrix* dd = d.diff_at(k + i);
    const LambdaMatrix* dc = c.diff_at(k);
    for (int r = 0; r < dst; ++r) {
      for (int s = 0; s < src; ++s) {
        std::map<int, Rat> eq_one, eq_x;
        if (dd && fvars.has(k)) {
          for (int u = 0; u < d.rank_at(k + i); ++u) {
            const DualNum& a = dd->at(r, u);
            accumulate(eq_one, fvars.index(k, u, s, 0), a.one);
            accumulate(eq_x, fvars.index(k, u, s, 0), a.x);
            accumulate(eq_x, fvars.index(k, u, s, 1), a.one);
          }
        }
        if (dc && fvars.has(k + 1)) {
          for (int u = 0; u < c.rank_at(k + 1); ++u) {
            const DualNum& a = dc->at(u, s);
            accumulate(eq_one, fvars.index(k + 1, r, u, 0), -a.one);
            accumulate(eq_x, fvars.index(k + 1, r, u, 0), -a.x);
            accumulate(eq_x, fvars.index(k + 1, r, u, 1), -a.one);
          }
        }
        chain_rank.add(to_sparse(eq_one));
        chain_rank.add(to_sparse(eq_x));
      }
    }
  }
  long chain_dim = fvars.count - chain_rank.rank();

  // Null-homotopic subspace: image of h -> d_D h + h d_C over all collections
  // of maps h^k : C^k -> D^(k+i-1).
  SparseRank boundary_rank;
  for (long k = c.min_deg; k < c.min_deg + static_cast<long>(c.ranks.size());
       ++k) {
    int src = c.rank_at(k);
    int dst = d.rank_at(k + i - 1);
    if (src == 0 || dst == 0) continue;
    const LambdaMatrix* dd = d.diff_at(k + i - 1);
    const LambdaMatrix* dc = c.diff_at(k - 1);
    for (int r = 0; r < dst; ++r) {
      for (int s = 0; s < src; ++s) {
        for (int part = 0; part < 2; ++part) {
          std::map<int, Rat> image;
          // Component d_D h^k landing in f^k.
          if (dd && fvars.has(k)) {
            for (int v = 0; v < d.rank_at(k + i); ++v) {
              const DualNum& a = dd->at(v, r);
              if (part == 0) {
                accumulate(image, fvars.index(k, v, s, 0), a.one);
                accumulate(image, fvars.index(k, v, s, 1), a.x);
              } else {
                accumulate(image, fvars.index(k, v, s, 1), a.one);
              }
            }
          }
          // Component h^k d_C landing in f^(k-1).
          if (dc && fvars.has(k - 1)) {
            for (int v = 0; v < c.rank_at(k - 1); ++v) {
              const DualNum& a = dc->at(s, v);
              if (part == 0) {
                accumulate(image, fvars.index(k - 1, r, v, 0), a.one);
                accumulate(image, fvars.index(k - 1, r, v, 1), a.x);
              } else {
                accumulate(image, fvars.index(k - 1, r, v, 1), a.one);
              }
            }
          }
          boundary_rank.add(to_sparse(image));
        }
      }
    }
  }

  long dim = chain_dim - boundary_rank.rank();
  if (dim < 0) fail(ErrorCode::Internal, "negative hom dimension");
  return dim;
}

namespace {

using RatMatrix = std::vector<std::vector<Rat>>;

RatMatrix jordan_block(int n) {
  RatMatrix m(n, std::vector<Rat>(n, Rat(0)));
  for (int r = 1; r < n; ++r) m[r][r - 1] = 1;
  return m;
}

RatMatrix mat_mul(const RatMatrix& a, const RatMatrix& b) {
  std::size_t rows = a.size(), inner = b.size(), cols = b[0].size();
  RatMatrix out(rows, std::vector<Rat>(cols, Rat(0)));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t k = 0; k < inner; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < cols; ++j) {
        if (b[k][j] == 0) continue;
        out[i][j] += a[i][k] * b[k][j];
      }
    }
  return out;
}

std::vector<Rat> mat_apply(const RatMatrix& m, const std::vector<Rat>& v) {
  std::vector<Rat> out(m.size(), Rat(0));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (m[i][j] == 0 || v[j] == 0) continue;
      out[i] += m[i][j] * v[j];
    }
  return out;
}

// dim of the space of module maps V_i -> V_j, i.e. matrices commuting with
// the nilpotent actions, by rank of the commuting constraint system.
long module_hom_dim(const RatMatrix& ni, const RatMatrix& nj) {
  int i = static_cast<int>(ni.size());
  int j = static_cast<int>(nj.size());
  auto var = [i](int p, int q) { return p * i + q; };
  SparseRank rank;
  for (int p = 0; p < j; ++p) {
    for (int q = 0; q < i; ++q) {
      std::map<int, Rat> eq;
      for (int r = 0; r < i; ++r) accumulate(eq, var(p, r), ni[r][q]);
      for (int r = 0; r < j; ++r) accumulate(eq, var(r, q), -nj[p][r]);
      rank.add(to_sparse(eq));
    }
  }
  return static_cast<long>(i) * j - rank.rank();
}

// Maps V_i -> V_j factoring through the free module: rank of the span of all
// composites (V_i -> Lambda) . (Lambda -> V_j).
long projective_span_rank(int i, int j, int n, const RatMatrix& nn,
                          const RatMatrix& nj) {
  // Maps out of the cyclic module V_i into Lambda: generator goes to any
  // w killed by X^i; kernel computed from the explicit matrix power.
  RatMatrix power(n, std::vector<Rat>(n, Rat(0)));
  for (int r = 0; r < n; ++r) power[r][r] = 1;
  for (int s = 0; s < i; ++s) power = mat_mul(nn, power);
  std::vector<std::vector<Rat>> kernel = dense_nullspace(power, n);

  SparseRank rank;
  for (const auto& w : kernel) {
    // Columns of V_i -> Lambda: images of the generator under X^q.
    std::vector<std::vector<Rat>> cols_in(static_cast<std::size_t>(i));
    cols_in[0] = w;
    for (int q = 1; q < i; ++q) cols_in[q] = mat_apply(nn, cols_in[q - 1]);
    for (int vr = 0; vr < j; ++vr) {
      // Lambda -> V_j sending 1 to the basis vector e_vr.
      std::vector<Rat> v(static_cast<std::size_t>(j), Rat(0));
      v[static_cast<std::size_t>(vr)] = 1;
      std::vector<std::vector<Rat>> lambda_img(static_cast<std::size_t>(n));
      lambda_img[0] = v;
      for (int u = 1; u < n; ++u)
        lambda_img[u] = mat_apply(nj, lambda_img[u - 1]);
      // Composite V_i -> V_j, flattened.
      std::map<int, Rat> flat;
      for (int q = 0; q < i; ++q) {
        for (int u = 0; u < n; ++u) {
          if (cols_in[q][u] == 0) continue;
          for (int p = 0; p < j; ++p) {
            if (lambda_img[u][p] == 0) continue;
            accumulate(flat, p * i + q, cols_in[q][u] * lambda_img[u][p]);
          }
        }
      }
      rank.add(to_sparse(flat));
    }
  }
  return rank.rank();
}

}  // namespace

CategoryPresentation uniserial_category(int n) {
  if (n < 2)
    fail(ErrorCode::InvalidArgument, "uniserial category requires n >= 2");

  std::vector<RatMatrix> jordan(static_cast<std::size_t>(n) + 1);
  for (int k = 1; k <= n; ++k) jordan[k] = jordan_block(k);

  auto stable_dim = [&](int i, int j) {
    long dim = module_hom_dim(jordan[i], jordan[j]) -
               projective_span_rank(i, j, n, jordan[n], jordan[j]);
    if (dim < 0) fail(ErrorCode::Internal, "negative stable hom dimension");
    return dim;
  };

  std::ostringstream name;
  name << "uniserial-" << n;
  CategoryPresentation p(name.str());
  p.set_hypothesis42(false);
  p.set_serre_trivial(true);

  // Shift orbit of V_v is {V_v, V_(n-v)}; representative the smaller index.
  std::vector<ObjectRef> ref_of(static_cast<std::size_t>(n), ObjectRef{});
  for (int r = 1; r <= n - 1; ++r) {
    int partner = n - r;
    if (r > partner) break;
    std::ostringstream orbit_name;
    if (r == partner)
      orbit_name << 'V' << r;
    else
      orbit_name << 'V' << r << 'V' << partner;
    int idx = p.add_orbit(orbit_name.str(), r == partner ? 1 : 2);
    ref_of[static_cast<std::size_t>(r)] = ObjectRef{idx, 0};
    ref_of[static_cast<std::size_t>(partner)] =
        ObjectRef{idx, r == partner ? 0 : 1};
  }

  for (int a = 0; a < p.orbit_count(); ++a) {
    int va = 0;
    for (int v = 1; v <= n - 1; ++v)
      if (ref_of[static_cast<std::size_t>(v)] == ObjectRef{a, 0}) va = v;
    for (int b = 0; b < p.orbit_count(); ++b) {
      int vb = 0;
      for (int v = 1; v <= n - 1; ++v)
        if (ref_of[static_cast<std::size_t>(v)] == ObjectRef{b, 0}) vb = v;
      long d0 = stable_dim(va, vb);
      long d1 = stable_dim(va, n - vb);  // against the shifted representative
      long g = p.pair_window(a, b);
      LaurentPoly h;
      if (g == 1) {
        if (d0 != d1)
          fail(ErrorCode::Internal,
               "stable hom dimensions are not shift-periodic");
        h = LaurentPoly(d0);
      } else {
        h = LaurentPoly(d0) + LaurentPoly::term(d1, 1);
      }
      p.set_hom(a, b, h);
    }
  }

  // AR triangles V_i -> V_(i-1) + V_(i+1) -> V_i with the zero and projective
  // end terms omitted.
  for (int z = 1; z <= n - 1; ++z) {
    ARTriangle tr;
    tr.x = ref_of[static_cast<std::size_t>(z)];
    tr.z = tr.x;
    if (z - 1 >= 1) tr.y.push_back(ref_of[static_cast<std::size_t>(z - 1)]);
    if (z + 1 <= n - 1) tr.y.push_back(ref_of[static_cast<std::size_t>(z + 1)]);
    p.add_triangle(std::move(tr));
  }
  return p;
}

CategoryPresentation dual_numbers_component(int depth, long shift_window) {
  if (depth < 0)
    fail(ErrorCode::InvalidArgument, "component depth must be nonnegative");
  long window = shift_window > 0 ? shift_window : 2L * depth + 4;

  std::vector<PerfectComplex> complexes;
  for (int m = 0; m <= depth; ++m) complexes.push_back(x_chain(m));

  std::ostringstream name;
  name << "dual-numbers-" << depth;
  CategoryPresentation p(name.str());
  p.set_hypothesis42(true);
  p.set_serre_trivial(true);
  for (int m = 0; m <= depth; ++m) {
    std::ostringstream orbit_name;
    orbit_name << 'C' << m;
    p.add_orbit(orbit_name.str(), 0);
  }

  for (int m = 0; m <= depth; ++m) {
    for (int k = 0; k <= depth; ++k) {
      LaurentPoly h;
      for (long i = -window; i <= window; ++i) {
        long dim = hom_complex_dim(complexes[static_cast<std::size_t>(m)],
                                   complexes[static_cast<std::size_t>(k)], i);
        if (dim == 0) continue;
        if (i == -window || i == window) {
          std::ostringstream os;
          os << "nonzero hom between C" << m << " and C" << k
             << " at the shift window boundary " << i
             << "; enlarge shift_window";
          fail(ErrorCode::WindowTooSmall, os.str());
        }
        h += LaurentPoly::term(dim, i);
      }
      p.set_hom(m, k, h);
    }
  }

  for (const SymTriangle& tr : component_triangles(depth)) {
    ARTriangle t;
    t.x = ObjectRef{tr.x.distance, tr.x.shift};
    t.z = ObjectRef{tr.z.distance, tr.z.shift};
    for (const SymObject& y : tr.y)
      t.y.push_back(ObjectRef{y.distance, y.shift});
    p.add_triangle(std::move(t));
  }
  return p;
}

}  // namespace greenform
